"""Directed internal-link graph, backlink/entity indexes, and lint rules.

Lint rule table (fixed codes):
    R01  page id is not a valid slug (error)
    R02  internal link to a nonexistent page (warning)
    R03  reading sheet metadata missing or incomplete (warning)
    R04  reviewed sheet without a summary (warning)
    R05  entity page with zero backlinks (warning)
    R06  experiment End Date earlier than Start Date (warning)
    R07  collection subset whose parent page does not exist (warning)
    R08  in-review/to-review listing inconsistent with link prefixes (warning)

Severities favor warnings: a research wiki is allowed to be messy, and
only naming-convention breakage (R01) blocks the tooling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from typing import Iterable, Mapping

from .diagnostics import ERROR, WARNING, Diagnostic, sort_key
from .markup import SLUG_RE, IN_REVIEW_PAGE_ID, TO_REVIEW_PAGE_ID, InternalLink
from .sheets import ENTITY_PAGE_KINDS, PageKind, SheetSet, classify_page
from .store import WikiPage

_PREFIX_RANK = {"none": 0, "to-review": 1, "in-review": 2}


@dataclass
class Edge:
    bold: bool = False
    prefix: str = "none"


@dataclass
class LinkGraph:
    pages: set[str] = field(default_factory=set)  # ids with an existing page file
    nodes: set[str] = field(default_factory=set)  # pages plus all link targets
    edges: dict[tuple[str, str], Edge] = field(default_factory=dict)
    dangling: set[str] = field(default_factory=set)  # targets with no page file


def build_graph(links_by_page: Mapping[str, Iterable[InternalLink]]) -> LinkGraph:
    """Fold per-page link lists into a deduplicated edge set.

    Edges are keyed on (source, target); repeated links merge bold by
    any-true and prefix by strength (in-review > to-review > none).
    """
    graph = LinkGraph(pages=set(links_by_page))
    graph.nodes = set(graph.pages)
    for source in sorted(links_by_page):
        for link in links_by_page[source]:
            graph.nodes.add(link.target)
            key = (source, link.target)
            edge = graph.edges.get(key)
            if edge is None:
                edge = Edge()
                graph.edges[key] = edge
            edge.bold = edge.bold or link.bold
            if _PREFIX_RANK[link.prefix] > _PREFIX_RANK[edge.prefix]:
                edge.prefix = link.prefix
    graph.dangling = graph.nodes - graph.pages
    return graph


def backlinks(graph: LinkGraph, page_id: str) -> list[str]:
    """Sources of edges into a page, sorted by page id."""
    return sorted(source for (source, target) in graph.edges if target == page_id)


def entity_index(graph: LinkGraph, kind: str) -> dict[str, list[str]]:
    """Map each existing entity page of a kind to its reading-sheet backlinks.

    Entities nothing links to are included with empty lists; backlinks
    from non-sheet pages are filtered out.
    """
    if kind not in ENTITY_PAGE_KINDS:
        raise ValueError(f"unknown entity kind {kind!r} (expected one of {sorted(ENTITY_PAGE_KINDS)})")
    wanted = ENTITY_PAGE_KINDS[kind]
    index: dict[str, list[str]] = {}
    for page_id in sorted(graph.pages):
        if classify_page(page_id) != wanted:
            continue
        index[page_id] = [
            source
            for source in backlinks(graph, page_id)
            if classify_page(source) == PageKind.READING_SHEET
        ]
    return index


_DATE_FORMATS = ("%Y-%m-%d %H:%M:%S", "%Y-%m-%d %H:%M", "%Y-%m-%d")


def _parse_when(text: str) -> datetime | None:
    for fmt in _DATE_FORMATS:
        try:
            return datetime.strptime(text.strip(), fmt)
        except ValueError:
            continue
    return None


def lint(pages: list[WikiPage], graph: LinkGraph, sheets: SheetSet) -> list[Diagnostic]:
    """Apply the rule table; deterministic order (page id, then rule code)."""
    diags: list[Diagnostic] = []

    for page in pages:
        for segment in page.id.split(":"):
            if not SLUG_RE.match(segment):
                diags.append(
                    Diagnostic(ERROR, page.id, "R01", f"id segment {segment!r} is not a valid slug")
                )

    for (source, target) in sorted(graph.edges):
        if target in graph.dangling:
            diags.append(
                Diagnostic(WARNING, source, "R02", f"link to nonexistent page {target}")
            )

    for sheet in sheets.reading:
        diags.extend(d for d in sheet.diagnostics if d.code == "R03")
        if sheet.status == "reviewed" and not (sheet.summary or "").strip():
            diags.append(
                Diagnostic(WARNING, sheet.page_id, "R04", "reviewed sheet has no summary")
            )

    entity_kinds = set(ENTITY_PAGE_KINDS.values())
    for page_id in sorted(graph.pages):
        kind = classify_page(page_id)
        if kind in entity_kinds and not backlinks(graph, page_id):
            diags.append(
                Diagnostic(WARNING, page_id, "R05", f"{kind.value} has no backlinks")
            )

    for experiment in sheets.experiments:
        if experiment.end.strip().lower() == "ongoing":
            continue
        start = _parse_when(experiment.start)
        end = _parse_when(experiment.end)
        if start is not None and end is not None and end < start:
            diags.append(
                Diagnostic(
                    WARNING,
                    experiment.page_id,
                    "R06",
                    f"End Date {experiment.end!r} is earlier than Start Date {experiment.start!r}",
                )
            )

    for collection in sheets.collections:
        if collection.source_is_page and collection.source not in graph.pages:
            diags.append(
                Diagnostic(
                    WARNING,
                    collection.page_id,
                    "R07",
                    f"subset parent page {collection.source} does not exist",
                )
            )

    for status_page, prefix in ((IN_REVIEW_PAGE_ID, "in-review"), (TO_REVIEW_PAGE_ID, "to-review")):
        if status_page not in graph.pages:
            continue
        listed = {
            target
            for (source, target) in graph.edges
            if source == status_page and classify_page(target) == PageKind.READING_SHEET
        }
        decorated = {
            target
            for (source, target), edge in graph.edges.items()
            if edge.prefix == prefix and classify_page(target) == PageKind.READING_SHEET
        }
        for target in sorted(decorated - listed):
            diags.append(
                Diagnostic(WARNING, status_page, "R08", f"{target} is marked {prefix} but not listed here")
            )
        for target in sorted(listed - decorated):
            diags.append(
                Diagnostic(WARNING, status_page, "R08", f"{target} is listed here but never marked {prefix}")
            )

    diags.sort(key=sort_key)
    return diags
