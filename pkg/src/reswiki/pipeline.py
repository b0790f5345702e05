"""End-to-end orchestration from a wiki tree to graph, sheets, and matches.

Per-page parsing is pure, so it may run on any number of workers; results
merge in page-id order, making every downstream artifact independent of
the schedule.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .biblio import VenueMatch, VenueRegistry, normalize_venue
from .diagnostics import Diagnostic
from .graph import LinkGraph, build_graph
from .markup import Block, InternalLink, parse_page, extract_links
from .sheets import (
    PageKind,
    SheetSet,
    classify_page,
    extract_collection_sheet,
    extract_experiment_sheet,
    extract_reading_sheet,
    is_experiment_root,
)
from .store import WikiPage, WikiRoot, load_wiki


@dataclass
class PageData:
    page: WikiPage
    blocks: list[Block]
    links: list[InternalLink]


@dataclass
class WikiAnalysis:
    pages: list[WikiPage]
    page_data: dict[str, PageData]
    graph: LinkGraph
    sheets: SheetSet
    display_names: dict[str, str]
    diagnostics: list[Diagnostic] = field(default_factory=list)


def ingest(
    root: WikiRoot,
    workers: int = 1,
    diagnostics: list[Diagnostic] | None = None,
) -> dict[str, PageData]:
    """Load and parse every page; result keyed by page id, id-sorted."""
    pages = load_wiki(root, diagnostics)

    def parse_one(page: WikiPage) -> PageData:
        blocks = parse_page(page.raw_text)
        return PageData(page=page, blocks=blocks, links=extract_links(blocks, page.id))

    if workers <= 1:
        parsed = [parse_one(page) for page in pages]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parsed = list(pool.map(parse_one, pages))
    return {data.page.id: data for data in parsed}


def analyze_wiki(root: WikiRoot, workers: int = 1) -> WikiAnalysis:
    """Run the full read-only pipeline: parse, link, classify, extract."""
    diagnostics: list[Diagnostic] = []
    page_data = ingest(root, workers=workers, diagnostics=diagnostics)
    links_by_page = {page_id: data.links for page_id, data in page_data.items()}
    graph = build_graph(links_by_page)

    inbound: dict[str, list[InternalLink]] = {}
    for page_id in sorted(page_data):
        for link in page_data[page_id].links:
            inbound.setdefault(link.target, []).append(link)

    all_ids = sorted(page_data)
    sheets = SheetSet()
    for page_id in all_ids:
        data = page_data[page_id]
        kind = classify_page(page_id)
        if kind == PageKind.READING_SHEET:
            sheets.reading.append(extract_reading_sheet(data.page, inbound.get(page_id, [])))
        elif kind == PageKind.COLLECTION_PAGE:
            sheets.collections.append(extract_collection_sheet(data.page))
        elif kind == PageKind.EXPERIMENT_PAGE and is_experiment_root(page_id):
            sheets.experiments.append(extract_experiment_sheet(data.page, all_ids))

    display_names: dict[str, str] = {}
    for page_id in all_ids:
        for link in page_data[page_id].links:
            if link.label and link.target not in display_names:
                display_names[link.target] = link.label

    return WikiAnalysis(
        pages=[page_data[page_id].page for page_id in all_ids],
        page_data=page_data,
        graph=graph,
        sheets=sheets,
        display_names=display_names,
        diagnostics=diagnostics,
    )


def match_sheet_venues(
    analysis: WikiAnalysis,
    core_registry: VenueRegistry,
    scimago_registry: VenueRegistry,
    threshold: float,
) -> dict[str, VenueMatch]:
    """VenueMatch per reading sheet with a venue, keyed by sheet page id."""
    matches: dict[str, VenueMatch] = {}
    for sheet in analysis.sheets.reading:
        if not sheet.venue_kind:
            continue
        raw = sheet.venue_label or analysis.display_names.get(sheet.venue or "", "")
        if not raw and sheet.venue:
            raw = sheet.venue.rsplit(":", 1)[-1]
        if not raw:
            continue
        registry = core_registry if sheet.venue_kind == "conference" else scimago_registry
        matches[sheet.page_id] = normalize_venue(raw, registry, threshold)
    return matches
