"""Page classification and extraction of the three structured sheets.

Classification is a pure function of the page id's namespace prefix.
Extraction never fails on a classified page: missing structure yields an
empty-field sheet plus diagnostics attached to it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .diagnostics import INFO, WARNING, Diagnostic
from .markup import (
    Block,
    Heading,
    InternalLink,
    ListBlock,
    Table,
    TableCell,
    TodoItem,
    Paragraph,
    parse_page,
    spans_text,
    strip_markup,
)
from .store import WikiPage

BIBLIOGRAPHY_NS = "phd:bibliography"
COLLECTIONS_NS = "phd:collections"
EXPERIMENTS_NS = "phd:experiments"
MILESTONES_NS = "phd:milestones"
RESOURCES_NS = "phd:resources"
INFOPAGES_NS = "infopages"

ENTITY_KINDS = ("author", "year", "journal", "conference", "publisher", "institution")
_STATUS_SLUGS = {"in-review", "to-review"}

# Canonical metadata row labels carried by the scaffold templates.
READING_TEMPLATE_LABELS = (
    "title",
    "authors",
    "conference",
    "journal",
    "year",
    "institution",
    "publisher",
)
COLLECTION_TEMPLATE_LABELS = ("name", "source", "paper", "date", "size")
EXPERIMENT_TEMPLATE_LABELS = (
    "id",
    "start date",
    "end date",
    "why do it?",
    "main strengths",
    "main weaknesses",
    "test collection",
)


class PageKind(enum.Enum):
    READING_SHEET = "reading-sheet"
    AUTHOR_PAGE = "author-page"
    YEAR_PAGE = "year-page"
    JOURNAL_PAGE = "journal-page"
    CONFERENCE_PAGE = "conference-page"
    PUBLISHER_PAGE = "publisher-page"
    INSTITUTION_PAGE = "institution-page"
    COLLECTION_PAGE = "collection-page"
    EXPERIMENT_PAGE = "experiment-page"
    MILESTONE_PAGE = "milestone-page"
    RESOURCE_PAGE = "resource-page"
    INFOPAGE = "infopage"
    OTHER = "other"


ENTITY_PAGE_KINDS = {
    "author": PageKind.AUTHOR_PAGE,
    "year": PageKind.YEAR_PAGE,
    "journal": PageKind.JOURNAL_PAGE,
    "conference": PageKind.CONFERENCE_PAGE,
    "publisher": PageKind.PUBLISHER_PAGE,
    "institution": PageKind.INSTITUTION_PAGE,
}


def classify_page(page_id: str) -> PageKind:
    """Map a page id to its role by namespace prefix; unknown ids are OTHER.

    Within the bibliography namespace, entity member pages (one level
    below ``author``/``year``/...) classify as entity pages; the entity
    index pages, the ``list`` namespace, and the in-review/to-review
    status pages are index machinery (OTHER); every other member page is
    a reading sheet.
    """
    segments = page_id.split(":")
    if segments[0] == INFOPAGES_NS:
        return PageKind.INFOPAGE
    if segments[:2] == ["phd", "bibliography"]:
        if len(segments) == 2:
            return PageKind.OTHER
        third = segments[2]
        if third in ENTITY_PAGE_KINDS:
            if len(segments) >= 4:
                return ENTITY_PAGE_KINDS[third]
            return PageKind.OTHER  # the entity index page itself
        if third == "list" or third in _STATUS_SLUGS:
            return PageKind.OTHER
        return PageKind.READING_SHEET
    if segments[:2] == ["phd", "collections"]:
        return PageKind.COLLECTION_PAGE if len(segments) > 2 else PageKind.OTHER
    if segments[:2] == ["phd", "experiments"]:
        return PageKind.EXPERIMENT_PAGE if len(segments) > 2 else PageKind.OTHER
    if segments[:2] == ["phd", "milestones"]:
        return PageKind.MILESTONE_PAGE if len(segments) > 2 else PageKind.OTHER
    if segments[:2] == ["phd", "resources"]:
        return PageKind.RESOURCE_PAGE if len(segments) > 2 else PageKind.OTHER
    return PageKind.OTHER


def is_experiment_root(page_id: str) -> bool:
    return (
        classify_page(page_id) == PageKind.EXPERIMENT_PAGE
        and len(page_id.split(":")) == 3
    )


@dataclass
class ReadingSheet:
    page_id: str
    title: str = ""
    authors: list[str] = field(default_factory=list)  # author page ids, table order
    year: str | None = None  # year page id
    venue: str | None = None  # venue page id
    venue_kind: str | None = None  # "conference" | "journal"
    venue_label: str | None = None  # display text of the venue link (proceedings string)
    institution: str | None = None
    publisher: str | None = None
    status: str = "listed"  # reviewed | in-review | to-review | listed
    summary: str | None = None
    notes: list[tuple[str, str]] = field(default_factory=list)  # (section heading, text)
    diagnostics: list[Diagnostic] = field(default_factory=list)


@dataclass
class CollectionSheet:
    page_id: str
    name: str = ""
    source: str = ""  # external URL, or parent page id for a subset
    source_is_page: bool = False
    paper_link: str | None = None
    date: str = ""
    size: str = ""
    stats: dict[str, str] = field(default_factory=dict)  # label order preserved
    evaluations: list[tuple[str, str, str, str]] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def is_subset(self) -> bool:
        return self.source_is_page


@dataclass
class ExperimentSheet:
    page_id: str
    label: str = ""
    start: str = ""
    end: str = ""
    motivation: str = ""
    strengths: str = ""
    weaknesses: str = ""
    test_collection: str | None = None  # collection page id
    todo: list[tuple[bool, str]] = field(default_factory=list)  # (checked, text)
    versions: list[tuple[str, str]] = field(default_factory=list)
    evaluations: list[tuple[str, str, str]] = field(default_factory=list)
    logs: list[str] = field(default_factory=list)  # page ids under the experiment
    diagnostics: list[Diagnostic] = field(default_factory=list)


@dataclass
class SheetSet:
    reading: list[ReadingSheet] = field(default_factory=list)
    collections: list[CollectionSheet] = field(default_factory=list)
    experiments: list[ExperimentSheet] = field(default_factory=list)

    def all_diagnostics(self) -> list[Diagnostic]:
        sheets = [*self.reading, *self.collections, *self.experiments]
        return [diag for sheet in sheets for diag in sheet.diagnostics]


def _first_table(blocks: list[Block]) -> Table | None:
    for block in blocks:
        if isinstance(block, Table):
            return block
    return None


def _cell_text(cell: TableCell) -> str:
    return spans_text(cell.spans).strip()


def _cell_links(cell: TableCell) -> list[tuple[str, str, bool]]:
    """(target, label, external) for every link span in a cell."""
    return [
        (span.link_target or "", span.link_label or span.text, span.external)
        for span in cell.spans
        if span.kind == "link" and span.link_target
    ]


def _meta_rows(table: Table) -> list[tuple[str, TableCell]]:
    """(lowercased trimmed label, value cell) for each two-cell row."""
    rows = []
    for row in table.rows:
        if len(row.cells) >= 2:
            rows.append((_cell_text(row.cells[0]).lower(), row.cells[1]))
    return rows


def _internal_targets(cell: TableCell) -> list[str]:
    return [target for target, _, external in _cell_links(cell) if not external]


def _derive_status(inbound: list[InternalLink]) -> str:
    """Review status from how bibliography index pages link to a sheet.

    Only links whose source is a non-sheet page in the bibliography
    namespace count. Priority on conflicting decorations follows the
    review lifecycle backwards: reviewed (bold) beats in-review beats
    to-review; anything else is merely listed.
    """
    bold = in_review = to_review = False
    for link in inbound:
        src = link.source
        if src != BIBLIOGRAPHY_NS and not src.startswith(BIBLIOGRAPHY_NS + ":"):
            continue
        if classify_page(src) == PageKind.READING_SHEET:
            continue
        bold = bold or link.bold
        in_review = in_review or link.prefix == "in-review"
        to_review = to_review or link.prefix == "to-review"
    if bold:
        return "reviewed"
    if in_review:
        return "in-review"
    if to_review:
        return "to-review"
    return "listed"


def _section_blocks(blocks: list[Block], title: str) -> list[Block]:
    """Blocks under the first heading whose text matches the given title."""
    collected: list[Block] = []
    inside = False
    for block in blocks:
        if isinstance(block, Heading):
            if inside:
                break
            inside = spans_text(block.spans).strip().lower() == title
        elif inside:
            collected.append(block)
    return collected


def extract_reading_sheet(page: WikiPage, inbound_links: list[InternalLink]) -> ReadingSheet:
    """Extract a reading sheet: metadata table, summary, notes, status.

    The first table is the metadata table, mapped by row label. The first
    paragraph between it and the next heading is the summary; each later
    heading starts a notes section. Status comes from the inbound links.
    """
    sheet = ReadingSheet(page_id=page.id)
    blocks = parse_page(page.raw_text)
    sheet.status = _derive_status(inbound_links)
    table = _first_table(blocks)
    if table is None:
        sheet.diagnostics.append(
            Diagnostic(WARNING, page.id, "R03", "reading sheet has no metadata table")
        )
        return sheet
    for label, cell in _meta_rows(table):
        targets = _internal_targets(cell)
        if label == "title":
            sheet.title = _cell_text(cell)
        elif label in ("authors", "author"):
            sheet.authors.extend(targets)
        elif label in ("conference", "journal"):
            if targets and sheet.venue_kind != "conference":
                sheet.venue = targets[0]
                sheet.venue_kind = label
                sheet.venue_label = _cell_links(cell)[0][1] or _cell_text(cell)
        elif label == "year":
            sheet.year = targets[0] if targets else None
        elif label == "institution":
            sheet.institution = targets[0] if targets else None
        elif label == "publisher":
            sheet.publisher = targets[0] if targets else None
        elif label:
            sheet.diagnostics.append(
                Diagnostic(INFO, page.id, "X02", f"unknown metadata row {label!r}")
            )
    if not sheet.authors:
        sheet.diagnostics.append(
            Diagnostic(WARNING, page.id, "R03", "metadata table has no author links")
        )
    # Summary: first paragraph after the table, before any heading.
    table_seen = False
    for block in blocks:
        if block is table:
            table_seen = True
            continue
        if not table_seen:
            continue
        if isinstance(block, Heading):
            break
        if isinstance(block, Paragraph):
            sheet.summary = spans_text(block.spans).strip()
            break
    # Notes: every heading after the table starts a section.
    section: str | None = None
    body: list[Block] = []
    table_seen = False

    def close_section() -> None:
        if section is not None:
            sheet.notes.append((section, strip_markup(body)))

    for block in blocks:
        if block is table:
            table_seen = True
            continue
        if not table_seen:
            continue
        if isinstance(block, Heading):
            close_section()
            section = spans_text(block.spans).strip()
            body = []
        elif section is not None:
            body.append(block)
    close_section()
    return sheet


def extract_collection_sheet(page: WikiPage) -> CollectionSheet:
    """Extract a collection sheet; unknown stat labels are kept verbatim."""
    sheet = CollectionSheet(page_id=page.id)
    blocks = parse_page(page.raw_text)
    table = _first_table(blocks)
    if table is None:
        sheet.diagnostics.append(
            Diagnostic(WARNING, page.id, "X01", "collection sheet has no metadata table")
        )
        return sheet
    for label, cell in _meta_rows(table):
        if label == "name":
            sheet.name = _cell_text(cell)
        elif label == "source":
            internal = _internal_targets(cell)
            if internal:
                sheet.source = internal[0]
                sheet.source_is_page = True
            else:
                links = _cell_links(cell)
                sheet.source = links[0][0] if links else _cell_text(cell)
        elif label == "paper":
            links = _cell_links(cell)
            sheet.paper_link = links[0][0] if links else (_cell_text(cell) or None)
        elif label == "date":
            sheet.date = _cell_text(cell)
        elif label == "size":
            sheet.size = _cell_text(cell)
        elif label:
            # Original-case label, preserved in row order.
            raw_label = _cell_text_original(table, label)
            sheet.stats[raw_label] = _cell_text(cell)
    if not sheet.name:
        heading = next((b for b in blocks if isinstance(b, Heading)), None)
        if heading is not None:
            sheet.name = spans_text(heading.spans).strip()
    for block in _section_blocks(blocks, "evaluations"):
        if not isinstance(block, Table):
            continue
        for row in block.rows:
            if row.header:
                continue
            cells = [_cell_text(c) for c in row.cells]
            if len(cells) == 4:
                sheet.evaluations.append((cells[0], cells[1], cells[2], cells[3]))
            else:
                sheet.diagnostics.append(
                    Diagnostic(INFO, page.id, "X01", f"unparsed evaluation row: {' | '.join(cells)}")
                )
    return sheet


def _cell_text_original(table: Table, lowered: str) -> str:
    for row in table.rows:
        if row.cells and _cell_text(row.cells[0]).lower() == lowered:
            return _cell_text(row.cells[0])
    return lowered


def extract_experiment_sheet(page: WikiPage, all_page_ids: list[str]) -> ExperimentSheet:
    """Extract an experiment sheet from a namespace-root experiment page.

    Logs are every page id strictly under the experiment's namespace,
    regardless of whether the research log section links them.
    """
    sheet = ExperimentSheet(page_id=page.id)
    prefix = page.id + ":"
    sheet.logs = sorted(pid for pid in all_page_ids if pid.startswith(prefix))
    blocks = parse_page(page.raw_text)
    table = _first_table(blocks)
    if table is None:
        sheet.diagnostics.append(
            Diagnostic(WARNING, page.id, "X01", "experiment sheet has no metadata table")
        )
    else:
        for label, cell in _meta_rows(table):
            if label == "id":
                sheet.label = _cell_text(cell)
            elif label == "start date":
                sheet.start = _cell_text(cell)
            elif label == "end date":
                sheet.end = _cell_text(cell)
            elif label == "why do it?":
                sheet.motivation = _cell_text(cell)
            elif label == "main strengths":
                sheet.strengths = _cell_text(cell)
            elif label == "main weaknesses":
                sheet.weaknesses = _cell_text(cell)
            elif label == "test collection":
                targets = _internal_targets(cell)
                sheet.test_collection = targets[0] if targets else None
            elif label:
                sheet.diagnostics.append(
                    Diagnostic(INFO, page.id, "X02", f"unknown metadata row {label!r}")
                )
    for block in blocks:
        if isinstance(block, TodoItem):
            sheet.todo.append((block.checked, spans_text(block.spans).strip()))
        elif isinstance(block, ListBlock):
            sheet.todo.extend(
                (item.checked, spans_text(item.spans).strip())
                for item in block.items
                if item.todo
            )
    for block in _section_blocks(blocks, "versions"):
        if isinstance(block, Table):
            for row in block.rows:
                if row.header or len(row.cells) < 2:
                    continue
                sheet.versions.append((_cell_text(row.cells[0]), _cell_text(row.cells[1])))
    for block in _section_blocks(blocks, "evaluations"):
        if isinstance(block, Table):
            for row in block.rows:
                if row.header or len(row.cells) < 3:
                    continue
                sheet.evaluations.append(
                    (_cell_text(row.cells[0]), _cell_text(row.cells[1]), _cell_text(row.cells[2]))
                )
    return sheet
