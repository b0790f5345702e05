"""Bibliographic export table and change/term statistics with file output.

The export table has a fixed column order; multiple authors join with
``|``; every field is plain text and empty when unavailable. All outputs
are deterministic functions of their inputs.
"""

from __future__ import annotations

import csv
import re
from collections import Counter
from dataclasses import dataclass, fields
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Mapping

from .biblio import VenueMatch
from .sheets import ReadingSheet
from .store import WikiPage

BIB_FIELDS = (
    "title",
    "author",
    "year",
    "conference",
    "core",
    "journal",
    "scimago_h_index",
    "institution",
    "publisher",
    "review",
)

COUNT_DIMENSIONS = ("author", "conference", "journal", "year")

TermFreq = list[tuple[str, int]]


@dataclass
class BibRecord:
    title: str = ""
    author: str = ""  # display names, |-joined
    year: str = ""
    conference: str = ""
    core: str = ""
    journal: str = ""
    scimago_h_index: str = ""
    institution: str = ""
    publisher: str = ""
    review: str = ""

    def as_row(self) -> list[str]:
        return [getattr(self, name) for name in BIB_FIELDS]


assert tuple(f.name for f in fields(BibRecord)) == BIB_FIELDS


@dataclass
class TimeSeries:
    bucket: str  # calendar month, "YYYY-MM", UTC
    count: int
    cumulative: int


def _display(display_names: Mapping[str, str], page_id: str | None) -> str:
    """Display text for an entity page id; falls back to the last segment."""
    if not page_id:
        return ""
    name = display_names.get(page_id, "")
    return name if name else page_id.rsplit(":", 1)[-1]


def build_bib_table(
    sheets: Iterable[ReadingSheet],
    matches: Mapping[str, VenueMatch],
    display_names: Mapping[str, str],
) -> list[BibRecord]:
    """One record per reading sheet, all statuses, sorted by page id.

    An accepted venue match fills the conference/journal column with the
    registry's canonical name plus the rank or h-index; otherwise the
    extracted name stands and the rank column stays empty. The review
    column carries the summary only for reviewed sheets.
    """
    records = []
    for sheet in sorted(sheets, key=lambda s: s.page_id):
        record = BibRecord(
            title=sheet.title,
            author="|".join(_display(display_names, author) for author in sheet.authors),
            year=_display(display_names, sheet.year),
            institution=_display(display_names, sheet.institution),
            publisher=_display(display_names, sheet.publisher),
            review=(sheet.summary or "") if sheet.status == "reviewed" else "",
        )
        match = matches.get(sheet.page_id)
        if sheet.venue_kind == "conference":
            if match is not None and match.accepted and match.matched_entry is not None:
                record.conference = match.matched_entry.name
                record.core = str(match.matched_entry.value)
            elif match is not None:
                record.conference = match.extracted_name
            else:
                record.conference = sheet.venue_label or _display(display_names, sheet.venue)
        elif sheet.venue_kind == "journal":
            if match is not None and match.accepted and match.matched_entry is not None:
                record.journal = match.matched_entry.name
                record.scimago_h_index = str(match.matched_entry.value)
            elif match is not None:
                record.journal = match.extracted_name
            else:
                record.journal = sheet.venue_label or _display(display_names, sheet.venue)
        records.append(record)
    return records


def _month_of(timestamp: int) -> str:
    return datetime.fromtimestamp(timestamp, tz=timezone.utc).strftime("%Y-%m")


def _month_span(first: str, last: str) -> list[str]:
    year, month = (int(part) for part in first.split("-"))
    stop = tuple(int(part) for part in last.split("-"))
    months = []
    while (year, month) <= stop:
        months.append(f"{year:04d}-{month:02d}")
        month += 1
        if month == 13:
            month = 1
            year += 1
    return months


def changes_over_time(
    pages: Iterable[WikiPage],
    namespace: str,
    start: str | None = None,
    end: str | None = None,
) -> list[TimeSeries]:
    """Monthly revision counts (UTC) for pages under a namespace prefix.

    Empty months inside the observed span are emitted with count 0; the
    optional start/end clamp the span to a "YYYY-MM" range.
    """
    counts: Counter[str] = Counter()
    for page in pages:
        if page.id != namespace and not page.id.startswith(namespace + ":"):
            continue
        for revision in page.revisions:
            counts[_month_of(revision.timestamp)] += 1
    if not counts:
        return []
    first, last = min(counts), max(counts)
    if start is not None:
        first = max(first, start)
    if end is not None:
        last = min(last, end)
    series: list[TimeSeries] = []
    cumulative = 0
    for month in _month_span(first, last):
        count = counts.get(month, 0)
        cumulative += count
        series.append(TimeSeries(bucket=month, count=count, cumulative=cumulative))
    return series


def term_frequency(sheets: Iterable[ReadingSheet]) -> TermFreq:
    """Raw term distribution over all summaries and note bodies.

    Tokens are maximal lowercase alphanumeric runs; no stop words are
    removed. Sorted by frequency descending, then term ascending.
    """
    counts: Counter[str] = Counter()
    for sheet in sorted(sheets, key=lambda s: s.page_id):
        texts = [sheet.summary or ""]
        texts.extend(text for _, text in sheet.notes)
        for text in texts:
            counts.update(re.findall(r"[a-z0-9]+", text.lower()))
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))


def count_by(records: Iterable[BibRecord], dimension: str) -> list[tuple[str, int]]:
    """Histogram of a record field; authors count once per listed author."""
    if dimension not in COUNT_DIMENSIONS:
        raise ValueError(f"unknown dimension {dimension!r}")
    counts: Counter[str] = Counter()
    for record in records:
        value = getattr(record, dimension)
        if not value:
            continue
        if dimension == "author":
            counts.update(name for name in value.split("|") if name)
        else:
            counts[value] += 1
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))


def write_bib_csv(records: Iterable[BibRecord], path: Path) -> None:
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(BIB_FIELDS)
        for record in records:
            writer.writerow(record.as_row())


def _write_csv(path: Path, header: list[str], rows: Iterable[Iterable]) -> None:
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def write_outputs(
    records: list[BibRecord],
    series: list[TimeSeries],
    termfreq: TermFreq,
    histograms: Mapping[str, list[tuple[str, int]]],
    output_dir: Path | str,
    namespace: str = "phd:bibliography",
) -> list[Path]:
    """Write the full output file set; clean up on partial failure.

    Fixed set, in return order: bibliography.csv, the changes plot and its
    series CSV, the term-frequency plot and its series CSV, and one
    counts-by CSV per dimension.
    """
    from . import charts

    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    ns_slug = namespace.replace(":", "-")
    written: list[Path] = []
    try:
        path = out / "bibliography.csv"
        write_bib_csv(records, path)
        written.append(path)

        path = out / f"changes-{ns_slug}.svg"
        path.write_bytes(charts.render_changes_svg(series, namespace))
        written.append(path)

        path = out / f"changes-{ns_slug}.csv"
        _write_csv(path, ["bucket", "count", "cumulative"],
                   ([p.bucket, p.count, p.cumulative] for p in series))
        written.append(path)

        path = out / "term-frequency.svg"
        path.write_bytes(charts.render_term_frequency_svg(termfreq))
        written.append(path)

        path = out / "term-frequency.csv"
        _write_csv(path, ["rank", "term", "frequency"],
                   ([rank, term, freq] for rank, (term, freq) in enumerate(termfreq, start=1)))
        written.append(path)

        for dimension in COUNT_DIMENSIONS:
            path = out / f"counts-by-{dimension}.csv"
            _write_csv(path, [dimension, "count"], histograms.get(dimension, []))
            written.append(path)
    except Exception:
        for path in written:
            path.unlink(missing_ok=True)
        raise
    return written
