"""Venue normalization: registries, name heuristics, Jaccard matching.

Registries are CSV files: conference rankings use the header
``name,acronym,rank``; journal h-indexes use ``title,h_index``. Matching
tokenizes names into lowercase alphanumeric runs and picks the registry
entry with the highest Jaccard overlap, with a case-insensitive acronym
equality short-circuit scored 1.0.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from pathlib import Path

from .diagnostics import INFO, WARNING, Diagnostic
from .store import WikiError

CORE_CONFERENCE = "core-conference"
SCIMAGO_JOURNAL = "scimago-journal"
DEFAULT_THRESHOLD = 0.5

_HEADERS = {
    CORE_CONFERENCE: ["name", "acronym", "rank"],
    SCIMAGO_JOURNAL: ["title", "h_index"],
}

_TOKEN_RE = re.compile(r"[a-z0-9]+")
_PROCEEDINGS_RE = re.compile(r"^\s*proceedings\s+of(?:\s+the\b)?\s*", re.IGNORECASE)
_NUMERIC_ORDINAL_RE = re.compile(r"\b\d+(?:st|nd|rd|th)\b", re.IGNORECASE)
_SPELLED_ORDINALS = (
    "first", "second", "third", "fourth", "fifth",
    "sixth", "seventh", "eighth", "ninth", "tenth",
    "eleventh", "twelfth", "thirteenth", "fourteenth", "fifteenth",
    "sixteenth", "seventeenth", "eighteenth", "nineteenth", "twentieth",
)
_SPELLED_ORDINAL_RE = re.compile(r"\b(?:" + "|".join(_SPELLED_ORDINALS) + r")\b", re.IGNORECASE)


@dataclass
class RegistryEntry:
    name: str
    acronym: str | None
    value: str | int  # rank text for conferences, h-index for journals


@dataclass
class VenueRegistry:
    kind: str  # CORE_CONFERENCE | SCIMAGO_JOURNAL
    entries: list[RegistryEntry]


@dataclass
class VenueMatch:
    raw: str
    extracted_name: str
    matched_entry: RegistryEntry | None
    score: float
    accepted: bool


def token_set(text: str) -> set[str]:
    """Lowercase alphanumeric runs of a name."""
    return set(_TOKEN_RE.findall(text.lower()))


def jaccard(a: set, b: set) -> float:
    """|a ∩ b| / |a ∪ b|; two empty sets score 0 to guard vacuous matches."""
    union = a | b
    if not union:
        return 0.0
    return len(a & b) / len(union)


def load_registry(
    kind: str, path: Path | str, diagnostics: list[Diagnostic] | None = None
) -> VenueRegistry:
    """Load a ranking CSV; malformed rows are skipped with a diagnostic.

    Duplicate names (case-insensitive) keep the first occurrence.
    """
    expected = _HEADERS.get(kind)
    if expected is None:
        raise ValueError(f"unknown registry kind {kind!r}")
    path = Path(path)
    try:
        handle = path.open(encoding="utf-8-sig", newline="")
    except OSError as exc:
        raise WikiError(f"cannot read registry {path}: {exc}") from exc
    entries: list[RegistryEntry] = []
    seen: set[str] = set()
    with handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != expected:
            raise WikiError(
                f"registry {path} has header {header!r}, expected {','.join(expected)}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row or not any(cell.strip() for cell in row):
                continue
            entry = _parse_registry_row(kind, row)
            if entry is None:
                if diagnostics is not None:
                    diagnostics.append(
                        Diagnostic(WARNING, str(path), "B01", f"malformed row {lineno} skipped")
                    )
                continue
            key = entry.name.strip().lower()
            if key in seen:
                if diagnostics is not None:
                    diagnostics.append(
                        Diagnostic(INFO, str(path), "B02", f"duplicate name {entry.name!r} at row {lineno}, keeping first")
                    )
                continue
            seen.add(key)
            entries.append(entry)
    return VenueRegistry(kind=kind, entries=entries)


def _parse_registry_row(kind: str, row: list[str]) -> RegistryEntry | None:
    if kind == CORE_CONFERENCE:
        if len(row) != 3 or not row[0].strip():
            return None
        name, acronym, rank = (cell.strip() for cell in row)
        if not rank:
            return None
        return RegistryEntry(name=name, acronym=acronym or None, value=rank)
    if len(row) != 2 or not row[0].strip():
        return None
    try:
        h_index = int(row[1])
    except ValueError:
        return None
    if h_index < 0:
        return None
    return RegistryEntry(name=row[0].strip(), acronym=None, value=h_index)


def apply_overrides(
    registry: VenueRegistry, path: Path | str, diagnostics: list[Diagnostic] | None = None
) -> VenueRegistry:
    """Apply a ``name,rank_or_hindex`` CSV of manual corrections.

    Matching names (case-insensitive) get their value replaced; unknown
    names are appended as acronym-less entries.
    """
    path = Path(path)
    try:
        handle = path.open(encoding="utf-8-sig", newline="")
    except OSError as exc:
        raise WikiError(f"cannot read overrides {path}: {exc}") from exc
    with handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != ["name", "rank_or_hindex"]:
            raise WikiError(f"overrides {path} has header {header!r}, expected name,rank_or_hindex")
        entries = [RegistryEntry(e.name, e.acronym, e.value) for e in registry.entries]
        by_name = {entry.name.strip().lower(): entry for entry in entries}
        for lineno, row in enumerate(reader, start=2):
            if not row or not any(cell.strip() for cell in row):
                continue
            if len(row) != 2 or not row[0].strip():
                if diagnostics is not None:
                    diagnostics.append(
                        Diagnostic(WARNING, str(path), "B01", f"malformed override row {lineno} skipped")
                    )
                continue
            name, value_text = row[0].strip(), row[1].strip()
            value: str | int = value_text
            if registry.kind == SCIMAGO_JOURNAL:
                try:
                    value = int(value_text)
                except ValueError:
                    if diagnostics is not None:
                        diagnostics.append(
                            Diagnostic(WARNING, str(path), "B01", f"malformed override row {lineno} skipped")
                        )
                    continue
            existing = by_name.get(name.lower())
            if existing is not None:
                existing.value = value
            else:
                entry = RegistryEntry(name=name, acronym=None, value=value)
                entries.append(entry)
                by_name[name.lower()] = entry
    return VenueRegistry(kind=registry.kind, entries=entries)


def _strip_pass(text: str) -> str:
    text = _PROCEEDINGS_RE.sub("", text)
    text = _NUMERIC_ORDINAL_RE.sub(" ", text)
    text = _SPELLED_ORDINAL_RE.sub(" ", text)
    text = text.split(",", 1)[0]
    return " ".join(text.split())


def extract_conference_name(proceedings_text: str) -> str:
    """Reduce a proceedings string to the bare conference name.

    Per pass, in order: strip a leading "Proceedings of [the]", strip
    ordinal tokens (numeric of any magnitude, spelled First..Twentieth),
    truncate at the first comma, and trim whitespace. The pass repeats
    until the text is stable, so the operation is a fixpoint.
    """
    current = proceedings_text
    while True:
        stripped = _strip_pass(current)
        if stripped == current:
            break
        current = stripped
    if not current:
        raise ValueError(f"nothing left of proceedings text {proceedings_text!r} after stripping")
    return current


def match_venue(
    name: str,
    registry: VenueRegistry,
    threshold: float = DEFAULT_THRESHOLD,
    raw: str | None = None,
) -> VenueMatch:
    """Best registry entry for a venue name, by token-set Jaccard score.

    A case-insensitive acronym equality counts as score 1.0. Ties break
    by larger token intersection, then lexicographic entry name. The best
    entry is reported even below threshold, with accepted=False, so the
    threshold only gates acceptance.
    """
    if not 0 < threshold <= 1:
        raise ValueError(f"threshold must be in (0, 1], got {threshold}")
    name_tokens = token_set(name)
    bare = name.strip().lower()
    best: RegistryEntry | None = None
    best_key: tuple[float, int, str] | None = None
    best_score = 0.0
    for entry in registry.entries:
        entry_tokens = token_set(entry.name)
        score = jaccard(name_tokens, entry_tokens)
        if entry.acronym and bare == entry.acronym.strip().lower():
            score = 1.0
        key = (-score, -len(name_tokens & entry_tokens), entry.name)
        if best_key is None or key < best_key:
            best, best_key, best_score = entry, key, score
    return VenueMatch(
        raw=raw if raw is not None else name,
        extracted_name=name,
        matched_entry=best,
        score=best_score,
        accepted=best is not None and best_score >= threshold,
    )


def normalize_venue(
    raw_text: str, registry: VenueRegistry, threshold: float = DEFAULT_THRESHOLD
) -> VenueMatch:
    """Extract a conference name when applicable, then match it.

    Journal registries match the raw text directly; conference registries
    first apply the proceedings heuristics (falling back to the trimmed
    raw text when stripping consumes everything).
    """
    name = raw_text.strip()
    if registry.kind == CORE_CONFERENCE:
        try:
            name = extract_conference_name(raw_text)
        except ValueError:
            name = raw_text.strip()
    return match_venue(name, registry, threshold, raw=raw_text)
