"""Flat-file wiki storage: page loading, change histories, scaffolding.

Pages are UTF-8 ``.txt`` files under ``pages/``, one directory level per
namespace segment; per-page change logs live under ``meta/`` at the same
relative path with a ``.changes`` extension, one tab-separated record per
line (timestamp, ip, type letter C/E/e/D, page id, user, summary).
"""

from __future__ import annotations

import shutil
from dataclasses import dataclass, field
from pathlib import Path

from .diagnostics import WARNING, Diagnostic
from .markup import slugify
from .templates import NAMESPACE_DIRS, PAGE_TEMPLATES, PROGRAM_TEMPLATE


class WikiError(Exception):
    """Fatal storage-level failure (missing tree, refused scaffold, ...)."""


CHANGE_TYPES = {"C": "create", "E": "edit", "e": "minor-edit", "D": "delete"}


@dataclass
class Revision:
    timestamp: int  # seconds since epoch, UTC, > 0
    change_type: str  # create | edit | minor-edit | delete
    user: str = ""
    summary: str = ""


@dataclass
class WikiPage:
    id: str  # colon-joined lowercase namespace segments + slug
    raw_text: str
    revisions: list[Revision] = field(default_factory=list)


@dataclass
class WikiRoot:
    root_path: Path
    pages_dir: str = "pages"
    meta_dir: str = "meta"

    @property
    def pages_path(self) -> Path:
        return Path(self.root_path) / self.pages_dir

    @property
    def meta_path(self) -> Path:
        return Path(self.root_path) / self.meta_dir


def page_id_from_path(relative: Path) -> str:
    """Derive a page id from a path relative to the pages directory."""
    parts = list(relative.parent.parts) + [relative.stem]
    return ":".join(part.lower() for part in parts if part)


def _changes_path(root: WikiRoot, page_id: str) -> Path:
    rel = Path(*page_id.split(":"))
    return root.meta_path / rel.with_suffix(".changes")


def load_changes(
    root: WikiRoot, page_id: str, diagnostics: list[Diagnostic] | None = None
) -> list[Revision]:
    """Parse a page's change log; absent file means no recorded history.

    Malformed lines are skipped with a diagnostic; the remainder parses.
    Output is sorted ascending by timestamp, ties keeping input order.
    """
    path = _changes_path(root, page_id)
    if not path.is_file():
        return []
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        if diagnostics is not None:
            diagnostics.append(
                Diagnostic(WARNING, page_id, "L02", f"unreadable change log {path.name}: {exc}")
            )
        return []
    revisions: list[Revision] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) < 4:
            _bad_line(diagnostics, page_id, lineno, "fewer than 4 fields")
            continue
        try:
            timestamp = int(fields[0])
        except ValueError:
            _bad_line(diagnostics, page_id, lineno, f"bad timestamp {fields[0]!r}")
            continue
        if timestamp <= 0:
            _bad_line(diagnostics, page_id, lineno, f"non-positive timestamp {timestamp}")
            continue
        change_type = CHANGE_TYPES.get(fields[2])
        if change_type is None:
            _bad_line(diagnostics, page_id, lineno, f"unknown change type {fields[2]!r}")
            continue
        user = fields[4] if len(fields) > 4 else ""
        summary = fields[5] if len(fields) > 5 else ""
        revisions.append(Revision(timestamp, change_type, user, summary))
    revisions.sort(key=lambda rev: rev.timestamp)  # stable: ties keep line order
    return revisions


def _bad_line(
    diagnostics: list[Diagnostic] | None, page_id: str, lineno: int, why: str
) -> None:
    if diagnostics is not None:
        diagnostics.append(
            Diagnostic(WARNING, page_id, "L02", f"change log line {lineno} skipped: {why}")
        )


def load_wiki(
    root: WikiRoot, diagnostics: list[Diagnostic] | None = None
) -> list[WikiPage]:
    """Load every ``.txt`` page under the pages directory, sorted by id.

    Unreadable files are skipped with a diagnostic. Pages without a change
    log get one synthetic edit revision at file modification time.
    """
    pages_path = root.pages_path
    if not pages_path.is_dir():
        raise WikiError(f"pages directory not found: {pages_path}")
    entries = sorted(
        (page_id_from_path(path.relative_to(pages_path)), path)
        for path in pages_path.rglob("*.txt")
        if path.is_file()
    )
    pages: list[WikiPage] = []
    seen: set[str] = set()
    for page_id, path in entries:
        if page_id in seen:
            if diagnostics is not None:
                diagnostics.append(
                    Diagnostic(WARNING, page_id, "L01", f"duplicate page id, skipping {path.name}")
                )
            continue
        try:
            raw_text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            if diagnostics is not None:
                diagnostics.append(
                    Diagnostic(WARNING, page_id, "L01", f"unreadable page file: {exc}")
                )
            continue
        seen.add(page_id)
        revisions = load_changes(root, page_id, diagnostics)
        if not revisions:
            revisions = [Revision(int(path.stat().st_mtime), "edit")]
        pages.append(WikiPage(id=page_id, raw_text=raw_text, revisions=revisions))
    return pages


@dataclass
class ScaffoldReport:
    """Relative paths created by scaffold, POSIX-style, sorted."""

    page_files: list[str]
    directories: list[str]


def scaffold(target_dir: Path | str, program_name: str = "courses") -> ScaffoldReport:
    """Create the standard research wiki tree in an empty directory.

    Writes the 16 template pages (index pages, entity lists, section
    roots, and the program page) plus their namespace directories under
    ``pages/``, and an empty ``meta/``. Refuses a non-empty target so an
    existing wiki is never clobbered.
    """
    program = slugify(program_name)
    target = Path(target_dir)
    if target.exists():
        if not target.is_dir():
            raise WikiError(f"scaffold target is not a directory: {target}")
        if any(target.iterdir()):
            raise WikiError(f"refusing to scaffold into non-empty directory: {target}")
    page_files = dict(PAGE_TEMPLATES)
    page_files[f"{program}.txt"] = PROGRAM_TEMPLATE
    directories = ["meta", "pages"] + [f"pages/{d}" for d in NAMESPACE_DIRS]
    directories.append(f"pages/{program}")
    created = not target.exists()
    try:
        for rel in directories:
            (target / rel).mkdir(parents=True, exist_ok=True)
        for rel, text in page_files.items():
            path = target / "pages" / rel
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
    except OSError:
        # No partial trees: undo whatever was written before re-raising.
        if created:
            shutil.rmtree(target, ignore_errors=True)
        else:
            for child in target.iterdir():
                shutil.rmtree(child, ignore_errors=True)
        raise
    return ScaffoldReport(
        page_files=sorted(f"pages/{rel}" for rel in page_files),
        directories=sorted(directories),
    )
