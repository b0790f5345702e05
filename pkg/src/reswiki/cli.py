"""Command-line front door: scaffold, lint, export-csv, analyze, backlinks, index.

Exit codes: 0 success, 1 fatal error or lint errors present, 2 usage
error. Requested data goes to stdout (or files); incidental loader and
extraction diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import (
    COUNT_DIMENSIONS,
    build_bib_table,
    changes_over_time,
    count_by,
    term_frequency,
    write_bib_csv,
    write_outputs,
)
from .biblio import CORE_CONFERENCE, DEFAULT_THRESHOLD, SCIMAGO_JOURNAL, VenueRegistry, load_registry
from .diagnostics import ERROR, Diagnostic
from .graph import backlinks, entity_index, lint
from .pipeline import analyze_wiki, match_sheet_venues
from .sheets import ENTITY_KINDS
from .store import WikiError, WikiRoot, scaffold

DEFAULT_NAMESPACE = "phd:bibliography"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reswiki",
        description="Treat a flat-file research wiki as a structured database.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scaffold", help="create the standard wiki tree in an empty directory")
    p.add_argument("dir", help="target directory (must be empty or absent)")
    p.add_argument("--program", default="courses", help="program page name (default: courses)")
    p.set_defaults(func=cmd_scaffold)

    p = sub.add_parser("lint", help="check a wiki against the structural conventions")
    p.add_argument("dir", help="wiki root directory")
    p.set_defaults(func=cmd_lint)

    p = sub.add_parser("export-csv", help="export the bibliography table with venue rankings")
    p.add_argument("dir", help="wiki root directory")
    p.add_argument("--core", required=True, help="conference ranking CSV (name,acronym,rank)")
    p.add_argument("--scimago", required=True, help="journal h-index CSV (title,h_index)")
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD,
                   help=f"Jaccard acceptance threshold (default: {DEFAULT_THRESHOLD})")
    p.add_argument("-o", "--output", required=True, help="output CSV path")
    p.set_defaults(func=cmd_export_csv)

    p = sub.add_parser("analyze", help="write the full statistics and plot file set")
    p.add_argument("dir", help="wiki root directory")
    p.add_argument("--namespace", default=DEFAULT_NAMESPACE,
                   help=f"namespace for the changes plot (default: {DEFAULT_NAMESPACE})")
    p.add_argument("--output", default="output", help="output directory (default: output)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("backlinks", help="list the pages linking to a page")
    p.add_argument("dir", help="wiki root directory")
    p.add_argument("page_id", help="target page id")
    p.set_defaults(func=cmd_backlinks)

    p = sub.add_parser("index", help="list reading sheets per entity page of a kind")
    p.add_argument("dir", help="wiki root directory")
    p.add_argument("entity_kind", choices=ENTITY_KINDS, help="entity namespace to index")
    p.set_defaults(func=cmd_index)

    return parser


def _emit_diagnostics(diags: list[Diagnostic]) -> None:
    for diag in diags:
        print(diag.render(), file=sys.stderr)


def cmd_scaffold(args: argparse.Namespace) -> int:
    report = scaffold(args.dir, args.program)
    for rel in report.page_files:
        print(rel)
    for rel in report.directories:
        print(rel + "/")
    print(
        f"scaffolded {len(report.page_files)} pages and "
        f"{len(report.directories)} directories into {args.dir}",
        file=sys.stderr,
    )
    return 0


def cmd_lint(args: argparse.Namespace) -> int:
    analysis = analyze_wiki(WikiRoot(Path(args.dir)))
    findings = lint(analysis.pages, analysis.graph, analysis.sheets)
    _emit_diagnostics(analysis.diagnostics)
    _emit_diagnostics([d for d in analysis.sheets.all_diagnostics() if not d.code.startswith("R")])
    for diag in findings:
        print(diag.render())
    return 1 if any(d.severity == ERROR for d in findings) else 0


def _build_records(analysis, core: VenueRegistry, scimago: VenueRegistry, threshold: float):
    matches = match_sheet_venues(analysis, core, scimago, threshold)
    return build_bib_table(analysis.sheets.reading, matches, analysis.display_names)


def cmd_export_csv(args: argparse.Namespace) -> int:
    diagnostics: list[Diagnostic] = []
    core = load_registry(CORE_CONFERENCE, args.core, diagnostics)
    scimago = load_registry(SCIMAGO_JOURNAL, args.scimago, diagnostics)
    analysis = analyze_wiki(WikiRoot(Path(args.dir)))
    records = _build_records(analysis, core, scimago, args.threshold)
    write_bib_csv(records, Path(args.output))
    _emit_diagnostics(diagnostics)
    _emit_diagnostics(analysis.diagnostics)
    _emit_diagnostics([d for d in analysis.sheets.all_diagnostics() if not d.code.startswith("R")])
    print(args.output)
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    analysis = analyze_wiki(WikiRoot(Path(args.dir)))
    empty_core = VenueRegistry(kind=CORE_CONFERENCE, entries=[])
    empty_scimago = VenueRegistry(kind=SCIMAGO_JOURNAL, entries=[])
    records = _build_records(analysis, empty_core, empty_scimago, DEFAULT_THRESHOLD)
    series = changes_over_time(analysis.pages, args.namespace)
    termfreq = term_frequency(analysis.sheets.reading)
    histograms = {dim: count_by(records, dim) for dim in COUNT_DIMENSIONS}
    paths = write_outputs(records, series, termfreq, histograms, args.output, args.namespace)
    _emit_diagnostics(analysis.diagnostics)
    for path in paths:
        print(path)
    return 0


def cmd_backlinks(args: argparse.Namespace) -> int:
    analysis = analyze_wiki(WikiRoot(Path(args.dir)))
    for source in backlinks(analysis.graph, args.page_id):
        print(source)
    _emit_diagnostics(analysis.diagnostics)
    return 0


def cmd_index(args: argparse.Namespace) -> int:
    analysis = analyze_wiki(WikiRoot(Path(args.dir)))
    for entity, sheet_ids in entity_index(analysis.graph, args.entity_kind).items():
        print(f"{entity}\t{','.join(sheet_ids)}")
    _emit_diagnostics(analysis.diagnostics)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WikiError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
