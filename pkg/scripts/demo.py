#!/usr/bin/env python3
"""End-to-end demo: scaffold a wiki, add content, lint, export, analyze.

Builds a small populated research wiki under --workdir (default ./demo),
then runs the whole toolchain against it and prints where the outputs
landed. Safe to re-run: the work directory is recreated each time.
"""

from __future__ import annotations

import argparse
import shutil
from pathlib import Path

from reswiki.analysis import (
    COUNT_DIMENSIONS,
    build_bib_table,
    changes_over_time,
    count_by,
    term_frequency,
    write_outputs,
)
from reswiki.biblio import CORE_CONFERENCE, SCIMAGO_JOURNAL, load_registry
from reswiki.graph import backlinks, entity_index, lint
from reswiki.pipeline import analyze_wiki, match_sheet_venues
from reswiki.store import WikiRoot, scaffold

SHEET = """\
====== Entity Ranking with Random Walks ======

^ Title | Entity Ranking with Random Walks |
^ Authors | [[phd:bibliography:author:jane-renner|Jane Renner]], [[phd:bibliography:author:luis-t-costa|Luis T. Costa]] |
^ Conference | [[phd:bibliography:conference:sigir|Proceedings of the 41st International ACM SIGIR Conference on Research and Development in Information Retrieval]] |
^ Year | [[phd:bibliography:year:2018|2018]] |
^ Publisher | [[phd:bibliography:publisher:acm|ACM]] |

Random walks over an entity graph rank entities competitively on news corpora.

===== Method =====

The walk restarts at query entities and accumulates visit probability mass.

===== Results =====

Graph-based ranking beats the text-only baseline on two of three collections.
"""

SECOND_SHEET = """\
====== Sessions in Web Search ======

^ Title | Sessions in Web Search |
^ Authors | [[phd:bibliography:author:jane-renner|Jane Renner]] |
^ Journal | [[phd:bibliography:journal:information-processing-and-management|Information Processing and Management]] |
^ Year | [[phd:bibliography:year:2017|2017]] |

===== Scope =====

Session segmentation heuristics and their effect on evaluation metrics.
"""

INDEX = """\
====== Bibliography ======

===== Graph-based search =====

  * **[[phd:bibliography:entity-ranking-with-random-walks|Entity Ranking with Random Walks]]**
  * [[phd:bibliography:to-review|[To Review]]] [[phd:bibliography:sessions-in-web-search|Sessions in Web Search]]
"""

TO_REVIEW = """\
====== To Review ======

  * [[phd:bibliography:sessions-in-web-search|Sessions in Web Search]]
"""

AUTHOR_PAGE = """\
====== Jane Renner ======

  * **[[phd:bibliography:entity-ranking-with-random-walks|Entity Ranking with Random Walks]]**
  * [[phd:bibliography:sessions-in-web-search|Sessions in Web Search]]
"""

CORE_CSV = """\
name,acronym,rank
International ACM SIGIR Conference on Research and Development in Information Retrieval,SIGIR,A*
ACM International Conference on Web Search and Data Mining,WSDM,A*
"""

SCIMAGO_CSV = """\
title,h_index
Information Processing and Management,114
"""


def write(root: Path, rel: str, text: str) -> None:
    path = root / "pages" / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workdir", type=Path, default=Path("demo"))
    args = parser.parse_args()

    workdir: Path = args.workdir
    if workdir.exists():
        shutil.rmtree(workdir)
    wiki_dir = workdir / "wiki"
    scaffold(wiki_dir, program_name="prodei")
    print(f"scaffolded wiki at {wiki_dir}")

    write(wiki_dir, "phd/bibliography.txt", INDEX)
    write(wiki_dir, "phd/bibliography/to-review.txt", TO_REVIEW)
    write(wiki_dir, "phd/bibliography/entity-ranking-with-random-walks.txt", SHEET)
    write(wiki_dir, "phd/bibliography/sessions-in-web-search.txt", SECOND_SHEET)
    write(wiki_dir, "phd/bibliography/author/jane-renner.txt", AUTHOR_PAGE)
    (workdir / "core.csv").write_text(CORE_CSV, encoding="utf-8")
    (workdir / "scimago.csv").write_text(SCIMAGO_CSV, encoding="utf-8")

    analysis = analyze_wiki(WikiRoot(wiki_dir))
    print(f"loaded {len(analysis.pages)} pages, {len(analysis.graph.edges)} links")

    findings = lint(analysis.pages, analysis.graph, analysis.sheets)
    print(f"lint: {len(findings)} finding(s)")
    for diag in findings:
        print(f"  {diag.render()}")

    print("backlinks of phd:bibliography:author:jane-renner:")
    for source in backlinks(analysis.graph, "phd:bibliography:author:jane-renner"):
        print(f"  {source}")

    print("author index:")
    for entity, sheet_ids in entity_index(analysis.graph, "author").items():
        print(f"  {entity}: {len(sheet_ids)} sheet(s)")

    core = load_registry(CORE_CONFERENCE, workdir / "core.csv")
    scimago = load_registry(SCIMAGO_JOURNAL, workdir / "scimago.csv")
    matches = match_sheet_venues(analysis, core, scimago, 0.5)
    records = build_bib_table(analysis.sheets.reading, matches, analysis.display_names)
    series = changes_over_time(analysis.pages, "phd:bibliography")
    termfreq = term_frequency(analysis.sheets.reading)
    histograms = {dim: count_by(records, dim) for dim in COUNT_DIMENSIONS}
    paths = write_outputs(records, series, termfreq, histograms, workdir / "output")
    print("analysis outputs:")
    for path in paths:
        print(f"  {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
