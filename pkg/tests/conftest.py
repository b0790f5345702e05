"""Shared fixtures: a hand-built wiki tree and ranking registries.

The golden wiki has 19 pages: a bibliography index, the in-review and
to-review status pages, five reading sheets (three conferences, two
journals), three author pages, three collection pages (one subset, one
network dataset), one experiment with three log pages, and a start page.
Every page in the bibliography namespace has a change log so the
changes-over-time series is fully hand-derivable.
"""

from __future__ import annotations

from datetime import datetime, timezone
from pathlib import Path

import pytest

from reswiki.store import WikiRoot


def ts(year: int, month: int, day: int, hour: int = 12) -> int:
    return int(datetime(year, month, day, hour, tzinfo=timezone.utc).timestamp())


# One line per acceptance criterion, echoed after the run summary so the
# PASS/FAIL verdicts survive pytest's output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def write_page(root: Path, rel: str, text: str) -> None:
    path = root / "pages" / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def write_changes(root: Path, rel: str, entries: list[tuple[int, str, str]]) -> None:
    """entries: (timestamp, type letter, summary); page id derived from rel."""
    path = root / "meta" / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    page_id = rel[: -len(".changes")].replace("/", ":")
    lines = [
        f"{stamp}\t127.0.0.1\t{letter}\t{page_id}\tadmin\t{summary}" for stamp, letter, summary in entries
    ]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


GOLDEN_PAGES: dict[str, str] = {
    "start.txt": """\
====== Start ======

Research notes live under the doctoral namespace.
""",
    "phd/bibliography.txt": """\
====== Bibliography ======

===== Entity search =====

  * **[[phd:bibliography:hypergraph-models-for-entity-search|Hypergraph Models for Entity Search]]**
  * [[phd:bibliography:to-review|[To Review]]] [[phd:bibliography:ranking-entities-in-networks|Ranking Entities in Networks]]
  * [[phd:bibliography:graph-signals-on-citation-networks|Graph Signals on Citation Networks]]

===== Retrieval evaluation =====

  * **[[phd:bibliography:evaluating-retrieval-over-sessions|Evaluating Retrieval over Sessions, a Survey]]**
  * [[phd:bibliography:in-review|[In Review]]] [[phd:bibliography:neural-ranking-models-overview|Neural Ranking Models, an Overview]]
""",
    "phd/bibliography/in-review.txt": """\
====== In Review ======

  * [[phd:bibliography:neural-ranking-models-overview|Neural Ranking Models, an Overview]]
""",
    "phd/bibliography/to-review.txt": """\
====== To Review ======

  * [[phd:bibliography:ranking-entities-in-networks|Ranking Entities in Networks]]
""",
    "phd/bibliography/hypergraph-models-for-entity-search.txt": """\
====== Hypergraph Models for Entity Search ======

^ Title | Hypergraph Models for Entity Search |
^ Authors | [[phd:bibliography:author:w-bruce-croft|W. Bruce Croft]], [[phd:bibliography:author:maarten-de-rijke|Maarten de Rijke]] |
^ Conference | [[phd:bibliography:conference:sigir|Proceedings of the 41st International ACM SIGIR Conference on Research and Development in Information Retrieval]] |
^ Year | [[phd:bibliography:year:2018|2018]] |
^ Publisher | [[phd:bibliography:publisher:acm|ACM]] |

A hypergraph ranking model that links entities and terms in one structure.

===== Introduction =====

Entity search over combined data needs a shared representation for documents and entities.

> We argue for a single unified structure.

===== Ranking Model =====

The model ranks entities by random walks over the hypergraph.

===== Conclusion =====

  * [ ] Re-read the evaluation section
""",
    "phd/bibliography/evaluating-retrieval-over-sessions.txt": """\
====== Evaluating Retrieval over Sessions, a Survey ======

^ Title | Evaluating Retrieval over Sessions, a Survey |
^ Authors | [[phd:bibliography:author:emine-yilmaz|Emine Yilmaz]] |
^ Journal | [[phd:bibliography:journal:information-processing-and-management|Information Processing and Management]] |
^ Year | [[phd:bibliography:year:2017|2017]] |
^ Publisher | [[phd:bibliography:publisher:elsevier|Elsevier]] |

Surveys session-based evaluation, covering metrics and user models.

===== Session Metrics =====

Session metrics extend ranked list evaluation with a model of user effort.
""",
    "phd/bibliography/neural-ranking-models-overview.txt": """\
====== Neural Ranking Models, an Overview ======

^ Title | Neural Ranking Models, an Overview |
^ Authors | [[phd:bibliography:author:maarten-de-rijke|Maarten de Rijke]], [[phd:bibliography:author:jaap-kamps|Jaap Kamps]] |
^ Journal | [[phd:bibliography:journal:foundations-and-trends-in-information-retrieval|Foundations and Trends in Information Retrieval]] |
^ Year | [[phd:bibliography:year:2018|2018]] |

===== Architectures =====

Representation and interaction based architectures dominate the survey.
""",
    "phd/bibliography/ranking-entities-in-networks.txt": """\
====== Ranking Entities in Networks ======

^ Title | Ranking Entities in Networks |
^ Authors | [[phd:bibliography:author:w-bruce-croft|W. Bruce Croft]] |
^ Conference | [[phd:bibliography:conference:wsdm|Proceedings of the Eleventh ACM International Conference on Web Search and Data Mining]] |
^ Year | [[phd:bibliography:year:2018|2018]] |

===== Notes =====

Scheduled for review.
""",
    "phd/bibliography/graph-signals-on-citation-networks.txt": """\
====== Graph Signals on Citation Networks ======

^ Title | Graph Signals on Citation Networks |
^ Authors | [[phd:bibliography:author:emine-yilmaz|Emine Yilmaz]] |
^ Conference | [[phd:bibliography:conference:cikm|Proceedings of the 27th ACM International Conference on Information and Knowledge Management]] |
^ Year | [[phd:bibliography:year:2017|2017]] |
^ Institution | [[phd:bibliography:institution:university-of-porto|University of Porto]] |

===== Notes =====

Graph signal processing applied to citation graphs, with spectral filters.
""",
    "phd/bibliography/author/w-bruce-croft.txt": """\
====== W. Bruce Croft ======

  * **[[phd:bibliography:hypergraph-models-for-entity-search|Hypergraph Models for Entity Search]]**
  * [[phd:bibliography:ranking-entities-in-networks|Ranking Entities in Networks]]
""",
    "phd/bibliography/author/maarten-de-rijke.txt": """\
====== Maarten de Rijke ======

  * **[[phd:bibliography:hypergraph-models-for-entity-search|Hypergraph Models for Entity Search]]**
  * [[phd:bibliography:neural-ranking-models-overview|Neural Ranking Models, an Overview]]
""",
    "phd/bibliography/author/emine-yilmaz.txt": """\
====== Emine Yilmaz ======

  * **[[phd:bibliography:evaluating-retrieval-over-sessions|Evaluating Retrieval over Sessions, a Survey]]**
  * [[phd:bibliography:graph-signals-on-citation-networks|Graph Signals on Citation Networks]]
""",
    "phd/collections/inex-2009-wikipedia.txt": """\
====== INEX 2009 Wikipedia ======

^ Name | INEX 2009 Wikipedia |
^ Source | [[https://inex.mmci.uni-saarland.de/|INEX]] |
^ Paper | [[https://doi.org/10.1007/978-3-642-14556-8_4|Overview paper]] |
^ Date | 2009 |
^ Size | 50.7 GB |
^ Documents | 2,666,190 |
^ Entities | 5,839,102 |
^ Topics | 68 |
^ Assessments | 50,725 |

Annotated Wikipedia dump used for ad hoc and entity retrieval tasks.

===== Evaluations =====

^ Task ^ Metric ^ Value ^ Source ^
| Ad hoc retrieval | MAP | 0.2855 | Overview of INEX 2009 |
| Entity ranking | xinfAP | 0.1773 | Overview of INEX 2009 |
""",
    "phd/collections/inex-2009-wikipedia-10k.txt": """\
====== INEX 2009 Wikipedia 10K ======

^ Name | INEX 2009 Wikipedia 10K |
^ Source | [[phd:collections:inex-2009-wikipedia|INEX 2009 Wikipedia]] |
^ Date | 2017 |
^ Size | 144 MB |
^ Documents | 10,000 |

Random sample used for faster iteration.
""",
    "phd/collections/citation-network-sample.txt": """\
====== Citation Network Sample ======

^ Name | Citation Network Sample |
^ Source | [[https://snap.stanford.edu/data/|SNAP]] |
^ Date | 2018 |
^ Size | 38 MB |
^ Nodes | 27,770 |
^ Edges | 352,807 |

Citation network sample for graph signal experiments.
""",
    "phd/experiments/hypergraph-ranking.txt": """\
====== Hypergraph Ranking ======

^ ID | Experiment 1 |
^ Start Date | 2017-10-24 16:38 |
^ End Date | Ongoing |
^ Why do it? | Establish a ranking baseline over the hypergraph model. |
^ Main strengths | Single structure for terms and entities. |
^ Main weaknesses | Large memory footprint. |
^ Test collection | [[phd:collections:inex-2009-wikipedia-10k|INEX 2009 Wikipedia 10K]] |

  * [ ] Tune damping factor
  * [x] Index the 10K sample

===== Versions =====

^ Version ^ Description ^
| v1 | Plain random walk ranking |
| v2 | Biased walks with entity priors |

===== Evaluations =====

^ Version ^ Metric ^ Value ^
| v1 | MAP | 0.0734 |
| v2 | MAP | 0.0819 |

===== Research log =====

  * [[phd:experiments:hypergraph-ranking:log-1|Log 1]]
  * [[phd:experiments:hypergraph-ranking:log-2|Log 2]]
""",
    "phd/experiments/hypergraph-ranking/log-1.txt": """\
====== Log 1 ======

Damping factor sweep, first pass.
""",
    "phd/experiments/hypergraph-ranking/log-2.txt": """\
====== Log 2 ======

Prior estimation from entity frequencies.
""",
    "phd/experiments/hypergraph-ranking/log-3.txt": """\
====== Log 3 ======

Memory profiling of the index build.
""",
}

# (relative changes path, [(timestamp, type letter, summary)])
GOLDEN_CHANGES: dict[str, list[tuple[int, str, str]]] = {
    "phd/bibliography.changes": [
        (ts(2017, 10, 5), "C", "created"),
        (ts(2017, 12, 10), "E", "added neural ranking survey"),
        (ts(2018, 1, 20), "E", "added graph signals entry"),
    ],
    "phd/bibliography/in-review.changes": [(ts(2017, 12, 1), "C", "created")],
    "phd/bibliography/to-review.changes": [(ts(2017, 10, 20), "C", "created")],
    "phd/bibliography/hypergraph-models-for-entity-search.changes": [
        (ts(2017, 10, 24), "C", "created"),
        (ts(2017, 10, 30), "E", "notes"),
        (ts(2017, 12, 5), "E", "summary"),
    ],
    "phd/bibliography/evaluating-retrieval-over-sessions.changes": [
        (ts(2018, 1, 3), "C", "created"),
        (ts(2018, 1, 15), "E", "summary"),
    ],
    "phd/bibliography/neural-ranking-models-overview.changes": [(ts(2017, 12, 28), "C", "created")],
    "phd/bibliography/ranking-entities-in-networks.changes": [(ts(2017, 10, 12), "C", "created")],
    "phd/bibliography/graph-signals-on-citation-networks.changes": [(ts(2018, 1, 25), "C", "created")],
    "phd/bibliography/author/w-bruce-croft.changes": [(ts(2017, 10, 24), "C", "created")],
    "phd/bibliography/author/maarten-de-rijke.changes": [(ts(2017, 10, 24), "C", "created")],
    "phd/bibliography/author/emine-yilmaz.changes": [(ts(2018, 1, 3), "C", "created")],
}

# Hand-derived from the fixture above (see tests for the derivations).
GOLDEN_EDGE_COUNT = 39
GOLDEN_DANGLING = {
    "phd:bibliography:author:jaap-kamps",
    "phd:bibliography:conference:sigir",
    "phd:bibliography:conference:wsdm",
    "phd:bibliography:conference:cikm",
    "phd:bibliography:year:2017",
    "phd:bibliography:year:2018",
    "phd:bibliography:journal:information-processing-and-management",
    "phd:bibliography:journal:foundations-and-trends-in-information-retrieval",
    "phd:bibliography:publisher:acm",
    "phd:bibliography:publisher:elsevier",
    "phd:bibliography:institution:university-of-porto",
}
GOLDEN_SERIES = [("2017-10", 7), ("2017-11", 0), ("2017-12", 4), ("2018-01", 5)]
GOLDEN_REVISION_TOTAL = 16

CORE_CSV = """\
name,acronym,rank
International ACM SIGIR Conference on Research and Development in Information Retrieval,SIGIR,A*
ACM International Conference on Web Search and Data Mining,WSDM,A*
International Conference on Information and Knowledge Management,CIKM,A
European Conference on Information Retrieval,ECIR,A
International Conference on the Theory of Information Retrieval,ICTIR,B
Text Retrieval Conference,TREC,A
International World Wide Web Conference,WWW,A*
Conference on Empirical Methods in Natural Language Processing,EMNLP,A
International Conference on Machine Learning,ICML,A*
Annual Meeting of the Association for Computational Linguistics,ACL,A*
"""

SCIMAGO_CSV = """\
title,h_index
Information Processing and Management,114
Foundations and Trends in Information Retrieval,45
Journal of the Association for Information Science and Technology,132
Information Retrieval Journal,61
ACM Transactions on Information Systems,87
"""

# Hand-constructed from the fixture sheets and registries above.
GOLDEN_BIBLIOGRAPHY_CSV = (
    "title,author,year,conference,core,journal,scimago_h_index,institution,publisher,review\n"
    '"Evaluating Retrieval over Sessions, a Survey",Emine Yilmaz,2017,,,'
    "Information Processing and Management,114,,Elsevier,"
    '"Surveys session-based evaluation, covering metrics and user models."\n'
    "Graph Signals on Citation Networks,Emine Yilmaz,2017,"
    "International Conference on Information and Knowledge Management,A,,,University of Porto,,\n"
    "Hypergraph Models for Entity Search,W. Bruce Croft|Maarten de Rijke,2018,"
    "International ACM SIGIR Conference on Research and Development in Information Retrieval,A*,,,,ACM,"
    "A hypergraph ranking model that links entities and terms in one structure.\n"
    '"Neural Ranking Models, an Overview",Maarten de Rijke|Jaap Kamps,2018,,,'
    "Foundations and Trends in Information Retrieval,45,,,\n"
    "Ranking Entities in Networks,W. Bruce Croft,2018,"
    "ACM International Conference on Web Search and Data Mining,A*,,,,,\n"
)


def build_golden_wiki(root: Path) -> WikiRoot:
    for rel, text in GOLDEN_PAGES.items():
        write_page(root, rel, text)
    for rel, entries in GOLDEN_CHANGES.items():
        write_changes(root, rel, entries)
    return WikiRoot(root)


@pytest.fixture(scope="session")
def golden_wiki(tmp_path_factory: pytest.TempPathFactory) -> WikiRoot:
    return build_golden_wiki(tmp_path_factory.mktemp("golden") / "wiki")


@pytest.fixture(scope="session")
def registry_dir(tmp_path_factory: pytest.TempPathFactory) -> Path:
    path = tmp_path_factory.mktemp("registries")
    (path / "core.csv").write_text(CORE_CSV, encoding="utf-8")
    (path / "scimago.csv").write_text(SCIMAGO_CSV, encoding="utf-8")
    return path
