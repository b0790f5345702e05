"""Flat-file research wiki toolkit: parse, lint, index, export, analyze."""

from .biblio import (
    CORE_CONFERENCE,
    SCIMAGO_JOURNAL,
    VenueMatch,
    VenueRegistry,
    extract_conference_name,
    jaccard,
    load_registry,
    match_venue,
)
from .diagnostics import Diagnostic
from .graph import LinkGraph, backlinks, build_graph, entity_index, lint
from .markup import InternalLink, extract_links, parse_page, slugify, strip_markup
from .pipeline import analyze_wiki, ingest
from .sheets import (
    CollectionSheet,
    ExperimentSheet,
    PageKind,
    ReadingSheet,
    classify_page,
    extract_collection_sheet,
    extract_experiment_sheet,
    extract_reading_sheet,
)
from .store import Revision, WikiPage, WikiRoot, load_changes, load_wiki, scaffold

__version__ = "0.1.0"

__all__ = [
    "CORE_CONFERENCE",
    "SCIMAGO_JOURNAL",
    "CollectionSheet",
    "Diagnostic",
    "ExperimentSheet",
    "InternalLink",
    "LinkGraph",
    "PageKind",
    "ReadingSheet",
    "Revision",
    "VenueMatch",
    "VenueRegistry",
    "WikiPage",
    "WikiRoot",
    "analyze_wiki",
    "backlinks",
    "build_graph",
    "classify_page",
    "entity_index",
    "extract_conference_name",
    "extract_collection_sheet",
    "extract_experiment_sheet",
    "extract_links",
    "extract_reading_sheet",
    "ingest",
    "jaccard",
    "lint",
    "load_changes",
    "load_registry",
    "load_wiki",
    "match_venue",
    "parse_page",
    "scaffold",
    "slugify",
    "strip_markup",
]
