"""Shared diagnostic record used by the loader, extractors, and lint."""

from __future__ import annotations

from dataclasses import dataclass

ERROR = "error"
WARNING = "warning"
INFO = "info"


@dataclass
class Diagnostic:
    """One finding about one page (or file), rendered one per line.

    Lint rules use the fixed codes R01-R08; loader and extraction
    diagnostics use L*/B*/X* codes and never appear in lint output.
    """

    severity: str
    page_id: str
    code: str
    message: str

    def render(self) -> str:
        return f"{self.severity}\t{self.code}\t{self.page_id}\t{self.message}"


def sort_key(diag: Diagnostic) -> tuple[str, str, str, str]:
    return (diag.page_id, diag.code, diag.severity, diag.message)
