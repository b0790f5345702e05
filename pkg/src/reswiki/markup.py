"""Wiki markup subset: block parser, inline spans, links, and slugs.

The grammar is line-oriented and intentionally small: heading fences,
table rows, indented list items, blockquotes, todo checkboxes, inline
bold, and ``[[target|label]]`` links. Anything else degrades to plain
paragraph text; parsing never fails.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

SLUG_RE = re.compile(r"^[a-z0-9]+(-[a-z0-9]+)*$")

IN_REVIEW_PAGE_ID = "phd:bibliography:in-review"
TO_REVIEW_PAGE_ID = "phd:bibliography:to-review"

_HEADING_RE = re.compile(r"^(={2,})\s*(.*?)\s*(={2,})\s*$")
_LIST_ITEM_RE = re.compile(r"^( +)([*-]) +(.*)$")
_TODO_RE = re.compile(r"^\[([ xX])\]\s*(.*)$")
_EXTERNAL_RE = re.compile(r"^(?:[a-zA-Z][a-zA-Z0-9+.-]*://|www\.|mailto:)")
_NON_SLUG_RE = re.compile(r"[^a-z0-9]+")


@dataclass
class InlineSpan:
    kind: str  # "plain" | "bold" | "link"
    text: str
    link_target: str | None = None
    link_label: str | None = None
    bold: bool = False
    external: bool = False


@dataclass
class Heading:
    level: int  # 1 (====== fences) .. 5 (== fences)
    spans: list[InlineSpan]


@dataclass
class Paragraph:
    spans: list[InlineSpan]


@dataclass
class TableCell:
    spans: list[InlineSpan]
    header: bool = False


@dataclass
class TableRow:
    cells: list[TableCell]
    header: bool = False


@dataclass
class Table:
    rows: list[TableRow]


@dataclass
class ListItem:
    spans: list[InlineSpan]
    depth: int = 1
    todo: bool = False
    checked: bool = False


@dataclass
class ListBlock:
    items: list[ListItem]
    ordered: bool = False


@dataclass
class Blockquote:
    spans: list[InlineSpan]


@dataclass
class TodoItem:
    checked: bool
    spans: list[InlineSpan] = field(default_factory=list)


Block = Heading | Paragraph | Table | ListBlock | Blockquote | TodoItem


@dataclass
class InternalLink:
    """A resolved page-to-page link with its review-status decoration."""

    source: str
    target: str
    label: str
    bold: bool = False
    prefix: str = "none"  # "none" | "in-review" | "to-review"


def slugify(title: str) -> str:
    """Derive a page slug from a title.

    Lowercases, replaces every maximal run of non-alphanumeric characters
    (non-ASCII included) with a single dash, and strips leading/trailing
    dashes. Raises ValueError when nothing alphanumeric remains.
    """
    slug = _NON_SLUG_RE.sub("-", title.lower()).strip("-")
    if not slug:
        raise ValueError(f"cannot derive a slug from {title!r}: no alphanumeric characters")
    return slug


def normalize_page_id(raw: str) -> str:
    """Normalize a link target to a colon-joined lowercase page id.

    Whitespace runs inside a segment become dashes; empty segments are
    dropped. Other characters pass through so lint can flag them.
    """
    segments = []
    for seg in raw.strip().lstrip(":").lower().split(":"):
        seg = re.sub(r"\s+", "-", seg.strip())
        if seg:
            segments.append(seg)
    return ":".join(segments)


def _scan_link(text: str, start: int) -> tuple[int, int, str, str | None] | None:
    """Next well-formed ``[[target]]`` / ``[[target|label]]`` at or after start.

    Returns (open, end, target, label). The target may not contain ']' or
    '|'; the label may contain single ']' characters ("[To Review]"), so
    the closing ']]' is the last one of its bracket run. Linear time even
    on unterminated bracket soup.
    """
    n = len(text)
    pos = start
    while True:
        open_at = text.find("[[", pos)
        if open_at == -1:
            return None
        i = open_at + 2
        while i < n and text[i] not in "]|":
            i += 1
        if i >= n:
            # No ']' or '|' ahead at all: no later opener can close either.
            return None
        target = text[open_at + 2 : i]
        if text[i] == "|":
            label_start = i + 1
            close = text.find("]]", label_start)
            if close == -1:
                return None  # no ']]' anywhere ahead: nothing can close
            while close + 2 < n and text[close + 2] == "]":
                close += 1
            return (open_at, close + 2, target, text[label_start:close])
        if i + 1 < n and text[i + 1] == "]":
            # Unlabeled targets cannot contain ']', so the first pair
            # closes; any extra ']' stays behind as plain text.
            return (open_at, i + 2, target, None)
        # Lone ']' at i: every opener before i stops at the same spot, so
        # the next candidate can only start past it.
        pos = i + 1


def parse_inline(text: str) -> list[InlineSpan]:
    """Split a line of text into plain/bold/link spans."""
    spans: list[InlineSpan] = []
    bold = False

    def emit_text(run: str) -> None:
        nonlocal bold
        for index, part in enumerate(run.split("**")):
            if index:
                bold = not bold
            if part:
                spans.append(InlineSpan(kind="bold" if bold else "plain", text=part, bold=bold))

    pos = 0
    while True:
        found = _scan_link(text, pos)
        if found is None:
            emit_text(text[pos:])
            break
        open_at, end, target, label = found
        emit_text(text[pos:open_at])
        spans.append(_link_span(target, label, bold))
        pos = end
    return spans


def _link_span(target_raw: str, label: str | None, bold: bool) -> InlineSpan:
    target_raw = target_raw.strip()
    display = label if label is not None and label.strip() else target_raw
    if _EXTERNAL_RE.match(target_raw):
        return InlineSpan(
            kind="link",
            text=display,
            link_target=target_raw,
            link_label=display,
            bold=bold,
            external=True,
        )
    target = normalize_page_id(target_raw.split("#", 1)[0])
    if not target:
        # Pure anchors or empty targets degrade to their display text.
        return InlineSpan(kind="bold" if bold else "plain", text=display, bold=bold)
    return InlineSpan(
        kind="link",
        text=display,
        link_target=target,
        link_label=display,
        bold=bold,
    )


def _parse_table_row(line: str) -> TableRow:
    # Split on | / ^ delimiters, ignoring any inside [[...]] links.
    parts: list[tuple[str, str]] = []
    delim = line[0]
    buf: list[str] = []
    in_link = False
    i, n = 1, len(line)
    while i < n:
        if not in_link and line.startswith("[[", i):
            in_link = True
            buf.append("[[")
            i += 2
            continue
        if in_link and line.startswith("]]", i):
            if i + 2 < n and line[i + 2] == "]":
                buf.append("]")
                i += 1
                continue
            in_link = False
            buf.append("]]")
            i += 2
            continue
        ch = line[i]
        if not in_link and ch in "|^":
            parts.append((delim, "".join(buf)))
            buf = []
            delim = ch
            i += 1
            continue
        buf.append(ch)
        i += 1
    trailing = "".join(buf)
    if trailing.strip():
        parts.append((delim, trailing))  # unterminated row: keep the remainder
    cells = [
        TableCell(spans=parse_inline(text.strip()), header=(d == "^")) for d, text in parts
    ]
    return TableRow(cells=cells, header=bool(cells) and all(c.header for c in cells))


def parse_page(raw_text: str) -> list[Block]:
    """Parse page text into blocks. Total: arbitrary input never fails."""
    blocks: list[Block] = []
    para: list[str] = []
    rows: list[TableRow] = []
    items: list[ListItem] = []
    items_ordered = False
    quote: list[str] = []

    def flush_para() -> None:
        nonlocal para
        if para:
            blocks.append(Paragraph(spans=parse_inline(" ".join(para))))
            para = []

    def flush_table() -> None:
        nonlocal rows
        if rows:
            blocks.append(Table(rows=rows))
            rows = []

    def flush_list() -> None:
        nonlocal items
        if items:
            blocks.append(ListBlock(items=items, ordered=items_ordered))
            items = []

    def flush_quote() -> None:
        nonlocal quote
        if quote:
            blocks.append(Blockquote(spans=parse_inline("\n".join(quote))))
            quote = []

    def flush_all() -> None:
        flush_para()
        flush_table()
        flush_list()
        flush_quote()

    for line in raw_text.splitlines():
        if not line.strip():
            flush_all()
            continue
        m = _HEADING_RE.match(line)
        if m:
            flush_all()
            fence = min(len(m.group(1)), len(m.group(3)), 6)
            blocks.append(Heading(level=7 - max(fence, 2), spans=parse_inline(m.group(2))))
            continue
        if line.startswith(("|", "^")):
            flush_para()
            flush_list()
            flush_quote()
            rows.append(_parse_table_row(line))
            continue
        lm = _LIST_ITEM_RE.match(line)
        if lm:
            flush_para()
            flush_table()
            flush_quote()
            ordered = lm.group(2) == "-"
            if items and ordered != items_ordered:
                flush_list()
            items_ordered = ordered
            text = lm.group(3)
            todo = checked = False
            tm = _TODO_RE.match(text)
            if tm:
                todo = True
                checked = tm.group(1).lower() == "x"
                text = tm.group(2)
            items.append(
                ListItem(
                    spans=parse_inline(text),
                    depth=max(1, len(lm.group(1)) // 2),
                    todo=todo,
                    checked=checked,
                )
            )
            continue
        if line.startswith(">"):
            flush_para()
            flush_table()
            flush_list()
            quote.append(line[1:].strip())
            continue
        tm = _TODO_RE.match(line)
        if tm:
            flush_all()
            blocks.append(TodoItem(checked=tm.group(1).lower() == "x", spans=parse_inline(tm.group(2))))
            continue
        flush_table()
        flush_list()
        flush_quote()
        para.append(line.strip())
    flush_all()
    return blocks


def spans_text(spans: list[InlineSpan]) -> str:
    """Concatenate span display text (link labels kept, targets dropped)."""
    return "".join(span.text for span in spans)


def _span_contexts(block: Block) -> list[list[InlineSpan]]:
    """Span groups within which link adjacency is meaningful."""
    if isinstance(block, (Heading, Paragraph, Blockquote, TodoItem)):
        return [block.spans]
    if isinstance(block, Table):
        return [cell.spans for row in block.rows for cell in row.cells]
    if isinstance(block, ListBlock):
        return [item.spans for item in block.items]
    return []


def extract_links(blocks: list[Block], source_id: str) -> list[InternalLink]:
    """Collect internal links in document order.

    A link immediately preceded (whitespace only between) by a link to the
    in-review/to-review page, in the same list item/cell/paragraph, gets
    the corresponding prefix. The status link itself is also returned.
    """
    links: list[InternalLink] = []
    for block in blocks:
        for spans in _span_contexts(block):
            pending: str | None = None
            for span in spans:
                if span.kind == "link" and not span.external and span.link_target:
                    links.append(
                        InternalLink(
                            source=source_id,
                            target=span.link_target,
                            label=span.link_label or span.link_target,
                            bold=span.bold,
                            prefix=pending or "none",
                        )
                    )
                    if span.link_target == IN_REVIEW_PAGE_ID:
                        pending = "in-review"
                    elif span.link_target == TO_REVIEW_PAGE_ID:
                        pending = "to-review"
                    else:
                        pending = None
                elif span.text.strip():
                    pending = None
    return links


def strip_markup(blocks: list[Block]) -> str:
    """Flatten blocks to plain text: one line per block, cells space-joined."""
    parts: list[str] = []
    for block in blocks:
        if isinstance(block, (Heading, Paragraph, Blockquote, TodoItem)):
            parts.append(spans_text(block.spans))
        elif isinstance(block, Table):
            parts.extend(
                " ".join(spans_text(cell.spans) for cell in row.cells) for row in block.rows
            )
        elif isinstance(block, ListBlock):
            parts.extend(spans_text(item.spans) for item in block.items)
    return "\n".join(parts)
