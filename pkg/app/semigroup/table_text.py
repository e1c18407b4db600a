# filename: app/semigroup/table_text.py
from typing import List, Optional

from app.core.constants import TABLE_COMMENT_PREFIX
from app.core.errors import TableParseError

from .table import SemigroupTable, validate_table


def parse_table(text: str) -> SemigroupTable:
    """
    Parses the table text format:

        # optional comment lines
        n
        n lines of n whitespace-separated integers

    Blank lines are ignored. Raises TableParseError for malformed text and the
    validator's errors (EntryOutOfRange, NotAssociative) for bad tables.
    """
    lines = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        stripped = raw_line.strip()
        if not stripped or stripped.startswith(TABLE_COMMENT_PREFIX):
            continue
        lines.append((line_number, stripped))

    if not lines:
        raise TableParseError("No table found (expected the order on the first line)")

    order_line, order_text = lines[0]
    try:
        order = int(order_text)
    except ValueError:
        raise TableParseError(f"Expected the table order, got {order_text!r}", order_line)
    if order < 1:
        raise TableParseError(f"Table order must be positive, got {order}", order_line)

    body = lines[1:]
    if len(body) != order:
        raise TableParseError(f"Expected {order} rows, found {len(body)}")

    rows: List[List[int]] = []
    for line_number, line in body:
        tokens = line.split()
        if len(tokens) != order:
            raise TableParseError(f"Expected {order} entries, found {len(tokens)}", line_number)
        try:
            rows.append([int(token) for token in tokens])
        except ValueError:
            raise TableParseError(f"Non-integer entry in row {line!r}", line_number)

    return validate_table(rows)


def format_table(S: SemigroupTable, comment: Optional[str] = None) -> str:
    """Writes S in the table text format; output is deterministic."""
    parts = []
    if comment:
        for line in comment.splitlines():
            parts.append(f"{TABLE_COMMENT_PREFIX} {line}".rstrip())
    parts.append(str(S.order))
    for row in S.rows:
        parts.append(" ".join(str(value) for value in row))
    return "\n".join(parts) + "\n"
