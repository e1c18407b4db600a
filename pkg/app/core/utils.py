# filename: app/core/utils.py
import sys
from typing import Iterable, List

from .config import settings


def debug_log(message: str) -> None:
    """Prints a DEBUG line on stderr when settings.DEBUG is enabled."""
    if settings.DEBUG:
        print(f"DEBUG: {message}", file=sys.stderr)


def warn(message: str) -> None:
    print(f"Warning: {message}", file=sys.stderr)


def int_text(value: int) -> str:
    """
    Decimal text for an arbitrary-precision integer.

    Python refuses str() on integers above a digit limit; huge powers of two
    fall back to a `(2^k)` form.
    """
    if value.bit_length() < 13_000:
        return str(value)
    if value > 0 and value & (value - 1) == 0:
        return f"(2^{value.bit_length() - 1})"
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    return str(value)


def dedupe_in_order(values: Iterable[int], universe: int) -> List[int]:
    """Distinct values in first-seen order, using an order-n boolean array."""
    seen = [False] * universe
    result = []
    for value in values:
        if not seen[value]:
            seen[value] = True
            result.append(value)
    return result
