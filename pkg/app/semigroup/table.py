# filename: app/semigroup/table.py
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Iterable, List, Optional, Tuple

import numpy as np

from app.core.errors import (
    BadIdentityHint,
    EntryOutOfRange,
    NotAssociative,
    SemigroupError,
    TableParseError,
)

TABLE_DTYPE = np.int32

# Associativity is checked a block of left factors at a time so the
# intermediate n*n*n arrays stay bounded.
ASSOCIATIVITY_CHUNK_CELLS = 4_000_000


@dataclass
class LookupCounter:
    """Counts table lookups made through SemigroupTable.multiplier()."""
    lookups: int = 0


class SemigroupTable:
    """
    A validated n x n multiplication table on the elements 0..n-1.

    Instances are immutable: the backing array is read-only and the identity
    index is detected from the table, never trusted from input.
    """

    def __init__(self, table: np.ndarray, identity: Optional[int]):
        table = np.array(table, dtype=TABLE_DTYPE, copy=True)
        table.setflags(write=False)
        self.table = table
        self.identity = identity

    @classmethod
    def from_trusted(cls, table: Any) -> "SemigroupTable":
        """Wraps a table already known to be associative (constructor output)."""
        array = np.asarray(table, dtype=TABLE_DTYPE)
        return cls(array, find_identity(array))

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def is_monoid(self) -> bool:
        return self.identity is not None

    @cached_property
    def rows(self) -> List[List[int]]:
        """The table as nested Python lists, for tight loops on small tables."""
        return self.table.tolist()

    def product(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def multiplier(self, counter: Optional[LookupCounter] = None) -> Callable[[int, int], int]:
        table = self.table
        if counter is None:
            return lambda a, b: int(table[a, b])

        def counted(a: int, b: int) -> int:
            counter.lookups += 1
            return int(table[a, b])

        return counted

    def flat(self) -> Tuple[int, ...]:
        return tuple(self.table.ravel().tolist())

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def restrict(self, elements: Iterable[int]) -> "SemigroupTable":
        """
        The subsemigroup on a closed subset, relabelled so that the i-th
        smallest element of the subset becomes i.
        """
        chosen = sorted(set(int(x) for x in elements))
        if not chosen:
            raise SemigroupError("Cannot restrict to an empty subset")
        position = np.full(self.order, -1, dtype=np.int64)
        position[chosen] = np.arange(len(chosen))
        block = self.table[np.ix_(chosen, chosen)]
        relabelled = position[block]
        if (relabelled < 0).any():
            a, b = np.argwhere(relabelled < 0)[0]
            raise SemigroupError(
                f"Subset is not closed: {chosen[a]}*{chosen[b]} = {int(block[a, b])} lies outside it"
            )
        return SemigroupTable.from_trusted(relabelled)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SemigroupTable):
            return NotImplemented
        return self.identity == other.identity and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.order, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"SemigroupTable(order={self.order}, identity={self.identity})"


def find_identity(table: np.ndarray) -> Optional[int]:
    n = table.shape[0]
    labels = np.arange(n)
    left_neutral = (table == labels[None, :]).all(axis=1)
    right_neutral = (table == labels[:, None]).all(axis=0)
    candidates = np.flatnonzero(left_neutral & right_neutral)
    return int(candidates[0]) if candidates.size else None


def find_associativity_violation(table: np.ndarray) -> Optional[Tuple[int, int, int, int, int]]:
    """First (a, b, c, (ab)c, a(bc)) with (ab)c != a(bc), or None."""
    n = table.shape[0]
    step = max(1, ASSOCIATIVITY_CHUNK_CELLS // max(1, n * n))
    for start in range(0, n, step):
        rows = np.arange(start, min(n, start + step))
        left = table[table[rows, :], :]
        right = table[rows][:, table]
        mismatch = np.argwhere(left != right)
        if mismatch.size:
            offset, b, c = (int(v) for v in mismatch[0])
            return start + offset, b, c, int(left[offset, b, c]), int(right[offset, b, c])
    return None


def _coerce_rows(raw: Any) -> List[List[int]]:
    if isinstance(raw, np.ndarray):
        raw = raw.tolist()
    try:
        rows = [list(row) for row in raw]
    except TypeError:
        raise TableParseError("Table must be a sequence of rows")
    n = len(rows)
    if n == 0:
        raise TableParseError("Table must have at least one row")
    for row_index, row in enumerate(rows):
        if len(row) != n:
            raise TableParseError(f"Row {row_index} has {len(row)} entries; expected {n}")
        for value in row:
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise TableParseError(f"Row {row_index} contains a non-integer entry {value!r}")
    return [[int(value) for value in row] for row in rows]


def validate_table(raw: Any, identity_hint: Optional[int] = None) -> SemigroupTable:
    """
    Validates an n x n integer table and returns a SemigroupTable.

    Args:
        raw: Nested sequence (or numpy array) of element indices.
        identity_hint: Optional index claimed to be the identity.

    Returns:
        The validated table. The identity is detected automatically when present.
    """
    rows = _coerce_rows(raw)
    n = len(rows)
    for r, row in enumerate(rows):
        for c, value in enumerate(row):
            if not 0 <= value < n:
                raise EntryOutOfRange(r, c, value, n)

    array = np.array(rows, dtype=TABLE_DTYPE)
    violation = find_associativity_violation(array)
    if violation is not None:
        raise NotAssociative(*violation)

    identity = find_identity(array)
    if identity_hint is not None and identity_hint != identity:
        raise BadIdentityHint(identity_hint)
    return SemigroupTable(array, identity)


def idempotents(S: SemigroupTable) -> List[int]:
    labels = np.arange(S.order)
    return np.flatnonzero(S.table[labels, labels] == labels).tolist()
