# filename: app/nerve/bar_complex.py
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from app.core.config import settings
from app.core.errors import DimensionCapExceeded
from app.linalg.abelian import FinAbGroup
from app.linalg.homology import segment_homology
from app.linalg.lattice import SparseVector, dense_from_rows
from app.semigroup.table import SemigroupTable


def _check_cap(n: int, i: int, cap: Optional[int]) -> None:
    cap = settings.NERVE_MAX_COLUMNS if cap is None else cap
    columns = n ** i
    if columns > cap:
        raise DimensionCapExceeded(columns, cap)


def bar_columns(S: SemigroupTable, i: int, cap: Optional[int] = None) -> List[SparseVector]:
    """
    Sparse columns of the i-th boundary of the nerve.

    The i-tuple (x_1, .., x_i) has index sum x_k n^(i-k). Face 0 drops x_1,
    face j < i merges x_j x_(j+1), face i drops x_i; face j has sign (-1)^j.
    """
    if i < 1:
        raise ValueError(f"Boundary index must be at least 1, got {i}")
    n = S.order
    _check_cap(n, i, cap)
    table = S.table.astype(np.int64)
    index = np.arange(n ** i, dtype=np.int64)
    digits = [(index // n ** (i - 1 - k)) % n for k in range(i)]

    def encode(parts: List[np.ndarray]) -> np.ndarray:
        code = np.zeros(n ** i, dtype=np.int64)
        for part in parts:
            code = code * n + part
        return code

    faces = [(encode(digits[1:]), 1)]
    for j in range(1, i):
        merged = table[digits[j - 1], digits[j]]
        faces.append((encode(digits[:j - 1] + [merged] + digits[j + 1:]), (-1) ** j))
    faces.append((encode(digits[:-1]), (-1) ** i))

    targets = np.stack([face for face, _ in faces], axis=1).tolist()
    signs = [sign for _, sign in faces]
    columns: List[SparseVector] = []
    for row in targets:
        column: SparseVector = {}
        for target, sign in zip(row, signs):
            total = column.get(target, 0) + sign
            if total:
                column[target] = total
            else:
                del column[target]
        columns.append(column)
    return columns


def bar_boundary(S: SemigroupTable, i: int, cap: Optional[int] = None) -> np.ndarray:
    """The n^(i-1) x n^i matrix of the alternating face sum."""
    columns = bar_columns(S, i, cap)
    return dense_from_rows(columns, S.order ** (i - 1)).T


@dataclass
class BarChainComplex:
    """Boundaries 1..max_dimension+1 of the nerve of S, built on demand."""
    semigroup: SemigroupTable
    max_dimension: int
    cap: Optional[int] = None
    boundaries: Dict[int, List[SparseVector]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        _check_cap(self.semigroup.order, self.max_dimension + 1, self.cap)

    @property
    def order(self) -> int:
        return self.semigroup.order

    def rank(self, i: int) -> int:
        return self.order ** i

    def columns(self, i: int) -> List[SparseVector]:
        if i not in self.boundaries:
            self.boundaries[i] = bar_columns(self.semigroup, i, self.cap)
        return self.boundaries[i]

    def boundary(self, i: int) -> np.ndarray:
        return dense_from_rows(self.columns(i), self.rank(i - 1)).T

    def homology(self, i: int) -> FinAbGroup:
        return segment_homology(self.columns(i), self.columns(i + 1))


def nerve_homology(S: SemigroupTable, m: int, cap: Optional[int] = None) -> List[FinAbGroup]:
    """H_1..H_m of BS straight from the bar complex."""
    if m < 1:
        raise ValueError(f"Maximum dimension must be at least 1, got {m}")
    complex_ = BarChainComplex(S, m, cap)
    return [complex_.homology(i) for i in range(1, m + 1)]
