# filename: app/linalg/lattice.py
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy.core.intfunc import igcdex

from app.core.errors import NotInLattice

# Sparse integer vector: index -> nonzero coefficient.
SparseVector = Dict[int, int]


def as_int_matrix(data: Any, shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
    """A 2-D object array of Python ints, so entries never overflow."""
    if isinstance(data, np.ndarray) and data.dtype == object and shape is None and data.ndim == 2:
        return data
    array = np.array(data, dtype=object)
    if shape is not None:
        array = array.reshape(shape)
    if array.ndim != 2:
        raise ValueError(f"Expected a 2-D integer matrix, got {array.ndim} dimensions")
    return np.vectorize(int, otypes=[object])(array) if array.size else array


def zero_matrix(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


def sparse_rows(M: Any) -> List[SparseVector]:
    M = as_int_matrix(M)
    rows: List[SparseVector] = [{} for _ in range(M.shape[0])]
    for r, c in zip(*np.nonzero(M != 0)):
        rows[int(r)][int(c)] = int(M[r, c])
    return rows


def sparse_columns(M: Any) -> List[SparseVector]:
    return sparse_rows(as_int_matrix(M).T)


def dense_from_rows(rows: Sequence[SparseVector], ncols: int) -> np.ndarray:
    M = zero_matrix(len(rows), ncols)
    for r, row in enumerate(rows):
        for c, value in row.items():
            M[r, c] = value
    return M


def add_multiple(target: SparseVector, source: SparseVector, factor: int) -> None:
    """target += factor * source, dropping entries that cancel."""
    if not factor:
        return
    for index, value in source.items():
        total = target.get(index, 0) + factor * value
        if total:
            target[index] = total
        else:
            target.pop(index, None)


def _combine(a: SparseVector, x: int, b: SparseVector, y: int) -> SparseVector:
    result: SparseVector = {}
    add_multiple(result, a, x)
    add_multiple(result, b, y)
    return result


def _negated(vector: SparseVector) -> SparseVector:
    return {index: -value for index, value in vector.items()}


class EchelonLattice:
    """
    A Z-submodule of Z^N kept as echelon rows keyed by their leading index.

    Rows with distinct leads are a Z-basis of everything added so far. When
    a new vector meets a pivot whose entry does not divide its own, the two
    are replaced through the extended gcd, which is unimodular, so the
    lattice never changes except by the vector added. With tracking on, each
    row carries a companion recording it as a combination of the inputs,
    and inputs that reduce to zero leave their companion in `relations`.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.pivots: Dict[int, SparseVector] = {}
        self.companions: Dict[int, SparseVector] = {}
        self.relations: List[SparseVector] = []

    def __len__(self) -> int:
        return len(self.pivots)

    def add(self, vector: SparseVector, companion: Optional[SparseVector] = None) -> None:
        row = dict(vector)
        tag = dict(companion) if self.track and companion is not None else {}
        while row:
            lead = min(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                if row[lead] < 0:
                    row, tag = _negated(row), _negated(tag)
                self.pivots[lead] = row
                if self.track:
                    self.companions[lead] = tag
                return
            a, p = row[lead], pivot[lead]
            if a % p == 0:
                add_multiple(row, pivot, -(a // p))
                if self.track:
                    add_multiple(tag, self.companions[lead], -(a // p))
                continue
            x, y, g = igcdex(p, a)
            x, y, g = int(x), int(y), int(g)
            if g < 0:
                x, y, g = -x, -y, -g
            # [[x, y], [a/g, -p/g]] has determinant -1
            new_pivot = _combine(pivot, x, row, y)
            row = _combine(pivot, a // g, row, -(p // g))
            if self.track:
                pivot_tag = self.companions[lead]
                self.companions[lead] = _combine(pivot_tag, x, tag, y)
                tag = _combine(pivot_tag, a // g, tag, -(p // g))
            self.pivots[lead] = new_pivot
        if self.track:
            self.relations.append(tag)

    def reduce(self, vector: SparseVector) -> Tuple[SparseVector, Dict[int, int]]:
        """Residual of vector against the pivots and the multiple taken of each."""
        row = dict(vector)
        taken: Dict[int, int] = {}
        while row:
            lead = min(row)
            pivot = self.pivots.get(lead)
            if pivot is None or row[lead] % pivot[lead]:
                break
            q = row[lead] // pivot[lead]
            add_multiple(row, pivot, -q)
            taken[lead] = q
        return row, taken

    def __contains__(self, vector: SparseVector) -> bool:
        residual, _ = self.reduce(vector)
        return not residual

    def coordinates(self, vector: SparseVector, label: int = 0) -> SparseVector:
        """vector as a combination of the tracked inputs; NotInLattice otherwise."""
        residual, taken = self.reduce(vector)
        if residual:
            raise NotInLattice(label)
        result: SparseVector = {}
        for lead, q in taken.items():
            add_multiple(result, self.companions[lead], q)
        return result

    def hermite_rows(self) -> List[SparseVector]:
        """
        The unique Hermite basis, ordered by lead: positive pivots, and every
        entry above a pivot reduced into [0, pivot).
        """
        leads = sorted(self.pivots)
        for position, lead in enumerate(leads):
            pivot = self.pivots[lead]
            p = pivot[lead]
            for earlier in leads[:position]:
                row = self.pivots[earlier]
                q = row.get(lead, 0) // p
                if q:
                    add_multiple(row, pivot, -q)
                    if self.track:
                        add_multiple(self.companions[earlier], self.companions[lead], -q)
        return [self.pivots[lead] for lead in leads]


def kernel_of_columns(columns: Iterable[SparseVector]) -> List[SparseVector]:
    """
    Hermite basis (as rows) of the integer kernel of the matrix with these
    columns. The basis is saturated: it comes from the unimodular transform
    that brings the columns to echelon form.
    """
    lattice = EchelonLattice(track=True)
    for j, column in enumerate(columns):
        lattice.add(column, {j: 1})
    kernel = EchelonLattice()
    for relation in lattice.relations:
        kernel.add(relation)
    return kernel.hermite_rows()


def hermite_normal_form(M: Any) -> np.ndarray:
    """Nonzero rows of the row-style Hermite normal form of M."""
    M = as_int_matrix(M)
    lattice = EchelonLattice()
    for row in sparse_rows(M):
        lattice.add(row)
    return dense_from_rows(lattice.hermite_rows(), M.shape[1])


def kernel_basis(M: Any) -> np.ndarray:
    """Columns form a Z-basis of {v : M v = 0}, each primitive and in Hermite form."""
    M = as_int_matrix(M)
    rows = kernel_of_columns(sparse_columns(M))
    return dense_from_rows(rows, M.shape[1]).T


def solve_in_lattice(K: Any, A: Any) -> np.ndarray:
    """An integer C with K C = A; raises NotInLattice naming the first bad column of A."""
    K = as_int_matrix(K)
    A = as_int_matrix(A)
    if K.shape[0] != A.shape[0]:
        raise ValueError(f"Row counts differ: {K.shape[0]} and {A.shape[0]}")
    lattice = EchelonLattice(track=True)
    for i, column in enumerate(sparse_columns(K)):
        lattice.add(column, {i: 1})
    C = zero_matrix(K.shape[1], A.shape[1])
    for j, target in enumerate(sparse_columns(A)):
        for i, value in lattice.coordinates(target, label=j).items():
            C[i, j] = value
    return C
