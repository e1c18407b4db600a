# filename: app/linalg/smith.py
from typing import Any, List, Optional, Tuple, Union

import numpy as np

from .lattice import as_int_matrix


def _identity(size: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def _min_abs_position(A: List[List[int]], rows: range, cols: range) -> Optional[Tuple[int, int]]:
    best = None
    best_value = 0
    for i in rows:
        row = A[i]
        for j in cols:
            value = row[j]
            if value and (best is None or abs(value) < best_value):
                best, best_value = (i, j), abs(value)
                if best_value == 1:
                    return best
    return best


class _Reducer:
    """Row and column operations on A, mirrored into U (rows) and V (columns)."""

    def __init__(self, rows: List[List[int]], ncols: int, track: bool):
        self.A = rows
        self.m = len(rows)
        self.n = ncols
        self.U = _identity(self.m) if track else None
        self.V = _identity(self.n) if track else None

    def swap_rows(self, i: int, k: int) -> None:
        if i != k:
            self.A[i], self.A[k] = self.A[k], self.A[i]
            if self.U is not None:
                self.U[i], self.U[k] = self.U[k], self.U[i]

    def swap_cols(self, j: int, k: int) -> None:
        if j == k:
            return
        for row in self.A:
            row[j], row[k] = row[k], row[j]
        if self.V is not None:
            for row in self.V:
                row[j], row[k] = row[k], row[j]

    def add_row(self, target: int, source: int, factor: int) -> None:
        src = self.A[source]
        dst = self.A[target]
        for j in range(self.n):
            if src[j]:
                dst[j] += factor * src[j]
        if self.U is not None:
            src_u, dst_u = self.U[source], self.U[target]
            for j in range(self.m):
                if src_u[j]:
                    dst_u[j] += factor * src_u[j]

    def add_col(self, target: int, source: int, factor: int) -> None:
        for row in self.A:
            if row[source]:
                row[target] += factor * row[source]
        if self.V is not None:
            for row in self.V:
                if row[source]:
                    row[target] += factor * row[source]

    def negate_row(self, i: int) -> None:
        self.A[i] = [-x for x in self.A[i]]
        if self.U is not None:
            self.U[i] = [-x for x in self.U[i]]

    def run(self) -> None:
        A = self.A
        for t in range(min(self.m, self.n)):
            position = _min_abs_position(A, range(t, self.m), range(t, self.n))
            if position is None:
                break
            self.swap_rows(t, position[0])
            self.swap_cols(t, position[1])
            while True:
                p = A[t][t]
                clean = True
                for i in range(t + 1, self.m):
                    if A[i][t]:
                        self.add_row(i, t, -(A[i][t] // p))
                        clean = clean and not A[i][t]
                for j in range(t + 1, self.n):
                    if A[t][j]:
                        self.add_col(j, t, -(A[t][j] // p))
                        clean = clean and not A[t][j]
                if not clean:
                    # a remainder smaller than |p| is left in row or column t
                    line = [(i, t) for i in range(t + 1, self.m) if A[i][t]]
                    line += [(t, j) for j in range(t + 1, self.n) if A[t][j]]
                    i, j = min(line, key=lambda ij: abs(A[ij[0]][ij[1]]))
                    self.swap_rows(t, i)
                    self.swap_cols(t, j)
                    continue
                offender = next(
                    (i for i in range(t + 1, self.m)
                     if any(A[i][j] % p for j in range(t + 1, self.n))),
                    None,
                )
                if offender is None:
                    break
                self.add_row(t, offender, 1)
            if A[t][t] < 0:
                self.negate_row(t)


def smith_diagonal(rows: List[List[int]], ncols: int) -> List[int]:
    """Nonzero invariant factors d1 | d2 | ... of a list-of-rows matrix (consumed)."""
    reducer = _Reducer(rows, ncols, track=False)
    reducer.run()
    diagonal = []
    for t in range(min(reducer.m, ncols)):
        if not rows[t][t]:
            break
        diagonal.append(rows[t][t])
    return diagonal


def smith_normal_form(M: Any, transforms: bool = False) -> Union[np.ndarray, Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """
    Smith normal form D of an integer matrix.

    The pivot is always the entry of least absolute value left in the working
    submatrix. With transforms=True, also returns unimodular U and V with
    U @ M @ V == D.
    """
    M = as_int_matrix(M)
    m, n = M.shape
    reducer = _Reducer([[int(x) for x in row] for row in M.tolist()], n, track=transforms)
    reducer.run()
    D = np.array(reducer.A, dtype=object).reshape(m, n)
    if not transforms:
        return D
    U = np.array(reducer.U, dtype=object).reshape(m, m)
    V = np.array(reducer.V, dtype=object).reshape(n, n)
    return D, U, V
