# filename: app/linalg/homology.py
from typing import Any, List, Sequence

from app.core.errors import NotAComplex

from .abelian import FinAbGroup
from .lattice import EchelonLattice, SparseVector, add_multiple, as_int_matrix, kernel_of_columns, sparse_columns
from .smith import smith_diagonal


def _compose(out_columns: Sequence[SparseVector], column: SparseVector) -> SparseVector:
    image: SparseVector = {}
    for index, coefficient in column.items():
        add_multiple(image, out_columns[index], coefficient)
    return image


def segment_homology(out_columns: Sequence[SparseVector], in_columns: Sequence[SparseVector]) -> FinAbGroup:
    """
    ker(M_out) / im(M_in) for matrices given by their sparse columns.

    The kernel gets its Hermite basis, each image column is written in that
    basis, and the Smith form of the echelonised coordinates gives the
    torsion; the rank is the kernel rank minus the image rank.
    """
    middle = len(out_columns)
    for j, column in enumerate(in_columns):
        if any(index >= middle for index in column):
            raise NotAComplex(f"Column {j} of the incoming map has an entry past row {middle - 1}")
        if _compose(out_columns, column):
            raise NotAComplex(f"The composite is nonzero on column {j} of the incoming map")

    kernel = EchelonLattice(track=True)
    kernel_rows = kernel_of_columns(out_columns)
    for i, row in enumerate(kernel_rows):
        kernel.add(row, {i: 1})

    image = EchelonLattice()
    for j, column in enumerate(in_columns):
        image.add(kernel.coordinates(column, label=j))

    k = len(kernel_rows)
    rows: List[List[int]] = []
    for row in image.pivots.values():
        dense = [0] * k
        for index, value in row.items():
            dense[index] = value
        rows.append(dense)
    diagonal = smith_diagonal(rows, k)
    return FinAbGroup.from_invariants(k - len(diagonal), [d for d in diagonal if d > 1])


def homology_from_matrices(M_out: Any, M_in: Any) -> FinAbGroup:
    """Homology at the middle of Z^a <-M_out- Z^b <-M_in- Z^c."""
    M_out = as_int_matrix(M_out)
    M_in = as_int_matrix(M_in)
    if M_out.shape[1] != M_in.shape[0]:
        raise NotAComplex(
            f"Shapes do not compose: {M_out.shape[0]}x{M_out.shape[1]} after {M_in.shape[0]}x{M_in.shape[1]}"
        )
    return segment_homology(sparse_columns(M_out), sparse_columns(M_in))


def cokernel(M: Any) -> FinAbGroup:
    """Z^rows / im(M)."""
    M = as_int_matrix(M)
    return segment_homology([{} for _ in range(M.shape[0])], sparse_columns(M))
