# filename: app/semigroup/constructors.py
from typing import Sequence

import numpy as np

from app.core.errors import NotAGroup, NotAMonoid, SemigroupError

from .table import SemigroupTable


def adjoin_unit(S: SemigroupTable) -> SemigroupTable:
    """S with a new two-sided identity at index n, even when S is already a monoid."""
    n = S.order
    table = np.empty((n + 1, n + 1), dtype=np.int64)
    table[:n, :n] = S.table
    table[n, :] = np.arange(n + 1)
    table[:, n] = np.arange(n + 1)
    return SemigroupTable.from_trusted(table)


def adjoin_zero(S: SemigroupTable) -> SemigroupTable:
    """S with a new two-sided zero at index n."""
    n = S.order
    table = np.full((n + 1, n + 1), n, dtype=np.int64)
    table[:n, :n] = S.table
    return SemigroupTable.from_trusted(table)


def opposite(S: SemigroupTable) -> SemigroupTable:
    return SemigroupTable.from_trusted(S.table.T)


def direct_product(S: SemigroupTable, T: SemigroupTable) -> SemigroupTable:
    """Componentwise product; the pair (s, t) sits at index s*|T| + t."""
    m = T.order
    left = S.table.astype(np.int64)[:, None, :, None] * m
    right = T.table.astype(np.int64)[None, :, None, :]
    table = (left + right).reshape(S.order * m, S.order * m)
    return SemigroupTable.from_trusted(table)


def construct_rectangular_band(a: int, b: int) -> SemigroupTable:
    """Rect_a^b: x_ij x_kl = x_il with x_ij at index i*b + j."""
    if a < 1 or b < 1:
        raise SemigroupError(f"Rectangular band dimensions must be positive, got {a}x{b}")
    rows = np.repeat(np.arange(a), b)
    columns = np.tile(np.arange(b), a)
    table = rows[:, None] * b + columns[None, :]
    return SemigroupTable.from_trusted(table)


def construct_left_zero(n: int) -> SemigroupTable:
    """xy = x."""
    return construct_rectangular_band(n, 1)


def construct_right_zero(n: int) -> SemigroupTable:
    """xy = y."""
    return construct_rectangular_band(1, n)


def construct_cyclic_group(k: int) -> SemigroupTable:
    if k < 1:
        raise SemigroupError(f"Cyclic group order must be positive, got {k}")
    labels = np.arange(k)
    return SemigroupTable.from_trusted((labels[:, None] + labels[None, :]) % k)


def construct_rees_matrix(H: SemigroupTable, a: int, b: int,
                          sandwich: Sequence[Sequence[int]]) -> SemigroupTable:
    """
    The Rees matrix semigroup M(H; a, b; P) on triples (i, h, j).

    (i, h, j)(i', h', j') = (i, h P[j][i'] h', j'), with the triple stored at
    index (i*|H| + h)*b + j. P is a b x a array of elements of H.
    """
    from app.structure.group_completion import identity_and_inverses

    identity_and_inverses(H)
    if a < 1 or b < 1:
        raise SemigroupError(f"Rees matrix dimensions must be positive, got {a}x{b}")
    P = np.asarray(sandwich, dtype=np.int64)
    if P.shape != (b, a):
        raise SemigroupError(f"Sandwich matrix must be {b}x{a}, got shape {P.shape}")
    g = H.order
    if (P < 0).any() or (P >= g).any():
        raise NotAGroup("Sandwich entries must be elements of the group")

    index = np.arange(a * g * b)
    i_part = index // (g * b)
    h_part = (index // b) % g
    j_part = index % b
    group = H.table.astype(np.int64)
    twisted = group[h_part[:, None], P[j_part[:, None], i_part[None, :]]]
    middle = group[twisted, h_part[None, :]]
    table = (i_part[:, None] * g + middle) * b + j_part[None, :]
    return SemigroupTable.from_trusted(table)


def construct_join(S: SemigroupTable, y_count: int) -> SemigroupTable:
    """
    The monoid on S plus |Y| copies yS of S, for Y of size y_count.

    x.x' = xx', x.y'x' = y'x', yx.x' = y(xx'), yx.y'x' = yx'. The element
    y_k x is stored at index k*|S| + x for k = 1..y_count.
    """
    if not S.is_monoid:
        raise NotAMonoid("The join construction needs a monoid")
    if y_count < 0:
        raise SemigroupError(f"y_count must be nonnegative, got {y_count}")
    n = S.order
    size = (1 + y_count) * n
    index = np.arange(size)
    copy = index // n
    base = index % n
    base_table = S.table.astype(np.int64)

    left_copy = copy[:, None]
    right_copy = copy[None, :]
    base_product = base_table[base[:, None], base[None, :]]
    table = np.where(
        right_copy > 0,
        # into some y'S: keep the left copy when it is a y, else take the right one
        np.where(left_copy > 0, left_copy * n + base[None, :], index[None, :]),
        left_copy * n + base_product,
    )
    return SemigroupTable.from_trusted(table)
