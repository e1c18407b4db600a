# filename: app/semigroup/canonical.py
import itertools
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import OrderTooLarge

from .table import SemigroupTable


@lru_cache(maxsize=None)
def _relabelings(n: int) -> Tuple[np.ndarray, np.ndarray]:
    forward = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    return forward, np.argsort(forward, axis=1)


def _relabelled_flats(table: np.ndarray) -> np.ndarray:
    """Every relabelled copy of table, one flattened row per permutation."""
    n = table.shape[0]
    forward, inverse = _relabelings(n)
    # new[u, v] = p[old[p^-1(u), p^-1(v)]]
    moved = table[inverse[:, :, None], inverse[:, None, :]]
    relabelled = np.take_along_axis(forward, moved.reshape(len(forward), -1), axis=1)
    return relabelled


def canonical_key(S: SemigroupTable, max_order: Optional[int] = None) -> Tuple[int, ...]:
    """
    Lexicographically least flattened table among all relabelings of S and of
    its opposite. Equal keys mean isomorphic or anti-isomorphic.
    """
    cap = settings.CANONICAL_FORM_MAX_ORDER if max_order is None else max_order
    if S.order > cap:
        raise OrderTooLarge(S.order, cap, "canonical_form")
    table = S.table.astype(np.int64)
    candidates = np.concatenate([_relabelled_flats(table), _relabelled_flats(table.T)])
    return min(tuple(row) for row in candidates.tolist())


def canonical_form(S: SemigroupTable, max_order: Optional[int] = None) -> SemigroupTable:
    key = canonical_key(S, max_order=max_order)
    n = S.order
    return SemigroupTable.from_trusted(np.array(key, dtype=np.int64).reshape(n, n))
