# filename: app/resolution/homology.py
from typing import List, Optional, Tuple

from app.core.constants import (
    KLEIN_PATTERN_GROUP_ORDER,
    PRIME_PATTERN_GROUP_ORDERS,
    ROUTE_ADJOINED_UNIT,
    ROUTE_CORNER_REDUCTION,
    ROUTE_K_THIN_GROUP,
    ROUTE_K_THIN_PATTERN,
    ROUTE_MONOID,
)
from app.core.errors import NotAMonoid
from app.core.utils import debug_log
from app.linalg.abelian import FinAbGroup
from app.linalg.lattice import kernel_of_columns
from app.semigroup.constructors import adjoin_unit
from app.semigroup.table import SemigroupTable, idempotents
from app.structure.min_ideal import is_k_thin, min_ideal

from .cover import cover_by_mapping
from .modules import MonoidRing
from .node import NodeCache, ResolutionNode, homology_with_shift


def cyclic_prime_pattern(p: int, m: int) -> List[FinAbGroup]:
    """H_i(C_p) = C_p for odd i and 0 for even i > 0."""
    return [FinAbGroup.cyclic(p) if i % 2 else FinAbGroup.trivial() for i in range(1, m + 1)]


def klein_pattern(m: int) -> List[FinAbGroup]:
    """H_i(C_2 x C_2) = C_2^((i+3)/2) for odd i and C_2^(i/2) for even i."""
    return [
        FinAbGroup.from_factors(0, [(2, (i + 3) // 2 if i % 2 else i // 2)])
        for i in range(1, m + 1)
    ]


def _group_pattern(H: SemigroupTable, m: int) -> Optional[List[FinAbGroup]]:
    """Homology of a small group read off a fixed pattern, or None."""
    order = H.order
    if order == 1:
        return [FinAbGroup.trivial()] * m
    if order in PRIME_PATTERN_GROUP_ORDERS:
        return cyclic_prime_pattern(order, m)
    if order == KLEIN_PATTERN_GROUP_ORDER:
        squares = {H.product(h, h) for h in range(order)}
        return klein_pattern(m) if len(squares) == 1 else cyclic_prime_pattern(order, m)
    return None


def build_root(M: SemigroupTable, cache: NodeCache) -> ResolutionNode:
    """
    The first covering step: C_0 = ZMe for the idempotent e with |Me| least,
    and the node covering the kernel of the augmentation on C_0.
    """
    ring = MonoidRing(M)
    e = min(ring.idempotents, key=lambda f: (len(ring.basis(f)), f))
    C0 = ring.module([e])
    augmentation_kernel = kernel_of_columns([{0: 1}] * C0.rank)
    _, boundary = cover_by_mapping(C0, augmentation_kernel)
    return cache.get_or_create(boundary)


def resolve(M: SemigroupTable, m: int, cache: Optional[NodeCache] = None,
            max_shift: Optional[int] = None) -> List[FinAbGroup]:
    """H_1..H_m of a monoid from its resolution, with no shortcuts. max_shift overrides SGH_MAX_SHIFT."""
    if m < 1:
        raise ValueError(f"Maximum dimension must be at least 1, got {m}")
    cache = NodeCache() if cache is None else cache
    root = build_root(M, cache)
    homology_with_shift(root, m - 1, cache, max_shift)
    debug_log(f"resolved order {M.order} to dimension {m} with {len(cache)} nodes")
    return [root.homology_cache[shift] for shift in range(m)]


def _corner(S: SemigroupTable) -> Optional[Tuple[int, List[int]]]:
    """The idempotent e with eSe = eS or eSe = Se and |eSe| least, with eSe."""
    table = S.table
    best = None
    for e in idempotents(S):
        left = set(table[:, e].tolist())
        right = set(table[e, :].tolist())
        corner = set(table[table[e, :], e].tolist())
        if corner == left or corner == right:
            if best is None or (len(corner), e) < (len(best[1]), best[0]):
                best = (e, sorted(corner))
    return best


def _dispatch(S: SemigroupTable) -> Tuple[str, object]:
    R = min_ideal(S)
    if is_k_thin(R):
        H = S.restrict(R.H)
        if _group_pattern(H, 1) is not None:
            return ROUTE_K_THIN_PATTERN, H
        return ROUTE_K_THIN_GROUP, H
    corner = _corner(S)
    if corner is not None:
        e, elements = corner
        if len(elements) < S.order:
            return ROUTE_CORNER_REDUCTION, S.restrict(elements)
        if S.identity != e:
            raise NotAMonoid(f"eSe = S for e = {e}, but {e} is not an identity")
        return ROUTE_MONOID, S
    return ROUTE_ADJOINED_UNIT, adjoin_unit(S)


def homology_route(S: SemigroupTable) -> str:
    """Which branch get_homology takes first for S."""
    return _dispatch(S)[0]


def get_homology(S: SemigroupTable, m: int, max_shift: Optional[int] = None) -> List[FinAbGroup]:
    """
    H_1..H_m of BS.

    K-thin semigroups have the homology of the group H of their minimal
    ideal. Otherwise a corner eSe equal to eS or Se carries the same
    homology; when no such corner exists a unit is adjoined and the monoid
    is resolved.
    """
    if m < 1:
        raise ValueError(f"Maximum dimension must be at least 1, got {m}")
    route, target = _dispatch(S)
    debug_log(f"order {S.order}: route {route}")
    if route == ROUTE_K_THIN_PATTERN:
        return _group_pattern(target, m)
    if route == ROUTE_CORNER_REDUCTION:
        return get_homology(target, m, max_shift)
    return resolve(target, m, max_shift=max_shift)
