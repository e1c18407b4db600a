# filename: app/resolution/cover.py
from typing import List, Sequence, Tuple

from app.linalg.lattice import EchelonLattice, SparseVector

from .modules import BoundaryMatrix, SummandModule, freeze, left_action_expand


def traversal_key(v: SparseVector) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """Small supports first, then lexicographic on (basis index, coefficient)."""
    return len(v), freeze(v)


def fixing_idempotent(C: SummandModule, v: SparseVector) -> int:
    """The idempotent e with e*v = v and |Me| smallest, ties to the lower index."""
    ring = C.ring
    best = None
    for e in ring.idempotents:
        if left_action_expand(C, e, v) != v:
            continue
        candidate = (len(ring.basis(e)), e)
        if best is None or candidate < best:
            best = candidate
    assert best is not None, "the identity fixes every vector"
    return best[1]


def cover_by_mapping(C: SummandModule, A: Sequence[SparseVector]) -> Tuple[SummandModule, BoundaryMatrix]:
    """
    A projective module C' and a map C' -> C whose image is the ZM-span of A.

    Vectors are visited in traversal_key order; one is skipped when it already
    lies in the Z-span X of the M-orbits chosen so far. A kept vector v gets a
    summand ZMe with e*v = v, and its whole orbit s*v is added to X.
    """
    ring = C.ring
    X = EchelonLattice()
    chosen: List[int] = []
    columns = []
    for v in sorted(A, key=traversal_key):
        if not v or v in X:
            continue
        chosen.append(fixing_idempotent(C, v))
        columns.append(freeze(v))
        orbit = {freeze(left_action_expand(C, s, v)) for s in range(ring.order)}
        for image in sorted(orbit):
            X.add(dict(image))
    domain = ring.module(chosen)
    return domain, BoundaryMatrix(domain=domain, codomain=C, columns=tuple(columns))
