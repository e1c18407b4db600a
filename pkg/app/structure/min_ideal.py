# filename: app/structure/min_ideal.py
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import OrderTooLarge, StructureVerificationFailed
from app.core.utils import debug_log, dedupe_in_order
from app.semigroup.table import LookupCounter, SemigroupTable

# Which definition of H produced a verified structure.
H_FROM_KSK = "kSk"
H_WITH_KK = "kSk+kk"


@dataclass(frozen=True)
class ReesStructure:
    """
    K(S) as a Rees matrix semigroup M(H; I, J; <.>).

    Every element of K(S) is i*h*j for exactly one (i, h, j); sandwich[j][i]
    is the position in H of the ambient product j*i.
    """
    k: int
    I: Tuple[int, ...]
    J: Tuple[int, ...]
    H: Tuple[int, ...]
    h_identity: int
    sandwich: Tuple[Tuple[int, ...], ...]
    factorization: Dict[int, Tuple[int, int, int]] = field(repr=False, compare=False)
    h_variant: str = H_FROM_KSK

    @property
    def identity_element(self) -> int:
        """e_H as an element of S."""
        return self.H[self.h_identity]

    @property
    def kernel(self) -> List[int]:
        return sorted(self.factorization)

    @property
    def kernel_order(self) -> int:
        return len(self.I) * len(self.H) * len(self.J)


def _verify(mul: Callable[[int, int], int], R: ReesStructure) -> Optional[str]:
    """Returns a description of the first failed invariant, or None."""
    H_set = set(R.H)
    h_position = {h: p for p, h in enumerate(R.H)}

    for x in R.I + R.J:
        if mul(x, x) != x:
            return f"{x} is not idempotent"
    idempotents_in_h = [h for h in R.H if mul(h, h) == h]
    if len(idempotents_in_h) != 1:
        return f"H has {len(idempotents_in_h)} idempotents"
    e = R.identity_element

    for h in R.H:
        if mul(e, h) != h or mul(h, e) != h:
            return f"{e} is not an identity for {h}"
        has_inverse = False
        for g in R.H:
            product = mul(h, g)
            if product not in H_set:
                return f"H is not closed: {h}*{g} = {product}"
            if product == e:
                has_inverse = True
        if not has_inverse:
            return f"{h} has no inverse in H"

    if len(R.factorization) != R.kernel_order:
        return "factorization i*h*j is not unique"

    # normalization: row of j0 = e_H and column of i0 = e_H are constantly e_H
    j0 = R.J.index(e) if e in R.J else None
    i0 = R.I.index(e) if e in R.I else None
    if j0 is None or i0 is None:
        return "e_H does not lie in both I and J"
    if any(p != R.h_identity for p in R.sandwich[j0]):
        return "sandwich row of e_H is not constant"
    if any(row[i0] != R.h_identity for row in R.sandwich):
        return "sandwich column of e_H is not constant"

    for x, (ip, hp, jp) in R.factorization.items():
        for y, (iq, hq, jq) in R.factorization.items():
            middle = mul(mul(R.H[hp], R.H[R.sandwich[jp][iq]]), R.H[hq])
            if middle not in h_position:
                return f"sandwich product leaves H at ({x}, {y})"
            if R.factorization.get(mul(x, y)) != (ip, h_position[middle], jq):
                return f"product law fails for {x}*{y}"
    return None


def _build(mul: Callable[[int, int], int], k: int,
           I: List[int], J: List[int], H: List[int], variant: str) -> Optional[ReesStructure]:
    h_position = {h: p for p, h in enumerate(H)}
    identities = [p for p, h in enumerate(H) if mul(h, h) == h]
    if len(identities) != 1:
        return None
    sandwich = []
    for j in J:
        row = []
        for i in I:
            p = h_position.get(mul(j, i))
            if p is None:
                return None
            row.append(p)
        sandwich.append(tuple(row))

    factorization: Dict[int, Tuple[int, int, int]] = {}
    for ip, i in enumerate(I):
        for hp, h in enumerate(H):
            ih = mul(i, h)
            for jp, j in enumerate(J):
                factorization.setdefault(mul(ih, j), (ip, hp, jp))

    return ReesStructure(
        k=k, I=tuple(I), J=tuple(J), H=tuple(H), h_identity=identities[0],
        sandwich=tuple(sandwich), factorization=factorization, h_variant=variant,
    )


def min_ideal(S: SemigroupTable, verify: Optional[bool] = None,
              counter: Optional[LookupCounter] = None) -> ReesStructure:
    """
    Rees structure of the minimal ideal K(S) in O(|S|) products.

    k is the product of all elements in index order; I and J are the
    idempotents of Sk and kS, and H = kSk. With verification on, every
    invariant of the structure is checked and H is widened by k*k if needed.
    """
    verify = settings.VERIFY_STRUCTURE if verify is None else verify
    mul = S.multiplier(counter)
    n = S.order

    k = 0
    for x in range(1, n):
        k = mul(k, x)

    left_ideal = dedupe_in_order((mul(x, k) for x in range(n)), n)
    right_ideal = dedupe_in_order((mul(k, x) for x in range(n)), n)
    I = sorted(x for x in left_ideal if mul(x, x) == x)
    J = sorted(x for x in right_ideal if mul(x, x) == x)
    H = sorted(dedupe_in_order((mul(kx, k) for kx in right_ideal), n))

    attempts = [(H, H_FROM_KSK)]
    kk = mul(k, k)
    if kk not in H:
        attempts.append((sorted(H + [kk]), H_WITH_KK))

    failures = []
    for candidate_h, variant in attempts:
        structure = _build(mul, k, I, J, candidate_h, variant)
        if structure is None:
            failures.append(f"{variant}: H has no unique idempotent or sandwich leaves H")
            continue
        if not verify:
            return structure
        problem = _verify(mul, structure)
        if problem is None:
            if variant != H_FROM_KSK:
                debug_log(f"min_ideal needed H = {variant} for order {n}")
            return structure
        failures.append(f"{variant}: {problem}")

    raise StructureVerificationFailed("Minimal ideal structure failed verification: " + "; ".join(failures))


def min_ideal_bruteforce(S: SemigroupTable, max_order: Optional[int] = None) -> FrozenSet[int]:
    """K(S) as the intersection of the principal ideals S1 a S1 over all a."""
    cap = settings.BRUTEFORCE_IDEAL_MAX_ORDER if max_order is None else max_order
    if S.order > cap:
        raise OrderTooLarge(S.order, cap, "min_ideal_bruteforce")
    table = S.table
    kernel = np.ones(S.order, dtype=bool)
    for a in range(S.order):
        ideal = np.zeros(S.order, dtype=bool)
        ideal[a] = True
        ideal[table[:, a]] = True
        ideal[table[a, :]] = True
        ideal[table[table[:, a], :]] = True
        kernel &= ideal
    return frozenset(np.flatnonzero(kernel).tolist())


def is_k_thin(R: ReesStructure) -> bool:
    """K(S) is left-simple or right-simple."""
    return len(R.I) == 1 or len(R.J) == 1


def quotient_by_min_ideal(S: SemigroupTable, verify: Optional[bool] = None) -> SemigroupTable:
    """
    The Rees quotient S/K(S): K(S) collapses to a single zero.

    Elements keep their relative order; the zero sits where the least
    element of K(S) would.
    """
    kernel = min_ideal(S, verify=verify).kernel
    zero = kernel[0]
    kept = sorted(set(range(S.order)) - set(kernel) | {zero})
    relabel = np.full(S.order, -1, dtype=np.int64)
    relabel[kept] = np.arange(len(kept))
    relabel[kernel] = relabel[zero]
    return SemigroupTable.from_trusted(relabel[S.table[np.ix_(kept, kept)]])
