# filename: app/structure/group_completion.py
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from sympy import factorint

from app.core.config import settings
from app.core.errors import ElementOutsideGroup, NotAGroup
from app.linalg.abelian import FinAbGroup
from app.linalg.homology import cokernel
from app.semigroup.table import LookupCounter, SemigroupTable

from .disjoint_set import DisjointSetForest
from .min_ideal import min_ideal


@dataclass(frozen=True)
class GroupTable:
    """A subgroup of an ambient table: its elements, identity e and inverse map sigma."""
    ambient: SemigroupTable
    elements: Tuple[int, ...]
    identity: int
    inverse: Dict[int, int] = field(compare=False)
    position: Dict[int, int] = field(compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.position


@dataclass(frozen=True)
class QuotientGroup:
    """
    The group completion GS as representatives R in S and a retraction rho.

    rho[x] is the index in `representatives` of the class of x; the product of
    classes r1, r2 is rho[r1 * r2].
    """
    ambient: SemigroupTable
    representatives: Tuple[int, ...]
    rho: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.representatives)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def product(self, i: int, j: int) -> int:
        return self.rho[self.ambient.product(self.representatives[i], self.representatives[j])]

    def cayley_table(self) -> np.ndarray:
        reps = np.asarray(self.representatives, dtype=np.int64)
        rho = np.asarray(self.rho, dtype=np.int64)
        return rho[self.ambient.table[np.ix_(reps, reps)]]

    def as_table(self) -> SemigroupTable:
        return SemigroupTable.from_trusted(self.cayley_table())


def identity_and_inverses(S: SemigroupTable, elements: Optional[Iterable[int]] = None,
                          counter: Optional[LookupCounter] = None) -> GroupTable:
    """
    Identity and inverses of a group inside S, in O(|H|) products.

    The identity is the unique idempotent. For each h without a known inverse
    the powers h, h^2, .. are walked until one, h^k, has a known inverse;
    then sigma(h^l) = sigma(h^k) * h^(k-l) for every power on the walk.
    """
    mul = S.multiplier(counter)
    members = tuple(sorted(set(elements))) if elements is not None else tuple(range(S.order))
    position = {h: p for p, h in enumerate(members)}

    idempotent_list = [h for h in members if mul(h, h) == h]
    if len(idempotent_list) != 1:
        raise NotAGroup(f"Expected exactly one idempotent, found {len(idempotent_list)}")
    e = idempotent_list[0]

    sigma = {e: e}
    for h in members:
        if h in sigma:
            continue
        powers = [h]
        x = mul(h, h)
        while x not in sigma:
            if x not in position or len(powers) >= len(members):
                raise NotAGroup(f"Powers of {h} never reach an invertible element")
            powers.append(x)
            x = mul(x, h)
        top = sigma[x]
        for power, complement in zip(powers, reversed(powers)):
            sigma[power] = mul(top, complement)

    for h in members:
        s = sigma[h]
        if s not in position or mul(h, s) != e or mul(s, h) != e:
            raise NotAGroup(f"{h} has no inverse")
        if mul(e, h) != h or mul(h, e) != h:
            raise NotAGroup(f"{e} is not an identity for {h}")

    return GroupTable(ambient=S, elements=members, identity=e, inverse=sigma, position=position)


def generated_subgroup(G: GroupTable, X: Iterable[int],
                       counter: Optional[LookupCounter] = None) -> List[int]:
    """
    <X> as the component of e in a disjoint-set forest.

    For each x not yet in e's component every h is merged with h*x, so the
    components are the left cosets of the subgroup generated so far and each
    effective x at least doubles them.
    """
    mul = G.ambient.multiplier(counter)
    position = G.position
    forest = DisjointSetForest(G.order)
    e_position = position[G.identity]
    for x in X:
        if x not in position:
            raise ElementOutsideGroup(x)
        if forest.same_component(position[x], e_position):
            continue
        for h in G.elements:
            forest.union(position[h], position[mul(h, x)])
    return [h for h in G.elements if forest.same_component(position[h], e_position)]


def find_generators(G: GroupTable) -> List[int]:
    """A generating set, chosen greedily in ascending element order."""
    generators: List[int] = []
    current = {G.identity}
    for h in G.elements:
        if h not in current:
            generators.append(h)
            current = set(generated_subgroup(G, generators))
            if len(current) == G.order:
                break
    return generators


def group_completion(S: SemigroupTable, verify: Optional[bool] = None,
                     counter: Optional[LookupCounter] = None) -> QuotientGroup:
    """
    GS = H/N, where N is the normal subgroup generated by the sandwich entries.

    Representatives are the least element of each coset of N in H, and every
    x in S is sent to the class of e*x*e.
    """
    R = min_ideal(S, verify=verify, counter=counter)
    mul = S.multiplier(counter)
    G = identity_and_inverses(S, R.H, counter=counter)
    e = G.identity

    sandwich_values = sorted({R.H[p] for row in R.sandwich for p in row})
    conjugates = []
    for h in R.H:
        h_inverse = G.inverse[h]
        for value in sandwich_values:
            conjugates.append(mul(mul(h, value), h_inverse))
    N = generated_subgroup(G, conjugates, counter=counter)

    class_of: Dict[int, int] = {}
    representatives: List[int] = []
    for h in R.H:
        if h in class_of:
            continue
        class_index = len(representatives)
        representatives.append(h)
        for m in N:
            class_of[mul(h, m)] = class_index

    rho = tuple(class_of[mul(mul(e, x), e)] for x in range(S.order))
    return QuotientGroup(ambient=S, representatives=tuple(representatives), rho=rho)


def _commutator_quotient(G: GroupTable) -> Tuple[np.ndarray, int]:
    """Cayley table of G/[G, G] with classes numbered by least representative."""
    mul = G.ambient.multiplier()
    commutators = {
        mul(mul(a, b), mul(G.inverse[a], G.inverse[b]))
        for a in G.elements for b in G.elements
    }
    C = generated_subgroup(G, sorted(commutators))
    coset_of: Dict[int, int] = {}
    representatives: List[int] = []
    for h in G.elements:
        if h in coset_of:
            continue
        coset_of.update({mul(h, c): len(representatives) for c in C})
        representatives.append(h)
    size = len(representatives)
    table = np.array([[coset_of[mul(a, b)] for b in representatives] for a in representatives],
                     dtype=np.int64).reshape(size, size)
    return table, coset_of[G.identity]


def _abelian_invariants_by_counting(table: np.ndarray, identity: int) -> FinAbGroup:
    """
    Invariants of a finite abelian group from the sizes of its p^k-torsion.

    |A[p^k]| = p^(sum_i min(k, e_i)), so successive quotients count the
    exponents e_i that are >= k.
    """
    order = table.shape[0]
    factors = []
    for p in sorted(factorint(order)):
        powers = np.arange(order)
        previous_log = 0
        at_least = []
        while True:
            raised = np.full(order, identity, dtype=np.int64)
            for _ in range(p):
                raised = table[raised, powers]
            powers = raised
            count = int((powers == identity).sum())
            log = 0
            while count % p == 0:
                count //= p
                log += 1
            at_least.append(log - previous_log)
            if log == previous_log:
                break
            previous_log = log
        for k in range(1, len(at_least)):
            exactly = at_least[k - 1] - at_least[k]
            if exactly:
                factors.append((p ** k, exactly))
    return FinAbGroup.from_factors(0, factors)


def abelianization(Q: QuotientGroup, method: str = "auto") -> FinAbGroup:
    """
    Invariant factors of GS/[GS, GS].

    method "bruteforce" quotients by the commutator subgroup and counts
    torsion; "relations" takes the Smith normal form of the relations
    e_g + e_x - e_gx over a generating set x; "auto" picks by group order.
    """
    G = identity_and_inverses(Q.as_table())
    if G.order == 1:
        return FinAbGroup.trivial()
    if method == "auto":
        small = G.order <= settings.ABELIANIZATION_BRUTEFORCE_MAX_ORDER
        method = "bruteforce" if small else "relations"

    if method == "bruteforce":
        table, identity = _commutator_quotient(G)
        return _abelian_invariants_by_counting(table, identity)
    if method == "relations":
        mul = G.ambient.multiplier()
        generators = find_generators(G)
        relations = np.zeros((G.order, G.order * len(generators)), dtype=object)
        column = 0
        for g in G.elements:
            for x in generators:
                relations[g, column] += 1
                relations[x, column] += 1
                relations[mul(g, x), column] -= 1
                column += 1
        return cokernel(relations)
    raise ValueError(f"Unknown abelianization method {method!r}")
