# filename: app/resolution/modules.py
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from app.core.errors import NotAMonoid
from app.linalg.lattice import SparseVector, dense_from_rows, zero_matrix
from app.semigroup.table import SemigroupTable, idempotents

# A vector as sorted (basis index, coefficient) pairs with no zero coefficients.
SparseTuple = Tuple[Tuple[int, int], ...]


def freeze(vector: SparseVector) -> SparseTuple:
    return tuple(sorted((index, value) for index, value in vector.items() if value))


@dataclass(frozen=True)
class MonoidRingElement:
    """A finite sum of monoid elements with integer coefficients."""
    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coefficients: Dict[int, int]) -> "MonoidRingElement":
        return cls(freeze(coefficients))

    @property
    def augmentation(self) -> int:
        return sum(coefficient for _, coefficient in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for position, (element, coefficient) in enumerate(self.terms):
            sign = "-" if coefficient < 0 else "+"
            size = abs(coefficient)
            term = f"[{element}]" if size == 1 else f"{size}*[{element}]"
            if position == 0:
                parts.append(term if sign == "+" else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
        return " ".join(parts)


class MonoidRing:
    """
    ZM for a finite monoid M, with the Z-bases of the left ideals Me.

    The basis of ZMe is the set Me in ascending element order; bases and
    summand modules are cached per idempotent list.
    """

    def __init__(self, M: SemigroupTable):
        if not M.is_monoid:
            raise NotAMonoid("Resolutions are built over a monoid")
        self.monoid = M
        self.rows = M.rows
        self.order = M.order
        self.identity = M.identity
        self.idempotents = idempotents(M)
        self._bases: Dict[int, Tuple[int, ...]] = {}
        self._modules: Dict[Tuple[int, ...], "SummandModule"] = {}

    def basis(self, e: int) -> Tuple[int, ...]:
        basis = self._bases.get(e)
        if basis is None:
            basis = tuple(sorted({row[e] for row in self.rows}))
            self._bases[e] = basis
        return basis

    def module(self, summand_idempotents: Iterable[int]) -> "SummandModule":
        key = tuple(summand_idempotents)
        module = self._modules.get(key)
        if module is None:
            module = SummandModule(self, key)
            self._modules[key] = module
        return module


class SummandModule:
    """C = ZMe_1 + ... + ZMe_k, a projective left ZM-module with a fixed Z-basis."""

    def __init__(self, ring: MonoidRing, summand_idempotents: Sequence[int]):
        self.ring = ring
        self.idempotents = tuple(summand_idempotents)
        self.bases = [ring.basis(e) for e in self.idempotents]
        self.offsets: List[int] = []
        self.summand_of: List[int] = []
        self.element_of: List[int] = []
        self.positions: List[Dict[int, int]] = []
        for j, basis in enumerate(self.bases):
            self.offsets.append(len(self.element_of))
            self.positions.append({t: p for p, t in enumerate(basis)})
            self.summand_of.extend([j] * len(basis))
            self.element_of.extend(basis)

    @property
    def summand_count(self) -> int:
        return len(self.idempotents)

    @property
    def rank(self) -> int:
        return len(self.element_of)

    def basis_index(self, j: int, t: int) -> int:
        return self.offsets[j] + self.positions[j][t]

    def generator(self, j: int) -> SparseVector:
        """e_j in summand j."""
        return {self.basis_index(j, self.idempotents[j]): 1}

    def __repr__(self) -> str:
        return f"SummandModule(idempotents={self.idempotents}, rank={self.rank})"


def left_action_expand(C: SummandModule, s: int, v: SparseVector) -> SparseVector:
    """s*v: the basis element (j, t) goes to (j, s*t)."""
    row = C.ring.rows[s]
    result: SparseVector = {}
    for index, coefficient in v.items():
        j = C.summand_of[index]
        target = C.offsets[j] + C.positions[j][row[C.element_of[index]]]
        total = result.get(target, 0) + coefficient
        if total:
            result[target] = total
        else:
            del result[target]
    return result


@dataclass(frozen=True)
class BoundaryMatrix:
    """
    A ZM-linear map domain -> codomain, given by the image of each domain
    generator e_j as a vector over the codomain's Z-basis.
    """
    domain: SummandModule
    codomain: SummandModule
    columns: Tuple[SparseTuple, ...]

    @property
    def key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[SparseTuple, ...]]:
        return self.domain.idempotents, self.codomain.idempotents, self.columns

    def column(self, j: int) -> SparseVector:
        return dict(self.columns[j])

    @cached_property
    def int_columns(self) -> List[SparseVector]:
        """Columns of the Z-linear matrix, one per domain basis element (j, t): t * column j."""
        result = []
        for j, basis in enumerate(self.domain.bases):
            v = self.column(j)
            for t in basis:
                result.append(left_action_expand(self.codomain, t, v))
        return result

    @cached_property
    def augmentation_columns(self) -> List[SparseVector]:
        """Per domain summand, the coefficient sum of its column within each codomain summand."""
        summand_of = self.codomain.summand_of
        result = []
        for column in self.columns:
            sums: SparseVector = {}
            for index, coefficient in column:
                i = summand_of[index]
                total = sums.get(i, 0) + coefficient
                if total:
                    sums[i] = total
                else:
                    del sums[i]
            result.append(sums)
        return result

    def right_multiplier(self, i: int, j: int) -> MonoidRingElement:
        """The element a with e_j -> e_j * a from summand j into summand i."""
        start = self.codomain.offsets[i]
        stop = start + len(self.codomain.bases[i])
        return MonoidRingElement.from_dict({
            self.codomain.element_of[index]: coefficient
            for index, coefficient in self.columns[j] if start <= index < stop
        })

    def check_fixed(self) -> bool:
        """Column j is fixed by its idempotent: e_j * v = v."""
        return all(
            left_action_expand(self.codomain, e, self.column(j)) == self.column(j)
            for j, e in enumerate(self.domain.idempotents)
        )


def augmentation_matrix(B: BoundaryMatrix) -> np.ndarray:
    """Augmentation applied to every right multiplier: codomain summands x domain summands."""
    M = zero_matrix(B.codomain.summand_count, B.domain.summand_count)
    for j, sums in enumerate(B.augmentation_columns):
        for i, value in sums.items():
            M[i, j] = value
    return M


def boundary_as_int_matrix(B: BoundaryMatrix) -> np.ndarray:
    """The boundary over the enumerated Z-bases: codomain rank x domain rank."""
    return dense_from_rows(B.int_columns, B.codomain.rank).T
