# filename: app/linalg/abelian.py
import bisect
import re
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from sympy import factorint

from app.core.errors import SemigroupError
from app.core.utils import int_text

_RANK_TOKEN = re.compile(r"^Z(?:\^(\d+|\(2\^\d+\)))?$")
_CYCLIC_TOKEN = re.compile(r"^C_(\d+)(?:\^(\d+|\(2\^\d+\)))?$")


@lru_cache(maxsize=4096)
def _prime_powers(d: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted(factorint(d).items()))


def _exponent_text(text: str) -> int:
    if text.startswith("("):
        return 2 ** int(text[3:-1])
    return int(text)


@dataclass(frozen=True)
class FinAbGroup:
    """
    Z^rank x C_d1 x ... x C_dt in invariant-factor form.

    torsion is run-length encoded as ((d, multiplicity), ...) with d ascending,
    each d >= 2 dividing the next; multiplicities may be huge, like the rank.
    Two groups are isomorphic iff their fields are equal.
    """
    rank: int = 0
    torsion: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def trivial(cls) -> "FinAbGroup":
        return cls()

    @classmethod
    def free(cls, rank: int) -> "FinAbGroup":
        return cls(rank=rank)

    @classmethod
    def cyclic(cls, d: int) -> "FinAbGroup":
        return cls.from_factors(0, [(d, 1)])

    @classmethod
    def from_invariants(cls, rank: int, invariants: Iterable[int]) -> "FinAbGroup":
        """Accepts any list of cyclic orders; zeros count towards the rank."""
        factors = []
        for d in invariants:
            d = abs(int(d))
            if d == 0:
                rank += 1
            elif d > 1:
                factors.append((d, 1))
        return cls.from_factors(rank, factors)

    @classmethod
    def from_factors(cls, rank: int, factors: Iterable[Tuple[int, int]]) -> "FinAbGroup":
        """
        Canonical form of Z^rank x (sum of mult copies of C_d).

        Factors are split into prime powers and regrouped: the t-th largest
        invariant factor takes the t-th largest power of every prime.
        """
        if rank < 0:
            raise SemigroupError(f"Rank must be nonnegative, got {rank}")
        exponent_counts: Dict[int, Dict[int, int]] = defaultdict(lambda: defaultdict(int))
        for d, mult in factors:
            if d < 1 or mult < 0:
                raise SemigroupError(f"Invalid cyclic factor C_{d} with multiplicity {mult}")
            if d == 1 or mult == 0:
                continue
            for p, e in _prime_powers(d):
                exponent_counts[p][e] += mult

        # per prime: exponents in descending order and the positions where each run ends
        runs = {}
        boundaries = set()
        for p, counts in exponent_counts.items():
            exponents = sorted(counts, reverse=True)
            ends = []
            total = 0
            for e in exponents:
                total += counts[e]
                ends.append(total)
            runs[p] = (exponents, ends)
            boundaries.update(ends)

        chain: List[Tuple[int, int]] = []
        start = 0
        for end in sorted(boundaries):
            d = 1
            for p, (exponents, ends) in runs.items():
                run = bisect.bisect_right(ends, start)
                if run < len(exponents):
                    d *= p ** exponents[run]
            chain.append((d, end - start))
            start = end
        chain.reverse()
        return cls(rank=rank, torsion=tuple(chain))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def invariant_factors(self) -> List[int]:
        """The torsion chain written out; only sensible for modest multiplicities."""
        return [d for d, mult in self.torsion for _ in range(mult)]

    @property
    def torsion_order(self) -> int:
        order = 1
        for d, mult in self.torsion:
            order *= d ** mult
        return order

    def __add__(self, other: "FinAbGroup") -> "FinAbGroup":
        return direct_sum([(self, 1), (other, 1)])

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{int_text(self.rank)}")
        for d, mult in self.torsion:
            parts.append(f"C_{d}" if mult == 1 else f"C_{d}^{int_text(mult)}")
        return " x ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> "FinAbGroup":
        """Inverse of str(): '0', 'Z^9 x C_1494640', 'C_2^2', ..."""
        text = text.strip()
        if text == "0":
            return cls.trivial()
        rank = 0
        factors = []
        for token in text.split(" x "):
            token = token.strip()
            rank_match = _RANK_TOKEN.match(token)
            if rank_match:
                rank += _exponent_text(rank_match.group(1)) if rank_match.group(1) else 1
                continue
            cyclic_match = _CYCLIC_TOKEN.match(token)
            if cyclic_match:
                exponent = cyclic_match.group(2)
                factors.append((int(cyclic_match.group(1)), _exponent_text(exponent) if exponent else 1))
                continue
            raise SemigroupError(f"Cannot parse group factor {token!r} in {text!r}")
        return cls.from_factors(rank, factors)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "torsion": [[d, mult] for d, mult in self.torsion],
            "text": str(self),
        }


def direct_sum(groups: Iterable[Tuple[FinAbGroup, int]]) -> FinAbGroup:
    """Sum of mult copies of each group; multiplicities are arbitrary integers >= 0."""
    rank = 0
    factors = []
    for group, mult in groups:
        if mult < 0:
            raise SemigroupError(f"Multiplicity must be nonnegative, got {mult}")
        if mult == 0:
            continue
        rank += group.rank * mult
        factors.extend((d, m * mult) for d, m in group.torsion)
    return FinAbGroup.from_factors(rank, factors)
