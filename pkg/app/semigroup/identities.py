# filename: app/semigroup/identities.py
import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import SemigroupError, TooManyVariables

from .table import SemigroupTable


@dataclass(frozen=True)
class WordEquation:
    """An identity lhs = rhs between words in variables 0..v-1."""
    lhs: Tuple[int, ...]
    rhs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(int(x) for x in self.lhs))
        object.__setattr__(self, "rhs", tuple(int(x) for x in self.rhs))
        if not self.lhs or not self.rhs:
            raise SemigroupError("Both sides of an equation must be nonempty words")
        used = set(self.lhs) | set(self.rhs)
        if used != set(range(len(used))):
            raise SemigroupError(
                f"Variables must be numbered contiguously from 0, got {sorted(used)}"
            )

    @property
    def variable_count(self) -> int:
        return len(set(self.lhs) | set(self.rhs))

    @property
    def leading_variables_differ(self) -> bool:
        return self.lhs[0] != self.rhs[0]

    @classmethod
    def parse(cls, text: str) -> "WordEquation":
        """Parses 'xy=yx' style text; letters are numbered by first appearance."""
        if text.count("=") != 1:
            raise SemigroupError(f"Expected exactly one '=' in {text!r}")
        left_text, right_text = (side.strip() for side in text.split("="))
        numbering = {}
        for letter in left_text + right_text:
            if not letter.isalpha():
                raise SemigroupError(f"Unexpected character {letter!r} in {text!r}")
            numbering.setdefault(letter, len(numbering))
        return cls(tuple(numbering[c] for c in left_text), tuple(numbering[c] for c in right_text))


COMMUTATIVITY = WordEquation((0, 1), (1, 0))


def _evaluate(rows: List[List[int]], word: Sequence[int], values: Sequence[int]) -> int:
    result = values[word[0]]
    for variable in word[1:]:
        result = rows[result][values[variable]]
    return result


def satisfies_identity(S: SemigroupTable, eq: WordEquation,
                       max_variables: Optional[int] = None) -> bool:
    """True iff eq holds for every substitution of elements of S."""
    cap = settings.IDENTITY_MAX_VARIABLES if max_variables is None else max_variables
    if eq.variable_count > cap:
        raise TooManyVariables(eq.variable_count, cap)
    rows = S.rows
    for values in itertools.product(range(S.order), repeat=eq.variable_count):
        if _evaluate(rows, eq.lhs, values) != _evaluate(rows, eq.rhs, values):
            return False
    return True


def is_commutative(S: SemigroupTable) -> bool:
    return bool(np.array_equal(S.table, S.table.T))


def left_zeros(S: SemigroupTable) -> List[int]:
    """Elements z with zx = z for all x."""
    labels = np.arange(S.order)
    return np.flatnonzero((S.table == labels[:, None]).all(axis=1)).tolist()


def right_zeros(S: SemigroupTable) -> List[int]:
    """Elements z with xz = z for all x."""
    labels = np.arange(S.order)
    return np.flatnonzero((S.table == labels[None, :]).all(axis=0)).tolist()


def zero_element(S: SemigroupTable) -> Optional[int]:
    both = set(left_zeros(S)) & set(right_zeros(S))
    return min(both) if both else None


def is_regular(S: SemigroupTable) -> bool:
    """Every y has some x with yxy = y."""
    table = S.table
    labels = np.arange(S.order)
    # yxy[y, x] = (yx)y
    yxy = table[table, labels[:, None]]
    return bool((yxy == labels[:, None]).any(axis=1).all())
