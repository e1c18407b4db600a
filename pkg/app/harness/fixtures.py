# filename: app/harness/fixtures.py
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import yaml

from app.core.errors import SemigroupError
from app.linalg.abelian import FinAbGroup
from app.semigroup.constructors import (
    construct_cyclic_group,
    construct_join,
    construct_left_zero,
    construct_rectangular_band,
)
from app.semigroup.table import SemigroupTable
from app.semigroup.table_text import parse_table

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
CATALOG_FILE = FIXTURE_DIR / "catalog.yaml"

# x_11, x_12, x_21, x_22 of Rect_2^2 sit at 0..3 (index 2*i + j, zero-based).
_RECT_INDEX = [(0, 0), (0, 1), (1, 0), (1, 1)]


def construct_rect_with_left_identities(count: int) -> SemigroupTable:
    """
    Rect_2^2 plus letters q_1..q_count at indices 4.. with x q = x_i1,
    q x = x and q_k q_l = q_k.
    """
    n = 4 + count
    table = np.empty((n, n), dtype=np.int64)
    for a, (i, _) in enumerate(_RECT_INDEX):
        for b, (_, l) in enumerate(_RECT_INDEX):
            table[a, b] = 2 * i + l
        table[a, 4:] = 2 * i
    for q in range(4, n):
        table[q, :4] = np.arange(4)
        table[q, 4:] = q
    return SemigroupTable.from_trusted(table)


def construct_lettered_band(extra_letters: int) -> SemigroupTable:
    """
    Rect_2^2 plus extra letters that all carry the indices of x_11; every
    product follows a_ij b_kl = x_il.
    """
    index = _RECT_INDEX + [(0, 0)] * extra_letters
    n = len(index)
    table = np.array([[2 * i + l for (_, l) in index] for (i, _) in index], dtype=np.int64).reshape(n, n)
    return SemigroupTable.from_trusted(table)


RECIPES: Dict[str, Callable[..., SemigroupTable]] = {
    "cyclic_group": construct_cyclic_group,
    "left_zero": construct_left_zero,
    "rectangular_band": construct_rectangular_band,
    "no_zero": lambda: construct_rect_with_left_identities(1),
    "sphere_3": lambda: construct_rect_with_left_identities(2),
    "zero_z_z_z": lambda: construct_lettered_band(1),
    "two_power": lambda: construct_lettered_band(2),
    "join_cyclic_2": lambda: construct_join(construct_cyclic_group(2), 2),
}


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    max_dim: int
    expected: Tuple[FinAbGroup, ...]
    table_file: Optional[str] = None
    recipe: Optional[str] = None
    args: Tuple[int, ...] = ()
    gs_order: Optional[int] = None
    slow: bool = False

    @property
    def source(self) -> str:
        if self.table_file:
            return self.table_file
        args = ", ".join(str(a) for a in self.args)
        return f"{self.recipe}({args})"

    def build(self) -> SemigroupTable:
        if self.table_file:
            return parse_table((FIXTURE_DIR / self.table_file).read_text())
        return RECIPES[self.recipe](*self.args)


def _parse_entry(entry: dict) -> Fixture:
    try:
        name = entry["name"]
        expected = tuple(FinAbGroup.parse(text) for text in entry["expected"])
    except KeyError as e:
        raise SemigroupError(f"Fixture entry is missing {e}")
    if bool(entry.get("table")) == bool(entry.get("recipe")):
        raise SemigroupError(f"Fixture {name!r} needs exactly one of 'table' or 'recipe'")
    if entry.get("recipe") and entry["recipe"] not in RECIPES:
        raise SemigroupError(f"Fixture {name!r} names an unknown recipe {entry['recipe']!r}")
    max_dim = int(entry.get("max_dim", len(expected)))
    if max_dim != len(expected):
        raise SemigroupError(f"Fixture {name!r} lists {len(expected)} groups for max_dim {max_dim}")
    return Fixture(
        name=name,
        description=entry.get("description", ""),
        max_dim=max_dim,
        expected=expected,
        table_file=entry.get("table"),
        recipe=entry.get("recipe"),
        args=tuple(entry.get("args", ())),
        gs_order=entry.get("gs_order"),
        slow=bool(entry.get("slow", False)),
    )


@lru_cache(maxsize=None)
def load_catalog() -> Tuple[Fixture, ...]:
    with open(CATALOG_FILE, "r", encoding="utf-8") as handle:
        data = yaml.safe_load(handle)
    return tuple(_parse_entry(entry) for entry in data["fixtures"])


def fixture_names() -> List[str]:
    return [fixture.name for fixture in load_catalog()]


def get_fixture(name: str) -> Fixture:
    for fixture in load_catalog():
        if fixture.name == name:
            return fixture
    raise KeyError(f"Unknown fixture {name!r}; available: {', '.join(fixture_names())}")
