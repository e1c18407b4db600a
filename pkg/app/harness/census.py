# filename: app/harness/census.py
import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Set, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from app.core.config import settings
from app.core.errors import OrderTooLarge, SemigroupError
from app.core.utils import debug_log
from app.resolution.homology import get_homology, homology_route
from app.semigroup.canonical import canonical_key
from app.semigroup.table import SemigroupTable
from app.structure.min_ideal import is_k_thin, min_ideal

UNSET = -1


def _consistent(t: List[List[int]], a: int, b: int, n: int) -> bool:
    """
    Checks every triple whose two bracketings are both defined and which
    reads cell (a, b) in one of its four lookups.
    """
    triples: Set[Tuple[int, int, int]] = set()
    for z in range(n):
        triples.add((a, b, z))       # (ab)z
        triples.add((z, a, b))       # z(ab)
    for x in range(n):
        for y in range(n):
            if t[x][y] == a:
                triples.add((x, y, b))   # (xy)b with xy = a
            if t[x][y] == b:
                triples.add((a, x, y))   # a(xy) with xy = b
    for x, y, z in triples:
        xy = t[x][y]
        yz = t[y][z]
        if xy == UNSET or yz == UNSET:
            continue
        left = t[xy][z]
        right = t[x][yz]
        if left != UNSET and right != UNSET and left != right:
            return False
    return True


def _complete(t: List[List[int]], cells: List[Tuple[int, int]], position: int, n: int) -> Iterator[List[List[int]]]:
    if position == len(cells):
        yield t
        return
    a, b = cells[position]
    for value in range(n):
        t[a][b] = value
        if _consistent(t, a, b, n):
            yield from _complete(t, cells, position + 1, n)
    t[a][b] = UNSET


def enumerate_tables(n: int, first_row: Optional[Tuple[int, ...]] = None) -> Iterator[np.ndarray]:
    """
    Every associative table on n labelled elements, filled cell by cell in
    row-major order and pruned as soon as a defined triple fails.
    Restricted to one first row when given.
    """
    t = [[UNSET] * n for _ in range(n)]
    cells = [(a, b) for a in range(n) for b in range(n)]
    start = 0
    if first_row is not None:
        for b, value in enumerate(first_row):
            t[0][b] = value
            if not _consistent(t, 0, b, n):
                return
        start = n
    for filled in _complete(t, cells, start, n):
        yield np.array(filled, dtype=np.int64)


def _shard_keys(n: int, first_row: Tuple[int, ...]) -> Set[Tuple[int, ...]]:
    keys = set()
    for table in enumerate_tables(n, first_row):
        keys.add(canonical_key(SemigroupTable.from_trusted(table)))
    return keys


def census_keys(n: int, workers: int = 1, progress: bool = False) -> List[Tuple[int, ...]]:
    """Canonical keys of all semigroups of order n up to (anti-)isomorphism."""
    shards = list(itertools.product(range(n), repeat=n))
    keys: Set[Tuple[int, ...]] = set()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_shard_keys, [n] * len(shards), shards)
            for shard in tqdm(results, total=len(shards), desc=f"order {n}", disable=not progress,
                              dynamic_ncols=True, ascii=True):
                keys.update(shard)
    else:
        for first_row in tqdm(shards, desc=f"order {n}", disable=not progress, dynamic_ncols=True, ascii=True):
            keys.update(_shard_keys(n, first_row))
    return sorted(keys)


@dataclass(frozen=True)
class CensusEntry:
    table: SemigroupTable
    signature: Tuple[str, ...]
    k_thin: bool
    route: str


@dataclass
class CensusReport:
    order: int
    max_dim: int
    entries: List[CensusEntry] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.entries)

    @property
    def non_k_thin_count(self) -> int:
        return sum(1 for entry in self.entries if not entry.k_thin)

    def signature_counts(self) -> Dict[Tuple[str, ...], int]:
        """Number of classes per homology signature, most common first."""
        counts = Counter(entry.signature for entry in self.entries)
        return dict(sorted(counts.items(), key=lambda item: (-item[1], item[0])))

    def to_dataframe(self) -> pd.DataFrame:
        rows = [
            {f"H{i + 1}": text for i, text in enumerate(signature)} | {"count": count}
            for signature, count in self.signature_counts().items()
        ]
        columns = [f"H{i + 1}" for i in range(self.max_dim)] + ["count"]
        return pd.DataFrame(rows, columns=columns)

    def to_text(self) -> str:
        lines = [
            f"Order {self.order}: {self.class_count} classes up to isomorphism and anti-isomorphism",
            f"Not K-thin: {self.non_k_thin_count}",
            "",
            self.to_dataframe().to_string(index=False),
        ]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "max_dim": self.max_dim,
            "class_count": self.class_count,
            "non_k_thin_count": self.non_k_thin_count,
            "signatures": [
                {"homology": list(signature), "count": count}
                for signature, count in self.signature_counts().items()
            ],
            "classes": [
                {"table": entry.table.to_lists(), "homology": list(entry.signature),
                 "k_thin": entry.k_thin, "route": entry.route}
                for entry in self.entries
            ],
        }


def run_census(order: int, extended: bool = False, max_dim: Optional[int] = None,
               workers: Optional[int] = None, progress: bool = False) -> CensusReport:
    """
    Homology signatures H_1..H_max_dim of every semigroup of the given order,
    up to isomorphism and anti-isomorphism.
    """
    cap = settings.CENSUS_EXTENDED_MAX_ORDER if extended else settings.CENSUS_MAX_ORDER
    if order < 1:
        raise SemigroupError(f"Census order must be positive, got {order}")
    if order > cap:
        raise OrderTooLarge(order, cap, "census" if extended else "census without --extended")
    max_dim = settings.CENSUS_MAX_DIM if max_dim is None else max_dim
    workers = settings.CENSUS_WORKERS if workers is None else workers

    keys = census_keys(order, workers=workers, progress=progress)
    debug_log(f"census order {order}: {len(keys)} classes")
    report = CensusReport(order=order, max_dim=max_dim)
    for key in tqdm(keys, desc="homology", disable=not progress, dynamic_ncols=True, ascii=True):
        S = SemigroupTable.from_trusted(np.array(key, dtype=np.int64).reshape(order, order))
        signature = tuple(str(group) for group in get_homology(S, max_dim))
        report.entries.append(CensusEntry(
            table=S,
            signature=signature,
            k_thin=is_k_thin(min_ideal(S)),
            route=homology_route(S),
        ))
    return report
