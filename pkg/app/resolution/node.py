# filename: app/resolution/node.py
from collections import Counter, deque
from typing import Dict, List, Optional, Tuple

from app.core.config import settings
from app.core.errors import ResourceCapExceeded
from app.core.utils import debug_log
from app.linalg.abelian import FinAbGroup, direct_sum
from app.linalg.homology import segment_homology
from app.linalg.lattice import EchelonLattice, SparseVector, kernel_of_columns
from app.structure.disjoint_set import DisjointSetForest

from .cover import cover_by_mapping
from .modules import BoundaryMatrix, SummandModule


class ResolutionNode:
    """
    One covering step: the boundary from C_i onto a block of C_(i-1).

    children[k] = (block, child) where block lists the domain summands whose
    kernel part the child covers; the same child may appear several times.
    homology_cache maps a shift to the homology that many levels below.
    """

    def __init__(self, boundary: BoundaryMatrix):
        self.boundary = boundary
        self.children: Optional[List[Tuple[Tuple[int, ...], "ResolutionNode"]]] = None
        self.homology_cache: Dict[int, FinAbGroup] = {}

    @property
    def domain(self) -> SummandModule:
        return self.boundary.domain

    @property
    def expanded(self) -> bool:
        return self.children is not None

    def child_columns(self) -> List[SparseVector]:
        """Every child's Z-linear columns, written over this node's domain basis."""
        columns = []
        for block, child in self.children:
            embedding = block_embedding(self.domain, block)
            for column in child.boundary.int_columns:
                columns.append({embedding[index]: value for index, value in column.items()})
        return columns

    def check_exact(self) -> bool:
        """The children's images together span exactly the kernel of this boundary."""
        if self.children is None:
            raise ValueError("Children have not been computed")
        kernel = EchelonLattice()
        for row in kernel_of_columns(self.boundary.int_columns):
            kernel.add(row)
        image = EchelonLattice()
        for column in self.child_columns():
            image.add(column)
        return kernel.hermite_rows() == image.hermite_rows()

    def __repr__(self) -> str:
        return (f"ResolutionNode(domain={self.domain.idempotents}, "
                f"codomain={self.boundary.codomain.idempotents})")


class NodeCache:
    """Nodes by the literal key (domain idempotents, codomain idempotents, columns)."""

    def __init__(self, max_nodes: Optional[int] = None):
        self.max_nodes = settings.MAX_RESOLUTION_NODES if max_nodes is None else max_nodes
        self.nodes: Dict[tuple, ResolutionNode] = {}
        self.hits = 0

    def __len__(self) -> int:
        return len(self.nodes)

    def get_or_create(self, boundary: BoundaryMatrix) -> ResolutionNode:
        key = boundary.key
        node = self.nodes.get(key)
        if node is not None:
            self.hits += 1
            return node
        if len(self.nodes) >= self.max_nodes:
            raise ResourceCapExceeded("resolution nodes", len(self.nodes) + 1, self.max_nodes)
        node = ResolutionNode(boundary)
        self.nodes[key] = node
        return node


def block_embedding(C: SummandModule, block: Tuple[int, ...]) -> List[int]:
    """Index in C of each basis element of the module on the summands in block."""
    embedding = []
    for j in block:
        start = C.offsets[j]
        embedding.extend(range(start, start + len(C.bases[j])))
    return embedding


def make_children(node: ResolutionNode, cache: NodeCache, max_rank: Optional[int] = None) -> None:
    """
    Covers the kernel of the node's boundary, one independent block at a time.

    Summands sharing support in a Hermite kernel vector are merged in a
    disjoint-set forest; each block's vectors are moved onto the block's own
    module and covered, and the cache is consulted for the resulting map.
    """
    cap = settings.MAX_NODE_RANK if max_rank is None else max_rank
    domain = node.domain
    if domain.rank > cap:
        raise ResourceCapExceeded("node Z-rank", domain.rank, cap)

    kernel_rows = kernel_of_columns(node.boundary.int_columns)
    forest = DisjointSetForest(domain.summand_count)
    for row in kernel_rows:
        summands = sorted({domain.summand_of[index] for index in row})
        for j in summands[1:]:
            forest.union(summands[0], j)

    by_root: Dict[int, List[SparseVector]] = {}
    for row in kernel_rows:
        by_root.setdefault(forest.find(domain.summand_of[min(row)]), []).append(row)

    children = []
    for block in forest.components():
        vectors = by_root.get(forest.find(block[0]))
        if not vectors:
            continue
        block = tuple(block)
        embedding = block_embedding(domain, block)
        position = {index: p for p, index in enumerate(embedding)}
        block_module = domain.ring.module(domain.idempotents[j] for j in block)
        moved = [{position[index]: value for index, value in row.items()} for row in vectors]
        _, boundary = cover_by_mapping(block_module, moved)
        children.append((block, cache.get_or_create(boundary)))
    node.children = children


def compute_homology(node: ResolutionNode) -> FinAbGroup:
    """
    Homology at this node's domain after tensoring with Z: the augmented
    boundary going out, and the augmented children placed on their blocks
    coming in.
    """
    out_columns = node.boundary.augmentation_columns
    in_columns = []
    for block, child in node.children:
        for sums in child.boundary.augmentation_columns:
            in_columns.append({block[i]: value for i, value in sums.items()})
    return segment_homology(out_columns, in_columns)


def _depths(root: ResolutionNode, cache: NodeCache, shift: int) -> Dict[ResolutionNode, int]:
    """Least depth of each node within shift+1 levels, expanding every node at depth <= shift."""
    depths = {root: 0}
    queue = deque([root])
    while queue:
        node = queue.popleft()
        depth = depths[node]
        if depth > shift:
            continue
        if not node.expanded:
            make_children(node, cache)
        for _, child in node.children:
            if child not in depths:
                depths[child] = depth + 1
                queue.append(child)
    return depths


def homology_with_shift(node: ResolutionNode, shift: int, cache: NodeCache,
                        max_shift: Optional[int] = None) -> FinAbGroup:
    """
    Homology `shift` levels below the node, memoised per (node, shift).

    Shift 0 is computed locally; shift s is the direct sum of the children
    at shift s-1, with repeated children counted by multiplicity. All shifts
    up to the requested one are filled in level by level.
    """
    if shift < 0:
        raise ValueError(f"Shift must be nonnegative, got {shift}")
    max_shift = settings.MAX_SHIFT if max_shift is None else max_shift
    if shift > max_shift:
        raise ResourceCapExceeded("shift", shift, max_shift)
    cached = node.homology_cache.get(shift)
    if cached is not None:
        return cached

    depths = _depths(node, cache, shift)
    debug_log(f"resolution graph: {len(depths)} nodes within depth {shift}, {cache.hits} cache hits")
    for level in range(shift + 1):
        for current, depth in depths.items():
            if depth > shift - level or level in current.homology_cache:
                continue
            if level == 0:
                current.homology_cache[0] = compute_homology(current)
            else:
                multiplicity = Counter(child for _, child in current.children)
                current.homology_cache[level] = direct_sum(
                    (child.homology_cache[level - 1], count) for child, count in multiplicity.items()
                )
    return node.homology_cache[shift]
