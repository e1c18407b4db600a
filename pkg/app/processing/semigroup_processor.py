# filename: app/processing/semigroup_processor.py
from collections import deque
from typing import Any, Dict, List

from app.core.config import settings
from app.core.errors import OracleMismatch, SemigroupError
from app.core.utils import warn
from app.nerve.bar_complex import nerve_homology
from app.resolution.homology import build_root, get_homology, homology_route
from app.resolution.node import NodeCache, make_children
from app.semigroup.constructors import adjoin_unit
from app.semigroup.identities import is_commutative, is_regular, left_zeros, right_zeros, zero_element
from app.semigroup.table import SemigroupTable, idempotents
from app.structure.group_completion import abelianization, group_completion
from app.structure.min_ideal import is_k_thin, min_ideal


def process_info(S: SemigroupTable) -> Dict[str, Any]:
    """
    Structural summary of a validated table.

    Returns:
        Dict[str, Any]: order, identity, idempotents, predicates, the Rees
        structure of the minimal ideal, K-thinness, the group completion's
        order and abelianization, and the homology dispatch route.
    """
    R = min_ideal(S)
    Q = group_completion(S)
    return {
        "order": S.order,
        "identity": S.identity,
        "idempotents": idempotents(S),
        "commutative": is_commutative(S),
        "regular": is_regular(S),
        "left_zeros": left_zeros(S),
        "right_zeros": right_zeros(S),
        "zero": zero_element(S),
        "min_ideal": {
            "k": R.k,
            "I": list(R.I),
            "H": list(R.H),
            "J": list(R.J),
            "order": R.kernel_order,
            "h_variant": R.h_variant,
            "sandwich": [[R.H[p] for p in row] for row in R.sandwich],
        },
        "k_thin": is_k_thin(R),
        "group_completion_order": Q.order,
        "abelianization": abelianization(Q),
        "route": homology_route(S),
    }


def process_group_completion(S: SemigroupTable) -> Dict[str, Any]:
    """
    GS as representatives in S, the retraction rho and the Cayley table of
    the classes (indexed by position in the representative list).
    """
    Q = group_completion(S)
    return {
        "order": Q.order,
        "representatives": list(Q.representatives),
        "rho": list(Q.rho),
        "table": Q.cayley_table().tolist(),
        "abelianization": abelianization(Q),
    }


def nerve_within_cap(S: SemigroupTable, max_dim: int) -> bool:
    return S.order ** (max_dim + 1) <= settings.NERVE_MAX_COLUMNS


def process_homology(S: SemigroupTable, max_dim: int, method: str = "resolution") -> Dict[str, Any]:
    """
    H_1..H_max_dim of BS.

    Args:
        method: "resolution", "nerve", or "auto". Auto resolves and then
                checks against the bar complex whenever it fits the column
                cap, raising OracleMismatch on any disagreement.

    Returns:
        Dict[str, Any]: order, max_dim, method, route, the groups, and
        whether the bar complex confirmed them.
    """
    if max_dim < 1:
        raise SemigroupError(f"--max-dim must be at least 1, got {max_dim}")
    route = homology_route(S)
    checked = False
    if method == "nerve":
        groups = nerve_homology(S, max_dim)
    elif method in ("resolution", "auto"):
        groups = get_homology(S, max_dim)
        if method == "auto" and nerve_within_cap(S, max_dim):
            oracle = nerve_homology(S, max_dim)
            for dimension, (ours, theirs) in enumerate(zip(groups, oracle), start=1):
                if ours != theirs:
                    raise OracleMismatch(dimension, str(ours), str(theirs))
            checked = True
        elif method == "auto":
            warn(f"order {S.order}: bar complex to dimension {max_dim} exceeds the cap; not checked")
    else:
        raise SemigroupError(f"Unknown homology method {method!r}")
    return {
        "order": S.order,
        "max_dim": max_dim,
        "method": method,
        "route": route,
        "homology": groups,
        "oracle_checked": checked,
    }


def process_resolution_levels(S: SemigroupTable, levels: int) -> List[Dict[str, Any]]:
    """
    The first levels of the resolution of S (or of S with a unit adjoined
    when S is not a monoid), each boundary given by its right multipliers.
    """
    M = S if S.is_monoid else adjoin_unit(S)
    cache = NodeCache()
    root = build_root(M, cache)
    described = []
    seen = {root}
    queue = deque([(root, 1)])
    while queue:
        node, level = queue.popleft()
        boundary = node.boundary
        described.append({
            "level": level,
            "domain": list(boundary.domain.idempotents),
            "codomain": list(boundary.codomain.idempotents),
            "multipliers": [
                [str(boundary.right_multiplier(i, j)) for j in range(boundary.domain.summand_count)]
                for i in range(boundary.codomain.summand_count)
            ],
        })
        if level >= levels:
            continue
        if not node.expanded:
            make_children(node, cache)
        for _, child in node.children:
            if child not in seen:
                seen.add(child)
                queue.append((child, level + 1))
    return described
