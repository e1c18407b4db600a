import pytest

from app.core.constants import (
    ROUTE_ADJOINED_UNIT,
    ROUTE_CORNER_REDUCTION,
    ROUTE_K_THIN_GROUP,
    ROUTE_K_THIN_PATTERN,
    ROUTE_MONOID,
)
from app.core.errors import NotAMonoid, ResourceCapExceeded
from app.harness.fixtures import construct_rect_with_left_identities
from app.linalg.abelian import FinAbGroup
from app.processing.semigroup_processor import process_resolution_levels
from app.resolution.homology import (
    build_root,
    cyclic_prime_pattern,
    get_homology,
    homology_route,
    klein_pattern,
    resolve,
)
from app.resolution.modules import (
    MonoidRing,
    MonoidRingElement,
    augmentation_matrix,
    boundary_as_int_matrix,
    left_action_expand,
)
from app.resolution.node import NodeCache, homology_with_shift, make_children
from app.semigroup.constructors import (
    adjoin_unit,
    construct_cyclic_group,
    construct_join,
    construct_left_zero,
    construct_rectangular_band,
    direct_product,
)

from .semigroup_test_utils import group_texts, symmetric_group_3


def _as_lists(M):
    return [[int(x) for x in row] for row in M.tolist()]


# --- Modules over the monoid ring ---
def test_monoid_ring_bases():
    ring = MonoidRing(adjoin_unit(construct_left_zero(2)))
    assert ring.idempotents == [0, 1, 2]
    assert ring.basis(2) == (0, 1, 2)
    # left zeros: x*0 = x
    assert ring.basis(0) == (0, 1)
    C = ring.module([2, 0])
    assert C.rank == 5
    assert C.offsets == [0, 3]
    assert C.basis_index(1, 1) == 4
    assert C.generator(1) == {3: 1}


def test_left_action_on_a_module():
    ring = MonoidRing(adjoin_unit(construct_left_zero(2)))
    C = ring.module([2, 0])
    assert left_action_expand(C, 0, {2: 1, 4: 2}) == {0: 1, 3: 2}
    assert left_action_expand(C, 1, {0: 1, 1: -1}) == {}
    assert left_action_expand(C, 2, {4: 5}) == {4: 5}


def test_monoid_ring_needs_identity():
    with pytest.raises(NotAMonoid):
        MonoidRing(construct_left_zero(2))


def test_monoid_ring_element_text():
    assert str(MonoidRingElement.from_dict({0: 1, 1: -1})) == "[0] - [1]"
    assert str(MonoidRingElement.from_dict({2: -3, 0: 0})) == "-3*[2]"
    assert str(MonoidRingElement()) == "0"
    assert MonoidRingElement.from_dict({0: 2, 1: 1}).augmentation == 3


# --- The resolution of C_2 ---
def test_cyclic_group_of_order_two_resolution():
    cache = NodeCache()
    root = build_root(construct_cyclic_group(2), cache)
    assert _as_lists(boundary_as_int_matrix(root.boundary)) == [[1, -1], [-1, 1]]
    assert _as_lists(augmentation_matrix(root.boundary)) == [[0]]
    assert str(root.boundary.right_multiplier(0, 0)) == "[0] - [1]"

    make_children(root, cache)
    [(block, child)] = root.children
    assert block == (0,)
    assert _as_lists(boundary_as_int_matrix(child.boundary)) == [[1, 1], [1, 1]]
    assert _as_lists(augmentation_matrix(child.boundary)) == [[2]]

    make_children(child, cache)
    # the resolution is periodic: the next step is the root again
    assert child.children[0][1] is root
    assert len(cache) == 2
    assert cache.hits >= 1


def test_children_cover_the_kernel_exactly():
    for M in (construct_cyclic_group(3), adjoin_unit(construct_rectangular_band(2, 2)),
              adjoin_unit(construct_left_zero(3))):
        cache = NodeCache()
        node = build_root(M, cache)
        for _ in range(3):
            make_children(node, cache)
            assert node.boundary.check_fixed()
            assert node.check_exact()
            if not node.children:
                break
            node = node.children[0][1]


def test_check_exact_needs_children():
    cache = NodeCache()
    root = build_root(construct_cyclic_group(2), cache)
    with pytest.raises(ValueError):
        root.check_exact()


def test_resolve_cyclic_group():
    assert group_texts(resolve(construct_cyclic_group(2), 6)) == ["C_2", "0", "C_2", "0", "C_2", "0"]


def test_resolve_trivial_monoid():
    assert resolve(construct_cyclic_group(1), 4) == [FinAbGroup.trivial()] * 4


def test_resolve_reuses_the_cache():
    cache = NodeCache()
    first = resolve(construct_cyclic_group(4), 3, cache)
    size = len(cache)
    assert resolve(construct_cyclic_group(4), 3, cache) == first
    assert len(cache) == size


def test_resolve_rejects_bad_dimension():
    with pytest.raises(ValueError):
        resolve(construct_cyclic_group(2), 0)


def test_homology_with_shift_rejects_negative_shift():
    cache = NodeCache()
    root = build_root(construct_cyclic_group(2), cache)
    with pytest.raises(ValueError):
        homology_with_shift(root, -1, cache)


# --- Caps ---
def test_node_cap():
    with pytest.raises(ResourceCapExceeded) as exc_info:
        resolve(construct_cyclic_group(3), 4, NodeCache(max_nodes=1))
    assert exc_info.value.resource == "resolution nodes"


def test_node_rank_cap():
    cache = NodeCache()
    root = build_root(construct_cyclic_group(3), cache)
    with pytest.raises(ResourceCapExceeded):
        make_children(root, cache, max_rank=2)


def test_shift_cap_override():
    cache = NodeCache()
    root = build_root(construct_cyclic_group(2), cache)
    with pytest.raises(ResourceCapExceeded) as exc_info:
        homology_with_shift(root, 3, cache, max_shift=2)
    assert exc_info.value.resource == "shift"
    assert exc_info.value.cap == 2
    assert homology_with_shift(root, 2, cache, max_shift=2) == FinAbGroup.cyclic(2)


def test_shift_cap_reaches_get_homology():
    rect = construct_rectangular_band(2, 2)
    assert len(resolve(adjoin_unit(rect), 4, max_shift=3)) == 4
    with pytest.raises(ResourceCapExceeded):
        get_homology(rect, 4, max_shift=2)


# --- Group patterns ---
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_cyclic_pattern_matches_resolution(p):
    assert cyclic_prime_pattern(p, 6) == resolve(construct_cyclic_group(p), 6)


def test_order_four_patterns_match_resolution():
    assert cyclic_prime_pattern(4, 6) == resolve(construct_cyclic_group(4), 6)
    klein = direct_product(construct_cyclic_group(2), construct_cyclic_group(2))
    assert klein_pattern(6) == resolve(klein, 6)
    assert group_texts(klein_pattern(4)) == ["C_2^2", "C_2", "C_2^3", "C_2^2"]


def test_symmetric_group_homology():
    assert group_texts(get_homology(symmetric_group_3(), 4)) == ["C_2", "0", "C_6", "0"]


# --- Dispatch ---
def test_routes():
    assert homology_route(construct_cyclic_group(2)) == ROUTE_K_THIN_PATTERN
    assert homology_route(symmetric_group_3()) == ROUTE_K_THIN_GROUP
    assert homology_route(construct_rect_with_left_identities(1)) == ROUTE_CORNER_REDUCTION
    assert homology_route(adjoin_unit(construct_rectangular_band(2, 2))) == ROUTE_MONOID
    assert homology_route(construct_rectangular_band(2, 2)) == ROUTE_ADJOINED_UNIT


def test_get_homology_rejects_bad_dimension():
    with pytest.raises(ValueError):
        get_homology(construct_cyclic_group(2), 0)


@pytest.mark.parametrize("a", [1, 2, 3, 4])
@pytest.mark.parametrize("b", [1, 2, 3, 4])
def test_rectangular_bands_are_wedges_of_spheres(a, b):
    H = get_homology(construct_rectangular_band(a, b), 3)
    assert H == [FinAbGroup.trivial(), FinAbGroup.free((a - 1) * (b - 1)), FinAbGroup.trivial()]


def test_corner_reduction_gives_contractible_space():
    assert get_homology(construct_rect_with_left_identities(1), 4) == [FinAbGroup.trivial()] * 4


# --- Joins ---
JOIN_MONOIDS = {
    "C_2": lambda: construct_cyclic_group(2),
    "C_3": lambda: construct_cyclic_group(3),
    "Rect_2^2 with unit": lambda: adjoin_unit(construct_rectangular_band(2, 2)),
}


@pytest.mark.parametrize("name", sorted(JOIN_MONOIDS))
def test_join_with_two_letters_suspends(name):
    M = JOIN_MONOIDS[name]()
    assert get_homology(construct_join(M, 2), 5) == [FinAbGroup.trivial()] + get_homology(M, 4)


@pytest.mark.parametrize("name", sorted(JOIN_MONOIDS))
def test_join_with_one_letter_is_contractible(name):
    M = JOIN_MONOIDS[name]()
    assert get_homology(construct_join(M, 1), 4) == [FinAbGroup.trivial()] * 4


# --- Printed levels ---
def test_resolution_levels_of_cyclic_group():
    levels = process_resolution_levels(construct_cyclic_group(2), 2)
    assert levels == [
        {"level": 1, "domain": [0], "codomain": [0], "multipliers": [["[0] - [1]"]]},
        {"level": 2, "domain": [0], "codomain": [0], "multipliers": [["[0] + [1]"]]},
    ]


def test_resolution_levels_adjoin_a_unit_when_needed():
    levels = process_resolution_levels(construct_rectangular_band(2, 2), 1)
    assert len(levels) == 1
    assert levels[0]["level"] == 1
