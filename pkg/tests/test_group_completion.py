import numpy as np
import pytest

from app.core.errors import ElementOutsideGroup, NotAGroup
from app.linalg.abelian import FinAbGroup
from app.semigroup.constructors import (
    adjoin_unit,
    adjoin_zero,
    construct_cyclic_group,
    construct_left_zero,
    construct_rectangular_band,
    construct_rees_matrix,
    direct_product,
)
from app.semigroup.table import LookupCounter
from app.structure.group_completion import (
    abelianization,
    find_generators,
    generated_subgroup,
    group_completion,
    identity_and_inverses,
)

from .semigroup_test_utils import NULL_2, symmetric_group_3, table_from_rows


# --- Groups inside tables ---
def test_identity_and_inverses_of_cyclic_group():
    G = identity_and_inverses(construct_cyclic_group(4))
    assert G.identity == 0
    assert G.inverse == {0: 0, 1: 3, 2: 2, 3: 1}


def test_identity_and_inverses_of_subgroup():
    S = adjoin_zero(construct_cyclic_group(3))
    G = identity_and_inverses(S, [0, 1, 2])
    assert G.order == 3
    assert 3 not in G


def test_identity_and_inverses_rejects_non_groups():
    with pytest.raises(NotAGroup):
        identity_and_inverses(construct_left_zero(2))
    with pytest.raises(NotAGroup):
        identity_and_inverses(table_from_rows(NULL_2))


def test_identity_and_inverses_is_linear_in_lookups():
    counter = LookupCounter()
    identity_and_inverses(construct_cyclic_group(60), counter=counter)
    assert counter.lookups <= 10 * 60


def test_generated_subgroup():
    G = identity_and_inverses(construct_cyclic_group(6))
    assert generated_subgroup(G, [2]) == [0, 2, 4]
    assert generated_subgroup(G, [2, 3]) == list(range(6))
    assert generated_subgroup(G, []) == [0]


def test_generated_subgroup_rejects_outside_elements():
    G = identity_and_inverses(construct_cyclic_group(6), [0, 2, 4])
    with pytest.raises(ElementOutsideGroup):
        generated_subgroup(G, [1])


def test_find_generators():
    klein = direct_product(construct_cyclic_group(2), construct_cyclic_group(2))
    G = identity_and_inverses(klein)
    generators = find_generators(G)
    assert len(generators) == 2
    assert generated_subgroup(G, generators) == [0, 1, 2, 3]
    assert find_generators(identity_and_inverses(construct_cyclic_group(5))) == [1]


# --- Group completion ---
def test_group_completion_of_a_group_is_itself():
    S = construct_cyclic_group(3)
    Q = group_completion(S)
    assert Q.order == 3
    assert Q.rho == (0, 1, 2)
    assert np.array_equal(Q.cayley_table(), S.table)


def test_group_completion_of_band_is_trivial():
    Q = group_completion(construct_rectangular_band(2, 3))
    assert Q.is_trivial
    assert set(Q.rho) == {0}


def test_group_completion_kills_sandwich_entries():
    H = construct_cyclic_group(2)
    assert group_completion(construct_rees_matrix(H, 2, 2, [[0, 0], [0, 1]])).order == 1
    assert group_completion(construct_rees_matrix(H, 2, 2, [[0, 0], [0, 0]])).order == 2


def test_group_completion_is_a_homomorphic_image():
    S = adjoin_unit(direct_product(construct_left_zero(2), construct_cyclic_group(3)))
    Q = group_completion(S)
    assert Q.order == 3
    for x in range(S.order):
        for y in range(S.order):
            assert Q.rho[S.product(x, y)] == Q.product(Q.rho[x], Q.rho[y])


# --- Abelianization ---
@pytest.mark.parametrize("method", ["bruteforce", "relations"])
def test_abelianization_of_symmetric_group(method):
    assert abelianization(group_completion(symmetric_group_3()), method=method) == FinAbGroup.cyclic(2)


@pytest.mark.parametrize("method", ["bruteforce", "relations"])
def test_abelianization_of_abelian_groups(method):
    C2_C4 = direct_product(construct_cyclic_group(2), construct_cyclic_group(4))
    assert str(abelianization(group_completion(C2_C4), method=method)) == "C_2 x C_4"
    C6 = construct_cyclic_group(6)
    assert str(abelianization(group_completion(C6), method=method)) == "C_6"


def test_abelianization_of_trivial_completion():
    assert abelianization(group_completion(construct_left_zero(3))).is_trivial


def test_abelianization_rejects_unknown_method():
    with pytest.raises(ValueError):
        abelianization(group_completion(construct_cyclic_group(2)), method="guess")
