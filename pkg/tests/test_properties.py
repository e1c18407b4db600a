import itertools
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from app.linalg.abelian import FinAbGroup
from app.linalg.lattice import kernel_basis
from app.linalg.smith import smith_normal_form
from app.nerve.bar_complex import bar_boundary, nerve_homology
from app.resolution.homology import get_homology
from app.semigroup.constructors import adjoin_unit, construct_join, opposite
from app.semigroup.identities import WordEquation, left_zeros, right_zeros, satisfies_identity
from app.structure.group_completion import abelianization, group_completion
from app.structure.min_ideal import is_k_thin, min_ideal, min_ideal_bruteforce

from .semigroup_test_utils import small_semigroups

PROPERTY_SETTINGS = settings(max_examples=200, deadline=None)

small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda rows: st.integers(min_value=1, max_value=4).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-6, max_value=6), min_size=cols, max_size=cols),
            min_size=rows, max_size=rows,
        )
    )
)


def _determinant(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, value in enumerate(rows[0]):
        if value:
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += (-1) ** j * value * _determinant(minor)
    return total


def _minor_gcd(rows, size):
    g = 0
    for chosen_rows in itertools.combinations(range(len(rows)), size):
        for chosen_cols in itertools.combinations(range(len(rows[0])), size):
            g = math.gcd(g, _determinant([[rows[i][j] for j in chosen_cols] for i in chosen_rows]))
    return g


# --- Integer linear algebra ---

@PROPERTY_SETTINGS
@given(small_matrices)
def test_smith_diagonal_matches_minor_gcds(rows):
    D = smith_normal_form(rows)
    diagonal = [int(D[i, i]) for i in range(min(D.shape))]
    product = 1
    for size in range(1, len(diagonal) + 1):
        product *= diagonal[size - 1]
        assert product == _minor_gcd(rows, size)


@PROPERTY_SETTINGS
@given(small_matrices)
def test_kernel_basis_is_saturated(rows):
    K = kernel_basis(rows)
    assert K.shape[0] == len(rows[0])
    for j in range(K.shape[1]):
        column = [int(x) for x in K[:, j]]
        for row in rows:
            assert sum(a * b for a, b in zip(row, column)) == 0
    if K.shape[1]:
        D = smith_normal_form(K)
        assert all(int(D[i, i]) == 1 for i in range(K.shape[1]))


# --- Bar complex ---

@PROPERTY_SETTINGS
@given(small_semigroups(max_order=4))
def test_bar_boundary_squares_to_zero(S):
    product = bar_boundary(S, 2).dot(bar_boundary(S, 3))
    assert all(x == 0 for x in product.flat)


@PROPERTY_SETTINGS
@given(small_semigroups(max_order=4))
def test_resolution_agrees_with_nerve(S):
    assert get_homology(S, 2) == nerve_homology(S, 2)


# --- Structure ---

@PROPERTY_SETTINGS
@given(small_semigroups())
def test_min_ideal_matches_bruteforce(S):
    R = min_ideal(S)
    kernel = {S.product(S.product(i, h), j) for i in R.I for h in R.H for j in R.J}
    assert kernel == set(min_ideal_bruteforce(S))


@PROPERTY_SETTINGS
@given(small_semigroups())
def test_first_homology_is_abelianized_group_completion(S):
    assert get_homology(S, 1)[0] == abelianization(group_completion(S))


@PROPERTY_SETTINGS
@given(small_semigroups(max_order=6))
def test_retraction_is_a_homomorphism(S):
    Q = group_completion(S)
    for x in range(S.order):
        for y in range(S.order):
            assert Q.rho[S.product(x, y)] == Q.product(Q.rho[x], Q.rho[y])


@PROPERTY_SETTINGS
@given(small_semigroups(max_order=6))
def test_k_thin_group_completion_is_the_maximal_subgroup(S):
    R = min_ideal(S)
    assume(is_k_thin(R))
    assert group_completion(S).order == len(R.H)


# --- Homology invariances ---

@PROPERTY_SETTINGS
@given(small_semigroups(max_order=4))
def test_adjoining_a_unit_keeps_homology(S):
    assert get_homology(adjoin_unit(S), 3) == get_homology(S, 3)


@PROPERTY_SETTINGS
@given(small_semigroups())
def test_opposite_keeps_homology(S):
    assert get_homology(opposite(S), 3) == get_homology(S, 3)


@pytest.mark.slow
@PROPERTY_SETTINGS
@given(small_semigroups(max_order=3))
def test_join_with_two_letters_suspends(S):
    M = adjoin_unit(S)
    assert get_homology(construct_join(M, 2), 4) == [FinAbGroup.trivial()] + get_homology(M, 3)


@pytest.mark.slow
@PROPERTY_SETTINGS
@given(small_semigroups(max_order=3))
def test_join_with_one_letter_is_contractible(S):
    M = adjoin_unit(S)
    assert all(group.is_trivial for group in get_homology(construct_join(M, 1), 4))


@PROPERTY_SETTINGS
@given(small_semigroups(), st.sampled_from(["xy=yx", "xyz=yxz", "xyx=yxx"]))
def test_identity_with_distinct_leading_variables_forces_k_thin(S, text):
    equation = WordEquation.parse(text)
    assert equation.leading_variables_differ
    assume(satisfies_identity(S, equation))
    assert is_k_thin(min_ideal(S))


@PROPERTY_SETTINGS
@given(small_semigroups())
def test_left_or_right_zero_gives_trivial_homology(S):
    assume(left_zeros(S) or right_zeros(S))
    assert all(group.is_trivial for group in get_homology(S, 3))
