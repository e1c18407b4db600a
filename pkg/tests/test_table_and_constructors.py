import numpy as np
import pytest

from app.core.errors import (
    BadIdentityHint,
    EntryOutOfRange,
    NotAMonoid,
    NotAssociative,
    SemigroupError,
    TableParseError,
    TooManyVariables,
)
from app.semigroup.constructors import (
    adjoin_unit,
    adjoin_zero,
    construct_cyclic_group,
    construct_join,
    construct_left_zero,
    construct_rectangular_band,
    construct_rees_matrix,
    construct_right_zero,
    direct_product,
    opposite,
)
from app.semigroup.identities import (
    COMMUTATIVITY,
    WordEquation,
    is_commutative,
    is_regular,
    left_zeros,
    right_zeros,
    satisfies_identity,
    zero_element,
)
from app.semigroup.table import LookupCounter, find_associativity_violation, idempotents, validate_table
from app.semigroup.table_text import format_table, parse_table

from .semigroup_test_utils import NILPOTENT_2, NULL_2, SEMILATTICE_2, table_from_rows


# --- Validation ---
def test_validate_detects_identity():
    S = validate_table([[0, 1], [1, 0]])
    assert S.order == 2
    assert S.identity == 0
    assert S.is_monoid


def test_validate_without_identity():
    S = validate_table(NULL_2)
    assert S.identity is None
    assert not S.is_monoid


def test_validate_rejects_out_of_range_entry():
    with pytest.raises(EntryOutOfRange) as exc_info:
        validate_table([[0, 2], [1, 0]])
    assert exc_info.value.row == 0
    assert exc_info.value.column == 1
    assert exc_info.value.value == 2


def test_validate_rejects_non_associative_table_with_witness():
    with pytest.raises(NotAssociative) as exc_info:
        validate_table([[1, 0], [0, 0]])
    assert exc_info.value.witness == (0, 0, 1)
    assert find_associativity_violation(np.array([[1, 0], [0, 0]])) == (0, 0, 1, 0, 1)


def test_validate_rejects_ragged_rows():
    with pytest.raises(TableParseError):
        validate_table([[0, 0], [0]])


def test_validate_rejects_empty_table():
    with pytest.raises(TableParseError):
        validate_table([])


def test_validate_identity_hint():
    assert validate_table(SEMILATTICE_2, identity_hint=1).identity == 1
    with pytest.raises(BadIdentityHint):
        validate_table(SEMILATTICE_2, identity_hint=0)


def test_table_is_read_only():
    S = validate_table([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        S.table[0, 0] = 1


def test_lookup_counter_counts_multiplier_calls():
    S = construct_cyclic_group(3)
    counter = LookupCounter()
    mul = S.multiplier(counter)
    assert mul(1, 2) == 0
    assert mul(2, 2) == 1
    assert counter.lookups == 2


def test_idempotents():
    assert idempotents(table_from_rows(SEMILATTICE_2)) == [0, 1]
    assert idempotents(construct_cyclic_group(4)) == [0]
    assert idempotents(table_from_rows(NILPOTENT_2)) == [1]


# --- Table text format ---
def test_parse_table_skips_comments_and_blank_lines():
    text = "# C_2\n\n2\n0 1\n\n1 0\n"
    S = parse_table(text)
    assert S.to_lists() == [[0, 1], [1, 0]]
    assert S.identity == 0


def test_parse_table_reports_line_numbers():
    with pytest.raises(TableParseError) as exc_info:
        parse_table("# comment\n2\n0 1\n1 x\n")
    assert exc_info.value.line_number == 4
    assert "line 4" in str(exc_info.value)


def test_parse_table_bad_order_line():
    with pytest.raises(TableParseError) as exc_info:
        parse_table("two\n0 1\n1 0\n")
    assert exc_info.value.line_number == 1


def test_parse_table_wrong_row_count():
    with pytest.raises(TableParseError):
        parse_table("3\n0 0 0\n0 0 0\n")


def test_parse_table_empty_text():
    with pytest.raises(TableParseError):
        parse_table("# nothing here\n")


def test_parse_table_passes_through_validation_errors():
    with pytest.raises(NotAssociative):
        parse_table("2\n1 0\n0 0\n")


def test_format_table_output():
    text = format_table(construct_cyclic_group(2), "C_2")
    assert text == "# C_2\n2\n0 1\n1 0\n"
    assert parse_table(text) == construct_cyclic_group(2)


# --- Constructors ---
def test_rectangular_band_product_law():
    S = construct_rectangular_band(2, 3)
    assert S.order == 6
    for a in range(6):
        for b in range(6):
            i, l = a // 3, b % 3
            assert S.product(a, b) == i * 3 + l


def test_left_and_right_zero():
    L = construct_left_zero(3)
    R = construct_right_zero(3)
    assert left_zeros(L) == [0, 1, 2]
    assert right_zeros(R) == [0, 1, 2]
    assert R == opposite(L)


def test_constructor_arguments_are_checked():
    with pytest.raises(SemigroupError):
        construct_rectangular_band(0, 2)
    with pytest.raises(SemigroupError):
        construct_cyclic_group(0)


def test_adjoin_unit_puts_identity_last():
    S = adjoin_unit(construct_cyclic_group(2))
    assert S.order == 3
    assert S.identity == 2
    # the old identity stays an idempotent but is no longer two-sided
    assert idempotents(S) == [0, 2]


def test_adjoin_zero_puts_zero_last():
    S = adjoin_zero(construct_left_zero(2))
    assert zero_element(S) == 2
    assert S.identity is None


def test_direct_product_indexing():
    S = construct_cyclic_group(2)
    T = construct_left_zero(3)
    P = direct_product(S, T)
    assert P.order == 6
    for s1 in range(2):
        for t1 in range(3):
            for s2 in range(2):
                for t2 in range(3):
                    expected = S.product(s1, s2) * 3 + T.product(t1, t2)
                    assert P.product(s1 * 3 + t1, s2 * 3 + t2) == expected
    assert find_associativity_violation(P.table) is None


def test_rees_matrix_semigroup_is_associative():
    H = construct_cyclic_group(2)
    S = construct_rees_matrix(H, 2, 2, [[0, 0], [0, 1]])
    assert S.order == 8
    assert find_associativity_violation(S.table) is None
    assert S.identity is None


def test_rees_matrix_rejects_bad_sandwich():
    H = construct_cyclic_group(2)
    with pytest.raises(SemigroupError):
        construct_rees_matrix(H, 2, 2, [[0, 0]])
    with pytest.raises(SemigroupError):
        construct_rees_matrix(H, 1, 1, [[5]])


def test_join_product_rules():
    M = construct_cyclic_group(2)
    J = construct_join(M, 2)
    assert J.order == 6
    assert J.identity == 0
    assert find_associativity_violation(J.table) is None
    n = M.order
    for x in range(n):
        for k in (1, 2):
            for x2 in range(n):
                # x . y'x' = y'x'
                assert J.product(x, k * n + x2) == k * n + x2
                # yx . x' = y(xx')
                assert J.product(k * n + x, x2) == k * n + M.product(x, x2)
                for k2 in (1, 2):
                    # yx . y'x' = yx'
                    assert J.product(k * n + x, k2 * n + x2) == k * n + x2


def test_join_needs_a_monoid():
    with pytest.raises(NotAMonoid):
        construct_join(construct_left_zero(2), 1)


def test_join_with_no_letters_is_the_monoid():
    M = construct_cyclic_group(3)
    assert construct_join(M, 0) == M


def test_restrict_to_subsemigroup():
    S = adjoin_zero(construct_cyclic_group(2))
    sub = S.restrict([0, 1])
    assert sub == construct_cyclic_group(2)
    with pytest.raises(SemigroupError):
        table_from_rows([[0, 1], [1, 0]]).restrict([1])


# --- Identities and predicates ---
def test_commutativity_checks_agree():
    for S in (construct_cyclic_group(3), table_from_rows(SEMILATTICE_2), construct_left_zero(2)):
        assert is_commutative(S) == satisfies_identity(S, COMMUTATIVITY)
    assert not is_commutative(construct_left_zero(2))


def test_word_equation_parse():
    eq = WordEquation.parse("xyx = x")
    assert eq.lhs == (0, 1, 0)
    assert eq.rhs == (0,)
    assert eq.variable_count == 2
    # rectangular bands satisfy xyx = x
    assert satisfies_identity(construct_rectangular_band(2, 3), eq)
    assert not satisfies_identity(table_from_rows(NULL_2), WordEquation.parse("xx=x"))


def test_word_equation_rejects_bad_text():
    with pytest.raises(SemigroupError):
        WordEquation.parse("xy")
    with pytest.raises(SemigroupError):
        WordEquation.parse("x1=x")


def test_identity_variable_cap():
    eq = WordEquation.parse("abcde=edcba")
    with pytest.raises(TooManyVariables):
        satisfies_identity(construct_cyclic_group(2), eq)
    assert satisfies_identity(construct_cyclic_group(2), eq, max_variables=5)


def test_zero_and_regularity():
    assert zero_element(table_from_rows(NULL_2)) == 0
    assert zero_element(construct_cyclic_group(2)) is None
    assert is_regular(construct_rectangular_band(2, 2))
    assert not is_regular(table_from_rows(NILPOTENT_2))
