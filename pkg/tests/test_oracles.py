"""The oracles get their own consistency checks: they are only worth
trusting as referees if they agree with hand counts and with each other.
"""

import pytest

from symf.errors import ResourceLimitError
from symf.oracles import (LaurentPoly, _kostka, oracle_cayley_sylvester,
                          oracle_deals, oracle_deals_cycle_index,
                          oracle_deals_matrix_count, oracle_matchings,
                          oracle_perm_inv_char, oracle_plethysm_schur,
                          oracle_regular_cycle_index, oracle_regular_graphs,
                          oracle_restricted_bell, oracle_su2_frobenius,
                          oracle_su2_inv_char, oracle_su2_poly_dim,
                          oracle_syt)
from symf.partitions import partitions_of
from symf.symfunc import dimension, h, s, specialize_ones, to_basis


def test_two_deal_oracles_agree():
    for n in range(1, 5):
        for m in range(1, 7):
            if m * n > 10:
                continue
            assert oracle_deals(m, n) == oracle_deals_matrix_count(m, n)


def test_deal_oracle_hand_values():
    # two hands from AABB: AB/AB and AA/BB
    assert oracle_deals(2, 2) == 2
    # three hands from AABBCC, up to renaming hands:
    # AA/BB/CC, AA/BC/BC, AB/AB/CC(x3 ways)=...: five classes
    assert oracle_deals(2, 3) == 5
    assert oracle_deals(5, 1) == 1


def test_deal_cycle_index_evaluates_to_count():
    for n in range(1, 5):
        for m in range(1, 6):
            if m * n > 10:
                continue
            index = oracle_deals_cycle_index(m, n)
            assert specialize_ones(index) == oracle_deals(m, n)


def test_regular_graph_oracle_hand_values():
    # 2-regular on two vertices: the double edge, or a loop at each
    assert oracle_regular_graphs(2, 2) == 2
    # 2-regular on three: triangle, loop+edge pair, three loops
    assert oracle_regular_graphs(3, 2) == 3
    assert oracle_regular_graphs(3, 3) == 0
    assert oracle_regular_graphs(1, 2) == 1
    assert oracle_regular_graphs(4, 0) == 1


def test_regular_cycle_index_evaluates_to_count():
    for n in range(1, 5):
        for k in range(0, 4):
            if n * k > 8 or (n * k) % 2:
                continue
            index = oracle_regular_cycle_index(n, k)
            assert specialize_ones(index) == oracle_regular_graphs(n, k)


def test_perm_oracle_small_hand_values():
    # S_1 invariants of one variable: all of it, dimension 1 per degree
    for r in range(5):
        assert dimension(oracle_perm_inv_char(1, r)) == 1
    # S_2 on two variables, degree 2: x^2+y^2 and xy
    assert dimension(oracle_perm_inv_char(2, 2)) == 2


def test_syt_hand_values():
    assert oracle_syt((3,)) == 1
    assert oracle_syt((1, 1, 1)) == 1
    assert oracle_syt((2, 1)) == 2
    assert oracle_syt((2, 2)) == 2
    assert oracle_syt((3, 3)) == 5
    assert oracle_syt((3, 2, 1)) == 16
    # total over shapes squared is the group order
    for r in range(1, 8):
        fact = 1
        for i in range(2, r + 1):
            fact *= i
        assert sum(oracle_syt(lam) ** 2 for lam in partitions_of(r)) == fact


def test_matchings_and_bell_values():
    assert [oracle_matchings(q) for q in range(6)] == [1, 1, 3, 15, 105, 945]
    assert oracle_restricted_bell(4, 4) == 15   # the plain Bell number
    assert oracle_restricted_bell(4, 2) == 8
    assert oracle_restricted_bell(0, 3) == 1
    assert oracle_restricted_bell(3, 1) == 1


def test_laurent_arithmetic():
    chi1 = LaurentPoly.su2_character(1)
    chi2 = LaurentPoly.su2_character(2)
    chi0 = LaurentPoly.su2_character(0)
    # Clebsch-Gordan in rank one: chi_1^2 = chi_2 + chi_0
    assert chi1 * chi1 == chi2 + chi0
    assert chi1.substitute_power(2) == LaurentPoly({-2: 1, 2: 1})
    assert (chi1 * chi1).coefficient(0) == 2
    assert LaurentPoly({1: 1, -1: -1}) + LaurentPoly({-1: 1}) == \
        LaurentPoly({1: 1})


def test_su2_oracle_against_partition_count_oracle():
    for k in range(1, 5):
        for r in range(0, 5):
            if k * r > 16:
                continue
            assert oracle_su2_poly_dim(k, r) == oracle_cayley_sylvester(k, r)
    # the full tensor invariants at the identity class
    assert oracle_su2_frobenius(1, 2, (1, 1)) == 1
    assert oracle_su2_frobenius(1, 3, (1, 1, 1)) == 0
    assert oracle_su2_frobenius(2, 2, (1, 1)) == 1


def test_su2_characters_are_schur_integral():
    for k in range(1, 4):
        for r in range(0, 5):
            ch = oracle_su2_inv_char(k, r)
            if ch.is_zero():
                continue
            expanded = to_basis(ch, "s").terms
            assert all(c.denominator == 1 and c > 0 for c in expanded.values())


def test_kostka_numbers():
    assert _kostka((2, 2), (2, 1, 1)) == 1
    assert _kostka((2, 2), (1, 1, 1, 1)) == 2
    assert _kostka((3, 1), (2, 1, 1)) == 2
    assert _kostka((2, 1, 1), (1, 1, 1, 1)) == 3
    assert _kostka((2, 2), (3, 1)) == 0
    for lam in partitions_of(5):
        assert _kostka(lam, lam) == 1
        assert _kostka(lam, (1, 1, 1, 1, 1)) == oracle_syt(lam)


def test_plethysm_oracle_small_cases():
    assert oracle_plethysm_schur("hh", 2, 2) == s(4) + s(2, 2)
    assert oracle_plethysm_schur("ee", 2, 2) == s(2, 1, 1)
    assert oracle_plethysm_schur("hh", 1, 3) == h(3)
    # h_a[h_1] is h_a again
    assert oracle_plethysm_schur("hh", 3, 1) == s(3)


def test_resource_caps_are_loud():
    with pytest.raises(ResourceLimitError):
        oracle_deals(4, 4)
    with pytest.raises(ResourceLimitError):
        oracle_deals_matrix_count(3, 5)
    with pytest.raises(ResourceLimitError):
        oracle_regular_graphs(6, 2)
    with pytest.raises(ResourceLimitError):
        oracle_perm_inv_char(6, 2)
    with pytest.raises(ResourceLimitError):
        oracle_su2_frobenius(5, 6, (6,))
    with pytest.raises(ResourceLimitError):
        oracle_plethysm_schur("hh", 3, 3)
