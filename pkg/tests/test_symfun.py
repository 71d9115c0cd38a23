from fractions import Fraction

import pytest

from fibgf.symfun import (
    SymExpansion,
    ep_from_rank_product,
    ep_monomial,
    forgotten_coefficients,
    monomial_to_powersum,
    newton_power_sums,
    omega_powersum,
    partitions_of,
    powersum_to_monomial,
    rank_sizes,
    tilde_q,
    verify_forgotten_expansion,
    verify_powersum_expansion,
    z_of,
)


def test_partitions():
    assert list(partitions_of(0)) == [()]
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list(partitions_of(8))) == 22


def test_z():
    assert z_of(()) == 1
    assert z_of((3,)) == 3
    assert z_of((2, 2)) == 8
    assert z_of((3, 1, 1)) == 6


def test_tilde_q_examples():
    assert [tilde_q(2, 3, n) for n in range(1, 7)] == [2, 4, 5, 8, 12, 19]
    assert tilde_q(2, 3, 2) == 4  # i^(b-1)
    assert all(tilde_q(2, 2, n) == 2 for n in range(1, 12))
    assert tilde_q(2, 3, 3) == 2**3 - 3  # i^b - b(i-1)


def test_tilde_q_against_newton():
    for i, b in ((2, 2), (2, 3), (3, 2), (3, 3)):
        assert [tilde_q(i, b, n) for n in range(13)] == newton_power_sums(i, b, 12)


def test_tilde_q_conventions_differ_at_b():
    assert tilde_q(2, 3, 3, convention="powersum") == 5
    assert tilde_q(2, 3, 3, convention="unit-seed") == 7


def test_rank_sizes():
    assert rank_sizes(2, 3, 6) == [1, 2, 4, 7, 12, 20, 33]
    assert rank_sizes(2, 2, 5) == [1, 2, 3, 4, 5, 6]
    assert rank_sizes(3, 2, 5) == [1, 3, 7, 15, 31, 63]


def test_ep_monomial_examples():
    e = ep_monomial(2, 3, 4)
    assert e.coeff(()) == 1
    assert e.coeff((1,)) == 2
    assert e.coeff((2, 1)) == 8
    # multiplicativity across parts
    q = rank_sizes(2, 3, 4)
    for lam, c in e.coeffs.items():
        prod = 1
        for part in lam:
            prod *= q[part]
        assert c == prod


def test_ep_matches_rank_product_oracle():
    for i, b in ((2, 2), (2, 3), (3, 2)):
        assert ep_monomial(i, b, 6).coeffs == ep_from_rank_product(i, b, 6).coeffs


def test_basis_roundtrip_and_involution():
    m = ep_monomial(2, 3, 6)
    p = monomial_to_powersum(m)
    assert powersum_to_monomial(p).coeffs == m.coeffs
    assert omega_powersum(omega_powersum(p)).coeffs == p.coeffs


def test_degree_one_powersum_coefficient_is_cover_count():
    for i, b in ((2, 3), (3, 2), (4, 3)):
        p = monomial_to_powersum(ep_monomial(i, b, 3))
        assert p.coeff((1,)) == i  # m_1 = p_1


def test_powersum_expansion():
    for i, b in ((2, 2), (2, 3), (3, 2)):
        assert verify_powersum_expansion(i, b, 6)["status"] == "pass"
        assert verify_powersum_expansion(i, b, 6, convention="unit-seed")["status"] == "fail"


def test_forgotten_expansion():
    for i, b in ((2, 2), (2, 3), (3, 2)):
        assert verify_forgotten_expansion(i, b, 6)["status"] == "pass"


def test_forgotten_values():
    fo = forgotten_coefficients(ep_monomial(2, 3, 6))
    assert fo[(3, 1, 1)] == -4  # (-1)^3 (i-1) i^2 at (i,b) = (2,3)
    assert fo[(1, 1, 1, 1)] == 16  # i^n at j = 0
    assert fo.get((2, 2), Fraction(0)) == 0  # not of shape b^j 1^*


def test_symexpansion_formatting():
    e = SymExpansion("monomial", 2, {(): 1, (1,): Fraction(3, 2)})
    assert "m_[1]" in e.format_terms()
    with pytest.raises(ValueError):
        SymExpansion("bogus", 2, {})
    with pytest.raises(ValueError):
        SymExpansion("monomial", 1, {(2,): 1})
