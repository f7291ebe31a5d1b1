"""Gamma-product algebra tests.

Everything reduces against the Gamma(p)/Gamma(2p) bases; the oracle for
most cases is the functional equation Gamma(t+1) = t Gamma(t) applied by
hand, plus the telescoping closed forms of the beta sums.
"""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bernkit import (
    DomainError,
    GammaProduct,
    PoleEncountered,
    beta_factor,
    beta_sum,
    gamma_reduce,
    harmonic,
)

F = Fraction


def test_factor_canonicalization():
    g = GammaProduct((("p", 2, 1), ("p", 2, 3), ("2p", 1, -1), ("p", 0, 0)), F(5))
    assert g.factors == (("2p", 1, -1), ("p", 2, 4))
    assert g.scalar == 5


def test_multiplication():
    a = GammaProduct((("p", 1, 1),), F(2))
    b = GammaProduct((("p", 1, -1), ("2p", 3, 2)), F(1, 3))
    prod = a * b
    assert prod.factors == (("2p", 3, 2),)
    assert prod.scalar == F(2, 3)
    assert (3 * a).scalar == 6
    assert (a * F(1, 2)).scalar == 1


def test_bad_base_rejected():
    with pytest.raises(DomainError):
        GammaProduct((("3p", 1, 1),), F(1))


def test_reduce_identity_factor():
    # Gamma(p+0) is the base itself: exponent (1,0), cofactor 1
    r = gamma_reduce(GammaProduct((("p", 0, 1),)), F(1, 2))
    assert (r.exp_gamma_p, r.exp_gamma_2p, r.value) == (1, 0, 1)


def test_reduce_positive_offsets():
    # Gamma(p+3) = Gamma(p) (p)_3
    r = gamma_reduce(GammaProduct((("p", 3, 1),)), F(1, 2))
    assert (r.exp_gamma_p, r.exp_gamma_2p) == (1, 0)
    assert r.value == F(1, 2) * F(3, 2) * F(5, 2)
    r = gamma_reduce(GammaProduct((("2p", 2, 1),)), F(3, 4))
    assert (r.exp_gamma_p, r.exp_gamma_2p) == (0, 1)
    assert r.value == F(3, 2) * F(5, 2)


def test_reduce_negative_offset():
    # Gamma(p-1) = Gamma(p) / (p-1)
    r = gamma_reduce(GammaProduct((("p", -1, 1),)), F(1, 2))
    assert (r.exp_gamma_p, r.value) == (1, -2)


def test_reduce_folds_nonpositive_integer_anchor():
    # at p=0 the anchor Gamma(p) is singular but Gamma(p+3) = 2! is finite
    r = gamma_reduce(GammaProduct((("p", 3, 1),)), F(0))
    assert (r.exp_gamma_p, r.exp_gamma_2p, r.value) == (0, 0, 2)
    # anchor 2p = -1 at p = -1/2 folds, while the p base stays symbolic
    g = GammaProduct((("2p", 4, 1), ("p", 1, 1)))
    r = gamma_reduce(g, F(-1, 2))
    assert (r.exp_gamma_p, r.exp_gamma_2p) == (1, 0)
    assert r.value == F(2) * F(-1, 2)  # 2! from the fold, (p)_1 = -1/2


def test_reduce_fold_with_negative_exponent():
    r = gamma_reduce(GammaProduct((("2p", 3, -2),)), F(0))
    assert (r.exp_gamma_p, r.exp_gamma_2p, r.value) == (0, 0, F(1, 4))


def test_reduce_pole():
    with pytest.raises(PoleEncountered):
        gamma_reduce(GammaProduct((("p", 1, 1),)), F(-1))
    with pytest.raises(PoleEncountered):
        gamma_reduce(GammaProduct((("2p", 2, 1),)), F(-1))
    with pytest.raises(PoleEncountered):
        gamma_reduce(GammaProduct((("p", 0, 1),)), F(0))


@given(
    st.fractions(min_value=F(1, 7), max_value=F(9, 2)),
    st.integers(min_value=0, max_value=6),
)
def test_functional_equation(p, m):
    # Gamma(p+m+1) / Gamma(p+m) = p+m
    up = gamma_reduce(GammaProduct((("p", m + 1, 1),)), p)
    lo = gamma_reduce(GammaProduct((("p", m, 1),)), p)
    assert up.value / lo.value == p + m


@given(st.fractions(min_value=F(1, 5), max_value=F(7, 2)))
def test_reduce_is_multiplicative(p):
    a = GammaProduct((("p", 2, 1), ("2p", 1, -1)), F(3, 7))
    b = GammaProduct((("p", -1, 1), ("2p", 4, 2)), F(2))
    ra, rb, rab = gamma_reduce(a, p), gamma_reduce(b, p), gamma_reduce(a * b, p)
    assert rab.value == ra.value * rb.value
    assert rab.exp_gamma_p == ra.exp_gamma_p + rb.exp_gamma_p
    assert rab.exp_gamma_2p == ra.exp_gamma_2p + rb.exp_gamma_2p


def test_beta_factor():
    g = beta_factor(2)
    assert g.factors == (("2p", 3, -1), ("p", 1, 1), ("p", 2, 1))
    with pytest.raises(DomainError):
        beta_factor(0)


def test_beta_factor_at_one():
    r = gamma_reduce(beta_factor(1), F(1))
    assert (r.exp_gamma_p, r.exp_gamma_2p, r.value) == (2, -1, F(1, 6))


def test_beta_sum_reduces_to_harmonic_at_zero():
    # beta(k, 1) = 1/k, so the sum is H_{2n-1}
    for n in range(1, 8):
        r = beta_sum(n, F(0))
        assert (r.exp_gamma_p, r.exp_gamma_2p) == (0, 0)
        assert r.value == harmonic(2 * n - 1)


def test_beta_sum_telescopes_at_one():
    # beta(1+k, 2) = 1/((k+1)(k+2)) telescopes to 1/2 - 1/(2n+1)
    for n in range(1, 8):
        r = beta_sum(n, F(1))
        assert (r.exp_gamma_p, r.exp_gamma_2p) == (2, -1)
        assert r.value == F(1, 2) - F(1, 2 * n + 1)
    assert beta_sum(1, F(1)).value == F(1, 6)


def test_beta_sum_errors():
    with pytest.raises(DomainError):
        beta_sum(0, F(1))
    with pytest.raises(PoleEncountered):
        beta_sum(2, F(-1))
