from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hetstir import powerseries as ps
from hetstir.powerseries import Series, compose, exp, gen_deg_exp, gen_deg_log, powi
from hetstir.ring import LamPoly

F = Fraction
lam = LamPoly.lam()


def S(*cs, order=None):
    return Series([F(c) for c in cs], order)


def exp_by_powers(a: Series) -> Series:
    """Independent oracle: sum_j a^j / j! by repeated multiplication."""
    acc = Series.const(F(1), a.order)
    term = Series.const(F(1), a.order)
    for j in range(1, a.order + 1):
        term = term * a
        acc = acc + term * F(1, factorial(j))
    return acc


def test_mul_examples():
    assert S(1, 1) * S(1, -1) == S(1, 0, -1, order=1)
    assert S(1, 1, order=2) * S(1, -1, order=2) == S(1, 0, -1)
    assert S(0, 1, 0) * S(0, 1, 0) == S(0, 0, 1)
    assert ps.geometric(6) * S(1, -1, order=6) == S(1, order=6)


def test_mixed_orders_truncate():
    assert (S(1, 1, 1) + S(1, 1)).order == 1
    assert (S(1, 1, 1) * S(1, 1)).order == 1


def test_powi_examples():
    assert powi(S(0, 1, 0, 0), 3) == S(0, 0, 0, 1)
    assert powi(S(1, 1, 0), 2) == S(1, 2, 1)
    assert powi(S(0, 1, 1, 0, 0), 2) == S(0, 0, 1, 2, 1)
    assert powi(S(0, 1, 1), 0) == S(1, order=2)


def test_exp_examples():
    assert exp(S(0, 1, order=6)) == Series([F(1, factorial(n)) for n in range(7)])
    assert exp(S(0, order=4)) == S(1, order=4)
    assert exp(S(0, 1, 1, 0)) == S(1, 1, F(3, 2), F(7, 6))
    with pytest.raises(ValueError):
        exp(S(1, 1))


def test_compose_examples():
    geo = ps.geometric(4)
    inner = S(0, 1, 1, 1, 1)  # t/(1-t)
    assert compose(geo, inner) == S(1, 1, 2, 4, 8)
    assert compose(S(3, 2, 5), S(0, order=2)) == S(3, order=2)
    f = S(0, 2, -1, 7)
    assert compose(S(0, 1, order=3), f) == f
    with pytest.raises(ValueError):
        compose(geo, S(1, 1, 0, 0, 0))


def test_gen_deg_exp_examples():
    assert gen_deg_exp(4, -1, t_sign=-1).egf_coeff(2) == LamPoly((1, 1))
    assert gen_deg_exp(4, 1).egf_coeff(2) == LamPoly((1, -1))
    assert gen_deg_exp(4, -2, t_sign=-1).egf_coeff(1) == 2


def test_gen_deg_log_examples():
    assert gen_deg_log(4, -1).egf_coeff(1) == 1
    assert gen_deg_log(4, -1).egf_coeff(2) == LamPoly((-1, -1))
    assert gen_deg_log(4, 1).egf_coeff(3).eval(0) == 2


def test_gen_deg_log_matches_closed_form_away_from_zero():
    # (1)_{n,1/lam} lam^{n-1} evaluated at a few nonzero rational lambdas
    for lam0 in (F(1, 3), F(2), F(-5, 7)):
        for n in range(1, 9):
            inv = 1 / lam0
            closed = F(1)
            for j in range(n):
                closed *= 1 - j * inv
            closed *= lam0 ** (n - 1)
            assert gen_deg_log(8, 1).egf_coeff(n).eval(lam0) == closed


@pytest.mark.parametrize("sign", [1, -1])
def test_compositional_inverse(sign):
    N = 16
    e = gen_deg_exp(N, 1, lam_sign=sign)
    lg = gen_deg_log(N, sign)
    assert compose(e, lg) == Series([LamPoly.one(), LamPoly.one()], N)
    assert compose(lg, e - LamPoly.one()) == Series([LamPoly(), LamPoly.one()], N)


def test_log_substitution_identity():
    N = 16
    t_over = Series([LamPoly()] + [LamPoly.one()] * N, N)
    assert compose(gen_deg_log(N, 1), t_over) == -gen_deg_log(N, -1).scale_t(-1)


def test_degenerate_exp_is_classical_at_lambda_zero():
    e = ps.eval_lam(gen_deg_exp(10, 1), 0)
    assert e == exp(S(0, 1, order=10))


series_zero_const = st.lists(st.builds(F, st.integers(-9, 9), st.integers(1, 4)), min_size=6, max_size=6).map(
    lambda cs: Series([F(0)] + cs, 6)
)
series_any = st.lists(st.builds(F, st.integers(-9, 9), st.integers(1, 4)), min_size=7, max_size=7).map(Series)


@settings(max_examples=40, deadline=None)
@given(series_zero_const, series_zero_const)
def test_exp_is_a_homomorphism(a, b):
    assert exp(a + b) == exp(a) * exp(b)


@settings(max_examples=40, deadline=None)
@given(series_zero_const)
def test_exp_matches_power_sum(a):
    assert exp(a) == exp_by_powers(a)


@settings(max_examples=40, deadline=None)
@given(series_any, series_any, series_any)
def test_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(series_any, st.integers(0, 6))
def test_powi_is_repeated_mul(a, k):
    acc = Series.const(F(1), a.order)
    for _ in range(k):
        acc = acc * a
    assert powi(a, k) == acc


def test_exp_over_lampoly_matches_power_sum():
    a = gen_deg_exp(8, -1, t_sign=-1) - LamPoly.one()
    acc = Series.const(LamPoly.one(), 8)
    term = Series.const(LamPoly.one(), 8)
    for j in range(1, 9):
        term = term * a
        acc = acc + term * F(1, factorial(j))
    assert exp(a) == acc


def test_coefficient_beyond_order_is_an_error():
    with pytest.raises(IndexError):
        S(1, 2)[5]
