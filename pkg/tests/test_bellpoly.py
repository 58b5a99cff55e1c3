from fractions import Fraction
from math import comb

import pytest

from hetstir import bellpoly as bp
from hetstir import oracles
from hetstir import triangles as tr
from hetstir.ring import LamPoly, XPoly, rising_int

F = Fraction
lam = LamPoly.lam()
x = XPoly.x()


def L(*cs):
    return LamPoly(cs)


def test_het_bell_examples():
    assert bp.het_bell(0) == 1
    assert bp.het_bell(2) == x * L(1, 1) + x * x
    assert bp.het_bell_number(2) == L(2, 1)


def test_het_bell_gf_examples():
    assert bp.het_bell_gf_check(0)
    assert bp.het_bell_gf_check(2)
    assert bp.het_bell_gf_check(10)


def test_classic_bells_examples():
    assert bp.classic_bells("bell", 3).eval(1, 0) == oracles.bell_number(3) == 5
    assert bp.classic_bells("lah_bell", 2).eval(1, 0) == 3
    for n in range(9):
        assert bp.classic_bells("deg_bell", n).eval_lam(0) == bp.classic_bells("bell", n)
    with pytest.raises(ValueError):
        bp.classic_bells("touchard", 2)


def _egf_check(series, polys):
    return all(series.egf_coeff(n) == p for n, p in enumerate(polys))


def test_classical_bell_generating_functions():
    from hetstir import powerseries as ps

    N = 10
    one = LamPoly.one()
    et = ps.Series.from_egf([LamPoly()] + [one] * N, N)
    assert _egf_check(ps.exp(et * x), [bp.classic_bells("bell", n) for n in range(N + 1)])
    geo = ps.Series([LamPoly()] + [one] * N, N)
    assert _egf_check(ps.exp(geo * x), [bp.classic_bells("lah_bell", n) for n in range(N + 1)])
    deg = ps.gen_deg_exp(N, 1) - one
    assert _egf_check(ps.exp(deg * x), [bp.classic_bells("deg_bell", n) for n in range(N + 1)])


@pytest.mark.parametrize("n", range(16))
def test_het_bell_endpoints(n):
    hb = bp.het_bell(n)
    assert hb.eval_lam(0) == bp.classic_bells("bell", n)
    assert hb.eval_lam(1) == bp.classic_bells("lah_bell", n)


# --- Dobinski -------------------------------------------------------------

def test_dobinski_examples():
    tol = 1e-9
    for x0 in (F(1, 3), 1, 3):
        r = bp.dobinski(0, x0, F(1, 2), tol)
        assert abs(float(r) - 1) <= r.bound <= tol
    r = bp.dobinski(1, 1, F(1, 2), tol)
    assert abs(float(r) - 1) <= tol
    r = bp.dobinski(3, 1, F(1, 2), tol)
    assert bp.het_bell(3).eval(1, F(1, 2)) == F(17, 2)
    assert r.error_against(F(17, 2)) <= r.bound <= tol


def _direct_series(n, x0, weight, terms=120):
    """e^-x sum_k weight(k) x^k / k!, summed far past convergence in mpmath."""
    import mpmath

    with mpmath.workdps(40):
        xm = mpmath.mpf(x0.numerator) / x0.denominator
        s = mpmath.fsum(weight(k) * xm**k / mpmath.factorial(k) for k in range(terms))
        return mpmath.exp(-xm) * s


@pytest.mark.parametrize("n", range(8))
def test_dobinski_at_the_endpoints_is_classical(n):
    # lambda=0 reproduces phi_n(x) = e^-x sum k^n x^k/k!
    # lambda=1 reproduces LB_n(x) = e^-x sum <k>_n x^k/k!
    for x0 in (F(1, 2), F(2)):
        for lam0, family, weight in ((0, "bell", lambda k: k**n), (1, "lah_bell", lambda k: rising_int(k, n))):
            res = bp.dobinski(n, x0, lam0)
            exact = bp.classic_bells(family, n).eval(x0, 0)
            assert res.error_against(exact) <= res.bound <= 1e-9
            assert abs(float(_direct_series(n, x0, weight)) - float(exact)) <= 1e-9 * max(1, float(exact))


def test_dobinski_rejects_bad_input():
    with pytest.raises(ValueError):
        bp.dobinski(2, 0, 1)
    with pytest.raises(ValueError):
        bp.dobinski(2, 1, F(-1, 2))
    with pytest.raises(ValueError):
        bp.dobinski(2, 1, 1, tol=0)


def test_dobinski_cap_is_an_explicit_error():
    with pytest.raises(bp.DobinskiCapError) as info:
        bp.dobinski(6, 5, 1, tol=1e-12, cap=5)
    assert info.value.partial.terms == 5


# --- Spivey ---------------------------------------------------------------

def test_spivey_examples():
    assert bp.spivey_sides(0, 0) == (L(1), L(1))
    assert bp.spivey_sides(1, 1) == (L(2, 1), L(2, 1))
    assert bp.spivey_numbers(3, 2)


def test_spivey_poly_examples():
    assert bp.spivey_poly_sides(0, 0) == (XPoly.one(), XPoly.one())
    lhs, rhs = bp.spivey_poly_sides(1, 1)
    assert lhs == rhs == bp.het_bell(2)
    lhs, rhs = bp.spivey_poly_sides(2, 2)
    assert rhs.eval_x(1) == bp.spivey_sides(2, 2)[1]


def test_spivey_reports_mismatch():
    H = tr.het2(4).map(lambda n, k, v: v + 1 if (n, k) == (2, 1) else v)
    assert not bp.spivey_numbers(2, 2, H)


def _spivey_classical(m, n):
    bell = [oracles.bell_number(i) for i in range(m + n + 1)]
    s2 = oracles.stirling2_counts(m)
    return sum(s2[j] * comb(n, k) * bell[k] * j ** (n - k) for j in range(m + 1) for k in range(n + 1))


def _spivey_lah(m, n):
    lb = [sum(oracles.lah_closed_form(i, k) for k in range(i + 1)) for i in range(m + n + 1)]
    return sum(
        oracles.lah_closed_form(m, j) * comb(n, k) * lb[k] * rising_int(m + j, n - k)
        for j in range(m + 1)
        for k in range(n + 1)
    )


@pytest.mark.parametrize("total", range(9))
def test_spivey_endpoints(total):
    for m in range(total + 1):
        n = total - m
        lhs, rhs = bp.spivey_sides(m, n)
        assert lhs.eval(0) == rhs.eval(0) == _spivey_classical(m, n) == oracles.bell_number(m + n)
        assert lhs.eval(1) == rhs.eval(1) == _spivey_lah(m, n)


# --- normal ordering, r-analogue, shift -----------------------------------

def test_normal_ordering_examples():
    H = tr.het2(2)
    assert L(3, 0) * 3 + L(0, 3) == L(9, 3)
    assert H[2, 1] * 3 + H[2, 2] * 6 == L(9, 3)
    assert bp.normal_ordering_check(1, 0)
    assert bp.normal_ordering_check(10, 10)


def test_het_bell_r_examples():
    assert bp.het_bell_r(0, 3) == 1
    assert bp.het_bell_r(1, 1) == x + 1
    assert bp.het_bell_r(2, 1) == L(1, 1) + x * L(3, 1) + x * x
    with pytest.raises(ValueError):
        bp.het_bell_r(2, 0)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_het_bell_r_gf(r):
    assert bp.het_bell_r_gf_check(10, r)


def test_shift_identity():
    H = tr.het2(2)
    assert bp.het_bell(1) == x * H[1, 1]
    assert bp.het_bell(2) == x * (XPoly([H[2, 1]]) + x)
    assert bp.shift_identity_check(12)
