"""Bell-type polynomials over the heterogeneous triangles, and the identity
checks built on them: generating functions, Dobinski-type series,
Spivey-type convolutions, normal ordering and the r-analogue."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import mpmath

from . import powerseries as ps
from .report import CheckReport, failed, passed
from .ring import LamPoly, XPoly, deg_factorial_value, falling_int
from .triangles import Triangle, classic, degenerate, het2, het2_r

BELL_FAMILIES = ("bell", "lah_bell", "deg_bell")

DOBINSKI_CAP = 10**6


def row_poly(tri: Triangle, n: int) -> XPoly:
    """sum_k T(n,k) x^k."""
    return XPoly(tri.row(n))


def het_bell(n: int, H: Triangle | None = None) -> XPoly:
    """Heterogeneous Bell polynomial sum_k H(n,k) x^k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    H = H if H is not None and H.order >= n else het2(n)
    return row_poly(H, n)


def het_bell_number(n: int, H: Triangle | None = None) -> LamPoly:
    return het_bell(n, H).eval_x(1)


def het_bell_gf_series(N: int) -> ps.Series:
    """exp(x (e_lam^{-1}(-t) - 1)) over XPoly coefficients."""
    base = ps.gen_deg_exp(N, -1, t_sign=-1) - LamPoly.one()
    return ps.exp(base * XPoly.x())


def het_bell_gf_check(N: int) -> CheckReport:
    gf = het_bell_gf_series(N)
    H = het2(N)
    for n in range(N + 1):
        got = gf.egf_coeff(n)
        want = het_bell(n, H)
        if got != want:
            return failed("bell-gf", n + 1, f"n={n}: series gives {got}, triangle gives {want}")
    return passed("bell-gf", N + 1)


def classic_bells(family: str, n: int) -> XPoly:
    """phi_n(x), LB_n(x) or phi_{n,lam}(x) as row sums of their triangles."""
    if family == "bell":
        return row_poly(classic("stirling2", n), n)
    if family == "lah_bell":
        return row_poly(classic("lah", n), n)
    if family == "deg_bell":
        return row_poly(degenerate("deg_stirling2", n), n)
    raise ValueError(f"unknown Bell family {family!r}; expected one of {BELL_FAMILIES}")


# --- Dobinski -------------------------------------------------------------

@dataclass(frozen=True)
class DobinskiResult:
    """Truncated Dobinski sum; |value - true value| <= bound."""

    value: mpmath.mpf
    bound: float
    terms: int

    def __float__(self) -> float:
        return float(self.value)

    def error_against(self, exact: Fraction) -> float:
        """|value - exact|, evaluated with enough digits to resolve ``exact``."""
        exact = Fraction(exact)
        with mpmath.workdps(len(str(abs(exact.numerator))) + 40):
            diff = self.value - mpmath.mpf(exact.numerator) / exact.denominator
            return float(abs(diff))


class DobinskiCapError(RuntimeError):
    def __init__(self, message: str, partial: DobinskiResult):
        super().__init__(message)
        self.partial = partial


def dobinski(n: int, x0, lam0, tol: float = 1e-9, cap: int = DOBINSKI_CAP) -> DobinskiResult:
    """e^{-x0} sum_k <k>_{n,lam0} x0^k / k! with a certified truncation bound.

    Terms are summed exactly in rationals. For lam0 >= 0 the term ratio
    T_{k+1}/T_k = x0/(k+1) * prod_s (k+1+s lam0)/(k+s lam0) is
    non-increasing in k >= 1, so once it drops to rho <= 1/2 the tail after
    T_K is at most T_K rho/(1-rho). Summation stops when that tail is below
    tol/2; the remaining tol/2 covers the multiplication by e^{-x0}, carried
    out in mpmath at a precision chosen from the size of the partial sum.
    """
    x0, lam0 = Fraction(x0), Fraction(lam0)
    if n < 0:
        raise ValueError("n must be >= 0")
    if x0 <= 0:
        raise ValueError("x0 must be > 0")
    if lam0 < 0:
        raise ValueError("lam0 must be >= 0; use the exact route for negative lambda")
    if not tol > 0:
        raise ValueError("tol must be > 0")
    half_tol = Fraction(tol) / 2

    def term(k: int) -> Fraction:
        return deg_factorial_value(k, n, lam0) * x0**k / factorial(k)

    total = term(0)
    k = 1
    t_k = term(1)
    while True:
        total += t_k
        t_next = term(k + 1)
        rho = t_next / t_k
        if rho <= Fraction(1, 2):
            tail = t_k * rho / (1 - rho)
            if tail <= half_tol:
                break
        if k + 1 >= cap:
            partial = _finish(total, x0, tol, None, k + 1)
            raise DobinskiCapError(f"no certified bound within {cap} terms", partial)
        k += 1
        t_k = t_next
    return _finish(total, x0, tol, tail, k + 1)


def _finish(total: Fraction, x0: Fraction, tol: float, tail: Fraction | None, terms: int) -> DobinskiResult:
    mag = max(abs(total.numerator) // total.denominator, 1) if total else 1
    digits = len(str(mag)) + max(0, -int(mpmath.floor(mpmath.log10(tol)))) + 20
    with mpmath.workdps(digits):
        value = mpmath.exp(-mpmath.mpf(x0.numerator) / x0.denominator) * (
            mpmath.mpf(total.numerator) / total.denominator
        )
        rounding = mpmath.mpf(10) ** (-(digits - 5)) * max(abs(value), 1)
        if tail is None:
            return DobinskiResult(+value, float("inf"), terms)
        bound = mpmath.mpf(tail.numerator) / tail.denominator + rounding
        return DobinskiResult(+value, float(bound), terms)


# --- Spivey-type identities -----------------------------------------------

def _shifted_rising(m: int, j: int, i: int) -> LamPoly:
    """<m lam + j>_{i,lam} = prod_{s<i} (j + (m+s) lam)."""
    return deg_factorial_value(LamPoly((j, m)), i)


def spivey_sides(m: int, n: int, H: Triangle | None = None) -> tuple[LamPoly, LamPoly]:
    """Both sides of H_{m+n} = sum_{j,k} C(n,k) H(m,j) H_k <m lam + j>_{n-k}."""
    H = H if H is not None and H.order >= m + n else het2(m + n)
    bells = [het_bell_number(i, H) for i in range(m + n + 1)]
    rhs = LamPoly()
    for j in range(m + 1):
        if not H[m, j]:
            continue
        for k in range(n + 1):
            rhs = rhs + H[m, j] * bells[k] * _shifted_rising(m, j, n - k) * comb(n, k)
    return bells[m + n], rhs


def spivey_numbers(m: int, n: int, H: Triangle | None = None) -> CheckReport:
    lhs, rhs = spivey_sides(m, n, H)
    if lhs != rhs:
        return failed("spivey", 1, f"(m={m}, n={n}): lhs {lhs} != rhs {rhs}")
    return passed("spivey", 1)


def spivey_poly_sides(m: int, n: int, H: Triangle | None = None) -> tuple[XPoly, XPoly]:
    """Both sides of H_{n+m}(x) = sum_{k,j} C(n,k) H_k(x) H(m,j) <j + m lam>_{n-k} x^j."""
    H = H if H is not None and H.order >= m + n else het2(m + n)
    rhs = XPoly()
    for k in range(n + 1):
        hk = het_bell(k, H) * comb(n, k)
        inner = XPoly()
        for j in range(m + 1):
            if H[m, j]:
                inner = inner + XPoly.monomial(j, H[m, j] * _shifted_rising(m, j, n - k))
        rhs = rhs + hk * inner
    return het_bell(m + n, H), rhs


def spivey_poly(m: int, n: int, H: Triangle | None = None) -> CheckReport:
    lhs, rhs = spivey_poly_sides(m, n, H)
    if lhs != rhs:
        return failed("spivey-poly", 1, f"(m={m}, n={n}): lhs {lhs} != rhs {rhs}")
    return passed("spivey-poly", 1)


# --- normal ordering ------------------------------------------------------

def normal_ordering_check(nmax: int, mmax: int) -> CheckReport:
    """<xD>_{n,lam} x^m = sum_k H(n,k) x^k D^k x^m, compared as multipliers of x^m:
    <m>_{n,lam} = sum_k H(n,k) (m)_k."""
    H = het2(nmax)
    checked = 0
    for n in range(nmax + 1):
        for m in range(mmax + 1):
            lhs = deg_factorial_value(m, n)
            rhs = LamPoly()
            for k in range(n + 1):
                rhs = rhs + H[n, k] * falling_int(m, k)
            checked += 1
            if lhs != rhs:
                return failed("normal-ordering", checked, f"(n={n}, m={m}): {lhs} != {rhs}")
    return passed("normal-ordering", checked)


# --- r-analogue -----------------------------------------------------------

def het_bell_r(n: int, r: int, Hr: Triangle | None = None) -> XPoly:
    """sum_k x^k H^{(r)}(n+r, k+r)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if r < 1:
        raise ValueError("r must be >= 1")
    if Hr is None or Hr.order < n or Hr.r != r:
        Hr = het2_r(n, r)
    return row_poly(Hr, n)


def het_bell_r_gf_series(N: int, r: int) -> ps.Series:
    """exp(x (e_lam^{-1}(-t) - 1)) * e_lam^{-r}(-t)."""
    pref = ps.gen_deg_exp(N, -r, t_sign=-1) * XPoly.one()
    return het_bell_gf_series(N) * pref


def het_bell_r_gf_check(N: int, r: int) -> CheckReport:
    gf = het_bell_r_gf_series(N, r)
    Hr = het2_r(N, r)
    for n in range(N + 1):
        got, want = gf.egf_coeff(n), het_bell_r(n, r, Hr)
        if got != want:
            return failed(f"r-bell-gf(r={r})", n + 1, f"n={n}: series gives {got}, triangle gives {want}")
    return passed(f"r-bell-gf(r={r})", N + 1)


def shift_identity_check(N: int) -> CheckReport:
    """H_{n+1}(x) = x * sum_k H(n+1,k+1) x^k for n <= N."""
    H = het2(N + 1)
    for n in range(N + 1):
        rhs = XPoly([H[n + 1, k + 1] for k in range(n + 1)]).shift(1)
        if het_bell(n + 1, H) != rhs:
            return failed("shift", n + 1, f"n={n}")
    return passed("shift", N + 1)
