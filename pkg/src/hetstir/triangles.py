"""Number triangles with entries in Q[lambda], each reachable by several routes.

Every builder returns a :class:`Triangle` whose row n holds the entries
(n, 0), ..., (n, n). Heterogeneous families are produced by their
recurrence, by generating-function extraction through
:mod:`hetstir.powerseries`, and by the change-of-basis oracle
:func:`hetstir.ring.to_basis`; the routes never share code beyond the
ring arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from . import powerseries as ps
from .oracles import lah_closed_form
from .report import CheckReport, IdentityError, failed, passed
from .ring import (
    FALLING,
    RISING,
    LamPoly,
    XPoly,
    classic_factorial_poly,
    deg_factorial_value,
    rising_deg,
    to_basis,
)

CLASSIC_FAMILIES = ("stirling2", "stirling1_unsigned", "stirling1_signed", "lah")
DEGENERATE_FAMILIES = ("deg_stirling2", "deg_stirling1_unsigned")
FAMILIES = CLASSIC_FAMILIES + DEGENERATE_FAMILIES + ("het2", "het1", "het2_r")

_ZERO = LamPoly()
_ONE = LamPoly.one()


@dataclass(frozen=True)
class Triangle:
    family: str
    order: int
    rows: tuple
    r: int | None = None

    def __post_init__(self):
        if len(self.rows) != self.order + 1:
            raise ValueError("row count does not match order")
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")

    def __getitem__(self, nk) -> LamPoly:
        n, k = nk
        if n < 0 or k < 0 or k > n:
            return _ZERO
        if n > self.order:
            raise IndexError(f"row {n} beyond order {self.order}")
        return self.rows[n][k]

    def row(self, n: int) -> tuple:
        return self.rows[n]

    def items(self):
        for n, row in enumerate(self.rows):
            for k, v in enumerate(row):
                yield (n, k), v

    def evaluate(self, lam0) -> "Triangle":
        """Entries evaluated at a rational lambda (constant LamPolys)."""
        lam0 = Fraction(lam0)
        rows = tuple(tuple(LamPoly.const(v.eval(lam0)) for v in row) for row in self.rows)
        return Triangle(self.family, self.order, rows, self.r)

    def map(self, fn: Callable[[int, int, LamPoly], LamPoly]) -> "Triangle":
        rows = tuple(tuple(fn(n, k, v) for k, v in enumerate(row)) for n, row in enumerate(self.rows))
        return Triangle(self.family, self.order, rows, self.r)

    def same_entries(self, other: "Triangle") -> bool:
        return self.order == other.order and self.rows == other.rows

    def first_difference(self, other: "Triangle"):
        for (n, k), v in self.items():
            if other[n, k] != v:
                return n, k
        return None


def _from_grid(family: str, N: int, grid, r=None) -> Triangle:
    rows = tuple(tuple(grid[n][k] for k in range(n + 1)) for n in range(N + 1))
    return Triangle(family, N, rows, r)


def _fill_recurrence(family: str, N: int, step, r=None) -> Triangle:
    """Fill T(n+1,k) = T(n,k-1) + step(n,k)*T(n,k) from T(0,0) = 1."""
    if N < 0:
        raise ValueError("N must be >= 0")
    rows = [(_ONE,)]
    for n in range(N):
        prev = rows[-1]
        new = []
        for k in range(n + 2):
            left = prev[k - 1] if k >= 1 else _ZERO
            here = prev[k] if k <= n else _ZERO
            new.append(left + step(n, k) * here if here else left)
        rows.append(tuple(new))
    return Triangle(family, N, tuple(rows), r)


def _from_gf_columns(family: str, N: int, base: ps.Series, prefactor: ps.Series | None = None, r=None) -> Triangle:
    """Column k holds the egf coefficients of prefactor * base**k / k!."""
    if base[0]:
        raise ValueError("column generator must have zero constant term")
    col = ps.Series.const(_ONE, N)
    if prefactor is not None:
        col = col * prefactor
    grid = [[_ZERO] * (N + 1) for _ in range(N + 1)]
    for k in range(N + 1):
        if k:
            col = (col * base) * Fraction(1, k)
        for n in range(k, N + 1):
            grid[n][k] = col.egf_coeff(n)
    return _from_grid(family, N, grid, r)


def _from_basis(family: str, N: int, poly_of_n: Callable[[int], XPoly], basis: str, r=None) -> Triangle:
    grid = []
    for n in range(N + 1):
        coords = to_basis(poly_of_n(n), basis)
        grid.append(coords + [_ZERO] * (n + 1 - len(coords)))
    return _from_grid(family, N, grid, r)


# --- classical ------------------------------------------------------------

def classic(family: str, N: int) -> Triangle:
    """Stirling numbers of both kinds and Lah numbers as constant LamPolys."""
    if family == "stirling2":
        return _fill_recurrence(family, N, lambda n, k: k)
    if family == "stirling1_unsigned":
        return _fill_recurrence(family, N, lambda n, k: n)
    if family == "stirling1_signed":
        u = classic("stirling1_unsigned", N)
        return Triangle(family, N, u.map(lambda n, k, v: v if (n - k) % 2 == 0 else -v).rows)
    if family == "lah":
        grid = [[LamPoly.const(lah_closed_form(n, k)) for k in range(n + 1)] for n in range(N + 1)]
        return _from_grid(family, N, grid)
    raise ValueError(f"unknown classical family {family!r}; expected one of {CLASSIC_FAMILIES}")


def classic_gf(family: str, N: int) -> Triangle:
    """Classical triangles from their exponential generating functions
    (e^t - 1)^k/k!, (-log(1-t))^k/k! and (t/(1-t))^k/k!."""
    if family == "stirling2":
        base = ps.Series.from_egf([_ZERO] + [_ONE] * N, N)
    elif family == "stirling1_unsigned":
        base = ps.Series.from_egf([_ZERO] + [LamPoly.const(factorial(n - 1)) for n in range(1, N + 1)], N)
    elif family == "lah":
        base = ps.Series([_ZERO] + [_ONE] * N, N)
    else:
        raise ValueError(f"no generating function route for {family!r}")
    return _from_gf_columns(family, N, base)


# --- degenerate -----------------------------------------------------------

def _neg_log_one_minus_t(N: int, lam_sign: int = 1) -> ps.Series:
    return -ps.gen_deg_log(N, lam_sign).scale_t(-1)


def degenerate(family: str, N: int, route: str = "gf") -> Triangle:
    """Degenerate Stirling numbers {n k}_lam and [n k]_lam.

    ``route="gf"`` extracts columns of (e_lam(t) - 1)^k/k! and
    (-log_lam(1-t))^k/k!; ``route="oracle"`` expands (x)_{n,lam} in the
    falling basis and <x>_n in the degenerate rising basis.
    """
    if family not in DEGENERATE_FAMILIES:
        raise ValueError(f"unknown degenerate family {family!r}")
    if route == "gf":
        if family == "deg_stirling2":
            return _from_gf_columns(family, N, ps.gen_deg_exp(N, 1) - _ONE)
        return _from_gf_columns(family, N, _neg_log_one_minus_t(N))
    if route == "oracle":
        if family == "deg_stirling2":
            return _from_basis(family, N, lambda n: rising_deg(n, FALLING), "classic_falling")
        return _from_basis(family, N, lambda n: classic_factorial_poly(n, RISING), "deg_rising")
    raise ValueError(f"unknown route {route!r}")


# --- heterogeneous, second kind -------------------------------------------

def het2_recurrence(N: int) -> Triangle:
    """H(n+1,k) = H(n,k-1) + (k + n*lam) H(n,k)."""
    lam = LamPoly.lam()
    return _fill_recurrence("het2", N, lambda n, k: lam * n + k)


def het2_explicit(n: int, k: int) -> LamPoly:
    """(1/k!) sum_j C(k,j) (-1)^(k-j) <j>_{n,lam}."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    acc = LamPoly()
    for j in range(k + 1):
        term = deg_factorial_value(j, n) * comb(k, j)
        acc = acc + term if (k - j) % 2 == 0 else acc - term
    try:
        return acc.exact_div(factorial(k))
    except ArithmeticError as exc:
        raise IdentityError(f"explicit sum for H({n},{k}) not divisible by {k}!") from exc


def het2_explicit_table(N: int) -> Triangle:
    grid = [[het2_explicit(n, k) for k in range(n + 1)] for n in range(N + 1)]
    return _from_grid("het2", N, grid)


def het2_gf(N: int) -> Triangle:
    """Columns of (e_lam^{-1}(-t) - 1)^k / k!."""
    return _from_gf_columns("het2", N, ps.gen_deg_exp(N, -1, t_sign=-1) - _ONE)


def _lam_powers(N: int) -> list[LamPoly]:
    out, p = [], _ONE
    for _ in range(N + 1):
        out.append(p)
        p = p * LamPoly.lam()
    return out


def het2_via_classical_table(N: int) -> Triangle:
    """H(n,k) = sum_l {l k} [n l] lam^(n-l)."""
    s2 = classic("stirling2", N)
    s1 = classic("stirling1_unsigned", N)
    lp = _lam_powers(N)
    grid = [[_ZERO] * (N + 1) for _ in range(N + 1)]
    for n in range(N + 1):
        for k in range(n + 1):
            coeffs = [Fraction(0)] * (n - k + 1)
            for l in range(k, n + 1):
                coeffs[n - l] += s2[l, k].constant() * s1[n, l].constant()
            grid[n][k] = LamPoly(coeffs)
    return _from_grid("het2", N, grid)


def het2_via_classical(n: int, k: int) -> LamPoly:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return het2_via_classical_table(n)[n, k]


def het2_oracle(N: int) -> Triangle:
    """Coordinates of <x>_{n,lam} in the falling-factorial basis."""
    return _from_basis("het2", N, lambda n: rising_deg(n, RISING), "classic_falling")


def het2(N: int) -> Triangle:
    return het2_recurrence(N)


# --- heterogeneous, first kind --------------------------------------------

def het1_recurrence(N: int) -> Triangle:
    """G(n+1,k) = G(n,k-1) - (n + k*lam) G(n,k)."""
    lam = LamPoly.lam()
    return _fill_recurrence("het1", N, lambda n, k: -(lam * k + n))


def het1_gf(N: int) -> Triangle:
    """Columns of (log_{-lam}(1+t))^k / k!."""
    return _from_gf_columns("het1", N, ps.gen_deg_log(N, -1))


def het1_oracle(N: int) -> Triangle:
    """Coordinates of (x)_n in the degenerate rising basis."""
    return _from_basis("het1", N, lambda n: classic_factorial_poly(n, FALLING), "deg_rising")


def het1(N: int) -> Triangle:
    return het1_recurrence(N)


# --- Lah through mixed convolutions ---------------------------------------

LAH_ROUTES = ("degenerate", "heterogeneous")


def lah_mixed_table(N: int, route: str) -> Triangle:
    """sum_l {l k}_lam [n l]_{-lam}  (degenerate)  or  sum_l H(l,k) [n l]_lam  (heterogeneous).

    Both sums are independent of lambda; a non-constant entry raises
    :class:`IdentityError`.
    """
    if route == "degenerate":
        left = degenerate("deg_stirling2", N)
        right = degenerate("deg_stirling1_unsigned", N).map(lambda n, k, v: v.negate_var())
    elif route == "heterogeneous":
        left = het2(N)
        right = degenerate("deg_stirling1_unsigned", N)
    else:
        raise ValueError(f"unknown route {route!r}; expected one of {LAH_ROUTES}")
    grid = [[_ZERO] * (N + 1) for _ in range(N + 1)]
    for n in range(N + 1):
        for k in range(n + 1):
            acc = LamPoly()
            for l in range(k, n + 1):
                acc = acc + left[l, k] * right[n, l]
            if not acc.is_constant():
                raise IdentityError(f"{route}: L({n},{k}) came out as {acc}, which depends on lambda")
            grid[n][k] = acc
    return _from_grid("lah", N, grid)


def lah_mixed(n: int, k: int, route: str) -> LamPoly:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return lah_mixed_table(n, route)[n, k]


# --- r-analogue -----------------------------------------------------------

R_ROUTES = ("recurrence", "gf", "oracle")


def het2_r(N: int, r: int, route: str = "recurrence") -> Triangle:
    """Entry (n, k) stores H^{(r)}(n+r, k+r).

    Routes: the shifted recurrence with factor (k + r + n*lam), the egf of
    (e_lam^{-1}(-t) - 1)^k/k! * e_lam^{-r}(-t), and the expansion of
    <x + r>_{n,lam} in the falling-factorial basis.
    """
    if r < 1:
        raise ValueError("r must be >= 1 (r = 0 is the plain het2 triangle)")
    if N < 0:
        raise ValueError("N must be >= 0")
    if route == "recurrence":
        lam = LamPoly.lam()
        return _fill_recurrence("het2_r", N, lambda n, k: lam * n + (k + r), r=r)
    if route == "gf":
        base = ps.gen_deg_exp(N, -1, t_sign=-1) - _ONE
        pref = ps.gen_deg_exp(N, -r, t_sign=-1)
        return _from_gf_columns("het2_r", N, base, pref, r=r)
    if route == "oracle":
        lam = LamPoly.lam()

        def shifted(n):
            p = XPoly.one()
            for j in range(n):
                p = p * XPoly((lam * j + r, 1))
            return p

        return _from_basis("het2_r", N, shifted, "classic_falling", r=r)
    raise ValueError(f"unknown route {route!r}; expected one of {R_ROUTES}")


# --- inversion ------------------------------------------------------------

def invert_check(N: int, H: Triangle | None = None, G: Triangle | None = None) -> CheckReport:
    """sum_l H(n,l) G(l,k) = sum_l G(n,l) H(l,k) = delta_{nk} for k <= n <= N."""
    H = H or het2(N)
    G = G or het1(N)
    checked = 0
    for first, second, label in ((H, G, "H*G"), (G, H, "G*H")):
        for n in range(N + 1):
            for k in range(n + 1):
                acc = LamPoly()
                for l in range(k, n + 1):
                    acc = acc + first[n, l] * second[l, k]
                checked += 1
                if acc != (_ONE if n == k else _ZERO):
                    return failed("inversion", checked, f"{label} at (n={n}, k={k}) = {acc}")
    return passed("inversion", checked)


def compare_triangles(name: str, reference: Triangle, others: Sequence[tuple[str, Triangle]]) -> CheckReport:
    """Entry-wise equality of several routes against a reference."""
    checked = 0
    for label, tri in others:
        diff = reference.first_difference(tri)
        checked += sum(1 for _ in reference.items())
        if diff is not None:
            n, k = diff
            return failed(name, checked, f"{label} differs at (n={n}, k={k}): {reference[n, k]} vs {tri[n, k]}")
    return passed(name, checked)
