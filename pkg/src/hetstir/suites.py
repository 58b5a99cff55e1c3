"""Named verification suites driven by ``hetstir verify``.

Each suite takes ``(n_max, r_values, tol)`` and returns a list of
:class:`CheckReport`. Sizes follow ``n_max`` except where an enumeration
oracle is exponential, in which case the oracle range is capped and the
classical recurrence takes over beyond it.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable

from . import bellpoly as bp
from . import oracles
from . import powerseries as ps
from . import triangles as tr
from .report import CheckReport, IdentityError, failed, passed
from .ring import LamPoly

BRUTE_FORCE_MAX = 10
DOBINSKI_X = (Fraction(1, 2), Fraction(1), Fraction(2))
DOBINSKI_LAM = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1))


def series_suite(n_max: int, r_values=(), tol=None) -> list[CheckReport]:
    N = max(n_max, 1)
    out = []
    one_plus_t = ps.Series([LamPoly.one(), LamPoly.one()], N)
    t = ps.Series([LamPoly(), LamPoly.one()], N)
    for s in (1, -1):
        e = ps.gen_deg_exp(N, 1, lam_sign=s)
        lg = ps.gen_deg_log(N, s)
        name = f"series-inverse({'+' if s > 0 else '-'}lam)"
        if ps.compose(e, lg) != one_plus_t:
            out.append(failed(name, N, "e(log(1+t)) != 1+t"))
        elif ps.compose(lg, e - LamPoly.one()) != t:
            out.append(failed(name, N, "log(e(t)) != t"))
        else:
            out.append(passed(name, 2 * (N + 1)))
    lhs = ps.compose(ps.gen_deg_log(N, 1), ps.Series([LamPoly()] + [LamPoly.one()] * N, N))
    rhs = -ps.gen_deg_log(N, -1).scale_t(-1)
    if lhs != rhs:
        out.append(failed("series-log-substitution", N + 1, "log_lam(1/(1-t)) != -log_{-lam}(1-t)"))
    else:
        out.append(passed("series-log-substitution", N + 1))
    return out


def het2_suite(n_max: int, r_values=(), tol=None) -> list[CheckReport]:
    ref = tr.het2_recurrence(n_max)
    out = [
        tr.compare_triangles(
            "het2-routes",
            ref,
            [
                ("explicit", tr.het2_explicit_table(n_max)),
                ("gf", tr.het2_gf(n_max)),
                ("classical", tr.het2_via_classical_table(n_max)),
                ("oracle", tr.het2_oracle(n_max)),
            ],
        )
    ]
    out.append(het2_structure(ref))
    return out


def het2_structure(H: tr.Triangle) -> CheckReport:
    """Constant term {n k}, top coefficient [n k] at degree n-k, nonnegative integers."""
    s2 = tr.classic("stirling2", H.order)
    s1 = tr.classic("stirling1_unsigned", H.order)
    checked = 0
    for (n, k), v in H.items():
        checked += 1
        if v.constant() != s2[n, k].constant():
            return failed("het2-structure", checked, f"constant term of H({n},{k})")
        top = s1[n, k].constant()
        # [n 0] = 0 for n >= 1 makes H(n,0) vanish identically
        if (v.degree != n - k or v.leading() != top) if top else v:
            return failed("het2-structure", checked, f"top coefficient of H({n},{k})")
        if any(c < 0 or c.denominator != 1 for c in v.coeffs):
            return failed("het2-structure", checked, f"H({n},{k}) has a negative or fractional coefficient")
    return passed("het2-structure", checked)


def het1_suite(n_max: int, r_values=(), tol=None) -> list[CheckReport]:
    ref = tr.het1_recurrence(n_max)
    out = [tr.compare_triangles("het1-routes", ref, [("gf", tr.het1_gf(n_max)), ("oracle", tr.het1_oracle(n_max))])]
    checked = 0
    bad = None
    for (n, k), v in ref.items():
        checked += 1
        signed = v if (n - k) % 2 == 0 else -v
        if any(c < 0 for c in signed.coeffs):
            bad = (n, k)
            break
    out.append(failed("het1-signs", checked, f"G{bad}") if bad else passed("het1-signs", checked))
    return out


def inversion_suite(n_max: int, r_values=(), tol=None) -> list[CheckReport]:
    return [tr.invert_check(n_max)]


def _oracle_rows(n_max: int):
    s2 = tr.classic("stirling2", n_max)
    s1 = tr.classic("stirling1_unsigned", n_max)
    rows2, rows1 = [], []
    for n in range(n_max + 1):
        if n <= BRUTE_FORCE_MAX:
            rows2.append(oracles.stirling2_counts(n))
            rows1.append(oracles.stirling1_unsigned_counts(n))
        else:
            rows2.append([s2[n, k].constant() for k in range(n + 1)])
            rows1.append([s1[n, k].constant() for k in range(n + 1)])
    return rows2, rows1


def limits_suite(n_max: int, r_values=(), tol=None) -> list[CheckReport]:
    H = tr.het2(n_max)
    G = tr.het1(n_max)
    rows2, rows1 = _oracle_rows(n_max)
    cases = {
        "limit-het2-lam0": lambda n, k: H[n, k].eval(0) == rows2[n][k],
        "limit-het2-lam1": lambda n, k: H[n, k].eval(1) == oracles.lah_closed_form(n, k),
        "limit-het1-lam0": lambda n, k: G[n, k].eval(0) == (-1) ** (n - k) * rows1[n][k],
        "limit-het1-lam1": lambda n, k: G[n, k].eval(1) == (-1) ** (n - k) * oracles.lah_closed_form(n, k),
    }
    out = []
    for name, ok in cases.items():
        bad = next(((n, k) for n in range(n_max + 1) for k in range(n + 1) if not ok(n, k)), None)
        count = (n_max + 1) * (n_max + 2) // 2
        out.append(failed(name, count, f"at {bad}") if bad else passed(name, count))
    return out


def lah_suite(n_max: int, r_values=(), tol=None) -> list[CheckReport]:
    out = []
    for route in tr.LAH_ROUTES:
        name = f"lah-{route}"
        try:
            T = tr.lah_mixed_table(n_max, route)
        except IdentityError as exc:
            out.append(failed(name, 0, str(exc)))
            continue
        bad = None
        for (n, k), v in T.items():
            lah = oracles.lah_closed_form(n, k)
            # equivalent normalisation: C(n,k) C(n-1,k-1) = L(n,k)/(n-k)!
            binom_form = comb(n, k) * (comb(n - 1, k - 1) if k >= 1 else int(n == 0))
            if v != lah or v.constant() / factorial(n - k) != binom_form:
                bad = (n, k)
                break
        count = (n_max + 1) * (n_max + 2) // 2
        out.append(failed(name, count, f"at {bad}") if bad else passed(name, count))
    return out


def bell_suite(n_max: int, r_values=(), tol=None) -> list[CheckReport]:
    out = [bp.het_bell_gf_check(n_max)]
    H = tr.het2(n_max)
    bad = None
    for n in range(n_max + 1):
        hb = bp.het_bell(n, H)
        if hb.eval_lam(0) != bp.classic_bells("bell", n) or hb.eval_lam(1) != bp.classic_bells("lah_bell", n):
            bad = n
            break
    out.append(failed("bell-endpoints", n_max + 1, f"n={bad}") if bad is not None else passed("bell-endpoints", n_max + 1))
    return out


def dobinski_suite(n_max: int, r_values=(), tol=1e-9) -> list[CheckReport]:
    tol = 1e-9 if tol is None else tol
    H = tr.het2(n_max)
    checked = 0
    for n in range(min(n_max, 10) + 1):
        poly = bp.het_bell(n, H)
        for x0 in DOBINSKI_X:
            for lam0 in DOBINSKI_LAM:
                res = bp.dobinski(n, x0, lam0, tol)
                err = res.error_against(poly.eval(x0, lam0))
                checked += 1
                if not (res.bound <= tol and err <= res.bound):
                    return [failed("dobinski", checked, f"n={n} x={x0} lam={lam0}: err {err:.3e}, bound {res.bound:.3e}")]
    return [passed("dobinski", checked)]


def spivey_suite(n_max: int, r_values=(), tol=None) -> list[CheckReport]:
    H = tr.het2(n_max)
    out = []
    for name, check, top in (("spivey", bp.spivey_numbers, n_max), ("spivey-poly", bp.spivey_poly, min(n_max, 10))):
        checked = 0
        pairs = ((m, total - m) for total in range(top + 1) for m in range(total + 1))
        for m, n in pairs:
            rep = check(m, n, H)
            checked += 1
            if not rep:
                out.append(failed(name, checked, rep.failure))
                break
        else:
            out.append(passed(name, checked))
    return out


def r_suite(n_max: int, r_values=(1, 2), tol=None) -> list[CheckReport]:
    out = []
    for r in r_values:
        ref = tr.het2_r(n_max, r, "recurrence")
        out.append(
            tr.compare_triangles(
                f"r-routes(r={r})",
                ref,
                [("gf", tr.het2_r(n_max, r, "gf")), ("oracle", tr.het2_r(n_max, r, "oracle"))],
            )
        )
        out.append(bp.het_bell_r_gf_check(n_max, r))
    return out


def normal_suite(n_max: int, r_values=(), tol=None) -> list[CheckReport]:
    return [bp.normal_ordering_check(n_max, n_max)]


def shift_suite(n_max: int, r_values=(), tol=None) -> list[CheckReport]:
    return [bp.shift_identity_check(n_max)]


SUITES: dict[str, Callable[..., list[CheckReport]]] = {
    "series": series_suite,
    "het2": het2_suite,
    "het1": het1_suite,
    "inversion": inversion_suite,
    "limits": limits_suite,
    "lah": lah_suite,
    "bell": bell_suite,
    "dobinski": dobinski_suite,
    "spivey": spivey_suite,
    "r": r_suite,
    "normal": normal_suite,
    "shift": shift_suite,
}


def run_suites(names, n_max: int, r_values=(1, 2), tol: float = 1e-9) -> list[CheckReport]:
    if "all" in names:
        names = list(SUITES)
    reports = []
    for name in names:
        reports.extend(SUITES[name](n_max, tuple(r_values), tol))
    return reports
