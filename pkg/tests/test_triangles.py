from fractions import Fraction

import pytest

from hetstir import oracles
from hetstir import triangles as tr
from hetstir.report import IdentityError
from hetstir.ring import LamPoly, XPoly, rising_deg, to_basis

lam = LamPoly.lam()


def L(*cs):
    return LamPoly(cs)


# --- enumeration oracles --------------------------------------------------

@pytest.mark.parametrize("n", range(8))
def test_cycle_weighted_partitions_count_permutations(n):
    assert oracles.stirling1_unsigned_counts(n) == oracles.stirling1_unsigned_by_permutations(n)


@pytest.mark.parametrize("n", range(9))
def test_lah_closed_form_counts_ordered_lists(n):
    assert oracles.lah_by_ordered_lists(n) == [oracles.lah_closed_form(n, k) for k in range(n + 1)]


def test_bell_numbers_by_enumeration():
    assert [oracles.bell_number(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


# --- classical ------------------------------------------------------------

def test_classic_examples():
    assert tr.classic("lah", 3)[3, 2] == 6
    assert tr.classic("stirling2", 4)[4, 2] == oracles.stirling2_counts(4)[2] == 7
    assert tr.classic("stirling1_unsigned", 4)[4, 2] == oracles.stirling1_unsigned_by_permutations(4)[2] == 11
    assert tr.classic("stirling1_signed", 4)[4, 3] == -6


@pytest.mark.parametrize("family", ["stirling2", "stirling1_unsigned", "lah"])
def test_classic_recurrence_matches_generating_function(family):
    assert tr.classic(family, 14).same_entries(tr.classic_gf(family, 14))


@pytest.mark.parametrize("n", range(11))
def test_classic_matches_enumeration(n):
    s2 = tr.classic("stirling2", n)
    s1 = tr.classic("stirling1_unsigned", n)
    assert [s2[n, k] for k in range(n + 1)] == oracles.stirling2_counts(n)
    assert [s1[n, k] for k in range(n + 1)] == oracles.stirling1_unsigned_counts(n)


def test_unknown_family():
    with pytest.raises(ValueError):
        tr.classic("bernoulli", 3)
    with pytest.raises(ValueError):
        tr.degenerate("stirling2", 3)


# --- degenerate -----------------------------------------------------------

def test_degenerate_examples():
    d2 = tr.degenerate("deg_stirling2", 10)
    assert d2[2, 1] == L(1, -1)
    assert all(d2[n, n] == 1 for n in range(11))
    d1 = tr.degenerate("deg_stirling1_unsigned", 10)
    assert d1.evaluate(0).same_entries(tr.classic("stirling1_unsigned", 10))
    assert d2.evaluate(0).same_entries(tr.classic("stirling2", 10))


@pytest.mark.parametrize("family", tr.DEGENERATE_FAMILIES)
def test_degenerate_routes_agree(family):
    assert tr.degenerate(family, 12, "gf").same_entries(tr.degenerate(family, 12, "oracle"))


# --- het2 -----------------------------------------------------------------

def test_het2_examples():
    H = tr.het2_recurrence(3)
    assert H[2, 1] == L(1, 1)
    assert H[3, 2] == L(3, 3)
    assert H[1, 0] == 0
    oracle = to_basis(rising_deg(3), "classic_falling")
    assert oracle[2] == L(3, 3)


def test_het2_explicit_examples():
    assert tr.het2_explicit(2, 1) == L(1, 1)
    assert tr.het2_explicit(3, 1) == L(1, 3, 2)
    assert all(tr.het2_explicit(n, n) == 1 for n in range(9))
    with pytest.raises(ValueError):
        tr.het2_explicit(2, 3)


def test_het2_gf_examples():
    H = tr.het2_gf(6)
    assert [H[n, 0] for n in range(7)] == [1, 0, 0, 0, 0, 0, 0]
    assert H[2, 2] == 1
    assert H[3, 2] == L(3, 3)


def test_het2_via_classical_examples():
    assert tr.het2_via_classical(2, 1) == L(1, 1)
    assert all(tr.het2_via_classical(n, n) == 1 for n in range(7))
    assert tr.het2_via_classical(4, 2).eval(1) == 36 == oracles.lah_closed_form(4, 2)


def test_het2_routes_agree():
    N = 12
    ref = tr.het2_recurrence(N)
    for other in (tr.het2_explicit_table(N), tr.het2_gf(N), tr.het2_via_classical_table(N), tr.het2_oracle(N)):
        assert ref.same_entries(other)


def test_triangle_boundary_and_diagonal():
    H = tr.het2(8)
    assert H[3, -1] == 0 and H[3, 4] == 0
    assert all(H[n, n] == 1 for n in range(9))
    with pytest.raises(IndexError):
        H[9, 2]


def test_het2_explicit_endpoints():
    # lambda = 1 gives Lah numbers, lambda = 0 gives Stirling numbers of the second kind
    for n in range(13):
        s2 = oracles.stirling2_counts(n) if n <= 9 else [tr.classic("stirling2", n)[n, k] for k in range(n + 1)]
        for k in range(n + 1):
            h = tr.het2_explicit(n, k)
            assert h.eval(1) == oracles.lah_closed_form(n, k)
            assert h.eval(0) == s2[k]


def test_lah_recurrence_from_both_kinds():
    Lt = tr.classic("lah", 13)
    for n in range(12):
        for k in range(n + 2):
            assert Lt[n + 1, k] == Lt[n, k - 1] + (k + n) * Lt[n, k]


# --- het1 -----------------------------------------------------------------

def test_het1_examples():
    G = tr.het1_recurrence(3)
    assert G[2, 1] == L(-1, -1)
    assert G[1, 1] == 1
    assert G[2, 1].eval(1) == -2 == (-1) ** (2 - 1) * oracles.lah_closed_form(2, 1)


def test_het1_gf_examples():
    G = tr.het1_gf(5)
    assert G[1, 1] == 1
    assert G[2, 1] == L(-1, -1)
    assert [G[n, 0] for n in range(6)] == [1, 0, 0, 0, 0, 0]


def test_het1_routes_agree():
    ref = tr.het1_recurrence(12)
    assert ref.same_entries(tr.het1_gf(12))
    assert ref.same_entries(tr.het1_oracle(12))


def test_invert_examples():
    assert tr.invert_check(1)
    H, G = tr.het2(2), tr.het1(2)
    assert H[2, 1] * G[1, 1] + H[2, 2] * G[2, 1] == 0
    assert tr.invert_check(12)


def test_invert_reports_first_failure():
    H = tr.het2(3)
    bad = H.map(lambda n, k, v: v + 1 if (n, k) == (2, 1) else v)
    rep = tr.invert_check(3, H=bad)
    assert not rep
    assert "n=2, k=1" in rep.failure


# --- Lah through mixed sums -----------------------------------------------

def test_lah_mixed_examples():
    assert tr.lah_mixed(3, 2, "degenerate") == 6
    assert tr.lah_mixed(2, 2, "heterogeneous") == 1
    assert tr.lah_mixed(4, 1, "heterogeneous") == 24
    with pytest.raises(ValueError):
        tr.lah_mixed(3, 2, "nope")


def test_lah_mixed_detects_lambda_dependence(monkeypatch):
    real = tr.degenerate

    def skewed(family, N, route="gf"):
        T = real(family, N, route)
        if family == "deg_stirling1_unsigned":
            return T.map(lambda n, k, v: v + lam if (n, k) == (2, 1) else v)
        return T

    monkeypatch.setattr(tr, "degenerate", skewed)
    with pytest.raises(IdentityError):
        tr.lah_mixed_table(3, "heterogeneous")


# --- r-analogue -----------------------------------------------------------

def test_het2_r_examples():
    T1 = tr.het2_r(2, 1)
    assert T1[1, 0] == 1 and T1[1, 1] == 1
    assert T1[2, 1] == L(3, 1)
    assert tr.het2_r(0, 2)[0, 0] == 1
    with pytest.raises(ValueError):
        tr.het2_r(3, 0)


def test_het2_r_oracle_row():
    # <x+1>_{2,lam} = x^2 + (2+lam)x + (1+lam) = (x)_2 + (3+lam)(x)_1 + (1+lam)
    p = (XPoly.x() + 1) * (XPoly.x() + 1 + lam)
    assert to_basis(p, "classic_falling") == [L(1, 1), L(3, 1), L(1)]


@pytest.mark.parametrize("r", [1, 2, 3])
def test_het2_r_routes_agree(r):
    ref = tr.het2_r(10, r, "recurrence")
    assert ref.same_entries(tr.het2_r(10, r, "gf"))
    assert ref.same_entries(tr.het2_r(10, r, "oracle"))


def test_evaluate_gives_constant_entries():
    T = tr.het2(5).evaluate(Fraction(1, 2))
    assert T[3, 2] == Fraction(9, 2)
    assert all(v.is_constant() for _, v in T.items())
