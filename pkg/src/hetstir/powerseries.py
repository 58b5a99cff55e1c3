"""Truncated power series over an exact Q-algebra.

A :class:`Series` of order N stores the ordinary coefficients a_0..a_N of
t^0..t^N. Coefficients may be ``Fraction``, ``LamPoly`` or ``XPoly``; the
only requirement is ring arithmetic plus multiplication by a ``Fraction``.
Exponential-generating-function values are read off with
:meth:`Series.egf_coeff`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .ring import LamPoly, XPoly


def _zero_like(c):
    return c * 0


def _one_like(c):
    return c * 0 + 1


class Series:
    """Immutable truncated series a_0 + a_1 t + ... + a_N t^N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None, zero=Fraction(0)):
        cs = list(coeffs)
        if cs:
            zero = _zero_like(cs[0])
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = cs[: order + 1] + [zero] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def zero(self):
        return _zero_like(self.coeffs[0])

    @classmethod
    def from_egf(cls, values: Sequence, order: int | None = None) -> "Series":
        """Series whose n-th egf coefficient is ``values[n]``."""
        return cls([v * Fraction(1, factorial(n)) for n, v in enumerate(values)], order)

    @classmethod
    def const(cls, c, order: int) -> "Series":
        return cls([c], order)

    @classmethod
    def t(cls, order: int, one=Fraction(1)) -> "Series":
        return cls([_zero_like(one), one], order)

    def __getitem__(self, n: int):
        if 0 <= n <= self.order:
            return self.coeffs[n]
        if n > self.order:
            raise IndexError(f"coefficient {n} is beyond truncation order {self.order}")
        return self.zero

    def egf_coeff(self, n: int):
        return self[n] * factorial(n)

    def egf_coeffs(self) -> list:
        return [self.egf_coeff(n) for n in range(self.order + 1)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r}, order={self.order})"

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, order)

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        return Series.const(self.zero + other, self.order)

    def __add__(self, other) -> "Series":
        o = self._coerce(other)
        n = min(self.order, o.order)
        return Series([a + b for a, b in zip(self.coeffs[: n + 1], o.coeffs[: n + 1])], n)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-a for a in self.coeffs], self.order)

    def __sub__(self, other) -> "Series":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Series":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            # coefficient-wise scaling by a ring element or rational
            return Series([a * other for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        zero = self.zero
        out = []
        for k in range(n + 1):
            acc = zero
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out, n)

    def __rmul__(self, other) -> "Series":
        return Series([other * a for a in self.coeffs], self.order)

    def scale_t(self, c) -> "Series":
        """Substitute t -> c*t."""
        out, p = [], 1
        for a in self.coeffs:
            out.append(a * p)
            p = p * c
        return Series(out, self.order)

    def powi(self, k: int) -> "Series":
        return powi(self, k)


def mul(a: Series, b: Series) -> Series:
    return a * b


def powi(a: Series, k: int) -> Series:
    """a**k by repeated squaring; a**0 is the constant 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    result = Series.const(_one_like(a.coeffs[0]), a.order)
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def exp(a: Series) -> Series:
    """exp(a) for a series with zero constant term.

    Uses n*b_n = sum_{k=1}^n k*a_k*b_{n-k}, which equals the truncated
    sum of a**j/j! but needs only O(N^2) coefficient products.
    """
    if a.coeffs[0]:
        raise ValueError("exp requires a zero constant term")
    N = a.order
    b = [_one_like(a.coeffs[0])]
    for n in range(1, N + 1):
        acc = a.zero
        for k in range(1, n + 1):
            if a[k] and b[n - k]:
                acc = acc + a[k] * b[n - k] * k
        b.append(acc * Fraction(1, n))
    return Series(b, N)


def compose(outer: Series, inner: Series) -> Series:
    """outer(inner(t)) truncated to the smaller order; inner must have a_0 = 0."""
    if inner.coeffs[0]:
        raise ValueError("compose requires the inner series to have zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = Series.const(outer[n], n)
    for i in range(n - 1, -1, -1):
        acc = acc * inner + Series.const(outer[i], n)
    return acc


def gen_deg_exp(N: int, x=1, lam_sign: int = 1, t_sign: int = 1) -> Series:
    """e_{s*lam}^{x}(t_sign * t) with lambda symbolic.

    The n-th egf coefficient is (x)_{n, s*lam} * t_sign**n. Useful cases:

    * ``x=1``: e_lam(t), egf coefficients (1)_{n,lam}
    * ``x=-1, t_sign=-1``: e_lam^{-1}(-t), egf coefficients <1>_{n,lam}
    * ``x=-r, t_sign=-1``: e_lam^{-r}(-t), egf coefficients <r>_{n,lam}

    ``x`` may be a rational, a LamPoly or an XPoly; coefficients live in
    the corresponding algebra.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if lam_sign not in (1, -1) or t_sign not in (1, -1):
        raise ValueError("signs must be +1 or -1")
    step = LamPoly.lam() * lam_sign
    vals = []
    acc = XPoly.one() if isinstance(x, XPoly) else LamPoly.one()
    for n in range(N + 1):
        vals.append(acc * (t_sign ** n))
        acc = acc * (x - step * n)
    return Series.from_egf(vals, N)


def deg_log_coeff(n: int, lam_sign: int = 1) -> LamPoly:
    """n-th egf coefficient of log_{s*lam}(1+t): prod_{j=1}^{n-1}(s*lam - j)."""
    if n == 0:
        return LamPoly()
    lam = LamPoly.lam() * lam_sign
    acc = LamPoly.one()
    for j in range(1, n):
        acc = acc * (lam - j)
    return acc


def gen_deg_log(N: int, lam_sign: int = 1) -> Series:
    """log_{s*lam}(1+t), the compositional inverse of e_{s*lam}(t) - 1.

    Stored with the 1/lam factors cleared, so every coefficient is a genuine
    polynomial in lambda and lambda = 0 is regular.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if lam_sign not in (1, -1):
        raise ValueError("lam_sign must be +1 or -1")
    return Series.from_egf([deg_log_coeff(n, lam_sign) for n in range(N + 1)], N)


def geometric(N: int, c=Fraction(1)) -> Series:
    """1/(1 - c t) truncated."""
    return Series([Fraction(c) ** n for n in range(N + 1)], N)


def eval_lam(s: Series, lam0) -> Series:
    """Evaluate LamPoly coefficients at a rational lambda."""
    return Series([c.eval(lam0) for c in s.coeffs], s.order)
