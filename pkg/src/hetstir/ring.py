"""Exact arithmetic tower: rationals, polynomials in lambda, polynomials in x.

``Rat`` is :class:`fractions.Fraction`. ``LamPoly`` is a dense univariate
polynomial in lambda with rational coefficients, and ``XPoly`` a dense
polynomial in x whose coefficients are ``LamPoly``. Both are immutable and
kept in canonical (trimmed) form, so ``==`` is structural equality.

Anything supporting ``+``, ``-``, ``*`` and multiplication by a ``Fraction``
counts as a Q-algebra for :mod:`hetstir.powerseries`; ``Fraction``,
``LamPoly`` and ``XPoly`` all qualify.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction
Scalar = Union[int, Fraction]

# degree of the zero polynomial
NEG_INF = float("-inf")

FALLING = "falling"
RISING = "rising"


def rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rat(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rat(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def _trim(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class LamPoly:
    """Polynomial in lambda with Fraction coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _trim([Fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("LamPoly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> "LamPoly":
        return cls((c,))

    @classmethod
    def lam(cls) -> "LamPoly":
        return cls((0, 1))

    @classmethod
    def zero(cls) -> "LamPoly":
        return cls()

    @classmethod
    def one(cls) -> "LamPoly":
        return cls((1,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        return self[0]

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, LamPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.constant())
        return hash(("LamPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"LamPoly({format_lampoly(self)!r})"

    def __str__(self) -> str:
        return format_lampoly(self)

    @staticmethod
    def _lift(other) -> "LamPoly":
        if isinstance(other, LamPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LamPoly((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LamPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LamPoly":
        return LamPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LamPoly()
            return LamPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, LamPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LamPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return LamPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational only."""
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, LamPoly) and other.is_constant() and other:
            return self * (1 / other.constant())
        return NotImplemented

    def __pow__(self, k: int) -> "LamPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = LamPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @classmethod
    def _raw(cls, coeffs: list) -> "LamPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", _trim(coeffs))
        return p

    def __call__(self, lam: Scalar) -> Fraction:
        return self.eval(lam)

    def eval(self, lam: Scalar) -> Fraction:
        """Horner evaluation at a rational lambda."""
        lam = Fraction(lam)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * lam + c
        return acc

    def negate_var(self) -> "LamPoly":
        """Substitute lambda -> -lambda."""
        return LamPoly._raw([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def exact_div(self, d: int) -> "LamPoly":
        """Divide by an integer, requiring every coefficient to stay integral
        when it was integral before (used to catch bad k! normalisations)."""
        out = []
        for c in self.coeffs:
            if c.denominator == 1 and c.numerator % d:
                raise ArithmeticError(f"{format_lampoly(self)} is not divisible by {d}")
            out.append(c / d)
        return LamPoly._raw(out)


def limit_eval(p: LamPoly, lam0: Scalar) -> Fraction:
    """Exact value of ``p`` at ``lambda = lam0``."""
    return p.eval(lam0)


class XPoly:
    """Polynomial in x with LamPoly coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        lifted = [c if isinstance(c, LamPoly) else LamPoly.const(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _trim(lifted))

    def __setattr__(self, name, value):
        raise AttributeError("XPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: list) -> "XPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", _trim(coeffs))
        return p

    @classmethod
    def x(cls) -> "XPoly":
        return cls((0, 1))

    @classmethod
    def zero(cls) -> "XPoly":
        return cls()

    @classmethod
    def one(cls) -> "XPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, j: int, c=1) -> "XPoly":
        return cls([0] * j + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __getitem__(self, j: int) -> LamPoly:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return LamPoly()

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, LamPoly)):
            return self == XPoly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("XPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"XPoly({format_xpoly(self)!r})"

    def __str__(self) -> str:
        return format_xpoly(self)

    @staticmethod
    def _lift(other):
        if isinstance(other, XPoly):
            return other
        if isinstance(other, LamPoly):
            return XPoly._raw([other])
        if isinstance(other, (int, Fraction)):
            return XPoly._raw([LamPoly.const(other)])
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LamPoly)):
            if not other:
                return XPoly()
            return XPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return XPoly()
        out = [LamPoly()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return XPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "XPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = XPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def eval_x(self, x0) -> LamPoly:
        """Substitute x = x0 (a rational or a LamPoly); returns a LamPoly."""
        acc = LamPoly()
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def eval_lam(self, lam0: Scalar) -> "XPoly":
        """Substitute lambda = lam0 coefficient-wise; the result is lambda-free."""
        return XPoly._raw([LamPoly.const(c.eval(lam0)) for c in self.coeffs])

    def eval(self, x0: Scalar, lam0: Scalar) -> Fraction:
        return self.eval_x(Fraction(x0)).eval(lam0)

    def negate_var(self) -> "XPoly":
        """Substitute lambda -> -lambda in every coefficient."""
        return XPoly._raw([c.negate_var() for c in self.coeffs])

    def shift(self, j: int) -> "XPoly":
        """Multiply by x**j."""
        if not self.coeffs:
            return self
        return XPoly._raw([LamPoly()] * j + list(self.coeffs))


# --- factorial bases -------------------------------------------------------

def _check_variant(variant: str) -> None:
    if variant not in (FALLING, RISING):
        raise ValueError(f"variant must be 'rising' or 'falling', got {variant!r}")


def rising_deg(n: int, variant: str = RISING) -> XPoly:
    """Degenerate factorial x(x +/- lam)...(x +/- (n-1)lam) as an XPoly.

    ``variant="rising"`` gives <x>_{n,lam}; ``"falling"`` gives (x)_{n,lam}.
    """
    _check_variant(variant)
    if n < 0:
        raise ValueError("n must be >= 0")
    sign = 1 if variant == RISING else -1
    lam = LamPoly.lam()
    p = XPoly.one()
    for j in range(n):
        p = p * XPoly((lam * (sign * j), 1))
    return p


def classic_factorial_poly(n: int, variant: str = FALLING) -> XPoly:
    """(x)_n or <x>_n with integer coefficients."""
    _check_variant(variant)
    if n < 0:
        raise ValueError("n must be >= 0")
    sign = 1 if variant == RISING else -1
    p = XPoly.one()
    for j in range(n):
        p = p * XPoly((sign * j, 1))
    return p


def deg_factorial_value(a, n: int, lam=None, variant: str = RISING):
    """a(a +/- lam)...(a +/- (n-1)lam) for a scalar or LamPoly ``a``.

    With ``lam=None`` lambda stays symbolic and the result is a LamPoly;
    with a rational ``lam`` and rational ``a`` the result is a Fraction.
    """
    _check_variant(variant)
    sign = 1 if variant == RISING else -1
    step = LamPoly.lam() if lam is None else Fraction(lam)
    acc = LamPoly.one() if lam is None or isinstance(a, LamPoly) else Fraction(1)
    for j in range(n):
        acc = acc * (a + step * (sign * j))
    return acc


def falling_int(m: int, k: int) -> int:
    """(m)_k for integers."""
    out = 1
    for j in range(k):
        out *= m - j
    return out


def rising_int(m: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= m + j
    return out


BASES = ("classic_falling", "classic_rising", "deg_rising", "deg_falling")


def basis_poly(basis: str, k: int) -> XPoly:
    if basis == "classic_falling":
        return classic_factorial_poly(k, FALLING)
    if basis == "classic_rising":
        return classic_factorial_poly(k, RISING)
    if basis == "deg_rising":
        return rising_deg(k, RISING)
    if basis == "deg_falling":
        return rising_deg(k, FALLING)
    raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")


def to_basis(p: XPoly, basis: Union[str, Sequence[XPoly]]) -> list[LamPoly]:
    """Coordinates c_0..c_d of ``p`` in a monic factorial-type basis.

    ``basis`` is one of :data:`BASES` or an explicit sequence whose k-th
    element is monic of degree k in x. Elimination runs from the top degree
    down, so the result is exact.
    """
    if isinstance(p, LamPoly) or isinstance(p, (int, Fraction)):
        p = XPoly((p,))
    if not p:
        return []
    d = p.degree
    if isinstance(basis, str):
        elems = [basis_poly(basis, k) for k in range(d + 1)]
    else:
        elems = list(basis)
        if len(elems) < d + 1:
            raise ValueError(f"basis has {len(elems)} elements, need {d + 1}")
    for k, b in enumerate(elems[: d + 1]):
        if b.degree != k or b[k] != LamPoly.one():
            raise ValueError(f"basis element {k} is not monic of degree {k}")

    rem = p
    out = [LamPoly()] * (d + 1)
    for k in range(d, -1, -1):
        c = rem[k]
        if c:
            out[k] = c
            rem = rem - elems[k] * c
    assert not rem
    return out


def from_basis(coords: Sequence[LamPoly], basis: str) -> XPoly:
    """Re-expand coordinates produced by :func:`to_basis`."""
    acc = XPoly()
    for k, c in enumerate(coords):
        if c:
            acc = acc + basis_poly(basis, k) * c
    return acc


# --- text formats ----------------------------------------------------------

def format_lampoly(p: LamPoly, var: str = "l") -> str:
    """``"c0 + c1*l + c2*l^2"``; zero terms omitted, negatives as ``- c``."""
    parts = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = format_rat(abs(c))
        term = mag if i == 0 else f"{mag}*{var}" if i == 1 else f"{mag}*{var}^{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


_TERM_RE = re.compile(r"^(\d+(?:/\d+)?)(?:\*l(?:\^(\d+))?)?$")


def parse_lampoly(text: str) -> LamPoly:
    """Inverse of :func:`format_lampoly`."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty polynomial text")
    if tokens == ["0"]:
        return LamPoly()
    sign = 1
    first = tokens[0]
    if first.startswith("-"):
        sign, first = -1, first[1:]
    terms = [(sign, first)]
    rest = tokens[1:]
    if len(rest) % 2:
        raise ValueError(f"malformed polynomial: {text!r}")
    for op, tok in zip(rest[::2], rest[1::2]):
        if op not in "+-" or len(op) != 1:
            raise ValueError(f"malformed polynomial: {text!r}")
        terms.append((1 if op == "+" else -1, tok))
    coeffs: dict[int, Fraction] = {}
    for s, tok in terms:
        m = _TERM_RE.match(tok)
        if not m:
            raise ValueError(f"malformed term {tok!r} in {text!r}")
        c = parse_rat(m.group(1))
        if "*l" in tok:
            e = int(m.group(2)) if m.group(2) else 1
        else:
            e = 0
        coeffs[e] = coeffs.get(e, Fraction(0)) + s * c
    deg = max(coeffs)
    return LamPoly(coeffs.get(i, 0) for i in range(deg + 1))


def format_xpoly(p: XPoly) -> str:
    """Ascending in x; non-constant lambda coefficients are parenthesised."""
    parts = []
    for j, c in enumerate(p.coeffs):
        if not c:
            continue
        if c.is_constant():
            q = c.constant()
            mag = format_rat(abs(q))
            neg = q < 0
        else:
            mag = f"({format_lampoly(c)})"
            neg = False
        term = mag if j == 0 else f"{mag}*x" if j == 1 else f"{mag}*x^{j}"
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts) if parts else "0"
