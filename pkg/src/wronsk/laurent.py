"""Sparse Laurent polynomials in one variable ``t`` over the rationals.

Scalars are ``gmpy2.mpq`` when gmpy2 is installed and
:class:`fractions.Fraction` otherwise; the two compare and hash alike.
A :class:`LaurentPoly` is an immutable map from integer exponents (either
sign) to nonzero coefficients.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import UnsupportedShiftError, ZeroPolynomialError

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction

# accepted as exact scalar input; output scalars are always Rational
EXACT_TYPES = tuple(dict.fromkeys((int, Fraction, Rational, type(Rational(1).numerator))))
Scalar = Union[int, Fraction]

NEG_INFINITY = -math.inf
POS_INFINITY = math.inf


def as_rational(x) -> Rational:
    if type(x) is Rational:
        return x
    if isinstance(x, EXACT_TYPES + (str,)) and not isinstance(x, bool):
        return Rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class LaurentPoly:
    """Immutable sparse Laurent polynomial.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs in ascending
    exponent order; zero coefficients are never stored.
    """

    __slots__ = ("_coeffs", "_terms", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | Iterable = ()):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = coeffs
        acc: dict[int, Rational] = {}
        for e, c in items:
            if not isinstance(e, int):
                raise TypeError("exponents must be integers")
            c = as_rational(c)
            acc[e] = acc.get(e, Rational(0)) + c
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._terms = tuple(self._coeffs.items())
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: dict[int, Rational]) -> "LaurentPoly":
        # coeffs must already be free of zeros
        obj = cls.__new__(cls)
        obj._coeffs = dict(sorted(coeffs.items()))
        obj._terms = tuple(obj._coeffs.items())
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_dense(cls, coeffs: Iterable[Scalar], low: int = 0) -> "LaurentPoly":
        """Build from a list of coefficients starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, Rational], ...]:
        return self._terms

    def coeff(self, exponent: int) -> Rational:
        return self._coeffs.get(exponent, Rational(0))

    def exponents(self) -> tuple[int, ...]:
        return tuple(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return not self._coeffs or (len(self._terms) == 1 and self._terms[0][0] == 0)

    def is_polynomial(self) -> bool:
        return not self._coeffs or self._terms[0][0] >= 0

    @property
    def degree_max(self):
        return self._terms[-1][0] if self._terms else NEG_INFINITY

    @property
    def degree_min(self):
        return self._terms[0][0] if self._terms else POS_INFINITY

    def leading_coeff(self) -> Rational:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self._terms[-1][1]

    def trailing_coeff(self) -> Rational:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no trailing coefficient")
        return self._terms[0][1]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for e, c in other._terms:
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms})

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, EXACT_TYPES):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Rational] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    def __rmul__(self, other) -> "LaurentPoly":
        if isinstance(other, EXACT_TYPES):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms
            return LaurentPoly._raw({e * k: Rational(c) ** k})
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "LaurentPoly":
        c = as_rational(c)
        if c == 0:
            return LaurentPoly.zero()
        return LaurentPoly._raw({e: c * v for e, v in self._terms})

    def mul_monomial(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms})

    def derivative(self, order: int = 1) -> "LaurentPoly":
        f = self
        for _ in range(order):
            f = LaurentPoly._raw({e - 1: c * e for e, c in f._terms if e != 0})
        return f

    def __call__(self, x: Scalar) -> Rational:
        """Evaluate at a rational point (Horner over the exponent span)."""
        x = as_rational(x)
        if not self._terms:
            return Rational(0)
        low = self._terms[0][0]
        if low < 0 and x == 0:
            raise ZeroDivisionError("Laurent polynomial with a pole evaluated at 0")
        total = Rational(0)
        prev = self._terms[-1][0]
        for e, c in reversed(self._terms):
            total = total * x ** (prev - e) + c
            prev = e
        return total * x ** low if low else total

    def shift(self, a: Scalar) -> "LaurentPoly":
        """Return ``f(t + a)`` expanded exactly."""
        a = as_rational(a)
        if a == 0:
            return self
        if not self.is_polynomial():
            raise UnsupportedShiftError(
                "t -> t + a with a != 0 takes a Laurent polynomial out of Q[t, 1/t]"
            )
        # Horner with the linear polynomial (t + a)
        lin = LaurentPoly._raw({0: a, 1: Rational(1)})
        dense = self.dense()
        out = LaurentPoly.zero()
        for c in reversed(dense):
            out = out * lin + c
        return out

    def dense(self) -> list[Rational]:
        """Coefficients of a polynomial from degree 0 up to ``degree_max``."""
        if not self.is_polynomial():
            raise ValueError("dense() needs a polynomial")
        if not self._terms:
            return []
        return [self._coeffs.get(e, Rational(0)) for e in range(self.degree_max + 1)]

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient in Q[t, 1/t]; raises ValueError when ``other`` does not divide."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return self
        if len(other._terms) == 1:
            (e, c), = other._terms
            return LaurentPoly._raw({k - e: v / c for k, v in self._terms})
        num = self.mul_monomial(-self.degree_min)
        den = other.mul_monomial(-other.degree_min)
        q, r = poly_divmod(num, den)
        if r:
            raise ValueError("inexact division")
        return q.mul_monomial(self.degree_min - other.degree_min)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, EXACT_TYPES):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, EXACT_TYPES):
        return LaurentPoly.constant(x)
    return NotImplemented


T = LaurentPoly.monomial(1)


# -- module-level functions -----------------------------------------


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def scale(c: Scalar, f: LaurentPoly) -> LaurentPoly:
    return f.scale(c)


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def derivative(f: LaurentPoly) -> LaurentPoly:
    return f.derivative()


def degree_max(f: LaurentPoly):
    return f.degree_max


def degree_min(f: LaurentPoly):
    return f.degree_min


def leading_coeff(f: LaurentPoly) -> Rational:
    return f.leading_coeff()


def trailing_coeff(f: LaurentPoly) -> Rational:
    return f.trailing_coeff()


def shift(f: LaurentPoly, a: Scalar) -> LaurentPoly:
    return f.shift(a)


# -- univariate polynomial helpers (nonnegative exponents only) -----------


def poly_divmod(f: LaurentPoly, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Euclidean division of polynomials over Q."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not (f.is_polynomial() and g.is_polynomial()):
        raise ValueError("poly_divmod needs polynomials")
    r = f.dense()
    d = g.dense()
    dg = len(d) - 1
    lc = d[-1]
    if len(r) - 1 < dg:
        return LaurentPoly.zero(), f
    q = [Rational(0)] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            c = c / lc
            q[i - dg] = c
            for j in range(dg + 1):
                r[i - dg + j] -= c * d[j]
    return LaurentPoly.from_dense(q), LaurentPoly.from_dense(r[:dg])


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two polynomials (zero if both are zero)."""
    while g:
        f, g = g, poly_divmod(f, g)[1]
    if not f:
        return f
    return f.scale(1 / f.leading_coeff())


def primitive_integer(f: LaurentPoly) -> LaurentPoly:
    """Scale ``f`` to integer coefficients with content 1 and positive leading term."""
    if not f:
        return f
    den = 1
    for _, c in f.terms:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for _, c in f.terms]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    sign = 1 if ints[-1] > 0 else -1
    return LaurentPoly({e: Rational(sign * v // g) for (e, _), v in zip(f.terms, ints)})


# -- canonical text rendering --------------------------------------------


def _render_coeff(c: Rational) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render_power(e: int) -> str:
    return "t" if e == 1 else f"t^{e}"


def render(f: LaurentPoly) -> str:
    """Canonical ascending-exponent text, e.g. ``6t^-5 - 8t^-3 + 2``.

    Integer coefficients are juxtaposed with ``t``; fractional ones use
    ``*`` so that ``1/2*t`` cannot be read as ``1/(2t)``.
    """
    if not f:
        return "0"
    parts = []
    for i, (e, c) in enumerate(f.terms):
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = _render_coeff(a)
        elif a == 1:
            body = _render_power(e)
        elif a.denominator == 1:
            body = f"{a.numerator}{_render_power(e)}"
        else:
            body = f"{_render_coeff(a)}*{_render_power(e)}"
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)
