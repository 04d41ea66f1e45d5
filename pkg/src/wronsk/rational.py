"""Rational functions with denominators split into linear factors over Q.

A :class:`RationalFunction` is ``scalar * numerator / prod (t - beta)^m``
with a monic polynomial numerator that vanishes at none of the listed poles.
This set is closed under +, -, *, d/dt and t -> t + a, which is all the
Wronskian machinery needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import LinearlyDependentError, NoPolesError, NotEnoughPolesError
from .laurent import EXACT_TYPES, LaurentPoly, Rational, Scalar, as_rational, render
from .wronskian import WronskianClass, WronskianTag, classify_result, determinant

_ONE = LaurentPoly.constant(1)


def _linear(beta: Rational) -> LaurentPoly:
    return LaurentPoly({1: 1, 0: -beta})


def _divide_linear(f: LaurentPoly, beta: Rational) -> LaurentPoly:
    """Synthetic division of a polynomial by (t - beta); caller guarantees f(beta) = 0."""
    dense = f.dense()
    out = [Rational(0)] * (len(dense) - 1)
    carry = Rational(0)
    for i in range(len(dense) - 1, 0, -1):
        carry = dense[i] + carry * beta
        out[i - 1] = carry
    return LaurentPoly.from_dense(out)


def _frac(x: Rational) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RationalFunction:
    __slots__ = ("numerator", "poles", "scalar", "_hash")

    def __init__(self, numerator: LaurentPoly, poles: tuple, scalar: Rational):
        # use make(); this constructor trusts its arguments to be canonical
        self.numerator = numerator
        self.poles = poles
        self.scalar = scalar
        self._hash = None

    @classmethod
    def make(cls, numerator: LaurentPoly, poles: Mapping[Scalar, int] | Iterable = ()) -> "RationalFunction":
        """Canonicalize ``numerator / prod (t - beta)^m``."""
        items = poles.items() if isinstance(poles, Mapping) else poles
        orders: dict[Rational, int] = {}
        for b, m in items:
            if m < 0:
                raise ValueError("pole orders must be nonnegative")
            b = as_rational(b)
            orders[b] = orders.get(b, 0) + m
        if not numerator:
            return cls.zero()
        if numerator.degree_min < 0:
            k = -numerator.degree_min
            numerator = numerator.mul_monomial(k)
            orders[Rational(0)] = orders.get(Rational(0), 0) + k
        for b in list(orders):
            m = orders[b]
            while m and numerator(b) == 0:
                numerator = _divide_linear(numerator, b)
                m -= 1
            orders[b] = m
        lc = numerator.leading_coeff()
        poles_t = tuple(sorted((b, m) for b, m in orders.items() if m))
        return cls(numerator.scale(1 / lc), poles_t, lc)

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(LaurentPoly.zero(), (), Rational(1))

    @classmethod
    def from_laurent(cls, f: LaurentPoly) -> "RationalFunction":
        return cls.make(f)

    @classmethod
    def pole_term(cls, beta: Scalar, order: int, coeff: Scalar = 1) -> "RationalFunction":
        """coeff / (t - beta)^order."""
        return cls.make(LaurentPoly.constant(coeff), {as_rational(beta): order})

    # -- inspection -------------------------------------------------------

    @property
    def pole_orders(self) -> dict[Rational, int]:
        return dict(self.poles)

    @property
    def full_numerator(self) -> LaurentPoly:
        return self.numerator.scale(self.scalar)

    def denominator(self) -> LaurentPoly:
        d = _ONE
        for b, m in self.poles:
            d = d * _linear(b) ** m
        return d

    def __bool__(self) -> bool:
        return bool(self.numerator)

    def is_zero(self) -> bool:
        return not self.numerator

    def is_constant(self) -> bool:
        return not self.poles and self.numerator.degree_max <= 0

    def constant_value(self) -> Rational:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.scalar if self.numerator else Rational(0)

    def is_laurent(self) -> bool:
        return all(b == 0 for b, _ in self.poles)

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError("poles away from 0; not a Laurent polynomial")
        k = self.poles[0][1] if self.poles else 0
        return self.full_numerator.mul_monomial(-k)

    def valuation_at(self, p: Scalar) -> int | float:
        """Order of vanishing at ``p`` (negative at a pole)."""
        p = as_rational(p)
        if not self.numerator:
            return math.inf
        m = self.pole_orders.get(p)
        if m:
            return -m
        v, f = 0, self.numerator
        while f(p) == 0:
            f = _divide_linear(f, p)
            v += 1
        return v

    def leading_at(self, p: Scalar) -> Rational:
        """Coefficient of (t - p)^v in the local expansion, v = valuation_at(p)."""
        p = as_rational(p)
        if not self.numerator:
            raise ValueError("zero function has no local leading coefficient")
        f = self.numerator
        if p not in self.pole_orders:
            while f(p) == 0:
                f = _divide_linear(f, p)
        out = self.scalar * f(p)
        for b, m in self.poles:
            if b != p:
                out /= (p - b) ** m
        return out

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            return self
        if not self:
            return other
        a, b = self.pole_orders, other.pole_orders
        common = {p: max(a.get(p, 0), b.get(p, 0)) for p in set(a) | set(b)}
        na = self.full_numerator
        nb = other.full_numerator
        for p, m in common.items():
            if m - a.get(p, 0):
                na = na * _linear(p) ** (m - a.get(p, 0))
            if m - b.get(p, 0):
                nb = nb * _linear(p) ** (m - b.get(p, 0))
        return RationalFunction.make(na + nb, common)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.numerator, self.poles, -self.scalar)

    def __sub__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, EXACT_TYPES):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return RationalFunction.zero()
        orders = self.pole_orders
        for p, m in other.poles:
            orders[p] = orders.get(p, 0) + m
        return RationalFunction.make(self.full_numerator * other.full_numerator, orders)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "RationalFunction":
        c = as_rational(c)
        if c == 0 or not self:
            return RationalFunction.zero()
        return RationalFunction(self.numerator, self.poles, self.scalar * c)

    def derivative(self) -> "RationalFunction":
        """(N / prod (t-b)^m)' = (N' P - N sum_j m_j P / (t - b_j)) / prod (t-b)^(m+1), P = prod (t-b)."""
        if not self.poles:
            return RationalFunction.make(self.full_numerator.derivative())
        n = self.full_numerator
        linears = [_linear(b) for b, _ in self.poles]
        p_all = _ONE
        for lin in linears:
            p_all = p_all * lin
        s = LaurentPoly.zero()
        for j, (_, m) in enumerate(self.poles):
            prod = _ONE
            for k, lin in enumerate(linears):
                if k != j:
                    prod = prod * lin
            s = s + prod.scale(m)
        top = n.derivative() * p_all - n * s
        return RationalFunction.make(top, {b: m + 1 for b, m in self.poles})

    def __call__(self, x: Scalar) -> Rational:
        x = as_rational(x)
        den = Rational(1)
        for b, m in self.poles:
            den *= (x - b) ** m
        if den == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.scalar * self.numerator(x) / den

    def shift(self, a: Scalar) -> "RationalFunction":
        """Return f(t + a)."""
        a = as_rational(a)
        if a == 0:
            return self
        return RationalFunction.make(self.full_numerator.shift(a),
                                     {b - a: m for b, m in self.poles})

    # -- comparison / text -------------------------------------------------

    def _key(self):
        return (self.numerator, self.poles, self.scalar if self.numerator else Rational(1))

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def denominator_text(self) -> str:
        parts = []
        for b, m in self.poles:
            if b == 0:
                base = "t"
            else:
                base = f"(t - {_frac(b)})" if b > 0 else f"(t + {_frac(-b)})"
            parts.append(base if m == 1 else f"{base}^{m}")
        return " ".join(parts)

    def __str__(self) -> str:
        num = render(self.full_numerator)
        if not self.poles:
            return num
        return f"({num}) / ({self.denominator_text()})"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFunction.from_laurent(x)
    if isinstance(x, EXACT_TYPES):
        return RationalFunction.from_laurent(LaurentPoly.constant(x))
    return NotImplemented


def as_rational_function(x) -> RationalFunction:
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to a rational function")
    return out


# -- partial fractions ----------------------------------------------------


@dataclass(frozen=True)
class PartialFractions:
    """polynomial + sum over poles beta of sum_k principal[beta][k-1] / (t - beta)^k."""

    polynomial: LaurentPoly
    principal: tuple[tuple[Rational, tuple[Rational, ...]], ...]

    def combine(self) -> RationalFunction:
        total = RationalFunction.from_laurent(self.polynomial)
        for beta, coeffs in self.principal:
            for k, c in enumerate(coeffs, start=1):
                if c:
                    total = total + RationalFunction.pole_term(beta, k, c)
        return total

    def to_dict(self) -> dict:
        return {
            "polynomial": str(self.polynomial),
            "principal": {_frac(b): [_frac(c) for c in cs] for b, cs in self.principal},
        }


def _series_div(a: list[Rational], b: list[Rational], terms: int) -> list[Rational]:
    out = []
    for j in range(terms):
        acc = a[j] if j < len(a) else Rational(0)
        for i in range(1, min(j, len(b) - 1) + 1):
            acc -= b[i] * out[j - i]
        out.append(acc / b[0])
    return out


def partial_fractions(rf: RationalFunction) -> PartialFractions:
    principal = []
    for beta, m in rf.poles:
        # local expansion in u = t - beta of the cofactor g = f * (t - beta)^m
        num = rf.full_numerator.shift(beta)
        den = _ONE
        for b, k in rf.poles:
            if b != beta:
                den = den * _linear(b - beta) ** k
        series = _series_div(num.dense(), den.dense(), m)
        # series[j] multiplies u^(j - m), i.e. (t - beta)^-(m - j)
        principal.append((beta, tuple(series[m - k] for k in range(1, m + 1))))
    pf = PartialFractions(LaurentPoly.zero(), tuple(principal))
    rest = rf - pf.combine()
    if rest.poles:
        raise AssertionError("partial fraction remainder still has poles")
    return PartialFractions(rest.full_numerator, tuple(principal))


# -- pole profiles --------------------------------------------------------


@dataclass(frozen=True)
class PoleProfile:
    poles: tuple[tuple[Rational, int], ...]

    @property
    def locations(self) -> tuple[Rational, ...]:
        return tuple(b for b, _ in self.poles)

    def order(self, beta: Scalar) -> int:
        return dict(self.poles).get(as_rational(beta), 0)

    def __len__(self) -> int:
        return len(self.poles)

    def to_dict(self) -> dict:
        return {_frac(b): m for b, m in self.poles}


def family_pole_profile(rfs: Sequence) -> PoleProfile:
    out: dict[Rational, int] = {}
    for f in rfs:
        for b, m in as_rational_function(f).poles:
            out[b] = max(out.get(b, 0), m)
    return PoleProfile(tuple(sorted(out.items())))


def normalize_pole_to_origin(rfs: Sequence) -> tuple[list[RationalFunction], Rational]:
    """Shift t -> t + a so that a pole sits at 0 (a = 0 if one already does)."""
    rfs = [as_rational_function(f) for f in rfs]
    prof = family_pole_profile(rfs)
    if not prof.poles:
        raise NoPolesError("the family has no poles")
    a = Rational(0) if Rational(0) in prof.locations else prof.locations[0]
    return [f.shift(a) for f in rfs], a


# -- Wronskians -----------------------------------------------------------


def lifted_wronskian_matrix(rfs: Sequence) -> tuple[list[list[LaurentPoly]], dict[Rational, int]]:
    """Polynomial matrix N and denominator orders D with W = det(N) / prod (t - b)^D[b].

    Row k holds the k-th derivatives over their common denominator.
    """
    row = [as_rational_function(f) for f in rfs]
    n = len(row)
    mat, total = [], {}
    for k in range(n):
        if k:
            row = [f.derivative() for f in row]
        common: dict[Rational, int] = {}
        for f in row:
            for b, m in f.poles:
                common[b] = max(common.get(b, 0), m)
        lifted = []
        for f in row:
            num = f.full_numerator
            have = f.pole_orders
            for b, m in common.items():
                if m - have.get(b, 0):
                    num = num * _linear(b) ** (m - have.get(b, 0))
            lifted.append(num)
        mat.append(lifted)
        for b, m in common.items():
            total[b] = total.get(b, 0) + m
    return mat, total


def wronskian_rational(rfs: Sequence, method: str = "auto") -> RationalFunction:
    if len(rfs) < 1:
        raise ValueError("need at least one function")
    mat, orders = lifted_wronskian_matrix(rfs)
    return RationalFunction.make(determinant(mat, method), orders)


def classify_rational(rfs: Sequence, method: str = "auto") -> WronskianClass:
    return classify_result(wronskian_rational(rfs, method))


def local_valuations(rfs: Sequence, p: Scalar) -> list[int]:
    """Distinct valuations at ``p`` of a basis of span(rfs), via local Gauss steps.

    By the lowest-order-term argument, v_p(W) = sum(valuations) - C(n, 2).
    """
    fs = [as_rational_function(f) for f in rfs]
    p = as_rational(p)
    vals = [f.valuation_at(p) for f in fs]
    if any(v == math.inf for v in vals):
        raise LinearlyDependentError("zero function in the family")
    while True:
        seen: dict[int, int] = {}
        dup = None
        for i, v in enumerate(vals):
            if v in seen and (dup is None or v < vals[dup[0]]):
                dup = (seen[v], i)
            seen.setdefault(v, i)
        if dup is None:
            return sorted(vals)
        i, j = dup
        c = fs[j].leading_at(p) / fs[i].leading_at(p)
        fs[j] = fs[j] - fs[i].scale(c)
        if not fs[j]:
            raise LinearlyDependentError("family is linearly dependent")
        vals[j] = fs[j].valuation_at(p)


def predicted_pole_order(rfs: Sequence, p: Scalar) -> int:
    """Pole order of W(rfs) at p (0 when W is regular there)."""
    vals = local_valuations(rfs, p)
    return max(0, math.comb(len(vals), 2) - sum(vals))


# -- n = 2 impossibility --------------------------------------------------


@dataclass(frozen=True)
class N2Witness:
    shift: Rational
    K: int
    L1: int
    beta1: Rational
    f: LaurentPoly                       # (K - L1) t - K beta1
    prepared: tuple[RationalFunction, RationalFunction]
    cross_term_orders: tuple[int, int]        # (K + 1, L1 + 1)
    predicted_orders: tuple[int, int]    # from local valuations of the span
    observed_orders: tuple[int, int]     # read off the reduced Wronskian
    cross_term_configuration: bool            # predicted == cross_term_orders

    def to_dict(self) -> dict:
        return {
            "shift": _frac(self.shift),
            "K": self.K,
            "L1": self.L1,
            "beta1": _frac(self.beta1),
            "f": str(self.f),
            "prepared": [str(q) for q in self.prepared],
            "cross_term_orders": list(self.cross_term_orders),
            "predicted_orders": list(self.predicted_orders),
            "observed_orders": list(self.observed_orders),
            "cross_term_configuration": self.cross_term_configuration,
        }


@dataclass(frozen=True)
class N2Verdict:
    is_constant: bool
    wronskian: RationalFunction
    klass: WronskianClass
    witness: N2Witness

    def to_dict(self) -> dict:
        return {"is_constant": self.is_constant, "wronskian": str(self.wronskian),
                "class": self.klass.tag.value, "witness": self.witness.to_dict()}


def check_n2_impossibility(rf1, rf2) -> N2Verdict:
    """Verify that W(rf1, rf2) is not a nonzero constant when there are >= 2 poles.

    After moving a pole to 0, the function carrying t^-K is kept and the other
    has its t^-K term eliminated; the leading cross term
    W(t^-K, (t - beta1)^-L1) = t^(-K-1) (t - beta1)^(-L1-1) ((K - L1) t - K beta1)
    gives orders (K + 1, L1 + 1).  Those are the exact orders only when the
    prepared functions are regular and nonvanishing at the other pole;
    ``predicted_orders`` holds the exact orders from local valuations.
    """
    fam = [as_rational_function(rf1), as_rational_function(rf2)]
    w_orig = wronskian_rational(fam)
    if not w_orig:
        raise LinearlyDependentError("rf1 and rf2 are linearly dependent")
    if len(family_pole_profile(fam)) < 2:
        raise NotEnoughPolesError(
            "fewer than 2 distinct poles; use the Laurent characterization instead"
        )
    (q1, q2), a = normalize_pole_to_origin(fam)
    zero = Rational(0)
    K = max(q1.pole_orders.get(zero, 0), q2.pole_orders.get(zero, 0))
    if q1.pole_orders.get(zero, 0) != K:
        q1, q2 = q2, q1
    # eliminate the t^-K term from q2 using q1
    pf1 = dict(partial_fractions(q1).principal)
    pf2 = dict(partial_fractions(q2).principal)
    c2 = pf2.get(zero, ())
    if len(c2) == K:
        q2 = q2 - q1.scale(c2[K - 1] / pf1[zero][K - 1])
    others = [b for b in family_pole_profile([q1, q2]).locations if b != 0]
    # prefer a pole where q2 carries the maximal order
    beta1 = next((b for b in others if q2.pole_orders.get(b, 0) ==
                  max(q1.pole_orders.get(b, 0), q2.pole_orders.get(b, 0))), others[0])
    L1 = max(q1.pole_orders.get(beta1, 0), q2.pole_orders.get(beta1, 0))
    f = LaurentPoly({1: K - L1, 0: -K * beta1})
    if f(0) != -K * beta1 or f(0) == 0 or f(beta1) != -L1 * beta1 or f(beta1) == 0:
        raise AssertionError("cross-term factor vanishes at a pole")
    w = wronskian_rational([q1, q2])
    predicted = (predicted_pole_order([q1, q2], 0), predicted_pole_order([q1, q2], beta1))
    observed = (w.pole_orders.get(zero, 0), w.pole_orders.get(beta1, 0))
    if predicted != observed:
        raise AssertionError(f"pole orders {observed} differ from prediction {predicted}")
    klass = classify_result(w_orig)
    witness = N2Witness(
        shift=a, K=K, L1=L1, beta1=beta1, f=f, prepared=(q1, q2),
        cross_term_orders=(K + 1, L1 + 1), predicted_orders=predicted,
        observed_orders=observed, cross_term_configuration=predicted == (K + 1, L1 + 1),
    )
    return N2Verdict(klass.tag is WronskianTag.NONZERO_CONSTANT, w_orig, klass, witness)


def independent(rfs: Sequence) -> bool:
    """Exact rank test on partial-fraction coordinates."""
    pfs = [partial_fractions(as_rational_function(f)) for f in rfs]
    cols = set()
    for pf in pfs:
        cols |= {("t", e) for e in pf.polynomial.exponents()}
        for b, cs in pf.principal:
            cols |= {(b, k) for k, c in enumerate(cs, start=1) if c}
    cols = sorted(cols, key=str)
    rows = []
    for pf in pfs:
        pr = {(b, k): c for b, cs in pf.principal for k, c in enumerate(cs, start=1)}
        rows.append([pf.polynomial.coeff(col[1]) if col[0] == "t" else pr.get(col, Rational(0))
                     for col in cols])
    if not cols:
        return False
    return linalg.rank(rows) == len(rfs)
