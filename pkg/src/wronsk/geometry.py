"""Geometric consequences for parametrized curves t -> (p_1(t), ..., p_n(t))."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg, roots
from .characterization import characterize_poly
from .errors import HodographVanishesError, NotPolynomialError, ZeroNumeratorError
from .laurent import LaurentPoly, Rational, Scalar
from .wronskian import WronskianClass, WronskianTag, classify


def _q(x: Rational) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Curve:
    components: tuple[LaurentPoly, ...]

    def __init__(self, components: Sequence[LaurentPoly]):
        comps = tuple(components)
        if len(comps) < 2:
            raise ValueError("a curve needs at least 2 components")
        object.__setattr__(self, "components", comps)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def is_polynomial(self) -> bool:
        return all(p.is_polynomial() for p in self.components)

    def __call__(self, x: Scalar) -> tuple[Rational, ...]:
        return tuple(p(x) for p in self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.components) + ")"


def as_curve(curve) -> Curve:
    return curve if isinstance(curve, Curve) else Curve(curve)


def _require_polynomial(curve: Curve):
    if not curve.is_polynomial():
        raise NotPolynomialError("this operation needs polynomial components")


@dataclass(frozen=True)
class Hyperplane:
    """normal . x = constant, normalized so the first nonzero normal entry is 1."""

    normal: tuple[Rational, ...]
    constant: Rational

    def evaluate(self, curve) -> LaurentPoly:
        """normal . curve(t) - constant, identically zero on a contained curve."""
        total = LaurentPoly.constant(-self.constant)
        for a, p in zip(self.normal, as_curve(curve)):
            total = total + p.scale(a)
        return total

    def equation(self, names: Sequence[str] | None = None) -> str:
        n = len(self.normal)
        if names is None:
            names = ("x", "y", "z") if n <= 3 else tuple(f"x{i + 1}" for i in range(n))
        parts = []
        for a, name in zip(self.normal, names):
            if a == 0:
                continue
            mag = "" if abs(a) == 1 else _q(abs(a))
            sign = "-" if a < 0 else "+"
            parts.append((sign, f"{mag}{name}"))
        if self.constant != 0:
            c = -self.constant
            parts.append(("-" if c < 0 else "+", _q(abs(c))))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text + " = 0"

    def to_dict(self) -> dict:
        return {"normal": [_q(a) for a in self.normal], "constant": _q(self.constant),
                "equation": self.equation()}


def curve_wronskian(curve) -> WronskianClass:
    return classify(list(as_curve(curve)))


def hyperplane_basis(curve) -> list[Hyperplane]:
    """All hyperplanes through the curve, as a reduced basis of the relation space."""
    comps = list(as_curve(curve))
    n = len(comps)
    exps = sorted({e for p in comps for e in p.exponents()} | {0})
    # unknowns (alpha_1..alpha_n, c): sum alpha_i p_i - c = 0 coefficientwise
    rows = [[p.coeff(e) for p in comps] + [Rational(-1 if e == 0 else 0)] for e in exps]
    null = linalg.nullspace(rows, n + 1)
    if not null:
        return []
    echelon, _ = linalg.rref(null)
    out = []
    for v in echelon:
        if not any(v):
            continue
        lead = next(x for x in v[:n] if x != 0)
        v = [x / lead for x in v]
        out.append(Hyperplane(tuple(v[:n]), v[n]))
    return out


def hyperplane_containment(curve) -> Hyperplane | None:
    """The relation with the earliest possible leading normal entry, if any."""
    basis = hyperplane_basis(curve)
    return basis[0] if basis else None


def hodograph(curve) -> Curve:
    curve = as_curve(curve)
    comps = [p.derivative() for p in curve]
    if not any(comps):
        raise HodographVanishesError("every component is constant")
    return Curve(comps)


@dataclass(frozen=True)
class AffineRNCWitness:
    """curve(t) = M (t, t^2, ..., t^n)^T + b."""

    M: tuple[tuple[Rational, ...], ...]
    b: tuple[Rational, ...]

    def apply(self) -> list[LaurentPoly]:
        return [LaurentPoly({k + 1: m for k, m in enumerate(row)}) + bi
                for row, bi in zip(self.M, self.b)]

    def to_dict(self) -> dict:
        return {"M": [[_q(x) for x in row] for row in self.M], "b": [_q(x) for x in self.b]}


def is_affine_rnc(curve) -> AffineRNCWitness | None:
    """Witness that the curve is an affine image of (t, t^2, ..., t^n), else None."""
    curve = as_curve(curve)
    _require_polynomial(curve)
    try:
        hod = hodograph(curve)
    except HodographVanishesError:
        return None
    if curve_wronskian(hod).tag is not WronskianTag.NONZERO_CONSTANT:
        return None
    A = characterize_poly(list(hod)).matrixA
    n = len(curve)
    M = tuple(tuple(a / (k + 1) for k, a in enumerate(row)) for row in A)
    w = AffineRNCWitness(M, curve(0))
    if w.apply() != list(curve):
        raise AssertionError("affine witness does not reproduce the curve")
    assert len(M) == n
    return w


def invariant_numerator(curve) -> LaurentPoly:
    """det(x', x'', ..., x^(n)): the curvature (n=2) or torsion (n=3) numerator."""
    curve = as_curve(curve)
    comps = [p.derivative() for p in curve]
    return classify(comps).result


@dataclass(frozen=True)
class VanishingReport:
    is_constant: bool
    numerator: LaurentPoly
    rational_roots: tuple[Rational, ...]
    real_root_count: int
    complex_root_count: int

    def to_dict(self) -> dict:
        return {
            "is_constant": self.is_constant,
            "numerator": str(self.numerator),
            "rational_roots": [_q(r) for r in self.rational_roots],
            "real_root_count": self.real_root_count,
            "nonreal_root_count": self.complex_root_count,
        }


def vanishing_invariant_report(curve) -> VanishingReport:
    curve = as_curve(curve)
    _require_polynomial(curve)
    num = invariant_numerator(curve)
    if not num:
        raise ZeroNumeratorError("the invariant numerator vanishes identically")
    if num.is_constant():
        return VanishingReport(True, num, (), 0, 0)
    rr = roots.rational_roots(num)
    real = roots.count_real_roots(num)
    distinct = roots.squarefree_part(num).degree_max
    return VanishingReport(False, num, tuple(rr), real, distinct - real)


def reparametrize_shift(curve, a: Scalar) -> Curve:
    return Curve([p.shift(a) for p in as_curve(curve)])
