"""Wronskian-preserving Gauss-like column reductions.

Each pass repeatedly picks the largest (resp. smallest) extreme degree shared
by two or more functions and subtracts multiples of one pivot from the
others until all extreme degrees differ.  Only ``f_j -= c * f_pivot`` steps
are used, so the transform has determinant 1 and the Wronskian is unchanged
exactly; functions never change position.

Pivot choice inside a tie group: for the max pass, the member with the
largest minimum degree; for the min pass, the member with the smallest
maximum degree; remaining ties go to the earliest index.  With this choice a
max pass followed by a min pass never raises a maximum degree, which gives
``d_i >= e_i`` position by position.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .errors import (
    BasisExpressionError,
    LinearlyDependentError,
    NotConstantWronskianError,
    TwoConstantsError,
)
from .laurent import LaurentPoly, Rational
from .wronskian import WronskianTag, classify


@dataclass(frozen=True)
class ReductionOutcome:
    reduced: tuple[LaurentPoly, ...]
    transform: tuple[tuple[Rational, ...], ...]
    sign: int
    mode: str
    notes: tuple[str, ...] = field(default=())

    @property
    def max_degrees(self) -> tuple[int, ...]:
        return tuple(f.degree_max for f in self.reduced)

    @property
    def min_degrees(self) -> tuple[int, ...]:
        return tuple(f.degree_min for f in self.reduced)

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.max_degrees if self.mode == "max" else self.min_degrees

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "reduced": [str(f) for f in self.reduced],
            "transform": [[_q(x) for x in row] for row in self.transform],
            "sign": self.sign,
            "max_degrees": list(self.max_degrees),
            "min_degrees": list(self.min_degrees),
            "notes": list(self.notes),
        }


def _q(x: Rational) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _reduce(fs: Sequence[LaurentPoly], mode: str) -> ReductionOutcome:
    fs = list(fs)
    n = len(fs)
    transform = linalg.identity(n)
    notes: list[str] = []
    for i, f in enumerate(fs):
        if not f:
            raise LinearlyDependentError(f"function {i} is the zero polynomial")
    top = mode == "max"

    def extreme(f: LaurentPoly) -> int:
        return f.degree_max if top else f.degree_min

    def pivot_key(i: int):
        # max pass: prefer the largest min degree; min pass: smallest max degree
        other = -fs[i].degree_min if top else fs[i].degree_max
        return (other, i)

    while True:
        groups: dict[int, list[int]] = {}
        for i, f in enumerate(fs):
            groups.setdefault(extreme(f), []).append(i)
        tied = [d for d, idx in groups.items() if len(idx) > 1]
        if not tied:
            break
        d = max(tied) if top else min(tied)
        members = groups[d]
        p = min(members, key=pivot_key)
        pc = fs[p].coeff(d)
        for j in members:
            if j == p:
                continue
            if fs[j].is_constant() and fs[p].is_constant():
                raise TwoConstantsError(
                    f"functions {p} and {j} reduce to constants; the family is dependent"
                )
            c = fs[j].coeff(d) / pc
            fs[j] = fs[j] - fs[p].scale(c)
            transform[j] = [a - c * b for a, b in zip(transform[j], transform[p])]
            if not fs[j]:
                raise LinearlyDependentError(
                    f"function {j} reduced to zero against pivot {p}"
                )
    sign = linalg.det(transform)
    return ReductionOutcome(
        reduced=tuple(fs),
        transform=tuple(tuple(row) for row in transform),
        sign=int(sign),
        mode=mode,
        notes=tuple(notes),
    )


def reduce_distinct_max(fs: Sequence[LaurentPoly]) -> ReductionOutcome:
    """Make the maximum degrees pairwise distinct (same span, same Wronskian)."""
    return _reduce(fs, "max")


def reduce_distinct_min(fs: Sequence[LaurentPoly]) -> ReductionOutcome:
    """Make the minimum degrees pairwise distinct (same span, same Wronskian)."""
    return _reduce(fs, "min")


@dataclass(frozen=True)
class BothOutcome:
    max: ReductionOutcome
    min: ReductionOutcome
    transform: tuple[tuple[Rational, ...], ...]  # maps the original family to min.reduced

    @property
    def d(self) -> tuple[int, ...]:
        return self.max.max_degrees

    @property
    def e(self) -> tuple[int, ...]:
        return self.min.min_degrees


def reduce_both(fs: Sequence[LaurentPoly]) -> BothOutcome:
    """Max pass on ``fs``, then a min pass on the max-reduced family."""
    hi = reduce_distinct_max(fs)
    lo = reduce_distinct_min(hi.reduced)
    total = linalg.matmul([list(r) for r in lo.transform], [list(r) for r in hi.transform])
    return BothOutcome(hi, lo, tuple(tuple(r) for r in total))


def coefficient_matrix(fs: Sequence[LaurentPoly], exponents: Sequence[int] | None = None):
    """Rows = functions, columns = ``exponents`` (default: every exponent present)."""
    if exponents is None:
        exponents = sorted({e for f in fs for e in f.exponents()})
    return [[f.coeff(e) for e in exponents] for f in fs], list(exponents)


def monomial_basis(fs: Sequence[LaurentPoly]) -> list[int]:
    """Exponents r with span{t^r} = span(fs), for a nonzero-constant Wronskian.

    The order is positional: entry i is the maximum degree of the i-th
    max-reduced function.
    """
    klass = classify(fs)
    if klass.tag is not WronskianTag.NONZERO_CONSTANT:
        raise NotConstantWronskianError(klass)
    both = reduce_both(fs)
    d = list(both.d)
    if sorted(d) != sorted(both.e) or sum(d) != math.comb(len(d), 2):
        raise BasisExpressionError(f"degree vectors disagree: d={d}, e={list(both.e)}")
    allowed = set(d)
    for i, f in enumerate(fs):
        stray = [e for e in f.exponents() if e not in allowed]
        if stray:
            raise BasisExpressionError(
                f"function {i} has exponents {stray} outside the monomial basis {d}"
            )
    return d
