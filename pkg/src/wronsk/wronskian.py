"""Wronskian matrices, exact determinants and their classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import RepeatedExponentError
from .laurent import LaurentPoly, Rational, Scalar, as_rational, render

# Matrices up to this size use memoized cofactor expansion; larger ones Bareiss.
COFACTOR_THRESHOLD = 6


class WronskianTag(str, enum.Enum):
    IDENTICALLY_ZERO = "IdenticallyZero"
    NONZERO_CONSTANT = "NonzeroConstant"
    NON_CONSTANT = "NonConstant"


@dataclass(frozen=True)
class WronskianClass:
    tag: WronskianTag
    value: Rational | None
    result: object  # LaurentPoly, or RationalFunction for rational families

    @property
    def is_nonzero_constant(self) -> bool:
        return self.tag is WronskianTag.NONZERO_CONSTANT

    def to_dict(self) -> dict:
        return {
            "class": self.tag.value,
            "value": None if self.value is None else _frac_text(self.value),
            "result": str(self.result),
        }

    def __str__(self) -> str:
        if self.tag is WronskianTag.IDENTICALLY_ZERO:
            return "identically zero"
        if self.tag is WronskianTag.NONZERO_CONSTANT:
            return f"constant: {_frac_text(self.value)}"
        return f"non-constant: {self.result}"


def _frac_text(x: Rational) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _as_polys(fs) -> list[LaurentPoly]:
    out = []
    for f in fs:
        if isinstance(f, LaurentPoly):
            out.append(f)
        else:
            out.append(LaurentPoly.constant(f))
    return out


def wronskian_matrix(fs: Sequence[LaurentPoly]) -> list[list[LaurentPoly]]:
    """Rows are the successive derivatives: entry (k, j) is fs[j] differentiated k times."""
    fs = _as_polys(fs)
    n = len(fs)
    if n < 1:
        raise ValueError("need at least one function")
    rows = [list(fs)]
    for _ in range(1, n):
        rows.append([f.derivative() for f in rows[-1]])
    return rows


def det_cofactor(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Laplace expansion along the top row, memoized over column subsets.

    minor(k, cols) is the determinant of rows k.. restricted to ``cols``;
    there are at most 2**n distinct subproblems.
    """
    n = len(m)
    if n == 0:
        return LaurentPoly.constant(1)

    @lru_cache(maxsize=None)
    def minor(cols: tuple[int, ...]) -> LaurentPoly:
        k = n - len(cols)
        if len(cols) == 1:
            return m[k][cols[0]]
        total = LaurentPoly.zero()
        for pos, c in enumerate(cols):
            a = m[k][c]
            if not a:
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = a * sub
            total = total - term if pos & 1 else total + term
        return total

    return minor(tuple(range(n)))


def det_bareiss(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Rational-free Bareiss elimination over Q[t, 1/t].

    Every division is exact by the Sylvester identity; monomials are units
    of the Laurent ring so no denominator clearing is needed.
    """
    a = [list(_as_polys(row)) for row in m]
    n = len(a)
    if n == 0:
        return LaurentPoly.constant(1)
    sign = 1
    prev = LaurentPoly.constant(1)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return LaurentPoly.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = LaurentPoly.zero()
        prev = pivot
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def determinant(m, method: str = "auto") -> LaurentPoly:
    if method == "auto":
        method = "cofactor" if len(m) <= COFACTOR_THRESHOLD else "bareiss"
    if method == "cofactor":
        return det_cofactor(m)
    if method == "bareiss":
        return det_bareiss(m)
    raise ValueError(f"unknown determinant method {method!r}")


def wronskian(fs: Sequence[LaurentPoly], method: str = "auto") -> LaurentPoly:
    return determinant(wronskian_matrix(fs), method)


def classify_result(w) -> WronskianClass:
    """Classify an already computed Wronskian (Laurent or rational)."""
    if not w:
        return WronskianClass(WronskianTag.IDENTICALLY_ZERO, None, w)
    if w.is_constant():
        return WronskianClass(WronskianTag.NONZERO_CONSTANT, _constant_value(w), w)
    return WronskianClass(WronskianTag.NON_CONSTANT, None, w)


def _constant_value(w) -> Rational:
    if isinstance(w, LaurentPoly):
        return w.coeff(0)
    return w.constant_value()


def classify(fs: Sequence[LaurentPoly], method: str = "auto") -> WronskianClass:
    return classify_result(wronskian(fs, method))


def vandermonde(ds: Sequence[Scalar]) -> Rational:
    """prod_{i<j} (ds[j] - ds[i])."""
    ds = [as_rational(d) for d in ds]
    out = Rational(1)
    for j in range(len(ds)):
        for i in range(j):
            out *= ds[j] - ds[i]
    return out


def _require_distinct(xs: Sequence[int]):
    if len(set(xs)) != len(xs):
        raise RepeatedExponentError(f"exponents must be pairwise distinct: {list(xs)}")


def monomial_wronskian(rs: Sequence[int], bs: Sequence[Scalar]) -> LaurentPoly:
    """W(b_1 t^{r_1}, ..., b_n t^{r_n}) = V(r) (prod b) t^{sum r - C(n,2)}."""
    if len(rs) != len(bs):
        raise ValueError("rs and bs must have equal length")
    _require_distinct(rs)
    coeff = vandermonde(rs)
    for b in bs:
        coeff *= as_rational(b)
    return LaurentPoly.monomial(sum(rs) - math.comb(len(rs), 2), coeff)


def predicted_degree(degrees: Sequence[int]) -> int:
    """Sum of the (pairwise distinct) extreme degrees minus C(n, 2)."""
    _require_distinct(degrees)
    return sum(degrees) - math.comb(len(degrees), 2)


predicted_degree_max = predicted_degree
predicted_degree_min = predicted_degree


def superfactorial(n: int) -> Rational:
    """2! * 3! * ... * (n-1)!, the Wronskian of 1, t, ..., t^(n-1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = 1
    for k in range(2, n):
        out *= math.factorial(k)
    return Rational(out)


__all__ = [
    "WronskianTag", "WronskianClass", "wronskian_matrix", "wronskian", "classify",
    "classify_result", "determinant", "det_cofactor", "det_bareiss", "vandermonde",
    "monomial_wronskian", "predicted_degree_max", "predicted_degree_min",
    "superfactorial", "render",
]
