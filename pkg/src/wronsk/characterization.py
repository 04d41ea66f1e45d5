"""Witness decompositions for families with a nonzero constant Wronskian.

Polynomials:        (p_1, ..., p_n)^T = A (1, t, ..., t^(n-1))^T,    W = |A| * 2!3!...(n-1)!
Laurent polynomials: (p_1, ..., p_n)^T = A (t^r_1, ..., t^r_n)^T,     W = |A| * V(r),
with r pairwise distinct and r_1 + ... + r_n = C(n, 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .errors import (
    ExponentSumError,
    LinearlyDependentError,
    NotConstantWronskianError,
    NotPolynomialError,
    RepeatedExponentError,
    SingularMatrixError,
    ZeroWronskianError,
)
from .laurent import LaurentPoly, Rational
from .reduction import coefficient_matrix, monomial_basis
from .wronskian import WronskianTag, classify, superfactorial, vandermonde


def _q(x: Rational) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class PolyCharacterization:
    matrixA: tuple[tuple[Rational, ...], ...]
    detA: Rational

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(range(len(self.matrixA)))

    @property
    def value(self) -> Rational:
        return self.detA * superfactorial(len(self.matrixA))

    def to_dict(self) -> dict:
        return {
            "constant": True,
            "value": _q(self.value),
            "A": [[_q(x) for x in row] for row in self.matrixA],
            "r": list(self.exponents),
        }


@dataclass(frozen=True)
class LaurentCharacterization:
    matrixA: tuple[tuple[Rational, ...], ...]
    detA: Rational
    exponents: tuple[int, ...]

    @property
    def value(self) -> Rational:
        return self.detA * vandermonde(self.exponents)

    def to_dict(self) -> dict:
        return {
            "constant": True,
            "value": _q(self.value),
            "A": [[_q(x) for x in row] for row in self.matrixA],
            "r": list(self.exponents),
        }


def _reconstruct(A, exponents) -> list[LaurentPoly]:
    return [LaurentPoly({r: a for r, a in zip(exponents, row)}) for row in A]


def _check_classification(fs):
    klass = classify(fs)
    if klass.tag is WronskianTag.IDENTICALLY_ZERO:
        raise LinearlyDependentError("the family is linearly dependent (W = 0)")
    if klass.tag is not WronskianTag.NONZERO_CONSTANT:
        raise NotConstantWronskianError(klass)
    return klass


def characterize_poly(fs: Sequence[LaurentPoly]) -> PolyCharacterization:
    fs = list(fs)
    if not all(f.is_polynomial() for f in fs):
        raise NotPolynomialError("characterize_poly needs polynomials")
    klass = _check_classification(fs)
    n = len(fs)
    A, _ = coefficient_matrix(fs, range(n))
    detA = linalg.det(A)
    if _reconstruct(A, range(n)) != fs or detA * superfactorial(n) != klass.value:
        raise AssertionError("polynomial witness does not reproduce the family")
    return PolyCharacterization(tuple(tuple(r) for r in A), detA)


def characterize_laurent(fs: Sequence[LaurentPoly]) -> LaurentCharacterization:
    fs = list(fs)
    klass = _check_classification(fs)
    r = monomial_basis(fs)
    A, _ = coefficient_matrix(fs, r)
    detA = linalg.det(A)
    if _reconstruct(A, r) != fs or detA * vandermonde(r) != klass.value:
        raise AssertionError("Laurent witness does not reproduce the family")
    return LaurentCharacterization(tuple(tuple(row) for row in A), detA, tuple(r))


def synthesize_poly(A: Sequence[Sequence]) -> list[LaurentPoly]:
    """Rows of ``A`` read as coefficients over 1, t, ..., t^(n-1)."""
    A = linalg.to_matrix(A)
    if linalg.det(A) == 0:
        raise SingularMatrixError("A must be nonsingular")
    return _reconstruct(A, range(len(A)))


def synthesize_laurent(A: Sequence[Sequence], r: Sequence[int]) -> list[LaurentPoly]:
    A = linalg.to_matrix(A)
    r = list(r)
    if len(set(r)) != len(r):
        raise RepeatedExponentError(f"exponents must be distinct: {r}")
    if sum(r) != math.comb(len(r), 2):
        raise ExponentSumError(f"sum of exponents is {sum(r)}, need {math.comb(len(r), 2)}")
    if linalg.det(A) == 0:
        raise SingularMatrixError("A must be nonsingular")
    return _reconstruct(A, r)


def is_constant_by_degree(fs: Sequence[LaurentPoly]) -> bool:
    """For polynomials with W != 0: W is a nonzero constant iff max degree == n - 1."""
    fs = list(fs)
    if not all(f.is_polynomial() for f in fs):
        raise NotPolynomialError("is_constant_by_degree needs polynomials")
    if classify(fs).tag is WronskianTag.IDENTICALLY_ZERO:
        raise ZeroWronskianError("the degree criterion needs a nonvanishing Wronskian")
    return max(f.degree_max for f in fs) == len(fs) - 1
