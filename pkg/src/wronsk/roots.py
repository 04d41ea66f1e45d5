"""Exact real-root counting (Sturm) and rational-root search for Q[t]."""

from __future__ import annotations

import math

from .laurent import LaurentPoly, Rational, poly_divmod, poly_gcd, primitive_integer


def squarefree_part(f: LaurentPoly) -> LaurentPoly:
    g = poly_gcd(f, f.derivative())
    if g.degree_max <= 0:
        return f
    return poly_divmod(f, g)[0]


def sturm_sequence(f: LaurentPoly) -> list[LaurentPoly]:
    f = squarefree_part(f)
    seq = [f, f.derivative()]
    while seq[-1]:
        seq.append(-poly_divmod(seq[-2], seq[-1])[1])
    return seq[:-1]


def _sign_changes(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_at_infinity(f: LaurentPoly, positive: bool) -> int:
    s = 1 if f.leading_coeff() > 0 else -1
    if not positive and f.degree_max % 2:
        s = -s
    return s


def count_real_roots(f: LaurentPoly, lo: Rational | None = None,
                     hi: Rational | None = None) -> int:
    """Number of distinct real roots in (lo, hi]; ``None`` means infinite."""
    if not f:
        raise ValueError("the zero polynomial has infinitely many roots")
    if f.degree_max <= 0:
        return 0
    seq = sturm_sequence(f)

    def changes(x, positive):
        if x is None:
            return _sign_changes(_sign_at_infinity(p, positive) for p in seq)
        return _sign_changes((p(x) > 0) - (p(x) < 0) for p in seq)

    return changes(lo, False) - changes(hi, True)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots(f: LaurentPoly) -> list[Rational]:
    """Distinct rational roots of a nonzero polynomial, ascending."""
    if not f:
        raise ValueError("the zero polynomial has infinitely many roots")
    roots = set()
    low = f.degree_min
    if low > 0:
        roots.add(Rational(0))
        f = f.mul_monomial(-low)
    g = primitive_integer(squarefree_part(f))
    if g.degree_max <= 0:
        return sorted(roots)
    a0 = int(g.coeff(0))
    an = int(g.leading_coeff())
    for p in _divisors(a0):
        for q in _divisors(an):
            if math.gcd(p, q) != 1:
                continue
            for cand in (Rational(p, q), Rational(-p, q)):
                if g(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def cauchy_bound(f: LaurentPoly) -> Rational:
    """Every complex root has absolute value below 1 + max |a_i / a_n|."""
    lc = f.leading_coeff()
    return 1 + max((abs(c / lc) for e, c in f.terms if e != f.degree_max), default=Rational(0))
