"""Independent reference computations with sympy, used only by the tests."""

from __future__ import annotations

from fractions import Fraction

import sympy as sp
from sympy.polys.matrices import DomainMatrix

from wronsk.laurent import LaurentPoly
from wronsk.rational import RationalFunction

t = sp.Symbol("t")


def q(x) -> sp.Rational:
    return sp.Rational(int(x.numerator), int(x.denominator))


def to_sympy(f) -> sp.Expr:
    if isinstance(f, LaurentPoly):
        return sp.Add(*[q(c) * t**e for e, c in f.terms])
    if isinstance(f, RationalFunction):
        den = sp.Mul(*[(t - q(b)) ** m for b, m in f.poles])
        return q(f.scalar) * to_sympy(f.numerator) / den
    return q(f)


def from_sympy(expr) -> LaurentPoly:
    """Laurent polynomial from a sympy expression that is one."""
    expr = sp.expand(expr)
    out = {}
    for term in sp.Add.make_args(expr):
        c, e = term.as_coeff_exponent(t)
        out[int(e)] = out.get(int(e), 0) + sp_to_fraction(c)
    return LaurentPoly(out)


def sp_to_fraction(c):
    c = sp.Rational(c)
    return Fraction(int(c.p), int(c.q))


FIELD = sp.QQ.frac_field(t)


def wronskian(fs) -> sp.Expr:
    """Determinant of the derivative matrix, computed by sympy over Q(t)."""
    exprs = [to_sympy(f) for f in fs]
    n = len(exprs)
    rows = [[FIELD.from_sympy(sp.diff(e, t, k)) for e in exprs] for k in range(n)]
    return FIELD.to_sympy(DomainMatrix(rows, (n, n), FIELD).det())


def same(a, b) -> bool:
    return FIELD.from_sympy(a) == FIELD.from_sympy(b)
