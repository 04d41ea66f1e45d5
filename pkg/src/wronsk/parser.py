"""Text front end: Laurent polynomials, factored rational functions, curves.

Grammar (whitespace is insignificant, the variable is always ``t``)::

    laurent  := ['+'|'-'] term (('+'|'-') term)*
    term     := coeff
              | coeff ['*'] 't' ['^' int]
              | 't' ['^' int]
              | coeff '/' 't' ['^' posint]
    coeff    := int ['/' posint]

    rational := numer ['/' denom]
    numer    := '(' laurent ')' | laurent
    denom    := factor (['*'] factor)*
    factor   := atom ['^' posint]
    atom     := 't' | int | '(' denom ')' | '(' linear ')'
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import WronskError
from .laurent import LaurentPoly, Rational


class ParseError(WronskError, ValueError):
    """Syntax error with the byte offset where parsing stopped."""

    def __init__(self, message: str, offset: int, expected=(), text: str = "",
                 component: int | None = None):
        self.diagnostic = ParseDiagnostic(offset, message, list(expected))
        self.text = text
        self.component = component
        where = f"offset {offset}"
        if component is not None:
            where = f"component {component}, {where}"
        super().__init__(f"{message} ({where})")

    @property
    def offset(self) -> int:
        return self.diagnostic.offset


class DivisionByZeroError(ParseError, ZeroDivisionError):
    pass


class NonLinearDenominatorFactorError(ParseError):
    pass


@dataclass(frozen=True)
class ParseDiagnostic:
    offset: int
    message: str
    expected: list[str] = field(default_factory=list)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def peek_after(self, ch: str) -> str:
        """Next non-space character after the upcoming ``ch``."""
        self.skip_ws()
        i = self.pos + len(ch)
        while i < len(self.text) and self.text[i].isspace():
            i += 1
        return self.text[i] if i < len(self.text) else ""

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str, what: str | None = None):
        if not self.accept(ch):
            self.fail(f"expected {what or repr(ch)}", [repr(ch)])

    def fail(self, message, expected=(), cls=ParseError):
        self.skip_ws()
        raise cls(message, min(self.pos, len(self.text)), expected, self.text)

    def at_end(self) -> bool:
        return self.peek() == ""

    def integer(self, signed=False) -> int:
        self.skip_ws()
        start = self.pos
        sign = 1
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        digits_at = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_at:
            self.pos = start
            self.fail("expected an integer", ["integer"])
        return sign * int(self.text[digits_at:self.pos])

    def posint(self) -> int:
        at = self.pos
        n = self.integer()
        if n <= 0:
            self.pos = at
            self.fail("expected a positive integer", ["positive integer"])
        return n


def _coeff(sc: _Scanner) -> Rational:
    num = sc.integer()
    if sc.peek() == "/" and sc.peek_after("/").isdigit():
        sc.accept("/")
        at = sc.pos
        den = sc.integer()
        if den == 0:
            sc.pos = at
            sc.fail("zero denominator in coefficient", ["positive integer"], DivisionByZeroError)
        return Rational(num, den)
    return Rational(num)


def _power(sc: _Scanner, signed=True) -> int:
    if sc.accept("^"):
        return sc.integer(signed=True) if signed else sc.posint()
    return 1


def _term(sc: _Scanner) -> LaurentPoly:
    ch = sc.peek()
    if ch == "t":
        sc.pos += 1
        return LaurentPoly.monomial(_power(sc))
    if ch.isdigit():
        c = _coeff(sc)
        nxt = sc.peek()
        if nxt == "*" and sc.peek_after("*") == "t":
            sc.accept("*")
            nxt = "t"
        if nxt == "t":
            sc.pos += 1
            return LaurentPoly.monomial(_power(sc), c)
        if nxt == "/" and sc.peek_after("/") == "t":
            sc.accept("/")
            sc.accept("t")
            e = _power(sc, signed=False)
            return LaurentPoly.monomial(-e, c)
        if nxt == "/" and sc.peek_after("/") == "0":
            sc.accept("/")
            sc.fail("division by zero", ["positive integer"], DivisionByZeroError)
        return LaurentPoly.constant(c)
    sc.fail("expected a term", ["integer", "'t'"])


def _laurent(sc: _Scanner) -> LaurentPoly:
    total = LaurentPoly.zero()
    sign = 1
    if sc.accept("-"):
        sign = -1
    else:
        sc.accept("+")
    total = total + _term(sc).scale(sign)
    while True:
        ch = sc.peek()
        if ch not in ("+", "-"):
            return total
        sc.pos += 1
        sign = -1 if ch == "-" else 1
        total = total + _term(sc).scale(sign)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse a Laurent polynomial such as ``"t^2 - 1 + t^-1"`` or ``"1/t^3"``."""
    sc = _Scanner(text)
    if sc.at_end():
        sc.fail("empty expression", ["term"])
    f = _laurent(sc)
    if not sc.at_end():
        sc.fail("unexpected input", ["'+'", "'-'", "end of input"])
    return f


# -- rational functions ---------------------------------------------------


def _denom_atom(sc: _Scanner) -> tuple[Rational, dict[Rational, int]]:
    """Return (scalar, {beta: order}) for one denominator atom."""
    ch = sc.peek()
    if ch == "t":
        sc.pos += 1
        return Rational(1), {Rational(0): 1}
    if ch.isdigit():
        at = sc.pos
        c = _coeff(sc)
        if c == 0:
            sc.pos = at
            sc.fail("zero factor in denominator", ["nonzero factor"], DivisionByZeroError)
        return c, {}
    if ch == "(":
        sc.accept("(")
        start = sc.pos
        # a parenthesised product or a linear sum; try the product first
        try:
            scalar, poles = _denom(sc)
            if sc.peek() != ")":
                raise ParseError("not a product", sc.pos)
        except ParseError as exc:
            if isinstance(exc, (DivisionByZeroError, NonLinearDenominatorFactorError)):
                raise
            sc.pos = start
            lin = _laurent(sc)
            if sc.peek() != ")":
                sc.fail("expected ')'", ["')'", "'+'", "'-'"])
            scalar, poles = _linear_factor(sc, lin, start)
        sc.expect(")")
        return scalar, poles
    sc.fail("expected a denominator factor", ["'t'", "'('", "integer"])


def _linear_factor(sc: _Scanner, lin: LaurentPoly, at: int):
    if not lin:
        sc.pos = at
        sc.fail("zero factor in denominator", ["nonzero factor"], DivisionByZeroError)
    if not lin.is_polynomial() or lin.degree_max > 1:
        sc.pos = at
        sc.fail("denominator factor is not linear in t", ["linear factor"],
                NonLinearDenominatorFactorError)
    if lin.degree_max == 0:
        return lin.coeff(0), {}
    a, b = lin.coeff(1), lin.coeff(0)
    return a, {-b / a: 1}


def _denom_factor(sc: _Scanner):
    scalar, poles = _denom_atom(sc)
    if sc.peek() == "^":
        m = _power(sc, signed=False)
        scalar = scalar ** m
        poles = {b: k * m for b, k in poles.items()}
    return scalar, poles


def _denom(sc: _Scanner):
    scalar, poles = _denom_factor(sc)
    while True:
        ch = sc.peek()
        if ch == "*":
            sc.accept("*")
        elif ch not in ("t", "(") and not ch.isdigit():
            return scalar, poles
        s2, p2 = _denom_factor(sc)
        scalar *= s2
        for b, k in p2.items():
            poles[b] = poles.get(b, 0) + k


def parse_rational(text: str):
    """Parse ``num / den`` with ``den`` a product of linear factors over Q.

    Returns a canonical :class:`~wronsk.rational.RationalFunction`.
    """
    from .rational import RationalFunction

    sc = _Scanner(text)
    if sc.at_end():
        sc.fail("empty expression", ["term"])
    if sc.peek() == "(":
        sc.accept("(")
        num = _laurent(sc)
        sc.expect(")")
    else:
        num = _laurent(sc)
    scalar, poles = Rational(1), {}
    if sc.accept("/"):
        scalar, poles = _denom(sc)
    if not sc.at_end():
        sc.fail("unexpected input", ["'/'", "'+'", "'-'", "end of input"])
    return RationalFunction.make(num.scale(1 / scalar), poles)


# -- curves ---------------------------------------------------------------


def split_components(text: str) -> list[tuple[str, int]]:
    """Split a curve into (component text, offset) pairs."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            items = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON array: {exc.msg}", exc.pos, ["JSON array"], text)
        if not isinstance(items, list) or not all(isinstance(s, str) for s in items):
            raise ParseError("JSON curve must be an array of strings", 0, ["JSON array"], text)
        return [(s, 0) for s in items]
    out, start = [], 0
    for piece in text.split(";"):
        out.append((piece, start))
        start += len(piece) + 1
    return out


def parse_curve(text: str, parse=parse_laurent) -> list:
    """Parse ``"t; t^2-t; t^2+1"`` (or a JSON array of strings) into components."""
    comps = []
    pieces = split_components(text)
    for i, (piece, base) in enumerate(pieces):
        try:
            comps.append(parse(piece))
        except ParseError as exc:
            raise type(exc)(str(exc.diagnostic.message), base + exc.offset,
                            exc.diagnostic.expected, text, component=i) from None
    if len(comps) < 2:
        raise ParseError("a curve needs at least 2 components", len(text), ["';'"], text)
    return comps
