"""Sparse bivariate polynomials over the unbounded integers.

A polynomial is a finite map from power products X^i*Y^j to non-zero
integer coefficients.  The zero polynomial is the empty map.  All
arithmetic is exact; there is no modular shortcut anywhere.

Monomials compare in pure lexicographic order with X ranked above Y,
which is the tuple order of (i, j).  Formatting uses a different,
display-oriented order: descending total degree, then descending
X-exponent, so that e.g. the bivariate trace polynomial prints as
``X^2+Y^2+3*X+3*Y+3``.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, NamedTuple

EXPONENT_CAP = 10**6


class Monomial(NamedTuple):
    """Power product X^i * Y^j; tuple order = lex order with X > Y."""

    i: int
    j: int

    @property
    def degree(self) -> int:
        return self.i + self.j

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.i + other.i, self.j + other.j)

    def divides(self, other: "Monomial") -> bool:
        return self.i <= other.i and self.j <= other.j

    def quotient_by(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.i - other.i, self.j - other.j)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self.i, other.i), max(self.j, other.j))

    def __str__(self) -> str:
        if self.i == 0 and self.j == 0:
            return "1"
        parts = []
        if self.i == 1:
            parts.append("X")
        elif self.i > 1:
            parts.append(f"X^{self.i}")
        if self.j == 1:
            parts.append("Y")
        elif self.j > 1:
            parts.append(f"Y^{self.j}")
        return "*".join(parts)


ONE_MONO = Monomial(0, 0)


def _format_key(item):
    mono, _ = item
    return (-mono.degree, -mono.i)


class BiPoly:
    """Canonical sparse polynomial in Z[X,Y]: no stored coefficient is zero.

    Instances are immutable after construction and hash/compare by their
    term maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Monomial, int]] | dict | None = None):
        acc: dict[Monomial, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, coeff in items:
                if not isinstance(mono, Monomial):
                    mono = Monomial(*mono)
                if mono.i < 0 or mono.j < 0:
                    raise ValueError(f"negative exponent in {mono}")
                c = acc.get(mono, 0) + coeff
                if c:
                    acc[mono] = c
                elif mono in acc:
                    del acc[mono]
        object.__setattr__(self, "_terms", acc)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def const(c: int) -> "BiPoly":
        return BiPoly([(ONE_MONO, c)])

    @staticmethod
    def monomial(i: int, j: int, coeff: int = 1) -> "BiPoly":
        return BiPoly([(Monomial(i, j), coeff)])

    # -- inspection ------------------------------------------------------------

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical display order (degree desc, then X-exp desc)."""
        return iter(sorted(self._terms.items(), key=_format_key))

    def coeff(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def monomials(self):
        return self._terms.keys()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self._terms:
            return -1
        return max(m.degree for m in self._terms)

    def lead(self) -> tuple[Monomial, int]:
        """Leading term under lex with X > Y; undefined on zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms)
        return mono, self._terms[mono]

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        acc = dict(self._terms)
        for mono, c in other._terms.items():
            s = acc.get(mono, 0) + c
            if s:
                acc[mono] = s
            elif mono in acc:
                del acc[mono]
        out = BiPoly()
        object.__setattr__(out, "_terms", acc)
        return out

    def __neg__(self) -> "BiPoly":
        out = BiPoly()
        object.__setattr__(out, "_terms", {m: -c for m, c in self._terms.items()})
        return out

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        acc: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1.times(m2)
                s = acc.get(mono, 0) + c1 * c2
                if s:
                    acc[mono] = s
                elif mono in acc:
                    del acc[mono]
        out = BiPoly()
        object.__setattr__(out, "_terms", acc)
        return out

    __rmul__ = __mul__

    def scale(self, c: int) -> "BiPoly":
        if c == 0:
            return BiPoly()
        out = BiPoly()
        object.__setattr__(out, "_terms", {m: c * v for m, v in self._terms.items()})
        return out

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, mono: Monomial) -> "BiPoly":
        """Multiply by a single monomial."""
        out = BiPoly()
        object.__setattr__(
            out, "_terms", {m.times(mono): c for m, c in self._terms.items()}
        )
        return out

    # -- equality ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def key(self) -> tuple:
        """Canonical hashable key, stable across processes."""
        return tuple(sorted(self._terms.items()))

    # -- formatting ---------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"BiPoly({format_poly(self)!r})"


X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)


def add(a: BiPoly, b: BiPoly) -> BiPoly:
    return a + b


def mul(a: BiPoly, b: BiPoly) -> BiPoly:
    return a * b


def scale(a: BiPoly, c: int) -> BiPoly:
    return a.scale(c)


def format_poly(p: BiPoly) -> str:
    """Render in the canonical term order; inverse of parse_poly."""
    if p.is_zero:
        return "0"
    pieces = []
    for idx, (mono, coeff) in enumerate(p.terms()):
        sign = "-" if coeff < 0 else ("+" if idx else "")
        mag = abs(coeff)
        if mono == ONE_MONO:
            body = str(mag)
        elif mag == 1:
            body = str(mono)
        else:
            body = f"{mag}*{mono}"
        pieces.append(sign + body)
    return "".join(pieces)


class ParseError(ValueError):
    """Syntax error in a polynomial expression; carries the offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Parser:
    """Recursive descent over: expr := sign? term (('+'|'-') term)*;
    term := factor ('*' factor)*; factor := INT | VAR ('^' UINT)? | '(' expr ')'.
    """

    def __init__(self, text: str, exponent_cap: int):
        self.text = text
        self.pos = 0
        self.cap = exponent_cap

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def parse_uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected integer", start)
        return int(self.text[start : self.pos])

    def parse_factor(self) -> BiPoly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if ch.isdigit():
            return BiPoly.const(self.parse_uint())
        if ch in ("X", "Y"):
            self.pos += 1
            exp = 1
            if self.peek() == "^":
                self.pos += 1
                at = self.pos
                exp = self.parse_uint()
                if exp > self.cap:
                    raise ParseError(f"exponent {exp} exceeds cap {self.cap}", at)
            return BiPoly.monomial(exp, 0) if ch == "X" else BiPoly.monomial(0, exp)
        raise ParseError(f"unexpected character {ch!r}" if ch else "unexpected end of input", self.pos)

    def parse_term(self) -> BiPoly:
        result = self.parse_factor()
        while self.peek() == "*":
            self.pos += 1
            result = result * self.parse_factor()
        return result

    def parse_expr(self) -> BiPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            if self.text[self.pos] == "-":
                sign = -1
            self.pos += 1
        result = self.parse_term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            term = self.parse_term()
            result = result + (term if op == "+" else -term)
        return result

    def parse(self) -> BiPoly:
        result = self.parse_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError("trailing input", self.pos)
        return result


def parse_poly(text: str, exponent_cap: int = EXPONENT_CAP) -> BiPoly:
    """Parse a polynomial expression; raises ParseError with position."""
    return _Parser(text, exponent_cap).parse()


def parse_ideal(text: str, exponent_cap: int = EXPONENT_CAP) -> list[BiPoly]:
    """Parse a comma-separated list of polynomial expressions."""
    gens = []
    offset = 0
    for chunk in text.split(","):
        try:
            gens.append(parse_poly(chunk, exponent_cap))
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" (at", 1)[0], offset + exc.pos) from None
        offset += len(chunk) + 1
    return gens


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def trace_poly_x(p: int) -> BiPoly:
    """Univariate trace polynomial: sum of C(p,l) * X^(l-1) for l = 1..p.

    Monic of degree p-1 with every non-leading coefficient divisible by p.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return BiPoly([(Monomial(l - 1, 0), math.comb(p, l)) for l in range(1, p + 1)])


def trace_poly_y(p: int) -> BiPoly:
    """Trace polynomial in the Y variable."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return BiPoly([(Monomial(0, l - 1), math.comb(p, l)) for l in range(1, p + 1)])


def trace_poly_xy() -> BiPoly:
    """Bivariate trace polynomial X^2+3X+3+3Y+Y^2 (the p=3 case)."""
    return trace_poly_x(3) + trace_poly_y(3) - BiPoly.const(3)
