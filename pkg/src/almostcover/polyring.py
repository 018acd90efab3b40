"""Multivariate polynomials with exact coefficients under deglex/lex orders.

Monomials are dense exponent tuples of length n.  The deglex order compares
total degree first and breaks ties lexicographically with x1 most
significant; rendering and parsing use the grammar ``x1^2*x2 - 3/2*x2 + 1``
with terms in descending deglex order.
"""

from __future__ import annotations

import re

from .fields import Field
from .errors import ParseError


def mono_one(nvars: int) -> tuple:
    return (0,) * nvars


def mono_deg(mono) -> int:
    return sum(mono)


def mono_mul(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    """True when a divides b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a) -> tuple:
    """b / a, assuming divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_text(mono) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


class TermOrder:
    """A total multiplicative monomial order: 'deglex' or 'lex'.

    Both refine the variable precedence x1 > x2 > ... > xn; the constant
    monomial is minimal.
    """

    __slots__ = ("kind",)

    def __init__(self, kind: str):
        if kind not in ("deglex", "lex"):
            raise ValueError(f"unknown term order {kind!r}")
        self.kind = kind

    def key(self, mono):
        if self.kind == "deglex":
            return (sum(mono), mono)
        return mono

    def compare(self, a, b) -> int:
        """-1, 0 or +1 as a precedes, equals or follows b."""
        if len(a) != len(b):
            raise ValueError("monomials of differing dimensions")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(("TermOrder", self.kind))

    def __repr__(self):
        return f"TermOrder({self.kind!r})"


DEGLEX = TermOrder("deglex")
LEX = TermOrder("lex")

_TOKEN_RE = re.compile(r"\s*(?:(\d+/\d+|\d+)|(x\d+)|([+\-*^]))")


class Polynomial:
    """Exact-coefficient polynomial; zero coefficients are never stored."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self.terms[mono] = coeff

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars)

    @classmethod
    def constant(cls, field, nvars, value):
        return cls(field, nvars, {mono_one(nvars): field.scalar(value)})

    @classmethod
    def variable(cls, field, nvars, i):
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(field, nvars, {mono: field.one()})

    @classmethod
    def from_terms(cls, field, nvars, pairs):
        """Build from (exponent tuple, coefficient) pairs, summing repeats."""
        acc = {}
        for mono, coeff in pairs:
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for {nvars} variables")
            c = acc.get(mono, field.zero()) + field.scalar(coeff)
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        return cls(field, nvars, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max(map(mono_deg, self.terms)) if self.terms else -1

    def leading_term(self, order: TermOrder = DEGLEX):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        lm = max(self.terms, key=order.key)
        return lm, self.terms[lm]

    def _check_compatible(self, other: "Polynomial"):
        if self.field != other.field:
            raise TypeError(f"field mismatch: {self.field!r} vs {other.field!r}")
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        acc = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = acc.get(mono)
            c = coeff if c is None else c + coeff
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        return Polynomial(self.field, self.nvars, acc)

    def __neg__(self):
        return Polynomial(self.field, self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_compatible(other)
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = acc.get(m)
                prod = c1 * c2
                c = prod if c is None else c + prod
                if c:
                    acc[m] = c
                else:
                    acc.pop(m, None)
        return Polynomial(self.field, self.nvars, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value):
        c = self.field.scalar(value)
        if not c:
            return Polynomial(self.field, self.nvars)
        return Polynomial(self.field, self.nvars, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.field, self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ValueError("dimension mismatch")
        total = self.field.zero()
        for mono, coeff in self.terms.items():
            v = coeff
            for x, e in zip(point, mono):
                if e:
                    v = v * x**e
            total = total + v
        return total

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def text(self) -> str:
        """Canonical rendering, terms in descending deglex order."""
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=DEGLEX.key, reverse=True):
            coeff = self.field.format(self.terms[mono])
            negative = coeff.startswith("-")
            mag = coeff[1:] if negative else coeff
            body = mono_text(mono)
            if body == "1":
                piece = mag
            elif mag == "1":
                piece = body
            else:
                piece = f"{mag}*{body}"
            if not parts:
                parts.append(f"-{piece}" if negative else piece)
            else:
                parts.append(f" - {piece}" if negative else f" + {piece}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self.text()!r})"

    @classmethod
    def parse(cls, field: Field, nvars: int, text: str) -> "Polynomial":
        """Parse the rendering grammar back into a polynomial."""
        tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                rest = text[pos:].strip()
                if not rest:
                    break
                raise ParseError(f"bad polynomial syntax near {rest[:12]!r}")
            tokens.append(m.group(m.lastindex))
            pos = m.end()
        if not tokens:
            raise ParseError("empty polynomial text")
        pairs = []
        i = 0
        first = True
        while i < len(tokens):
            sign = 1
            while i < len(tokens) and tokens[i] in "+-":
                if tokens[i] == "+" and first and not pairs:
                    raise ParseError("polynomial may not start with '+'")
                if tokens[i] == "-":
                    sign = -sign
                i += 1
            first = False
            coeff = field.one() * sign
            expo = [0] * nvars
            saw_factor = False
            while True:
                if i >= len(tokens):
                    break
                tok = tokens[i]
                if tok in "+-":
                    break
                if tok == "*":
                    raise ParseError("misplaced '*'")
                if tok[0] == "x":
                    var = int(tok[1:])
                    if not 1 <= var <= nvars:
                        raise ParseError(f"variable {tok} out of range (n = {nvars})")
                    e = 1
                    if i + 1 < len(tokens) and tokens[i + 1] == "^":
                        if i + 2 >= len(tokens) or not tokens[i + 2].isdigit():
                            raise ParseError(f"bad exponent after {tok}")
                        e = int(tokens[i + 2])
                        i += 2
                    expo[var - 1] += e
                else:
                    coeff = coeff * field.parse(tok)
                saw_factor = True
                i += 1
                if i < len(tokens) and tokens[i] == "*":
                    i += 1
                    if i >= len(tokens) or tokens[i] in "+-*^":
                        raise ParseError("dangling '*'")
                    continue
                break
            if not saw_factor:
                raise ParseError("empty term")
            if i < len(tokens) and tokens[i] not in "+-":
                raise ParseError(f"expected '+' or '-' before {tokens[i]!r}")
            pairs.append((tuple(expo), coeff))
        return cls.from_terms(field, nvars, pairs)


def reduce_poly(f: Polynomial, gens, order: TermOrder = DEGLEX) -> Polynomial:
    """Normal form of f modulo a list of polynomials.

    Repeatedly rewrites the order-largest monomial of f that some leading
    monomial divides, always using the first matching generator, so the
    result is deterministic and no remaining monomial is divisible by any
    leading monomial.  Under deglex the total degree never increases.
    """
    gens = list(gens)
    heads = []
    for g in gens:
        if not isinstance(g, Polynomial):
            raise TypeError("generators must be polynomials")
        f._check_compatible(g)
        if g.is_zero():
            raise ValueError("zero polynomial in the generator list")
        lm, lc = g.leading_term(order)
        heads.append((lm, lc, g))
    work = dict(f.terms)
    while True:
        target = None
        for mono in work:
            if any(mono_divides(lm, mono) for lm, _, _ in heads):
                if target is None or order.compare(mono, target) > 0:
                    target = mono
        if target is None:
            break
        for lm, lc, g in heads:
            if mono_divides(lm, target):
                u = mono_div(target, lm)
                factor = work[target] / lc
                for m, c in g.terms.items():
                    key = mono_mul(u, m)
                    cur = work.get(key)
                    cur = -factor * c if cur is None else cur - factor * c
                    if cur:
                        work[key] = cur
                    else:
                        work.pop(key, None)
                break
    return Polynomial(f.field, f.nvars, work)
