"""Integer polynomials, their text syntax, and exact signature computation.

A number field K = Q[x]/(p) is given by a defining polynomial p.  Its
signature (r1, r2) counts real embeddings and pairs of complex ones; r1 is
the number of real roots of p, found exactly with a fraction-free Sturm
sequence.  Irreducibility of p is not checked: for a reducible squarefree p
the result is the signature of the etale algebra Q[x]/(p).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import DegreeError, NotSquarefreeError, ParseError


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial with ascending coefficients (coeffs[i] multiplies x^i)."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if len(cs) < 2:
            raise DegreeError("a defining polynomial must have degree >= 1")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __str__(self):
        return render_polynomial(self)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class Signature:
    r1: int
    r2: int
    degree: int

    def __post_init__(self):
        if self.r1 < 0 or self.r2 < 0:
            raise ValueError("r1 and r2 must be nonnegative")
        if self.r1 + 2 * self.r2 != self.degree:
            raise ValueError("signature must satisfy r1 + 2*r2 = degree")

    @classmethod
    def of(cls, r1: int, r2: int) -> "Signature":
        return cls(r1, r2, r1 + 2 * r2)

    def to_dict(self):
        return {"r1": self.r1, "r2": self.r2, "degree": self.degree}


# ---------------------------------------------------------------------------
# dense integer polynomial arithmetic on plain lists (ascending order)

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _add(p, q):
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def _neg(p):
    return [-c for c in p]


def _mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _pow(p, e):
    out = [1]
    for _ in range(e):
        out = _mul(out, p)
    return out


def _derivative(p):
    return _trim([i * p[i] for i in range(1, len(p))])


def _content(p):
    g = 0
    for c in p:
        g = math.gcd(g, c)
    return g


def _primitive(p):
    g = _content(p)
    return [c // g for c in p] if g > 1 else list(p)


def _pseudo_remainder(a, b):
    """Remainder of |lc(b)|^(deg a - deg b + 1) * a modulo b.

    Using |lc(b)| keeps the multiplier positive, so signs survive.
    """
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    scale = abs(lc)
    sign = 1 if lc > 0 else -1
    steps = len(a) - len(b) + 1
    for _ in range(steps):
        r = [scale * c for c in r]
        if len(r) - 1 >= db and r:
            q = sign * (r[-1] // scale)
            shift = len(r) - 1 - db
            for i, c in enumerate(b):
                r[shift + i] -= q * c
            r = _trim(r)
    return _trim(r)


def sturm_sequence(p: IntPolynomial) -> list[list[int]]:
    """Fraction-free Sturm chain p, p', -prem(...), ... with primitive parts.

    Every element differs from the classical Sturm chain by a positive
    constant factor, so sign variations are unchanged.
    """
    seq = [list(p.coeffs), _primitive(_derivative(list(p.coeffs)))]
    while True:
        r = _pseudo_remainder(seq[-2], seq[-1])
        if not r:
            break
        seq.append(_primitive(_neg(r)))
    return seq


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign(v):
    return (v > 0) - (v < 0)


def sturm_real_root_count(p: IntPolynomial) -> int:
    """Exact number of distinct real roots of a squarefree integer polynomial."""
    seq = sturm_sequence(p)
    if len(seq[-1]) > 1:
        raise NotSquarefreeError(
            f"{render_polynomial(p)} is not squarefree (gcd with derivative has degree {len(seq[-1]) - 1})"
        )
    at_pos = [_sign(q[-1]) for q in seq]
    at_neg = [_sign(q[-1]) * (-1) ** (len(q) - 1) for q in seq]
    return _variations(at_neg) - _variations(at_pos)


def signature(p: IntPolynomial) -> Signature:
    r1 = sturm_real_root_count(p)
    # non-real roots of a real polynomial come in conjugate pairs
    r2, odd = divmod(p.degree - r1, 2)
    assert odd == 0
    return Signature(r1, r2, p.degree)


# ---------------------------------------------------------------------------
# text syntax
#
#   poly    := list | expr
#   list    := '[' INT (',' INT)* ']'            ascending coefficients
#   expr    := ['+'|'-'] term (('+'|'-') term)*
#   term    := factor (('*' factor) | xfactor)*   juxtaposition before 'x' or '('
#   factor  := atom ('^' INT)?
#   atom    := INT | 'x' | '(' expr ')'

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\*\*|[-+*^(),\[\]]))")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m:
                rest = text[pos:]
                if rest.strip():
                    bad = pos + len(rest) - len(rest.lstrip())
                    raise ParseError(f"unexpected character {text[bad]!r}", bad, "integer, 'x', operator or bracket")
                break
            start = m.start(m.lastindex)
            kind = ("int", "x", "op")[m.lastindex - 1]
            value = m.group(m.lastindex)
            if value == "**":
                value = "^"
            self.tokens.append((kind, value, start))
            pos = m.end()
        self.tokens.append(("end", None, len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value, expected):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"unexpected {_describe(kind, v)}", pos, expected)

    def integer(self):
        kind, v, pos = self.take()
        if kind != "int":
            raise ParseError(f"unexpected {_describe(kind, v)}", pos, "integer")
        return int(v)

    def parse(self):
        kind, v, _ = self.peek()
        if v == "[":
            result = self.coefficient_list()
        else:
            result = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {_describe(kind, v)}", pos, "end of input or '+'/'-'")
        return result

    def coefficient_list(self):
        self.expect("[", "'['")
        coeffs = [self.signed_integer()]
        while self.peek()[1] == ",":
            self.take()
            coeffs.append(self.signed_integer())
        self.expect("]", "',' or ']'")
        return coeffs

    def signed_integer(self):
        sign = 1
        while self.peek()[1] in ("+", "-"):
            if self.take()[1] == "-":
                sign = -sign
        return sign * self.integer()

    def expr(self):
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = _neg(acc)
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            acc = _add(acc, rhs if op == "+" else _neg(rhs))
        return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, v, _ = self.peek()
            if v == "*":
                self.take()
                acc = _mul(acc, self.factor())
            elif kind == "x" or v == "(":
                acc = _mul(acc, self.factor())
            else:
                return acc

    def factor(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            base = _pow(base, self.integer())
        return base

    def atom(self):
        kind, v, pos = self.take()
        if kind == "int":
            return _trim([int(v)])
        if kind == "x":
            return [0, 1]
        if v == "(":
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        raise ParseError(f"unexpected {_describe(kind, v)}", pos, "integer, 'x' or '('")


def _describe(kind, value):
    return "end of input" if kind == "end" else repr(value)


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse "x^3-2", "2x^2+3x-1", "(x^2+1)(x-3)" or "[-2,0,0,1]"."""
    coeffs = _Parser(text).parse()
    if len(coeffs) < 2:
        raise DegreeError(f"{text!r} is constant; a defining polynomial needs degree >= 1")
    return IntPolynomial(coeffs)


def render_polynomial(p: IntPolynomial) -> str:
    """Canonical expression text, e.g. "x^3 - 2"; parse_polynomial inverts it."""
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
