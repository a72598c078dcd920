"""Sparse multivariate polynomials over QQ or GF(q), plus the text grammar.

A :class:`Polynomial` maps order keys of its ring (see :mod:`bigpd.ring`) to
nonzero coefficients.  Values are treated as immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ring import Ring, RingError


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- construction -------------------------------------------------------
    @classmethod
    def constant(cls, ring: Ring, value) -> "Polynomial":
        c = ring.field(value)
        if not c:
            return cls(ring, {})
        return cls(ring, {ring.key((0,) * ring.nvars): c})

    @classmethod
    def from_terms(cls, ring: Ring, pairs) -> "Polynomial":
        """Build from ``(exponent tuple, coefficient)`` pairs (summing repeats)."""
        F = ring.field
        q = F.char
        out: dict = {}
        for exps, c in pairs:
            c = F(c)
            if not c:
                continue
            k = ring.key(exps)
            v = out.get(k)
            v = c if v is None else v + c
            if q:
                v %= q
            if v:
                out[k] = v
            else:
                del out[k]
        return cls(ring, out)

    @classmethod
    def monomial(cls, ring: Ring, exps, coeff=1) -> "Polynomial":
        return cls.from_terms(ring, [(exps, coeff)])

    # -- basic queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """``(exponents, coefficient)`` pairs, descending in the monomial order."""
        R = self.ring
        return [(R.exps(k), self.terms[k]) for k in sorted(self.terms, reverse=True)]

    def leading_term(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        k = max(self.terms)
        return self.ring.exps(k), self.terms[k]

    def leading_monomial(self) -> tuple:
        return self.leading_term()[0]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def lead_key(self) -> int:
        return max(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        R = self.ring
        return max(R.deg_key(k) for k in self.terms)

    def degrees(self) -> set:
        R = self.ring
        return {R.deg_key(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_constant(self) -> bool:
        return self.degree() <= 0

    def constant_coefficient(self):
        return self.terms.get(self.ring.key((0,) * self.ring.nvars), self.ring.field.zero)

    def variables_used(self) -> set:
        R = self.ring
        m = 0
        for k in self.terms:
            m |= R.support_E(R.E_of_key(k))
        return {R.variables[i] for i in range(R.nvars) if m >> i & 1}

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingError("polynomials belong to different rings")
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other):
        other = self._check(other)
        q = self.ring.field.char
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = (v + c) % q if q else v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        q = self.ring.field.char
        if q:
            return Polynomial(self.ring, {k: q - c for k, c in self.terms.items()})
        return Polynomial(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F(c) if not isinstance(c, type(F.zero)) or F.char else c
        if not c:
            return Polynomial(self.ring, {})
        q = F.char
        if q:
            return Polynomial(self.ring, {k: v * c % q for k, v in self.terms.items()})
        return Polynomial(self.ring, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        return Polynomial(self.ring, mul_terms(self.terms, other.terms, self.ring.field.char))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, exps, coeff=1) -> "Polynomial":
        """Multiply by the monomial ``coeff * x^exps``."""
        R = self.ring
        s = R.key(exps)
        c = R.field(coeff)
        q = R.field.char
        if q:
            return Polynomial(R, {k + s: v * c % q for k, v in self.terms.items()})
        return Polynomial(R, {k + s: v * c for k, v in self.terms.items()})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient()))

    def homogeneous_component(self, d) -> "Polynomial":
        R = self.ring
        return Polynomial(R, {k: c for k, c in self.terms.items() if R.deg_key(k) == d})

    def divide_exact(self, other: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises if ``other`` does not divide."""
        other = self._check(other)
        quo, rem = divmod_poly(self, other)
        if rem.terms:
            raise ArithmeticError("polynomial division is not exact")
        return quo

    # -- substitution / ring change ----------------------------------------
    def to_ring(self, ring: Ring) -> "Polynomial":
        """Map into ``ring`` by variable names (missing names must not occur)."""
        if ring == self.ring:
            return self
        src = self.ring
        pos = []
        for v in src.variables:
            pos.append(ring.index.get(v))
        F = ring.field
        out = {}
        for k, c in self.terms.items():
            e = src.exps(k)
            ne = [0] * ring.nvars
            for i, ei in enumerate(e):
                if ei:
                    j = pos[i]
                    if j is None:
                        raise RingError(f"variable {src.variables[i]} not in target ring")
                    ne[j] = ei
            if F != src.field:
                c = F(src.field.to_fraction(c))
                if not c:
                    continue
            out[ring.key(ne)] = c
        return Polynomial(ring, out)

    def substitute(self, values: dict) -> "Polynomial":
        """Replace variables by polynomials (or scalars) of the same ring."""
        R = self.ring
        subs = {}
        for name, val in values.items():
            i = R.index[name] if isinstance(name, str) else name
            subs[i] = val if isinstance(val, Polynomial) else Polynomial.constant(R, val)
        result = Polynomial(R, {})
        cache: dict = {}
        for k, c in self.terms.items():
            e = list(R.exps(k))
            term = Polynomial(R, {})
            rest = list(e)
            fac = Polynomial.constant(R, 1)
            for i, p in subs.items():
                if e[i]:
                    rest[i] = 0
                    key = (i, e[i])
                    if key not in cache:
                        cache[key] = subs[i] ** e[i]
                    fac = fac * cache[key]
            term = fac.shift(rest, c)
            result = result + term
        return result

    # -- comparison / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def mul_terms(a: dict, b: dict, q: int) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    if q:
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                v = get(k)
                out[k] = ca * cb if v is None else v + ca * cb
        return {k: v % q for k, v in out.items() if v % q}
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            v = get(k)
            out[k] = ca * cb if v is None else v + ca * cb
    return {k: v for k, v in out.items() if v}


def divmod_poly(f: Polynomial, g: Polynomial):
    """Multivariate division of ``f`` by the single polynomial ``g``."""
    R = f.ring
    if not g.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    F = R.field
    q = F.char
    lk = max(g.terms)
    lE = R.E_of_key(lk)
    inv = F.inv(g.terms[lk])
    gt = [(k, c) for k, c in g.terms.items() if k != lk]
    rem = dict(f.terms)
    quo: dict = {}
    out: dict = {}
    GUARD = R.GUARD
    E_of_key = R.E_of_key
    while rem:
        k = max(rem)
        c = rem.pop(k)
        E = E_of_key(k)
        if (E - lE) & GUARD:
            out[k] = c
            continue
        s = k - lk
        m = c * inv % q if q else c * inv
        quo[s] = m
        for kg, cg in gt:
            kk = kg + s
            v = rem.get(kk)
            v = -m * cg if v is None else v - m * cg
            if q:
                v %= q
            if v:
                rem[kk] = v
            else:
                rem.pop(kk, None)
    return Polynomial(R, quo), Polynomial(R, out)


# -- text grammar ------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


class ParseError(ValueError):
    pass


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        for kind in ("num", "var", "op"):
            if m.group(kind) is not None:
                out.append((kind, m.group(kind)))
                break
    return out


class _Parser:
    """Recursive descent over ``+ - * ^`` and parentheses.

    The wire grammar has no parentheses; they are accepted as an extension.
    """

    def __init__(self, tokens, ring):
        self.t = tokens
        self.i = 0
        self.R = ring

    def peek(self):
        return self.t[self.i] if self.i < len(self.t) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        R = self.R
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc if acc is not None else R.zero

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                k2, v2 = self.take()
                if k2 != "num" or "/" in v2 or int(v2) == 0:
                    raise ParseError("can only divide by a nonzero integer")
                try:
                    acc = acc * Polynomial.constant(self.R, Fraction(1, int(v2)))
                except RingError as exc:
                    raise ParseError(str(exc)) from None
            elif kind in ("var", "num") or (kind == "op" and val == "("):
                # juxtaposition, e.g. "2x" or "x y"
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        R = self.R
        kind, val = self.take()
        if kind == "num":
            try:
                base = Polynomial.constant(R, Fraction(val))
            except RingError as exc:
                raise ParseError(str(exc)) from None
        elif kind == "var":
            if val not in R.index:
                raise ParseError(f"unknown variable {val!r}")
            base = R.var(val)
        elif kind == "op" and val == "(":
            base = self.expr()
            k2, v2 = self.take()
            if v2 != ")":
                raise ParseError("missing ')'")
        else:
            raise ParseError(f"unexpected token {val!r}")
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k2, v2 = self.take()
            if k2 != "num" or not v2.isdigit():
                raise ParseError(f"malformed exponent {v2!r}")
            base = base ** int(v2)
        return base


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` (e.g. ``"y^2*f + x*y*g - 3/2*x^2*h"``) into ``ring``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    p = _Parser(tokens, ring)
    out = p.expr()
    if p.i != len(tokens):
        raise ParseError(f"trailing input near token {p.i}: {tokens[p.i][1]!r}")
    return out


def format_monomial(ring: Ring, exps) -> str:
    parts = []
    for v, e in zip(ring.variables, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    R = p.ring
    F = R.field
    if not p.terms:
        return "0"
    out = []
    for exps, c in p.items():
        c = F.to_fraction(c)
        mono = format_monomial(R, exps)
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)
