"""Coefficient fields and graded polynomial rings.

Monomials are packed into Python integers.  Every ring keeps a canonical
exponent pack ``E`` (variable ``i`` in bit field ``i``, total degree in the
field above them) that supports divisibility tests and lcm by a few integer
operations, and an order *key* that is additive under multiplication and
compares like the monomial order.  Polynomials store order keys, so
multiplying by a monomial is an integer addition on every key.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

import gmpy2

#: bits per exponent field; the top bit of every field is a guard bit.
FIELD_BITS = 12
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class RingError(ValueError):
    pass


class Field:
    """The rationals (``char == 0``) or a prime field GF(q) with q odd.

    GF(q) elements are ints in ``[0, q)``; rationals are ``gmpy2.mpq``.
    """

    def __init__(self, char: int = 0):
        if char:
            if char < 3 or not gmpy2.is_prime(char):
                raise RingError(f"GF({char}): modulus must be an odd prime")
        self.char = int(char)

    @classmethod
    def parse(cls, tag: str) -> "Field":
        t = tag.strip().lower()
        if t in ("qq", "q", "rationals"):
            return cls(0)
        m = re.fullmatch(r"(?:gf|zz/|f)\(?(\d+)\)?", t)
        if not m:
            raise RingError(f"unknown field tag {tag!r}")
        return cls(int(m.group(1)))

    @property
    def name(self) -> str:
        return "QQ" if self.char == 0 else f"GF({self.char})"

    @property
    def tag(self) -> str:
        return "qq" if self.char == 0 else f"gf{self.char}"

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return self.name

    @property
    def zero(self):
        return 0 if self.char else gmpy2.mpq(0)

    @property
    def one(self):
        return 1 if self.char else gmpy2.mpq(1)

    def __call__(self, value):
        """Coerce an int, Fraction, mpq or ``"a/b"`` string into the field."""
        q = self.char
        if isinstance(value, str):
            value = Fraction(value)
        if q:
            if isinstance(value, int):
                return value % q
            num, den = int(value.numerator), int(value.denominator)
            if den % q == 0:
                raise RingError(f"{value} is not defined in GF({q})")
            return num * pow(den, q - 2, q) % q
        return gmpy2.mpq(value.numerator, value.denominator) if not isinstance(value, int) else gmpy2.mpq(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.char:
            return pow(a, self.char - 2, self.char)
        return 1 / a

    def neg(self, a):
        return (-a) % self.char if self.char else -a

    def to_fraction(self, a) -> Fraction:
        """Rational lift; GF(q) elements are lifted to the symmetric range."""
        if self.char:
            a = int(a)
            if a > self.char // 2:
                a -= self.char
            return Fraction(a)
        return Fraction(int(a.numerator), int(a.denominator))

    def format(self, a) -> str:
        return str(self.to_fraction(a))


_ORDER_RE = re.compile(r"(grevlex|lex|elim):?(\d+)?\Z")


def _parse_order(order) -> tuple[str, int]:
    if isinstance(order, tuple):
        return order[0], int(order[1])
    m = _ORDER_RE.fullmatch(str(order).strip().lower())
    if not m:
        raise RingError(f"unknown monomial order {order!r}")
    kind = m.group(1)
    if kind == "elim":
        if m.group(2) is None:
            raise RingError("elimination order needs a block size, e.g. elim:1")
        return kind, int(m.group(2))
    return kind, 0


class Ring:
    """Standard graded polynomial ring ``field[variables]`` with a monomial order.

    ``order`` is ``"grevlex"`` (default), ``"lex"`` or ``"elim:k"``: the first
    ``k`` variables form a block that is compared first (grevlex within each
    block), which eliminates them.
    """

    def __init__(self, field, variables, order="grevlex"):
        if isinstance(field, str):
            field = Field.parse(field)
        elif isinstance(field, int):
            field = Field(field)
        variables = tuple(variables)
        if not variables:
            raise RingError("a ring needs at least one variable")
        for v in variables:
            if not isinstance(v, str) or not _NAME_RE.match(v):
                raise RingError(f"bad variable name {v!r}")
        if len(set(variables)) != len(variables):
            dup = sorted({v for v in variables if variables.count(v) > 1})
            raise RingError(f"duplicate variable name(s): {', '.join(dup)}")
        kind, block = _parse_order(order)
        if kind == "elim" and not 0 < block < len(variables):
            raise RingError(f"elimination block size {block} out of range")
        self.field = field
        self.variables = variables
        self.nvars = n = len(variables)
        self.order_kind = kind
        self.elim_block = block
        self.index = {v: i for i, v in enumerate(variables)}

        W = FIELD_BITS
        self.S = S = W * n
        self.FM = (1 << W) - 1
        self.PMASK = (1 << S) - 1
        # guard bit of every exponent field
        self.GUARD = sum(1 << (W * i + W - 1) for i in range(n))
        self.ONES = sum(1 << (W * i) for i in range(n))
        self._install_order()

    # -- identity -----------------------------------------------------------
    @property
    def order(self) -> str:
        return self.order_kind if self.order_kind != "elim" else f"elim:{self.elim_block}"

    def _sig(self):
        return (self.field.char, self.variables, self.order)

    def __eq__(self, other):
        return isinstance(other, Ring) and self._sig() == other._sig()

    def __hash__(self):
        return hash(self._sig())

    def __repr__(self):
        return f"Ring({self.field.tag}, [{','.join(self.variables)}], {self.order})"

    def header(self) -> str:
        return f"ring: {self.field.tag} [{','.join(self.variables)}] {self.order}"

    def with_order(self, order) -> "Ring":
        return make_ring(self.field, self.variables, order)

    def with_variables(self, variables, order=None) -> "Ring":
        return make_ring(self.field, variables, self.order if order is None else order)

    # -- exponent packs -----------------------------------------------------
    def pack(self, exps) -> int:
        W = FIELD_BITS
        P = 0
        d = 0
        for i, e in enumerate(exps):
            if e:
                if e < 0 or e > MAX_EXPONENT:
                    raise RingError(f"exponent {e} out of range")
                P |= e << (W * i)
                d += e
        return (d << self.S) | P

    def unpack(self, E) -> tuple:
        W, FM = FIELD_BITS, self.FM
        return tuple((E >> (W * i)) & FM for i in range(self.nvars))

    def deg_E(self, E) -> int:
        return E >> self.S

    def divides_E(self, Ea, Eb) -> bool:
        return not ((Eb - Ea) & self.GUARD)

    def lcm_E(self, a, b) -> int:
        # SWAR field-wise maximum; exponents stay below the guard bit
        G = self.GUARD
        PM = self.PMASK
        a &= PM
        b &= PM
        t = ((a | G) - b) & G  # guard set where a >= b
        m = (t >> (FIELD_BITS - 1)) * self.FM
        P = (a & m) | (b & ~m & PM)
        d = ((P * self.ONES) >> (self.S - FIELD_BITS)) & self.FM
        return (d << self.S) | P

    def gcd_E(self, a, b) -> int:
        G = self.GUARD
        PM = self.PMASK
        a &= PM
        b &= PM
        t = ((a | G) - b) & G
        m = (t >> (FIELD_BITS - 1)) * self.FM
        P = (b & m) | (a & ~m & PM)
        d = ((P * self.ONES) >> (self.S - FIELD_BITS)) & self.FM
        return (d << self.S) | P

    def support_E(self, E) -> int:
        """Bitmask of the variables occurring in a monomial."""
        W, FM = FIELD_BITS, self.FM
        m = 0
        for i in range(self.nvars):
            if (E >> (W * i)) & FM:
                m |= 1 << i
        return m

    # -- order keys ---------------------------------------------------------
    def _install_order(self):
        kind = self.order_kind
        n, W, S = self.nvars, FIELD_BITS, self.S
        if kind == "grevlex":
            S1 = S + 1
            PM = self.PMASK
            TOP = (1 << S) - 1

            def key_of_E(E):
                return E - ((E & PM) << 1)

            def E_of_key(k):
                return (((k + TOP) >> S) << S1) - k

            self.key_of_E = key_of_E
            self.E_of_key = E_of_key
        elif kind == "lex":
            FM = self.FM

            def key_of_E(E):
                k = 0
                for i in range(n):
                    k |= ((E >> (W * i)) & FM) << (W * (n - 1 - i))
                return k

            def E_of_key(k):
                P = 0
                d = 0
                for i in range(n):
                    e = (k >> (W * (n - 1 - i))) & FM
                    P |= e << (W * i)
                    d += e
                return (d << S) | P

            self.key_of_E = key_of_E
            self.E_of_key = E_of_key
        else:
            b = self.elim_block
            FM = self.FM
            SA, SB = W * b, W * (n - b)
            SHIFT = SB + 2 * W

            def key_of_E(E):
                ea = [(E >> (W * i)) & FM for i in range(b)]
                eb = [(E >> (W * i)) & FM for i in range(b, n)]
                PA = sum(e << (W * i) for i, e in enumerate(ea))
                PB = sum(e << (W * i) for i, e in enumerate(eb))
                ka = (sum(ea) << SA) - PA
                kb = (sum(eb) << SB) - PB
                return (ka << SHIFT) + kb

            def E_of_key(k):
                ka, kb = k >> SHIFT, k & ((1 << SHIFT) - 1)
                da = (ka + (1 << SA) - 1) >> SA
                PA = (da << SA) - ka
                db = (kb + (1 << SB) - 1) >> SB
                PB = (db << SB) - kb
                return ((da + db) << S) | PA | (PB << SA)

            self.key_of_E = key_of_E
            self.E_of_key = E_of_key

    def key(self, exps) -> int:
        return self.key_of_E(self.pack(exps))

    def exps(self, key) -> tuple:
        return self.unpack(self.E_of_key(key))

    def deg_key(self, key) -> int:
        return self.E_of_key(key) >> self.S

    # -- constructors -------------------------------------------------------
    def gens(self):
        return [self.var(v) for v in self.variables]

    def var(self, name):
        from .poly import Polynomial

        if isinstance(name, int):
            i = name
        else:
            if name not in self.index:
                raise RingError(f"unknown variable {name!r}")
            i = self.index[name]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {self.key(e): self.field.one})

    def __call__(self, value):
        from .poly import Polynomial, parse_poly

        if isinstance(value, Polynomial):
            return value.to_ring(self)
        if isinstance(value, str):
            return parse_poly(value, self)
        return Polynomial.constant(self, value)

    @property
    def one(self):
        from .poly import Polynomial

        return Polynomial.constant(self, 1)

    @property
    def zero(self):
        from .poly import Polynomial

        return Polynomial(self, {})


@lru_cache(maxsize=None)
def _cached_ring(char, variables, order):
    return Ring(Field(char), variables, order)


def make_ring(field, variables, order="grevlex") -> Ring:
    """Build (or fetch the cached) ring ``field[variables]`` with ``order``."""
    if isinstance(field, str):
        field = Field.parse(field)
    elif isinstance(field, int):
        field = Field(field)
    kind, block = _parse_order(order)
    order = kind if kind != "elim" else f"elim:{block}"
    return _cached_ring(field.char, tuple(variables), order)
