"""The ideal families: Burch ideals, the four base families with their
explicit resolutions, the linkage table of the main construction, and small
fixtures (regularity family, height-2 multiplicity-2 ideals)."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .ideals import Ideal, colon, is_primary_to_linear, radical_member
from .invariants import depth_certificate, dimension, hilbert, verify_socle_witness
from .matrix import RingMatrix
from .poly import Polynomial
from .resolution import (
    FreeComplex,
    be_acyclicity_check,
    betti_table,
    dualize,
    ext_via_linkage,
    homology_presentation,
    is_complex,
    serre_sk_check,
)
from .ring import make_ring

log = logging.getLogger("bigpd")

DEFAULT_FIELD = "gf32003"
KINDS = ("L25", "L26", "L220", "L36")


# -- Burch ideals ------------------------------------------------------------------

def burch_variables(n):
    return ["a", "b"] + [f"c{i}" for i in range(1, n + 1)]


def burch_forms(R, n):
    """``(a^n, b^n, a^(n-1) c_1 + a^(n-2) b c_2 + ... + b^(n-1) c_n)`` in ``R``."""
    if n < 1:
        raise ValueError("the Burch parameter must be at least 1")
    a, b = R.var("a"), R.var("b")
    h = R.zero
    for i in range(1, n + 1):
        h = h + a ** (n - i) * b ** (i - 1) * R.var(f"c{i}")
    return a ** n, b ** n, h


def burch_ideal(n, field=DEFAULT_FIELD, order="grevlex") -> Ideal:
    """``(f_n, g_n, h_n)`` in ``K[a, b, c_1..c_n]``; ``pd R/I = n + 2``."""
    if n < 1:
        raise ValueError("the Burch parameter must be at least 1")
    R = make_ring(field, burch_variables(n), order)
    return Ideal(R, burch_forms(R, n))


def burch_socle(R, n) -> Polynomial:
    return R.var("a") ** (n - 1) * R.var("b") ** (n - 1)


def burch_prime(R, n) -> Ideal:
    return Ideal(R, [R.var(v) for v in burch_variables(n)])


# -- templates of the base families ---------------------------------------------------
# Entries are written in the template variables x, y, z, f, g, h, u, v with
# u = t^(d-1) and v = t^(3d-3); instantiation substitutes the chosen forms.

_TEMPLATE_VARS = ("x", "y", "z", "f", "g", "h", "u", "v")

_L25 = {
    "d": [
        [["x^3", "x^2*y", "x*y^2", "y^3", "y^2*f+x*y*g+x^2*h"]],
        [
            ["-y", "0", "0", "-h", "0"],
            ["x", "-y", "0", "-g", "-h"],
            ["0", "x", "-y", "-f", "-g"],
            ["0", "0", "x", "0", "-f"],
            ["0", "0", "0", "x", "y"],
        ],
        [["h"], ["g"], ["f"], ["-y"], ["x"]],
    ],
}

_L36 = {
    "d": [
        [["x^2", "y^2", "z^2", "x*y*z", "y*z*f+x*z*g+x*y*h"]],
        [
            ["-y^2", "-y*z", "0", "-z^2", "0", "0", "-z*g-y*h", "0", "0"],
            ["x^2", "0", "-x*z", "0", "0", "-z^2", "0", "-z*f-x*h", "0"],
            ["0", "0", "0", "x^2", "-x*y", "y^2", "0", "0", "-y*f-x*g"],
            ["0", "x", "y", "0", "z", "0", "-f", "-g", "-h"],
            ["0", "0", "0", "0", "0", "0", "x", "y", "z"],
        ],
        [
            ["z", "0", "0", "h", "0", "0"],
            ["-y", "-z", "0", "g", "h", "0"],
            ["x", "0", "-z", "-f", "0", "h"],
            ["0", "y", "0", "0", "g", "0"],
            ["0", "x", "y", "0", "-f", "-g"],
            ["0", "0", "x", "0", "0", "f"],
            ["0", "0", "0", "-y", "-z", "0"],
            ["0", "0", "0", "x", "0", "-z"],
            ["0", "0", "0", "0", "x", "y"],
        ],
        [["-h"], ["g"], ["-f"], ["z"], ["-y"], ["x"]],
    ],
}

_L26 = {
    "d": [
        [["x^3", "y^3", "x^2*y^2", "x^2*y*f+x*y^2*g", "x^2*f^2+x*y*f*g+y^2*g^2+x^2*y*u*h"]],
        [
            ["-y^2", "0", "-y*f", "0", "-f^2-y*u*h", "0"],
            ["0", "-x^2", "0", "-x*g", "0", "-g^2"],
            ["x", "y", "-g", "-f", "0", "-u*h"],
            ["0", "0", "x", "y", "-g", "-f"],
            ["0", "0", "0", "0", "x", "y"],
        ],
        [["f", "u*h"], ["-g", "0"], ["-y", "f"], ["x", "-g"], ["0", "-y"], ["0", "x"]],
    ],
}

_L220 = {
    "d": [
        [[
            "x^5",
            "y^5",
            "x^4*y^4",
            "x^4*y^3*f+x^3*y^4*g",
            "x^4*y^2*f^2+x^3*y^3*f*g+x^2*y^4*g^2",
            "x^4*y*f^3+x^3*y^2*f^2*g+x^2*y^3*f*g^2+x*y^4*g^3",
            "x^4*f^4+x^3*y*f^3*g+x^2*y^2*f^2*g^2+x*y^3*f*g^3+y^4*g^4+x^4*y^3*v*h",
        ]],
        [
            ["-y^4", "0", "-y^3*f", "0", "-y^2*f^2", "0", "-y*f^3", "0", "-f^4-y^3*v*h", "0"],
            ["0", "-x^4", "0", "-x^3*g", "0", "-x^2*g^2", "0", "-x*g^3", "0", "-g^4"],
            ["x", "y", "-g", "-f", "0", "0", "0", "0", "0", "-v*h"],
            ["0", "0", "x", "y", "-g", "-f", "0", "0", "0", "0"],
            ["0", "0", "0", "0", "x", "y", "-g", "-f", "0", "0"],
            ["0", "0", "0", "0", "0", "0", "x", "y", "-g", "-f"],
            ["0", "0", "0", "0", "0", "0", "0", "0", "x", "y"],
        ],
        [
            ["f", "0", "0", "v*h"],
            ["-g", "0", "0", "0"],
            ["-y", "f", "0", "0"],
            ["x", "-g", "0", "0"],
            ["0", "-y", "f", "0"],
            ["0", "x", "-g", "0"],
            ["0", "0", "-y", "f"],
            ["0", "0", "x", "-g"],
            ["0", "0", "0", "-y"],
            ["0", "0", "0", "x"],
        ],
    ],
}


@dataclass(frozen=True)
class BaseFamilyInfo:
    kind: str
    height: int
    multiplicity: int
    linear: tuple  # names of the linear forms generating the prime
    ci: tuple  # designated complete intersection (template strings)
    ranks: tuple
    template: dict = field(hash=False, compare=False, default=None)


BASE = {
    "L25": BaseFamilyInfo("L25", 2, 5, ("x", "y"), ("x^3", "y^3"), (1, 5, 5, 1), _L25),
    "L26": BaseFamilyInfo("L26", 2, 6, ("x", "y"), ("x^3", "y^3"), (1, 5, 6, 2), _L26),
    "L220": BaseFamilyInfo("L220", 2, 20, ("x", "y"), ("x^5", "y^5"), (1, 7, 10, 4), _L220),
    "L36": BaseFamilyInfo("L36", 3, 6, ("x", "y", "z"), ("x^2", "y^2", "z^2"), (1, 5, 9, 6, 1), _L36),
}


def burch_parameter(kind, p) -> int:
    """Burch parameter ``n`` making ``pd Ext^h(R/L, R) >= p`` for the family.

    L25: ``pd ker d_3^* = pd R/(x,y,f,g,h) - 2 = n + 2``; L36: ``pd = n + 3``;
    L26 and L220: the socle argument gives ``pd >= n`` with ``n = p``.
    """
    if kind == "L25":
        return p - 2
    if kind == "L36":
        return p - 3
    if kind in ("L26", "L220"):
        return p
    raise ValueError(f"unknown family {kind!r}")


def _tpl_ring(field):
    return make_ring(field, _TEMPLATE_VARS)


def _evaluate(tp: Polynomial, images):
    """Substitute template variables by polynomials of one target ring."""
    T = tp.ring
    R = images[0].ring
    out = R.zero
    cache = {}
    for k, c in tp.terms.items():
        e = T.exps(k)
        term = Polynomial.constant(R, T.field.to_fraction(c)) if R.field != T.field else Polynomial.constant(R, c)
        for i, ei in enumerate(e):
            if ei:
                key = (i, ei)
                if key not in cache:
                    cache[key] = images[i] ** ei
                term = term * cache[key]
        out = out + term
    return out


@dataclass
class BaseFamily:
    """A base family instance: the ideal, its explicit complex and bookkeeping."""

    kind: str
    p: int
    forms_mode: str
    ring: object
    ideal: Ideal
    complex: FreeComplex
    forms: tuple
    n: int | None
    d: int
    info: BaseFamilyInfo

    def __iter__(self):
        # unpacks as (ideal, complex)
        yield self.ideal
        yield self.complex

    def ci(self):
        R = self.ring
        return [R(s) for s in self.info.ci]

    def prime(self) -> Ideal:
        R = self.ring
        return Ideal(R, [R.var(v) for v in self.info.linear])


def _family_ring(kind, p, forms_mode, field, order):
    info = BASE[kind]
    lin = list(info.linear)
    if forms_mode == "burch":
        n = burch_parameter(kind, p)
        if n < 1:
            raise ValueError(f"{kind} needs p >= {p - n + 1} for Burch forms")
        extra = ["t"] if kind in ("L26", "L220") else []
        R = make_ring(field, burch_variables(n) + lin + extra, order)
        f, g, h = burch_forms(R, n)
        d = n
        tvar = R.var("t") if extra else R.one
    elif forms_mode in ("generic", "generic-variables"):
        n = None
        R = make_ring(field, lin + ["f", "g", "h"], order)
        f, g, h = R.var("f"), R.var("g"), R.var("h")
        d = 1
        tvar = R.one
    else:
        raise ValueError(f"unknown forms mode {forms_mode!r}")
    return R, (f, g, h), n, d, tvar


def build_L(kind, p, forms_mode="burch", field=DEFAULT_FIELD, order="grevlex", check_hypotheses=True) -> BaseFamily:
    """Instantiate a base family and its explicit resolution.

    ``forms_mode="burch"`` takes ``f, g, h`` to be Burch forms (parameter from
    :func:`burch_parameter`, degree ``d = n``); ``"generic-variables"``
    takes them to be fresh variables (``d = 1``).  The result unpacks as
    ``(ideal, complex)``.
    """
    if kind not in BASE:
        raise ValueError(f"unknown family {kind!r}; expected one of {', '.join(KINDS)}")
    if p < 4:
        raise ValueError("base families need p >= 4")
    info = BASE[kind]
    R, (f, g, h), n, d, tvar = _family_ring(kind, p, forms_mode, field, order)
    T = _tpl_ring(field)
    img = {
        "x": R.var("x"),
        "y": R.var("y"),
        "z": R.var("z") if "z" in R.index else R.zero,
        "f": f,
        "g": g,
        "h": h,
        "u": tvar ** (d - 1),
        "v": tvar ** (3 * d - 3),
    }
    images = [img[v] for v in _TEMPLATE_VARS]
    if check_hypotheses:
        _check_form_heights(kind, R, f, g, h)
    mats = []
    row_tw = [0]
    for rows in info.template["d"]:
        ent = [[_evaluate(T(c), images) for c in row] for row in rows]
        m = RingMatrix(R, ent, row_tw)
        mats.append(m)
        row_tw = m.col_twists
    C = FreeComplex(R, mats)
    L = Ideal(R, mats[0].entries[0])
    return BaseFamily(kind, p, forms_mode, R, L, C, (f, g, h), n, d, info)


def _check_form_heights(kind, R, f, g, h):
    x, y = R.var("x"), R.var("y")
    if kind == "L25":
        gens, need = [x, y, f, g, h], 4
    elif kind == "L36":
        gens, need = [x, y, R.var("z"), f, g, h], 5
    else:
        gens, need = [x, y, f, g], 4
    ht = dimension(Ideal(R, gens))[1]
    if ht < need:
        raise ValueError(f"{kind}: the chosen forms violate the height hypothesis ({ht} < {need})")


# -- linkage ------------------------------------------------------------------------

@dataclass
class LinkRecord:
    source: Ideal
    ci: tuple
    target: Ideal


def link(L: Ideal, ci_gens, check=True) -> Ideal:
    """``(x) : L`` for a complete intersection ``(x) ⊆ L`` of length ``ht L``.

    The result carries ``link_record`` for the multiplicity and involution
    invariants.
    """
    R = L.ring
    xs = [R(g) if isinstance(g, str) else g for g in ci_gens]
    if check:
        for g in xs:
            if not L.contains(g):
                raise ValueError(f"{g} does not lie in the ideal being linked")
        h = dimension(L)[1]
        if len(xs) != h:
            raise ValueError(f"a link needs {h} elements, got {len(xs)}")
        if dimension(Ideal(R, xs))[1] != len(xs):
            raise ValueError("the given elements do not form a regular sequence")
    I = colon(Ideal(R, xs), L)
    if I.is_unit():
        raise ValueError("the linked ideal is the unit ideal")
    I = I.minimalized()
    I.link_record = LinkRecord(L, tuple(xs), I)
    return I


# -- the main construction --------------------------------------------------------------

@dataclass
class Construction:
    """``build_I`` output: the ideal plus every intermediate link."""

    h: int
    e: int
    p: int
    ideal: Ideal
    base: BaseFamily | None
    links: list
    lifted: int = 0


def _I2(e, p, field, order, links):
    if e == 3:
        B = build_L("L26", p - 1, field=field, order=order)
        I = link(B.ideal, ["x^3", "y^3"])
    elif e == 4:
        B = build_L("L25", p - 1, field=field, order=order)
        I = link(B.ideal, ["x^3", "y^3"])
    elif e == 5:
        B = build_L("L220", p - 1, field=field, order=order)
        I = link(B.ideal, ["x^5", "y^5"])
    elif e == 6:
        B = build_L("L26", p - 1, field=field, order=order)
        I = link(B.ideal, ["x^4", "y^3"])
    else:
        n, r = divmod(e - 7, 4)
        if r == 0:
            B = build_L("L25", p - 1, field=field, order=order)
            I = link(B.ideal, [f"x^4", f"y^{3 + n}"])
        else:
            B, I4, l4 = _I2(4, p, field, order, links)
            xa = {1: 4, 2: 5, 3: 6}[r]
            mid = link(I4, [f"x^{xa}", "y^3"])  # L_{2, 8/11/14, p-1}
            links.append(mid.link_record)
            I = link(mid, [f"x^{xa + n}", "y^4"])
        links.append(I.link_record)
        return B, I, links
    links.append(I.link_record)
    return B, I, links


def build_I(h, e, p, field=DEFAULT_FIELD, order="grevlex") -> Construction:
    """An ``(x_1..x_h)``-primary ideal with ``ht = h``, ``e(R/I) = e``, ``pd >= p``."""
    if h < 2 or e < 2:
        raise ValueError("h and e must be at least 2")
    if (h, e) == (2, 2):
        raise ValueError("(h, e) = (2, 2) is excluded: such ideals have pd <= 3")
    if p < 5:
        raise ValueError("the main construction needs p >= 5")
    links = []
    if e == 2:
        B = build_L("L36", p - 1, field=field, order=order)
        I = link(B.ideal, ["x^2", "y^2", "z^2"])
        links.append(I.link_record)
        k = h - 3
    else:
        B, I, links = _I2(e, p, field, order, links)
        k = h - 2
    if k:
        I = lift(I, k)
    return Construction(h, e, p, I, B, links, k)


def lift(I: Ideal, k, stem="z") -> Ideal:
    """``I + (z_1..z_k)`` in a ring with ``k`` new variables."""
    R = I.ring
    names = []
    i = 1
    while len(names) < k:
        v = f"{stem}{i}"
        if v not in R.index:
            names.append(v)
        i += 1
    S = R.with_variables(R.variables + tuple(names))
    return Ideal(S, [g.to_ring(S) for g in I.gens] + [S.var(v) for v in names])


def main_prime(C: Construction) -> Ideal:
    R = C.ideal.ring
    names = ["x", "y"] + (["z"] if C.e == 2 else [])
    names += [v for v in R.variables if v.startswith("z") and v[1:].isdigit()]
    return Ideal(R, [R.var(v) for v in names])


# -- fixtures -------------------------------------------------------------------------

def j_reg(n, field=DEFAULT_FIELD) -> Ideal:
    """``(x^2, xy, y^2, w^n x + z^n y)``: height 2, multiplicity 2, ``reg = n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    R = make_ring(field, ["w", "x", "y", "z"])
    return Ideal(R, ["x^2", "x*y", "y^2", f"w^{n}*x+z^{n}*y"])


def engheta_fixtures(field=DEFAULT_FIELD) -> dict:
    """The height-2 multiplicity-2 unmixed ideals of cases (2)–(5)."""
    R = make_ring(field, ["w", "x", "y", "z", "a", "b"])
    return {
        2: Ideal(R, ["x", "y*z"]),
        3: Ideal(R, ["w*y", "w*z", "x*y", "x*z"]),
        4: Ideal(R, ["x^2", "x*y", "y^2", "a*x+b*y"]),
        5: Ideal(R, ["x", "y^2"]),
    }


def splitting_fixture(q=13):
    """``(w^2+x^2, y^2+z^2, wz-xy, wy+xz)`` and its two linear components over GF(q)."""
    if q % 4 != 1:
        raise ValueError(f"GF({q}) has no square root of -1")
    i = next(c for c in range(2, q) if c * c % q == q - 1)
    R = make_ring(q, ["w", "x", "y", "z"])
    P = Ideal(R, ["w^2+x^2", "y^2+z^2", "w*z-x*y", "w*y+x*z"])
    A = Ideal(R, [f"w+{i}*x", f"y+{i}*z"])
    B = Ideal(R, [f"w-{i}*x", f"y-{i}*z"])
    return P, A, B, i


S2_LISTED = ["x^3", "x^2*y", "x*y^2", "y^3", "x^2*g-x*y*h", "x*y*f-y^2*g", "x^2*f-y^2*h"]


def s2_example(field=DEFAULT_FIELD):
    """L25 with variable forms, and the listed generators of its link.

    The listed ideal is the link of the mirrored quintic ``x^2 f + xyg + y^2 h``;
    for ``y^2 f + xyg + x^2 h`` it holds after exchanging ``f`` and ``h``.
    Returns ``(family, listed, listed_relabelled)``.
    """
    B = build_L("L25", 4, "generic-variables", field)
    R = B.ring
    listed = Ideal(R, S2_LISTED)
    swap = {"f": R.var("h"), "h": R.var("f")}
    relabelled = Ideal(R, [g.substitute(swap) for g in listed.gens])
    return B, listed, relabelled


WORKED_EXAMPLE_GENERATORS = [
    "x^3",
    "x^2*y",
    "x*y^2",
    "y^3",
    "a^2*c*x*y+a*b*d*x*y+b^2*e*x*y-b^3*y^2",
    "a*c*d*x^2+b*d^2*x^2-b*c*e*x^2-a*e^2*x*y-a^2*d*y^2+a*b*e*y^2",
    "b*c^2*x^2-a*d^2*x*y+a*c*e*x*y-b*d*e*x*y-a*b*c*y^2+b^2*d*y^2",
    "a*c^2*x^2+b*c*d*x^2-a*d*e*x*y-b*e^2*x*y-a^2*c*y^2+b^2*e*y^2",
    "b^2*c*x^2+a^2*d*x*y+a*b*e*x*y-a*b^2*y^2",
    "a*b*c*x^2+b^2*d*x^2+a^2*e*x*y-a^2*b*y^2",
    "a^2*c*x^2+a*b*d*x^2+b^2*e*x^2-a^3*y^2",
    "b^3*x^2-a^3*x*y",
]
WORKED_EXAMPLE_BETTI = {(0, 0): 1, (1, 3): 4, (2, 4): 3, (1, 5): 8, (2, 6): 26, (3, 7): 33, (4, 8): 21, (5, 9): 7, (6, 10): 1}
GENERATOR_COUNTS = {5: 9, 6: 12, 7: 17, 8: 25, 9: 38, 10: 59, 11: 93, 12: 148, 13: 237, 14: 381, 15: 614}


def worked_example_ideal(ring) -> Ideal:
    """The twelve listed generators, read in ``ring`` with ``c, d, e`` for ``c1, c2, c3``."""
    ren = {"c": "c1", "d": "c2", "e": "c3"}
    names = [ren.get(v, v) for v in ("a", "b", "c", "d", "e", "x", "y")]
    S = make_ring(ring.field, ("a", "b", "c", "d", "e", "x", "y"), ring.order)
    gens = [S(g) for g in WORKED_EXAMPLE_GENERATORS]
    T = ring.with_variables(tuple(names))
    moved = []
    for g in gens:
        # rename c, d, e -> c1, c2, c3 position-wise
        moved.append(Polynomial(T, {T.key(S.exps(k)): c for k, c in g.terms.items()}))
    return Ideal(ring, [m.to_ring(ring) for m in moved])


# -- verification -----------------------------------------------------------------------

@dataclass
class FamilySpec:
    kind: str
    h: int | None = None
    e: int | None = None
    p: int | None = None
    n: int | None = None
    d: int | None = None
    field: str = DEFAULT_FIELD
    order: str = "grevlex"
    forms_mode: str = "burch"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """``key=value`` lines (``#`` comments) or comma/space separated pairs."""
        kv = {}
        for raw in text.replace(",", "\n").splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            for tok in line.split():
                if "=" not in tok:
                    raise ValueError(f"expected key=value, got {tok!r}")
                k, v = tok.split("=", 1)
                kv[k.strip().lower()] = v.strip()
        return cls.from_dict(kv)

    @classmethod
    def from_dict(cls, kv: dict) -> "FamilySpec":
        if "kind" not in kv:
            raise ValueError("family spec needs kind=")
        kind = str(kv["kind"]).upper()
        kind = {"I": "I_MAIN", "MAIN": "I_MAIN", "J": "J_REG", "S2": "S2_EXAMPLE"}.get(kind, kind)
        allowed = set(KINDS) | {"BURCH", "I_MAIN", "J_REG", "S2_EXAMPLE"}
        if kind not in allowed:
            raise ValueError(f"unknown kind {kv['kind']!r}")
        ints = {}
        for k in ("h", "e", "p", "n", "d"):
            if kv.get(k) not in (None, ""):
                try:
                    ints[k] = int(kv[k])
                except ValueError:
                    raise ValueError(f"{k} must be an integer") from None
        unknown = set(kv) - {"kind", "h", "e", "p", "n", "d", "field", "order", "forms", "forms_mode"}
        if unknown:
            raise ValueError(f"unknown spec keys: {', '.join(sorted(unknown))}")
        spec = cls(
            kind,
            field=kv.get("field", DEFAULT_FIELD),
            order=kv.get("order", "grevlex"),
            forms_mode=kv.get("forms_mode", kv.get("forms", "burch")),
            **ints,
        )
        spec.validate()
        return spec

    def validate(self):
        k = self.kind
        if k in KINDS and self.p is None:
            raise ValueError(f"{k} needs p")
        if k in KINDS and self.p < 4:
            raise ValueError(f"{k} needs p >= 4")
        if k == "I_MAIN":
            if None in (self.h, self.e, self.p):
                raise ValueError("I needs h, e and p")
            if self.h < 2 or self.e < 2 or (self.h, self.e) == (2, 2):
                raise ValueError("I needs h, e >= 2 and (h, e) != (2, 2)")
            if self.p < 5:
                raise ValueError("I needs p >= 5")
        if self.forms_mode not in ("burch", "generic-variables"):
            raise ValueError(f"unknown forms mode {self.forms_mode!r}")
        if k in ("BURCH", "J_REG") and self.n is None:
            raise ValueError(f"{k} needs n")


def verify_base_family(kind, p, forms_mode="burch", field=DEFAULT_FIELD, order="grevlex", ext_routes=True, family=None):
    """All checks on a base family instance (see :class:`~bigpd.report.Report`).

    ``family`` replaces the freshly built instance, e.g. a tampered copy.
    """
    from .report import Report

    F = family if family is not None else build_L(kind, p, forms_mode, field, order)
    L, C = F.ideal, F.complex
    info = F.info
    rep = Report(f"{kind} p={p} forms={forms_mode} field={field}")
    cx = is_complex(C)
    rep.add("is_complex", cx, True, cx)
    if not cx:
        return rep, F
    be = []
    ok = be_acyclicity_check(C, be)
    rep.add("buchsbaum_eisenbud", ok, True, ok, be)
    sk = []
    ok = serre_sk_check(C, 1, codim=info.height, report=sk)
    rep.add("serre_S1", ok, True, ok, sk)
    hd = hilbert(L)
    rep.add("height", hd.height == info.height, info.height, hd.height)
    rep.add("multiplicity", hd.multiplicity == info.multiplicity, info.multiplicity, hd.multiplicity)
    B = betti_table(L)
    rep.add("betti_equals_complex", B == C.betti(), C.betti().structured(), B.structured())
    rep.add("ranks", tuple(B.ranks()) == info.ranks, list(info.ranks), B.ranks())
    ci = F.ci()
    rep.add("ci_in_L", all(L.contains(g) for g in ci), True, [str(g) for g in ci])
    prim = is_primary_to_linear(L, F.prime())
    rep.add("primary_to_linear_prime", prim, True, prim, [str(g) for g in F.prime().gens])
    if ext_routes:
        h = info.height
        E1 = homology_presentation(dualize(C), C.length - h)
        E2 = ext_via_linkage(L, ci)
        b1, b2 = betti_table(E1), betti_table(E2)
        rep.add("ext_routes_agree", b1 == b2, b1.structured(), b2.structured())
    if C.length > info.height:
        h = info.height
        pdB, pdZ = dual_cycle_data(C, h)
        rep.add("pd_image_dual_d_h", pdB == h - 1, h - 1, pdB)
        pdE = betti_table(ext_via_linkage(L, ci)).pd
        if pdZ >= h:
            rep.add("pd_ext_equals_pd_dual_cycles", pdE == pdZ, pdZ, pdE, {"pd_ker": pdZ})
        else:
            rep.add("pd_ext_equals_pd_dual_cycles", True, None, pdE, {"pd_ker": pdZ, "hypothesis": "pd(ker) < h"}, status="skipped")
    if forms_mode == "burch" and kind in ("L26", "L220"):
        J, s, P = socle_data(F)
        ok = verify_socle_witness(J, s, P)
        rep.add("socle_witness", ok, True, ok, {"s": str(s)})
    return rep, F


def socle_data(F: BaseFamily):
    """``(J, s, P)`` of the kernel-ideal socle argument for L26 / L220."""
    R = F.ring
    f, g, h = F.forms
    x, y, t = R.var("x"), R.var("y"), R.var("t")
    p = F.n
    a, b = R.var("a"), R.var("b")
    if F.kind == "L26":
        J = Ideal(R, [x, y, g ** 2, f * g, f ** 2, t ** (p - 1) * g * h])
        s = t ** (p - 1) * a ** (p - 1) * b ** (2 * p - 1)
    elif F.kind == "L220":
        J = Ideal(R, [x, y, g * h * t ** (3 * p - 3), g ** 4, f * g ** 3, f ** 2 * g ** 2, f ** 3 * g, f ** 4])
        s = t ** (3 * p - 3) * a ** (p - 1) * b ** (4 * p - 1)
    else:
        raise ValueError("socle data exists for L26 and L220 only")
    P = Ideal(R, [R.var(v) for v in burch_variables(p)])
    return J, s, P


def verify_family(spec: FamilySpec, progress=None):
    """Run every check appropriate to ``spec``; failures are report entries."""
    from .report import Report

    k = spec.kind
    if k in KINDS:
        rep, _ = verify_base_family(k, spec.p, spec.forms_mode, spec.field, spec.order)
        return rep
    if k == "BURCH":
        rep = Report(f"BURCH n={spec.n}")
        I = burch_ideal(spec.n, spec.field, spec.order)
        R = I.ring
        cert = depth_certificate(I)
        rep.add("pd", cert.exact and cert.pd == spec.n + 2, spec.n + 2, cert.pd, {"regular": cert.regular, "socle": str(cert.socle)})
        s = burch_socle(R, spec.n)
        ok = verify_socle_witness(I, s, burch_prime(R, spec.n))
        rep.add("socle_witness", ok, True, ok, {"s": str(s)})
        return rep
    if k == "J_REG":
        rep = Report(f"J_REG n={spec.n}")
        J = j_reg(spec.n, spec.field)
        B = betti_table(J)
        hd = hilbert(J)
        rep.add("regularity", B.regularity == spec.n, spec.n, B.regularity)
        rep.add("height", hd.height == 2, 2, hd.height)
        rep.add("multiplicity", hd.multiplicity == 2, 2, hd.multiplicity)
        from .invariants import is_unmixed

        u = is_unmixed(J)
        rep.add("unmixed", u, True, u)
        return rep
    if k == "S2_EXAMPLE":
        return verify_s2(spec.field)
    return verify_main(spec, progress)


def verify_s2(field=DEFAULT_FIELD):
    from .report import Report

    rep = Report("S2 boundary example")
    B, listed, relabelled = s2_example(field)
    L, C = B.ideal, B.complex
    R = B.ring
    E3 = homology_presentation(dualize(C), 0)
    hd = hilbert(E3)
    rep.add("coker_d3_dual_dim", hd.dim == 0, 0, hd.dim)
    coker = Ideal(R, [e for e in C.differential(3).transpose().entries[0] if e.terms])
    m = Ideal(R, list(R.gens()))
    rep.add("coker_d3_dual_is_residue_field", coker.equals(m), [str(g) for g in m.gens], [str(g) for g in coker.gens])
    I = link(L, ["x^3", "y^3"])
    rep.add(
        "linked_ideal_listed_up_to_f_h_exchange",
        I.equals(relabelled),
        [str(g) for g in relabelled.gens],
        [str(g) for g in I.gens],
        {"relabelling": "f <-> h"},
    )
    M = Ideal(R, ["x^3", "x^2*y", "x*y^2", "y^3", "x^2*f+x*y*g+y^2*h"])
    J = link(M, ["x^3", "y^3"])
    rep.add("listed_ideal_is_link_of_mirrored_quintic", J.equals(listed), True, J.equals(listed))
    pdL = betti_table(L).pd
    rep.add("pd_R_mod_L", pdL == 3, 3, pdL)
    Bb = build_L("L25", 4, "burch", field)
    E = homology_presentation(dualize(Bb.complex), 0)
    d = hilbert(E).dim
    rep.add("burch_ext_not_finite_length", d >= 1, ">= 1", d)
    return rep


def verify_main(spec: FamilySpec, progress=None):
    from .report import Report

    h, e, p = spec.h, spec.e, spec.p
    rep = Report(f"I h={h} e={e} p={p}")
    C = build_I(h, e, p, spec.field, spec.order)
    I = C.ideal
    hd = hilbert(I)
    rep.add("height", hd.height == h, h, hd.height)
    rep.add("multiplicity", hd.multiplicity == e, e, hd.multiplicity)
    P = main_prime(C)
    prim = is_primary_to_linear(I, P)
    rep.add("primary_to_linear_prime", prim, True, prim, [str(g) for g in P.gens])
    B = betti_table(I)
    rep.add("pd_at_least_p", B.pd >= p, f">= {p}", B.pd)
    rep.add("num_generators", True, None, len(I.gens), status="pass")
    for i, lr in enumerate(C.links):
        rep.extend(check_link(lr), prefix=f"link{i + 1}.")
    if len(C.links) == 3:
        # I_{2,4,p} and the final ideal are both linked to the middle ideal
        a, b = betti_table(C.links[0].target).pd, betti_table(C.links[2].target).pd
        rep.add("double_link_pd_equal", a == b, a, b)
    return rep


def ppd_inequalities(pa, pb, pc):
    """The three pd inequalities for a short exact sequence ``0 -> A -> B -> C -> 0``."""
    return [pa <= max(pb, pc - 1), pb <= max(pa, pc), pc <= max(pa + 1, pb)]


def _pd_of_submodule(gens: RingMatrix) -> int:
    """pd of the submodule spanned by the columns of ``gens`` (nonzero)."""
    from .resolution import PresentedModule

    return max(betti_table(PresentedModule(gens.ring, gens)).pd - 1, 0)


def dual_cycle_data(C: FreeComplex, h):
    """``(pd Im d_h^*, pd ker d_{h+1}^*)`` for a resolution ``C`` of length > h."""
    from .groebner import syzygies

    G = dualize(C)
    p = C.length
    B = G.differential(p - h + 1)  # d_h^*
    Z = syzygies(G.differential(p - h))  # ker d_{h+1}^*
    return _pd_of_submodule(B), _pd_of_submodule(Z)


def check_link(lr: LinkRecord):
    """e-additivity, involution and the pd relation on one link ``I = (x):L``."""
    from .report import Report

    rep = Report("link")
    L, I, xs = lr.source, lr.target, lr.ci
    prod = 1
    for g in xs:
        prod *= g.degree()
    eI, eL = hilbert(I).multiplicity, hilbert(L).multiplicity
    rep.add("e_additivity", eI + eL == prod, prod, eI + eL, {"e_I": eI, "e_L": eL})
    back = colon(Ideal(L.ring, xs), I)
    inv = back.equals(L)
    rep.add("involution", inv, True, inv)
    h = len(xs)
    pdI = betti_table(I).pd
    E = ext_via_linkage(L, xs)
    pdE = betti_table(E).pd
    # 0 -> ((x):L)/(x) -> R/(x) -> R/I -> 0
    ineq = ppd_inequalities(pdE, h, pdI)
    rep.add("ppd_inequalities", all(ineq), [True] * 3, ineq, {"pd_A": pdE, "pd_B": h, "pd_C": pdI})
    if pdE >= h + 1:
        rep.add("pd_link_relation", pdI == pdE + 1, pdE + 1, pdI, {"pd_ext": pdE})
    else:
        rep.add("pd_link_relation", True, None, pdI, {"pd_ext": pdE, "hypothesis": "pd(Ext) < h+1"}, status="skipped")
    return rep
