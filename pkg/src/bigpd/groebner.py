"""Buchberger's algorithm for ideals and submodules of graded free modules.

Module monomials ``m * e_c`` are encoded as integers ``key = ringkey(m) * scale
+ O[c]`` with ``c = key % N``.  Keys compare like the module order and are
additive under multiplication by ring monomials, so multiplying a vector by a
monomial is a single integer addition per term.  Three kinds of encodings are
used:

* ``top``      degree (with twists), then the ring order, then position;
* ``blocks``   a priority per component compared first (elimination of
               components), then ``top`` inside a block;
* ``schreyer`` the order induced by the lead terms of a list of vectors.

Engine internals work on dicts ``key -> coeff``; the public wrappers convert
from and to :class:`Polynomial` / :class:`FreeModuleElement`.
"""

from __future__ import annotations

import logging
from heapq import heapify, heappop, heappush

from .matrix import FreeModuleElement, RingMatrix
from .poly import Polynomial
from .ring import Ring, RingError

log = logging.getLogger("bigpd")


class NotGroebnerError(ValueError):
    pass


class ModuleOrder:
    """Integer encoding of the monomials of a graded free module."""

    def __init__(self, ring: Ring, twists=(0,), priorities=None, _schreyer=None):
        self.ring = ring
        if _schreyer is not None:
            parent, leads = _schreyer
            N = max(len(leads), 1)
            self.N = N
            self.scale = parent.scale * N
            self.O = [k * N + j for j, k in enumerate(leads)]
            self.twists = tuple(parent.key_degree(k) for k in leads)
            self.rank = len(leads)
            self.kind = "schreyer"
            self.parent = parent
        else:
            twists = tuple(twists)
            self.rank = r = len(twists)
            self.twists = twists
            N = max(r, 1)
            self.N = N
            self.scale = N
            self.parent = None
            graded = ring.order_kind == "grevlex"
            S = ring.S
            base = [((t << S) * N if graded else 0) + c for c, t in enumerate(twists)]
            if priorities is None or len(set(priorities)) <= 1:
                self.kind = "top"
                self.O = base
            else:
                self.kind = "blocks"
                big = N << (S + 96)
                self.O = [p * big + b for p, b in zip(priorities, base)]
            self.priorities = tuple(priorities) if priorities is not None else (0,) * r
        self._cache = {}
        self.is_ideal = self.rank == 1 and self.O[0] == 0 and self.scale == 1

    @classmethod
    def ideal(cls, ring: Ring) -> "ModuleOrder":
        return cls(ring, (0,))

    @classmethod
    def schreyer(cls, parent: "ModuleOrder", lead_keys) -> "ModuleOrder":
        return cls(parent.ring, _schreyer=(parent, list(lead_keys)))

    # -- key arithmetic ------------------------------------------------------
    def split(self, key):
        """``(component, exponent pack)`` of a module monomial key."""
        v = self._cache.get(key)
        if v is None:
            c = key % self.N
            rk = (key - self.O[c]) // self.scale
            v = (c, self.ring.E_of_key(rk))
            if len(self._cache) < 1 << 22:
                self._cache[key] = v
        return v

    def ringkey(self, key):
        c = key % self.N
        return (key - self.O[c]) // self.scale

    def encode(self, c, E):
        return self.ring.key_of_E(E) * self.scale + self.O[c]

    def shift(self, E):
        """Key offset for multiplication by the monomial with pack ``E``."""
        return self.ring.key_of_E(E) * self.scale

    def key_degree(self, key):
        c, E = self.split(key)
        return (E >> self.ring.S) + self.twists[c]

    def unit_key(self, c):
        return self.O[c]

    # -- conversions ---------------------------------------------------------
    def from_poly(self, p: Polynomial, c=0) -> dict:
        if self.is_ideal:
            return dict(p.terms)
        s, o = self.scale, self.O[c]
        return {k * s + o: v for k, v in p.terms.items()}

    def from_element(self, el) -> dict:
        if isinstance(el, Polynomial):
            return self.from_poly(el)
        out = {}
        for c, p in enumerate(el.components):
            if p.terms:
                out.update(self.from_poly(p, c))
        return out

    def to_components(self, d: dict):
        R = self.ring
        comps = [dict() for _ in range(self.rank)]
        N, O, s = self.N, self.O, self.scale
        for k, v in d.items():
            c = k % N
            comps[c][(k - O[c]) // s] = v
        return [Polynomial(R, t) for t in comps]

    def to_element(self, d: dict) -> FreeModuleElement:
        return FreeModuleElement(self.ring, self.to_components(d), self.twists)

    def to_poly(self, d: dict) -> Polynomial:
        if self.is_ideal:
            return Polynomial(self.ring, dict(d))
        return self.to_components(d)[0]


# -- reduction kernel ---------------------------------------------------------

def _find(lst, E, G):
    for r in lst:
        if not (E - r[0]) & G:
            return r
    return None


def reduce_dict(p: dict, by_comp: dict, mo: ModuleOrder, full=True, quotients=None) -> dict:
    """Reduce ``p`` in place by monic reducers; return the remainder.

    ``by_comp`` maps a component to a list of ``(lead pack, lead key, tail,
    tag)`` with ``tail`` the non-leading ``(key, coeff)`` pairs.  When
    ``quotients`` is a list, ``(tag, shift, coeff)`` is appended for every
    reduction step.
    """
    q = mo.ring.field.char
    G = mo.ring.GUARD
    split = mo.split
    heap = [-k for k in p]
    heapify(heap)
    rem = {}
    single = by_comp.get(0, ()) if mo.rank == 1 else None
    while heap:
        k = -heappop(heap)
        c = p.pop(k, None)
        if c is None:
            continue
        comp, E = split(k)
        lst = single if single is not None else by_comp.get(comp, ())
        r = None
        for cand in lst:
            if not (E - cand[0]) & G:
                r = cand
                break
        if r is None:
            rem[k] = c
            if not full:
                rem.update(p)
                return rem
            continue
        s = k - r[1]
        if quotients is not None:
            quotients.append((r[3], s, c))
        get = p.get
        if q:
            m = q - c
            for kt, ct in r[2]:
                kk = kt + s
                v = get(kk)
                if v is None:
                    p[kk] = m * ct % q
                    heappush(heap, -kk)
                else:
                    v = (v + m * ct) % q
                    if v:
                        p[kk] = v
                    else:
                        del p[kk]
        else:
            m = -c
            for kt, ct in r[2]:
                kk = kt + s
                v = get(kk)
                if v is None:
                    p[kk] = m * ct
                    heappush(heap, -kk)
                else:
                    v = v + m * ct
                    if v:
                        p[kk] = v
                    else:
                        del p[kk]
    return rem


def _monic(d: dict, q):
    lk = max(d)
    c = d[lk]
    if c == 1:
        return d, lk
    if q:
        inv = pow(c, q - 2, q)
        return {k: v * inv % q for k, v in d.items()}, lk
    inv = 1 / c
    return {k: v * inv for k, v in d.items()}, lk


class _Elem:
    __slots__ = ("terms", "lk", "comp", "lE", "sugar", "tail", "entry")

    def __init__(self, terms, lk, mo, sugar):
        self.terms = terms
        self.lk = lk
        self.comp, self.lE = mo.split(lk)
        self.sugar = sugar
        self.tail = [(k, v) for k, v in terms.items() if k != lk]
        self.entry = None


def _max_degree(d: dict, mo: ModuleOrder):
    return max(mo.key_degree(k) for k in d)


class Buchberger:
    """One Gröbner basis computation (normal strategy + Gebauer–Möller)."""

    def __init__(self, mo: ModuleOrder, homogeneous: bool):
        self.mo = mo
        self.R = mo.ring
        self.q = mo.ring.field.char
        self.homog = homogeneous
        self.elems = []
        self.G = []  # indices with minimal leads
        self.pairs = []  # (deg, lcm key, i, j, lcmE)
        self.by_comp = {}
        self.coprime_ok = mo.is_ideal
        self.stats = {"pairs": 0, "zero": 0}

    def _add(self, d: dict, sugar):
        d, lk = _monic(d, self.q)
        el = _Elem(d, lk, self.mo, sugar)
        h = len(self.elems)
        self.elems.append(el)
        self._update(h)
        el.entry = (el.lE, el.lk, el.tail, h)
        self.by_comp.setdefault(el.comp, []).append(el.entry)
        return h

    def _update(self, h):
        R, mo = self.R, self.mo
        E = self.elems
        eh = E[h]
        Eh, ch = eh.lE, eh.comp
        G = R.GUARD
        S = R.S
        lcm = R.lcm_E
        twist = mo.twists[ch]
        degh = Eh >> S
        C = []
        for g in self.G:
            eg = E[g]
            if eg.comp != ch:
                continue
            l = lcm(eg.lE, Eh)
            cop = self.coprime_ok and (l >> S) == (eg.lE >> S) + degh
            C.append((l, g, cop))
        D = []
        for idx, (l, g, cop) in enumerate(C):
            if not cop:
                killed = False
                for l2, _, _ in C[idx + 1:]:
                    if not (l - l2) & G:
                        killed = True
                        break
                if not killed:
                    for l2, _, _ in D:
                        if not (l - l2) & G:
                            killed = True
                            break
                if killed:
                    continue
            D.append((l, g, cop))
        newB = []
        for pr in self.pairs:
            _, _, i, j, l = pr
            ei, ej = E[i], E[j]
            if ei.comp == ch and not (l - Eh) & G:
                if lcm(ei.lE, Eh) != l and lcm(ej.lE, Eh) != l:
                    continue
            newB.append(pr)
        for l, g, cop in D:
            if cop:
                continue
            deg = (l >> S) + twist
            if not self.homog:
                eg = E[g]
                deg = max(eg.sugar + (l >> S) - (eg.lE >> S), eh.sugar + (l >> S) - degh)
            newB.append((deg, mo.encode(ch, l), g, h, l))
        self.pairs = newB
        self.G = [g for g in self.G if not (E[g].comp == ch and not (E[g].lE - Eh) & G)] + [h]

    def _spoly(self, i, j, l):
        E = self.elems
        mo = self.mo
        ei, ej = E[i], E[j]
        si = mo.shift(l - ei.lE)
        sj = mo.shift(l - ej.lE)
        q = self.q
        out = {k + si: v for k, v in ei.tail}
        get = out.get
        for k, v in ej.tail:
            kk = k + sj
            w = get(kk)
            if w is None:
                out[kk] = (q - v) % q if q else -v
            else:
                w = (w - v) % q if q else w - v
                if w:
                    out[kk] = w
                else:
                    del out[kk]
        return out

    def reduce(self, d):
        return reduce_dict(dict(d), self.by_comp, self.mo)

    def run(self, gens, want_mingens=False, progress=None):
        """``gens``: list of dicts.  Returns indices of minimal generators."""
        mo = self.mo
        todo = []
        for idx, g in enumerate(gens):
            if g:
                todo.append((_max_degree(g, mo), idx, g))
        todo.sort(key=lambda t: (t[0], t[1]))
        mingens = []
        if not self.homog:
            # inhomogeneous: interleave by sugar, generators first
            for deg, idx, g in todo:
                r = self.reduce(g)
                if r:
                    self._add(r, deg)
                    mingens.append(idx)
            todo = []
        t = 0
        while self.pairs or t < len(todo):
            cand = []
            if self.pairs:
                cand.append(min(p[0] for p in self.pairs))
            if t < len(todo):
                cand.append(todo[t][0])
            d = min(cand)
            batch = sorted((p for p in self.pairs if p[0] == d), key=lambda p: (p[1], p[2], p[3]))
            self.pairs = [p for p in self.pairs if p[0] != d]
            for _, _, i, j, l in batch:
                self.stats["pairs"] += 1
                r = reduce_dict(self._spoly(i, j, l), self.by_comp, mo)
                if r:
                    self._add(r, d)
                else:
                    self.stats["zero"] += 1
            while t < len(todo) and todo[t][0] == d:
                _, idx, g = todo[t]
                t += 1
                r = self.reduce(g)
                if r:
                    self._add(r, d)
                    mingens.append(idx)
            if progress is not None:
                progress(d, len(self.G), len(self.pairs))
        return mingens

    def reduced_basis(self):
        """Inter-reduced monic basis, ascending by lead key."""
        E = self.elems
        G = sorted(self.G, key=lambda g: E[g].lk)
        by_comp = {}
        for g in G:
            by_comp.setdefault(E[g].comp, []).append(E[g].entry)
        out = []
        for g in G:
            e = E[g]
            tail = dict(e.tail)
            rem = reduce_dict(tail, by_comp, self.mo)
            rem[e.lk] = 1 if self.q else self.R.field.one
            out.append(rem)
        return out


def _is_homogeneous_dicts(gens, mo):
    for g in gens:
        if g and len({mo.key_degree(k) for k in g}) > 1:
            return False
    return True


def compute_basis(mo: ModuleOrder, gens, want_mingens=False, progress=None):
    """Reduced Gröbner basis (list of dicts) and indices of minimal generators."""
    homog = _is_homogeneous_dicts(gens, mo)
    bb = Buchberger(mo, homog)
    ming = bb.run(gens, want_mingens, progress)
    return bb.reduced_basis(), (ming if homog else None)


class GroebnerBasis:
    """A reduced Gröbner basis of a submodule of a free module (or an ideal)."""

    def __init__(self, mo: ModuleOrder, elements, mingens=None):
        self.order = mo
        self.ring = mo.ring
        self.elements = elements
        self.leads = [max(d) for d in elements]
        self.mingens = mingens
        self._by_comp = None

    @property
    def by_comp(self):
        if self._by_comp is None:
            mo = self.order
            bc = {}
            for i, (d, lk) in enumerate(zip(self.elements, self.leads)):
                c, E = mo.split(lk)
                bc.setdefault(c, []).append((E, lk, [(k, v) for k, v in d.items() if k != lk], i))
            self._by_comp = bc
        return self._by_comp

    def __len__(self):
        return len(self.elements)

    def reduce_dict(self, d: dict, quotients=None) -> dict:
        return reduce_dict(dict(d), self.by_comp, self.order, True, quotients)

    def normal_form(self, el):
        mo = self.order
        d = mo.from_element(el)
        r = self.reduce_dict(d)
        if isinstance(el, Polynomial):
            return mo.to_poly(r)
        return mo.to_element(r)

    def contains(self, el) -> bool:
        return not self.reduce_dict(self.order.from_element(el))

    def is_unit(self) -> bool:
        mo = self.order
        for lk in self.leads:
            c, E = mo.split(lk)
            if E == 0:
                return True
        return False

    def lead_packs(self):
        """``(component, exponent pack)`` of every lead term."""
        return [self.order.split(lk) for lk in self.leads]

    def lead_exponents(self):
        R = self.ring
        return [(c, R.unpack(E)) for c, E in self.lead_packs()]

    def polynomials(self):
        mo = self.order
        return [mo.to_poly(d) for d in self.elements]

    def module_elements(self):
        mo = self.order
        return [mo.to_element(d) for d in self.elements]

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order.O == other.order.O
            and self.elements == other.elements
        )


# -- public entry points -------------------------------------------------------

def _setup(generators, order=None, twists=None):
    gens = list(generators)
    if not gens:
        raise ValueError("no generators given")
    first = gens[0]
    R = first.ring
    for g in gens:
        if g.ring != R:
            raise RingError("generators belong to different rings")
    if order is not None and order != R.order:
        R2 = R.with_order(order)
        if isinstance(first, Polynomial):
            gens = [g.to_ring(R2) for g in gens]
        else:
            gens = [FreeModuleElement(R2, [c.to_ring(R2) for c in g.components], g.twists) for g in gens]
        R = R2
    if isinstance(first, Polynomial):
        mo = ModuleOrder.ideal(R)
    else:
        tw = first.twists
        for g in gens:
            if g.rank != first.rank or g.twists != tw:
                raise RingError("generators live in different free modules")
        mo = ModuleOrder(R, tw if twists is None else twists)
    return mo, gens


def groebner_basis(generators, order=None, progress=None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal or submodule spanned by ``generators``.

    ``generators`` are polynomials or :class:`FreeModuleElement` of one free
    module; ``order`` optionally overrides the ring order (e.g. ``"lex"``).
    """
    mo, gens = _setup(generators, order)
    dicts = [mo.from_element(g) for g in gens]
    els, ming = compute_basis(mo, dicts, True, progress)
    return GroebnerBasis(mo, els, ming)


def minimal_generators(generators):
    """A minimal generating subset of homogeneous generators (input order kept)."""
    mo, gens = _setup(generators)
    dicts = [mo.from_element(g) for g in gens]
    els, ming = compute_basis(mo, dicts, True)
    if ming is None:
        raise ValueError("minimal generators are only defined for homogeneous input")
    return [gens[i] for i in sorted(ming)]


def s_pairs_reduce_to_zero(basis, mo: ModuleOrder) -> bool:
    """Buchberger's criterion checked on every pair (no pair elimination)."""
    dicts = [d for d in basis if d]
    mons = [_monic(dict(d), mo.ring.field.char) for d in dicts]
    by_comp = {}
    info = []
    for i, (d, lk) in enumerate(mons):
        c, E = mo.split(lk)
        info.append((c, E, lk, d))
        by_comp.setdefault(c, []).append((E, lk, [(k, v) for k, v in d.items() if k != lk], i))
    R = mo.ring
    q = R.field.char
    for i in range(len(info)):
        for j in range(i + 1, len(info)):
            ci, Ei, lki, di = info[i]
            cj, Ej, lkj, dj = info[j]
            if ci != cj:
                continue
            l = R.lcm_E(Ei, Ej)
            si, sj = mo.shift(l - Ei), mo.shift(l - Ej)
            s = {}
            for k, v in di.items():
                s[k + si] = v
            for k, v in dj.items():
                kk = k + sj
                w = s.get(kk, 0) - v
                if q:
                    w %= q
                if w:
                    s[kk] = w
                else:
                    s.pop(kk, None)
            if reduce_dict(s, by_comp, mo):
                return False
    return True


def normal_form(element, basis):
    """Remainder of ``element`` modulo a Gröbner basis.

    ``basis`` is a :class:`GroebnerBasis` or a list of polynomials / module
    elements; a list is rejected with :class:`NotGroebnerError` unless it
    satisfies Buchberger's criterion.
    """
    if isinstance(basis, GroebnerBasis):
        return basis.normal_form(element)
    mo, gens = _setup(basis)
    dicts = [mo.from_element(g) for g in gens]
    if not s_pairs_reduce_to_zero(dicts, mo):
        raise NotGroebnerError("the given basis is not a Gröbner basis")
    els = []
    for d in dicts:
        if d:
            els.append(_monic(dict(d), mo.ring.field.char)[0])
    gb = GroebnerBasis(mo, els)
    return gb.normal_form(element)


# -- syzygies -----------------------------------------------------------------

def _columns(m):
    if isinstance(m, RingMatrix):
        return m.ring, m.columns(), list(m.row_twists), list(m.col_twists)
    cols = list(m)
    if not cols:
        raise ValueError("empty column list")
    first = cols[0]
    if isinstance(first, Polynomial):
        R = first.ring
        cols = [FreeModuleElement(R, [c]) for c in cols]
        first = cols[0]
    tw = [c.degree() for c in cols]
    return first.ring, cols, list(first.twists), [0 if t is None else t for t in tw]


def augmented_kernel(ring, columns, row_twists, col_twists, track=None, progress=None):
    """Kernel of the map ``e_j -> columns[j]``, restricted to tracked columns.

    Returns reduced-GB dicts of the tracking part together with the tracking
    :class:`ModuleOrder`.  With ``track`` a list of column indices, only those
    columns carry a tracking coordinate; the result then describes the
    projection of the kernel onto them (used for colon ideals).
    """
    m = len(row_twists)
    if track is None:
        track = list(range(len(columns)))
    tpos = {j: t for t, j in enumerate(track)}
    tw = list(row_twists) + [col_twists[j] for j in track]
    prio = [1] * m + [0] * len(track)
    mo = ModuleOrder(ring, tw, prio)
    gens = []
    one = ring.one
    for j, col in enumerate(columns):
        comps = list(col.components) + [ring.zero] * len(track)
        if j in tpos:
            comps[m + tpos[j]] = one
        gens.append(mo.from_element(FreeModuleElement(ring, comps, tw)))
    els, _ = compute_basis(mo, gens, False, progress)
    kernel = [d for d in els if mo.split(max(d))[0] >= m]
    tmo = ModuleOrder(ring, [col_twists[j] for j in track])
    out = []
    for d in kernel:
        comps = mo.to_components(d)[m:]
        out.append(tmo.from_element(FreeModuleElement(ring, comps, tmo.twists)))
    return out, tmo


def syzygies(m, minimal=True, progress=None) -> RingMatrix:
    """Generators of the kernel of a matrix (columns = images of the basis).

    Homogeneous input gives homogeneous output, with source twists equal to
    the column twists of ``m``; ``minimal`` prunes to minimal generators.
    """
    ring, cols, rtw, ctw = _columns(m)
    for c in cols:
        if not c.is_homogeneous():
            raise ValueError("syzygies need homogeneous input")
    if isinstance(m, RingMatrix) and not m.is_homogeneous():
        raise ValueError("syzygies need a homogeneous matrix")
    kern, tmo = augmented_kernel(ring, cols, rtw, ctw, progress=progress)
    if minimal and kern:
        els, ming = compute_basis(tmo, kern, True)
        kern = [kern[i] for i in sorted(ming)]
    out_cols = [tmo.to_element(d) for d in kern]
    twists = [tmo.key_degree(max(d)) for d in kern]
    return RingMatrix.from_columns(ring, out_cols, row_twists=ctw, col_twists=twists)
