"""Finitely generated ideals and the ideal operations used by linkage."""

from __future__ import annotations

import threading

from .groebner import (
    GroebnerBasis,
    ModuleOrder,
    augmented_kernel,
    compute_basis,
)
from .matrix import FreeModuleElement
from .poly import Polynomial
from .ring import RingError, make_ring


class Ideal:
    """An ideal of a polynomial ring given by generators.

    The reduced Gröbner basis (for the ring's order) is computed on first use
    and cached; filling the cache is idempotent, so sharing an ideal between
    threads is safe.
    """

    def __init__(self, ring, generators=()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring(g)
            elif not isinstance(g, Polynomial):
                g = Polynomial.constant(ring, g)
            if g.ring != ring:
                raise RingError("generator from a different ring")
            if g.terms:
                gens.append(g)
        self.ring = ring
        self.gens = tuple(gens)
        self._gb = None
        self._mingens = None
        self._lock = threading.Lock()

    # -- cached Gröbner data ----------------------------------------------
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    mo = ModuleOrder.ideal(self.ring)
                    if self.gens:
                        els, ming = compute_basis(mo, [dict(g.terms) for g in self.gens], True)
                    else:
                        els, ming = [], []
                    self._gb = GroebnerBasis(mo, els, ming)
                    if ming is not None:
                        self._mingens = tuple(self.gens[i] for i in sorted(ming))
        return self._gb

    def groebner_polys(self):
        return self.gb().polynomials()

    def mingens(self):
        """A minimal set of homogeneous generators chosen among ``gens``."""
        self.gb()
        if self._mingens is None:
            raise ValueError("minimal generators need a homogeneous ideal")
        return self._mingens

    def num_mingens(self) -> int:
        return len(self.mingens())

    def minimalized(self) -> "Ideal":
        J = Ideal(self.ring, self.mingens())
        J._gb = self._gb
        J._mingens = J.gens
        return J

    def lead_packs(self):
        """Exponent packs of the leading monomials of the reduced GB."""
        return [E for _, E in self.gb().lead_packs()]

    # -- predicates ---------------------------------------------------------
    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gb().is_unit()

    def contains(self, p) -> bool:
        if isinstance(p, str):
            p = self.ring(p)
        if not p.terms:
            return True
        if not self.gens:
            return False
        return not self.gb().reduce_dict(dict(p.terms))

    def __contains__(self, p):
        return self.contains(p)

    def reduce(self, p) -> Polynomial:
        if not self.gens:
            return p
        return self.gb().normal_form(p)

    def is_subset(self, other: "Ideal") -> bool:
        _same(self, other)
        return all(other.contains(g) for g in self.gens)

    def equals(self, other: "Ideal") -> bool:
        _same(self, other)
        if not self.gens or not other.gens:
            return not self.gens and not other.gens
        return self.gb().elements == other.gb().elements

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.equals(other)

    def __hash__(self):
        return hash(self.ring)

    # -- constructions ------------------------------------------------------
    def __add__(self, other):
        return ideal_combine("sum", self, other)

    def __mul__(self, other):
        return ideal_combine("product", self, other)

    def power(self, n: int) -> "Ideal":
        J = Ideal(self.ring, [self.ring.one])
        for _ in range(n):
            J = J * self
        return J

    def to_ring(self, ring) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring) for g in self.gens])

    def with_order(self, order) -> "Ideal":
        return self.to_ring(self.ring.with_order(order))

    def __repr__(self):
        body = ", ".join(str(g) for g in self.gens[:6])
        more = ", ..." if len(self.gens) > 6 else ""
        return f"Ideal({body}{more})"


def ideal(ring, *gens) -> Ideal:
    if len(gens) == 1 and isinstance(gens[0], (list, tuple)):
        gens = gens[0]
    return Ideal(ring, gens)


def _same(I, J):
    if I.ring != J.ring:
        raise RingError("ideals live in different rings")


def ideal_combine(op, I: Ideal, J: Ideal) -> Ideal:
    """``sum`` concatenates generators, ``product`` multiplies them pairwise."""
    _same(I, J)
    if op == "sum":
        return Ideal(I.ring, I.gens + J.gens)
    if op == "product":
        return Ideal(I.ring, [a * b for a in I.gens for b in J.gens])
    raise ValueError(f"unknown ideal operation {op!r}")


def _from_tracked(kernel, tmo):
    return [tmo.to_poly(d) for d in kernel]


def _gens_for(I):
    """A cheap generating set: the reduced GB if cached, else the generators."""
    if I._gb is not None and len(I._gb.elements) <= 2 * len(I.gens) + 4:
        return I.gb().polynomials()
    return list(I.gens)


def colon(I: Ideal, J: Ideal, method="module") -> Ideal:
    """The ideal quotient ``I : J = {r : r J ⊆ I}``.

    ``method="module"`` computes the kernel of ``R -> (R/I)^s, r -> (r j_k)``
    in one Gröbner computation; ``"pairwise"`` intersects the single colons
    ``I : j``.
    """
    _same(I, J)
    R = I.ring
    jg = [g for g in J.gens if g.terms]
    if not jg:
        raise ValueError("colon by the zero ideal")
    if not I.gens:
        return Ideal(R, [])
    if method == "pairwise":
        out = None
        for g in jg:
            K = colon(I, Ideal(R, [g]), "module")
            out = K if out is None else intersect(out, K)
        return _with_gb(out)
    ig = _gens_for(I)
    s = len(jg)
    homog = I.is_homogeneous() and J.is_homogeneous()
    if homog:
        degs = [g.degree() for g in jg]
        D = max(degs)
        rtw = [D - d for d in degs]
        ctw = [D]
    else:
        rtw = [0] * s
        ctw = [0]
    cols = [FreeModuleElement(R, jg, rtw)]
    for k in range(s):
        for g in ig:
            comps = [R.zero] * s
            comps[k] = g
            cols.append(FreeModuleElement(R, comps, rtw))
            ctw.append(g.degree() + rtw[k] if homog else 0)
    kern, tmo = augmented_kernel(R, cols, rtw, ctw, track=[0])
    return _with_gb(Ideal(R, _from_tracked(kern, tmo)))


def _with_gb(I: Ideal) -> Ideal:
    I.gb()
    return I


def intersect(I: Ideal, J: Ideal, method="syzygy") -> Ideal:
    """``I ∩ J``; ``method`` is ``"syzygy"`` or ``"elimination"``."""
    _same(I, J)
    R = I.ring
    if not I.gens or not J.gens:
        return Ideal(R, [])
    if method == "elimination":
        return _intersect_elim(I, J)
    one = R.one
    cols = [FreeModuleElement(R, [one, one])]
    ctw = [0]
    for g in _gens_for(I):
        cols.append(FreeModuleElement(R, [g, R.zero]))
        ctw.append(g.degree())
    for g in _gens_for(J):
        cols.append(FreeModuleElement(R, [R.zero, g]))
        ctw.append(g.degree())
    homog = I.is_homogeneous() and J.is_homogeneous()
    if not homog:
        ctw = [0] * len(ctw)
    kern, tmo = augmented_kernel(R, cols, [0, 0], ctw, track=[0])
    return _with_gb(Ideal(R, _from_tracked(kern, tmo)))


def _fresh(ring, stem):
    name = stem
    i = 0
    while name in ring.index:
        i += 1
        name = f"{stem}{i}"
    return name


def _intersect_elim(I, J):
    R = I.ring
    t = _fresh(R, "t")
    E = make_ring(R.field, (t,) + R.variables, "elim:1")
    tv = E.var(t)
    gens = [tv * g.to_ring(E) for g in I.gens] + [(E.one - tv) * g.to_ring(E) for g in J.gens]
    K = Ideal(E, gens)
    out = []
    for p in K.gb().polynomials():
        if t not in p.variables_used():
            out.append(p.to_ring(R))
    return _with_gb(Ideal(R, out))


def saturate(I: Ideal, f, max_steps=1000) -> Ideal:
    """``I : f^∞`` by iterated colon until the chain stabilizes."""
    R = I.ring
    if isinstance(f, str):
        f = R(f)
    if not f.terms:
        raise ValueError("saturation by zero")
    F = Ideal(R, [f])
    cur = I
    for _ in range(max_steps):
        nxt = colon(cur, F)
        if nxt.equals(cur):
            return nxt
        cur = nxt
    raise RuntimeError("saturation did not stabilize")


def radical_member(f, I: Ideal) -> bool:
    """Whether ``f`` lies in the radical of ``I`` (Rabinowitsch trick)."""
    R = I.ring
    if isinstance(f, str):
        f = R(f)
    if not f.terms:
        return True
    w = _fresh(R, "w")
    S = make_ring(R.field, R.variables + (w,), R.order if R.order_kind != "elim" else "grevlex")
    gens = [g.to_ring(S) for g in I.gens] + [S.one - S.var(w) * f.to_ring(S)]
    return Ideal(S, gens).is_unit()


def linear_prime_check(P: Ideal):
    """Raise unless ``P`` is generated by linearly independent linear forms."""
    from .invariants import dimension

    for g in P.gens:
        if not g.is_homogeneous() or g.degree() != 1:
            raise ValueError("P must be generated by linear forms")
    if dimension(P)[1] != len(P.gens):
        raise ValueError("the linear forms generating P are dependent")


def pure_power_ci(I: Ideal, P: Ideal, max_exp=64):
    """Powers ``g^a`` of the generators of a linear prime ``P`` lying in ``I``.

    Only called once ``P ⊆ √I`` has been certified, so a power exists; the
    search just finds the least one.
    """
    out = []
    for g in P.gens:
        p = g
        for a in range(1, max_exp + 1):
            if I.contains(p):
                out.append(p)
                break
            p = p * g
        else:
            raise RuntimeError(f"no power of {g} up to {max_exp} lies in the ideal")
    return out


def is_unmixed_by_linkage(I: Ideal, ci) -> bool:
    """``I`` unmixed iff ``(x):((x):I) = I`` for a CI ``(x) ⊆ I`` of height ht(I)."""
    X = Ideal(I.ring, ci)
    return colon(X, colon(X, I)).equals(I)


SMALL_RESOLUTION_RANK = 12


def is_primary_to_linear(I: Ideal, P: Ideal, method="auto") -> bool:
    """Whether ``I`` is ``P``-primary for a prime ``P`` of linear forms.

    Certificate: ``I ⊆ P``; every generator of ``P`` in ``√I`` (Rabinowitsch);
    ``ht I = ht P``; and ``I`` unmixed.  Unmixedness is decided by the Serre
    (S1) minors criterion on a minimal resolution (``method="resolution"``) or
    by the double link through a complete intersection of pure powers
    (``method="linkage"``); ``"auto"`` uses the minors criterion when every
    free module in the minimal resolution has rank at most
    ``SMALL_RESOLUTION_RANK`` and links otherwise.
    """
    from .invariants import dimension

    _same(I, P)
    linear_prime_check(P)
    if I.is_unit():
        return False
    if not I.is_subset(P):
        return False
    if not all(radical_member(g, I) for g in P.gens):
        return False
    if dimension(I)[1] != len(P.gens):
        raise ValueError("height of I differs from height of P")
    if method == "auto":
        # the minors criterion is exponential in the ranks; link large ones
        from .resolution import betti_table

        method = "resolution" if max(betti_table(I).ranks()) <= SMALL_RESOLUTION_RANK else "linkage"
    if method == "linkage":
        return is_unmixed_by_linkage(I, pure_power_ci(I, P))
    from .invariants import is_unmixed

    return is_unmixed(I)
