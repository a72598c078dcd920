"""Hilbert series, dimension, multiplicity, regularity, unmixedness and depth."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .ideals import Ideal, colon
from .poly import Polynomial
from .ring import make_ring

log = logging.getLogger("bigpd")


# -- univariate integer polynomials as coefficient lists --------------------------

def _padd(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _pshift(a, d):
    return [0] * d + list(a) if a else []


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _div_one_minus_t(a):
    """Quotient of ``a`` by ``1 - t`` when exact, else ``None``."""
    if not a:
        return []
    if sum(a) != 0:
        return None
    # a = (1 - t) b  =>  b_k = sum_{i<=k} a_i
    out = []
    s = 0
    for x in a[:-1]:
        s += x
        out.append(s)
    while out and out[-1] == 0:
        out.pop()
    return out


# -- K-polynomial of a monomial ideal ----------------------------------------------

def _minimalize(mons):
    mons = sorted(set(mons), key=sum)
    out = []
    for m in mons:
        if not any(all(a <= b for a, b in zip(o, m)) for o in out):
            out.append(m)
    return out


def kpoly(monomials, nvars):
    """Numerator ``K(t)`` of ``HS(R/M) = K(t)/(1-t)^n`` for a monomial ideal ``M``.

    ``monomials`` are exponent tuples.  Uses the pivot recursion
    ``K(M) = K(M + (p)) + t^deg(p) K(M : p)`` with ``p`` a variable power
    shared by several generators.
    """
    return list(_kpoly(tuple(sorted(_minimalize([tuple(m) for m in monomials])))))


@lru_cache(maxsize=200000)
def _kpoly(gens):
    if not gens:
        return (1,)
    if any(sum(m) == 0 for m in gens):
        return ()
    n = len(gens[0])
    # base case: pairwise coprime generators
    used = [0] * n
    coprime = True
    for m in gens:
        for i, e in enumerate(m):
            if e:
                if used[i]:
                    coprime = False
                used[i] += 1
    if coprime:
        out = [1]
        for m in gens:
            d = sum(m)
            out = _padd(out, _pshift([-c for c in out], d))
        return tuple(out)
    # pivot x_i^e: i the most shared variable, e the median exponent of x_i
    # among non-pure generators (so the pivot is not already in the ideal)
    i = max((k for k in range(n) if used[k] > 1), key=lambda k: used[k])
    exps = sorted(m[i] for m in gens if m[i] and sum(1 for a in m if a) > 1)
    e = exps[len(exps) // 2]
    p = tuple(e if k == i else 0 for k in range(n))
    plus = _minimalize(list(gens) + [p])
    quo = _minimalize([tuple(max(a - b, 0) for a, b in zip(m, p)) for m in gens])
    k1 = _kpoly(tuple(sorted(plus)))
    k2 = _kpoly(tuple(sorted(quo)))
    return tuple(_padd(list(k1), _pshift(list(k2), e)))


@dataclass
class HilbertData:
    """Hilbert series data of a graded quotient ``R/I`` (or module)."""

    numerator: list  # h-polynomial coefficients, lowest degree first
    kpoly: list  # K-polynomial (numerator over (1-t)^nvars)
    nvars: int
    dim: int
    height: int
    multiplicity: int
    length: int | None = None
    shift: int = 0  # lowest twist (modules)

    def hilbert_function(self, d) -> int:
        """``dim_K`` of the degree-``d`` part."""
        n = self.nvars
        total = 0
        from math import comb

        for i, c in enumerate(self.kpoly):
            k = d - i - self.shift
            if c and k >= 0:
                total += c * comb(k + n - 1, n - 1)
        return total

    def series_numerator_str(self) -> str:
        return " + ".join(f"{c}*t^{i}" for i, c in enumerate(self.numerator) if c) or "0"


def _hilbert_from_kpoly(K, n, shift=0):
    if not K:
        raise ValueError("the module is zero")
    h = K
    k = 0
    while True:
        nxt = _div_one_minus_t(h)
        if nxt is None:
            break
        h = nxt
        k += 1
    dim = n - k
    e = sum(h)
    length = e if dim == 0 else None
    return HilbertData(h, K, n, dim, n - dim, e, length, shift)


def hilbert(I) -> HilbertData:
    """Hilbert series data of ``R/I``, read off the lead-term ideal."""
    if hasattr(I, "submodule_gb"):
        return module_hilbert(I)
    R = I.ring
    if not I.gens:
        return _hilbert_from_kpoly([1], R.nvars)
    if I.is_unit():
        raise ValueError("hilbert series of the unit ideal")
    mons = [R.unpack(E) for E in I.lead_packs()]
    return _hilbert_from_kpoly(kpoly(mons, R.nvars), R.nvars)


def module_hilbert(M) -> HilbertData:
    """Hilbert data of a presented module ``F / image(presentation)``."""
    R = M.ring
    gb = M.submodule_gb()
    by_c = {}
    for c, E in gb.lead_packs():
        by_c.setdefault(c, []).append(R.unpack(E))
    tw = M.generator_twists
    if not tw:
        raise ValueError("the module is zero")
    lo = min(tw)
    K = []
    for c, t in enumerate(tw):
        k = kpoly(by_c.get(c, []), R.nvars)
        K = _padd(K, _pshift(k, t - lo))
    if not K:
        raise ValueError("the module is zero")
    return _hilbert_from_kpoly(K, R.nvars, lo)


def multiplicity(I) -> int:
    return hilbert(I).multiplicity


# -- dimension via independent sets -----------------------------------------------

def _supports(I):
    R = I.ring
    return [R.support_E(E) for E in I.lead_packs()]


def max_independent_set(supports, n):
    """Largest variable set containing no lead-monomial support (bitmasks)."""
    sups = sorted(set(supports), key=lambda s: bin(s).count("1"))
    minimal = []
    for s in sups:
        if not any(m & s == m for m in minimal):
            minimal.append(s)
    best = [0, 0]

    def rec(i, chosen, size):
        if size + (n - i) <= best[0]:
            return
        if i == n:
            best[0], best[1] = size, chosen
            return
        c2 = chosen | (1 << i)
        if not any(m & c2 == m for m in minimal if m >> i & 1):
            rec(i + 1, c2, size + 1)
        rec(i + 1, chosen, size)

    rec(0, 0, 0)
    return best[0], best[1]


def dimension(I: Ideal):
    """``(dim R/I, ht I)``."""
    R = I.ring
    if not I.gens:
        return R.nvars, 0
    if I.is_unit():
        raise ValueError("dimension of the unit ideal")
    d, _ = max_independent_set(_supports(I), R.nvars)
    return d, R.nvars - d


def height(I: Ideal) -> int:
    return dimension(I)[1]


# -- regularity, unmixedness, socle witnesses ---------------------------------------

def regularity(B) -> int:
    """Castelnuovo–Mumford regularity ``max(j - i)`` of a minimal Betti table."""
    if not getattr(B, "minimal", False):
        raise ValueError("regularity needs the Betti table of a minimal resolution")
    return B.regularity


def is_unmixed(I: Ideal) -> bool:
    """Whether ``R/I`` satisfies (S1), via the minors criterion on a minimal resolution."""
    from .resolution import minimal_free_resolution, serre_sk_check

    C, _ = minimal_free_resolution(I)
    return serre_sk_check(C, 1, codim=height(I))


def verify_socle_witness(I: Ideal, s, P) -> bool:
    """``s ∉ I`` and ``s·g ∈ I`` for all generators ``g`` of ``P``."""
    R = I.ring
    if isinstance(s, str):
        s = R(s)
    gens = P.gens if isinstance(P, Ideal) else [R(g) if isinstance(g, str) else g for g in P]
    if I.contains(s):
        return False
    return all(I.contains(s * g) for g in gens)


# -- depth and projective dimension via regular sequences ---------------------------

@dataclass
class DepthCertificate:
    """A regular sequence of variables followed by a socle witness.

    ``regular`` lists variables, each a nonzerodivisor modulo the previous
    ones; ``socle`` is an element of ``(I' : m) \\ I'`` in the final quotient,
    proving depth zero there.  Then ``depth R/I = len(regular)`` and by
    Auslander–Buchsbaum ``pd R/I = nvars - depth``.
    """

    nvars: int
    regular: list = field(default_factory=list)
    socle: object = None
    exact: bool = False

    @property
    def depth(self):
        return len(self.regular)

    @property
    def pd(self):
        return self.nvars - self.depth


def _regular_variable(I: Ideal, v: str):
    """Return the GB of ``I`` with ``v`` last in grevlex if ``v`` is regular, else None.

    With ``v`` last in grevlex, ``in(I : v) = in(I) : v``; so ``v`` is a
    nonzerodivisor on ``R/I`` iff no lead monomial involves ``v``.
    """
    R = I.ring
    others = [w for w in R.variables if w != v]
    S = make_ring(R.field, others + [v], "grevlex")
    J = I.to_ring(S)
    j = S.nvars - 1
    for E in J.lead_packs():
        if (E >> (12 * j)) & S.FM:
            return None
    return J


def _set_last_to_zero(J: Ideal):
    """``J`` (GB with the last variable regular) restricted to ``v = 0``."""
    S = J.ring
    T = make_ring(S.field, S.variables[:-1], "grevlex")
    gens = []
    for p in J.gb().polynomials():
        q = p.substitute({S.variables[-1]: 0})
        if q.terms:
            gens.append(q.to_ring(T))
    K = Ideal(T, gens)
    return K


def socle_element(I: Ideal):
    """An element of ``(I : m) \\ I`` or ``None`` when ``m ∉ Ass(R/I)``."""
    R = I.ring
    m = Ideal(R, R.gens())
    Q = colon(I, m)
    for g in Q.gb().polynomials():
        if not I.contains(g):
            return g
    return None


def depth_certificate(I: Ideal, order=None, progress=None) -> DepthCertificate:
    """Certify ``depth R/I`` by regular variables plus a final socle witness.

    Variables are tried in ``order`` (default: reverse ring order).  If the
    search gets stuck (no variable regular, yet no socle), ``exact`` is False
    and ``nvars - depth`` is only an upper bound for pd.
    """
    R = I.ring
    cert = DepthCertificate(R.nvars)
    cur = I
    cand = list(order) if order is not None else list(reversed(R.variables))
    while True:
        if cur.is_unit():
            raise ValueError("unit ideal")
        found = None
        for v in cand:
            if v not in cur.ring.index:
                continue
            J = _regular_variable(cur, v)
            if J is not None:
                found = (v, J)
                break
        if found is None:
            s = socle_element(cur)
            if s is not None:
                cert.socle = s
                cert.exact = True
            return cert
        v, J = found
        cert.regular.append(v)
        if progress:
            progress(v)
        if J.ring.nvars == 1:
            # the quotient is the field itself: depth zero, socle generated by 1
            cert.socle = 1
            cert.exact = True
            return cert
        cur = _set_last_to_zero(J)


def pd_quotient(I: Ideal, method="auto") -> int:
    """``pd(R/I)``, from a depth certificate or a minimal resolution."""
    if method in ("auto", "depth"):
        cert = depth_certificate(I)
        if cert.exact:
            return cert.pd
        if method == "depth":
            raise RuntimeError("depth certificate incomplete")
    from .resolution import minimal_free_resolution

    return minimal_free_resolution(I)[1].pd
