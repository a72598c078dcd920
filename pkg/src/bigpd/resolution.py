"""Free resolutions, Betti tables, minors, acyclicity and Serre conditions, Ext.

Resolutions are computed with Schreyer's algorithm: after one Gröbner basis
of the module to be resolved, every further syzygy module has an explicitly
known Gröbner basis in the induced (Schreyer) order, whose elements come from
dividing S-vectors.  This "frame" is usually not minimal; minimal Betti
numbers follow from the ranks of the constant parts of its differentials and
the minimal complex itself from cancelling unit entries.
"""

from __future__ import annotations

import logging
from itertools import combinations
from math import comb

from .groebner import (
    GroebnerBasis,
    ModuleOrder,
    augmented_kernel,
    compute_basis,
    reduce_dict,
    syzygies,
)
from .ideals import Ideal
from .matrix import FreeModuleElement, RingMatrix
from .poly import Polynomial, mul_terms

log = logging.getLogger("bigpd")


# -- Betti tables --------------------------------------------------------------

class BettiTable:
    """Graded Betti numbers ``beta[(i, j)]`` (only nonzero entries stored)."""

    def __init__(self, betti: dict, minimal=True):
        self.betti = {k: v for k, v in betti.items() if v}
        self.minimal = minimal

    def __getitem__(self, ij):
        return self.betti.get(ij, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.betti == other.betti

    def __repr__(self):
        return f"BettiTable({self.betti})"

    @property
    def pd(self) -> int:
        return max((i for i, _ in self.betti), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self.betti), default=0)

    def ranks(self):
        out = [0] * (self.pd + 1)
        for (i, _), b in self.betti.items():
            out[i] += b
        return out

    def column(self, i) -> dict:
        return {j: b for (ii, j), b in self.betti.items() if ii == i}

    def shifted(self, di=0, dj=0) -> "BettiTable":
        return BettiTable({(i + di, j + dj): b for (i, j), b in self.betti.items()}, self.minimal)

    def format_dashes(self) -> str:
        """Rows labelled by ``j - i``, columns by ``i``, ``-`` for zero."""
        if not self.betti:
            return "(zero)"
        lo = min(j - i for i, j in self.betti)
        hi = max(j - i for i, j in self.betti)
        imin = min(i for i, _ in self.betti)
        cols = list(range(min(imin, 0), self.pd + 1))
        cells = [[str(i) for i in cols]]
        labels = [""]
        for r in range(lo, hi + 1):
            labels.append(f"{r}:")
            cells.append([str(self.betti[(i, i + r)]) if (i, i + r) in self.betti else "-" for i in cols])
        widths = [max(len(row[c]) for row in cells) for c in range(len(cols))]
        lw = max(len(s) for s in labels)
        lines = []
        for lab, row in zip(labels, cells):
            lines.append(lab.rjust(lw) + " " + " ".join(v.rjust(w) for v, w in zip(row, widths)))
        return "\n".join(line.rstrip() for line in lines)

    def structured(self):
        return [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(self.betti.items())]


# -- complexes -----------------------------------------------------------------

class FreeComplex:
    """``F_0 <-d_1- F_1 <- ... <-d_p- F_p`` with graded free modules."""

    def __init__(self, ring, differentials, twists0=None):
        self.ring = ring
        self.d = list(differentials)
        if self.d:
            self.twists = [list(self.d[0].row_twists)] + [list(m.col_twists) for m in self.d]
        else:
            self.twists = [list(twists0 or [0])]
        for i in range(1, len(self.d)):
            if self.d[i].nrows != self.d[i - 1].ncols:
                raise ValueError(f"shape mismatch between d_{i} and d_{i + 1}")

    @property
    def length(self) -> int:
        return len(self.d)

    @property
    def ranks(self):
        return [len(t) for t in self.twists]

    def differential(self, i) -> RingMatrix:
        """``d_i`` for ``1 <= i <= length``."""
        return self.d[i - 1]

    def is_minimal(self) -> bool:
        for m in self.d:
            for row in m.entries:
                for e in row:
                    if e.terms and e.degree() == 0:
                        return False
        return True

    def betti(self) -> BettiTable:
        b = {}
        for i, tw in enumerate(self.twists):
            for t in tw:
                b[(i, t)] = b.get((i, t), 0) + 1
        return BettiTable(b, minimal=self.is_minimal())

    def __repr__(self):
        return f"FreeComplex(ranks={self.ranks})"


def is_complex(C: FreeComplex) -> bool:
    """Whether all consecutive products ``d_i d_{i+1}`` vanish."""
    for i in range(1, C.length):
        a, b = C.differential(i), C.differential(i + 1)
        if a.ncols != b.nrows:
            raise ValueError("shape mismatch")
        if not (a * b).is_zero():
            return False
    return True


def dualize(C: FreeComplex) -> FreeComplex:
    """``Hom(C, R)`` re-indexed as a chain complex ``G_i = F_{p-i}^*``."""
    p = C.length
    ds = [C.differential(p - i + 1).transpose() for i in range(1, p + 1)]
    return FreeComplex(C.ring, ds, [-t for t in C.twists[-1]])


# -- presented modules ----------------------------------------------------------

class PresentedModule:
    """``Coker(presentation)`` with generators in degrees ``generator_twists``."""

    def __init__(self, ring, presentation: RingMatrix | None, generator_twists=None):
        self.ring = ring
        if presentation is None:
            presentation = RingMatrix.zero(ring, [0] if generator_twists is None else generator_twists, [])
        self.presentation = presentation
        self.generator_twists = list(presentation.row_twists)
        self._gb = None

    @classmethod
    def quotient_ring(cls, I: Ideal) -> "PresentedModule":
        R = I.ring
        gens = list(I.gens)
        m = RingMatrix(R, [gens], [0], [g.degree() for g in gens]) if gens else None
        M = cls(R, m, [0])
        M.ideal = I
        return M

    @property
    def rank(self):
        return len(self.generator_twists)

    def order(self) -> ModuleOrder:
        return ModuleOrder(self.ring, self.generator_twists)

    def submodule_gb(self) -> GroebnerBasis:
        if self._gb is None:
            mo = self.order()
            ideal = getattr(self, "ideal", None)
            if ideal is not None and self.rank == 1 and self.generator_twists == [0]:
                gb = ideal.gb()
                self._gb = GroebnerBasis(mo, [mo.from_poly(p) for p in gb.polynomials()], gb.mingens)
            else:
                cols = [mo.from_element(c) for c in self.presentation.columns() if not c.is_zero()]
                els, ming = compute_basis(mo, cols, True) if cols else ([], [])
                self._gb = GroebnerBasis(mo, els, ming)
        return self._gb

    def is_zero(self) -> bool:
        gb = self.submodule_gb()
        comps = {c for c, E in gb.lead_packs() if E == 0}
        return len(comps) == self.rank

    def hilbert(self):
        from .invariants import module_hilbert

        return module_hilbert(self)

    def __repr__(self):
        return f"PresentedModule(rank={self.rank}, relations={self.presentation.ncols})"


def _as_module(M) -> PresentedModule:
    if isinstance(M, PresentedModule):
        return M
    if isinstance(M, Ideal):
        return PresentedModule.quotient_ring(M)
    raise TypeError("expected an Ideal (for R/I) or a PresentedModule")


# -- Schreyer frames --------------------------------------------------------------

def _lex_desc_key(R, E):
    return tuple(-e for e in R.unpack(E))


class _Level:
    """One level of a Schreyer frame.

    ``vecs[j]`` is the image of basis vector ``j`` as a dict in the encoding
    ``src`` of the previous free module; ``order`` encodes this free module.
    """

    def __init__(self, src: ModuleOrder, vecs):
        self.src = src
        R = src.ring
        info = []
        for v in vecs:
            lk = max(v)
            c, E = src.split(lk)
            info.append((c, _lex_desc_key(R, E), lk, E, v))
        info.sort(key=lambda t: (t[0], t[1]))
        self.comps = [t[0] for t in info]
        self.leadE = [t[3] for t in info]
        self.leadk = [t[2] for t in info]
        self.vecs = [t[4] for t in info]
        self.order = ModuleOrder.schreyer(src, self.leadk)

    def __len__(self):
        return len(self.vecs)

    def reducers(self):
        bc = {}
        for j, (c, E, lk, v) in enumerate(zip(self.comps, self.leadE, self.leadk, self.vecs)):
            bc.setdefault(c, []).append((E, lk, [(k, x) for k, x in v.items() if k != lk], j))
        return bc


def _minimal_monomials(R, packs):
    packs = sorted(set(packs), key=lambda E: (E >> R.S, E))
    out = []
    G = R.GUARD
    for E in packs:
        if not any(not (E - o) & G for o in out):
            out.append(E)
    return out


def _next_level(lev: _Level, progress=None):
    R = lev.src.ring
    q = R.field.char
    mo = lev.order
    src = lev.src
    reducers = lev.reducers()
    by_comp = {}
    for j, c in enumerate(lev.comps):
        by_comp.setdefault(c, []).append(j)
    out = []
    G = R.GUARD
    for c, idxs in by_comp.items():
        for pos, j in enumerate(idxs):
            Ej = lev.leadE[j]
            cand = {}
            for i in idxs[:pos]:
                Ei = lev.leadE[i]
                n = Ei - R.gcd_E(Ei, Ej)
                if n not in cand:
                    cand[n] = i
            for n in _minimal_monomials(R, cand):
                i = cand[n]
                Ei = lev.leadE[i]
                l = R.lcm_E(Ei, Ej)
                # S = n g_j - (l / E_i) g_i
                sj = src.shift(l - Ej)
                si = src.shift(l - Ei)
                s = {k + sj: v for k, v in lev.vecs[j].items()}
                for k, v in lev.vecs[i].items():
                    kk = k + si
                    w = s.get(kk)
                    if w is None:
                        s[kk] = (q - v) % q if q else -v
                    else:
                        w = (w - v) % q if q else w - v
                        if w:
                            s[kk] = w
                        else:
                            del s[kk]
                quo = []
                rest = reduce_dict(s, reducers, src, True, quo)
                if rest:
                    raise RuntimeError("Schreyer frame: S-vector did not reduce to zero")
                vec = {}
                one = 1 if q else R.field.one
                vec[mo.encode(j, l - Ej)] = one
                kk = mo.encode(i, l - Ei)
                vec[kk] = (q - 1) if q else -one
                N = mo.N
                for tag, shift, coef in quo:
                    kk = shift * N + mo.O[tag]
                    w = vec.get(kk)
                    if q:
                        w = (q - coef) if w is None else (w - coef) % q
                    else:
                        w = -coef if w is None else w - coef
                    if w:
                        vec[kk] = w
                    else:
                        vec.pop(kk, None)
                out.append(vec)
    return out


def schreyer_frame(M, max_length=None, progress=None):
    """The Schreyer frame of ``M`` (an Ideal for ``R/I``, or a PresentedModule).

    Returns ``(F0 order, [levels])``; level ``k`` (1-based) holds the
    images of the basis of ``F_k``.
    """
    M = _as_module(M)
    gb = M.submodule_gb()
    mo0 = gb.order
    levels = []
    vecs = [dict(d) for d in gb.elements]
    cap = max_length if max_length is not None else M.ring.nvars + 1
    while vecs and len(levels) < cap:
        lev = _Level(levels[-1].order if levels else mo0, vecs)
        levels.append(lev)
        if progress:
            progress(len(levels), len(lev))
        vecs = _next_level(lev, progress)
    if vecs:
        raise RuntimeError("resolution longer than the length cap")
    return mo0, levels


def _rank(rows, q, one):
    """Rank of a list of sparse rows (dict col -> value) over the field."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    pivots = {}
    for r in rows:
        while r:
            c = min(r)
            if c in pivots:
                pr = pivots[c]
                f = r[c]
                for k, v in pr.items():
                    w = r.get(k, 0) - f * v
                    if q:
                        w %= q
                    if w:
                        r[k] = w
                    else:
                        r.pop(k, None)
            else:
                inv = pow(r[c], q - 2, q) if q else one / r[c]
                pivots[c] = {k: (v * inv % q if q else v * inv) for k, v in r.items()}
                rank += 1
                break
    return rank


def _constant_parts(mo0, levels):
    """Per level ``k``: dict ``degree -> list of (col j, {row c: const})``."""
    out = []
    for k, lev in enumerate(levels):
        src = lev.src
        unit = {src.O[c]: c for c in range(src.rank)}
        tw = lev.order.twists
        byd = {}
        for j, v in enumerate(lev.vecs):
            row = {}
            for key, c in ((kk, unit.get(kk)) for kk in v):
                if c is not None:
                    row[c] = v[key]
            byd.setdefault(tw[j], []).append(row)
        out.append(byd)
    return out


def frame_betti(mo0, levels) -> BettiTable:
    """Minimal graded Betti numbers from a Schreyer frame."""
    R = mo0.ring
    q = R.field.char
    one = R.field.one
    counts = [{}]
    for t in mo0.twists:
        counts[0][t] = counts[0].get(t, 0) + 1
    for lev in levels:
        d = {}
        for t in lev.order.twists:
            d[t] = d.get(t, 0) + 1
        counts.append(d)
    consts = _constant_parts(mo0, levels)
    ranks = []  # ranks[k-1][deg] = rank of constant part of d_k in that degree
    for byd in consts:
        ranks.append({deg: _rank(rows, q, one) for deg, rows in byd.items()})
    b = {}
    for i, cnt in enumerate(counts):
        for deg, f in cnt.items():
            r_in = ranks[i - 1].get(deg, 0) if i >= 1 else 0
            r_out = ranks[i].get(deg, 0) if i < len(ranks) else 0
            v = f - r_in - r_out
            if v:
                b[(i, deg)] = v
    return BettiTable(b, minimal=True)


def betti_table(M, progress=None) -> BettiTable:
    """Minimal Betti table of ``R/I`` (Ideal) or of a presented module."""
    mo0, levels = schreyer_frame(M, progress=progress)
    return frame_betti(mo0, levels)


# -- pruning to a minimal complex ----------------------------------------------------

def _frame_columns(mo0, levels):
    """Convert each level into columns ``{row: {ringkey: coeff}}``."""
    ring_levels = []
    for lev in levels:
        src = lev.src
        N, O, s = src.N, src.O, src.scale
        cols = []
        for v in lev.vecs:
            col = {}
            for k, c in v.items():
                r = k % N
                rk = (k - O[r]) // s
                col.setdefault(r, {})[rk] = c
            cols.append(col)
        ring_levels.append(cols)
    return ring_levels


def _prune(R, twists, mats):
    """Cancel unit entries.  ``twists[k]`` are degrees of ``F_k``'s basis,
    ``mats[k-1]`` the columns of ``d_k``; both are edited in place and the
    surviving index lists are returned."""
    q = R.field.char
    one = R.field.one
    zero_key = 0
    alive = [set(range(len(t))) for t in twists]
    for k in range(1, len(twists)):
        cols = mats[k - 1]
        # rows -> columns containing them
        rowmap = {}
        for j in alive[k]:
            for r in cols[j]:
                rowmap.setdefault(r, set()).add(j)
        while True:
            piv = None
            best = None
            for j in sorted(alive[k]):
                col = cols[j]
                if twists[k][j] not in {twists[k - 1][r] for r in col}:
                    continue
                for r, p in col.items():
                    if r in alive[k - 1] and len(p) == 1 and zero_key in p and twists[k - 1][r] == twists[k][j]:
                        cost = len(col) * len(rowmap.get(r, ()))
                        if best is None or cost < best:
                            best = cost
                            piv = (r, j)
                        break
                if best is not None and best <= 1:
                    break
            if piv is None:
                break
            i, j = piv
            colj = cols[j]
            u = colj[i][zero_key]
            uinv = pow(u, q - 2, q) if q else one / u
            for l in sorted(rowmap.get(i, set()) - {j}):
                coll = cols[l]
                a = coll.get(i)
                if not a:
                    continue
                f = {kk: (v * uinv % q if q else v * uinv) for kk, v in a.items()}
                for r, p in colj.items():
                    prod = mul_terms(f, p, q)
                    tgt = coll.get(r)
                    if tgt is None:
                        tgt = {}
                    for kk, v in prod.items():
                        w = tgt.get(kk, 0) - v
                        if q:
                            w %= q
                        if w:
                            tgt[kk] = w
                        else:
                            tgt.pop(kk, None)
                    if tgt:
                        if r not in coll:
                            rowmap.setdefault(r, set()).add(l)
                        coll[r] = tgt
                    elif r in coll:
                        del coll[r]
                        rowmap.get(r, set()).discard(l)
            # delete column j of d_k and row i of F_{k-1}
            for r in colj:
                rowmap.get(r, set()).discard(j)
            alive[k].discard(j)
            alive[k - 1].discard(i)
            rowmap.pop(i, None)
            for l in list(alive[k]):
                cols[l].pop(i, None)
            # d_{k-1}: drop column i (handled through ``alive``)
            # d_{k+1}: drop row j
            if k < len(mats):
                for col in mats[k]:
                    col.pop(j, None)
    return alive


def minimal_free_resolution(M, length_cap=None, progress=None):
    """Minimal graded free resolution and Betti table of ``R/I`` or a module."""
    Mm = _as_module(M)
    R = Mm.ring
    mo0, levels = schreyer_frame(Mm, max_length=length_cap, progress=progress)
    twists = [list(mo0.twists)] + [list(lev.order.twists) for lev in levels]
    mats = _frame_columns(mo0, levels)
    alive = _prune(R, twists, mats)
    keep = [sorted(a) for a in alive]
    while len(keep) > 1 and not keep[-1]:
        keep.pop()
    ds = []
    for k in range(1, len(keep)):
        rows, cols = keep[k - 1], keep[k]
        ridx = {r: n for n, r in enumerate(rows)}
        ent = [[R.zero] * len(cols) for _ in rows]
        for n, j in enumerate(cols):
            for r, p in mats[k - 1][j].items():
                if r in ridx and p:
                    ent[ridx[r]][n] = Polynomial(R, dict(p))
        ds.append(RingMatrix(R, ent, [twists[k - 1][r] for r in rows], [twists[k][j] for j in cols]))
    C = FreeComplex(R, ds, [twists[0][r] for r in keep[0]])
    B = C.betti()
    B.minimal = C.is_minimal()
    if not B.minimal:
        raise RuntimeError("pruning left a unit entry")
    return C, B


def projective_dimension(M) -> int:
    """``pd`` of ``R/I`` (Ideal) or of a presented module, via its Betti table."""
    return betti_table(M).pd


pd = projective_dimension


def minimal_presentation(M: PresentedModule) -> PresentedModule:
    C, _ = minimal_free_resolution(M)
    if C.length == 0:
        return PresentedModule(M.ring, None, C.twists[0])
    return PresentedModule(M.ring, C.differential(1))


# -- ranks, minors, heights ------------------------------------------------------------

def be_rank_sequence(C: FreeComplex):
    """Expected ranks ``r_j = sum_{i >= j} (-1)^(i-j) rank F_i`` for ``j = 1..p``."""
    ranks = C.ranks
    p = C.length
    return [sum((-1) ** (i - j) * ranks[i] for i in range(j, p + 1)) for j in range(1, p + 1)]


def _det_cofactor(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    R = M[0][0].ring
    acc = R.zero
    for j in range(n):
        a = M[0][j]
        if not a:
            continue
        sub = [row[:j] + row[j + 1:] for row in M[1:]]
        t = a * _det_cofactor(sub)
        acc = acc + t if j % 2 == 0 else acc - t
    return acc


def _det_bareiss(M):
    """Fraction-free Gaussian elimination; entries stay polynomials."""
    A = [list(r) for r in M]
    n = len(A)
    R = A[0][0].ring
    sign = 1
    prev = R.one
    for k in range(n - 1):
        if not A[k][k]:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return R.zero
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = akk * A[i][j] - A[i][k] * A[k][j]
                A[i][j] = v.divide_exact(prev) if v and k else v
            A[i][k] = R.zero
        prev = akk
    d = A[n - 1][n - 1]
    return -d if sign < 0 else d


def determinant(M):
    """Determinant of a square list-of-lists of polynomials."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    return _det_bareiss(M) if n >= 4 else _det_cofactor(M)


class MinorsBudgetError(RuntimeError):
    """Raised when a minors ideal has more generators than the budget allows."""


MAX_MINORS = 250000


def minor_count(m: RingMatrix, j) -> int:
    E = m.entries
    nr = sum(1 for r in range(m.nrows) if any(E[r]))
    nc = sum(1 for c in range(m.ncols) if any(E[r][c] for r in range(m.nrows)))
    return comb(nr, j) * comb(nc, j)


def iter_minors(m: RingMatrix, j, budget=MAX_MINORS):
    """All nonzero ``j x j`` minors, rows/columns in lexicographic order."""
    if not 1 <= j <= min(m.nrows, m.ncols):
        raise ValueError(f"minor size {j} out of range for a {m.nrows}x{m.ncols} matrix")
    if budget is not None and minor_count(m, j) > budget:
        raise MinorsBudgetError(f"{minor_count(m, j)} minors of size {j} exceed the budget of {budget}")
    E = m.entries
    nz_cols = [c for c in range(m.ncols) if any(E[r][c] for r in range(m.nrows))]
    nz_rows = [r for r in range(m.nrows) if any(E[r][c] for c in range(m.ncols))]
    for rows in combinations(nz_rows, j):
        for cols in combinations(nz_cols, j):
            sub = [[E[r][c] for c in cols] for r in rows]
            if any(not any(row) for row in sub):
                continue
            if any(not any(sub[r][c] for r in range(j)) for c in range(j)):
                continue
            d = determinant(sub)
            if d:
                yield d


def minors_ideal(m: RingMatrix, j) -> Ideal:
    """The ideal of ``j x j`` minors, ``1 <= j <= min(rows, cols)``."""
    return Ideal(m.ring, list(iter_minors(m, j)))


def height_at_least(m: RingMatrix, j, target, certificate=None) -> bool:
    """Decide ``ht I_j(m) >= target``.

    Minors are generated lazily; lead terms under grevlex and lex give a
    certified lower bound long before all minors are known.  If that bound
    falls short the full minors ideal's Gröbner basis decides.
    """
    R = m.ring
    if target <= 0:
        return True
    if j <= 0:
        return True
    if j > min(m.nrows, m.ncols):
        if certificate is not None:
            certificate.update(minors=0, height=0)
        return False
    polys = []
    rev = R.with_variables(tuple(reversed(R.variables)), "lex")
    tried = 0
    for d in iter_minors(m, j):
        polys.append(d)
        tried += 1
        if tried in (1, 2, 4, 8) or tried % 16 == 0:
            if _lead_height_multi(R, rev, polys) >= target:
                if certificate is not None:
                    certificate.update(minors=tried, method="lead-terms", height_lower_bound=target)
                return True
    if not polys:
        if certificate is not None:
            certificate.update(minors=0, height=0)
        return False
    if _lead_height_multi(R, rev, polys) >= target:
        if certificate is not None:
            certificate.update(minors=tried, method="lead-terms", height_lower_bound=target)
        return True
    from .invariants import dimension

    I = Ideal(R, polys)
    if I.is_unit():
        h = R.nvars
    else:
        h = dimension(I)[1]
    if certificate is not None:
        certificate.update(minors=tried, method="groebner", height=h)
    return h >= target


def _lead_height_multi(R, rev, polys):
    from .invariants import max_independent_set

    best = 0
    for S in (R, R.with_order("lex"), rev):
        sup = []
        for p in polys:
            pp = p.to_ring(S) if S != R else p
            sup.append(S.support_E(S.E_of_key(pp.lead_key())))
        if S is rev:
            # translate the support bitmask back to R's variable positions
            n = R.nvars
            sup = [sum(1 << (n - 1 - i) for i in range(n) if s >> i & 1) for s in sup]
        d, _ = max_independent_set(sup, R.nvars)
        best = max(best, R.nvars - d)
        if best == R.nvars:
            break
    return best


def minors_height(m: RingMatrix, j) -> int:
    """Exact ``ht I_j(m)`` (``nvars`` for the unit ideal, 0 for the zero ideal)."""
    from .invariants import dimension

    R = m.ring
    if j <= 0:
        return R.nvars
    if j > min(m.nrows, m.ncols):
        return 0
    I = minors_ideal(m, j)
    if not I.gens:
        return 0
    if I.is_unit():
        return R.nvars
    return dimension(I)[1]


def be_acyclicity_check(C: FreeComplex, report=None) -> bool:
    """Buchsbaum–Eisenbud: ``C`` resolves ``Coker d_1`` iff ``ht I_{r_j}(d_j) >= j``."""
    if not is_complex(C):
        raise ValueError("not a complex")
    rs = be_rank_sequence(C)
    ok = True
    for j in range(1, C.length + 1):
        cert = {}
        good = height_at_least(C.differential(j), rs[j - 1], j, cert)
        if report is not None:
            report.append({"j": j, "rank": rs[j - 1], "required": j, "ok": good, **cert})
        if not good:
            ok = False
            if report is None:
                return False
    return ok


def serre_sk_check(C: FreeComplex, k, codim=None, report=None) -> bool:
    """Serre's (S_k) for ``Coker d_1`` from a minimal resolution ``C``.

    Checks ``ht I_{r_j}(d_j) >= min(dim R, j + k)`` for ``j = codim+1..p``.
    """
    if not C.is_minimal():
        raise ValueError("serre_sk_check needs a minimal resolution")
    R = C.ring
    if codim is None:
        from .invariants import hilbert

        M = PresentedModule(R, C.differential(1)) if C.length else None
        codim = hilbert(M).height if M is not None else 0
    rs = be_rank_sequence(C)
    ok = True
    for j in range(codim + 1, C.length + 1):
        target = min(R.nvars, j + k)
        cert = {}
        good = height_at_least(C.differential(j), rs[j - 1], target, cert)
        if report is not None:
            report.append({"j": j, "rank": rs[j - 1], "required": target, "ok": good, **cert})
        if not good:
            ok = False
            if report is None:
                return False
    return ok


# -- homology and Ext -------------------------------------------------------------

def _identity(R, twists):
    n = len(twists)
    ent = [[R.one if i == j else R.zero for j in range(n)] for i in range(n)]
    return RingMatrix(R, ent, twists, twists)


def subquotient(Z: RingMatrix, B: RingMatrix | None) -> PresentedModule:
    """Presentation of ``(column space of Z) / (column space of B)``, ``B ⊆ Z``."""
    R = Z.ring
    cols = Z.columns()
    ctw = list(Z.col_twists)
    if B is not None:
        cols += B.columns()
        ctw += list(B.col_twists)
    r = Z.ncols
    if r == 0:
        return PresentedModule(R, None, [])
    kern, tmo = augmented_kernel(R, cols, list(Z.row_twists), ctw, track=list(range(r)))
    if kern:
        els, ming = compute_basis(tmo, kern, True)
        kern = [kern[i] for i in sorted(ming)]
    rel_cols = [tmo.to_element(d) for d in kern]
    rel_tw = [tmo.key_degree(max(d)) for d in kern]
    P = RingMatrix.from_columns(R, rel_cols, row_twists=list(Z.col_twists), col_twists=rel_tw)
    return PresentedModule(R, P)


def homology_presentation(C: FreeComplex, i) -> PresentedModule:
    """``H_i(C) = ker d_i / im d_{i+1}`` as a presented module (``0 <= i <= p``)."""
    p = C.length
    if not 0 <= i <= p:
        raise ValueError(f"homological index {i} out of range 0..{p}")
    R = C.ring
    tw = C.twists[i]
    if i == 0:
        Z = _identity(R, tw)
    else:
        Z = syzygies(C.differential(i))
        if Z.ncols == 0:
            return PresentedModule(R, None, [])
    B = C.differential(i + 1) if i < p else None
    return subquotient(Z, B)


def ext_module(C: FreeComplex, i) -> PresentedModule:
    """``Ext^i(Coker d_1, R)`` as ``ker d_{i+1}^* / im d_i^*`` from a resolution ``C``."""
    p = C.length
    if not 0 <= i <= p:
        raise ValueError(f"Ext index {i} out of range 0..{p}")
    D = dualize(C)
    return homology_presentation(D, p - i)


def ext_via_linkage(L: Ideal, x_gens, graded=True) -> PresentedModule:
    """Presentation of ``((x) : L) / (x)``, isomorphic to ``Ext^h(R/L, R)``.

    As graded modules ``Ext^h(R/L, R) ≅ Hom(R/L, R/(x))(sum deg x_i)``; with
    ``graded`` the generator degrees are shifted accordingly so Betti tables
    compare directly with the dual-complex route.
    """
    from .ideals import colon
    from .invariants import height

    R = L.ring
    xs = [R(g) if isinstance(g, str) else g for g in x_gens]
    for g in xs:
        if not L.contains(g):
            raise ValueError(f"{g} does not lie in L")
    X = Ideal(R, xs)
    h = height(L)
    if len(xs) != h or height(X) != h:
        raise ValueError("x must be a regular sequence of length ht(L)")
    Q = colon(X, L)
    qs = list(Q.mingens())
    Zt = [g.degree() for g in qs]
    Z = RingMatrix(R, [qs], [0], Zt)
    Bm = RingMatrix(R, [xs], [0], [g.degree() for g in xs])
    M = subquotient(Z, Bm)
    if graded:
        s = sum(g.degree() for g in xs)
        P = M.presentation
        M = PresentedModule(R, RingMatrix(R, P.entries, [t - s for t in P.row_twists], [t - s for t in P.col_twists]))
    return M


def ideal_of_module(M: PresentedModule):
    """For a cyclic module, the annihilator ideal ``I`` with ``M ≅ R/I(-t)``."""
    if M.rank != 1:
        raise ValueError("module is not cyclic")
    return Ideal(M.ring, [e for e in M.presentation.entries[0] if e.terms])
