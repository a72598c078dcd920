"""Gröbner-free oracles: degree slices and field linear algebra only.

These recompute Hilbert functions and homology ranks degree by degree from
spanning sets, so they share no code path with the Gröbner engine.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb

from .matrix import RingMatrix
from .resolution import _rank


def monomials(n, d):
    """Exponent tuples of total degree ``d`` in ``n`` variables."""
    if d < 0:
        return []
    out = []
    for c in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in c:
            e[i] += 1
        out.append(tuple(e))
    return out


def free_slice_dim(n, twists, d) -> int:
    """``dim_K`` of the degree-``d`` part of ``sum R(-t)``."""
    return sum(comb(d - t + n - 1, n - 1) for t in twists if d >= t)


def slice_rank(m: RingMatrix, d) -> int:
    """Rank over ``K`` of the degree-``d`` part of the map given by ``m``."""
    R = m.ring
    n = R.nvars
    q = R.field.char
    index = {}
    rows = []
    for j in range(m.ncols):
        col = [(r, list(m.entries[r][j].items())) for r in range(m.nrows) if m.entries[r][j].terms]
        for mu in monomials(n, d - m.col_twists[j]):
            vec = {}
            for r, terms in col:
                for exps, c in terms:
                    key = (r, tuple(a + b for a, b in zip(exps, mu)))
                    k = index.setdefault(key, len(index))
                    v = vec.get(k, 0) + c
                    if q:
                        v %= q
                    if v:
                        vec[k] = v
                    else:
                        vec.pop(k, None)
            rows.append(vec)
    return _rank(rows, q, R.field.one)


def _presentation(M):
    from .ideals import Ideal

    if isinstance(M, Ideal):
        gens = [g for g in M.gens if g.terms]
        return RingMatrix(M.ring, [gens], [0], [g.degree() for g in gens]) if gens else None, [0]
    return M.presentation, list(M.generator_twists)


def hilbert_function(M, d) -> int:
    """``dim_K M_d`` for ``M = R/I`` (Ideal) or a presented module."""
    pres, tw = _presentation(M)
    n = (M.ring).nvars
    total = free_slice_dim(n, tw, d)
    if pres is None or pres.ncols == 0:
        return total
    return total - slice_rank(pres, d)


def exactness_defects(C, M, max_degree):
    """Degree slices where ``C`` fails to resolve ``M``; empty when exact.

    For each ``d <= max_degree`` it checks ``H_i(C)_d = 0`` for ``i >= 1``
    and ``H_0(C)_d = M_d`` by ranks of the slice maps.  Returns a list of
    ``(i, d, homology_dim, expected)``.
    """
    n = C.ring.nvars
    out = []
    for d in range(max_degree + 1):
        r = [0] + [slice_rank(m, d) for m in C.d] + [0]
        for i, tw in enumerate(C.twists):
            h = free_slice_dim(n, tw, d) - r[i] - r[i + 1]
            want = hilbert_function(M, d) if i == 0 else 0
            if h != want:
                out.append((i, d, h, want))
    return out


def euler_slice(C, d) -> int:
    """``sum (-1)^i dim (F_i)_d``."""
    n = C.ring.nvars
    return sum((-1) ** i * free_slice_dim(n, tw, d) for i, tw in enumerate(C.twists))
