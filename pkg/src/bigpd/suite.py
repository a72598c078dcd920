"""The acceptance suite behind ``verify paper``: one report per criterion.

Reports contain no timings, so identical configurations give identical bytes.
"""

from __future__ import annotations

import logging
import random
import time

from .families import (
    GENERATOR_COUNTS,
    KINDS,
    WORKED_EXAMPLE_BETTI,
    BASE,
    build_I,
    build_L,
    burch_ideal,
    burch_prime,
    burch_socle,
    check_link,
    engheta_fixtures,
    j_reg,
    lift,
    main_prime,
    splitting_fixture,
    verify_base_family,
    verify_s2,
    worked_example_ideal,
)
from .groebner import ModuleOrder, groebner_basis, s_pairs_reduce_to_zero
from .ideals import Ideal, intersect, is_primary_to_linear
from .invariants import depth_certificate, hilbert, is_unmixed, verify_socle_witness
from .oracles import exactness_defects, hilbert_function
from .report import PASS, SKIP, Report
from .resolution import (
    BettiTable,
    betti_table,
    dualize,
    ext_via_linkage,
    homology_presentation,
    is_complex,
    minimal_free_resolution,
)
from .ring import make_ring

log = logging.getLogger("bigpd")

DEFAULT_FIELD = "gf32003"
GRID_P = 5
GRID_E = range(3, 13)


class _Cache:
    """Constructions shared between criteria within one suite run."""

    def __init__(self, field, order):
        self.field, self.order = field, order
        self._I, self._L, self._pd = {}, {}, {}

    def I(self, h, e, p):
        k = (h, e, p)
        if k not in self._I:
            self._I[k] = build_I(h, e, p, self.field, self.order)
        return self._I[k]

    def L(self, kind, p):
        k = (kind, p)
        if k not in self._L:
            self._L[k] = build_L(kind, p, "burch", self.field, self.order)
        return self._L[k]

    def pd(self, I):
        k = id(I)
        if k not in self._pd:
            self._pd[k] = (I, betti_table(I).pd)
        return self._pd[k][1]


def c01_burch(cache, progress=None) -> Report:
    rep = Report("1 Burch family pd and socle witness")
    for n in range(1, 5):
        I = burch_ideal(n, cache.field, cache.order)
        R = I.ring
        cert = depth_certificate(I)
        rep.add(f"n{n}.pd_by_depth", cert.exact and cert.pd == n + 2, n + 2, cert.pd, {"regular": cert.regular})
        pdr = betti_table(I).pd
        rep.add(f"n{n}.pd_by_resolution", pdr == n + 2, n + 2, pdr)
        s = burch_socle(R, n)
        ok = verify_socle_witness(I, s, burch_prime(R, n))
        rep.add(f"n{n}.socle_witness", ok, True, ok, {"s": str(s)})
    return rep


def c02_base_families(cache, progress=None) -> Report:
    rep = Report("2 base families at p = 4, 5")
    for p in (4, 5):
        for kind in KINDS:
            if progress:
                progress(f"{kind} p={p}")
            r, F = verify_base_family(kind, p, "burch", cache.field, cache.order, ext_routes=False)
            cache._L.setdefault((kind, p), F)
            rep.extend(r, prefix=f"{kind}.p{p}.")
    return rep


def c03_worked_example(cache, progress=None) -> Report:
    rep = Report("3 worked example I_{2,4,6}")
    want = BettiTable(WORKED_EXAMPLE_BETTI, minimal=True)
    for field in (cache.field, "qq"):
        if progress:
            progress(f"I_(2,4,6) over {field}")
        C = build_I(2, 4, 6, field, cache.order)
        I = C.ideal
        listed = worked_example_ideal(I.ring)
        tag = make_ring(field, ["x"]).field.tag
        rep.add(f"{tag}.equals_listed_generators", I.equals(listed), 12, len(I.gens))
        B = betti_table(I)
        rep.add(f"{tag}.betti_table", B == want, want.structured(), B.structured())
        rep.add(f"{tag}.pd", B.pd == 6, 6, B.pd)
        rep.add(f"{tag}.regularity", B.regularity == 4, 4, B.regularity)
    return rep


def c04_generator_counts(cache, progress=None, budget=1800.0) -> Report:
    rep = Report("4 minimal generator counts of I_{2,4,p}")
    for p in (5, 6, 7, 8):
        t0 = time.monotonic()
        mu = len(cache.I(2, 4, p).ideal.gens)
        took = time.monotonic() - t0
        if p == 8 and took > budget:
            rep.add(f"p{p}.num_generators", False, GENERATOR_COUNTS[p], mu, {"reason": "skipped-by-budget"}, status=SKIP)
        else:
            rep.add(f"p{p}.num_generators", mu == GENERATOR_COUNTS[p], GENERATOR_COUNTS[p], mu)
    return rep


def c05_grid(cache, progress=None) -> Report:
    rep = Report("5 main construction grid at p = 5")
    p = GRID_P
    cases = [(2, e) for e in GRID_E] + [(3, 2)]
    for h, e in cases:
        if progress:
            progress(f"I_({h},{e},{p})")
        C = cache.I(h, e, p)
        I = C.ideal
        hd = hilbert(I)
        P = main_prime(C)
        tag = f"h{h}e{e}"
        rep.add(f"{tag}.height", hd.height == h, h, hd.height)
        rep.add(f"{tag}.multiplicity", hd.multiplicity == e, e, hd.multiplicity)
        prim = is_primary_to_linear(I, P)
        rep.add(f"{tag}.primary", prim, True, prim, [str(g) for g in P.gens])
        pd = cache.pd(I)
        rep.add(f"{tag}.pd_at_least_p", pd >= p, f">= {p}", pd)
    a = cache.pd(cache.I(2, 3, p).ideal)
    b = cache.pd(cache.I(4, 3, p).ideal)
    rep.add("h4e3.pd_lift_identity", b == a + 2, a + 2, b)
    base = cache.I(2, 4, p).ideal
    pb = cache.pd(base)
    for k in (1, 2, 3):
        pk = betti_table(lift(base, k)).pd
        rep.add(f"lift{k}.pd_identity", pk == pb + k, pb + k, pk)
    return rep


def c06_links(cache, progress=None) -> Report:
    rep = Report("6 linkage identities on every edge at p = 5")
    p = GRID_P
    seen = set()
    for h, e in [(2, e) for e in GRID_E] + [(3, 2)]:
        C = cache.I(h, e, p)
        for lr in C.links:
            key = (str(lr.source.ring), tuple(str(g) for g in lr.source.gens), tuple(str(x) for x in lr.ci))
            if key in seen:
                continue
            seen.add(key)
            label = f"h{h}e{e}.({','.join(str(x) for x in lr.ci)})"
            rep.extend(check_link(lr), prefix=label + ".")
    # pairs of unmixed ideals linked to a common ideal have equal pd
    pairs = [((2, 3), (2, 6)), ((2, 4), (2, 7)), ((2, 4), (2, 11))]
    for a, b in pairs:
        pa, pb = cache.pd(cache.I(*a, p).ideal), cache.pd(cache.I(*b, p).ideal)
        rep.add(f"double_link.e{a[1]}~e{b[1]}", pa == pb, pa, pb)
    for e in GRID_E:
        C = cache.I(2, e, p)
        if len(C.links) == 3:
            pa, pb = cache.pd(C.links[0].target), cache.pd(C.links[2].target)
            rep.add(f"double_link.e4~e{e}", pa == pb, pa, pb)
    return rep


def c07_ext_routes(cache, progress=None) -> Report:
    rep = Report("7 Ext routes agree at p = 4")
    for kind in KINDS:
        F = cache.L(kind, 4)
        h = BASE[kind].height
        E1 = homology_presentation(dualize(F.complex), F.complex.length - h)
        E2 = ext_via_linkage(F.ideal, F.ci())
        b1, b2 = betti_table(E1), betti_table(E2)
        rep.add(f"{kind}.betti_equal", b1 == b2, b1.structured(), b2.structured())
    return rep


def c08_regularity(cache, progress=None) -> Report:
    rep = Report("8 regularity family J_n")
    for n in range(1, 6):
        J = j_reg(n, cache.field)
        B = betti_table(J)
        hd = hilbert(J)
        rep.add(f"n{n}.regularity", B.regularity == n, n, B.regularity)
        rep.add(f"n{n}.height", hd.height == 2, 2, hd.height)
        rep.add(f"n{n}.multiplicity", hd.multiplicity == 2, 2, hd.multiplicity)
        u = is_unmixed(J)
        rep.add(f"n{n}.unmixed", u, True, u)
    return rep


def c09_s2(cache, progress=None) -> Report:
    rep = Report("9 (S2) boundary example")
    rep.extend(verify_s2(cache.field))
    return rep


def c10_engheta(cache, progress=None) -> Report:
    rep = Report("10 height-2 multiplicity-2 fixtures")
    P, A, B, i = splitting_fixture(13)
    X = intersect(A, B)
    rep.add("splitting.reduced_gb_equal", X.equals(P), [str(g) for g in P.groebner_polys()], [str(g) for g in X.groebner_polys()], {"i": i})
    both = P.is_subset(X) and X.is_subset(P)
    rep.add("splitting.mutual_containment", both, True, both)
    for case, I in engheta_fixtures(cache.field).items():
        hd = hilbert(I)
        pd = betti_table(I).pd
        rep.add(f"case{case}.height", hd.height == 2, 2, hd.height)
        rep.add(f"case{case}.multiplicity", hd.multiplicity == 2, 2, hd.multiplicity)
        rep.add(f"case{case}.pd_at_most_3", pd <= 3, "<= 3", pd)
    return rep


# -- property suites ----------------------------------------------------------------

def random_homogeneous(R, degree, terms, rng):
    n = R.nvars
    from .oracles import monomials

    mons = monomials(n, degree)
    picks = rng.sample(mons, min(terms, len(mons)))
    q = R.field.char or 7
    out = R.zero
    for m in picks:
        out = out + R.one.shift(m, rng.randrange(1, q))
    return out


def random_ideal(R, rng, max_gens=4, max_degree=3, max_terms=3):
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        g = random_homogeneous(R, rng.randint(1, max_degree), rng.randint(1, max_terms), rng)
        if g.terms:
            gens.append(g)
    return gens or [R.var(R.variables[0])]


def c11_properties(cache, progress=None, n_gb=1000, n_res=40, max_degree=8, seed=20261014) -> Report:
    rep = Report("11 property suites")
    rng = random.Random(seed)
    R = make_ring(cache.field, ["x", "y", "z"], cache.order)
    mo = ModuleOrder.ideal(R)
    bad = 0
    for _ in range(n_gb):
        gens = random_ideal(R, rng)
        G = groebner_basis(gens)
        sh = list(gens)
        rng.shuffle(sh)
        G2 = groebner_basis(sh)
        G3 = groebner_basis(G.polynomials())
        if not (G == G2 and G == G3 and s_pairs_reduce_to_zero(G.elements, mo)):
            bad += 1
    rep.add("gb_determinism_idempotence", bad == 0, 0, bad, {"ideals": n_gb})
    S = make_ring(cache.field, ["x", "y", "z", "w"], cache.order)
    ex = dd = hf = 0
    for _ in range(n_res):
        I = Ideal(S, random_ideal(S, rng, max_gens=4, max_degree=3, max_terms=3))
        if I.is_unit():
            continue
        C, _ = minimal_free_resolution(I)
        if not is_complex(C):
            dd += 1
        if exactness_defects(C, I, max_degree):
            ex += 1
        H = hilbert(I)
        if any(hilbert_function(I, d) != H.hilbert_function(d) for d in range(max_degree + 1)):
            hf += 1
    rep.add("resolution_exactness_oracle", ex == 0, 0, ex, {"ideals": n_res, "max_degree": max_degree})
    rep.add("d_squared_zero", dd == 0, 0, dd)
    rep.add("hilbert_function_brute_force", hf == 0, 0, hf, {"max_degree": max_degree})
    return rep


CRITERIA = [
    c01_burch,
    c02_base_families,
    c03_worked_example,
    c04_generator_counts,
    c05_grid,
    c06_links,
    c07_ext_routes,
    c08_regularity,
    c09_s2,
    c10_engheta,
    c11_properties,
]


def run_suite(field=DEFAULT_FIELD, order="grevlex", progress=None, only=None) -> Report:
    """Run the acceptance criteria (``only``: 1-based numbers) into one report."""
    cache = _Cache(field, order)
    out = Report(f"acceptance suite field={make_ring(field, ['x']).field.tag} order={order}")
    for k, fn in enumerate(CRITERIA, 1):
        if only and k not in only:
            continue
        if progress:
            progress(f"criterion {k}")
        r = fn(cache, progress)
        out.extend(r, prefix=f"c{k:02d}.")
        out.add(f"c{k:02d}", r.ok, PASS, PASS if r.ok else "fail", {"title": r.title})
    # fixed order by check name, independent of evaluation order
    out.checks.sort(key=lambda c: c.check)
    return out
