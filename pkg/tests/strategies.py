"""Hypothesis strategies for small polynomials and ideals."""

from hypothesis import strategies as st

from bigpd.oracles import monomials
from bigpd.poly import Polynomial
from bigpd.ring import make_ring

R3 = make_ring("gf32003", ["x", "y", "z"])
Q3 = make_ring("qq", ["x", "y", "z"])
R4 = make_ring("gf32003", ["x", "y", "z", "w"])


def exponents(n, max_deg):
    return st.lists(st.integers(0, max_deg), min_size=n, max_size=n).filter(lambda e: sum(e) <= max_deg)


def polynomials(R, max_deg=3, max_terms=4):
    q = R.field.char
    coeff = st.integers(1, q - 1) if q else st.fractions(min_value=-5, max_value=5, max_denominator=4)
    terms = st.lists(st.tuples(exponents(R.nvars, max_deg), coeff), max_size=max_terms)
    return terms.map(lambda ts: Polynomial.from_terms(R, [(tuple(e), c) for e, c in ts]))


def homogeneous(R, degree, max_terms=3):
    q = R.field.char or 7

    def build(data):
        mons, coeffs = data
        return Polynomial.from_terms(R, list(zip(mons, coeffs)))

    mons = st.lists(st.sampled_from(monomials(R.nvars, degree)), min_size=1, max_size=max_terms, unique=True)
    return st.tuples(mons, st.lists(st.integers(1, q - 1), min_size=max_terms, max_size=max_terms)).map(build).filter(lambda p: bool(p.terms))


def homogeneous_ideal_gens(R, max_gens=4, max_deg=3, max_terms=3):
    one = st.integers(1, max_deg).flatmap(lambda d: homogeneous(R, d, max_terms))
    return st.lists(one, min_size=1, max_size=max_gens)
