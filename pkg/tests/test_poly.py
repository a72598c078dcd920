import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bigpd.poly import ParseError, format_poly, parse_poly
from bigpd.ring import Field, RingError, make_ring

from strategies import Q3, R3, polynomials


def test_make_ring_basic():
    R = make_ring("gf32003", ["x", "y", "a", "b", "c1", "c2"])
    assert R.nvars == 6
    assert R.index["c1"] == 4
    Q = make_ring("qq", list("abcdexy"))
    assert Q.field.char == 0 and Q.variables[-1] == "y"


@pytest.mark.parametrize("bad", [4, 9, 1, 2])
def test_make_ring_rejects_non_prime(bad):
    with pytest.raises(RingError):
        make_ring(bad, ["x"])


def test_make_ring_rejects_duplicates_and_bad_names():
    with pytest.raises(RingError, match="duplicate"):
        make_ring("qq", ["x", "x"])
    with pytest.raises(RingError):
        make_ring("qq", ["1x"])
    with pytest.raises(RingError):
        make_ring("qq", [])


def test_field_parse():
    assert Field.parse("gf101").char == 101
    assert Field.parse("QQ").char == 0
    with pytest.raises(RingError):
        Field.parse("reals")


def test_parse_examples():
    R = make_ring("qq", ["x", "y", "f", "g", "h"])
    assert parse_poly("x^3", R) == R.var("x") ** 3
    p = parse_poly("y^2*f + x*y*g + x^2*h", R)
    assert len(p) == 3 and p.degree() == 3 and p.is_homogeneous()
    assert parse_poly("x^0", R) == R.one
    assert parse_poly(" 3/2 * x*y - y ", R).leading_coefficient() == Field(0)("3/2")


@pytest.mark.parametrize("text", ["x^", "x^-1", "q*x", "x**", "x^1.5", "x + + ", ""])
def test_parse_errors(text):
    R = make_ring("qq", ["x", "y"])
    with pytest.raises((ParseError, RingError)):
        parse_poly(text, R)


def test_coefficient_not_in_field():
    R = make_ring(7, ["x"])
    with pytest.raises(ParseError, match="not defined in GF"):
        parse_poly("1/7*x", R)


def test_arithmetic_examples():
    R = make_ring("qq", list("abcdexy"))
    x, y = R.var("x"), R.var("y")
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    p = R("a^2*c+a*b*d+b^2*e")
    sq = p ** 2
    # frozen from an independent CAS expansion
    want = R("a^4*c^2 + 2*a^3*b*c*d + 2*a^2*b^2*c*e + a^2*b^2*d^2 + 2*a*b^3*d*e + b^4*e^2")
    assert sq == want and len(sq) == 6 and sq.degree() == 6
    assert (p + p.scale(-1)).is_zero()
    with pytest.raises(ValueError):
        p ** -1


def test_mixed_rings_rejected():
    R = make_ring("qq", ["x"])
    S = make_ring("qq", ["y"])
    with pytest.raises(RingError):
        R.var("x") + S.var("y")


def test_leading_terms_by_order():
    R = make_ring("qq", ["x", "y"])
    assert R("x^2*y+x*y^2").leading_monomial() == (2, 1)
    L = make_ring("qq", ["y", "x"], "lex")
    assert L("x^2*y+x*y^2").leading_monomial() == (2, 1)  # y^2 x in (y, x) order
    assert format_poly(L("x^2*y+x*y^2")).startswith("y^2*x")
    A = make_ring("qq", ["a", "b"])
    assert A("a^3+b^3").leading_monomial() == (3, 0)
    with pytest.raises(ValueError):
        R.zero.leading_term()


@settings(max_examples=1000)
@given(polynomials(R3), polynomials(R3), polynomials(R3))
def test_ring_axioms_gf(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a and a + b == b + a
    assert a - a == R3.zero


@settings(max_examples=1000)
@given(polynomials(Q3), polynomials(Q3), polynomials(Q3))
def test_ring_axioms_qq(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=300)
@given(polynomials(Q3), polynomials(Q3))
def test_lead_term_multiplicative_and_degree(a, b):
    if a.terms and b.terms:
        lm = tuple(u + v for u, v in zip(a.leading_monomial(), b.leading_monomial()))
        assert (a * b).leading_monomial() == lm
        if a.is_homogeneous() and b.is_homogeneous():
            assert (a * b).degree() == a.degree() + b.degree()


@settings(max_examples=500)
@given(st.sampled_from([R3, Q3]).flatmap(polynomials))
def test_round_trip(p):
    assert parse_poly(format_poly(p), p.ring) == p
