import json

import pytest
from hypothesis import given, settings

from bigpd.families import build_L
from bigpd.formats import (
    FormatError,
    format_betti,
    format_complex,
    format_ideal,
    parse_complex,
    parse_header,
    parse_ideal,
    read_complex,
    read_ideal,
)
from bigpd.ideals import Ideal
from bigpd.resolution import BettiTable, is_complex, minimal_free_resolution

from strategies import R3, homogeneous_ideal_gens

KOSZUL_XY = """\
ring: qq [x,y] grevlex
ranks: 1 2 1
d 1:
x, y
d 2:
-y
x
"""


def test_parse_header():
    R = parse_header("ring: gf101 [a, b,c] lex")
    assert R.variables == ("a", "b", "c") and R.order == "lex" and R.field.char == 101
    assert parse_header("ring: qq [x]").order == "grevlex"
    for bad in ("ring gf101 [a]", "ring: gf4 [a]", "ring: qq [x,x]", "ring: qq [x] grlex"):
        with pytest.raises(FormatError):
            parse_header(bad)


def test_parse_ideal():
    I = parse_ideal("# a comment\nring: qq [x,y,z] grevlex\nx^2 - y*z  # trailing\n\nx*y\n")
    assert len(I.gens) == 2 and I.contains("x^2*y")
    with pytest.raises(FormatError):
        parse_ideal("")
    with pytest.raises(FormatError, match="line 2"):
        parse_ideal("ring: qq [x]\nx^\n")
    with pytest.raises(FormatError):
        parse_ideal("ring: qq [x]\ny\n")


def test_ideal_round_trip(tmp_path):
    F = build_L("L25", 4)
    text = format_ideal(F.ideal, comment="L25 p=4")
    assert text.startswith("# L25 p=4\nring: gf32003 [")
    p = tmp_path / "l.ideal"
    p.write_text(text)
    J = read_ideal(p)
    assert J.ring.variables == F.ring.variables
    assert [str(g) for g in J.gens] == [str(g) for g in F.ideal.gens]


@settings(max_examples=100)
@given(homogeneous_ideal_gens(R3, 4, 3))
def test_ideal_round_trip_property(gens):
    I = Ideal(R3, gens)
    J = parse_ideal(format_ideal(I))
    assert J.ring.header() == R3.header()
    assert list(J.gens) == list(I.gens)


def test_parse_complex_infers_twists():
    C = parse_complex(KOSZUL_XY)
    assert C.ranks == [1, 2, 1]
    assert C.twists == [[0], [1, 1], [2]]
    assert is_complex(C)


def test_complex_round_trip(tmp_path):
    C = build_L("L26", 4).complex
    p = tmp_path / "c.cx"
    p.write_text(format_complex(C))
    D = read_complex(p)
    assert D.twists == C.twists
    assert all(D.differential(i).entries == C.differential(i).entries for i in range(1, C.length + 1))
    K, _ = minimal_free_resolution(Ideal(R3, list(R3.gens())))
    assert parse_complex(format_complex(K)).twists == K.twists


@pytest.mark.parametrize(
    "text,match",
    [
        ("", "empty"),
        ("ring: qq [x,y]\nd 1:\nx, y\n", "ranks"),
        ("ring: qq [x,y]\nranks: 1 2 1\nd 1:\nx, y\n", "d 1..d 2"),
        ("ring: qq [x,y]\nranks: 1 2\nd 1:\nx\n", "1 x 2"),
        ("ring: qq [x,y]\nranks: 1 2\nd 1:\nx, y\nd 1:\nx, y\n", "twice"),
        ("ring: qq [x,y]\nranks: 1 two\n", "integers"),
        ("ring: qq [x,y]\nranks: 1 2\nx, y\n", "unexpected"),
        ("ring: qq [x,y]\nranks: 1 2\ntwists 1: 1\nd 1:\nx, y\n", "twist"),
        ("ring: qq [x,y]\nranks: 1 1\nd 1:\nx + y^2\n", "not homogeneous"),
        ("ring: qq [x,y]\nranks: 1 1\ntwists 1: 3\nd 1:\nx\n", "not homogeneous"),
    ],
)
def test_parse_complex_errors(text, match):
    with pytest.raises(FormatError, match=match):
        parse_complex(text)


def test_betti_formats():
    B = BettiTable({(0, 0): 1, (1, 2): 2, (2, 4): 1})
    assert format_betti(B).splitlines() == ["   0 1 2", "0: 1 - -", "1: - 2 -", "2: - - 1"]
    data = json.loads(format_betti(B, "structured"))
    assert data == [{"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 2, "beta": 2}, {"i": 2, "j": 4, "beta": 1}]
    with pytest.raises(ValueError):
        format_betti(B, "xml")
