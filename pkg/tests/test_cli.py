import json

import pytest

from bigpd.cli import main
from bigpd.families import WORKED_EXAMPLE_GENERATORS, build_L
from bigpd.formats import format_complex, parse_complex, parse_ideal


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_family_build_worked_example(capsys):
    code, out, _ = run(capsys, "family", "build", "--kind", "I", "--h", "2", "--e", "4", "--p", "6", "--field", "gf32003", "-q")
    assert code == 0
    I = parse_ideal(out)
    assert len(I.gens) == len(WORKED_EXAMPLE_GENERATORS) == 12
    assert out.startswith("# I h=2 e=4 p=6; 12 generators\n")


def test_family_build_errors(capsys):
    code, _, err = run(capsys, "family", "build", "--kind", "I", "--h", "2", "--e", "2", "--p", "6", "-q")
    assert code == 2 and "(h, e) != (2, 2)" in err
    assert run(capsys, "family", "build", "--kind", "L25", "--p", "3", "-q")[0] == 2
    assert run(capsys, "family", "build", "--kind", "L25", "--p", "5", "--field", "gf4", "-q")[0] == 2
    assert run(capsys, "family", "frobnicate")[0] == 2


def test_family_build_writes_complex(tmp_path, capsys):
    cx = tmp_path / "l36.cx"
    code, out, _ = run(capsys, "family", "build", "--spec", "kind=L36 p=4", "--complex-out", str(cx), "-q")
    assert code == 0
    C = parse_complex(cx.read_text())
    assert C.ranks == [1, 5, 9, 6, 1]
    assert run(capsys, "family", "build", "--kind", "burch", "--n", "2", "--complex-out", str(cx), "-q")[0] == 2


def test_resolve_prints_dash_table(tmp_path, capsys):
    f = tmp_path / "i.ideal"
    code, out, _ = run(capsys, "family", "build", "--kind", "I", "--h", "2", "--e", "4", "--p", "6", "--out", str(f), "-q")
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "ideal", "resolve", "--in", str(f), "--betti", "paper", "-q")
    assert code == 0
    rows = [line.split() for line in out.splitlines()]
    assert rows[0] == ["0", "1", "2", "3", "4", "5", "6"]
    assert rows[3] == ["2:", "-", "4", "3", "-", "-", "-", "-"]
    assert rows[5] == ["4:", "-", "8", "26", "33", "21", "7", "1"]
    code, out, _ = run(capsys, "ideal", "resolve", "--in", str(f), "--format", "structured", "-q")
    data = json.loads(out)
    assert data["pd"] == 6 and data["regularity"] == 4 and data["ranks"] == [1, 12, 29, 33, 21, 7, 1]


def test_resolve_with_exactness_oracle(tmp_path, capsys):
    f = tmp_path / "c.ideal"
    f.write_text("ring: qq [x,y,z] grevlex\nx^2\nx*y\ny*z^2\n")
    code, out, err = run(capsys, "ideal", "resolve", "--in", str(f), "--max-degree", "6")
    assert code == 0 and "exactness oracle up to degree 6: ok" in err
    assert "exactness" not in out


def test_invariants_round_trip(tmp_path, capsys):
    f = tmp_path / "l25.ideal"
    assert run(capsys, "family", "build", "--kind", "L25", "--p", "4", "--out", str(f), "-q")[0] == 0
    code, out, _ = run(capsys, "ideal", "invariants", "--in", str(f), "--format", "structured", "--unmixed", "-q")
    assert code == 0
    data = json.loads(out)
    assert (data["height"], data["multiplicity"], data["pd"], data["unmixed"]) == (2, 5, 3, True)
    # re-emit and compare: identical invariants
    g = tmp_path / "again.ideal"
    g.write_text(f.read_text())
    assert json.loads(run(capsys, "ideal", "invariants", "--in", str(g), "--format", "structured", "--unmixed", "-q")[1]) == data
    code, out, _ = run(capsys, "ideal", "invariants", "--in", str(f), "-q")
    assert "multiplicity: 5" in out and "betti:" in out


def test_ideal_operations(tmp_path, capsys):
    a = tmp_path / "a.ideal"
    b = tmp_path / "b.ideal"
    a.write_text("ring: qq [x,y,z] grevlex\nx\ny\n")
    b.write_text("ring: qq [x,y,z] grevlex\nx\nz\n")
    code, out, _ = run(capsys, "ideal", "intersect", "--in", str(a), "--with", str(b), "-q")
    assert code == 0 and sorted(out.splitlines()[1:]) == ["x", "y*z"]
    c = tmp_path / "c.ideal"
    c.write_text("ring: qq [x,y,z] grevlex\nx*y\n")
    code, out, _ = run(capsys, "ideal", "saturate", "--in", str(c), "--by", "y", "-q")
    assert code == 0 and out.splitlines()[1:] == ["x"]
    assert run(capsys, "ideal", "saturate", "--in", str(c), "--by", "q", "-q")[0] == 2
    other = tmp_path / "o.ideal"
    other.write_text("ring: qq [x,y] grevlex\nx\n")
    assert run(capsys, "ideal", "colon", "--in", str(c), "--by", str(other), "-q")[0] == 2


def test_colon_output(tmp_path, capsys):
    c = tmp_path / "c.ideal"
    a = tmp_path / "a.ideal"
    c.write_text("ring: qq [x,y,z] grevlex\nx*y\n")
    a.write_text("ring: qq [x,y,z] grevlex\nx\n")
    code, out, _ = run(capsys, "ideal", "colon", "--in", str(c), "--by", str(a), "-q")
    assert code == 0 and out.splitlines()[1:] == ["y"]


def test_bad_input_files(tmp_path, capsys):
    f = tmp_path / "bad.ideal"
    f.write_text("ring: qq [x,y]\nx^\n")
    assert run(capsys, "ideal", "invariants", "--in", str(f), "-q")[0] == 2
    assert run(capsys, "ideal", "invariants", "--in", str(tmp_path / "missing"), "-q")[0] == 2
    g = tmp_path / "inh.ideal"
    g.write_text("ring: qq [x,y]\nx^2 + y\n")
    assert run(capsys, "ideal", "resolve", "--in", str(g), "-q")[0] == 2


KOSZUL_XYZ = """\
ring: qq [x,y,z] grevlex
ranks: 1 3 3 1
d 1:
x, y, z
d 2:
-y, -z, 0
x, 0, -z
0, x, y
d 3:
z
-y
x
"""


def test_complex_check_koszul(tmp_path, capsys):
    f = tmp_path / "koszul_xyz.cx"
    f.write_text(KOSZUL_XYZ)
    code, out, _ = run(capsys, "complex", "check", "--in", str(f), "--sk", "2", "-q")
    assert code == 0, out
    assert "PASS    serre_S2" in out and out.rstrip().endswith("overall: pass")


def test_complex_check_tampered(tmp_path, capsys):
    f = tmp_path / "bad.cx"
    f.write_text(KOSZUL_XYZ.replace("-y, -z, 0", "y, -z, 0"))
    code, out, _ = run(capsys, "complex", "check", "--in", str(f), "--format", "structured", "-q")
    assert code == 1
    data = json.loads(out)
    assert data["status"] == "fail"
    assert data["checks"][0] == {"check": "is_complex", "status": "fail", "expected": True, "computed": False, "certificate": None}


def test_complex_check_base_family(tmp_path, capsys):
    f = tmp_path / "l25.cx"
    f.write_text(format_complex(build_L("L25", 4).complex))
    assert run(capsys, "complex", "check", "--in", str(f), "--sk", "1", "--codim", "2", "-q")[0] == 0
    assert run(capsys, "complex", "check", "--in", str(f), "--format", "structured", "-q")[0] == 0


def test_verify_family(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "family", "kind=L25", "p=4", "-q")
    assert code == 0 and "overall: pass" in out
    spec = tmp_path / "spec.txt"
    spec.write_text("# a base family\nkind=burch\nn=2\n")
    assert run(capsys, "verify", "family", str(spec), "-q")[0] == 0
    assert run(capsys, "verify", "family", "kind=L25", "p=3", "-q")[0] == 2
    assert run(capsys, "verify", "family", "--kind", "I", "--h", "2", "--e", "2", "--p", "5", "-q")[0] == 2


def test_verify_suite_subset_is_deterministic(capsys):
    a = run(capsys, "verify", "paper", "--only", "1,9", "--format", "structured", "-q")
    b = run(capsys, "verify", "paper", "--only", "1,9", "--format", "structured", "-q")
    assert a[0] == b[0] == 0
    assert a[1] == b[1]
    names = [c["check"] for c in json.loads(a[1])["checks"]]
    assert names == sorted(names)
    assert run(capsys, "verify", "paper", "--only", "one", "-q")[0] == 2


def test_progress_goes_to_stderr(tmp_path, capsys):
    code, out, err = run(capsys, "family", "build", "--kind", "I", "--h", "2", "--e", "3", "--p", "5")
    assert code == 0
    assert "building I" in err and "building" not in out
