import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bigpd.families import WORKED_EXAMPLE_BETTI, build_I, build_L
from bigpd.ideals import Ideal
from bigpd.invariants import dimension, hilbert
from bigpd.matrix import RingMatrix
from bigpd.oracles import euler_slice, exactness_defects
from bigpd.resolution import (
    BettiTable,
    FreeComplex,
    MinorsBudgetError,
    PresentedModule,
    _det_bareiss,
    _det_cofactor,
    be_acyclicity_check,
    be_rank_sequence,
    betti_table,
    determinant,
    dualize,
    ext_module,
    ext_via_linkage,
    homology_presentation,
    is_complex,
    iter_minors,
    minimal_free_resolution,
    minor_count,
    minors_height,
    minors_ideal,
    projective_dimension,
    serre_sk_check,
)
from bigpd.ring import make_ring

from strategies import R3, homogeneous, homogeneous_ideal_gens

R = make_ring("qq", ["x", "y", "z", "w"])


def I(*gens, ring=R):
    return Ideal(ring, list(gens))


def koszul(ring, names):
    return minimal_free_resolution(Ideal(ring, list(names)))[0]


def test_koszul_resolution():
    C, B = minimal_free_resolution(I("x", "y"))
    assert C.ranks == [1, 2, 1] and B.pd == 2
    C3 = koszul(R, ["x", "y", "z"])
    assert C3.ranks == [1, 3, 3, 1]
    assert is_complex(C3) and C3.is_minimal()


def test_base_family_ranks_and_resolution():
    F = build_L("L25", 4)
    assert F.complex.ranks == [1, 5, 5, 1]
    C, B = minimal_free_resolution(F.ideal)
    assert C.ranks == [1, 5, 5, 1]
    assert B == F.complex.betti()
    L36 = build_L("L36", 4)
    assert L36.complex.ranks == [1, 5, 9, 6, 1] and is_complex(L36.complex)


def test_worked_example_betti_table():
    Cn = build_I(2, 4, 6)
    B = betti_table(Cn.ideal)
    assert B.betti == WORKED_EXAMPLE_BETTI
    assert B.pd == 6
    text = B.format_dashes()
    assert text.splitlines()[1].split() == ["0:", "1", "-", "-", "-", "-", "-", "-"]
    assert text.splitlines()[3].split() == ["2:", "-", "4", "3", "-", "-", "-", "-"]
    assert text.splitlines()[5].split() == ["4:", "-", "8", "26", "33", "21", "7", "1"]


def _flip(m: RingMatrix, i, j):
    ent = [list(r) for r in m.entries]
    ent[i][j] = -ent[i][j]
    return RingMatrix(m.ring, ent, m.row_twists, m.col_twists)


def test_is_complex_detects_flipped_sign():
    F = build_L("L25", 4)
    C = F.complex
    d3 = C.differential(3)
    i = next(r for r in range(d3.nrows) if d3.entries[r][0].terms)
    bad = FreeComplex(C.ring, [C.differential(1), C.differential(2), _flip(d3, i, 0)])
    assert is_complex(C)
    assert not is_complex(bad)


def test_shape_mismatch_rejected():
    a = RingMatrix(R, [[R("x"), R("y")]])
    b = RingMatrix(R, [[R("x")], [R("y")], [R("z")]])
    with pytest.raises(ValueError):
        FreeComplex(R, [a, b])


def test_be_rank_sequences():
    assert be_rank_sequence(koszul(R, ["x", "y"])) == [1, 1]
    ranks = build_L("L25", 4).complex.ranks
    rs = be_rank_sequence(build_L("L25", 4).complex)
    assert rs == [1, 4, 1]
    assert all(rs[j] + rs[j + 1] == ranks[j + 1] for j in range(len(rs) - 1))
    assert be_rank_sequence(build_L("L220", 4).complex) == [1, 6, 4]


def test_be_acyclicity():
    assert be_acyclicity_check(koszul(R, ["x", "y", "z"]))
    for kind in ("L25", "L26", "L36", "L220"):
        assert be_acyclicity_check(build_L(kind, 4, "generic-variables").complex), kind
    # R <-(x y)- R^2 <-(xy, -x^2)^T- R is a complex, but ht I_1(d_2) = 1 < 2
    x, y = R.var("x"), R.var("y")
    d1 = RingMatrix(R, [[x, y]])
    d2 = RingMatrix(R, [[x * y], [-(x ** 2)]], [1, 1], [3])
    C = FreeComplex(R, [d1, d2])
    assert is_complex(C)
    rep = []
    assert not be_acyclicity_check(C, rep)
    assert rep[1]["j"] == 2 and not rep[1]["ok"]


def test_be_rejects_non_complex():
    x, y = R.var("x"), R.var("y")
    d1 = RingMatrix(R, [[x, y]])
    d2 = RingMatrix(R, [[x], [y]], [1, 1], [2])
    with pytest.raises(ValueError, match="not a complex"):
        be_acyclicity_check(FreeComplex(R, [d1, d2]))


def test_minors_examples():
    m = RingMatrix(R, [[R("x"), R("y")]])
    assert minors_ideal(m, 1).equals(I("x", "y"))
    with pytest.raises(ValueError):
        minors_ideal(m, 2)
    with pytest.raises(ValueError):
        minors_ideal(m, 0)
    G = build_L("L25", 4, "generic-variables")
    assert minors_ideal(G.complex.differential(3), 1).equals(Ideal(G.ring, list(G.ring.gens())))
    # the d_3 entry is -f^4 - y^3 t^(3d-3) h, so the minor carries a plus sign
    F = build_L("L220", 4, "generic-variables")
    M4 = minors_ideal(F.complex.differential(3), 4)
    for s in ("x^4", "y^4", "g^4", "f^4 + y^3*h"):
        assert M4.contains(s), s
    assert not M4.contains("f^4")


def test_minors_height_of_koszul():
    d1 = koszul(R, ["x", "y", "z"]).differential(1)
    assert minors_height(d1, 1) == 3


def test_minors_budget():
    F = build_L("L220", 4, "generic-variables")
    d2 = F.complex.differential(2)
    assert minor_count(d2, 6) > 1000
    with pytest.raises(MinorsBudgetError):
        next(iter_minors(d2, 6, budget=1000))


def test_determinant_examples():
    S = make_ring("qq", ["a", "b", "c", "d"])
    M = [[S("a"), S("b")], [S("c"), S("d")]]
    assert determinant(M) == S("a*d - b*c")
    Z = [[S("a"), S("b"), S("0"), S("0")], [S("c"), S("d"), S("0"), S("0")],
         [S("0"), S("0"), S("a"), S("b")], [S("0"), S("0"), S("c"), S("d")]]
    assert determinant(Z) == S("a*d - b*c") ** 2


@settings(max_examples=60)
@given(st.integers(2, 5).flatmap(lambda n: st.lists(st.lists(homogeneous(R3, 1, 2), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_cofactor(M):
    assert _det_bareiss(M) == _det_cofactor(M)


def test_serre_examples():
    F = build_L("L25", 4)
    C, _ = minimal_free_resolution(F.ideal)
    assert serre_sk_check(C, 1, codim=2)
    C2, _ = minimal_free_resolution(I("x^2", "x*y"))
    assert not serre_sk_check(C2, 1)
    assert serre_sk_check(koszul(R, ["x", "y"]), 2)
    x, y = R.var("x"), R.var("y")
    one = RingMatrix(R, [[R.one, x]], [0], [0, 1])
    with pytest.raises(ValueError):
        serre_sk_check(FreeComplex(R, [one]), 1)


def test_dualize_twice_is_identity():
    C = build_L("L26", 4).complex
    D = dualize(dualize(C))
    assert D.twists == C.twists
    assert all(D.differential(i).entries == C.differential(i).entries for i in range(1, C.length + 1))
    assert is_complex(dualize(C))


def test_ext_of_complete_intersections():
    K = koszul(R, ["x", "y"])
    E2 = homology_presentation(dualize(K), 0)
    J = Ideal(R, [g for col in E2.presentation.columns() for g in col.components])
    assert J.equals(I("x", "y"))
    C1 = minimal_free_resolution(I("x"))[0]
    # Hom(R/(x), R) = 0 and Ext^1(R/(x), R) = R/(x)(1)
    assert ext_module(C1, 0).is_zero() and ext_module(C1, 0).rank == 0
    E1 = ext_module(C1, 1)
    assert E1.generator_twists == [-1] and hilbert(E1).dim == R.nvars - 1
    assert ext_module(K, 1).is_zero()
    with pytest.raises(ValueError):
        homology_presentation(K, 5)


def test_dual_fifth_differential_and_ext_via_linkage():
    G = build_L("L25", 4, "generic-variables")
    d3s = dualize(G.complex).differential(1)
    from bigpd.invariants import dimension as dim

    Q = Ideal(G.ring, [e for row in d3s.entries for e in row])
    assert dim(Q)[0] == 0
    E = ext_via_linkage(G.ideal, ["x^3", "y^3"])
    assert betti_table(E) == betti_table(ext_module(G.complex, 2))
    with pytest.raises(ValueError):
        ext_via_linkage(G.ideal, ["x^3"])
    with pytest.raises(ValueError):
        ext_via_linkage(G.ideal, ["x", "y^3"])
    T = I("x", "y")
    M = ext_via_linkage(T, ["x", "y"], graded=False)
    assert hilbert(M).multiplicity == 1 and hilbert(M).dim == 2


def test_pd_examples():
    assert projective_dimension(I("x")) == 1
    F = build_L("L25", 4)
    E = ext_via_linkage(F.ideal, ["x^3", "y^3"])
    assert projective_dimension(E) >= 4


def test_presented_module_rejects_type():
    with pytest.raises(TypeError):
        betti_table(3)


@settings(max_examples=40)
@given(homogeneous_ideal_gens(R3, 3, 2), st.randoms(use_true_random=False))
def test_betti_invariant_under_permutation(gens, rnd):
    J = Ideal(R3, gens)
    if J.is_unit():
        return
    perm = list(gens)
    rnd.shuffle(perm)
    C, B = minimal_free_resolution(J)
    assert B == betti_table(Ideal(R3, perm))
    assert C.is_minimal() and is_complex(C)
    assert B.pd <= R3.nvars


@settings(max_examples=40)
@given(homogeneous_ideal_gens(R3, 3, 2))
def test_resolution_is_exact_by_linear_algebra(gens):
    J = Ideal(R3, gens)
    if J.is_unit():
        return
    C, _ = minimal_free_resolution(J)
    assert exactness_defects(C, J, 8) == []
    for d in range(0, 9):
        assert euler_slice(C, d) == dimension_slice(J, d)


def dimension_slice(J, d):
    from bigpd.oracles import hilbert_function

    return hilbert_function(J, d)


def test_betti_table_repr_and_structured():
    B = BettiTable({(0, 0): 1, (1, 2): 2, (2, 4): 1})
    assert B.ranks() == [1, 2, 1] and B.regularity == 2
    assert B.structured()[1] == {"i": 1, "j": 2, "beta": 2}
    assert BettiTable({}).format_dashes() == "(zero)"


def test_module_resolution_of_presented_module():
    x, y = R.var("x"), R.var("y")
    P = RingMatrix(R, [[x, y, R.zero], [R.zero, x, y]], [0, 0], [1, 1, 1])
    M = PresentedModule(R, P)
    C, B = minimal_free_resolution(M)
    assert C.ranks[0] == 2 and is_complex(C) and C.is_minimal()
    assert hilbert(M).dim == dimension(I("x", "y"))[0]
