import pytest
from hypothesis import assume, given, settings, strategies as st

from pathhom.core import Digraph, path_complex_of_digraph
from pathhom.homology import (ComplexNotExact, FgAbelianGroup, TRIVIAL, ZZ, cohomology_of_complex,
                              euler_characteristic, homology_of_complex, reduced_homology, tensor, tor,
                              uct_cohomology, uct_homology_mod_p)
from pathhom.linalg import Q, SparseMatrix, Z, Zp
from pathhom.omega import build_omega

from oracles import dense_smith
from strategies import digraphs

groups = st.builds(lambda r, cyc: FgAbelianGroup.of(r, cyc),
                   st.integers(0, 2), st.lists(st.integers(2, 12), max_size=2))


def presentation(g: FgAbelianGroup):
    """(generators, relation columns as dense rows)."""
    n = g.rank + len(g.torsion)
    rel = [[0] * len(g.torsion) for _ in range(n)]
    for k, d in enumerate(g.torsion):
        rel[g.rank + k][k] = d
    return n, rel


def group_from_presentation(n, rel_rows):
    if not rel_rows or not rel_rows[0]:
        return FgAbelianGroup(n)
    inv = dense_smith(rel_rows)
    return FgAbelianGroup.of(n - len(inv), inv)


def tensor_oracle(a, b):
    na, ra = presentation(a)
    nb, rb = presentation(b)
    # relations of A (x) B: (R_A (x) I) and (I (x) R_B)
    rows = []
    for i in range(na):
        for j in range(nb):
            row = []
            for c in range(len(ra[0]) if ra else 0):
                for jj in range(nb):
                    row.append(ra[i][c] if jj == j else 0)
            for ii in range(na):
                for c in range(len(rb[0]) if rb else 0):
                    row.append(rb[j][c] if ii == i else 0)
            rows.append(row)
    return group_from_presentation(na * nb, rows)


def test_group_normalisation_and_printing():
    g = FgAbelianGroup.of(1, [2, 3, 1, 0])
    assert g == FgAbelianGroup(2, (6,))
    assert str(g) == "Z^2 + Z/6"
    assert str(TRIVIAL) == "0"
    assert FgAbelianGroup.of(0, [2, 4]).describe(Zp(2)) == "0"
    with pytest.raises(ValueError):
        FgAbelianGroup(0, (4, 2))


@settings(max_examples=100, deadline=None)
@given(groups, groups)
def test_tensor_matches_presentation_oracle(a, b):
    assert tensor(a, b) == tensor_oracle(a, b)


@settings(max_examples=100, deadline=None)
@given(groups, groups)
def test_tor_is_tensor_of_torsion_parts(a, b):
    ta, tb = FgAbelianGroup(0, a.torsion), FgAbelianGroup(0, b.torsion)
    assert tor(a, b) == tensor_oracle(ta, tb)
    assert tor(a, ZZ) == TRIVIAL


def test_circle_complex():
    # two vertices, two edges both a -> b: H_0 = Z, H_1 = Z
    d1 = SparseMatrix.from_dense([[-1, -1], [1, 1]])
    h = homology_of_complex([SparseMatrix.zeros(0, 2), d1], Z)
    assert (h[0], h[1]) == (ZZ, ZZ)
    assert h.format() == "H_0 = Z, H_1 = Z"


def test_projective_plane_style_torsion():
    # one cell per dimension with d_2 = 2: H_1 = Z/2, H^2 = Z/2
    D = [SparseMatrix.zeros(0, 1), SparseMatrix.zeros(1, 1), SparseMatrix.from_dense([[2]])]
    h = homology_of_complex(D, Z)
    c = cohomology_of_complex(D, Z)
    assert h[1] == FgAbelianGroup(0, (2,)) and h[2] == TRIVIAL
    assert c[1] == TRIVIAL and c[2] == FgAbelianGroup(0, (2,))
    assert homology_of_complex(D, Zp(2))[2] == FgAbelianGroup(1)


def test_non_complex_rejected():
    D = [SparseMatrix.zeros(0, 1), SparseMatrix.from_dense([[1]]), SparseMatrix.from_dense([[1]])]
    with pytest.raises(ComplexNotExact):
        homology_of_complex(D, Z)


def test_reduced_homology_of_point_vanishes():
    h = reduced_homology([SparseMatrix.zeros(0, 1)], Z)
    assert h.degrees == [-1, 0]
    assert all(h[n].is_trivial for n in h.degrees)


def test_truncation_flag():
    pc = path_complex_of_digraph(Digraph.from_labels([("0", "1"), ("1", "2"), ("2", "0")]), 3)
    oc = build_omega(pc, Z, 2)
    h = homology_of_complex(oc.boundaries(), Z, oc.truncated)
    assert h.format() == "H_0 = Z, H_1 = Z, H_2 = 0 (truncated)"
    assert h.exact_degrees() == [0, 1]


@settings(max_examples=60, deadline=None)
@given(digraphs(5))
def test_universal_coefficients(g):
    pc = path_complex_of_digraph(g, 4)
    oc = build_omega(pc, Z, 3)
    D = oc.boundaries()
    hz = homology_of_complex(D, Z, oc.truncated)
    hc = cohomology_of_complex(D, Z, oc.truncated)
    exact = [n for n in hz.exact_degrees()]
    uct = uct_cohomology(hz)
    for n in exact:
        assert hc[n] == uct[n]
    for p in (2, 3):
        op = build_omega(pc, Zp(p), 3)
        hp = homology_of_complex(op.boundaries(), Zp(p), op.truncated)
        mod = uct_homology_mod_p(hz, p)
        for n in exact:
            # only valid where the Z_p complex is the reduction of the Z complex
            if op.ranks[: n + 2] == oc.ranks[: n + 2]:
                assert hp[n].rank == mod[n]
    assert [hz[n].rank for n in exact] == [homology_of_complex(build_omega(pc, Q, 3).boundaries(), Q)[n].rank for n in exact]


@settings(max_examples=40, deadline=None)
@given(digraphs(4))
def test_euler_characteristic(g):
    pc = path_complex_of_digraph(g, 3)
    assume(not pc.P(4))
    oc = build_omega(pc, Q, 3)
    h = homology_of_complex(oc.boundaries(), Q)
    assert euler_characteristic(oc.ranks) == euler_characteristic(h.betti())
