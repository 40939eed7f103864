import pytest
from hypothesis import given, settings, strategies as st

from pathhom.core import BudgetExceeded
from pathhom.homology import FgAbelianGroup
from pathhom.hochschild import (AssocAlgebra, RingNotSupported, SimplicialComplex, build_A_S, center_dimension,
                                chain_dimension, commutator_quotient_dimension, cubical_digraph, find_unit,
                                hochschild_codifferential, hochschild_cohomology, hochschild_differential,
                                hochschild_homology, point_algebra, simplicial_cohomology, simplicial_homology,
                                verify_cubical_route, verify_hochschild_comparison)
from pathhom.linalg import Q, Z, Zp

POINT = SimplicialComplex.from_facets([["p"]])
EDGE = SimplicialComplex.from_facets([["a", "b"]])
CIRCLE = SimplicialComplex.from_facets([["a", "b"], ["b", "c"], ["a", "c"]])
SPHERE = SimplicialComplex.from_facets([list(f) for f in ("abc", "abd", "acd", "bcd")])
RP2 = SimplicialComplex.from_facets([list(f) for f in "124 126 135 136 145 234 235 256 346 456".split()])
FIG7 = SimplicialComplex.from_facets([["a", "b", "c"], ["c", "d"], ["e"]])


@st.composite
def simplicial_complexes(draw, n_vertices=4):
    facets = draw(st.lists(st.sets(st.integers(0, n_vertices - 1), min_size=1, max_size=3), min_size=1, max_size=4))
    return SimplicialComplex.from_facets([[str(v) for v in sorted(f)] for f in facets])


def test_closure_and_validation():
    assert len(CIRCLE.simplices) == 6
    assert SPHERE.validate() == []
    assert RP2.dim == 2 and len(RP2.of_dim(1)) == 15


def test_simplicial_homology_of_rp2():
    h = simplicial_homology(RP2, Z)
    assert (h[0], h[1], h[2]) == (FgAbelianGroup(1), FgAbelianGroup(0, (2,)), FgAbelianGroup(0))
    assert simplicial_cohomology(RP2, Z)[2] == FgAbelianGroup(0, (2,))
    assert simplicial_homology(RP2, Zp(2))[1].rank == 1


def test_cubical_digraph_counts():
    g = cubical_digraph(EDGE)
    assert len(g.vertex_set) == 3
    assert sorted((g.vertex_set.names[a], g.vertex_set.names[b]) for a, b in g.edges) == [("ab", "a"), ("ab", "b")]
    g = cubical_digraph(SPHERE)
    assert (len(g.vertex_set), len(g.edges)) == (14, 24)
    g = cubical_digraph(FIG7)
    succ = g.successors()
    assert len(succ[g.vertex_set.index["abc"]]) == 3
    assert succ[g.vertex_set.index["e"]] == []


@pytest.mark.parametrize("s", [EDGE, CIRCLE, SPHERE, RP2], ids=["edge", "circle", "sphere", "rp2"])
def test_cubical_route_over_Z(s):
    rep = verify_cubical_route(s, Z)
    assert rep.ok, rep.mismatches()


def test_algebra_dimensions():
    assert build_A_S(POINT).dim == 1
    edge = build_A_S(EDGE)
    assert edge.dim == 5
    assert set(edge.basis) == {"(a,a)", "(b,b)", "(ab,ab)", "(ab,a)", "(ab,b)"}
    assert build_A_S(CIRCLE).dim == 12


@pytest.mark.parametrize("s", [POINT, EDGE, CIRCLE, FIG7], ids=["point", "edge", "circle", "fig7"])
def test_algebra_axioms(s):
    A = build_A_S(s)
    assert A.associativity_failures() == []
    assert A.unit_ok()
    assert find_unit(A) == {k: 1 for k in A.unit}


def test_strict_containment_has_no_unit():
    for s in (EDGE, CIRCLE):
        A = build_A_S(s, reflexive=False)
        assert A.associativity_failures() == []
        assert not A.unit_ok()
        assert find_unit(A) is None


def test_point_algebra_hochschild():
    A = point_algebra()
    hh = hochschild_homology(A, 3)
    hc = hochschild_cohomology(A, 3)
    assert [hh[n].rank for n in range(3)] == [1, 0, 0]
    assert hh.truncated_at == 3
    assert [hc[n].rank for n in range(3)] == [1, 0, 0]


def test_chain_dimensions():
    A = build_A_S(EDGE)
    for n in range(4):
        m = hochschild_differential(A, n)
        assert m.cols == chain_dimension(A, n) == 5 ** (n + 1)


@pytest.mark.parametrize("s", [EDGE, CIRCLE], ids=["edge", "circle"])
def test_differentials_square_to_zero(s):
    A = build_A_S(s)
    for n in range(1, 3):
        assert (hochschild_differential(A, n) @ hochschild_differential(A, n + 1)).over(Q).is_zero()
    for n in range(2):
        assert (hochschild_codifferential(A, n + 1) @ hochschild_codifferential(A, n)).over(Q).is_zero()


def test_hh0_is_commutator_quotient_and_counts_simplices():
    # A_S is the incidence algebra of the face poset: its off-diagonal basis
    # elements are commutators, so A/[A,A] is spanned by the idempotents.
    for s in (POINT, EDGE, CIRCLE):
        A = build_A_S(s)
        hh = hochschild_homology(A, 2)
        assert hh[0].rank == commutator_quotient_dimension(A) == len(s.simplices)


def test_hh_upper_degrees_vanish_for_edge():
    hh = hochschild_homology(build_A_S(EDGE), 3)
    assert [hh[n].rank for n in (1, 2)] == [0, 0]


@pytest.mark.parametrize("s", [POINT, EDGE, CIRCLE, FIG7], ids=["point", "edge", "circle", "fig7"])
def test_hh0_cohomology_is_centre_and_components(s):
    A = build_A_S(s)
    hc = hochschild_cohomology(A, 1)
    assert hc[0].rank == center_dimension(A) == s.components()


def test_cohomology_comparison_circle():
    rep = verify_hochschild_comparison(CIRCLE, Q, 3)
    for kind in ("path_homology", "path_cohomology", "HH_cohomology"):
        assert all(rep.equal[kind].values()), kind
    assert rep.right["HH_cohomology"][1].rank == 1


def test_budget_and_ring_errors():
    A = build_A_S(SPHERE)
    with pytest.raises(BudgetExceeded) as exc:
        hochschild_homology(A, 3)
    assert exc.value.needed == A.dim ** 4
    with pytest.raises(BudgetExceeded):
        hochschild_homology(build_A_S(EDGE), 3, budget=100)
    with pytest.raises(RingNotSupported):
        hochschild_homology(build_A_S(EDGE), 1, Z)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("PATHHOM_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        hochschild_cohomology(build_A_S(EDGE), 1)


@settings(max_examples=30, deadline=None)
@given(simplicial_complexes())
def test_random_complexes(s):
    assert s.validate() == []
    A = build_A_S(s)
    assert A.associativity_failures() == []
    assert A.unit_ok()
    assert center_dimension(A) == s.components()
    rep = verify_cubical_route(s, Z)
    assert rep.ok, rep.mismatches()


@settings(max_examples=15, deadline=None)
@given(simplicial_complexes(3))
def test_hochschild_cohomology_matches_simplicial(s):
    A = build_A_S(s)
    if A.dim ** 3 > 300_000:
        return
    hc = hochschild_cohomology(A, 2, Q)
    sc = simplicial_cohomology(s, Q, 2)
    assert [hc[n].rank for n in (0, 1)] == [sc[n].rank for n in (0, 1)]
