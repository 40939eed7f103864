import random

import pytest
from hypothesis import given, settings, strategies as st

from pathhom.core import (BudgetExceeded, Digraph, PathComplex, VertexSet, boundary_faces, is_regular,
                          path_complex_of_digraph, paths_by_label, random_digraph, validate_path_complex)
from pathhom.io import read_structure
from pathhom.omega import regular_boundary

from conftest import DATA
from strategies import digraphs, regular_paths

FIGURE1_TWO_PATHS = ["012", "034", "035", "045", "078", "345", "678"]


def test_vertex_set_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        VertexSet(["a", "a"])
    with pytest.raises(ValueError):
        VertexSet([""])
    vs = VertexSet(["x", "y"])
    assert vs.ids(["y", "x"]) == (1, 0)


def test_boundary_faces_examples():
    assert boundary_faces((0, 1, 2)) == [(1, (1, 2)), (-1, (0, 2)), (1, (0, 1))]
    assert boundary_faces((0, 1)) == [(1, (1,)), (-1, (0,))]
    a, b = 0, 1
    assert boundary_faces((a, b, a)) == [(1, (b, a)), (-1, (a, a)), (1, (a, b))]


def test_smallest_closed_complex_is_valid():
    assert validate_path_complex(PathComplex.from_labels([["0"], ["1"], ["0", "1"]])).ok


def test_missing_truncation_reported():
    pc = PathComplex.from_labels([["0"], ["1"], ["2"], ["1", "2"], ["0", "1", "2"]], ["0", "1", "2"])
    rep = validate_path_complex(pc)
    assert rep.violations == ["012 requires 01 at dim 1"]


def test_non_regular_reported():
    pc = PathComplex.from_paths(VertexSet(["a"]), [(0,), (0, 0)], regular=True)
    assert "aa is not regular" in validate_path_complex(pc).violations


def test_nine_vertex_listing():
    g = read_structure(str(DATA / "nine_vertex.dg"))
    pc = path_complex_of_digraph(g, 3)
    assert pc.counts() == [9, 14, 7, 1]
    assert paths_by_label(pc, 2) == FIGURE1_TWO_PATHS
    assert paths_by_label(pc, 3) == ["0345"]
    assert validate_path_complex(pc).ok


def test_single_vertex_and_three_cycle():
    pc = path_complex_of_digraph(Digraph.from_labels([], ["v"]), 5)
    assert pc.counts() == [1]
    cyc = path_complex_of_digraph(Digraph.from_labels([("0", "1"), ("1", "2"), ("2", "0")]), 2)
    assert paths_by_label(cyc, 2) == ["012", "120", "201"]


def test_self_loop_rejected():
    with pytest.raises(ValueError):
        Digraph.from_labels([("a", "a")])


def test_expansion_budget():
    g = Digraph.from_labels([(a, b) for a in "abcd" for b in "abcd" if a != b])
    with pytest.raises(BudgetExceeded):
        path_complex_of_digraph(g, 10, budget=1000)


def test_random_digraph_is_seeded():
    a = random_digraph(random.Random(5))
    b = random_digraph(random.Random(5))
    assert a == b


@settings(max_examples=200, deadline=None)
@given(regular_paths(4, 2, 7))
def test_boundary_faces_shape(path):
    faces = boundary_faces(path)
    assert len(faces) == len(path)
    assert [s for s, _ in faces] == [(-1) ** q for q in range(len(path))]


@settings(max_examples=200, deadline=None)
@given(regular_paths(4, 3, 7))
def test_regular_boundary_squares_to_zero(path):
    assert regular_boundary(regular_boundary({path: 1})) == {}


@settings(max_examples=80, deadline=None)
@given(digraphs(5), st.integers(0, 4))
def test_digraph_complexes_are_valid(g, max_dim):
    pc = path_complex_of_digraph(g, max_dim)
    assert validate_path_complex(pc).ok
    assert all(is_regular(p) for p in pc.all_paths())
    assert pc.counts()[1:2] in ([], [len(g.edges)])
