from hypothesis import strategies as st

from pathhom.core import Digraph, PathComplex, VertexSet


@st.composite
def digraphs(draw, max_vertices=5, prefix=""):
    n = draw(st.integers(1, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    edges = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return Digraph(VertexSet([f"{prefix}{i}" for i in range(n)]), frozenset(edges))


@st.composite
def regular_paths(draw, n_vertices=4, min_len=1, max_len=5):
    length = draw(st.integers(min_len, max_len))
    path = [draw(st.integers(0, n_vertices - 1))]
    for _ in range(length - 1):
        path.append(draw(st.integers(0, n_vertices - 1).filter(lambda v, last=path[-1]: v != last)))
    return tuple(path)


def truncation_closure(paths):
    out = set()
    todo = list(paths)
    while todo:
        p = todo.pop()
        if p in out:
            continue
        out.add(p)
        if len(p) > 1:
            todo += [p[1:], p[:-1]]
    return out


@st.composite
def path_complexes(draw, n_vertices=4, max_len=4, max_paths=6):
    """Truncation closure of a few random regular paths (not necessarily from a digraph)."""
    seeds = draw(st.lists(regular_paths(n_vertices, 1, max_len), min_size=1, max_size=max_paths))
    closed = truncation_closure(seeds) | {(v,) for v in range(n_vertices)}
    return PathComplex.from_paths(VertexSet([str(i) for i in range(n_vertices)]), closed, regular=True)
