"""Vertices, elementary paths, path complexes and digraphs.

Paths are plain tuples of dense integer vertex ids; labels only matter at
the edges of the program (parsing and printing).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

Path = Tuple[int, ...]

DEFAULT_BUDGET = 300_000


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(f"{what}: needs {needed} elements, budget is {budget}")
        self.needed = needed
        self.budget = budget


def default_budget() -> int:
    env = os.environ.get("PATHHOM_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class VertexSet:
    """Ordered set of distinct, non-empty string labels."""

    __slots__ = ("names", "index")

    def __init__(self, names: Iterable[str]):
        names = [str(n) for n in names]
        index: Dict[str, int] = {}
        for n in names:
            if not n:
                raise ValueError("vertex labels must be non-empty")
            if n in index:
                raise ValueError(f"duplicate vertex label {n!r}")
            index[n] = len(index)
        self.names: Tuple[str, ...] = tuple(names)
        self.index = index

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, label) -> bool:
        return label in self.index

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexSet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VertexSet({list(self.names)!r})"

    def ids(self, labels: Sequence[str]) -> Path:
        return tuple(self.index[l] for l in labels)

    def labels(self, path: Sequence[int]) -> Tuple[str, ...]:
        return tuple(self.names[i] for i in path)


def is_regular(path: Sequence) -> bool:
    return all(a != b for a, b in zip(path, path[1:]))


def dim(path: Sequence) -> int:
    return len(path) - 1


def boundary_faces(path: Path) -> List[Tuple[int, Path]]:
    """Signed faces of the alternating-sum boundary, non-regular ones included."""
    if len(path) < 2:
        raise ValueError("boundary_faces needs a path of dimension >= 1")
    return [((-1) ** q, path[:q] + path[q + 1:]) for q in range(len(path))]


@dataclass(frozen=True)
class PathComplex:
    """Dimension-graded sets of elementary paths over a vertex set.

    ``paths[n]`` is stored sorted lexicographically on id tuples; matrix bases
    downstream inherit this order.  Construction does not validate; call
    :func:`validate_path_complex` for that.
    """

    vertex_set: VertexSet
    paths: Tuple[Tuple[Path, ...], ...]
    regular: bool = True

    @classmethod
    def from_paths(cls, vertex_set: VertexSet, paths: Iterable[Sequence[int]], regular: bool = True) -> "PathComplex":
        by_dim: Dict[int, set] = {}
        for p in paths:
            p = tuple(p)
            by_dim.setdefault(len(p) - 1, set()).add(p)
        top = max(by_dim, default=-1)
        return cls(vertex_set, tuple(tuple(sorted(by_dim.get(n, ()))) for n in range(top + 1)), regular)

    @classmethod
    def from_labels(cls, paths: Iterable[Sequence[str]], vertices: Sequence[str] | None = None) -> "PathComplex":
        paths = [tuple(str(x) for x in p) for p in paths]
        if vertices is None:
            seen: Dict[str, None] = {}
            for p in paths:
                for v in p:
                    seen.setdefault(v)
            vertices = list(seen)
        vs = VertexSet(vertices)
        return cls.from_paths(vs, [vs.ids(p) for p in paths])

    @property
    def top(self) -> int:
        """Largest n with P_n non-empty (-1 for the empty complex)."""
        n = len(self.paths) - 1
        while n >= 0 and not self.paths[n]:
            n -= 1
        return n

    def P(self, n: int) -> Tuple[Path, ...]:
        if 0 <= n < len(self.paths):
            return self.paths[n]
        return ()

    def all_paths(self) -> List[Path]:
        return [p for layer in self.paths for p in layer]

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(p for layer in self.paths for p in layer)

    def __contains__(self, path) -> bool:
        return tuple(path) in self._members

    def counts(self) -> List[int]:
        return [len(self.P(n)) for n in range(self.top + 1)]

    def label(self, path: Sequence[int], sep: str = "") -> str:
        return sep.join(self.vertex_set.labels(path))


@dataclass
class ValidationReport:
    violations: List[str] = field(default_factory=list)

    def __bool__(self) -> bool:  # truthy when valid
        return not self.violations

    @property
    def ok(self) -> bool:
        return not self.violations


def _fmt(vs: VertexSet, p: Sequence[int]) -> str:
    labels = vs.labels(p)
    return "".join(labels) if all(len(l) == 1 for l in labels) else "-".join(labels)


def validate_path_complex(pc: PathComplex) -> ValidationReport:
    """Report truncation-closure and regularity violations (never raises)."""
    rep = ValidationReport()
    vs = pc.vertex_set
    n_vertices = len(vs)
    if not pc.P(0):
        rep.violations.append("P_0 is empty")
    for n, layer in enumerate(pc.paths):
        for p in layer:
            if len(p) != n + 1:
                rep.violations.append(f"path {p} stored at dim {n}")
                continue
            bad = [v for v in p if not (0 <= v < n_vertices)]
            if bad:
                rep.violations.append(f"path {p} uses unknown vertex ids {bad}")
                continue
            if pc.regular and not is_regular(p):
                rep.violations.append(f"{_fmt(vs, p)} is not regular")
            if n >= 1:
                for t in (p[:-1], p[1:]):
                    if t not in pc:
                        rep.violations.append(f"{_fmt(vs, p)} requires {_fmt(vs, t)} at dim {n - 1}")
    return rep


@dataclass(frozen=True)
class Digraph:
    vertex_set: VertexSet
    edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {self.vertex_set.names[u]!r}")
            if not (0 <= u < len(self.vertex_set) and 0 <= v < len(self.vertex_set)):
                raise ValueError(f"edge ({u}, {v}) out of range")

    @classmethod
    def from_labels(cls, edges: Iterable[Tuple[str, str]], vertices: Sequence[str] | None = None) -> "Digraph":
        edges = [(str(a), str(b)) for a, b in edges]
        if vertices is None:
            seen: Dict[str, None] = {}
            for a, b in edges:
                seen.setdefault(a)
                seen.setdefault(b)
            vertices = list(seen)
        vs = VertexSet(vertices)
        return cls(vs, frozenset((vs.index[a], vs.index[b]) for a, b in edges))

    def successors(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in self.vertex_set.names]
        for u, v in sorted(self.edges):
            out[u].append(v)
        return out

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)


def path_complex_of_digraph(g: Digraph, max_dim: int | None = None, budget: int | None = None) -> PathComplex:
    """All directed walks with at most ``max_dim`` edges.

    ``max_dim`` defaults to |V| - 1.  The total number of stored paths is
    capped by ``budget`` since walk counts grow exponentially.
    """
    if max_dim is None:
        max_dim = max(len(g.vertex_set) - 1, 0)
    if max_dim < 0:
        raise ValueError("max_dim must be >= 0")
    budget = default_budget() if budget is None else budget
    succ = g.successors()
    layers: List[List[Path]] = [[(v,) for v in range(len(g.vertex_set))]]
    total = len(layers[0])
    for _ in range(max_dim):
        nxt = [p + (w,) for p in layers[-1] for w in succ[p[-1]]]
        if not nxt:
            break
        total += len(nxt)
        if total > budget:
            raise BudgetExceeded("digraph path expansion", total, budget)
        layers.append(nxt)
    return PathComplex(g.vertex_set, tuple(tuple(sorted(l)) for l in layers), True)


def paths_by_label(pc: PathComplex, n: int, sep: str = "") -> List[str]:
    return [pc.label(p, sep) for p in pc.P(n)]


def relabel(pc: PathComplex, mapping: Mapping[str, str]) -> PathComplex:
    vs = VertexSet([mapping.get(n, n) for n in pc.vertex_set.names])
    return PathComplex(vs, pc.paths, pc.regular)


def random_digraph(rng, max_vertices: int = 6, density: float = 0.3, prefix: str = "") -> Digraph:
    """|V| uniform in 1..max_vertices; each ordered pair u != v is an edge with probability ``density``."""
    n = rng.randint(1, max_vertices)
    names = [f"{prefix}{i}" for i in range(n)]
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < density]
    return Digraph(VertexSet(names), frozenset(edges))
