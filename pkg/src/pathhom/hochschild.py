"""Simplicial complexes, the cubical digraph, the containment algebra A_S
and truncated Hochschild (co)homology.

The Hochschild complexes are the plain bar-type ones, C_n = A^{(x)(n+1)}
and C^n = Hom(A^{(x)n}, A), so their dimensions grow like dim(A)^(n+1);
everything is checked against a budget before a matrix is assembled.
Ranks are taken over Q or Z/p only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .core import BudgetExceeded, Digraph, VertexSet, default_budget, path_complex_of_digraph
from .homology import (ComplexNotExact, FgAbelianGroup, HomologyResult, cohomology_of_complex,
                       homology_of_complex)
from .linalg import Q, RingSpec, SparseMatrix, Z, rank
from .omega import build_omega
from .realization import ComparisonReport, compare


class RingNotSupported(ValueError):
    pass


Simplex = Tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of vertex subsets, stored as sorted id tuples."""

    vertex_set: VertexSet
    simplices: FrozenSet[Simplex]

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[str]], vertices: Sequence[str] | None = None) -> "SimplicialComplex":
        facets = [tuple(str(v) for v in f) for f in facets]
        if vertices is None:
            seen: Dict[str, None] = {}
            for f in facets:
                for v in f:
                    seen.setdefault(v)
            vertices = list(seen)
        vs = VertexSet(vertices)
        simplices = set()
        for f in facets:
            ids = tuple(sorted(set(vs.index[v] for v in f)))
            if len(ids) != len(f):
                raise ValueError(f"facet {f} repeats a vertex")
            for k in range(1, len(ids) + 1):
                simplices.update(combinations(ids, k))
        for v in range(len(vs)):
            simplices.add((v,))
        return cls(vs, frozenset(simplices))

    def validate(self) -> List[str]:
        bad = []
        for s in self.simplices:
            if list(s) != sorted(set(s)):
                bad.append(f"simplex {s} not strictly sorted")
            for k in range(1, len(s)):
                for t in combinations(s, k):
                    if t not in self.simplices:
                        bad.append(f"{self.label(s)} missing face {self.label(t)}")
        return bad

    @property
    def dim(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def ordered(self) -> List[Simplex]:
        return sorted(self.simplices, key=lambda s: (len(s), s))

    def of_dim(self, n: int) -> List[Simplex]:
        return sorted(s for s in self.simplices if len(s) == n + 1)

    def label(self, s: Simplex) -> str:
        names = self.vertex_set.labels(s)
        return "".join(names) if all(len(x) == 1 for x in names) else "-".join(names)

    def facets(self) -> List[Simplex]:
        out = []
        for s in self.ordered():
            if not any(len(t) > len(s) and set(s) <= set(t) for t in self.simplices):
                out.append(s)
        return out

    def components(self) -> int:
        parent = list(range(len(self.vertex_set)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for s in self.simplices:
            for v in s[1:]:
                parent[find(v)] = find(s[0])
        return len({find(v) for v in range(len(self.vertex_set))})

    def boundary_matrices(self, top: int | None = None) -> List[SparseMatrix]:
        """Ordered simplicial chain complex [D_0, ..., D_top] over Z."""
        top = self.dim if top is None else top
        layers = [self.of_dim(n) for n in range(top + 1)]
        out = [SparseMatrix.zeros(0, len(layers[0]))]
        for n in range(1, top + 1):
            idx = {s: i for i, s in enumerate(layers[n - 1])}
            ent = {}
            for j, s in enumerate(layers[n]):
                for q in range(len(s)):
                    ent[(idx[s[:q] + s[q + 1:]], j)] = (-1) ** q
            out.append(SparseMatrix(len(layers[n - 1]), len(layers[n]), ent))
        return out


def simplicial_homology(s: SimplicialComplex, ring: RingSpec = Z, top: int | None = None) -> HomologyResult:
    top = s.dim if top is None else top
    D = s.boundary_matrices(top)
    return homology_of_complex(D, ring, truncated=top < s.dim)


def simplicial_cohomology(s: SimplicialComplex, ring: RingSpec = Z, top: int | None = None) -> HomologyResult:
    top = s.dim if top is None else top
    D = s.boundary_matrices(top)
    return cohomology_of_complex(D, ring, truncated=top < s.dim)


def cubical_digraph(s: SimplicialComplex) -> Digraph:
    """Vertices are simplices; an edge s -> t when t is a codimension-1 face of s."""
    order = s.ordered()
    vs = VertexSet([s.label(x) for x in order])
    idx = {x: i for i, x in enumerate(order)}
    edges = set()
    for x in order:
        for q in range(len(x)):
            t = x[:q] + x[q + 1:]
            if t:
                edges.add((idx[x], idx[t]))
    return Digraph(vs, frozenset(edges))


@dataclass(frozen=True)
class AssocAlgebra:
    """Algebra with a basis closed under multiplication up to zero.

    ``table[(i, j)] = k`` means b_i b_j = b_k; missing pairs multiply to 0.
    """

    basis: Tuple[str, ...]
    table: Dict[Tuple[int, int], int]
    unit: Optional[Dict[int, int]] = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def mul(self, x: Dict[int, int], y: Dict[int, int]) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for i, a in x.items():
            for j, b in y.items():
                k = self.table.get((i, j))
                if k is not None:
                    out[k] = out.get(k, 0) + a * b
        return {k: v for k, v in out.items() if v}

    def associativity_failures(self) -> List[Tuple[int, int, int]]:
        bad = []
        n = self.dim
        t = self.table
        for i in range(n):
            for j in range(n):
                ij = t.get((i, j))
                for k in range(n):
                    left = None if ij is None else t.get((ij, k))
                    jk = t.get((j, k))
                    right = None if jk is None else t.get((i, jk))
                    if left != right:
                        bad.append((i, j, k))
        return bad

    def unit_ok(self) -> bool:
        if self.unit is None:
            return False
        for b in range(self.dim):
            if self.mul(self.unit, {b: 1}) != {b: 1} or self.mul({b: 1}, self.unit) != {b: 1}:
                return False
        return True


def build_A_S(s: SimplicialComplex, ring: RingSpec = Q, reflexive: bool = True) -> AssocAlgebra:
    """Containment pairs (sigma, tau), sigma >= tau, with (s1,t1)(s2,t2) = (s1,t2) iff t1 = s2.

    With ``reflexive=False`` only strict containments are kept; that
    algebra has no unit (see :func:`find_unit`).
    """
    order = s.ordered()
    pairs = []
    for a in order:
        for b in order:
            if set(b) <= set(a) and (reflexive or a != b):
                pairs.append((a, b))
    idx = {p: i for i, p in enumerate(pairs)}
    table = {}
    for (s1, t1), i in idx.items():
        for (s2, t2), j in idx.items():
            if t1 == s2:
                table[(i, j)] = idx[(s1, t2)]
    labels = tuple(f"({s.label(a)},{s.label(b)})" for a, b in pairs)
    unit = {idx[(a, a)]: 1 for a in order} if reflexive else None
    return AssocAlgebra(labels, table, unit)


def point_algebra() -> AssocAlgebra:
    return AssocAlgebra(("1",), {(0, 0): 0}, {0: 1})


def find_unit(A: AssocAlgebra, ring: RingSpec = Q) -> Optional[Dict[int, object]]:
    """Solve u b = b u = b for all basis b; None when no unit exists."""
    _require_field(ring)
    n = A.dim
    # one equation per (b, side, output k) in unknowns u_0..u_{n-1}; column n is the rhs
    rows: List[Dict[int, object]] = []
    for b in range(n):
        for side in (0, 1):
            per_k: Dict[int, Dict[int, object]] = {k: {} for k in range(n)}
            for i in range(n):
                k = A.table.get((i, b) if side == 0 else (b, i))
                if k is not None:
                    per_k[k][i] = per_k[k].get(i, 0) + 1
            per_k[b][n] = 1
            rows.extend(per_k.values())
    pivots: Dict[int, Dict[int, object]] = {}
    for row in rows:
        v = {k: ring.coerce(x) for k, x in row.items() if ring.coerce(x)}
        for lead, p in sorted(pivots.items()):
            c = v.get(lead)
            if c:
                for k, x in p.items():
                    y = ring.coerce(v.get(k, 0) - c * x)
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
        if not v:
            continue
        lead = min(v)
        if lead == n:
            return None   # 0 = nonzero
        inv = ring.inv(v[lead])
        v = {k: ring.coerce(x * inv) for k, x in v.items()}
        for q, p in pivots.items():
            c = p.get(lead)
            if c:
                for k, x in v.items():
                    y = ring.coerce(p.get(k, 0) - c * x)
                    if y:
                        p[k] = y
                    else:
                        p.pop(k, None)
        pivots[lead] = v
    return {lead: p[n] for lead, p in sorted(pivots.items()) if p.get(n)}


def _check_budget(A: AssocAlgebra, max_deg: int, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    needed = A.dim ** (max_deg + 1)
    if needed > budget:
        raise BudgetExceeded(f"Hochschild complex up to degree {max_deg}", needed, budget)


def _require_field(ring: RingSpec) -> None:
    if not ring.is_field:
        raise RingNotSupported("Hochschild ranks are computed over Q or Z/p only")


def _encode(t: Sequence[int], d: int) -> int:
    x = 0
    for a in t:
        x = x * d + a
    return x


def chain_dimension(A: AssocAlgebra, n: int) -> int:
    return A.dim ** (n + 1)


def hochschild_differential(A: AssocAlgebra, n: int) -> SparseMatrix:
    """d_n : A^{(x)(n+1)} -> A^{(x)n} on basis tensors m (x) l_1 (x) ... (x) l_n."""
    d = A.dim
    rows, cols = d ** n, d ** (n + 1)
    assert cols == chain_dimension(A, n)
    if n == 0:
        return SparseMatrix.zeros(0, cols)
    t = A.table
    ent: Dict[Tuple[int, int], int] = {}

    def add(i, j, v):
        k = (i, j)
        s = ent.get(k, 0) + v
        if s:
            ent[k] = s
        else:
            ent.pop(k, None)

    for j, x in enumerate(product(range(d), repeat=n + 1)):
        m = t.get((x[0], x[1]))
        if m is not None:
            add(_encode((m,) + x[2:], d), j, 1)
        for i in range(1, n):
            p = t.get((x[i], x[i + 1]))
            if p is not None:
                add(_encode(x[:i] + (p,) + x[i + 2:], d), j, (-1) ** i)
        m = t.get((x[n], x[0]))
        if m is not None:
            add(_encode((m,) + x[1:n], d), j, (-1) ** n)
    return SparseMatrix(rows, cols, ent)


def hochschild_codifferential(A: AssocAlgebra, n: int) -> SparseMatrix:
    """delta^n : Hom(A^{(x)n}, A) -> Hom(A^{(x)(n+1)}, A).

    A cochain basis element E_{t,k} sends the basis tensor t to b_k and every
    other basis tensor to 0; it is indexed by encode(t + (k,)).
    """
    d = A.dim
    cols, rows = d ** (n + 1), d ** (n + 2)
    tb = A.table
    ent: Dict[Tuple[int, int], int] = {}

    def add(i, j, v):
        k = (i, j)
        s = ent.get(k, 0) + v
        if s:
            ent[k] = s
        else:
            ent.pop(k, None)

    for s in product(range(d), repeat=n + 1):
        # x_1 f(x_2, ..., x_{n+1})
        for k in range(d):
            r = tb.get((s[0], k))
            if r is not None:
                add(_encode(s + (r,), d), _encode(s[1:] + (k,), d), 1)
        # sum_i (-1)^i f(..., x_i x_{i+1}, ...)
        for i in range(1, n + 1):
            p = tb.get((s[i - 1], s[i]))
            if p is not None:
                t = s[:i - 1] + (p,) + s[i + 1:]
                for k in range(d):
                    add(_encode(s + (k,), d), _encode(t + (k,), d), (-1) ** i)
        # (-1)^{n+1} f(x_1, ..., x_n) x_{n+1}
        for k in range(d):
            r = tb.get((k, s[n]))
            if r is not None:
                add(_encode(s + (r,), d), _encode(s[:n] + (k,), d), (-1) ** (n + 1))
    return SparseMatrix(rows, cols, ent)


def hochschild_homology(A: AssocAlgebra, max_deg: int, ring: RingSpec = Q, budget: int | None = None) -> HomologyResult:
    """HH_0..HH_max_deg; the top degree is flagged truncated."""
    _require_field(ring)
    _check_budget(A, max_deg, budget)
    D = [hochschild_differential(A, n) for n in range(max_deg + 1)]
    return homology_of_complex(D, ring, truncated=True)


def hochschild_cohomology(A: AssocAlgebra, max_deg: int, ring: RingSpec = Q, budget: int | None = None) -> HomologyResult:
    """HH^0..HH^max_deg; delta^max_deg is never built so the top degree is truncated."""
    _require_field(ring)
    _check_budget(A, max_deg, budget)
    deltas = [hochschild_codifferential(A, n).over(ring) for n in range(max_deg)]
    for n in range(len(deltas) - 1):
        if not (deltas[n + 1] @ deltas[n]).over(ring).is_zero():
            raise ComplexNotExact(f"delta^{n + 1} delta^{n} != 0")
    ranks = [rank(m, ring) for m in deltas]
    groups = {}
    for n in range(max_deg + 1):
        c = A.dim ** (n + 1) if n > 0 else A.dim
        r_out = ranks[n] if n < len(ranks) else 0
        r_in = ranks[n - 1] if n >= 1 else 0
        groups[n] = FgAbelianGroup(c - r_out - r_in)
    return HomologyResult(ring, groups, max_deg, cohomology=True)


def center_dimension(A: AssocAlgebra, ring: RingSpec = Q) -> int:
    """dim {x : x b = b x for every basis b}."""
    n = A.dim
    ent: Dict[Tuple[int, int], int] = {}
    for b in range(n):
        for i in range(n):
            for k, sgn in ((A.table.get((i, b)), 1), (A.table.get((b, i)), -1)):
                if k is not None:
                    key = (b * n + k, i)
                    ent[key] = ent.get(key, 0) + sgn
    m = SparseMatrix(n * n, n, {k: v for k, v in ent.items() if v})
    return n - rank(m, ring)


def commutator_quotient_dimension(A: AssocAlgebra, ring: RingSpec = Q) -> int:
    """dim A / [A, A]."""
    n = A.dim
    ent: Dict[Tuple[int, int], int] = {}
    col = 0
    for i in range(n):
        for j in range(i + 1, n):
            for k, sgn in ((A.table.get((i, j)), 1), (A.table.get((j, i)), -1)):
                if k is not None:
                    ent[(k, col)] = ent.get((k, col), 0) + sgn
            col += 1
    m = SparseMatrix(n, max(col, 1) if col else 0, {k: v for k, v in ent.items() if v})
    return n - rank(m, ring)


def path_side(s: SimplicialComplex, ring: RingSpec, top: int) -> Tuple[HomologyResult, HomologyResult]:
    """Path homology and cohomology of P(G_S) in degrees 0..top (top exact)."""
    g = cubical_digraph(s)
    pc = path_complex_of_digraph(g, top + 1)
    ocR = build_omega(pc, ring, top + 1)
    ocZ = ocR if ring.kind == "Z" else build_omega(pc, Z, top + 1)
    return (homology_of_complex(ocR.boundaries(), ring, ocR.truncated),
            cohomology_of_complex(ocZ.boundaries(), ring, ocZ.truncated))


def verify_cubical_route(s: SimplicialComplex, ring: RingSpec = Z, top: int | None = None) -> ComparisonReport:
    """Simplicial (co)homology of S against path (co)homology of P(G_S)."""
    top = s.dim if top is None else top
    sh = simplicial_homology(s, ring, top + 1)
    sc = simplicial_cohomology(s, ring, top + 1)
    ph, pco = path_side(s, ring, top)
    return compare(ring, list(range(top + 1)),
                   {"path_homology": sh, "path_cohomology": sc},
                   {"path_homology": ph, "path_cohomology": pco})


def verify_hochschild_comparison(s: SimplicialComplex, ring: RingSpec = Q, max_deg: int = 3,
                                 budget: int | None = None) -> ComparisonReport:
    """Simplicial vs path vs Hochschild (co)homology in degrees 0..max_deg-1."""
    _require_field(ring)
    A = build_A_S(s, ring)
    _check_budget(A, max_deg, budget)
    top = max_deg - 1
    sh = simplicial_homology(s, ring, max(top + 1, 0))
    sc = simplicial_cohomology(s, ring, max(top + 1, 0))
    ph, pco = path_side(s, ring, top)
    hh = hochschild_homology(A, max_deg, ring, budget)
    hc = hochschild_cohomology(A, max_deg, ring, budget)
    left = {"path_homology": sh, "path_cohomology": sc, "HH_homology": sh, "HH_cohomology": sc}
    right = {"path_homology": ph, "path_cohomology": pco, "HH_homology": hh, "HH_cohomology": hc}
    notes = [f"dim A_S = {A.dim}", f"HH_0 via A/[A,A] = {commutator_quotient_dimension(A, ring)}",
             f"HH^0 via centre = {center_dimension(A, ring)}"]
    return compare(ring, list(range(max_deg)), left, right, notes=notes)
