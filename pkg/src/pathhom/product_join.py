"""Cartesian product and join of path complexes, and Kunneth checks.

Product vertices are pairs (x, y) encoded as the integer x * |Y| + y and
labelled ``"x|y"``.  A stair path through the m x n grid is a word over
{"H", "V"}; its area counts grid squares under it and fixes the sign of
the corresponding term in the cross product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, List, Sequence, Tuple

from .core import Path, PathComplex, VertexSet, is_regular
from .homology import (FgAbelianGroup, HomologyResult, TRIVIAL, direct_sum, homology_of_complex,
                       reduced_homology, tensor, tor)
from .linalg import RingSpec, Z
from .omega import Chain, build_omega

H, V = "H", "V"


class NonDisjointVertices(ValueError):
    pass


class RingNotPID(ValueError):
    pass


@dataclass(frozen=True)
class StairPath:
    steps: Tuple[str, ...]

    @property
    def area(self) -> int:
        j = 0
        a = 0
        for s in self.steps:
            if s == H:
                a += j
            else:
                j += 1
        return a

    def grid_points(self) -> List[Tuple[int, int]]:
        i = j = 0
        pts = [(0, 0)]
        for s in self.steps:
            if s == H:
                i += 1
            else:
                j += 1
            pts.append((i, j))
        return pts


def stair_paths(m: int, n: int) -> Iterator[StairPath]:
    """All C(m+n, m) monotone grid paths from (0,0) to (m,n)."""
    for hs in combinations(range(m + n), m):
        hs = set(hs)
        yield StairPath(tuple(H if k in hs else V for k in range(m + n)))


def pair_id(x: int, y: int, ny: int) -> int:
    return x * ny + y


def cross_product_paths(ex: Path, ey: Path, ny: int) -> Chain:
    """e_x x e_y = sum over stair paths of (-1)^area e_sigma, on product ids."""
    m, n = len(ex) - 1, len(ey) - 1
    out: Chain = {}
    for sigma in stair_paths(m, n):
        path = tuple(pair_id(ex[i], ey[j], ny) for i, j in sigma.grid_points())
        out[path] = out.get(path, 0) + (-1) ** sigma.area
    return {p: c for p, c in out.items() if c}


def cross_product(u: Chain, v: Chain, ny: int) -> Chain:
    """Bilinear extension of the elementary cross product."""
    out: Chain = {}
    for ex, a in u.items():
        for ey, b in v.items():
            for p, c in cross_product_paths(ex, ey, ny).items():
                val = out.get(p, 0) + a * b * c
                if val:
                    out[p] = val
                else:
                    out.pop(p, None)
    return out


def product_vertex_set(vx: VertexSet, vy: VertexSet, sep: str = "|") -> VertexSet:
    return VertexSet([f"{x}{sep}{y}" for x in vx.names for y in vy.names])


def cartesian_product(px: PathComplex, py: PathComplex, sep: str = "|") -> PathComplex:
    vs = product_vertex_set(px.vertex_set, py.vertex_set, sep)
    ny = len(py.vertex_set)
    paths = set()
    for ex in px.all_paths():
        for ey in py.all_paths():
            paths.update(cross_product_paths(ex, ey, ny))
    return PathComplex.from_paths(vs, paths, regular=True)


def join(px: PathComplex, py: PathComplex) -> PathComplex:
    """All concatenations uv together with u and v on their own."""
    ax, ay = px.vertex_set.names, py.vertex_set.names
    common = set(ax) & set(ay)
    if common:
        raise NonDisjointVertices(f"join needs disjoint vertex sets; shared: {sorted(common)}")
    vs = VertexSet(list(ax) + list(ay))
    off = len(ax)
    ys = [tuple(v + off for v in q) for q in py.all_paths()]
    paths = set(px.all_paths()) | set(ys)
    for u in px.all_paths():
        for w in ys:
            paths.add(u + w)
    return PathComplex.from_paths(vs, paths, regular=px.regular and py.regular)


def _kunneth_sum(hx: HomologyResult, hy: HomologyResult, n: int, shift: int, lo: int) -> FgAbelianGroup:
    """sum_{p+q = n-shift} Hx_p (x) Hy_q  +  sum_{p+q = n-shift-1} Tor(Hx_p, Hy_q)."""
    terms = []
    for p in range(lo, n - shift - lo + 1):
        terms.append(tensor(hx[p], hy[n - shift - p]))
    for p in range(lo, n - shift - 1 - lo + 1):
        terms.append(tor(hx[p], hy[n - shift - 1 - p]))
    return direct_sum(terms)


@dataclass
class KunnethReport:
    mode: str
    ring: RingSpec
    degrees: List[int]
    lhs: Dict[int, FgAbelianGroup]
    rhs: Dict[int, FgAbelianGroup]
    rank_identity: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    tor_nonzero: bool = False
    direct: HomologyResult | None = None

    @property
    def equal(self) -> Dict[int, bool]:
        return {n: self.lhs[n] == self.rhs[n] for n in self.degrees}

    @property
    def ranks_ok(self) -> bool:
        return all(a == b for a, b in self.rank_identity.values())

    @property
    def ok(self) -> bool:
        return all(self.equal.values()) and self.ranks_ok

    def table(self) -> str:
        lines = [f"{self.mode} Kunneth over {self.ring}" + (" (reduced homology)" if self.mode == "join" else "")]
        for n in self.degrees:
            a, b = self.lhs[n].describe(self.ring), self.rhs[n].describe(self.ring)
            lines.append(f"  degree {n}: direct {a:<12} formula {b:<12} {'ok' if self.equal[n] else 'MISMATCH'}")
        for k, (a, b) in sorted(self.rank_identity.items()):
            lines.append(f"  rank Omega_{k}: {a} vs tensor sum {b} {'ok' if a == b else 'MISMATCH'}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "mode": self.mode, "ring": str(self.ring), "ok": self.ok,
            "degrees": self.degrees,
            "lhs": {str(n): g.to_json() for n, g in self.lhs.items()},
            "rhs": {str(n): g.to_json() for n, g in self.rhs.items()},
            "equal": {str(n): b for n, b in self.equal.items()},
            "rank_identity": {str(k): list(v) for k, v in self.rank_identity.items()},
            "tor_nonzero": self.tor_nonzero,
        }


def verify_kunneth(px: PathComplex, py: PathComplex, ring: RingSpec = Z, top_dim: int = 2,
                   mode: str = "product") -> KunnethReport:
    """Direct homology of X [] Y (or X * Y) against the Kunneth formula.

    Degrees 0..top_dim are compared; every complex is built to top_dim + 1
    so those degrees are exact.  Join mode works with augmented complexes
    (reduced homology, Omega_{-1} = R), where the shifted formula holds.
    """
    if ring.kind not in ("Z", "Q", "Zp"):
        raise RingNotPID(str(ring))
    if mode not in ("product", "join"):
        raise ValueError(f"mode must be 'product' or 'join', not {mode!r}")
    build = top_dim + 1
    ox = build_omega(px, ring, build)
    oy = build_omega(py, ring, build)
    pz = cartesian_product(px, py) if mode == "product" else join(px, py)
    oz = build_omega(pz, ring, build)
    degrees = list(range(top_dim + 1))
    if mode == "product":
        hx = homology_of_complex(ox.boundaries(), ring, ox.truncated)
        hy = homology_of_complex(oy.boundaries(), ring, oy.truncated)
        hz = homology_of_complex(oz.boundaries(), ring, oz.truncated)
        rhs = {n: _kunneth_sum(hx, hy, n, 0, 0) for n in degrees}
        rx, ry, rz = ox.ranks, oy.ranks, oz.ranks
        ranks = {k: (rz[k], sum(rx[i] * ry[k - i] for i in range(k + 1))) for k in range(build + 1)}
        torsion_terms = [tor(hx[p], hy[q]) for n in degrees for p in range(n) for q in [n - 1 - p]]
    else:
        hx = reduced_homology(ox.boundaries(), ring, ox.truncated)
        hy = reduced_homology(oy.boundaries(), ring, oy.truncated)
        hz = reduced_homology(oz.boundaries(), ring, oz.truncated)
        degrees = [-1] + degrees
        rhs = {n: _kunneth_sum(hx, hy, n, 1, -1) for n in degrees}
        rx, ry, rz = [1] + ox.ranks, [1] + oy.ranks, [1] + oz.ranks   # index k <-> degree k-1
        ranks = {}
        for k in range(-1, build + 1):
            s = sum(rx[p + 1] * ry[k - 1 - p + 1] for p in range(-1, k + 1) if 0 <= k - 1 - p + 1 < len(ry))
            ranks[k] = (rz[k + 1], s)
        torsion_terms = [tor(hx[p], hy[n - 2 - p]) for n in degrees for p in range(-1, n)]
    lhs = {n: hz[n] for n in degrees}
    return KunnethReport(mode, ring, degrees, lhs, rhs, ranks,
                         any(not t.is_trivial for t in torsion_terms), hz)


def decompose_product_chain(w: Chain, px: PathComplex, py: PathComplex) -> Dict[Tuple[Path, Path], int]:
    """Coefficients c with w = sum c_xy (e_x x e_y).

    A product path determines its pair (e_x, e_y) by projecting and
    collapsing repeats, so the coefficient of the horizontal-first term
    (sign +1) is c_xy; peel that product off and repeat.
    """
    ny = len(py.vertex_set)
    rest = dict(w)
    coeffs: Dict[Tuple[Path, Path], int] = {}
    while rest:
        p = min(rest)
        xs = [v // ny for v in p]
        ys = [v % ny for v in p]
        ex = _dedupe(xs)
        ey = _dedupe(ys)
        lead = tuple(pair_id(x, ey[0], ny) for x in ex) + tuple(pair_id(ex[-1], y, ny) for y in ey[1:])
        if lead not in rest:
            raise ValueError("chain is not a combination of cross products")
        c = rest[lead]
        coeffs[(ex, ey)] = coeffs.get((ex, ey), 0) + c
        for q, s in cross_product_paths(ex, ey, ny).items():
            v = rest.get(q, 0) - c * s
            if v:
                rest[q] = v
            else:
                rest.pop(q, None)
    return coeffs


def _dedupe(seq: Sequence[int]) -> Path:
    out = [seq[0]]
    for s in seq[1:]:
        if s != out[-1]:
            out.append(s)
    return tuple(out)
