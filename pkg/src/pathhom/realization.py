"""Combinatorial singular Delta-complex S(P) built from admissible paths.

Each admissible n-path becomes an n-cell whose q-th face is glued to the
cell of the q-th face path.  A non-regular face is first reduced (equal
neighbours collapsed) and glued through the induced order-preserving
surjection of simplex vertices, so it lands on a lower-dimensional cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .core import Path, PathComplex, is_regular
from .homology import HomologyResult, cohomology_of_complex, homology_of_complex
from .linalg import RingSpec, SparseMatrix, Z, rank
from .omega import OmegaComplex, build_omega, forbidden_block, regular_boundary


@dataclass(frozen=True)
class DegeneracyRecord:
    """Monotone surjection {0..source_dim} -> {0..target_dim} as preimage blocks."""

    source_dim: int
    target_dim: int
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        flat = [i for b in self.blocks for i in b]
        if flat != list(range(self.source_dim + 1)) or len(self.blocks) != self.target_dim + 1:
            raise ValueError(f"not a monotone surjection: {self.blocks}")
        if any(not b for b in self.blocks):
            raise ValueError("empty preimage block")

    def __call__(self, i: int) -> int:
        for k, b in enumerate(self.blocks):
            if i in b:
                return k
        raise IndexError(i)

    @property
    def is_identity(self) -> bool:
        return self.source_dim == self.target_dim

    def to_json(self) -> dict:
        return {"source_dim": self.source_dim, "target_dim": self.target_dim,
                "blocks": [list(b) for b in self.blocks]}


def reduce_path(path: Sequence) -> Tuple[Tuple, DegeneracyRecord]:
    """Delete the left member of the leftmost equal adjacent pair until regular."""
    seq = list(path)
    blocks: List[List[int]] = [[i] for i in range(len(seq))]
    i = 0
    while i < len(seq) - 1:
        if seq[i] == seq[i + 1]:
            del seq[i]
            blocks[i + 1] = blocks[i] + blocks[i + 1]
            del blocks[i]
            i = max(i - 1, 0)
        else:
            i += 1
    rec = DegeneracyRecord(len(path) - 1, len(seq) - 1, tuple(tuple(b) for b in blocks))
    return tuple(seq), rec


@dataclass(frozen=True)
class FaceAttachment:
    target: int
    degeneracy: Optional[DegeneracyRecord] = None


@dataclass(frozen=True)
class Cell:
    id: int
    path: Path
    faces: Tuple[FaceAttachment, ...]
    closure: bool = False   # added only to keep the complex closed

    @property
    def dim(self) -> int:
        return len(self.path) - 1


@dataclass
class CellComplex:
    vertex_set: object
    cells: List[Cell]
    index: Dict[Path, int]
    diagnostics: List[str] = field(default_factory=list)

    @property
    def top(self) -> int:
        return max((c.dim for c in self.cells), default=-1)

    def by_dim(self, n: int) -> List[Cell]:
        return [c for c in self.cells if c.dim == n]

    def counts(self) -> List[int]:
        return [len(self.by_dim(n)) for n in range(self.top + 1)]

    @property
    def closure_cells(self) -> List[Cell]:
        return [c for c in self.cells if c.closure]

    def to_json(self, coords: bool = False) -> dict:
        names = self.vertex_set.names
        pos = None
        if coords:
            k = max(len(names), 1)
            pos = [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k)) for i in range(k)]
        cells = []
        for c in self.cells:
            d = {
                "id": c.id,
                "dim": c.dim,
                "path": [names[v] for v in c.path],
                "closure": c.closure,
                "faces": [{"target": f.target,
                           "degeneracy": f.degeneracy.to_json() if f.degeneracy else None}
                          for f in c.faces],
            }
            if pos is not None and c.dim <= 3:
                d["barycenter"] = [round(sum(pos[v][a] for v in c.path) / len(c.path), 6) for a in (0, 1)]
            cells.append(d)
        return {"format": "pathhom-cell-complex", "version": 1, "vertices": list(names),
                "counts": self.counts(), "cells": cells, "diagnostics": list(self.diagnostics)}


def _face_of(path: Path, q: int) -> Tuple[Path, Optional[DegeneracyRecord]]:
    face = path[:q] + path[q + 1:]
    if is_regular(face):
        return face, None
    red, rec = reduce_path(face)
    return red, rec


def build_realization(pc: PathComplex, oc: OmegaComplex) -> CellComplex:
    """Cells for Z-admissible paths, closed under (reduced) faces."""
    if oc.ring.kind != "Z":
        raise ValueError("cells are selected by Z-admissibility; build the Omega complex over Z")
    vs = pc.vertex_set
    label = lambda p: "".join(vs.labels(p)) if all(len(s) == 1 for s in vs.labels(p)) else "-".join(vs.labels(p))
    members: Dict[Path, bool] = {}
    for n in range(oc.top_dim + 1):
        for p in oc[n].admissible:
            members[p] = False
    diagnostics: List[str] = []
    todo = sorted(members, key=lambda p: (-len(p), p))
    while todo:
        p = todo.pop(0)
        if len(p) < 2:
            continue
        for q in range(len(p)):
            f, rec = _face_of(p, q)
            if f in members:
                continue
            members[f] = True
            why = "not in P" if f not in pc else "in P but not admissible"
            diagnostics.append(f"closure: face {label(f)} of {label(p)} added ({why})")
            todo.append(f)
            todo.sort(key=lambda x: (-len(x), x))
    order = sorted(members, key=lambda p: (len(p), p))
    index = {p: i for i, p in enumerate(order)}
    cells = []
    for p in order:
        faces = []
        if len(p) >= 2:
            for q in range(len(p)):
                f, rec = _face_of(p, q)
                faces.append(FaceAttachment(index[f], rec))
        cells.append(Cell(index[p], p, tuple(faces), members[p]))
    return CellComplex(vs, cells, index, diagnostics)


def cellular_chain_complex(cc: CellComplex, ring: RingSpec = Z) -> List[SparseMatrix]:
    """[D_0, ..., D_top]; degenerate faces contribute nothing."""
    top = cc.top
    local: Dict[int, int] = {}
    per_dim: List[List[Cell]] = [cc.by_dim(n) for n in range(top + 1)]
    for layer in per_dim:
        for i, c in enumerate(layer):
            local[c.id] = i
    out = [SparseMatrix.zeros(0, len(per_dim[0]) if per_dim else 0)]
    for n in range(1, top + 1):
        ent: Dict[Tuple[int, int], int] = {}
        for j, c in enumerate(per_dim[n]):
            for q, f in enumerate(c.faces):
                if f.degeneracy is not None:
                    continue
                i = local[f.target]
                ent[(i, j)] = ent.get((i, j), 0) + (1 if q % 2 == 0 else -1)
        out.append(SparseMatrix(len(per_dim[n - 1]), len(per_dim[n]), ent).over(ring))
    return out


def inclusion_matrix(cc: CellComplex, oc: OmegaComplex, n: int) -> SparseMatrix:
    """F_Delta on Omega_n: basis vectors rewritten in n-cell coordinates."""
    layer = cc.by_dim(n)
    local = {c.path: i for i, c in enumerate(layer)}
    lv = oc[n]
    ent = {}
    for (i, j), v in lv.basis.entries.items():
        ent[(local[lv.allowed[i]], j)] = v
    return SparseMatrix(len(layer), lv.rank, ent)


def geometric_admissible(pc: PathComplex, n: int) -> set:
    """Largest set of n-paths whose forbidden faces are each shared.

    Repeatedly discards a path owning a forbidden face that no other
    remaining path also has.  A heuristic stand-in for the geometric
    reading of admissibility; only used as a diagnostic.
    """
    if n == 0:
        return set(pc.P(0))
    below = set(pc.P(n - 1))
    keep = set(pc.P(n))
    forb = {p: [f for f in regular_boundary({p: 1}) if f not in below] for p in keep}
    changed = True
    while changed:
        changed = False
        owners: Dict[Path, int] = {}
        for p in keep:
            for f in forb[p]:
                owners[f] = owners.get(f, 0) + 1
        for p in sorted(keep):
            if any(owners[f] < 2 for f in forb[p]):
                keep.discard(p)
                changed = True
    return keep


@dataclass
class ComparisonReport:
    ring: RingSpec
    degrees: List[int]
    left: Dict[str, HomologyResult]
    right: Dict[str, HomologyResult]
    equal: Dict[str, Dict[int, bool]]
    checks: Dict[str, bool] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(all(v.values()) for v in self.equal.values()) and all(self.checks.values())

    def mismatches(self) -> List[str]:
        out = []
        for kind, per in self.equal.items():
            for n, same in per.items():
                if not same:
                    a = self.left[kind][n].describe(self.ring)
                    b = self.right[kind][n].describe(self.ring)
                    out.append(f"{kind} degree {n}: {a} != {b}")
        out += [f"check failed: {k}" for k, v in self.checks.items() if not v]
        return out

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "degrees": self.degrees,
            "ok": self.ok,
            "left": {k: v.to_json() for k, v in self.left.items()},
            "right": {k: v.to_json() for k, v in self.right.items()},
            "equal": {k: {str(n): b for n, b in v.items()} for k, v in self.equal.items()},
            "checks": self.checks,
            "notes": self.notes,
        }


def compare(ring, degrees, left, right, **kw) -> ComparisonReport:
    equal = {k: {n: left[k][n] == right[k][n] for n in degrees} for k in left}
    return ComparisonReport(ring, list(degrees), left, right, equal, **kw)


def verify_realization_isomorphism(pc: PathComplex, ring: RingSpec = Z, top_dim: int = 3) -> ComparisonReport:
    """Path (co)homology against cellular (co)homology of S(P) in degrees 0..top_dim.

    Both sides are built one dimension higher than reported so every
    compared degree has its incoming boundaries.
    """
    build_dim = top_dim + 1
    ocZ = build_omega(pc, Z, build_dim)
    cc = build_realization(pc, ocZ)
    ocR = ocZ if ring.kind == "Z" else build_omega(pc, ring, build_dim)
    cellZ = cellular_chain_complex(cc, Z)
    while len(cellZ) < build_dim + 1:
        cellZ.append(SparseMatrix.zeros(cellZ[-1].cols, 0))
    cellZ = cellZ[:build_dim + 1]
    left = {
        "homology": homology_of_complex(ocR.boundaries(), ring, True),
        "cohomology": cohomology_of_complex(ocZ.boundaries(), ring, True),
    }
    right = {
        "homology": homology_of_complex(cellZ, ring, True),
        "cohomology": cohomology_of_complex(cellZ, ring, True),
    }
    checks = {}
    chain_ok, inj_ok = True, True
    for n in range(build_dim + 1):
        F = inclusion_matrix(cc, ocZ, n)
        if rank(F, Z) != F.cols:
            inj_ok = False
        if n >= 1:
            Fm = inclusion_matrix(cc, ocZ, n - 1)
            if cellZ[n] @ F != Fm @ ocZ[n].boundary:
                chain_ok = False
    checks["chain_map"] = chain_ok
    checks["injective"] = inj_ok
    checks["cellular_dd_zero"] = all((cellZ[n] @ cellZ[n + 1]).is_zero() for n in range(1, len(cellZ) - 1))
    notes = list(cc.diagnostics)
    return compare(ring, list(range(top_dim + 1)), left, right, checks=checks, notes=notes)
