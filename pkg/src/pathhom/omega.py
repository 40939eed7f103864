"""The chain complex of allowed-with-allowed-boundary paths.

For each n the space Omega_n is cut out of span(P_n) by asking the regular
boundary to vanish on every face that is *not* in P_{n-1}.  Only faces that
actually occur are indexed, which keeps the constraint matrix finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .core import Path, PathComplex, is_regular, validate_path_complex
from .linalg import EchelonBasis, NotInSpan, RingSpec, Scalar, SparseMatrix, Z, kernel_basis

Chain = Dict[Path, Scalar]


class InternalInconsistency(RuntimeError):
    pass


class NonRegularComplex(ValueError):
    pass


def regular_boundary(chain: Chain, ring: RingSpec | None = None) -> Chain:
    """Alternating face sum with non-regular faces dropped; vertices have zero boundary."""
    out: Chain = {}
    for path, c in chain.items():
        if len(path) < 2:
            continue
        for q in range(len(path)):
            face = path[:q] + path[q + 1:]
            if not is_regular(face):
                continue
            v = out.get(face, 0) + (c if q % 2 == 0 else -c)
            if ring is not None:
                v = ring.coerce(v)
            if v:
                out[face] = v
            else:
                out.pop(face, None)
    return out


@dataclass(frozen=True)
class OmegaLevel:
    allowed: Tuple[Path, ...]          # ordered P_n
    basis: SparseMatrix                # |P_n| x rank, columns span Omega_n
    boundary: SparseMatrix             # rank Omega_{n-1} x rank Omega_n
    admissible: Tuple[Path, ...]

    @property
    def rank(self) -> int:
        return self.basis.cols

    def vectors(self) -> List[Chain]:
        """Basis elements as chains keyed by path."""
        out: List[Chain] = [{} for _ in range(self.basis.cols)]
        for (i, j), v in self.basis.entries.items():
            out[j][self.allowed[i]] = v
        return out


@dataclass(frozen=True)
class OmegaComplex:
    ring: RingSpec
    top_dim: int
    levels: Tuple[OmegaLevel, ...]
    truncated: bool    # P_{top_dim+1} non-empty, so H_top misses boundaries

    def __getitem__(self, n: int) -> OmegaLevel:
        return self.levels[n]

    @property
    def ranks(self) -> List[int]:
        return [lv.rank for lv in self.levels]

    def boundaries(self) -> List[SparseMatrix]:
        """[D_0, D_1, ..., D_top]; D_0 maps to the zero module."""
        return [lv.boundary for lv in self.levels]


def forbidden_block(pc: PathComplex, n: int, ring: RingSpec = Z) -> Tuple[SparseMatrix, Tuple[Path, ...]]:
    """Regular boundary of P_n restricted to faces outside P_{n-1}."""
    paths = pc.P(n)
    allowed_below = set(pc.P(n - 1))
    rows: Dict[Path, int] = {}
    entries: Dict[Tuple[int, int], Scalar] = {}
    for j, p in enumerate(paths):
        for face, c in regular_boundary({p: 1}).items():
            if face in allowed_below:
                continue
            i = rows.setdefault(face, len(rows))
            entries[(i, j)] = entries.get((i, j), 0) + c
    faces = tuple(rows)
    return SparseMatrix(len(faces), len(paths), entries).over(ring), faces


def build_omega(pc: PathComplex, ring: RingSpec = Z, top_dim: int | None = None, check: bool = True) -> OmegaComplex:
    if not pc.regular:
        raise NonRegularComplex("path homology needs a regular path complex")
    if check:
        rep = validate_path_complex(pc)
        if not rep.ok:
            raise ValueError("invalid path complex: " + "; ".join(rep.violations[:5]))
    if top_dim is None:
        top_dim = max(pc.top, 0)
    if top_dim < 0:
        raise ValueError("top_dim must be >= 0")
    levels: List[OmegaLevel] = []
    prev: EchelonBasis | None = None
    prev_index: Dict[Path, int] = {}
    for n in range(top_dim + 1):
        paths = pc.P(n)
        index = {p: i for i, p in enumerate(paths)}
        if n == 0:
            basis = SparseMatrix.identity(len(paths))
        else:
            block, _ = forbidden_block(pc, n, ring)
            basis = kernel_basis(block, ring)
        vecs = basis.columns()
        if n == 0:
            boundary = SparseMatrix.zeros(0, basis.cols)
        else:
            cols = []
            for v in vecs:
                chain = {paths[i]: c for i, c in v.items()}
                d = regular_boundary(chain, ring)
                target = {}
                for face, c in d.items():
                    if face not in prev_index:
                        raise InternalInconsistency(f"boundary leaves A_{n - 1} at {face}")
                    target[prev_index[face]] = c
                try:
                    cols.append(prev.solve(target))
                except NotInSpan as exc:
                    raise InternalInconsistency(f"boundary of Omega_{n} not in Omega_{n - 1}: {exc}") from exc
            boundary = SparseMatrix.from_columns(levels[-1].rank, cols)
        nonzero_rows = {i for (i, _j) in basis.entries}
        admissible = tuple(paths[i] for i in sorted(nonzero_rows))
        levels.append(OmegaLevel(paths, basis, boundary, admissible))
        prev = EchelonBasis(basis, ring)
        prev_index = index
    truncated = bool(pc.P(top_dim + 1))
    return OmegaComplex(ring, top_dim, tuple(levels), truncated)


def admissible_paths(oc: OmegaComplex, n: int) -> set:
    if n > oc.top_dim:
        raise ValueError(f"n={n} exceeds top_dim={oc.top_dim}")
    return set(oc[n].admissible)


def omega_membership(pc: PathComplex, chain: Chain, ring: RingSpec = Z) -> bool:
    """True iff ``chain`` is allowed and so is its regular boundary over ``ring``."""
    if not chain:
        return True
    n = len(next(iter(chain))) - 1
    if any(p not in pc for p in chain):
        return False
    if n == 0:
        return True
    return all(face in pc for face in regular_boundary(chain, ring))
