"""Homology of free chain complexes and f.g. abelian group arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .linalg import RingSpec, SparseMatrix, Z, _divisibility_chain, rank, smith_normal_form


class ComplexNotExact(ValueError):
    """Composite of consecutive boundary maps is not zero."""


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^rank plus torsion in invariant-factor form (d_1 | d_2 | ..., all >= 2).

    Over a field only ``rank`` is used and it means the dimension.
    """

    rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        t = tuple(self.torsion)
        if any(d < 2 for d in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not an invariant factor chain")

    @classmethod
    def of(cls, rank: int = 0, cyclic: Iterable[int] = ()) -> "FgAbelianGroup":
        """Normalise Z^rank + sum Z/c_i (orders in any order, 1s and 0s allowed)."""
        extra = 0
        orders = []
        for c in cyclic:
            c = abs(int(c))
            if c == 0:
                extra += 1
            elif c > 1:
                orders.append(c)
        return cls(rank + extra, tuple(d for d in _divisibility_chain(orders) if d > 1))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __add__(self, other: "FgAbelianGroup") -> "FgAbelianGroup":
        return FgAbelianGroup.of(self.rank + other.rank, self.torsion + other.torsion)

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def describe(self, ring: RingSpec) -> str:
        if ring.kind == "Z":
            return str(self)
        base = "Q" if ring.kind == "Q" else f"Z/{ring.p}"
        if self.rank == 0:
            return "0"
        return base if self.rank == 1 else f"{base}^{self.rank}"

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


TRIVIAL = FgAbelianGroup()
ZZ = FgAbelianGroup(1)


def direct_sum(groups: Iterable[FgAbelianGroup]) -> FgAbelianGroup:
    out = TRIVIAL
    for g in groups:
        out = out + g
    return out


def tensor(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    cyc = list(a.torsion) * b.rank + list(b.torsion) * a.rank
    cyc += [gcd(x, y) for x in a.torsion for y in b.torsion]
    return FgAbelianGroup.of(a.rank * b.rank, cyc)


def tor(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    return FgAbelianGroup.of(0, [gcd(x, y) for x in a.torsion for y in b.torsion])


def hom_to_Z(a: FgAbelianGroup) -> FgAbelianGroup:
    return FgAbelianGroup(a.rank)


def ext_to_Z(a: FgAbelianGroup) -> FgAbelianGroup:
    return FgAbelianGroup(0, a.torsion)


@dataclass
class HomologyResult:
    ring: RingSpec
    groups: Dict[int, FgAbelianGroup]
    truncated_at: Optional[int] = None
    cohomology: bool = False

    def __getitem__(self, n: int) -> FgAbelianGroup:
        return self.groups.get(n, TRIVIAL)

    @property
    def degrees(self) -> List[int]:
        return sorted(self.groups)

    def betti(self) -> List[int]:
        return [self.groups[n].rank for n in self.degrees]

    def exact_degrees(self) -> List[int]:
        return [n for n in self.degrees if self.truncated_at is None or n < self.truncated_at]

    def format(self) -> str:
        sym = "H^" if self.cohomology else "H_"
        parts = []
        for n in self.degrees:
            s = f"{sym}{n} = {self.groups[n].describe(self.ring)}"
            if self.truncated_at is not None and n >= self.truncated_at:
                s += " (truncated)"
            parts.append(s)
        return ", ".join(parts)

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "kind": "cohomology" if self.cohomology else "homology",
            "truncated_at": self.truncated_at,
            "groups": {str(n): self.groups[n].to_json() for n in self.degrees},
        }


def check_exact(D: Sequence[SparseMatrix], ring: RingSpec) -> None:
    for n in range(len(D) - 1):
        a, b = D[n], D[n + 1]
        if a.cols != b.rows:
            raise ComplexNotExact(f"D_{n} has {a.cols} columns but D_{n + 1} has {b.rows} rows")
        if a.rows and b.cols and not (a @ b).over(ring).is_zero():
            raise ComplexNotExact(f"D_{n} D_{n + 1} != 0")


def homology_of_complex(D: Sequence[SparseMatrix], ring: RingSpec = Z, truncated: bool = False,
                        first_degree: int = 0, check: bool = True) -> HomologyResult:
    """H_n of C_top -> ... -> C_first, given D[k] : C_{first+k} -> C_{first+k-1}.

    ``D[0]`` is the map out of the lowest group (a 0 x c matrix for the
    usual unaugmented complex).  With ``truncated`` the top degree is
    flagged: its incoming boundary map was never built.
    """
    D = [d.over(ring) for d in D]
    if check:
        check_exact(D, ring)
    ranks = [rank(d, ring) for d in D] + [0]
    groups: Dict[int, FgAbelianGroup] = {}
    for k, d in enumerate(D):
        r = d.cols - ranks[k] - ranks[k + 1]
        tors: Tuple[int, ...] = ()
        if ring.kind == "Z" and k + 1 < len(D):
            tors = smith_normal_form(D[k + 1]).torsion
        groups[first_degree + k] = FgAbelianGroup(r, tors)
    top = first_degree + len(D) - 1
    return HomologyResult(ring, groups, top if truncated else None)


def cohomology_of_complex(D: Sequence[SparseMatrix], ring: RingSpec = Z, truncated: bool = False,
                          first_degree: int = 0, check: bool = True) -> HomologyResult:
    """Cohomology of Hom_Z(C, ring) for an integral complex C given by ``D``.

    The coboundary out of degree n is D[n+1] transposed, reduced into the
    ring.  Over Z, torsion in H^n is the torsion of D[n].
    """
    DZ = [d.over(Z) for d in D]
    if check:
        check_exact(DZ, Z)
    Dr = [d.over(ring) for d in DZ]
    ranks = [rank(d, ring) for d in Dr] + [0]
    groups: Dict[int, FgAbelianGroup] = {}
    for k, d in enumerate(Dr):
        r = d.cols - ranks[k] - ranks[k + 1]
        tors: Tuple[int, ...] = ()
        if ring.kind == "Z":
            tors = smith_normal_form(DZ[k]).torsion
        groups[first_degree + k] = FgAbelianGroup(r, tors)
    top = first_degree + len(D) - 1
    return HomologyResult(ring, groups, top if truncated else None, cohomology=True)


def augment(D: Sequence[SparseMatrix]) -> List[SparseMatrix]:
    """Prepend the augmentation C_0 -> R (sum of coefficients).

    Returns [0 x 1, eps, D_1, ...] so degree -1 appears first; only valid
    when the degree-0 basis consists of the vertices.
    """
    c0 = D[0].cols
    eps = SparseMatrix(1, c0, {(0, j): 1 for j in range(c0)})
    return [SparseMatrix.zeros(0, 1), eps] + list(D[1:])


def reduced_homology(D: Sequence[SparseMatrix], ring: RingSpec = Z, truncated: bool = False) -> HomologyResult:
    return homology_of_complex(augment(D), ring, truncated, first_degree=-1)


def uct_cohomology(h: HomologyResult) -> Dict[int, FgAbelianGroup]:
    """H^n = Hom(H_n, Z) + Ext(H_{n-1}, Z) from integral homology."""
    out = {}
    for n in h.degrees:
        out[n] = hom_to_Z(h[n]) + (ext_to_Z(h[n - 1]) if n - 1 in h.groups else TRIVIAL)
    return out


def uct_homology_mod_p(h: HomologyResult, p: int) -> Dict[int, int]:
    """dim H_n(-; Z/p) from integral homology."""
    out = {}
    for n in h.degrees:
        k = h[n].rank + sum(1 for d in h[n].torsion if d % p == 0)
        if n - 1 in h.groups:
            k += sum(1 for d in h[n - 1].torsion if d % p == 0)
        out[n] = k
    return out


def euler_characteristic(ranks: Sequence[int], first_degree: int = 0) -> int:
    return sum((-1) ** (first_degree + k) * r for k, r in enumerate(ranks))
