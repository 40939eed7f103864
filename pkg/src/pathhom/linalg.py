"""Exact sparse linear algebra over Z, Q and Z/p.

Everything here works on dictionaries of nonzero entries and Python
integers (or ``Fraction`` for Q), so results are exact.  Kernels over Z
come out of a column Hermite reduction that carries along the unimodular
transform; the zero columns of the reduced matrix then index a saturated
basis of the integer kernel.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Scalar = int | Fraction
Column = Dict[int, Scalar]


class NotInSpan(ValueError):
    """Target vector is not a combination of the given basis columns."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    """Coefficient ring: ``Z``, ``Q`` or the prime field ``Zp:<p>``."""

    kind: str
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Zp"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Zp":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"Zp needs a prime modulus, got {self.p!r}")
        elif self.p is not None:
            raise ValueError(f"ring {self.kind} takes no modulus")

    @classmethod
    def parse(cls, text: str) -> "RingSpec":
        text = text.strip()
        if text in ("Z", "Q"):
            return cls(text)
        m = re.fullmatch(r"Zp?:(\d+)|Z/(\d+)|Z_(\d+)", text)
        if m:
            return cls("Zp", int(next(g for g in m.groups() if g)))
        raise ValueError(f"cannot parse ring {text!r} (use Z, Q or Zp:<prime>)")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def __str__(self) -> str:
        return f"Zp:{self.p}" if self.kind == "Zp" else self.kind

    def coerce(self, x) -> Scalar:
        """Canonical representative of ``x`` in this ring."""
        if self.kind == "Zp":
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def inv(self, x: Scalar) -> Scalar:
        if self.kind == "Zp":
            return pow(int(x), -1, self.p)
        if self.kind == "Q":
            return 1 / Fraction(x)
        if x in (1, -1):
            return x
        raise ZeroDivisionError(f"{x} is not a unit in Z")


Z = RingSpec("Z")
Q = RingSpec("Q")


def Zp(p: int) -> RingSpec:
    return RingSpec("Zp", p)


@dataclass
class SparseMatrix:
    """A rows x cols matrix holding only nonzero entries."""

    rows: int
    cols: int
    entries: Dict[Tuple[int, int], Scalar] = field(default_factory=dict)

    def __post_init__(self):
        for (i, j), v in list(self.entries.items()):
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            if v == 0:
                del self.entries[(i, j)]

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Scalar]]) -> "SparseMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        ent = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v}
        return cls(nr, nc, ent)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Column]) -> "SparseMatrix":
        ent = {(i, j): v for j, c in enumerate(columns) for i, v in c.items() if v}
        return cls(nrows, len(columns), ent)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def columns(self) -> List[Column]:
        out: List[Column] = [{} for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            out[j][i] = v
        return out

    def rows_list(self) -> List[Column]:
        out: List[Column] = [{} for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def column(self, j: int) -> Column:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def to_dense(self) -> List[List[Scalar]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def over(self, ring: RingSpec) -> "SparseMatrix":
        """Entries mapped into ``ring`` (zeros dropped)."""
        ent = {}
        for k, v in self.entries.items():
            c = ring.coerce(v)
            if c:
                ent[k] = c
        return SparseMatrix(self.rows, self.cols, ent)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        rows = self.rows_list()
        ocols = other.rows_list()
        out: Dict[Tuple[int, int], Scalar] = {}
        for i, r in enumerate(rows):
            acc: Dict[int, Scalar] = {}
            for k, a in r.items():
                for j, b in ocols[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            for j, v in acc.items():
                if v:
                    out[(i, j)] = v
        return SparseMatrix(self.rows, other.cols, out)

    def apply(self, vec: Column) -> Column:
        """Matrix times a sparse column vector."""
        out: Dict[int, Scalar] = {}
        for (i, j), v in self.entries.items():
            x = vec.get(j)
            if x:
                out[i] = out.get(i, 0) + v * x
        return {i: v for i, v in out.items() if v}

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries


def _reduce(x: Scalar, ring: RingSpec) -> Scalar:
    return x % ring.p if ring.kind == "Zp" else x


def _axpy(target: Column, a: Scalar, src: Column, ring: RingSpec) -> None:
    """target += a * src, in place, dropping zeros."""
    for k, v in src.items():
        nv = _reduce(target.get(k, 0) + a * v, ring)
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


@dataclass
class _ColumnReduction:
    reduced: List[Column]
    transform: List[Column]
    pivots: List[Tuple[int, int]]  # (row, column) in elimination order
    zero_columns: List[int]


def _column_reduce(m: SparseMatrix, ring: RingSpec) -> _ColumnReduction:
    """Column echelon form M U = H with U invertible over ``ring``.

    Over Z this is the Hermite-style reduction by repeated division with
    remainder, pivoting on the smallest magnitude entry (ties broken by
    column weight).  Over a field each row needs a single pivot.
    """
    cols = [dict(c) for c in m.over(ring).columns()]
    trans: List[Column] = [{j: 1} for j in range(m.cols)]
    active = set(range(m.cols))
    by_row: Dict[int, set] = {}
    for j, c in enumerate(cols):
        for i in c:
            by_row.setdefault(i, set()).add(j)
    pivots: List[Tuple[int, int]] = []

    def update(j: int, before: Iterable[int]) -> None:
        after = cols[j].keys()
        for i in set(before) - set(after):
            by_row[i].discard(j)
        for i in after:
            by_row.setdefault(i, set()).add(j)

    for r in range(m.rows):
        while True:
            here = [j for j in by_row.get(r, ()) if j in active]
            if not here:
                break
            if ring.is_field:
                piv = min(here, key=lambda j: (len(cols[j]), j))
                a = cols[piv][r]
                ainv = ring.inv(a)
                for j in here:
                    if j == piv:
                        continue
                    f = -cols[j][r] * ainv
                    f = _reduce(f, ring)
                    before = list(cols[j])
                    _axpy(cols[j], f, cols[piv], ring)
                    _axpy(trans[j], f, trans[piv], ring)
                    update(j, before)
                pivots.append((r, piv))
                active.discard(piv)
                break
            piv = min(here, key=lambda j: (abs(cols[j][r]), len(cols[j]), j))
            if len(here) == 1:
                if cols[piv][r] < 0:
                    cols[piv] = {k: -v for k, v in cols[piv].items()}
                    trans[piv] = {k: -v for k, v in trans[piv].items()}
                pivots.append((r, piv))
                active.discard(piv)
                break
            a = cols[piv][r]
            for j in here:
                if j == piv:
                    continue
                q = cols[j][r] // a
                if q:
                    before = list(cols[j])
                    _axpy(cols[j], -q, cols[piv], ring)
                    _axpy(trans[j], -q, trans[piv], ring)
                    update(j, before)
    zero = sorted(j for j in active if not cols[j])
    return _ColumnReduction(cols, trans, pivots, zero)


def kernel_basis(m: SparseMatrix, ring: RingSpec) -> SparseMatrix:
    """Basis of ``{x : m x = 0}`` as the columns of the returned matrix.

    Over Z the basis spans the full integer kernel lattice (the transform
    is unimodular), so it is automatically saturated.
    """
    red = _column_reduce(m, ring)
    basis = [red.transform[j] for j in red.zero_columns]
    if ring.kind == "Z":
        basis = [_canonical_sign(c) for c in basis]
    return SparseMatrix.from_columns(m.cols, basis)


def _canonical_sign(c: Column) -> Column:
    if c and c[min(c)] < 0:
        return {k: -v for k, v in c.items()}
    return c


def rank(m: SparseMatrix, ring: RingSpec) -> int:
    """Rank over ``ring`` (over Z this is the rank over Q)."""
    if ring.kind == "Z":
        return rank_integral(m)
    return len(_row_echelon(m.over(ring), ring))


def rank_integral(m: SparseMatrix) -> int:
    """Rank over Q of an integer matrix via fraction-free elimination.

    Rows are kept primitive (divided by their content) so entries stay small
    for the sparse 0/+-1 matrices that dominate here.
    """
    pivots: Dict[int, Column] = {}
    for row in m.rows_list() if m.rows <= m.cols else m.transpose().rows_list():
        v = {k: int(x) for k, x in row.items() if x}
        while v:
            lead = min(v)
            p = pivots.get(lead)
            if p is None:
                g = 0
                for x in v.values():
                    g = gcd(g, x)
                pivots[lead] = {k: x // g for k, x in v.items()}
                break
            a, b = p[lead], v[lead]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            nv: Column = {k: fa * x for k, x in v.items()}
            for k, x in p.items():
                y = nv.get(k, 0) - fb * x
                if y:
                    nv[k] = y
                else:
                    nv.pop(k, None)
            c = 0
            for x in nv.values():
                c = gcd(c, x)
                if c == 1:
                    break
            v = {k: x // c for k, x in nv.items()} if c > 1 else nv
    return len(pivots)


def _row_echelon(m: SparseMatrix, ring: RingSpec) -> Dict[int, Column]:
    """Pivot rows of an echelon form over a field, keyed by leading column."""
    pivots: Dict[int, Column] = {}
    rows = m.rows_list() if m.rows <= m.cols else m.transpose().rows_list()
    for row in rows:
        v = dict(row)
        while v:
            lead = min(v)
            p = pivots.get(lead)
            if p is None:
                inv = ring.inv(v[lead])
                pivots[lead] = {k: _reduce(x * inv, ring) for k, x in v.items()}
                break
            _axpy(v, -v[lead], p, ring)
    return pivots


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def _divisibility_chain(diag: List[int]) -> List[int]:
    d = sorted(abs(x) for x in diag if x)
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            if d[j] % d[i]:
                g = gcd(d[i], d[j])
                d[i], d[j] = g, d[i] * d[j] // g
    return sorted(d)


def smith_normal_form(m: SparseMatrix) -> SmithForm:
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Sparse elimination with the smallest-magnitude pivot; rows and columns
    are both cleared before the pivot is recorded.  The diagonal is then
    normalised into a divisibility chain.
    """
    rows: Dict[int, Column] = {}
    cols: Dict[int, Column] = {}
    for (i, j), v in m.entries.items():
        v = int(v)
        rows.setdefault(i, {})[j] = v
        cols.setdefault(j, {})[i] = v

    def setv(i: int, j: int, v: int) -> None:
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, {})[i] = v
        else:
            rows.get(i, {}).pop(j, None)
            cols.get(j, {}).pop(i, None)
            if i in rows and not rows[i]:
                del rows[i]
            if j in cols and not cols[j]:
                del cols[j]

    diag: List[int] = []
    while rows:
        # pivot: smallest magnitude, then sparsest row+column
        best = None
        for i, r in rows.items():
            for j, v in r.items():
                key = (abs(v), len(r) + len(cols[j]), i, j)
                if best is None or key < best[0]:
                    best = (key, i, j)
                    if abs(v) == 1 and len(r) + len(cols[j]) == 2:
                        break
        _, pi, pj = best
        while True:
            a = rows[pi][pj]
            dirty = False
            # clear column pj using row operations
            for i in [i for i in cols[pj] if i != pi]:
                q = cols[pj][i] // a
                for j, v in list(rows[pi].items()):
                    setv(i, j, rows.get(i, {}).get(j, 0) - q * v)
                if pj in cols and i in cols[pj]:
                    dirty = True
            # clear row pi using column operations
            for j in [j for j in rows[pi] if j != pj]:
                q = rows[pi][j] // a
                for i, v in list(cols[pj].items()):
                    setv(i, j, cols.get(j, {}).get(i, 0) - q * v)
                if pi in rows and j in rows[pi]:
                    dirty = True
            if not dirty:
                break
            # a remainder survived: move the smallest entry of the pivot cross into place
            cand = [(abs(v), pi, j) for j, v in rows[pi].items()]
            cand += [(abs(v), i, pj) for i, v in cols[pj].items()]
            _, ni, nj = min(cand)
            if (ni, nj) != (pi, pj):
                if ni != pi:
                    _swap_rows(rows, cols, pi, ni)
                else:
                    _swap_cols(rows, cols, pj, nj)
        diag.append(rows[pi][pj])
        setv(pi, pj, 0)
    return SmithForm(tuple(_divisibility_chain(diag)))


def _swap_rows(rows, cols, a: int, b: int) -> None:
    ra, rb = rows.pop(a, {}), rows.pop(b, {})
    if rb:
        rows[a] = rb
    if ra:
        rows[b] = ra
    for j in set(ra) | set(rb):
        c = cols[j]
        va, vb = c.pop(a, None), c.pop(b, None)
        if vb is not None:
            c[a] = vb
        if va is not None:
            c[b] = va


def _swap_cols(rows, cols, a: int, b: int) -> None:
    _swap_rows(cols, rows, a, b)


class EchelonBasis:
    """Precomputed echelon form of a basis, for repeated span solves."""

    def __init__(self, basis: SparseMatrix, ring: RingSpec):
        self.ring = ring
        self.nrows = basis.rows
        self.ncols = basis.cols
        red = _column_reduce(basis, ring)
        if red.zero_columns:
            raise ValueError("basis columns are linearly dependent")
        self._steps = [(r, red.reduced[j], red.transform[j]) for r, j in red.pivots]

    def solve(self, target: Column) -> Column:
        ring = self.ring
        t = {k: ring.coerce(v) for k, v in target.items()}
        t = {k: v for k, v in t.items() if v}
        x: Column = {}
        for r, col, tr in self._steps:
            b = t.get(r)
            if not b:
                continue
            a = col[r]
            if ring.is_field:
                q = _reduce(b * ring.inv(a), ring)
            else:
                if b % a:
                    raise NotInSpan(f"row {r}: {b} not divisible by pivot {a}")
                q = b // a
            _axpy(t, -q, col, ring)
            _axpy(x, q, tr, ring)
        if t:
            raise NotInSpan(f"residual on rows {sorted(t)[:5]}")
        return x


def solve_in_span(basis: SparseMatrix, target: Column | Sequence[Scalar], ring: RingSpec) -> List[Scalar]:
    """Coefficients x with ``basis @ x == target``; raises NotInSpan."""
    if not isinstance(target, dict):
        target = {i: v for i, v in enumerate(target) if v}
    x = EchelonBasis(basis, ring).solve(target)
    return [x.get(j, 0) for j in range(basis.cols)]
