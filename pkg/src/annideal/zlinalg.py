"""Exact integer linear algebra: Hermite/Smith normal forms, lattices,
and abelian type invariants.

Everything here works over unbounded Python integers.  Matrices are
small and dense (relation matrices of finitely presented modules), so
the normal-form routines favour simplicity and coefficient control
(gcd pivoting) over asymptotic cleverness.

Conventions:
  * hnf is column-style: H = M*U with U unimodular, columns of H span
    the same lattice as columns of M.
  * snf returns S = U*M*V diagonal with d1 | d2 | ... and U, V unimodular.
  * A Lattice is a full set of integer combinations of its basis columns
    inside Z^ambient_dim; membership is decided by exact back-substitution
    against a saturated echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with g = s*a + t*b, g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class IntMat:
    """Dense integer matrix with fixed dimensions; entries are exact."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[int]], rows: int | None = None, cols: int | None = None):
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        self.rows = rows
        self.cols = cols
        self.data = [list(row) for row in data]
        for row in self.data:
            if len(row) != cols:
                raise ValueError("ragged matrix")

    @staticmethod
    def identity(n: int) -> "IntMat":
        return IntMat([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "IntMat":
        return IntMat([[0] * cols for _ in range(rows)], rows, cols)

    @staticmethod
    def from_columns(columns: Sequence[Sequence[int]], dim: int) -> "IntMat":
        m = IntMat.zeros(dim, len(columns))
        for c, col in enumerate(columns):
            for r, v in enumerate(col):
                m.data[r][c] = v
        return m

    def column(self, c: int) -> list[int]:
        return [self.data[r][c] for r in range(self.rows)]

    def columns(self) -> list[list[int]]:
        return [self.column(c) for c in range(self.cols)]

    def copy(self) -> "IntMat":
        return IntMat(self.data, self.rows, self.cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __matmul__(self, other: "IntMat") -> "IntMat":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = IntMat.zeros(self.rows, other.cols)
        for i in range(self.rows):
            row = self.data[i]
            for k, a in enumerate(row):
                if a:
                    orow = other.data[k]
                    target = out.data[i]
                    for j in range(other.cols):
                        target[j] += a * orow[j]
        return out

    def apply(self, v: Sequence[int]) -> list[int]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum(a * x for a, x in zip(row, v) if a) for row in self.data]

    def det(self) -> int:
        """Bareiss fraction-free determinant (square matrices)."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [row[:] for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for r in range(k + 1, n):
                    if a[r][k]:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __repr__(self) -> str:
        return f"IntMat({self.data})"


def is_unimodular(m: IntMat) -> bool:
    return m.rows == m.cols and abs(m.det()) == 1


def hnf(m: IntMat) -> tuple[IntMat, IntMat]:
    """Column-style Hermite normal form: H = M*U, U unimodular.

    Pivots are positive, pivot rows increase left to right, entries to
    the left of a pivot (in its row) are reduced into [0, pivot), and
    zero columns are pushed to the right.  The form is canonical for the
    column span.
    """
    h = m.copy()
    u = IntMat.identity(m.cols)

    def colop(c1, c2, a, b, c, d):
        # (col c1, col c2) <- (a*c1 + b*c2, c*c1 + d*c2)
        for mat in (h, u):
            for row in mat.data:
                e1, e2 = row[c1], row[c2]
                row[c1] = a * e1 + b * e2
                row[c2] = c * e1 + d * e2

    k = 0
    for r in range(m.rows):
        pivot_col = None
        for c in range(k, m.cols):
            if h.data[r][c]:
                pivot_col = c
                break
        if pivot_col is None:
            continue
        if pivot_col != k:
            colop(k, pivot_col, 0, 1, 1, 0)
        for c in range(k + 1, m.cols):
            if h.data[r][c]:
                g, s, t = xgcd(h.data[r][k], h.data[r][c])
                a, b = h.data[r][k] // g, h.data[r][c] // g
                colop(k, c, s, t, -b, a)
        if h.data[r][k] < 0:
            for mat in (h, u):
                for row in mat.data:
                    row[k] = -row[k]
        p = h.data[r][k]
        for c in range(k):
            q = h.data[r][c] // p
            if q:
                for mat in (h, u):
                    for row in mat.data:
                        row[c] -= q * row[k]
        k += 1
        if k == m.cols:
            break
    return h, u


def snf(m: IntMat) -> tuple[IntMat, IntMat, IntMat]:
    """Smith normal form: S = U*M*V diagonal, d1 | d2 | ..., U,V unimodular.

    Pivot strategy: minimal non-zero absolute value, then gcd row/column
    reduction; this keeps intermediate entries small on the dense little
    relation matrices this library produces.
    """
    s = m.copy()
    u = IntMat.identity(m.rows)
    v = IntMat.identity(m.cols)
    rows, cols = m.rows, m.cols

    def rowop(r1, r2, a, b, c, d):
        for mat in (s, u):
            e1, e2 = mat.data[r1][:], mat.data[r2][:]
            mat.data[r1] = [a * x + b * y for x, y in zip(e1, e2)]
            mat.data[r2] = [c * x + d * y for x, y in zip(e1, e2)]

    def colop(c1, c2, a, b, c, d):
        for mat in (s, v):
            for row in mat.data:
                e1, e2 = row[c1], row[c2]
                row[c1] = a * e1 + b * e2
                row[c2] = c * e1 + d * e2

    def find_pivot(k):
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                val = abs(s.data[i][j])
                if val and (best is None or val < best[0]):
                    best = (val, i, j)
        return best

    k = 0
    while True:
        best = find_pivot(k)
        if best is None:
            break
        _, pi, pj = best
        if pi != k:
            rowop(k, pi, 0, 1, 1, 0)
        if pj != k:
            colop(k, pj, 0, 1, 1, 0)
        # clear row and column k; gcd-combine only when division fails,
        # so the pivot strictly shrinks and the loop terminates
        dirty = True
        while dirty:
            dirty = False
            for i in range(k + 1, rows):
                if s.data[i][k]:
                    if s.data[i][k] % s.data[k][k] == 0:
                        rowop(k, i, 1, 0, -(s.data[i][k] // s.data[k][k]), 1)
                    else:
                        g, a, b = xgcd(s.data[k][k], s.data[i][k])
                        p, q = s.data[k][k] // g, s.data[i][k] // g
                        rowop(k, i, a, b, -q, p)
                    dirty = True
            for j in range(k + 1, cols):
                if s.data[k][j]:
                    if s.data[k][j] % s.data[k][k] == 0:
                        colop(k, j, 1, 0, -(s.data[k][j] // s.data[k][k]), 1)
                    else:
                        g, a, b = xgcd(s.data[k][k], s.data[k][j])
                        p, q = s.data[k][k] // g, s.data[k][j] // g
                        colop(k, j, a, b, -q, p)
                    dirty = True
        k += 1
        if k >= min(rows, cols):
            break

    n = min(rows, cols)
    for t in range(n):
        if s.data[t][t] < 0:
            for mat in (s, u):
                mat.data[t] = [-x for x in mat.data[t]]

    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for t in range(n - 1):
            a, b = s.data[t][t], s.data[t + 1][t + 1]
            if b and not a:
                rowop(t, t + 1, 0, 1, 1, 0)
                colop(t, t + 1, 0, 1, 1, 0)
                changed = True
            elif a and b and b % a:
                # fold column t+1 into column t, re-clear
                colop(t, t + 1, 1, 1, 0, 1)
                g, x, y = xgcd(s.data[t][t], s.data[t + 1][t])
                p, q = s.data[t][t] // g, s.data[t + 1][t] // g
                rowop(t, t + 1, x, y, -q, p)
                for j in range(t + 1, cols):
                    if s.data[t][j]:
                        qq = s.data[t][j] // s.data[t][t]
                        colop(t, j, 1, 0, -qq, 1)
                changed = True
    for t in range(n):
        if s.data[t][t] < 0:
            for mat in (s, u):
                mat.data[t] = [-x for x in mat.data[t]]
    return s, u, v


@dataclass(frozen=True)
class AbelianType:
    """Invariant factors of a finitely generated abelian group.

    ``factors`` is the descending divisibility chain, e.g. (9, 3, 3);
    ``free_rank`` counts infinite cyclic summands.  The trivial group is
    the empty factor list with free_rank 0 and order 1.
    """

    factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        for t in range(len(self.factors) - 1):
            if self.factors[t] % self.factors[t + 1]:
                raise ValueError(f"not a divisibility chain: {self.factors}")
        if any(f < 2 for f in self.factors):
            raise ValueError(f"factors must be >= 2: {self.factors}")

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite (free_rank > 0)."""
        if self.free_rank:
            return None
        n = 1
        for f in self.factors:
            n *= f
        return n

    @property
    def rank(self) -> int:
        return len(self.factors) + self.free_rank

    def __str__(self) -> str:
        pieces = [str(f) for f in self.factors] + ["Z"] * self.free_rank
        return "(" + ",".join(pieces) + ")"

    @staticmethod
    def direct_sum(*types: "AbelianType") -> "AbelianType":
        """Merged invariant factors of a direct sum of p-groups.

        Valid whenever all factors are powers of one prime (the only use
        here); then sorting descending restores the divisibility chain.
        """
        factors = sorted((f for t in types for f in t.factors), reverse=True)
        return AbelianType(tuple(factors), sum(t.free_rank for t in types))


def abelian_type(relations: IntMat, ambient_dim: int) -> AbelianType:
    """Type of Z^ambient_dim modulo the column span of ``relations``."""
    if relations.rows != ambient_dim:
        raise ValueError("relations must have ambient_dim rows")
    if relations.cols == 0:
        return AbelianType((), ambient_dim)
    s, _, _ = snf(relations)
    diag = [s.data[t][t] for t in range(min(s.rows, s.cols))]
    nonzero = [d for d in diag if d]
    free_rank = ambient_dim - len(nonzero)
    factors = tuple(sorted((d for d in nonzero if d > 1), reverse=True))
    return AbelianType(factors, free_rank)


class _Echelon:
    """Online integer echelon: one saturated pivot vector per lead index.

    Insertion gcd-combines on lead collisions, so membership reduces to
    forward elimination with exact divisions.  This is the engine behind
    Lattice; the canonical HNF basis is derived from it on demand.
    """

    __slots__ = ("dim", "pivots")

    def __init__(self, dim: int):
        self.dim = dim
        self.pivots: dict[int, list[int]] = {}

    def copy(self) -> "_Echelon":
        e = _Echelon(self.dim)
        e.pivots = {k: v[:] for k, v in self.pivots.items()}
        return e

    def insert(self, vec: Sequence[int]) -> bool:
        """Add a vector to the span; returns True if the span grew."""
        v = list(vec)
        grew = False
        while True:
            lead = next((i for i, x in enumerate(v) if x), None)
            if lead is None:
                return grew
            if lead not in self.pivots:
                if v[lead] < 0:
                    v = [-x for x in v]
                self.pivots[lead] = v
                return True
            w = self.pivots[lead]
            if v[lead] % w[lead] == 0:
                q = v[lead] // w[lead]
                v = [a - q * b for a, b in zip(v, w)]
            else:
                g, s, t = xgcd(w[lead], v[lead])
                new = [s * a + t * b for a, b in zip(w, v)]
                q = w[lead] // g
                w_rem = [a - q * b for a, b in zip(w, new)]
                self.pivots[lead] = new
                grew = True
                self.insert(w_rem)
                q = v[lead] // g
                v = [a - q * b for a, b in zip(v, new)]

    def contains(self, vec: Sequence[int]) -> bool:
        v = list(vec)
        for i in range(self.dim):
            if v[i]:
                w = self.pivots.get(i)
                if w is None or v[i] % w[i]:
                    return False
                q = v[i] // w[i]
                v = [a - q * b for a, b in zip(v, w)]
        return True

    def multiple_order(self, vec: Sequence[int]) -> int | None:
        """Least n >= 1 with n*vec in the span, or None if no such n."""
        v = [Fraction(x) for x in vec]
        denom = 1
        for i in range(self.dim):
            if v[i]:
                w = self.pivots.get(i)
                if w is None:
                    return None
                q = v[i] / w[i]
                denom = denom * q.denominator // gcd(denom, q.denominator)
                v = [a - q * b for a, b in zip(v, w)]
        return denom

    def rank(self) -> int:
        return len(self.pivots)

    def index(self) -> int | None:
        """[Z^dim : span], or None when the span has lower rank."""
        if len(self.pivots) < self.dim:
            return None
        n = 1
        for lead, v in self.pivots.items():
            n *= abs(v[lead])
        return n

    def basis_columns(self) -> list[list[int]]:
        """Canonical HNF basis: sorted leads, positive pivots, entries at
        later pivot positions reduced into [0, pivot)."""
        leads = sorted(self.pivots)
        basis = [self.pivots[l][:] for l in leads]
        for a in range(len(leads)):
            for b in range(a + 1, len(leads)):
                lead_b = leads[b]
                pivot = basis[b][lead_b]
                q = basis[a][lead_b] // pivot
                if q:
                    basis[a] = [x - q * y for x, y in zip(basis[a], basis[b])]
        return basis


class Lattice:
    """Sublattice of Z^ambient_dim spanned by integer vectors."""

    __slots__ = ("ambient_dim", "_ech")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence[int]] = ()):
        self.ambient_dim = ambient_dim
        self._ech = _Echelon(ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("dimension mismatch")
            self._ech.insert(v)

    @property
    def basis(self) -> IntMat:
        """Basis in canonical column HNF."""
        return IntMat.from_columns(self._ech.basis_columns(), self.ambient_dim)

    @property
    def rank(self) -> int:
        return self._ech.rank()

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return self._ech.contains(v)

    def add(self, vectors: Iterable[Sequence[int]]) -> "Lattice":
        """HNF basis of self + Z*vectors (new object; self unchanged)."""
        out = Lattice(self.ambient_dim)
        out._ech = self._ech.copy()
        for v in vectors:
            if len(v) != self.ambient_dim:
                raise ValueError("dimension mismatch")
            out._ech.insert(v)
        return out

    def index(self) -> int | None:
        return self._ech.index()

    def multiple_order(self, v: Sequence[int]) -> int | None:
        return self._ech.multiple_order(v)

    def vectors(self) -> list[list[int]]:
        return [v[:] for v in self._ech.pivots.values()]

    def abelian_type(self) -> AbelianType:
        cols = self.vectors()
        if not cols:
            return AbelianType((), self.ambient_dim)
        return abelian_type(IntMat.from_columns(cols, self.ambient_dim), self.ambient_dim)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Lattice)
            and self.ambient_dim == other.ambient_dim
            and self.basis.data == other.basis.data
        )


def lattice_contains(lat: Lattice, v: Sequence[int]) -> bool:
    return lat.contains(v)


def lattice_add(lat: Lattice, vectors: Iterable[Sequence[int]]) -> Lattice:
    return lat.add(vectors)
