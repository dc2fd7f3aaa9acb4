"""Exact linear algebra over Z_k for composite k.

Matrices over Z_k are immutable values (`ZkMatrix`).  The central normal
form is the Howell form: the unique echelon form characterizing a row span
over a ring with zero divisors, where Hermite/Smith forms are not
span-canonical.  Two matrices have the same row span over Z_k iff their
Howell forms are identical, which is what makes code identity testing work.

Hard precondition: 2 <= k <= 1000.  All entries live in [0, k), so every
intermediate product in the integer algorithms stays far below 2**63 and
machine arithmetic in the compiled kernels is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .kernels import howell_core

K_MAX = 1000


@dataclass(frozen=True)
class ZkMatrix:
    """Immutable matrix over Z_k, row-major, entries reduced into [0, k).

    `cols` is stored explicitly because a matrix may have zero rows (the
    empty matrix represents the zero module).
    """

    k: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not 2 <= self.k <= K_MAX:
            raise ValueError(f"modulus must be in [2, {K_MAX}], got {self.k}")
        if self.cols < 0:
            raise ValueError("cols must be nonnegative")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
            for e in row:
                if not 0 <= e < self.k:
                    raise ValueError(f"entry {e} out of range [0, {self.k})")

    @property
    def rows(self) -> int:
        return len(self.entries)

    def tolists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def zk_matrix(k: int, rows, cols: int | None = None) -> ZkMatrix:
    """Build a ZkMatrix from any iterable of rows, reducing entries mod k."""
    reduced = tuple(tuple(x % k for x in row) for row in rows)
    if cols is None:
        if not reduced:
            raise ValueError("cols is required for a matrix with no rows")
        cols = len(reduced[0])
    return ZkMatrix(k, cols, reduced)


def howell_form(m: ZkMatrix) -> ZkMatrix:
    """The unique Howell normal form of the row span of m.

    Row-echelon over Z_k with zero rows removed; every pivot divides k;
    entries above a pivot are reduced modulo it; annihilator rows are
    included so that every row whose span lies in the matrix's span is a
    Z_k-combination of the rows.  Equal row spans give identical forms.
    """
    out = howell_core(m.tolists(), m.k, m.cols)
    return ZkMatrix(m.k, m.cols, tuple(tuple(r) for r in out))


def row_span_cardinality(m: ZkMatrix) -> int:
    """Number of vectors in the row span; requires m in Howell form.

    Each Howell row with pivot p contributes a factor k/p.
    """
    card = 1
    for row in m.entries:
        p = next(x for x in row if x)
        card *= m.k // p
    return card


def mat_mul_mod_k(a: ZkMatrix, b: ZkMatrix) -> ZkMatrix:
    """Matrix product with entries reduced mod k."""
    if a.k != b.k:
        raise ValueError(f"modulus mismatch: {a.k} != {b.k}")
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.cols} != {b.rows}")
    k = a.k
    bt = list(zip(*b.entries)) if b.entries else [()] * b.cols
    out = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % k for col in bt)
        for row in a.entries
    )
    return ZkMatrix(k, b.cols, out)


# ---------------------------------------------------------------------------
# Integer-matrix helpers (exact, no floating point anywhere).

def det_int(m) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for r in range(i + 1, n):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
            a[r][i] = 0
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def adjugate(m) -> list[list[int]]:
    """Adjugate of a square integer matrix: adj(m) @ m = det(m) * I."""
    n = len(m)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[m[r][c] for c in range(n) if c != i]
                     for r in range(n) if r != j]
            adj[i][j] = (-1) ** (i + j) * det_int(minor)
    return adj


def integer_hnf(rows, ncols: int) -> list[list[int]]:
    """Row Hermite normal form over Z; returns only the nonzero rows.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    """
    m = [list(r) for r in rows]
    pivots = []
    r0 = 0
    for c in range(ncols):
        piv = None
        for r in range(r0, len(m)):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[r0], m[piv] = m[piv], m[r0]
        for r in range(r0 + 1, len(m)):
            while m[r][c] != 0:
                if abs(m[r][c]) < abs(m[r0][c]):
                    m[r0], m[r] = m[r], m[r0]
                q = m[r][c] // m[r0][c]
                m[r] = [a - q * b for a, b in zip(m[r], m[r0])]
        if m[r0][c] < 0:
            m[r0] = [-a for a in m[r0]]
        pivots.append((r0, c))
        r0 += 1
    for (r, c) in reversed(pivots):
        for r2 in range(r):
            q = m[r2][c] // m[r][c]
            if q:
                m[r2] = [a - q * b for a, b in zip(m[r2], m[r])]
    return [m[r] for r, _ in pivots]


def smith_diagonal_with_right(rows, nrows: int, ncols: int):
    """Diagonalize an integer matrix by row and column operations.

    Returns (diag, v) where diag is the list of diagonal entries of U@m@V
    for unimodular U, V, and v is the ncols x ncols right transform V.
    Only V is tracked; that is all the kernel computation needs.
    """
    m = [list(r) for r in rows]
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_op(j1: int, j2: int, f: int) -> None:
        for r in m:
            r[j2] += f * r[j1]
        for r in v:
            r[j2] += f * r[j1]

    def col_swap(j1: int, j2: int) -> None:
        for r in m:
            r[j1], r[j2] = r[j2], r[j1]
        for r in v:
            r[j1], r[j2] = r[j2], r[j1]

    for s in range(min(nrows, ncols)):
        while True:
            best = None
            for i in range(s, nrows):
                for j in range(s, ncols):
                    if m[i][j] != 0 and (
                        best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])
                    ):
                        best = (i, j)
            if best is None:
                break
            i0, j0 = best
            if i0 != s:
                m[s], m[i0] = m[i0], m[s]
            if j0 != s:
                col_swap(s, j0)
            if m[s][s] < 0:
                m[s] = [-a for a in m[s]]
            clean = True
            for i in range(s + 1, nrows):
                if m[i][s] != 0:
                    if m[i][s] % m[s][s] != 0:
                        clean = False
                    q = m[i][s] // m[s][s]
                    m[i] = [a - q * b for a, b in zip(m[i], m[s])]
            for j in range(s + 1, ncols):
                if m[s][j] != 0:
                    if m[s][j] % m[s][s] != 0:
                        clean = False
                    col_op(s, j, -(m[s][j] // m[s][s]))
            if clean and all(m[i][s] == 0 for i in range(s + 1, nrows)) \
                    and all(m[s][j] == 0 for j in range(s + 1, ncols)):
                break
    diag = [m[i][i] if i < nrows else 0 for i in range(min(nrows, ncols))]
    return diag, v


def kernel_mod_k(m: ZkMatrix) -> ZkMatrix:
    """Howell-form generators of { x in Z_k^cols : m @ x^T == 0 mod k }.

    Computed by lifting to Z, diagonalizing [m] with a tracked right
    transform, and scaling the transform columns by k/gcd(d_i, k); this is
    robust for composite k including prime powers.
    """
    k, ncols = m.k, m.cols
    if m.rows == 0:
        ident = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
        return ZkMatrix(k, ncols, tuple(tuple(r) for r in ident))
    diag, v = smith_diagonal_with_right(m.tolists(), m.rows, ncols)
    gens = []
    for i in range(ncols):
        d = diag[i] if i < len(diag) else 0
        g = gcd(d, k)
        c = k // g if g else 1
        gens.append([(c * v[r][i]) % k for r in range(ncols)])
    out = howell_core(gens, k, ncols)
    return ZkMatrix(k, ncols, tuple(tuple(r) for r in out))
