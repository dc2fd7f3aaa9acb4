"""Monomial equivalence of Z_k-codes: canonical forms and deduplication.

Two codes are equivalent when one is the image of the other under a
coordinate permutation combined with per-coordinate sign flips (a monomial
map; group order 2^n n!).  The canonical form of a code is the smallest
Howell generator matrix over its orbit, where matrices are compared as
column-major flattenings zero-padded to n rows.  Column-major order makes
the comparison prefix-decomposable: the padded first j columns of a Howell
form equal the padded Howell form of the code's projection onto those j
coordinates, so a partial choice of column images already determines a
prefix of the final key.  That is what lets the search prune; equivalent
codes get identical canonical forms either way, which is all that counts.

For n <= 4 the orbit (at most 384 maps) is exhausted outright.  For
5 <= n <= 9 a level-by-level search keeps, per level, exactly the partial
column choices achieving the minimal key prefix, deduplicated by their
projected submatrices (identical submatrices have identical futures).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .codes import (
    BudgetExceededError,
    ZkCode,
    cardinality,
    code_type,
    symmetrized_weight_enumerator,
)
from .kernels import howell_core
from .ring_linalg import zk_matrix, howell_form


@dataclass(frozen=True)
class MonomialMap:
    """Permutation plus signs acting on row vectors over Z_k.

    The action is (x * P)_j = signs[j] * x[src[j]]: src names, for each
    target coordinate, the source coordinate feeding it.
    """

    n: int
    src: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.src) != list(range(self.n)):
            raise ValueError("src must be a permutation of 0..n-1")
        if len(self.signs) != self.n or any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +1/-1 of length n")

    @property
    def perm(self) -> tuple[int, ...]:
        """Where each source coordinate lands: perm[i] = j iff src[j] = i."""
        out = [0] * self.n
        for j, p in enumerate(self.src):
            out[p] = j
        return tuple(out)

    @staticmethod
    def identity(n: int) -> "MonomialMap":
        return MonomialMap(n, tuple(range(n)), (1,) * n)

    def compose(self, other: "MonomialMap") -> "MonomialMap":
        """Map acting as: apply self first, then other."""
        if self.n != other.n:
            raise ValueError("length mismatch")
        src = tuple(self.src[other.src[j]] for j in range(self.n))
        signs = tuple(other.signs[j] * self.signs[other.src[j]] for j in range(self.n))
        return MonomialMap(self.n, src, signs)

    def inverse(self) -> "MonomialMap":
        inv_src = [0] * self.n
        inv_signs = [1] * self.n
        for j, p in enumerate(self.src):
            inv_src[p] = j
            inv_signs[p] = self.signs[j]
        return MonomialMap(self.n, tuple(inv_src), tuple(inv_signs))

    def apply_vector(self, x, k: int) -> tuple[int, ...]:
        return tuple((self.signs[j] * x[self.src[j]]) % k for j in range(self.n))


def all_monomial_maps(n: int):
    """Every monomial map of length n (2^n n! of them)."""
    for src in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield MonomialMap(n, src, signs)


def apply(c: ZkCode, p: MonomialMap) -> ZkCode:
    """Image code under a monomial map, re-canonicalized to Howell form."""
    if p.n != c.n:
        raise ValueError(f"map length {p.n} != code length {c.n}")
    rows = [p.apply_vector(row, c.k) for row in c.gen.entries]
    return ZkCode(c.k, c.n, howell_form(zk_matrix(c.k, rows, cols=c.n)))


def _padded_key(rows, n: int, ncols: int):
    """Column-major flattening of `rows` zero-padded to n rows."""
    r = len(rows)
    return tuple(
        rows[i][j] if i < r else 0 for j in range(ncols) for i in range(n)
    )


def _canonical_rows_exhaustive(rows, k: int, n: int):
    best_key = None
    best = None
    base = [list(r) for r in rows]
    for src in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            img = [
                [(signs[j] * row[src[j]]) % k for j in range(n)] for row in base
            ]
            h = howell_core(img, k, n)
            key = _padded_key(h, n, n)
            if best_key is None or key < best_key:
                best_key = key
                best = h
    return tuple(tuple(r) for r in best)


def _canonical_rows_backtrack(rows, k: int, n: int):
    """Level search over column images keeping only minimal key prefixes.

    Frontier branches are deduplicated by their composite state: the rows
    of [projected prefix || surviving original columns], as a sorted
    multiset.  Two branches equal under some row permutation have
    identical futures, because a completion appends, row by row, entries
    drawn positionally from the survivors, and the Howell form behind the
    comparison key is row-order invariant.  This collapses the stabilizer
    orbits that otherwise grow the argmin frontier factorially on highly
    symmetric codes (the memory blow-up shows up from length 8 onward).
    """
    base = [list(r) for r in rows]
    frontier: list[tuple] = [()]
    best_key = None
    for level in range(n):
        best_key = None
        best: list[tuple] = []
        seen_states: set = set()
        for choice in frontier:
            used = {p for p, _ in choice}
            survivors = [q for q in range(n) if q not in used]
            for p in range(n):
                if p in used:
                    continue
                for s in (1, -1):
                    nc = choice + ((p, s),)
                    proj = tuple(
                        tuple((sg * row[pp]) % k for pp, sg in nc) for row in base
                    )
                    h = howell_core([list(r) for r in proj], k, level + 1)
                    key = _padded_key(h, n, level + 1)
                    if best_key is not None and key > best_key:
                        continue
                    rest = [q for q in survivors if q != p]
                    state = tuple(
                        sorted(
                            proj[i] + tuple(base[i][q] for q in rest)
                            for i in range(len(base))
                        )
                    )
                    if best_key is None or key < best_key:
                        best_key = key
                        best = [nc]
                        seen_states = {state}
                    elif state not in seen_states:
                        seen_states.add(state)
                        best.append(nc)
        frontier = best
    mat = [[best_key[j * n + i] for j in range(n)] for i in range(n)]
    return tuple(tuple(r) for r in mat if any(r))


def canonical_rows(rows, k: int, n: int):
    """Canonical Howell form (tuple rows) over the monomial orbit."""
    if n > 9:
        raise BudgetExceededError("canonicalization is designed for n <= 9")
    if not rows:
        return ()
    if n <= 4:
        return _canonical_rows_exhaustive(rows, k, n)
    return _canonical_rows_backtrack(rows, k, n)


def canonical_form(c: ZkCode) -> ZkCode:
    """Canonical representative of the code's equivalence class.

    Two codes are equivalent iff their canonical forms are equal.
    """
    rows = canonical_rows(c.gen.entries, c.k, c.n)
    return ZkCode(c.k, c.n, zk_matrix(c.k, rows, cols=c.n))


def are_equivalent(c1: ZkCode, c2: ZkCode) -> bool:
    """Monomial equivalence test with invariant fast-rejects.

    Cardinality, type, and the symmetrized weight signature are monomial
    invariants, so mismatches prove inequivalence without canonicalizing;
    the signature step quietly drops out when the code is too large for its
    enumeration budget.
    """
    if (c1.k, c1.n) != (c2.k, c2.n):
        raise ValueError("codes must share modulus and length")
    if c1.gen == c2.gen:
        return True
    if cardinality(c1) != cardinality(c2):
        return False
    if code_type(c1) != code_type(c2):
        return False
    try:
        if symmetrized_weight_enumerator(c1) != symmetrized_weight_enumerator(c2):
            return False
    except BudgetExceededError:
        pass
    return canonical_rows(c1.gen.entries, c1.k, c1.n) == canonical_rows(
        c2.gen.entries, c2.k, c2.n
    )


def dedupe(codes) -> list[ZkCode]:
    """One canonical representative per equivalence class, sorted.

    Input codes must share (k, n); output order is by generator matrix, so
    it is independent of input order and of any parallel schedule that
    produced the input.
    """
    codes = list(codes)
    if not codes:
        return []
    k, n = codes[0].k, codes[0].n
    if any((c.k, c.n) != (k, n) for c in codes):
        raise ValueError("mixed parameters in dedupe")
    seen: dict[tuple, tuple] = {}
    out: set[tuple] = set()
    for c in codes:
        raw = c.gen.entries
        if raw in seen:
            continue
        canon = canonical_rows(raw, k, n)
        seen[raw] = canon
        out.add(canon)
    return [
        ZkCode(k, n, zk_matrix(k, rows, cols=n)) for rows in sorted(out)
    ]
