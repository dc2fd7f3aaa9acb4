"""Z_k-codes as immutable values.

A code is a submodule of Z_k^n held by its canonical Howell-form generator
matrix, so equality of values is equality of codes.  Besides duality and
self-duality this module provides the Euclidean-weight machinery behind the
Type I / Type II split, monomial-invariant fingerprints, the length
feasibility filter, and a small brute-force classifier used as an
independent oracle for the frame pipeline.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .kernels import howell_core
from .ring_linalg import (
    ZkMatrix,
    howell_form,
    kernel_mod_k,
    row_span_cardinality,
    zk_matrix,
)


class BudgetExceededError(RuntimeError):
    """An enumeration or search exceeded its configured budget."""


class CodeType(Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    NOT_SELF_DUAL = "not-self-dual"


@dataclass(frozen=True)
class ZkCode:
    """A Z_k-code of length n with Howell-form generator matrix `gen`."""

    k: int
    n: int
    gen: ZkMatrix

    def __post_init__(self) -> None:
        if self.gen.k != self.k or self.gen.cols != self.n:
            raise ValueError("generator matrix does not match (k, n)")

    def sort_key(self):
        return self.gen.entries


def code_from_rows(k: int, n: int, rows) -> ZkCode:
    """Code spanned by `rows` over Z_k (rows are Howell-reduced)."""
    return ZkCode(k, n, howell_form(zk_matrix(k, rows, cols=n)))


def cardinality(c: ZkCode) -> int:
    return row_span_cardinality(c.gen)


def dual(c: ZkCode) -> ZkCode:
    """Dual code under the standard inner product mod k."""
    return ZkCode(c.k, c.n, kernel_mod_k(c.gen))


def is_self_dual(c: ZkCode) -> bool:
    return kernel_mod_k(c.gen) == c.gen


def euclidean_weight(v, k: int) -> int:
    """Sum over coordinates of min(v_i^2, (k - v_i)^2).

    Defined for every k; the Type II divisibility test built on it is only
    meaningful for even k (`code_type` never consults it for odd k).
    """
    return sum(min((x % k) ** 2, (k - x % k) ** 2) for x in v)


def code_type(c: ZkCode) -> CodeType:
    """Type I / Type II tag of a self-dual code.

    Type II means k even and every Euclidean weight divisible by 2k.  For a
    self-orthogonal code it suffices to test g . g == 0 (mod 2k) on the
    Howell generator rows: min(a^2, (k-a)^2) == a^2 (mod 2k) when k is
    even, cross terms vanish because x . y == 0 (mod k) gives 2 x.y == 0
    (mod 2k), and (a x).(a x) = a^2 (x.x) keeps divisibility.
    """
    if not is_self_dual(c):
        return CodeType.NOT_SELF_DUAL
    if c.k % 2 != 0:
        return CodeType.TYPE_I
    two_k = 2 * c.k
    for row in c.gen.entries:
        if sum(x * x for x in row) % two_k != 0:
            return CodeType.TYPE_I
    return CodeType.TYPE_II


def codewords(c: ZkCode, budget: int = 10**7):
    """Yield every codeword exactly once, deterministically.

    Enumeration is lexicographic over the coefficient space of the Howell
    generators: a row with pivot p contributes coefficients 0..k/p-1, and
    each codeword has a unique such coefficient vector.
    """
    if cardinality(c) > budget:
        raise BudgetExceededError(
            f"|C| = {cardinality(c)} exceeds budget {budget}"
        )
    k, n = c.k, c.n
    rows = c.gen.entries
    ranges = []
    for row in rows:
        p = next(x for x in row if x)
        ranges.append(range(k // p))
    for coeffs in itertools.product(*ranges):
        w = [0] * n
        for a, row in zip(coeffs, rows):
            if a:
                for j in range(n):
                    w[j] = (w[j] + a * row[j]) % k
        yield tuple(w)


def symmetrized_weight_enumerator(c: ZkCode, budget: int = 10**7):
    """Counted multiset of symmetrized codeword signatures.

    Each codeword contributes the sorted tuple of min(v_i, k - v_i) over its
    coordinates; the result maps signature -> count.  Invariant under every
    coordinate permutation and sign flip, hence usable as an equivalence
    fast-reject.  Raises BudgetExceededError when |C| exceeds the budget,
    signalling the caller to fall back to generator-level invariants.
    """
    k = c.k
    sig: dict[tuple[int, ...], int] = {}
    for w in codewords(c, budget=budget):
        key = tuple(sorted(min(x, k - x) for x in w))
        sig[key] = sig.get(key, 0) + 1
    return sig


def _squarefree_part(k: int) -> int:
    s = 1
    d = 2
    m = k
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            if e % 2:
                s *= d
        d += 1
    if m > 1:
        s *= m
    return s


def allowed_length(k: int, n: int) -> bool:
    """Necessary condition for a self-dual Z_k-code of length n to exist.

    Square k: every length works.  Otherwise look at the squarefree part of
    k: if it has a prime factor congruent to 3 mod 4 the length must be
    divisible by four; if not (so only 2 and primes 1 mod 4 remain) the
    length must be even.  True is a filter pass, not an existence proof.
    """
    if k < 2:
        raise ValueError("modulus must be >= 2")
    s = _squarefree_part(k)
    if s == 1:
        return True
    if any(p % 4 == 3 for p in _prime_factors(s)):
        return n % 4 == 0
    return n % 2 == 0


def _prime_factors(m: int):
    d = 2
    while d * d <= m:
        if m % d == 0:
            yield d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        yield m


def _self_dual_size(k: int, n: int) -> int | None:
    """k^(n/2) when k^n is a perfect square, else None."""
    t = k**n
    r = isqrt(t)
    return r if r * r == t else None


def brute_force_classify(k: int, n: int, max_k: int = 5, max_n: int = 4) -> list[ZkCode]:
    """All self-dual Z_k-codes of length n up to monomial equivalence.

    Independent of the frame pipeline and of the pruned canonicalizer:
    grows self-orthogonal codes one generator at a time over the full
    vector space, keeps the ones of self-dual size, and deduplicates by
    exhaustively minimizing over all 2^n * n! monomial images.  Intended
    as an oracle; the default budget is k <= 5, n <= 4.
    """
    if k > max_k or n > max_n:
        raise BudgetExceededError(f"brute force limited to k <= {max_k}, n <= {max_n}")
    target = _self_dual_size(k, n)
    if target is None or not allowed_length(k, n):
        return []
    vectors = [v for v in itertools.product(range(k), repeat=n)
               if sum(x * x for x in v) % k == 0]

    def span_rows(rows):
        return tuple(tuple(r) for r in howell_core([list(r) for r in rows], k, n))

    complete: set[tuple] = set()
    seen_states: set[tuple] = set()
    frontier: list[tuple] = [()]
    while frontier:
        new_frontier = []
        for form in frontier:
            rows = [list(r) for r in form]
            size = row_span_cardinality(zk_matrix(k, rows, cols=n)) if rows else 1
            if size == target:
                complete.add(form)
                continue
            if size > target:
                continue
            span = set()
            if rows:
                span = set(codewords(ZkCode(k, n, zk_matrix(k, rows, cols=n))))
            for v in vectors:
                if v in span:
                    continue
                if rows and any(
                    sum(a * b for a, b in zip(v, r)) % k != 0 for r in rows
                ):
                    continue
                nxt = span_rows(rows + [list(v)])
                if nxt not in seen_states:
                    seen_states.add(nxt)
                    new_frontier.append(nxt)
        frontier = new_frontier

    sd = []
    for form in sorted(complete):
        c = ZkCode(k, n, zk_matrix(k, form, cols=n))
        if is_self_dual(c):
            sd.append(form)

    reps: set[tuple] = set()
    classed: set[tuple] = set()
    for form in sd:
        if form in classed:
            continue
        orbit = set()
        for perm in itertools.permutations(range(n)):
            for signs in itertools.product((1, -1), repeat=n):
                img = [[(signs[j] * row[perm[j]]) % k for j in range(n)]
                       for row in form]
                orbit.add(tuple(tuple(r) for r in howell_core(img, k, n)))
        classed |= orbit
        reps.add(min(orbit))
    return [ZkCode(k, n, zk_matrix(k, r, cols=n)) for r in sorted(reps)]
