"""Integer models of unimodular lattices and Construction A.

A ScaledLattice stores an integer basis whose rows generate a sublattice of
Z^n together with a scale s; the modeled lattice is (1/sqrt(s)) times that
sublattice, so modeled inner products are exact integers (u . v) / s and no
floating point or irrational arithmetic ever appears.

The reference E8 model uses doubled coordinates (scale 4): rows generate
the index-preserving double of the even unimodular rank-8 lattice, i.e.
{ y in Z^8 : y uniformly even or uniformly odd, sum(y) == 0 mod 4 }.  A
scale-1 integer model of E8 cannot exist, since a full-rank integral
embedding of a unimodular lattice into Z^8 with the standard form would
force it to equal Z^8.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .kernels import filter_members, norm_vectors
from .ring_linalg import adjugate, det_int, integer_hnf

ZN = "zn"
E8 = "e8"
E8Z = "e8z"

_TAGS = (ZN, E8, E8Z)


@dataclass(frozen=True)
class LatticeClass:
    """Isomorphism class of a unimodular lattice of dimension <= 9."""

    tag: str
    n: int

    def __post_init__(self) -> None:
        if self.tag not in _TAGS:
            raise ValueError(f"unknown lattice class tag {self.tag!r}")
        if self.tag == E8 and self.n != 8:
            raise ValueError("e8 requires n = 8")
        if self.tag == E8Z and self.n != 9:
            raise ValueError("e8z requires n = 9")
        if self.n < 1:
            raise ValueError("dimension must be positive")


def lattice_classes_for_length(n: int) -> list[LatticeClass]:
    """All unimodular lattice classes of dimension n (n <= 9)."""
    if n > 9:
        raise ValueError("only dimensions <= 9 are supported")
    out = [LatticeClass(ZN, n)]
    if n == 8:
        out.append(LatticeClass(E8, 8))
    if n == 9:
        out.append(LatticeClass(E8Z, 9))
    return out


class ScaledLattice:
    """Lattice with integer basis rows and inner product (u, v) / scale."""

    def __init__(self, basis, scale: int):
        self.basis = tuple(tuple(int(x) for x in row) for row in basis)
        self.scale = int(scale)
        self.n = len(self.basis)
        if self.scale < 1:
            raise ValueError("scale must be >= 1")
        if any(len(r) != self.n for r in self.basis):
            raise ValueError("basis must be square")
        self._det = det_int(self.basis)
        if self._det == 0:
            raise ValueError("basis must have nonzero determinant")
        self._adj = adjugate(self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ScaledLattice)
            and self.basis == other.basis
            and self.scale == other.scale
        )

    def __hash__(self) -> int:
        return hash((self.basis, self.scale))

    def __repr__(self) -> str:
        return f"ScaledLattice(n={self.n}, scale={self.scale})"

    @property
    def det(self) -> int:
        return self._det

    def inner(self, u, v) -> int:
        """Modeled inner product; raises if not an integer."""
        s = sum(a * b for a, b in zip(u, v))
        if s % self.scale != 0:
            raise ValueError("inner product not integral at this scale")
        return s // self.scale

    def contains(self, v) -> bool:
        """Membership of an integer coordinate row in the basis row span."""
        d = abs(self._det)
        for j in range(self.n):
            s = 0
            for i in range(self.n):
                s += v[i] * self._adj[i][j]
            if s % d != 0:
                return False
        return True


def standard_lattice(cls: LatticeClass) -> ScaledLattice:
    """Frozen reference model for a lattice class.

    Z^n: identity basis at scale 1.  E8: doubled-coordinate model at scale
    4 (see module docstring), Hermite-reduced for a deterministic basis.
    E8 + Z: block sum of the E8 model with a doubled Z row, scale 4.
    """
    if cls.tag == ZN:
        return ScaledLattice(
            [[1 if i == j else 0 for j in range(cls.n)] for i in range(cls.n)], 1
        )
    e8_gens = []
    for i in range(7):
        row = [0] * 8
        row[i], row[i + 1] = 2, -2
        e8_gens.append(row)
    row = [0] * 8
    row[6] = row[7] = 2
    e8_gens.append(row)
    e8_gens.append([1] * 8)
    e8_basis = integer_hnf(e8_gens, 8)
    if cls.tag == E8:
        return ScaledLattice(e8_basis, 4)
    basis9 = [list(r) + [0] for r in e8_basis] + [[0] * 8 + [2]]
    return ScaledLattice(basis9, 4)


def gram(l: ScaledLattice) -> list[list[int]]:
    return [[sum(a * b for a, b in zip(r1, r2)) for r2 in l.basis] for r1 in l.basis]


def is_unimodular(l: ScaledLattice) -> bool:
    """Integral with determinant one, in the modeled inner product."""
    g = gram(l)
    for row in g:
        for e in row:
            if e % l.scale != 0:
                return False
    return l.det * l.det == l.scale**l.n


def is_even(l: ScaledLattice) -> bool:
    """Every vector has even modeled norm; requires is_unimodular.

    Checking basis norms suffices: (u+v, u+v) = (u,u) + (v,v) + 2(u,v) and
    integrality makes the cross term even.
    """
    for row in l.basis:
        if (sum(x * x for x in row) // l.scale) % 2 != 0:
            return False
    return True


def short_vectors(l: ScaledLattice, norm: int) -> list[tuple[int, ...]]:
    """All lattice vectors of exactly the given modeled norm, sorted.

    Exact integer box enumeration over coordinates with partial-sum
    pruning, then membership filtering against the basis span; closed
    under negation by construction.
    """
    if norm < 1:
        raise ValueError("norm must be >= 1")
    cands = norm_vectors(l.n, norm * l.scale)
    ident = all(
        l.basis[i][j] == (1 if i == j else 0) for i in range(l.n) for j in range(l.n)
    )
    if ident:
        return sorted(cands)
    return sorted(filter_members(cands, l._adj, l._det))


def construction_a(c) -> ScaledLattice:
    """Scaled model of the Construction A lattice of a self-dual code.

    The integer rows are a Hermite basis of the preimage of the code in
    Z^n (generator lifts stacked over k times the identity), at scale k.
    The result is unimodular with |det| = k^(n/2).
    """
    from .codes import is_self_dual  # local import to avoid a cycle

    if not is_self_dual(c):
        raise ValueError("Construction A requires a self-dual code")
    k, n = c.k, c.n
    rows = [list(r) for r in c.gen.entries]
    rows += [[k if i == j else 0 for j in range(n)] for i in range(n)]
    basis = integer_hnf(rows, n)
    lat = ScaledLattice(basis, k)
    expect = isqrt(k**n)
    if abs(lat.det) != expect:
        raise AssertionError("preimage basis determinant mismatch")
    return lat


def identify_class(l: ScaledLattice) -> LatticeClass:
    """Isomorphism class of a unimodular lattice of dimension <= 9.

    Dimensions up to 7 have a unique class; dimension 8 splits by parity;
    dimension 9 splits by the number of modeled norm-1 vectors (18 for the
    cubic lattice, 2 for the even-plus-line sum).
    """
    n = l.n
    if n > 9:
        raise ValueError("only dimensions <= 9 are supported")
    if not is_unimodular(l):
        raise ValueError("identify_class requires a unimodular lattice")
    if n <= 7:
        return LatticeClass(ZN, n)
    if n == 8:
        return LatticeClass(E8, 8) if is_even(l) else LatticeClass(ZN, 8)
    ones = len(short_vectors(l, 1))
    if ones == 18:
        return LatticeClass(ZN, 9)
    if ones == 2:
        return LatticeClass(E8Z, 9)
    raise AssertionError(f"impossible norm-1 count {ones} for a unimodular 9-lattice")
