"""k-frame enumeration and the frame-to-code projection.

A k-frame of an n-dimensional lattice is a set of n pairwise-orthogonal
vectors of modeled norm k.  Frames are found as n-cliques in the graph
whose vertices are antipodal classes of norm-k vectors and whose edges
join orthogonal pairs.  Projecting a lattice through a frame,
x -> ((x, f_i) mod k)_i, yields a self-dual Z_k-code whose Construction A
lattice is the one we started from, which is what turns frame enumeration
into code classification.

Two enumeration entry points exist: `enumerate_frames` returns every frame
up to antipodal sign normalization, while `covering_frames` applies a
symmetry reduction (anchoring on orbit representatives of vertices under
cheaply detected lattice automorphisms) that yields a superset of orbit
representatives.  The covering output is complete for classification only
because deduplication happens at the code level afterwards: lattice
automorphisms map frames to frames with monomially equivalent codes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .codes import ZkCode, code_from_rows
from .kernels import cliques_fixed_size, orth_bitsets
from .lattices import ScaledLattice, is_unimodular, short_vectors, standard_lattice, LatticeClass, ZN


class FrameError(ValueError):
    """Vectors fail frame validity (membership, norm, or orthogonality)."""


def sign_normalize(v) -> tuple[int, ...]:
    """Antipodal-class representative: first nonzero coordinate positive."""
    for x in v:
        if x > 0:
            return tuple(v)
        if x < 0:
            return tuple(-y for y in v)
    return tuple(v)


@dataclass(frozen=True)
class Frame:
    """n pairwise-orthogonal vectors of modeled norm k, sign-normalized
    and sorted, so equal frames compare equal."""

    k: int
    n: int
    vectors: tuple[tuple[int, ...], ...]


def make_frame(l: ScaledLattice, k: int, vectors) -> Frame:
    """Validate and canonicalize a frame of l with modeled norm k."""
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if len(vecs) != l.n:
        raise FrameError(f"need {l.n} vectors, got {len(vecs)}")
    for v in vecs:
        if not l.contains(v):
            raise FrameError(f"{v} is not a lattice vector")
    for i, u in enumerate(vecs):
        for j, v in enumerate(vecs):
            want = k if i == j else 0
            if l.inner(u, v) != want:
                raise FrameError(
                    f"inner product of vectors {i}, {j} is {l.inner(u, v)}, want {want}"
                )
    return Frame(k, l.n, tuple(sorted(sign_normalize(v) for v in vecs)))


def _frame_vertices(l: ScaledLattice, k: int) -> list[tuple[int, ...]]:
    return sorted({sign_normalize(v) for v in short_vectors(l, k)})


def enumerate_frames(l: ScaledLattice, k: int) -> list[Frame]:
    """Every k-frame of l up to antipodal sign normalization.

    This is the full clique enumeration with no symmetry reduction; use
    `covering_frames` inside classification pipelines.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not is_unimodular(l):
        raise ValueError("frame enumeration requires a unimodular lattice")
    vecs = _frame_vertices(l, k)
    if len(vecs) < l.n:
        return []
    adj = orth_bitsets(vecs)
    out = []
    for cl in cliques_fixed_size(adj, l.n):
        out.append(Frame(k, l.n, tuple(vecs[i] for i in cl)))
    out.sort(key=lambda f: f.vectors)
    return out


# ---------------------------------------------------------------------------
# Symmetry-reduced (covering) enumeration.

def _visible_automorphisms(l: ScaledLattice):
    """Monomial maps that preserve the lattice, found by direct probing.

    Probes all transpositions and all single and double sign flips; the
    group they generate is the full signed permutation group for the cubic
    lattice and a large subgroup for the block models.  Any subgroup works:
    completeness of the covering search never depends on which
    automorphisms are found, only dedupe effort does.
    """
    n = l.n
    gens = []
    idp = tuple(range(n))
    ones = (1,) * n

    def preserves(perm, signs) -> bool:
        return all(
            l.contains([signs[j] * b[perm[j]] for j in range(n)]) for b in l.basis
        )

    for i in range(n):
        for j in range(i + 1, n):
            p = list(idp)
            p[i], p[j] = p[j], p[i]
            if preserves(tuple(p), ones):
                gens.append((tuple(p), ones))
    for i in range(n):
        s = [1] * n
        s[i] = -1
        if preserves(idp, tuple(s)):
            gens.append((idp, tuple(s)))
    for i in range(n):
        for j in range(i + 1, n):
            s = [1] * n
            s[i] = s[j] = -1
            if preserves(idp, tuple(s)):
                gens.append((idp, tuple(s)))
    return gens


def _vertex_orbits(vecs, gens) -> list[list[int]]:
    """Orbit partition of sign-normalized vertices under generated maps."""
    index = {v: i for i, v in enumerate(vecs)}
    seen = [False] * len(vecs)
    orbits = []
    for i, v in enumerate(vecs):
        if seen[i]:
            continue
        orb = [i]
        seen[i] = True
        queue = [v]
        while queue:
            u = queue.pop()
            for perm, signs in gens:
                w = sign_normalize([signs[j] * u[perm[j]] for j in range(len(u))])
                j = index[w]
                if not seen[j]:
                    seen[j] = True
                    orb.append(j)
                    queue.append(w)
        orbits.append(sorted(orb))
    return orbits


def covering_frames(l: ScaledLattice, k: int) -> Iterator[Frame]:
    """Frames covering every lattice-automorphism orbit at least once.

    Orbits of vertices under visible automorphisms are processed in order;
    for orbit i, all frames through its anchor using only vertices from
    orbits >= i are emitted.  Every frame F maps, under an automorphism
    sending its lowest-orbit vector to that orbit's anchor, to an emitted
    frame, and automorphic frames project to equivalent codes, so code-level
    deduplication of the emitted frames classifies completely.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    vecs = _frame_vertices(l, k)
    if len(vecs) < l.n:
        return
    gens = _visible_automorphisms(l)
    orbits = _vertex_orbits(vecs, gens)
    removed: set[int] = set()
    for orb in orbits:
        anchor = orb[0]
        # induced subgraph on the anchor's orthogonal, not-yet-removed vertices
        cand_idx = []
        av = vecs[anchor]
        for i in range(len(vecs)):
            if i in removed or i == anchor:
                continue
            if sum(a * b for a, b in zip(av, vecs[i])) == 0:
                cand_idx.append(i)
        if len(cand_idx) >= l.n - 1:
            sub = [vecs[i] for i in cand_idx]
            adj = orth_bitsets(sub)
            for cl in cliques_fixed_size(adj, l.n - 1):
                vectors = [av] + [sub[i] for i in cl]
                yield Frame(k, l.n, tuple(sorted(vectors)))
        removed.update(orb)


def project_frame(l: ScaledLattice, f: Frame) -> ZkCode:
    """The self-dual Z_k-code obtained by projecting l through the frame.

    Rows are the images of the basis under x -> ((x, f_i) mod k)_i; the
    code is their Howell-form span.
    """
    k = f.k
    for v in f.vectors:
        if not l.contains(v):
            raise FrameError("frame does not lie in the lattice")
    rows = []
    for b in l.basis:
        rows.append([l.inner(b, fi) % k for fi in f.vectors])
    return code_from_rows(k, l.n, rows)


# ---------------------------------------------------------------------------
# Explicit 4x4 frame constructors.

@dataclass(frozen=True)
class ODMatrix:
    """4x4 matrix in the variables (x1..x4); kind "M" satisfies
    A A^T = (sum x_i^2) I identically, kind "N" only under the bilinear
    condition x1*x3 + x1*x4 - x2*x3 + x2*x4 == 0."""

    kind: str
    variables: tuple[int, int, int, int]
    rows: tuple[tuple[int, ...], ...]


def od_matrix_m(x) -> ODMatrix:
    x1, x2, x3, x4 = x
    rows = (
        (x1, x2, x3, x4),
        (-x2, x1, -x4, x3),
        (-x3, x4, x1, -x2),
        (-x4, -x3, x2, x1),
    )
    return ODMatrix("M", (x1, x2, x3, x4), rows)


def od_matrix_n(x) -> ODMatrix:
    x1, x2, x3, x4 = x
    rows = (
        (x1, x2, x3, x4),
        (-x2, x1, -x4, x3),
        (x4, -x3, x1, x2),
        (x3, x4, -x2, x1),
    )
    return ODMatrix("N", (x1, x2, x3, x4), rows)


def n_condition(x) -> int:
    """The bilinear obstruction for the N matrix; zero means orthogonal."""
    x1, x2, x3, x4 = x
    return x1 * x3 + x1 * x4 - x2 * x3 + x2 * x4


_Z4 = standard_lattice(LatticeClass(ZN, 4))


def od_frame_M(x, k: int) -> Frame:
    """k-frame of Z^4 from the rows of the orthogonal design matrix M.

    Requires x1^2 + x2^2 + x3^2 + x4^2 == k; every k admits such a
    quadruple, so this yields a k-frame for every k.
    """
    if sum(v * v for v in x) != k:
        raise ValueError(f"sum of squares of {tuple(x)} is not {k}")
    return make_frame(_Z4, k, od_matrix_m(x).rows)


def od_frame_N(x, k: int) -> Frame:
    """k-frame of Z^4 from the rows of N, valid only under the condition.

    Requires the sum of squares to be k and the bilinear condition
    x1*x3 + x1*x4 - x2*x3 + x2*x4 == 0; N is not an orthogonal design, so
    violating the condition is an error rather than a frame.
    """
    if sum(v * v for v in x) != k:
        raise ValueError(f"sum of squares of {tuple(x)} is not {k}")
    if n_condition(x) != 0:
        raise ValueError(f"bilinear condition violated for {tuple(x)}")
    return make_frame(_Z4, k, od_matrix_n(x).rows)


def frame_f9() -> Frame:
    """A 9-frame of Z^4 extending a 9-frame of Z^3 by a diagonal vector
    (possible exactly because 9 is a square)."""
    return make_frame(
        _Z4, 9, [(1, 2, 2, 0), (-2, -1, 2, 0), (-2, 2, -1, 0), (0, 0, 0, 3)]
    )
