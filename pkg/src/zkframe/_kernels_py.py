"""Pure-Python kernel twins.

Same contracts as the compiled extension `_kernels`; see `kernels` for the
selection logic.  All functions are deterministic and allocation-only (inputs
are never mutated).  Moduli are assumed to fit the documented bound k <= 1000
so intermediate products stay far below 2**63.
"""
from math import gcd, isqrt


def _unit_for(a: int, n: int) -> int:
    """Unit u mod n with (u * a) % n == gcd(a, n)."""
    a %= n
    if a == 0:
        return 1
    d = gcd(a, n)
    ap, np_ = a // d, n // d
    u = pow(ap, -1, np_) if np_ > 1 else 1
    while gcd(u, n) != 1:
        u += np_
    return u % n


def _egcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def howell_core(rows, n: int, ncols: int):
    """Howell form of the row span of `rows` over Z_n, zero rows stripped.

    Output rows are in echelon order; each pivot divides n, entries above a
    pivot are reduced modulo the pivot, and annihilator rows are propagated
    so the span of every column prefix is represented.  The result is the
    unique such matrix for the span.
    """
    slot = [None] * ncols  # slot[j]: pivot row with leading column j
    stack = [[x % n for x in r] for r in rows]
    stack.reverse()
    while stack:
        v = stack.pop()
        l = 0
        while l < ncols and v[l] == 0:
            l += 1
        if l == ncols:
            continue
        pv = slot[l]
        if pv is None:
            u = _unit_for(v[l], n)
            row = [(u * x) % n for x in v]
            slot[l] = row
            ann = n // gcd(row[l], n)
            if ann % n != 0:
                w = [(ann * x) % n for x in row]
                w[l] = 0
                stack.append(w)
            continue
        a, b = pv[l], v[l]
        g = gcd(a, n)
        if b % g == 0:
            # v eliminates directly: q*a == b (mod n)
            q = ((b // g) * pow(a // g, -1, n // g)) % (n // g) if n > g else 0
            w = [(x - q * y) % n for x, y in zip(v, pv)]
            w[l] = 0
            stack.append(w)
        else:
            g2, s, t = _egcd(a, b)
            new_pv = [(s * x + t * y) % n for x, y in zip(pv, v)]
            w = [((a // g2) * y - (b // g2) * x) % n for x, y in zip(pv, v)]
            w[l] = 0
            u = _unit_for(new_pv[l], n)
            new_pv = [(u * x) % n for x in new_pv]
            slot[l] = new_pv
            ann = n // gcd(new_pv[l], n)
            if ann % n != 0:
                w2 = [(ann * x) % n for x in new_pv]
                w2[l] = 0
                stack.append(w2)
            stack.append(w)
    cols = [j for j in range(ncols) if slot[j] is not None]
    for idx, j in enumerate(cols):
        p = slot[j][j]
        for j2 in cols[:idx]:
            row2 = slot[j2]
            q = row2[j] // p
            if q:
                slot[j2] = [(x - q * y) % n for x, y in zip(row2, slot[j])]
    return [slot[j] for j in cols]


def orth_bitsets(vecs):
    """Adjacency bitsets of the orthogonality graph on integer vectors.

    Bit j of row i is set iff vecs[i] . vecs[j] == 0 (i != j).
    """
    m = len(vecs)
    adj = [0] * m
    for i in range(m):
        vi = vecs[i]
        for j in range(i + 1, m):
            s = 0
            for a, b in zip(vi, vecs[j]):
                s += a * b
            if s == 0:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def cliques_fixed_size(adj, size: int):
    """All cliques of exactly `size` vertices, as ascending index tuples.

    Emission order is lexicographic.  `adj` is the bitset adjacency from
    orth_bitsets.
    """
    if size < 0:
        return []
    if size == 0:
        return [()]
    out = []
    m = len(adj)
    clique = []

    def extend(cand: int) -> None:
        need = size - len(clique)
        if need == 0:
            out.append(tuple(clique))
            return
        if cand.bit_count() < need:
            return
        c = cand
        while c:
            i = (c & -c).bit_length() - 1
            c &= c - 1
            clique.append(i)
            extend(cand & adj[i] & ~((1 << (i + 1)) - 1))
            clique.pop()

    extend((1 << m) - 1)
    return out


def norm_vectors(n: int, target: int):
    """All v in Z^n with sum(v_i^2) == target, in lexicographic order."""
    out = []
    v = [0] * n

    def rec(i: int, rem: int) -> None:
        if i == n:
            if rem == 0:
                out.append(tuple(v))
            return
        b = isqrt(rem)
        for x in range(-b, b + 1):
            v[i] = x
            rec(i + 1, rem - x * x)
        v[i] = 0

    if target >= 1:
        rec(0, target)
    return out


def filter_members(vecs, adj_cols, det: int):
    """Keep the vectors lying in the lattice with adjugate columns `adj_cols`.

    v is in the lattice iff v . adj_col_j == 0 (mod det) for every column;
    adj_cols is the adjugate matrix of the basis, given row-major, so column
    j of the adjugate is adj_cols[i][j] over i.
    """
    n = len(adj_cols)
    d = abs(det)
    out = []
    for v in vecs:
        ok = True
        for j in range(n):
            s = 0
            for i in range(n):
                s += v[i] * adj_cols[i][j]
            if s % d != 0:
                ok = False
                break
        if ok:
            out.append(v)
    return out
