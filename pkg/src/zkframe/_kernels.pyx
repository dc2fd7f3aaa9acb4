# cython: language_level=3
"""Compiled kernel twins.

Same contracts as `_kernels_py`; see `kernels` for the selection logic.
Inputs are converted to C buffers at the boundary, outputs are plain
Python objects, and inputs are never mutated.  Arithmetic stays in C
longs; the documented modulus bound k <= 1000 keeps every intermediate
product far below 2**63.
"""
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy, memset


cdef long c_gcd(long a, long b) noexcept:
    cdef long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef void c_egcd(long a, long b, long *g, long *s, long *t) noexcept:
    cdef long old_r = a, r = b
    cdef long old_s = 1, s_ = 0
    cdef long old_t = 0, t_ = 1
    cdef long q, tmp
    while r:
        q = old_r // r
        tmp = old_r - q * r
        old_r = r
        r = tmp
        tmp = old_s - q * s_
        old_s = s_
        s_ = tmp
        tmp = old_t - q * t_
        old_t = t_
        t_ = tmp
    g[0] = old_r
    s[0] = old_s
    t[0] = old_t


cdef long c_inv_mod(long a, long n) noexcept:
    # inverse of a mod n, assuming gcd(a, n) == 1 and n >= 1
    cdef long g, s, t
    if n == 1:
        return 0
    c_egcd(a % n, n, &g, &s, &t)
    s %= n
    if s < 0:
        s += n
    return s


cdef long c_unit_for(long a, long n) noexcept:
    # unit u mod n with (u * a) % n == gcd(a, n)
    cdef long d, ap, np_, u
    a %= n
    if a < 0:
        a += n
    if a == 0:
        return 1
    d = c_gcd(a, n)
    ap = a // d
    np_ = n // d
    u = c_inv_mod(ap, np_) if np_ > 1 else 1
    while c_gcd(u, n) != 1:
        u += np_
    return u % n


cdef long c_isqrt(long r) noexcept:
    cdef long s
    if r <= 0:
        return 0
    s = <long> ((<double> r) ** 0.5)
    while s > 0 and s * s > r:
        s -= 1
    while (s + 1) * (s + 1) <= r:
        s += 1
    return s


# ---------------------------------------------------------------- howell

cdef struct RowStack:
    long *data
    Py_ssize_t top      # rows currently stored
    Py_ssize_t cap      # rows allocated
    Py_ssize_t width


cdef int stack_push(RowStack *st, long *row) except -1:
    cdef long *nd
    if st.top == st.cap:
        st.cap = st.cap * 2 if st.cap else 16
        nd = <long *> realloc(st.data, st.cap * st.width * sizeof(long))
        if nd == NULL:
            raise MemoryError()
        st.data = nd
    memcpy(st.data + st.top * st.width, row, st.width * sizeof(long))
    st.top += 1
    return 0


def howell_core(rows, n, ncols):
    """Howell form of the row span of `rows` over Z_n, zero rows stripped."""
    cdef long nn = n
    cdef Py_ssize_t w = ncols
    cdef Py_ssize_t nrows = len(rows)
    cdef RowStack st
    cdef long *slot = NULL
    cdef char *used = NULL
    cdef long *v = NULL
    cdef long *tmp = NULL
    cdef long *pv
    cdef long *row
    cdef Py_ssize_t i, j, l, j2, idx
    cdef long a, b, g, q, u, ann, s, t, x
    cdef object out, pyrow

    st.data = NULL
    st.top = 0
    st.cap = 0
    st.width = w if w > 0 else 1
    slot = <long *> malloc((w if w > 0 else 1) * st.width * sizeof(long))
    used = <char *> malloc((w if w > 0 else 1) * sizeof(char))
    v = <long *> malloc(st.width * sizeof(long))
    tmp = <long *> malloc(st.width * sizeof(long))
    if slot == NULL or used == NULL or v == NULL or tmp == NULL:
        free(slot); free(used); free(v); free(tmp); free(st.data)
        raise MemoryError()
    memset(used, 0, (w if w > 0 else 1) * sizeof(char))
    try:
        for i in range(nrows - 1, -1, -1):
            pyrow = rows[i]
            for j in range(w):
                x = pyrow[j]
                x %= nn
                if x < 0:
                    x += nn
                v[j] = x
            stack_push(&st, v)
        while st.top > 0:
            st.top -= 1
            memcpy(v, st.data + st.top * st.width, st.width * sizeof(long))
            l = 0
            while l < w and v[l] == 0:
                l += 1
            if l == w:
                continue
            if not used[l]:
                u = c_unit_for(v[l], nn)
                row = slot + l * st.width
                for j in range(w):
                    row[j] = (u * v[j]) % nn
                used[l] = 1
                ann = nn // c_gcd(row[l], nn)
                if ann % nn != 0:
                    for j in range(w):
                        tmp[j] = (ann * row[j]) % nn
                    tmp[l] = 0
                    stack_push(&st, tmp)
                continue
            pv = slot + l * st.width
            a = pv[l]
            b = v[l]
            g = c_gcd(a, nn)
            if b % g == 0:
                # v eliminates directly: q*a == b (mod n)
                q = ((b // g) * c_inv_mod(a // g, nn // g)) % (nn // g) if nn > g else 0
                for j in range(w):
                    x = (v[j] - q * pv[j]) % nn
                    if x < 0:
                        x += nn
                    tmp[j] = x
                tmp[l] = 0
                stack_push(&st, tmp)
            else:
                c_egcd(a, b, &g, &s, &t)
                for j in range(w):
                    x = ((a // g) * v[j] - (b // g) * pv[j]) % nn
                    if x < 0:
                        x += nn
                    tmp[j] = x
                tmp[l] = 0
                for j in range(w):
                    x = (s * pv[j] + t * v[j]) % nn
                    if x < 0:
                        x += nn
                    v[j] = x
                u = c_unit_for(v[l], nn)
                for j in range(w):
                    pv[j] = (u * v[j]) % nn
                ann = nn // c_gcd(pv[l], nn)
                if ann % nn != 0:
                    for j in range(w):
                        v[j] = (ann * pv[j]) % nn
                    v[l] = 0
                    stack_push(&st, v)
                stack_push(&st, tmp)
        for idx in range(w):
            if not used[idx]:
                continue
            row = slot + idx * st.width
            for j2 in range(idx):
                if not used[j2]:
                    continue
                pv = slot + j2 * st.width
                q = pv[idx] // row[idx]
                if q:
                    for j in range(w):
                        x = (pv[j] - q * row[j]) % nn
                        if x < 0:
                            x += nn
                        pv[j] = x
        out = []
        for idx in range(w):
            if used[idx]:
                row = slot + idx * st.width
                out.append([row[j] for j in range(w)])
        return out
    finally:
        free(slot)
        free(used)
        free(v)
        free(tmp)
        free(st.data)


# --------------------------------------------------------------- bitsets

def orth_bitsets(vecs):
    """Adjacency bitsets of the orthogonality graph on integer vectors."""
    cdef Py_ssize_t m = len(vecs)
    cdef Py_ssize_t d = len(vecs[0]) if m else 0
    cdef Py_ssize_t i, j, c, nw
    cdef long s
    cdef long *buf = NULL
    cdef unsigned long long *words = NULL
    cdef object out, vec
    if m == 0:
        return []
    nw = (m + 63) // 64
    buf = <long *> malloc(m * (d if d > 0 else 1) * sizeof(long))
    words = <unsigned long long *> malloc(m * nw * sizeof(unsigned long long))
    if buf == NULL or words == NULL:
        free(buf); free(words)
        raise MemoryError()
    try:
        for i in range(m):
            vec = vecs[i]
            for c in range(d):
                buf[i * d + c] = vec[c]
        memset(words, 0, m * nw * sizeof(unsigned long long))
        for i in range(m):
            for j in range(i + 1, m):
                s = 0
                for c in range(d):
                    s += buf[i * d + c] * buf[j * d + c]
                if s == 0:
                    words[i * nw + (j >> 6)] |= (<unsigned long long> 1) << (j & 63)
                    words[j * nw + (i >> 6)] |= (<unsigned long long> 1) << (i & 63)
        out = []
        for i in range(m):
            chunk = (<char *> (words + i * nw))[:nw * sizeof(unsigned long long)]
            out.append(int.from_bytes(chunk, "little"))
        return out
    finally:
        free(buf)
        free(words)


cdef int popcount64(unsigned long long x) noexcept:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def cliques_fixed_size(adj, size):
    """All cliques of exactly `size` vertices, as ascending index tuples."""
    cdef Py_ssize_t m = len(adj)
    cdef Py_ssize_t nw
    cdef int want = size
    cdef unsigned long long *amat = NULL
    cdef unsigned long long *cand = NULL
    cdef unsigned long long *child
    cdef unsigned long long *cur
    cdef unsigned long long word, bit
    cdef long *cliq = NULL
    cdef long *cursor = NULL
    cdef Py_ssize_t i, wpos, depth
    cdef int bpos, cnt, need
    cdef object out
    if want < 0:
        return []
    if want == 0:
        return [()]
    if m == 0:
        return []
    nw = (m + 63) // 64
    nbytes = nw * 8
    amat = <unsigned long long *> malloc(m * nw * sizeof(unsigned long long))
    cand = <unsigned long long *> malloc((want + 1) * nw * sizeof(unsigned long long))
    cliq = <long *> malloc(want * sizeof(long))
    cursor = <long *> malloc((want + 1) * sizeof(long))
    if amat == NULL or cand == NULL or cliq == NULL or cursor == NULL:
        free(amat); free(cand); free(cliq); free(cursor)
        raise MemoryError()
    try:
        for i in range(m):
            chunk = int(adj[i]).to_bytes(nbytes, "little")
            memcpy(amat + i * nw, <char *> chunk, nbytes)
        # depth d chooses clique[d] from cand row d; cursor[d] scans bits
        for wpos in range(nw):
            cand[wpos] = ~(<unsigned long long> 0)
        if m & 63:
            cand[nw - 1] = ((<unsigned long long> 1) << (m & 63)) - 1
        out = []
        depth = 0
        cursor[0] = -1
        while depth >= 0:
            cur = cand + depth * nw
            # advance cursor[depth] to the next set bit
            i = cursor[depth] + 1
            wpos = i >> 6
            bpos = i & 63
            while wpos < nw:
                word = cur[wpos] >> bpos
                if word:
                    while not word & 1:
                        word >>= 1
                        bpos += 1
                    break
                wpos += 1
                bpos = 0
            if wpos >= nw:
                depth -= 1
                continue
            i = (wpos << 6) | bpos
            cursor[depth] = i
            cliq[depth] = i
            if depth + 1 == want:
                out.append(tuple([cliq[j] for j in range(want)]))
                continue
            # child candidates: cand & adj[i] & indices above i
            child = cand + (depth + 1) * nw
            cnt = 0
            for wpos in range(nw):
                word = cur[wpos] & amat[i * nw + wpos]
                if wpos < (i >> 6):
                    word = 0
                elif wpos == (i >> 6):
                    if (i & 63) == 63:
                        word = 0
                    else:
                        word &= ~((((<unsigned long long> 1) << ((i & 63) + 1)) - 1))
                child[wpos] = word
                cnt += popcount64(word)
            need = want - <int> depth - 1
            if cnt < need:
                continue
            depth += 1
            cursor[depth] = -1
        return out
    finally:
        free(amat)
        free(cand)
        free(cliq)
        free(cursor)


# ---------------------------------------------------------- enumeration

def norm_vectors(n, target):
    """All v in Z^n with sum(v_i^2) == target, in lexicographic order."""
    cdef Py_ssize_t nn = n
    cdef long tg = target
    cdef long *x = NULL
    cdef long *rem = NULL
    cdef long *bmax = NULL
    cdef Py_ssize_t i
    cdef long r2
    cdef object out
    out = []
    if tg < 1 or nn <= 0:
        return out
    x = <long *> malloc(nn * sizeof(long))
    rem = <long *> malloc(nn * sizeof(long))
    bmax = <long *> malloc(nn * sizeof(long))
    if x == NULL or rem == NULL or bmax == NULL:
        free(x); free(rem); free(bmax)
        raise MemoryError()
    try:
        rem[0] = tg
        bmax[0] = c_isqrt(tg)
        x[0] = -bmax[0] - 1
        i = 0
        while i >= 0:
            x[i] += 1
            if x[i] > bmax[i]:
                i -= 1
                continue
            r2 = rem[i] - x[i] * x[i]
            if i + 1 == nn:
                if r2 == 0:
                    out.append(tuple([x[j] for j in range(nn)]))
                continue
            rem[i + 1] = r2
            bmax[i + 1] = c_isqrt(r2)
            x[i + 1] = -bmax[i + 1] - 1
            i += 1
        return out
    finally:
        free(x)
        free(rem)
        free(bmax)


def filter_members(vecs, adj_cols, det):
    """Keep the vectors lying in the lattice with adjugate columns `adj_cols`."""
    cdef Py_ssize_t n = len(adj_cols)
    cdef long d = det
    cdef long *am = NULL
    cdef long *vv = NULL
    cdef Py_ssize_t i, j
    cdef long s
    cdef bint ok
    cdef object out, v, rowobj
    if d < 0:
        d = -d
    am = <long *> malloc(n * n * sizeof(long))
    vv = <long *> malloc((n if n > 0 else 1) * sizeof(long))
    if am == NULL or vv == NULL:
        free(am); free(vv)
        raise MemoryError()
    try:
        for i in range(n):
            rowobj = adj_cols[i]
            for j in range(n):
                am[i * n + j] = rowobj[j]
        out = []
        for v in vecs:
            for i in range(n):
                vv[i] = v[i]
            ok = True
            for j in range(n):
                s = 0
                for i in range(n):
                    s += vv[i] * am[i * n + j]
                if s % d != 0:
                    ok = False
                    break
            if ok:
                out.append(v)
        return out
    finally:
        free(am)
        free(vv)
