# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Function-for-function mirror of ``kempelab._purecore`` (same splitmix64
stream, same token packing, same search orders, same node accounting), just
on C word arrays instead of Python-int bitsets.  Adjacency crosses the
boundary as a list of Python ints and is unpacked into rows of 64-bit words.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef extern from *:
    """
    static inline int kl_popcountll(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static inline int kl_ctzll(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    """
    int kl_popcountll(unsigned long long x) nogil
    int kl_ctzll(unsigned long long x) nogil

BACKEND = "compiled"

cdef unsigned long long GOLDEN = 0x9E3779B97F4A7C15ULL
cdef unsigned long long M64 = 0xFFFFFFFFFFFFFFFFULL


cdef inline unsigned long long _mix64(unsigned long long z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


def exclusion_codes(int n, seed):
    """Two-bit exclusion tokens for every group pair (i<j), lexicographic order."""
    cdef int m = n * (n - 1) // 2
    cdef bytearray out = bytearray(m)
    cdef unsigned char[::1] view
    cdef unsigned long long state = <unsigned long long> (int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef unsigned long long u
    cdef int filled = 0, take, r
    if m == 0:
        return out
    view = out
    while filled < m:
        state = state + GOLDEN
        u = _mix64(state)
        take = m - filled
        if take > 32:
            take = 32
        for r in range(take):
            view[filled + r] = <unsigned char> ((u >> (2 * r)) & 3)
        filled += take
    return out


cdef unsigned long long* _words_from_codes(int n, const unsigned char* codes, int W):
    cdef unsigned long long* adjw = <unsigned long long*> malloc(2 * n * W * sizeof(unsigned long long))
    if adjw == NULL:
        raise MemoryError()
    memset(adjw, 0, 2 * n * W * sizeof(unsigned long long))
    cdef int g, h, c, u, v
    cdef long idx = 0
    for g in range(n - 1):
        for h in range(g + 1, n):
            for c in range(4):
                if c == codes[idx]:
                    continue
                u = 2 * g + (c >> 1)
                v = 2 * h + (c & 1)
                adjw[u * W + (v >> 6)] |= 1ULL << (v & 63)
                adjw[v * W + (u >> 6)] |= 1ULL << (u & 63)
            idx += 1
    return adjw


cdef object _row_to_int(unsigned long long* row, int W):
    cdef object out = 0
    cdef int w
    for w in range(W - 1, -1, -1):
        out = (out << 64) | row[w]
    return out


def adjacency_from_codes(int n, codes) -> list:
    """Bitmask adjacency (list of Python ints) of the paired graph on 2n vertices."""
    cdef int order = 2 * n
    cdef int W = (order + 63) // 64 if order else 1
    cdef bytes raw
    cdef const unsigned char* cptr = NULL
    cdef unsigned long long* adjw
    if n == 0:
        return []
    raw = bytes(codes)
    if len(raw):
        cptr = raw
    adjw = _words_from_codes(n, cptr, W)
    try:
        return [_row_to_int(adjw + v * W, W) for v in range(order)]
    finally:
        free(adjw)


cdef inline int _getbit(unsigned long long* adjw, int W, int u, int v) nogil:
    return <int> ((adjw[u * W + (v >> 6)] >> (v & 63)) & 1ULL)


def check_instance(int n, codes) -> bool:
    """Fused structural check: edge count, no intra-group edge, every group
    pair inducing a path on its four vertices."""
    cdef int order = 2 * n
    cdef int W = (order + 63) // 64 if order else 1
    cdef bytes raw
    cdef const unsigned char* cptr = NULL
    cdef unsigned long long* adjw
    cdef long long total = 0
    cdef int g, h, v, w, ones
    cdef int ga, gb, ha, hb
    cdef int deg[4]
    cdef int mat[4][4]
    cdef int ids[4]
    cdef int seen[4]
    cdef int stack[4]
    cdef int top, cur, nxt, cnt, i, j
    cdef bint ok = True
    if n == 0:
        return True
    raw = bytes(codes)
    if len(raw):
        cptr = raw
    adjw = _words_from_codes(n, cptr, W)
    try:
        with nogil:
            for v in range(order):
                for w in range(W):
                    total += kl_popcountll(adjw[v * W + w])
            if total != 3LL * n * (n - 1):
                ok = False
            if ok:
                for g in range(n):
                    if _getbit(adjw, W, 2 * g, 2 * g + 1):
                        ok = False
                        break
            if ok:
                for g in range(n - 1):
                    if not ok:
                        break
                    ga = 2 * g
                    gb = 2 * g + 1
                    for h in range(g + 1, n):
                        ha = 2 * h
                        hb = 2 * h + 1
                        ids[0] = ga; ids[1] = gb; ids[2] = ha; ids[3] = hb
                        cnt = 0
                        for i in range(4):
                            deg[i] = 0
                            for j in range(4):
                                mat[i][j] = 0
                        for i in range(4):
                            for j in range(i + 1, 4):
                                if _getbit(adjw, W, ids[i], ids[j]):
                                    mat[i][j] = 1
                                    mat[j][i] = 1
                                    deg[i] += 1
                                    deg[j] += 1
                                    cnt += 1
                        if cnt != 3:
                            ok = False
                            break
                        ones = 0
                        for i in range(4):
                            if deg[i] == 1:
                                ones += 1
                            elif deg[i] != 2:
                                ok = False
                        if not ok or ones != 2:
                            ok = False
                            break
                        for i in range(4):
                            seen[i] = 0
                        seen[0] = 1
                        stack[0] = 0
                        top = 1
                        cnt = 1
                        while top:
                            top -= 1
                            cur = stack[top]
                            for nxt in range(4):
                                if mat[cur][nxt] and not seen[nxt]:
                                    seen[nxt] = 1
                                    stack[top] = nxt
                                    top += 1
                                    cnt += 1
                        if cnt != 4:
                            ok = False
                            break
        return bool(ok)
    finally:
        free(adjw)


cdef unsigned long long* _load_adj(list adj, int* n_out, int* W_out):
    cdef int n = len(adj)
    cdef int W = (n + 63) // 64 if n else 1
    cdef int rows = n if n > 0 else 1
    cdef unsigned long long* buf = <unsigned long long*> malloc(rows * W * sizeof(unsigned long long))
    cdef int v, w
    cdef object row
    if buf == NULL:
        raise MemoryError()
    for v in range(n):
        row = adj[v]
        for w in range(W):
            buf[v * W + w] = <unsigned long long> (row & 0xFFFFFFFFFFFFFFFF)
            row = row >> 64
    n_out[0] = n
    W_out[0] = W
    return buf


cdef inline int _empty(unsigned long long* m, int W) nogil:
    cdef int w
    for w in range(W):
        if m[w]:
            return 0
    return 1


cdef inline int _popcount(unsigned long long* m, int W) nogil:
    cdef int w, c = 0
    for w in range(W):
        c += kl_popcountll(m[w])
    return c


cdef inline int _lowest(unsigned long long* m, int W) nogil:
    cdef int w
    for w in range(W):
        if m[w]:
            return 64 * w + kl_ctzll(m[w])
    return -1


cdef inline void _clear(unsigned long long* m, int v) nogil:
    m[v >> 6] &= ~(1ULL << (v & 63))


cdef long long _count_rec(unsigned long long* adjw, int W, unsigned long long* levels,
                          int depth, int need) nogil:
    cdef unsigned long long* cand = levels + depth * W
    cdef unsigned long long* nxt = levels + (depth + 1) * W
    cdef long long total = 0
    cdef int v, w
    if need == 1:
        return _popcount(cand, W)
    while not _empty(cand, W):
        if _popcount(cand, W) < need:
            break
        v = _lowest(cand, W)
        _clear(cand, v)
        for w in range(W):
            nxt[w] = adjw[v * W + w] & cand[w]
        total += _count_rec(adjw, W, levels, depth + 1, need - 1)
    return total


def count_cliques(list adj, int k):
    """Number of k-vertex cliques (k >= 1)."""
    if k < 1:
        raise ValueError("clique size must be >= 1")
    cdef int n = 0, W = 0
    cdef unsigned long long* adjw
    cdef unsigned long long* levels
    cdef long long total
    cdef int w
    if k == 1:
        return len(adj)
    if k > len(adj):
        return 0
    adjw = _load_adj(adj, &n, &W)
    levels = <unsigned long long*> malloc((k + 1) * W * sizeof(unsigned long long))
    if levels == NULL:
        free(adjw)
        raise MemoryError()
    try:
        memset(levels, 0, (k + 1) * W * sizeof(unsigned long long))
        for w in range(W):
            levels[w] = M64
        if n & 63:
            levels[W - 1] = (1ULL << (n & 63)) - 1
        with nogil:
            total = _count_rec(adjw, W, levels, 0, k)
        return total
    finally:
        free(levels)
        free(adjw)


def count_quadruples(int n, list adj):
    """Rotation-canonical quadruples with all four cross edges absent."""
    cdef int nn = 0, W = 0
    cdef unsigned long long* adjw = _load_adj(adj, &nn, &W)
    cdef long long total = 0
    cdef int i, j, k, l
    try:
        with nogil:
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    if _getbit(adjw, W, 2 * (i - 1), 2 * (j - 1) + 1):
                        continue
                    for k in range(i + 1, n + 1):
                        if k == j or _getbit(adjw, W, 2 * (j - 1), 2 * (k - 1) + 1):
                            continue
                        for l in range(i + 1, n + 1):
                            if l == j or l == k:
                                continue
                            if (not _getbit(adjw, W, 2 * (k - 1), 2 * (l - 1) + 1)
                                    and not _getbit(adjw, W, 2 * (l - 1), 2 * (i - 1) + 1)):
                                total += 1
        return total
    finally:
        free(adjw)


def find_quadruple(int n, list adj):
    """Lexicographically first quadruple with the four rotation cross edges absent."""
    cdef int nn = 0, W = 0
    cdef unsigned long long* adjw = _load_adj(adj, &nn, &W)
    cdef int i, j, k, l
    cdef int fi = 0, fj = 0, fk = 0, fl = 0
    cdef bint hit = False
    try:
        with nogil:
            for i in range(1, n + 1):
                if hit:
                    break
                for j in range(1, n + 1):
                    if hit:
                        break
                    if j == i or _getbit(adjw, W, 2 * (i - 1), 2 * (j - 1) + 1):
                        continue
                    for k in range(1, n + 1):
                        if hit:
                            break
                        if k == i or k == j or _getbit(adjw, W, 2 * (j - 1), 2 * (k - 1) + 1):
                            continue
                        for l in range(1, n + 1):
                            if l == i or l == j or l == k:
                                continue
                            if (not _getbit(adjw, W, 2 * (k - 1), 2 * (l - 1) + 1)
                                    and not _getbit(adjw, W, 2 * (l - 1), 2 * (i - 1) + 1)):
                                fi = i; fj = j; fk = k; fl = l
                                hit = True
                                break
        if hit:
            return (fi, fj, fk, fl)
        return None
    finally:
        free(adjw)


cdef struct CliqueCtx:
    unsigned long long* adjw
    unsigned long long* cands    # (n+2) levels * W
    unsigned long long* rest     # W scratch per level
    unsigned long long* q        # W scratch per level
    int* order                   # (n+2) levels * n
    int* bounds
    int n, W
    int best, target             # target < 0: none
    long long nodes, budget      # budget < 0: unlimited
    int exhausted


cdef void _free_ctx(CliqueCtx* ctx):
    if ctx.adjw != NULL:
        free(ctx.adjw)
    if ctx.cands != NULL:
        free(ctx.cands)
    if ctx.rest != NULL:
        free(ctx.rest)
    if ctx.q != NULL:
        free(ctx.q)
    if ctx.order != NULL:
        free(ctx.order)
    if ctx.bounds != NULL:
        free(ctx.bounds)


cdef void _colour_sort_c(CliqueCtx* ctx, unsigned long long* cand, int depth, int* cnt_out) nogil:
    cdef unsigned long long* rest = ctx.rest + depth * ctx.W
    cdef unsigned long long* q = ctx.q + depth * ctx.W
    cdef int* order = ctx.order + depth * ctx.n
    cdef int* bounds = ctx.bounds + depth * ctx.n
    cdef int w, v, cnt = 0, colour = 0
    for w in range(ctx.W):
        rest[w] = cand[w]
    while not _empty(rest, ctx.W):
        colour += 1
        for w in range(ctx.W):
            q[w] = rest[w]
        while not _empty(q, ctx.W):
            v = _lowest(q, ctx.W)
            for w in range(ctx.W):
                q[w] &= ~ctx.adjw[v * ctx.W + w]
            _clear(q, v)
            _clear(rest, v)
            order[cnt] = v
            bounds[cnt] = colour
            cnt += 1
    cnt_out[0] = cnt


cdef void _expand_c(CliqueCtx* ctx, unsigned long long* cand, int size, int depth) nogil:
    cdef int cnt = 0, i, v, w
    cdef int* order
    cdef int* bounds
    cdef unsigned long long* sub
    ctx.nodes += 1
    if ctx.budget >= 0 and ctx.nodes > ctx.budget:
        ctx.exhausted = 1
        return
    if _empty(cand, ctx.W):
        if size > ctx.best:
            ctx.best = size
        return
    _colour_sort_c(ctx, cand, depth, &cnt)
    order = ctx.order + depth * ctx.n
    bounds = ctx.bounds + depth * ctx.n
    for i in range(cnt - 1, -1, -1):
        if ctx.target >= 0 and ctx.best >= ctx.target:
            return
        if size + bounds[i] <= ctx.best:
            return
        v = order[i]
        _clear(cand, v)
        sub = ctx.cands + (depth + 1) * ctx.W
        for w in range(ctx.W):
            sub[w] = ctx.adjw[v * ctx.W + w] & cand[w]
        _expand_c(ctx, sub, size + 1, depth + 1)
        if ctx.exhausted:
            return
        if size + 1 > ctx.best:
            ctx.best = size + 1


cdef int _clique_run(list adj, object cand_int, int target_or_neg, object budget,
                     long long* nodes_out, int* best_out, int* exhausted_out) except -1:
    cdef CliqueCtx ctx
    cdef int n = 0, W = 0, w, levels
    cdef object row
    ctx.adjw = NULL
    ctx.cands = NULL
    ctx.rest = NULL
    ctx.q = NULL
    ctx.order = NULL
    ctx.bounds = NULL
    ctx.adjw = _load_adj(adj, &n, &W)
    ctx.n = n if n > 0 else 1
    ctx.W = W
    ctx.best = 0
    ctx.target = target_or_neg
    ctx.nodes = 0
    ctx.budget = -1 if budget is None else <long long> int(budget)
    ctx.exhausted = 0
    levels = n + 2
    try:
        ctx.cands = <unsigned long long*> malloc(levels * W * sizeof(unsigned long long))
        ctx.rest = <unsigned long long*> malloc(levels * W * sizeof(unsigned long long))
        ctx.q = <unsigned long long*> malloc(levels * W * sizeof(unsigned long long))
        ctx.order = <int*> malloc(levels * ctx.n * sizeof(int))
        ctx.bounds = <int*> malloc(levels * ctx.n * sizeof(int))
        if (ctx.cands == NULL or ctx.rest == NULL or ctx.q == NULL
                or ctx.order == NULL or ctx.bounds == NULL):
            raise MemoryError()
        row = cand_int
        for w in range(W):
            ctx.cands[w] = <unsigned long long> (row & 0xFFFFFFFFFFFFFFFF)
            row = row >> 64
        if not _empty(ctx.cands, W):
            with nogil:
                _expand_c(&ctx, ctx.cands, 0, 0)
        nodes_out[0] = ctx.nodes
        best_out[0] = ctx.best
        exhausted_out[0] = ctx.exhausted
        return 1
    finally:
        _free_ctx(&ctx)


def max_clique_size(list adj, budget=None):
    """(maximum clique size, nodes expanded); size -1 when the budget ran out."""
    cdef long long nodes = 0
    cdef int best = 0, exhausted = 0
    # Python-int shift: a C shift would overflow past 63 vertices
    full = ((<object> 1) << len(adj)) - 1
    _clique_run(adj, full, -1, budget, &nodes, &best, &exhausted)
    if exhausted:
        return (-1, nodes)
    return (best, nodes)


def clique_decision(list adj, cand, int need, budget=None):
    """(status, nodes expanded): 1 clique of size >= need exists in cand,
    0 it does not, -1 budget exhausted."""
    cdef long long nodes = 0
    cdef int best = 0, exhausted = 0
    if need <= 0:
        return (1, 0)
    _clique_run(adj, cand, need, budget, &nodes, &best, &exhausted)
    if best >= need:
        return (1, nodes)
    if exhausted:
        return (-1, nodes)
    return (0, nodes)


def has_clique(list adj, int k) -> bool:
    status, _ = clique_decision(adj, ((<object> 1) << len(adj)) - 1, k, None)
    return status == 1
