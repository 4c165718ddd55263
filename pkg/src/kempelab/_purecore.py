"""Pure-Python kernel backend.

Mirrors the compiled ``kempelab._core`` extension function-for-function;
``kempelab.kernels`` picks whichever is importable.  Adjacency is a list of
Python-int bitmasks, one per vertex.  Everything here must stay bit-exact
with the compiled backend (same splitmix64 stream, same token packing,
same search orders).
"""

from __future__ import annotations

from kempelab.rng import GOLDEN, MASK64, mix64

BACKEND = "pure"


def exclusion_codes(n: int, seed: int) -> bytearray:
    """Two-bit exclusion tokens for every group pair (i<j), lexicographic order.

    Token t sits in bits (2r, 2r+1) of splitmix64 output floor(t/32),
    r = t mod 32; leftover bits of the last output are discarded.
    """
    m = n * (n - 1) // 2
    out = bytearray(m)
    state = seed & MASK64
    filled = 0
    while filled < m:
        state = (state + GOLDEN) & MASK64
        u = mix64(state)
        take = min(32, m - filled)
        for r in range(take):
            out[filled + r] = (u >> (2 * r)) & 3
        filled += take
    return out


def adjacency_from_codes(n: int, codes) -> list[int]:
    """Bitmask adjacency of the paired graph on 2n vertices.

    Group g (0-based) owns vertices 2g (a-side) and 2g+1 (b-side).  For each
    pair g<h the token names the one excluded cross pair — bit 1 of the token
    is the side in group g, bit 0 the side in group h — and the other three
    cross pairs become edges.
    """
    adj = [0] * (2 * n)
    idx = 0
    for g in range(n - 1):
        for h in range(g + 1, n):
            code = codes[idx]
            idx += 1
            for c in range(4):
                if c == code:
                    continue
                u = 2 * g + (c >> 1)
                v = 2 * h + (c & 1)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def check_instance(n: int, codes) -> bool:
    """Fused structural check used by corpus sweeps.

    Verifies, from the realized adjacency: total edge count 3*C(n,2), no
    edge inside a group, and every group pair inducing a path on its four
    vertices (3 edges, degrees 1,1,2,2, connected).
    """
    adj = adjacency_from_codes(n, codes)
    if sum(a.bit_count() for a in adj) != 3 * n * (n - 1):
        return False
    for g in range(n):
        if (adj[2 * g] >> (2 * g + 1)) & 1:
            return False
    for g in range(n - 1):
        ga, gb = 2 * g, 2 * g + 1
        for h in range(g + 1, n):
            ha, hb = 2 * h, 2 * h + 1
            mask = (1 << ga) | (1 << gb) | (1 << ha) | (1 << hb)
            degs = sorted((adj[v] & mask).bit_count() for v in (ga, gb, ha, hb))
            if degs != [1, 1, 2, 2]:
                return False
            if sum(degs) != 6:
                return False
            # connectivity of the induced 4-vertex graph
            seen = mask & -mask
            frontier = seen
            while frontier:
                nxt = 0
                q = frontier
                while q:
                    b = q & -q
                    q ^= b
                    nxt |= adj[b.bit_length() - 1]
                frontier = nxt & mask & ~seen
                seen |= frontier
            if seen != mask:
                return False
    return True


def count_cliques(adj: list[int], k: int) -> int:
    """Number of k-vertex cliques (k >= 1)."""
    if k < 1:
        raise ValueError("clique size must be >= 1")
    n = len(adj)
    if k == 1:
        return n
    if k > n:
        return 0

    def rec(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand:
            if cand.bit_count() < need:
                break
            b = cand & -cand
            cand ^= b
            total += rec(adj[b.bit_length() - 1] & cand, need - 1)
        return total

    return rec((1 << n) - 1, k)


def count_quadruples(n: int, adj: list[int]) -> int:
    """Number of rotation-canonical index quadruples whose four cross edges are all absent.

    Canonical representative: the first index is the minimum of the four.
    """

    def absent(x: int, y: int) -> bool:
        # edge between a-side of group x and b-side of group y (1-based groups)
        return not (adj[2 * (x - 1)] >> (2 * (y - 1) + 1)) & 1

    total = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not absent(i, j):
                continue
            for k in range(i + 1, n + 1):
                if k == j or not absent(j, k):
                    continue
                for l in range(i + 1, n + 1):
                    if l == j or l == k:
                        continue
                    if absent(k, l) and absent(l, i):
                        total += 1
    return total


def find_quadruple(n: int, adj: list[int]):
    """Lexicographically first ordered quadruple (i,j,k,l) of distinct 1-based
    groups with the cross edges a_i-b_j, a_j-b_k, a_k-b_l, a_l-b_i all absent."""

    def absent(x: int, y: int) -> bool:
        return not (adj[2 * (x - 1)] >> (2 * (y - 1) + 1)) & 1

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if j == i or not absent(i, j):
                continue
            for k in range(1, n + 1):
                if k == i or k == j or not absent(j, k):
                    continue
                for l in range(1, n + 1):
                    if l == i or l == j or l == k:
                        continue
                    if absent(k, l) and absent(l, i):
                        return (i, j, k, l)
    return None


def _colour_sort(adj: list[int], cand: int):
    """Greedy colouring of the candidate set; returns (order, bounds) with
    vertices grouped by colour class and bounds[i] = colour number of order[i]."""
    order = []
    bounds = []
    colour = 0
    rest = cand
    while rest:
        colour += 1
        q = rest
        while q:
            b = q & -q
            v = b.bit_length() - 1
            q &= ~adj[v]
            q ^= b
            rest ^= b
            order.append(v)
            bounds.append(colour)
    return order, bounds


class _CliqueState:
    __slots__ = ("best", "target", "budget", "nodes", "exhausted")

    def __init__(self, target, budget):
        self.best = 0
        self.target = target
        self.budget = budget
        self.nodes = 0
        self.exhausted = False


def _mc_expand(adj: list[int], cand: int, size: int, st: _CliqueState) -> None:
    st.nodes += 1
    if st.budget is not None and st.nodes > st.budget:
        st.exhausted = True
        return
    if not cand:
        if size > st.best:
            st.best = size
        return
    order, bounds = _colour_sort(adj, cand)
    for i in range(len(order) - 1, -1, -1):
        if st.target is not None and st.best >= st.target:
            return
        if size + bounds[i] <= st.best:
            return
        v = order[i]
        cand &= ~(1 << v)
        _mc_expand(adj, adj[v] & cand, size + 1, st)
        if st.exhausted:
            return
        if size + 1 > st.best:
            st.best = size + 1


def max_clique_size(adj: list[int], budget=None):
    """Maximum clique size by branch and bound with greedy-colouring bounds.

    Returns (size, nodes_expanded); size is -1 when the budget ran out.
    """
    st = _CliqueState(target=None, budget=budget)
    full = (1 << len(adj)) - 1
    if full:
        _mc_expand(adj, full, 0, st)
    if st.exhausted:
        return -1, st.nodes
    return st.best, st.nodes


def clique_decision(adj: list[int], cand: int, need: int, budget=None):
    """Does `cand` contain a clique of size >= need?

    Returns (status, nodes_expanded): 1 yes, 0 no, -1 budget exhausted.
    """
    if need <= 0:
        return 1, 0
    st = _CliqueState(target=need, budget=budget)
    if cand:
        _mc_expand(adj, cand, 0, st)
    if st.best >= need:
        return 1, st.nodes
    if st.exhausted:
        return -1, st.nodes
    return 0, st.nodes


def has_clique(adj: list[int], k: int) -> bool:
    """Unbounded decision: is there a clique on k vertices?"""
    status, _ = clique_decision(adj, (1 << len(adj)) - 1, k, None)
    return status == 1
