"""Minor models and quasi-minor models: verification, clique search, double-
and triple-minor search, and exact clique-minor decision at desk scale.

A model of the complete graph on p vertices is p nonempty, pairwise disjoint
bags, each inducing a connected subgraph, with an edge between every two
bags.  The quasi variant drops per-bag connectivity and instead requires
every pairwise union of bags to induce a connected subgraph.  Searches here
are exhaustive with explicit node budgets; exact minor decision is capped
at order 12 — anything larger belongs to the analytic bounds, not to search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from kempelab import kernels
from kempelab.errors import BudgetExceededError
from kempelab.graph import (
    BagFamily,
    Graph,
    bits,
    check_bags_in_range,
    connected_mask,
    mask_of,
)
from kempelab.construction import LvmInstance, group_of

MAX_EXACT_ORDER = 12
DEFAULT_CLIQUE_BUDGET = 10_000_000
DEFAULT_SEARCH_BUDGET = 10_000_000
DEFAULT_MINOR_BUDGET = 2_000_000

WITNESS_KINDS = ("minor", "quasiMinor", "simple", "double", "triple")


@dataclass(frozen=True)
class MinorWitness:
    """A bag family together with the kind of model it claims to be."""

    bags: BagFamily
    kind: str

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")
        sizes = [len(b) for b in self.bags.bags]
        if self.kind == "simple" and any(s != 1 for s in sizes):
            raise ValueError("simple witnesses need all bags of size 1")
        if self.kind == "double" and any(s != 2 for s in sizes):
            raise ValueError("double witnesses need all bags of size 2")
        if self.kind == "triple" and any(s < 3 for s in sizes):
            raise ValueError("triple witnesses need all bags of size >= 3")


def _bag_neighbourhoods(g: Graph, masks: Sequence[int]) -> list[int]:
    out = []
    for m in masks:
        nb = 0
        for v in bits(m):
            nb |= g.adj[v]
        out.append(nb)
    return out


def verify_minor_model(g: Graph, bags: BagFamily) -> bool:
    """Every bag connected and every pair of bags joined by an edge.

    Structural violations (empty/overlapping bags, out-of-range vertices)
    raise instead of returning False: False means checked and refuted.
    """
    check_bags_in_range(g, bags)
    masks = bags.masks()
    for m in masks:
        if not connected_mask(g.adj, m):
            return False
    nbs = _bag_neighbourhoods(g, masks)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not nbs[i] & masks[j]:
                return False
    return True


def verify_quasi_minor(g: Graph, bags: BagFamily) -> bool:
    """Every pairwise union of bags induces a connected subgraph."""
    check_bags_in_range(g, bags)
    masks = bags.masks()
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not connected_mask(g.adj, masks[i] | masks[j]):
                return False
    return True


def max_clique(g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET) -> frozenset[int]:
    """A maximum clique by branch and bound with greedy-colouring bounds;
    among all maximum cliques the lexicographically least one is returned.

    ``budget`` caps total node expansions; exhaustion raises.
    """
    adj = list(g.adj)
    size, used = kernels.max_clique_size(adj, budget)
    if size == -1:
        raise BudgetExceededError("max_clique budget exhausted")
    left = budget - used
    chosen: list[int] = []
    cand = g.full_mask()
    need = size
    while need:
        for v in bits(cand):
            sub = adj[v] & cand & ~((1 << (v + 1)) - 1)
            status, used = kernels.clique_decision(adj, sub, need - 1, left)
            left -= used
            if status == -1 or left < 0:
                raise BudgetExceededError("max_clique budget exhausted")
            if status == 1:
                chosen.append(v)
                cand = sub
                need -= 1
                break
    return frozenset(chosen)


def find_double_minor(
    g: Graph,
    k: int,
    allowed_pairs: Iterable[tuple[int, int]] | None = None,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> MinorWitness | None:
    """Exhaustive backtracking for k disjoint size-2 bags, each an edge, all
    pairs mutually joined.  Candidate pairs are scanned in lexicographic
    order and the first complete family found is returned, so the witness is
    deterministic.  ``allowed_pairs`` restricts the candidate pool."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if allowed_pairs is None:
        candidates = g.edges()
    else:
        pool = set()
        for u, v in allowed_pairs:
            if not (0 <= u < g.order and 0 <= v < g.order):
                raise ValueError(f"pair ({u},{v}) outside graph range")
            if u > v:
                u, v = v, u
            if g.has_edge(u, v):
                pool.add((u, v))
        candidates = sorted(pool)
    masks = [(1 << u) | (1 << v) for u, v in candidates]
    nbs = [g.adj[u] | g.adj[v] for u, v in candidates]
    count = len(candidates)
    expansions = 0
    chosen: list[int] = []

    def rec(start: int, used: int) -> bool:
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise BudgetExceededError("double-minor search budget exhausted")
        if len(chosen) == k:
            return True
        if count - start < k - len(chosen):
            return False
        for idx in range(start, count):
            if masks[idx] & used:
                continue
            if any(not (nbs[idx] & masks[j]) for j in chosen):
                continue
            chosen.append(idx)
            if rec(idx + 1, used | masks[idx]):
                return True
            chosen.pop()
        return False

    if not rec(0, 0):
        return None
    bags = BagFamily(tuple(frozenset(candidates[i]) for i in chosen))
    return MinorWitness(bags, "double")


def greedy_independent_pairs(
    inst: LvmInstance, s: Sequence[tuple[int, int]]
) -> list[tuple[int, int]]:
    """Greedy scan keeping a pair iff it shares no vertex group with any pair
    already kept.  Each kept pair blocks at most one later pair per group, so
    the output always has at least a third of the input pairs.

    Pairs must be pairwise vertex-disjoint, and no pair may sit inside a
    single group {a_i, b_i} (such a pair can never arise from a double-minor
    bag: the two group vertices are never adjacent).
    """
    seen_vertices: set[int] = set()
    for u, v in s:
        if not (0 <= u < 2 * inst.n and 0 <= v < 2 * inst.n):
            raise ValueError(f"pair ({u},{v}) outside the instance's vertex range")
        if group_of(u) == group_of(v):
            raise ValueError(f"pair ({u},{v}) lies inside one vertex group")
        if u in seen_vertices or v in seen_vertices or u == v:
            raise ValueError("pairs must be pairwise disjoint")
        seen_vertices.update((u, v))
    kept: list[tuple[int, int]] = []
    used_groups: set[int] = set()
    for u, v in s:
        gu, gv = group_of(u), group_of(v)
        if gu in used_groups or gv in used_groups:
            continue
        kept.append((u, v))
        used_groups.update((gu, gv))
    return kept


def _relabel(adj: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(adj)
    for v, row in enumerate(adj):
        new_row = 0
        r = row
        while r:
            b = r & -r
            r ^= b
            new_row |= 1 << perm[b.bit_length() - 1]
        out[perm[v]] = new_row
    return tuple(out)


def _refine(adj: Sequence[int], colours: list[int]) -> list[int]:
    n = len(adj)
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colours[w] for w in bits(adj[v]))
            sigs.append((colours[v], tuple(nb)))
        order = sorted(range(n), key=lambda v: sigs[v])
        new = [0] * n
        cur = 0
        for pos, v in enumerate(order):
            if pos and sigs[v] != sigs[order[pos - 1]]:
                cur += 1
            new[v] = cur
        if new == colours:
            return colours
        colours = new


def canonical_key(adj: Sequence[int]) -> tuple[int, ...]:
    """Canonical adjacency under isomorphism: colour refinement plus
    individualization branching, returning the least relabelled adjacency.
    Exact (not a hash); meant for graphs of at most a dozen vertices."""
    n = len(adj)
    if n == 0:
        return ()
    best: list[tuple[int, ...] | None] = [None]

    def search(colours: list[int]) -> None:
        colours = _refine(adj, list(colours))
        counts: dict[int, int] = {}
        for c in colours:
            counts[c] = counts.get(c, 0) + 1
        # branch on the smallest non-singleton colour class: the choice must be
        # isomorphism-invariant, and refinement ranks are
        cell = min((c for c, cnt in counts.items() if cnt > 1), default=None)
        if cell is None:
            key = _relabel(adj, colours)
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        for v in range(n):
            if colours[v] == cell:
                child = list(colours)
                child[v] = n
                search(child)

    search([0] * n)
    return best[0]  # type: ignore[return-value]


def _contract_adj(adj: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    lo, hi = (u, v) if u < v else (v, u)
    merged = (adj[lo] | adj[hi]) & ~(1 << lo) & ~(1 << hi)
    low_mask = (1 << hi) - 1
    out = []
    for w in range(len(adj)):
        if w == hi:
            continue
        row = merged if w == lo else adj[w]
        if w != lo and (row >> hi) & 1:
            row = (row & ~(1 << hi)) | (1 << lo)
        out.append((row & low_mask) | ((row >> (hi + 1)) << hi))
    return tuple(out)


def _first_clique(adj: Sequence[int], need: int) -> list[int] | None:
    """Lexicographically least clique of exactly ``need`` vertices, or None."""
    chosen: list[int] = []

    def go(cand: int, left: int) -> bool:
        if left == 0:
            return True
        while cand:
            if cand.bit_count() < left:
                return False
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            chosen.append(v)
            if go(adj[v] & cand, left - 1):
                return True
            chosen.pop()
        return False

    full = (1 << len(adj)) - 1
    return chosen if go(full, need) else None


def has_kt_minor_exact(
    g: Graph, t: int, budget: int = DEFAULT_MINOR_BUDGET
) -> tuple[bool, MinorWitness | None]:
    """Exact complete-minor decision by branching over edge contractions with
    memoization on canonical forms.

    A model either has all bags of size 1 (then it is a clique, caught by the
    subgraph check) or some bag spans an edge we can contract, so recursing on
    every single contraction is complete.  Negative results are memoized by
    canonical form; the positive path returns the first witness found, whose
    bags are the contraction classes of the clique vertices — connected and
    pairwise joined in the original graph by construction, and re-verified
    before returning.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if g.order > MAX_EXACT_ORDER:
        raise ValueError(f"exact minor decision is capped at order {MAX_EXACT_ORDER}")
    expansions = 0
    memo_false: set[tuple[int, ...]] = set()

    def rec(adj: tuple[int, ...], bags: tuple[frozenset[int], ...]):
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise BudgetExceededError("exact minor search budget exhausted")
        n = len(adj)
        if n < t:
            return None
        if sum(a.bit_count() for a in adj) // 2 < t * (t - 1) // 2:
            return None
        clique = _first_clique(adj, t)
        if clique is not None:
            return tuple(bags[v] for v in clique)
        if n == t:
            return None
        key = canonical_key(adj)
        if key in memo_false:
            return None
        for u in range(n):
            row = adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    merged_bags = tuple(
                        (bags[u] | bags[v]) if w == u else bags[w]
                        for w in range(n)
                        if w != v
                    )
                    found = rec(_contract_adj(adj, u, v), merged_bags)
                    if found is not None:
                        return found
                row >>= 1
                v += 1
        memo_false.add(key)
        return None

    result = rec(tuple(g.adj), tuple(frozenset([v]) for v in range(g.order)))
    if result is None:
        return False, None
    witness = MinorWitness(BagFamily(result), "minor")
    if not verify_minor_model(g, witness.bags):
        raise RuntimeError("internal error: extracted witness failed verification")
    return True, witness


def find_triple_minor(
    g: Graph, k: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> MinorWitness | None:
    """Exhaustive search for k disjoint connected bags of size >= 3, all pairs
    joined.  Candidate bags are all connected vertex subsets of size >= 3 in
    increasing bitmask order; the first complete family is returned."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.order > MAX_EXACT_ORDER:
        raise ValueError(f"triple-minor search is capped at order {MAX_EXACT_ORDER}")
    adj = g.adj
    candidates = [
        m
        for m in range(1, 1 << g.order)
        if m.bit_count() >= 3 and connected_mask(adj, m)
    ]
    nbs = []
    for m in candidates:
        nb = 0
        for v in bits(m):
            nb |= adj[v]
        nbs.append(nb)
    expansions = 0
    chosen: list[int] = []

    def rec(start: int, used: int) -> bool:
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise BudgetExceededError("triple-minor search budget exhausted")
        if len(chosen) == k:
            return True
        for idx in range(start, len(candidates)):
            m = candidates[idx]
            if m & used:
                continue
            if any(not (nbs[idx] & candidates[j]) for j in chosen):
                continue
            chosen.append(idx)
            if rec(idx + 1, used | m):
                return True
            chosen.pop()
        return False

    if not rec(0, 0):
        return None
    bags = BagFamily(tuple(frozenset(bits(candidates[i])) for i in chosen))
    return MinorWitness(bags, "triple")


def triple_minor_cap(n: int) -> int:
    """Largest k a triple model can reach in a paired instance with n groups:
    bags of size >= 3 fit at most floor(2n/3) times into 2n vertices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2 * n // 3


def decompose_minor(bags: BagFamily) -> tuple[int, int, int]:
    """Counts of bags by size class (1, 2, >=3); the three counts sum to the
    number of bags."""
    simple = sum(1 for b in bags.bags if len(b) == 1)
    double = sum(1 for b in bags.bags if len(b) == 2)
    triple = sum(1 for b in bags.bags if len(b) >= 3)
    return simple, double, triple
