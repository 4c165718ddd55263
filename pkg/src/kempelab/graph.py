"""Simple undirected graphs on dense integer vertex ids, plus colourings,
colour partitions and bag families.

Adjacency is one Python-int bitmask per vertex: O(1) edge tests, cheap
neighbourhood set algebra, and the same layout the search kernels use.
All types are immutable after construction and safe to share across
concurrent readers; every operation here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Ascending vertex ids set in a bitmask."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple graph: ``order`` vertices 0..order-1, symmetric irreflexive adjacency."""

    order: int
    adj: tuple[int, ...]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbours(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.order):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def full_mask(self) -> int:
        return (1 << self.order) - 1


def make_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate and reversed pairs collapse.

    Raises ValueError for out-of-range endpoints or self-loops.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    adj = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{order - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``, vertices relabelled by rank within ``s``."""
    vs = sorted(set(s))
    if vs and not (0 <= vs[0] and vs[-1] < g.order):
        raise ValueError("vertex outside graph range")
    rank = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for i, v in enumerate(vs):
        for w in bits(g.adj[v]):
            j = rank.get(w)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(len(vs), tuple(adj))


def connected_mask(adj: Sequence[int], mask: int) -> bool:
    """Is the sub-bitmask ``mask`` connected in the induced subgraph?  Empty masks
    are the caller's responsibility."""
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
    return seen == mask


def is_connected(g: Graph, s: Iterable[int]) -> bool:
    """Connectivity of the subgraph induced on ``s``; a singleton is connected.

    Raises ValueError on an empty set — connectivity of nothing is undefined
    here and asking for it is a caller bug.
    """
    vs = set(s)
    if not vs:
        raise ValueError("connectivity of the empty set is undefined")
    for v in vs:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} outside graph range")
    return connected_mask(g.adj, mask_of(vs))


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract the edge (u, v): the merged vertex keeps min(u, v)'s slot,
    ids above max(u, v) shift down by one, parallel edges collapse."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge; only edges can be contracted")
    lo, hi = min(u, v), max(u, v)
    merged = (g.adj[lo] | g.adj[hi]) & ~(1 << lo) & ~(1 << hi)

    def relabel(mask: int) -> int:
        low = mask & ((1 << hi) - 1)
        high = mask >> (hi + 1)
        return low | (high << hi)

    adj = []
    for w in range(g.order):
        if w == hi:
            continue
        row = g.adj[w]
        if w == lo:
            row = merged
        else:
            if (row >> hi) & 1:
                row = (row & ~(1 << hi)) | (1 << lo)
        adj.append(relabel(row))
    return Graph(g.order - 1, tuple(adj))


@dataclass(frozen=True)
class Colouring:
    """Total assignment of vertices to colours 0..palette_size-1.

    Improper assignments are representable on purpose: validators must be
    able to inspect and reject them.  Operations that need properness state
    it as a precondition.
    """

    assignment: tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        if self.palette_size < 0:
            raise ValueError("palette size must be >= 0")
        for v, c in enumerate(self.assignment):
            if not 0 <= c < self.palette_size:
                raise ValueError(f"vertex {v} has colour {c} outside 0..{self.palette_size - 1}")

    def colour_of(self, v: int) -> int:
        return self.assignment[v]

    def class_masks(self) -> list[int]:
        """Bitmask of each colour class, indexed by colour."""
        masks = [0] * self.palette_size
        for v, c in enumerate(self.assignment):
            masks[c] |= 1 << v
        return masks


@dataclass(frozen=True)
class ColourPartition:
    """Unlabelled colour classes: nonempty disjoint blocks, sorted by least element."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block in partition")
            if seen & b:
                raise ValueError("overlapping blocks in partition")
            seen |= b
        canonical = tuple(sorted(self.blocks, key=min))
        if canonical != self.blocks:
            object.__setattr__(self, "blocks", canonical)


def partition_of(c: Colouring) -> ColourPartition:
    """Colour partition of a colouring: the set of nonempty classes.  Invariant
    under any permutation of colour names."""
    buckets: dict[int, set[int]] = {}
    for v, col in enumerate(c.assignment):
        buckets.setdefault(col, set()).add(v)
    return ColourPartition(tuple(frozenset(b) for b in buckets.values()))


def is_proper(g: Graph, c: Colouring) -> bool:
    """No edge joins two vertices of the same colour."""
    if len(c.assignment) != g.order:
        raise ValueError("colouring does not cover the vertex set")
    for m in c.class_masks():
        rest = m
        while rest:
            b = rest & -rest
            rest ^= b
            if g.adj[b.bit_length() - 1] & rest:
                return False
    return True


@dataclass(frozen=True)
class BagFamily:
    """Ordered family of nonempty, pairwise disjoint vertex sets.

    Connectivity requirements are checked by operations, not here: minor
    models need each bag connected, quasi-minor models only need pairwise
    unions connected.
    """

    bags: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for i, b in enumerate(self.bags):
            if not b:
                raise ValueError(f"bag {i} is empty")
            if any(v < 0 for v in b):
                raise ValueError(f"bag {i} holds a negative vertex id")
            if seen & b:
                raise ValueError(f"bag {i} overlaps an earlier bag")
            seen |= b
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))

    def __len__(self) -> int:
        return len(self.bags)

    def masks(self) -> list[int]:
        return [mask_of(b) for b in self.bags]


def check_bags_in_range(g: Graph, bags: BagFamily) -> None:
    for i, b in enumerate(bags.bags):
        for v in b:
            if v >= g.order:
                raise ValueError(f"bag {i} holds vertex {v} outside graph of order {g.order}")
