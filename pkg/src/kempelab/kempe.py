"""Kempe chains and changes, frozen-colouring detection, and exhaustive
equivalence-class enumeration over all proper colourings of small graphs.

A Kempe chain is a maximal connected component of the subgraph induced by
two colour classes (a vertex with no neighbour in the other colour is a
chain of size 1).  A Kempe change swaps the two colours on one chain; two
colourings are equivalent when a sequence of changes links them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from kempelab.errors import CapExceededError
from kempelab.graph import (
    Colouring,
    ColourPartition,
    Graph,
    bits,
    connected_mask,
    partition_of,
    is_proper,
)

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class KempeChain:
    """A chain: its vertex set and the unordered colour pair it lives on."""

    vertices: frozenset[int]
    colours: tuple[int, int]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a Kempe chain is never empty")
        c1, c2 = self.colours
        if c1 == c2:
            raise ValueError("chain colours must differ")
        if c1 > c2:
            object.__setattr__(self, "colours", (c2, c1))


def _component_of(adj, mask: int, start_bit: int) -> int:
    """Connected component of ``start_bit`` inside the induced sub-bitmask."""
    seen = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        q = frontier
        while q:
            b = q & -q
            q ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen


def _components(adj, mask: int):
    while mask:
        comp = _component_of(adj, mask, mask & -mask)
        yield comp
        mask &= ~comp


def kempe_chain(g: Graph, c: Colouring, v: int, other: int) -> KempeChain:
    """The chain containing ``v`` on the colour pair (colour of v, other).

    Requires a proper colouring and ``other`` different from v's colour.
    """
    if not is_proper(g, c):
        raise ValueError("kempe_chain requires a proper colouring")
    cv = c.assignment[v]
    if other == cv:
        raise ValueError("the second colour must differ from the vertex's colour")
    if not 0 <= other < c.palette_size:
        raise ValueError(f"colour {other} outside palette 0..{c.palette_size - 1}")
    masks = c.class_masks()
    comp = _component_of(g.adj, masks[cv] | masks[other], 1 << v)
    return KempeChain(frozenset(bits(comp)), (cv, other))


def chain_is_valid(g: Graph, c: Colouring, chain: KempeChain) -> bool:
    """Do the chain invariants hold against (g, c)?  Vertices all carry one of
    the two colours, and the set is exactly one maximal bichromatic component."""
    c1, c2 = chain.colours
    if c2 >= c.palette_size:
        return False
    if any(c.assignment[v] not in (c1, c2) for v in chain.vertices):
        return False
    masks = c.class_masks()
    union = masks[c1] | masks[c2]
    chain_mask = 0
    for v in chain.vertices:
        chain_mask |= 1 << v
    comp = _component_of(g.adj, union, chain_mask & -chain_mask)
    return comp == chain_mask


def apply_kempe_change(g: Graph, c: Colouring, chain: KempeChain) -> Colouring:
    """Swap the chain's two colours on its vertices.  Properness is preserved;
    applying the same change twice restores the original colouring."""
    if not chain_is_valid(g, c, chain):
        raise ValueError("stale chain: invariants fail against this colouring")
    c1, c2 = chain.colours
    assignment = list(c.assignment)
    for v in chain.vertices:
        assignment[v] = c1 + c2 - assignment[v]
    return Colouring(tuple(assignment), c.palette_size)


def is_frozen(g: Graph, c: Colouring) -> bool:
    """Can no Kempe change alter the colour partition?

    Two conditions, both forced by chasing every possible chain swap:

    * every two nonempty colour classes induce a connected union — the only
      chain on that pair is then the whole union, whose swap merely relabels
      the two blocks;
    * if any palette colour is unused, every class is a singleton — a vertex
      always forms a size-1 chain with an unused colour, and swapping it
      splits any block of size >= 2 (a singleton block just gets renamed).

    Vacuously true with at most one block and no unused colour.
    """
    if not is_proper(g, c):
        raise ValueError("is_frozen requires a proper colouring")
    blocks = [m for m in c.class_masks() if m]
    if c.palette_size > len(blocks) and any(m.bit_count() > 1 for m in blocks):
        return False
    for m1, m2 in combinations(blocks, 2):
        if not connected_mask(g.adj, m1 | m2):
            return False
    return True


def _all_changes_preserve_partition(g: Graph, c: Colouring) -> bool:
    """Apply every possible Kempe change to c and compare colour partitions.

    Only the two swapped classes can change, so equality of the whole
    partition reduces to comparing the affected pair of blocks.
    """
    masks = c.class_masks()
    for c1, c2 in combinations(range(c.palette_size), 2):
        m1, m2 = masks[c1], masks[c2]
        union = m1 | m2
        if not union:
            continue
        before = {m for m in (m1, m2) if m}
        for comp in _components(g.adj, union):
            new1 = (m1 & ~comp) | (m2 & comp)
            new2 = (m2 & ~comp) | (m1 & comp)
            after = {m for m in (new1, new2) if m}
            if after != before:
                return False
    return True


def frozen_class_check(g: Graph, c: Colouring) -> bool:
    """Direct verification behind is_frozen: every single Kempe change applied
    to c must leave partition_of(c) unchanged.  Requires is_frozen(g, c); a
    False return would expose a bug in the frozen test itself."""
    if not is_frozen(g, c):
        raise ValueError("frozen_class_check requires a frozen colouring")
    return _all_changes_preserve_partition(g, c)


def enumerate_proper_colourings(g: Graph, k: int, cap: int = DEFAULT_CAP) -> list[Colouring]:
    """All proper labelled k-colourings in lexicographic assignment order.

    Raises CapExceededError as soon as more than ``cap`` colourings exist.
    """
    if k < 1:
        raise ValueError("palette size must be >= 1")
    out: list[tuple[int, ...]] = []
    for t in _proper_assignments(g, k):
        out.append(t)
        if len(out) > cap:
            raise CapExceededError(f"more than {cap} proper colourings")
    return [Colouring(t, k) for t in out]


def _proper_assignments(g: Graph, k: int):
    n = g.order
    assignment = [0] * n
    class_masks = [0] * k

    def rec(v: int):
        if v == n:
            yield tuple(assignment)
            return
        for col in range(k):
            if g.adj[v] & class_masks[col]:
                continue
            assignment[v] = col
            class_masks[col] |= 1 << v
            yield from rec(v + 1)
            class_masks[col] &= ~(1 << v)

    yield from rec(0)


def _kempe_neighbours(adj, t: tuple[int, ...], k: int):
    """All colourings one Kempe change away from assignment tuple t."""
    masks = [0] * k
    for v, col in enumerate(t):
        masks[col] |= 1 << v
    for c1, c2 in combinations(range(k), 2):
        union = masks[c1] | masks[c2]
        for comp in _components(adj, union):
            swapped = list(t)
            for v in bits(comp):
                swapped[v] = c1 + c2 - swapped[v]
            yield tuple(swapped)


@dataclass(frozen=True)
class KempeClassReport:
    """Equivalence classes of the proper k-colourings of one graph.

    ``classes`` holds assignment tuples, each class sorted, classes ordered
    by their lexicographically least member (the canonical representative).
    ``partition_classes`` is the per-class view after quotienting colourings
    to partitions; ``partition_class_count`` additionally merges classes
    that share a partition, giving the number of partition-level components.
    """

    palette_size: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    partition_classes: tuple[tuple[ColourPartition, ...], ...]
    partition_class_count: int

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def colouring_count(self) -> int:
        return sum(len(cl) for cl in self.classes)

    def class_sizes(self) -> list[int]:
        return [len(cl) for cl in self.classes]

    def representatives(self) -> list[tuple[int, ...]]:
        return [cl[0] for cl in self.classes]


def kempe_classes(g: Graph, k: int, cap: int = DEFAULT_CAP) -> KempeClassReport:
    """Breadth-first closure of all proper k-colourings under single Kempe
    changes.  Deterministic: classes and members come out in canonical order
    regardless of exploration details."""
    colourings = [c.assignment for c in enumerate_proper_colourings(g, k, cap)]
    index = {t: i for i, t in enumerate(colourings)}
    seen = [False] * len(colourings)
    classes: list[list[tuple[int, ...]]] = []
    adj = g.adj
    for start, t in enumerate(colourings):
        if seen[start]:
            continue
        seen[start] = True
        queue = [t]
        members = [t]
        while queue:
            cur = queue.pop()
            for nb in _kempe_neighbours(adj, cur, k):
                i = index[nb]
                if not seen[i]:
                    seen[i] = True
                    queue.append(nb)
                    members.append(nb)
        classes.append(sorted(members))
    classes.sort(key=lambda cl: cl[0])

    per_class_partitions: list[tuple[ColourPartition, ...]] = []
    partition_home: dict[ColourPartition, int] = {}
    parent = list(range(len(classes)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ci, cl in enumerate(classes):
        parts = {partition_of(Colouring(t, k)) for t in cl}
        per_class_partitions.append(tuple(sorted(parts, key=lambda p: tuple(sorted(map(sorted, p.blocks))))))
        for p in parts:
            if p in partition_home:
                ra, rb = find(partition_home[p]), find(ci)
                if ra != rb:
                    parent[rb] = ra
            else:
                partition_home[p] = ci
    groups = {find(i) for i in range(len(classes))}
    return KempeClassReport(
        palette_size=k,
        classes=tuple(tuple(cl) for cl in classes),
        partition_classes=tuple(per_class_partitions),
        partition_class_count=len(groups),
    )
