"""Seed-driven construction of the random paired graph on vertex groups
{a_i, b_i}, its canonical bags and colouring, and the rotated recolouring.

The graph on 2n vertices has n groups; group i (1-based) owns vertices
a_i = 2(i-1) and b_i = 2(i-1)+1.  For every pair of groups i < j exactly one
of the four cross pairs (a_i,a_j), (a_i,b_j), (b_i,a_j), (b_i,b_j) is
excluded — chosen uniformly by the seeded token stream — and the other
three are edges.  Two vertices of the same group are never adjacent, so
each group pair induces a path on its four vertices, which is what makes
the canonical colouring frozen and the group bags a quasi-clique-minor.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping, NamedTuple

from kempelab import kernels
from kempelab.graph import BagFamily, Colouring, Graph
from kempelab.rng import MASK64


class ExclusionChoice(str, Enum):
    """Which cross pair of a group pair (i<j) is the non-edge: first letter is
    the side in group i, second the side in group j."""

    AA = "AA"
    AB = "AB"
    BA = "BA"
    BB = "BB"


_CHOICE_BY_TOKEN = (ExclusionChoice.AA, ExclusionChoice.AB, ExclusionChoice.BA, ExclusionChoice.BB)
_TOKEN_BY_CHOICE = {c: t for t, c in enumerate(_CHOICE_BY_TOKEN)}


def a_id(i: int) -> int:
    """Vertex id of a_i (1-based group index)."""
    return 2 * (i - 1)


def b_id(i: int) -> int:
    """Vertex id of b_i (1-based group index)."""
    return 2 * (i - 1) + 1


def group_of(v: int) -> int:
    """1-based group index owning vertex id v."""
    return v // 2 + 1


def index_pairs(n: int) -> Iterator[tuple[int, int]]:
    """Group pairs (i, j), i < j, in the lexicographic consumption order."""
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            yield (i, j)


class Quadruple(NamedTuple):
    """Four distinct 1-based group indices; the rotated recolouring needs the
    cross edges a_i-b_j, a_j-b_k, a_k-b_l, a_l-b_i all absent."""

    i: int
    j: int
    k: int
    l: int


@dataclass(frozen=True)
class LvmInstance:
    """A fully determined paired-graph instance.

    ``exclusions`` is the per-pair choice tuple in lexicographic (i, j)
    order; ``seed`` is None for hand-crafted tables.  The derived graph is
    carried along, never serialized: files store only (n, seed, exclusions).
    """

    n: int
    seed: int | None
    exclusions: tuple[ExclusionChoice, ...]
    graph: Graph

    def exclusion_for(self, i: int, j: int) -> ExclusionChoice:
        if not (1 <= i < j <= self.n):
            raise ValueError(f"({i},{j}) is not a group pair with i<j in 1..{self.n}")
        # pairs (1,2)..(1,n), (2,3).. — offset of row i, then j
        row_start = (i - 1) * self.n - i * (i - 1) // 2
        return self.exclusions[row_start + (j - i - 1)]

    def exclusion_table(self) -> dict[tuple[int, int], ExclusionChoice]:
        return dict(zip(index_pairs(self.n), self.exclusions))


def _instance_from_codes(n: int, seed: int | None, codes) -> LvmInstance:
    adj = kernels.adjacency_from_codes(n, codes)
    graph = Graph(2 * n, tuple(adj))
    exclusions = tuple(_CHOICE_BY_TOKEN[c] for c in codes)
    return LvmInstance(n=n, seed=seed, exclusions=exclusions, graph=graph)


def generate(n: int, seed: int) -> LvmInstance:
    """Instance for (n, seed): the token stream of splitmix64(seed) decides the
    excluded cross pair of every group pair, in lexicographic pair order.
    Identical (n, seed) always reproduces the identical instance."""
    if n < 1:
        raise ValueError("n must be >= 1")
    codes = kernels.exclusion_codes(n, seed & MASK64)
    return _instance_from_codes(n, seed & MASK64, codes)


def from_exclusions(n: int, table: Mapping[tuple[int, int], ExclusionChoice | str]) -> LvmInstance:
    """Instance from an explicit choice table covering every pair i<j exactly once."""
    if n < 1:
        raise ValueError("n must be >= 1")
    remaining = dict(table)
    codes = bytearray()
    for pair in index_pairs(n):
        if pair not in remaining:
            raise ValueError(f"missing exclusion choice for pair {pair}")
        codes.append(_TOKEN_BY_CHOICE[ExclusionChoice(remaining.pop(pair))])
    if remaining:
        raise ValueError(f"unexpected pairs in table: {sorted(remaining)}")
    return _instance_from_codes(n, None, codes)


def canonical_bags(inst: LvmInstance) -> BagFamily:
    """The group bags {a_i, b_i}: always a quasi-clique-minor model of the instance."""
    return BagFamily(tuple(frozenset((a_id(i), b_id(i))) for i in range(1, inst.n + 1)))


def canonical_colouring(inst: LvmInstance) -> Colouring:
    """Colour both vertices of group i with colour i-1.  Proper, since groups
    are independent; frozen for n >= 2, since any two classes induce a path."""
    assignment = []
    for i in range(1, inst.n + 1):
        assignment += [i - 1, i - 1]
    return Colouring(tuple(assignment), palette_size=inst.n)


def _cross_edge_absent(inst: LvmInstance, x: int, y: int) -> bool:
    # edge a_x - b_y, distinct groups
    return not inst.graph.has_edge(a_id(x), b_id(y))


def find_quadruple(inst: LvmInstance) -> Quadruple | None:
    """Lexicographically first ordered quadruple of distinct groups whose four
    rotation cross edges are absent, or None (always None when n < 4)."""
    hit = kernels.find_quadruple(inst.n, list(inst.graph.adj))
    return Quadruple(*hit) if hit is not None else None


def quadruple_is_valid(inst: LvmInstance, q: Quadruple) -> bool:
    i, j, k, l = q
    if len({i, j, k, l}) != 4 or not all(1 <= x <= inst.n for x in (i, j, k, l)):
        return False
    return (
        _cross_edge_absent(inst, i, j)
        and _cross_edge_absent(inst, j, k)
        and _cross_edge_absent(inst, k, l)
        and _cross_edge_absent(inst, l, i)
    )


def alternative_colouring(inst: LvmInstance, q: Quadruple) -> Colouring:
    """The rotated n-colouring for a valid quadruple (i,j,k,l): groups outside
    the quadruple keep their canonical colour, while b_j joins a_i's class,
    b_k joins a_j's, b_l joins a_k's and b_i joins a_l's.  Proper because each
    new class is one of the absent cross pairs; its partition differs from the
    canonical one in exactly those four blocks."""
    if not quadruple_is_valid(inst, q):
        raise ValueError(f"quadruple {tuple(q)} is not valid for this instance")
    assignment = list(canonical_colouring(inst).assignment)
    i, j, k, l = q
    assignment[b_id(j)] = i - 1
    assignment[b_id(k)] = j - 1
    assignment[b_id(l)] = k - 1
    assignment[b_id(i)] = l - 1
    return Colouring(tuple(assignment), palette_size=inst.n)
