import random

import pytest

from kempelab.construction import canonical_colouring, from_exclusions, generate
from kempelab.errors import CapExceededError
from kempelab.graph import Colouring, make_graph, partition_of, is_proper
from kempelab.kempe import (
    KempeChain,
    _all_changes_preserve_partition,
    apply_kempe_change,
    chain_is_valid,
    enumerate_proper_colourings,
    frozen_class_check,
    is_frozen,
    kempe_chain,
    kempe_classes,
)

from oracles import bf_kempe_classes, bf_partition, random_graph


def k(n):
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n):
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def random_proper(rng, g, extra_colours=0):
    """Greedy proper colouring along a random vertex order, with a randomly
    padded palette so some colours may stay unused."""
    order = list(range(g.order))
    rng.shuffle(order)
    assignment = [0] * g.order
    used = 0
    coloured = set()
    for v in order:
        taken = {assignment[w] for w in g.neighbours(v) if w in coloured}
        c = 0
        while c in taken:
            c += 1
        assignment[v] = c
        coloured.add(v)
        used = max(used, c + 1)
    return Colouring(tuple(assignment), used + extra_colours)


class TestKempeChain:
    def test_whole_edge(self):
        chain = kempe_chain(k(2), Colouring((0, 1), 2), 0, 1)
        assert chain.vertices == frozenset({0, 1})

    def test_isolated_vertex_chain_of_size_one(self):
        g = make_graph(3, [(1, 2)])
        chain = kempe_chain(g, Colouring((0, 0, 1), 2), 0, 1)
        assert chain.vertices == frozenset({0})

    def test_full_bichromatic_path(self):
        chain = kempe_chain(path(3), Colouring((0, 1, 0), 2), 0, 1)
        assert chain.vertices == frozenset({0, 1, 2})

    def test_same_colour_rejected(self):
        with pytest.raises(ValueError):
            kempe_chain(k(2), Colouring((0, 1), 2), 0, 0)

    def test_improper_rejected(self):
        with pytest.raises(ValueError):
            kempe_chain(k(2), Colouring((0, 0), 2), 0, 1)

    def test_colour_outside_palette_rejected(self):
        with pytest.raises(ValueError):
            kempe_chain(k(2), Colouring((0, 1), 2), 0, 2)

    def test_returned_chains_satisfy_invariants(self):
        rng = random.Random(21)
        for _ in range(200):
            order = rng.randint(1, 8)
            g = make_graph(order, random_graph(rng, order, 0.4))
            c = random_proper(rng, g, extra_colours=rng.randint(0, 1))
            v = rng.randrange(order)
            others = [x for x in range(c.palette_size) if x != c.assignment[v]]
            if not others:
                continue
            chain = kempe_chain(g, c, v, rng.choice(others))
            assert chain_is_valid(g, c, chain)


class TestApplyKempeChange:
    def test_k2_swap(self):
        c = Colouring((0, 1), 2)
        chain = kempe_chain(k(2), c, 0, 1)
        assert apply_kempe_change(k(2), c, chain).assignment == (1, 0)

    def test_p3_full_swap(self):
        c = Colouring((0, 1, 0), 2)
        chain = kempe_chain(path(3), c, 0, 1)
        assert apply_kempe_change(path(3), c, chain).assignment == (1, 0, 1)

    def test_involution_and_properness(self):
        rng = random.Random(5)
        for _ in range(300):
            order = rng.randint(1, 8)
            g = make_graph(order, random_graph(rng, order, 0.5))
            c = random_proper(rng, g, extra_colours=rng.randint(0, 2))
            v = rng.randrange(order)
            others = [x for x in range(c.palette_size) if x != c.assignment[v]]
            if not others:
                continue
            chain = kempe_chain(g, c, v, rng.choice(others))
            once = apply_kempe_change(g, c, chain)
            assert is_proper(g, once)
            twice = apply_kempe_change(g, once, chain)
            assert twice.assignment == c.assignment

    def test_stale_chain_rejected(self):
        g = path(3)
        chain = kempe_chain(g, Colouring((0, 1, 0), 2), 0, 1)
        with pytest.raises(ValueError):
            apply_kempe_change(g, Colouring((0, 1, 2), 3), chain)

    def test_fabricated_non_maximal_chain_rejected(self):
        g = path(3)
        c = Colouring((0, 1, 0), 2)
        with pytest.raises(ValueError):
            apply_kempe_change(g, c, KempeChain(frozenset({0, 1}), (0, 1)))


class TestIsFrozen:
    def test_c4_two_colouring(self):
        assert is_frozen(cycle(4), Colouring((0, 1, 0, 1), 2))

    def test_rainbow_path_not_frozen(self):
        assert not is_frozen(path(3), Colouring((0, 1, 2), 3))

    def test_generated_canonical_colourings(self):
        for n, seed in ((2, 0), (5, 3), (8, 11)):
            inst = generate(n, seed)
            assert is_frozen(inst.graph, canonical_colouring(inst))

    def test_unused_colour_with_large_block_not_frozen(self):
        # a vertex of {0,2} can hop to the unused colour 2, splitting the block
        assert not is_frozen(cycle(4), Colouring((0, 1, 0, 1), 3))

    def test_unused_colour_with_singleton_blocks_frozen(self):
        assert is_frozen(k(3), Colouring((0, 1, 2), 4))

    def test_single_class_palette_one(self):
        g = make_graph(3, [])
        assert is_frozen(g, Colouring((0, 0, 0), 1))

    def test_single_class_with_spare_colour_not_frozen(self):
        g = make_graph(2, [])
        assert not is_frozen(g, Colouring((0, 0), 2))

    def test_improper_rejected(self):
        with pytest.raises(ValueError):
            is_frozen(k(2), Colouring((0, 0), 2))

    def test_matches_direct_change_chase(self):
        rng = random.Random(13)
        for _ in range(250):
            order = rng.randint(1, 7)
            g = make_graph(order, random_graph(rng, order, 0.5))
            c = random_proper(rng, g, extra_colours=rng.randint(0, 2))
            assert is_frozen(g, c) == _all_changes_preserve_partition(g, c)


class TestFrozenClassCheck:
    def test_c4(self):
        assert frozen_class_check(cycle(4), Colouring((0, 1, 0, 1), 2))

    def test_k3_unique_partition(self):
        assert frozen_class_check(k(3), Colouring((0, 1, 2), 3))

    def test_generated_instance(self):
        inst = generate(4, 9)
        assert frozen_class_check(inst.graph, canonical_colouring(inst))

    def test_precondition_enforced(self):
        with pytest.raises(ValueError):
            frozen_class_check(path(3), Colouring((0, 1, 2), 3))


class TestEnumerate:
    def test_k2(self):
        got = enumerate_proper_colourings(k(2), 2)
        assert [c.assignment for c in got] == [(0, 1), (1, 0)]

    def test_k3_all_bijections(self):
        assert len(enumerate_proper_colourings(k(3), 3)) == 6

    def test_k3_two_colours_empty(self):
        assert enumerate_proper_colourings(k(3), 2) == []

    def test_lexicographic_order(self):
        got = [c.assignment for c in enumerate_proper_colourings(path(3), 2)]
        assert got == sorted(got)

    def test_cap_guard(self):
        g = make_graph(4, [])
        with pytest.raises(CapExceededError):
            enumerate_proper_colourings(g, 4, cap=10)

    def test_palette_zero_rejected(self):
        with pytest.raises(ValueError):
            enumerate_proper_colourings(k(2), 0)


class TestKempeClasses:
    def test_k2_single_class(self):
        rep = kempe_classes(k(2), 2)
        assert rep.class_count == 1 and rep.class_sizes() == [2]

    def test_p3_two_colours(self):
        rep = kempe_classes(path(3), 2)
        assert rep.class_count == 1
        assert set(rep.classes[0]) == {(0, 1, 0), (1, 0, 1)}

    def test_k3_single_class_of_six(self):
        rep = kempe_classes(k(3), 3)
        assert rep.class_count == 1 and rep.class_sizes() == [6]
        assert rep.partition_class_count == 1

    def test_against_bfs_oracle(self):
        rng = random.Random(2)
        for _ in range(40):
            order = rng.randint(1, 5)
            g = make_graph(order, random_graph(rng, order, 0.5))
            for kk in (1, 2, 3):
                got = kempe_classes(g, kk)
                assert sorted(got.classes) == bf_kempe_classes(g, kk)

    def test_cap_propagates(self):
        g = make_graph(4, [])
        with pytest.raises(CapExceededError):
            kempe_classes(g, 4, cap=10)

    def test_frozen_class_fixes_partition(self):
        rng = random.Random(17)
        graphs = [cycle(4), k(3), path(3)]
        for _ in range(12):
            order = rng.randint(2, 5)
            graphs.append(make_graph(order, random_graph(rng, order, 0.6)))
        for g in graphs:
            for kk in (1, 2, 3):
                rep = kempe_classes(g, kk)
                for cl in rep.classes:
                    frozen_members = [
                        t for t in cl if is_frozen(g, Colouring(t, kk))
                    ]
                    if frozen_members:
                        partitions = {bf_partition(t) for t in cl}
                        assert len(partitions) == 1
