from __future__ import annotations

import random

import pytest

from recolour import (
    Colouring,
    Partition,
    PreconditionError,
    apply_sequence,
    bfs_distance,
    normalize_to_partition,
    optimal_colouring_3k1,
    rare_colour,
    recolour_path_3k1,
    rename_partition,
    random_3k1_free,
    random_colouring,
)

from .conftest import complete_graph, cycle_graph, edgeless_graph, path_graph


class TestRareColour:
    def test_unused_colour_wins(self):
        verdict = rare_colour(complete_graph(2), Colouring(3, (1, 2)))
        assert (verdict.colour, verdict.multiplicity, verdict.vertex) == (3, 0, None)

    def test_c4_unused(self):
        verdict = rare_colour(cycle_graph(4), Colouring(3, (1, 2, 1, 2)))
        assert verdict.colour == 3 and verdict.multiplicity == 0

    def test_c4_least_singleton(self):
        verdict = rare_colour(cycle_graph(4), Colouring(3, (1, 2, 3, 2)))
        assert (verdict.colour, verdict.multiplicity, verdict.vertex) == (1, 1, 0)

    def test_no_rare_colour_signals_precondition(self):
        with pytest.raises(PreconditionError, match="no rare colour"):
            rare_colour(edgeless_graph(4), Colouring(2, (1, 1, 2, 2)))

    def test_rejects_improper(self):
        with pytest.raises(PreconditionError):
            rare_colour(complete_graph(2), Colouring(2, (1, 1)))


class TestNormalize:
    def test_already_matching_is_empty(self):
        p3 = path_graph(3)
        target = Partition.of(Colouring(2, (1, 2, 1)))
        trace = normalize_to_partition(p3, Colouring(3, (1, 2, 1)), target)
        assert trace.steps == ()

    def test_c4_instance(self):
        c4 = cycle_graph(4)
        start = Colouring(3, (1, 2, 3, 2))
        target = Partition.of(Colouring(2, (1, 2, 1, 2)))
        trace = normalize_to_partition(c4, start, target)
        assert all(c <= 1 for c in trace.per_vertex_counts)
        final, counts = apply_sequence(c4, start, trace.steps)
        assert counts == list(trace.per_vertex_counts)
        assert Partition.of(final).as_sets() == target.as_sets()

    def test_randomized_instances(self):
        rng = random.Random(60657)
        for _ in range(120):
            n = rng.randint(1, 14)
            g = random_3k1_free(n, rng.uniform(0.3, 0.9), seed=rng.randrange(2**32))
            gamma = optimal_colouring_3k1(g)
            start = random_colouring(g, gamma.k + 1, seed=rng.randrange(2**32))
            trace = normalize_to_partition(g, start, Partition.of(gamma))
            assert all(c <= 1 for c in trace.per_vertex_counts)
            final, _ = apply_sequence(g, start, trace.steps)  # validates properness
            assert Partition.of(final).as_sets() == Partition.of(gamma).as_sets()

    def test_rejects_oversized_class(self):
        g = edgeless_graph(3)
        target = Partition.of(Colouring(1, (1, 1, 1)))
        with pytest.raises(PreconditionError, match="more than 2"):
            normalize_to_partition(g, Colouring(2, (1, 1, 1)), target)

    def test_rejects_small_palette(self):
        k2 = complete_graph(2)
        target = Partition.of(Colouring(2, (1, 2)))
        with pytest.raises(PreconditionError, match="too small"):
            normalize_to_partition(k2, Colouring(2, (1, 2)), target)

    def test_rejects_non_optimal_target(self):
        # {{0},{1},{2},{3}} has 4 classes but chi(C4) = 2.
        c4 = cycle_graph(4)
        target = Partition.of(Colouring(4, (1, 2, 3, 4)))
        with pytest.raises(PreconditionError, match="not optimal"):
            normalize_to_partition(c4, Colouring(5, (1, 2, 3, 4)), target)


class TestRename:
    def test_identity_is_empty(self):
        p3 = path_graph(3)
        c = Colouring(3, (1, 2, 1))
        assert rename_partition(p3, c, c) == []

    def test_p3_swap(self):
        p3 = path_graph(3)
        start = Colouring(3, (1, 2, 1))
        goal = Colouring(3, (2, 1, 2))
        steps = rename_partition(p3, start, goal)
        final, counts = apply_sequence(p3, start, steps)
        assert final.colours == goal.colours
        assert max(counts) <= 2
        assert len(steps) >= bfs_distance(p3, 3, start, goal)

    def test_randomized_same_partition_pairs(self):
        rng = random.Random(1812)
        for _ in range(150):
            n = rng.randint(1, 12)
            g = random_3k1_free(n, rng.uniform(0.3, 0.9), seed=rng.randrange(2**32))
            gamma = optimal_colouring_3k1(g)
            k = gamma.k + 1
            # Random renamings of gamma's classes into the larger palette.
            perm1 = rng.sample(range(1, k + 1), gamma.k)
            perm2 = rng.sample(range(1, k + 1), gamma.k)
            a = Colouring(k, tuple(perm1[c - 1] for c in gamma.colours))
            b = Colouring(k, tuple(perm2[c - 1] for c in gamma.colours))
            steps = rename_partition(g, a, b)
            final, counts = apply_sequence(g, a, steps)
            assert final.colours == b.colours
            assert max(counts, default=0) <= 2

    def test_rejects_different_partitions(self):
        p3 = path_graph(3)
        with pytest.raises(PreconditionError, match="different partitions"):
            rename_partition(p3, Colouring(3, (1, 2, 1)), Colouring(3, (1, 2, 3)))

    def test_palette_exhaustion(self):
        k2 = complete_graph(2)
        with pytest.raises(PreconditionError, match="palette exhausted"):
            rename_partition(k2, Colouring(2, (1, 2)), Colouring(2, (2, 1)))


class TestRecolourPath:
    def test_identical_endpoints_give_empty_sequence(self):
        k2 = complete_graph(2)
        seq = recolour_path_3k1(k2, Colouring(3, (1, 2)), Colouring(3, (1, 2)))
        assert seq.steps == ()

    def test_k2_swap_within_bounds(self):
        k2 = complete_graph(2)
        a, b = Colouring(3, (1, 2)), Colouring(3, (2, 1))
        seq = recolour_path_3k1(k2, a, b)
        final, _ = apply_sequence(k2, a, seq.steps)
        assert final.colours == b.colours
        assert bfs_distance(k2, 3, a, b) <= len(seq.steps) <= 8

    def test_deterministic(self):
        g = random_3k1_free(9, 0.5, seed=11)
        k = optimal_colouring_3k1(g).k + 1
        a = random_colouring(g, k, seed=1)
        b = random_colouring(g, k, seed=2)
        assert recolour_path_3k1(g, a, b) == recolour_path_3k1(g, a, b)

    def test_randomized_walks_validate(self):
        rng = random.Random(271828)
        for _ in range(80):
            n = rng.randint(1, 12)
            g = random_3k1_free(n, rng.uniform(0.3, 0.9), seed=rng.randrange(2**32))
            k = optimal_colouring_3k1(g).k + 1
            a = random_colouring(g, k, seed=rng.randrange(2**32))
            b = random_colouring(g, k, seed=rng.randrange(2**32))
            seq = recolour_path_3k1(g, a, b)
            final, counts = apply_sequence(g, a, seq.steps)
            assert final.colours == b.colours
            assert len(seq.steps) <= 4 * n
            assert max(counts, default=0) <= 4

    def test_stage_tags_on_failures(self):
        k2 = complete_graph(2)
        with pytest.raises(PreconditionError, match=r"\[input\] palettes differ"):
            recolour_path_3k1(k2, Colouring(3, (1, 2)), Colouring(4, (1, 2)))
        with pytest.raises(PreconditionError, match=r"\[input\] palette 2"):
            recolour_path_3k1(k2, Colouring(2, (1, 2)), Colouring(2, (2, 1)))
        with pytest.raises(PreconditionError, match=r"\[optimal-colouring\]"):
            recolour_path_3k1(
                edgeless_graph(3), Colouring(2, (1, 1, 1)), Colouring(2, (2, 2, 2))
            )
