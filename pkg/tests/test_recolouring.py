from __future__ import annotations

import pytest
from hypothesis import given, settings

from recolour import (
    Colouring,
    PreconditionError,
    ResourceLimitError,
    apply_sequence,
    bfs_distance,
    enumerate_colourings,
    g1_frozen_colouring,
    is_frozen,
    is_proper,
    recolouring_graph,
    recolouring_neighbours,
    RecolouringStep,
)

from .conftest import complete_graph, edgeless_graph, graphs
from .oracles import chromatic_polynomial_at, count_colourings_brute


class TestEnumerate:
    def test_k3_at_3(self):
        assert len(enumerate_colourings(complete_graph(3), 3)) == 6

    def test_k2_at_2(self):
        found = enumerate_colourings(complete_graph(2), 2)
        assert [c.colours for c in found] == [(1, 2), (2, 1)]

    def test_g1_matches_deletion_contraction(self, g1):
        found = enumerate_colourings(g1, 3)
        assert len(found) == 6  # frozen value, recomputed by the oracle below
        assert len(found) == chromatic_polynomial_at(g1, 3)
        assert all(is_proper(g1, c) for c in found)

    def test_limit_reports_partial(self):
        with pytest.raises(ResourceLimitError) as exc:
            enumerate_colourings(edgeless_graph(4), 3, limit=10)
        assert exc.value.details["partial_count"] == 10

    def test_empty_graph_has_one_colouring(self):
        assert len(enumerate_colourings(edgeless_graph(0), 2)) == 1

    @given(graphs(max_vertices=5))
    @settings(max_examples=50)
    def test_permutation_symmetry(self, g):
        found = {c.colours for c in enumerate_colourings(g, 3)}
        swapped = {tuple({1: 2, 2: 1, 3: 3}[c] for c in cs) for cs in found}
        assert swapped == found

    @given(graphs(max_vertices=5))
    @settings(max_examples=50)
    def test_count_matches_brute_force(self, g):
        assert len(enumerate_colourings(g, 3)) == count_colourings_brute(g, 3)


class TestRecolouringGraph:
    def test_k2_at_2_two_frozen_singletons(self):
        s = recolouring_graph(complete_graph(2), 2)
        assert s.component_sizes == (1, 1)
        assert s.frozen_count == 2
        assert not s.is_mixing

    def test_k2_at_3_mixing_cycle(self):
        s = recolouring_graph(complete_graph(2), 3)
        assert s.colouring_count == 6
        assert s.is_mixing
        assert s.diameter_per_component == (3,)
        assert s.frozen_count == 0

    def test_g1_at_4_not_mixing(self, g1):
        s = recolouring_graph(g1, 4)
        assert not s.is_mixing
        assert s.frozen_count >= 1
        assert 1 in s.component_sizes
        assert sum(s.component_sizes) == s.colouring_count

    def test_diameter_skipped_above_limit(self):
        s = recolouring_graph(complete_graph(2), 3, diameter_limit=5)
        assert s.diameter_per_component == (None,)

    @given(graphs(max_vertices=4))
    @settings(max_examples=40, deadline=None)
    def test_summary_counting_invariants(self, g):
        for k in (2, 3):
            s = recolouring_graph(g, k)
            assert sum(s.component_sizes) == s.colouring_count
            assert s.frozen_count <= sum(1 for size in s.component_sizes if size == 1)
            assert s.is_mixing == (s.component_count <= 1)


class TestFrozenIsIsolated:
    @given(graphs(max_vertices=6))
    @settings(max_examples=60, deadline=None)
    def test_frozen_iff_no_neighbours(self, g):
        for k in (1, 2, 3, 4):
            for c in enumerate_colourings(g, k, limit=50_000):
                degree = sum(1 for _ in recolouring_neighbours(g, c))
                assert is_frozen(g, c) == (degree == 0)

    def test_g1_frozen_colouring_is_isolated(self, g1):
        assert list(recolouring_neighbours(g1, g1_frozen_colouring())) == []


class TestBfsDistance:
    def test_identity(self):
        k2 = complete_graph(2)
        assert bfs_distance(k2, 3, Colouring(3, (1, 2)), Colouring(3, (1, 2))) == 0

    def test_k2_swap_is_3(self):
        k2 = complete_graph(2)
        assert bfs_distance(k2, 3, Colouring(3, (1, 2)), Colouring(3, (2, 1))) == 3

    def test_frozen_is_unreachable(self, g1):
        frozen = g1_frozen_colouring()
        other = enumerate_colourings(g1, 4, limit=10_000)[0]
        assert other.colours != frozen.colours
        assert bfs_distance(g1, 4, frozen, other) is None

    def test_agrees_with_component_membership(self, g1):
        # Two colourings in the big component of the 4-recolouring graph.
        found = enumerate_colourings(g1, 4)
        mobile = [c for c in found if not is_frozen(g1, c)]
        d = bfs_distance(g1, 4, mobile[0], mobile[-1])
        assert d is not None and d >= 1

    def test_rejects_improper(self):
        k2 = complete_graph(2)
        with pytest.raises(PreconditionError):
            bfs_distance(k2, 2, Colouring(2, (1, 1)), Colouring(2, (1, 2)))


class TestApplySequence:
    def test_empty_is_identity(self):
        k2 = complete_graph(2)
        final, counts = apply_sequence(k2, Colouring(3, (1, 2)), [])
        assert final.colours == (1, 2) and counts == [0, 0]

    def test_k2_walk(self):
        k2 = complete_graph(2)
        steps = [RecolouringStep(0, 3), RecolouringStep(1, 1), RecolouringStep(0, 2)]
        final, counts = apply_sequence(k2, Colouring(3, (1, 2)), steps)
        assert final.colours == (2, 1)
        assert counts == [2, 1]

    def test_rejects_no_op_with_index(self):
        k2 = complete_graph(2)
        with pytest.raises(PreconditionError, match="step 1"):
            apply_sequence(k2, Colouring(3, (1, 2)), [RecolouringStep(0, 3), RecolouringStep(0, 3)])

    def test_rejects_improper_step_with_index(self):
        k2 = complete_graph(2)
        with pytest.raises(PreconditionError, match="step 0"):
            apply_sequence(k2, Colouring(3, (1, 2)), [RecolouringStep(0, 2)])
