from __future__ import annotations

import pytest

from formulation import (
    AdnByDegree,
    AvgClustering,
    CharacteristicPathLength,
    ClosenessSequence,
    DegreeBounds,
    DegreeSequence,
    Diameter,
    GlobalClustering,
    MinDegreeSpan,
    MotifCount,
    MotifKind,
    NetworkSpec,
    NonNull,
)
from graphs import Graph, band_distance, check_spec, inverse_band

TRIANGLE = Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])
PATH4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])


def test_band_distance_and_inverse_band() -> None:
    assert band_distance(0.5, (0.0, 1.0)) == 0.0
    assert band_distance(-1.0, (0.0, 1.0)) == 1.0
    assert band_distance(3.0, (0.0, 1.0)) == 2.0
    assert inverse_band((0.5, 1.0), 4) == (1.0, 2.0)
    assert inverse_band((0.0, 0.5), 4) == (2.0, 2.0)


def test_degree_sequence_is_checked_as_multiset_with_labeled_deviation() -> None:
    spec = NetworkSpec(4, (DegreeSequence((2, 2, 1, 1)),))
    verdict = check_spec(PATH4, spec)
    # P4 degrees are (1, 2, 2, 1): same multiset, labeled L1 distance 2
    assert verdict.passed
    assert verdict.checks[0].deviation == 2.0


def test_unattainable_degree_sequence_fails() -> None:
    spec = NetworkSpec(3, (DegreeSequence((2, 2, 2)),))
    verdict = check_spec(Graph.from_edges(3, [(1, 2)]), spec)
    assert not verdict.passed
    assert verdict.total_deviation == 4.0
    assert verdict.failures()[0].label == '1:degree_sequence'


def test_clustering_bands() -> None:
    spec = NetworkSpec(3, (AvgClustering((0.5, 1.0)), GlobalClustering((0.9, 1.0))))
    assert check_spec(TRIANGLE, spec).passed
    path = Graph.from_edges(3, [(1, 2), (2, 3)])
    verdict = check_spec(path, spec)
    assert not verdict.passed
    assert verdict.checks[0].deviation == pytest.approx(0.5)
    # cross-multiplied form: 0.9 * one two-path minus zero triangles
    assert verdict.checks[1].deviation == pytest.approx(0.9)


def test_path_constraints_make_disconnected_graphs_inadmissible() -> None:
    spec = NetworkSpec(4, (Diameter((1, 3)),))
    verdict = check_spec(Graph.from_edges(4, [(1, 2), (3, 4)]), spec)
    assert not verdict.admissible
    assert verdict.total_deviation is None
    assert check_spec(PATH4, spec).passed


def test_cpl_interval_intersects_band() -> None:
    assert check_spec(PATH4, NetworkSpec(4, (CharacteristicPathLength((2, 2)),))).passed
    verdict = check_spec(PATH4, NetworkSpec(4, (CharacteristicPathLength((3, 3)),)))
    assert not verdict.passed
    assert verdict.checks[0].deviation == 1.0


def test_closeness_sequence_needs_one_to_one_assignment() -> None:
    # P4 closeness: ends 0.5, middle 0.75
    bands = ((0.7, 0.8), (0.7, 0.8), (0.4, 0.6), (0.4, 0.6))
    assert check_spec(PATH4, NetworkSpec(4, (ClosenessSequence(bands),))).passed
    crowded = ((0.7, 0.8), (0.7, 0.8), (0.7, 0.8), (0.4, 0.6))
    verdict = check_spec(PATH4, NetworkSpec(4, (ClosenessSequence(crowded),)))
    assert not verdict.passed
    assert verdict.checks[0].deviation > 0


def test_adn_by_degree() -> None:
    star = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    spec = NetworkSpec(4, (AdnByDegree(((1, (3.0, 3.0)), (3, (0.5, 1.0)))),))
    assert check_spec(star, spec).passed
    failing = NetworkSpec(4, (AdnByDegree(((1, (1.0, 2.0)),)),))
    verdict = check_spec(star, failing)
    assert not verdict.passed
    assert verdict.checks[0].deviation == pytest.approx(3.0)


def test_small_constraints() -> None:
    empty = Graph(4)
    assert not check_spec(empty, NetworkSpec(4, (NonNull(),))).passed
    assert check_spec(PATH4, NetworkSpec(4, (MinDegreeSpan(1),))).passed
    assert not check_spec(PATH4, NetworkSpec(4, (MinDegreeSpan(2),))).passed
    assert check_spec(PATH4, NetworkSpec(4, (DegreeBounds(1, 2),))).passed
    labelled = NetworkSpec(4, (DegreeBounds(2, 3, (1,)),))
    assert check_spec(PATH4, labelled).checks[0].deviation == 1.0
    assert check_spec(TRIANGLE, NetworkSpec(3, (MotifCount(MotifKind.TRIANGLE, (1, 1)),))).passed
