from __future__ import annotations

import pytest

from formulation import (
    DegreeSequence,
    NetworkSpec,
    NonNull,
    Objective,
    ObjectiveMode,
    PropertyName,
    build,
)
from graphs import canonical_key
from solver import EnumerationStatus, SolveOptions, enumerate_nonisomorphic


def _enumerate(spec: NetworkSpec, k: int = 50):
    model, registry = build(spec)
    return enumerate_nonisomorphic(model, registry, k, SolveOptions(time_limit_s=None))


@pytest.mark.parametrize('n, classes', [(3, 4), (4, 11)])
def test_enumerates_every_isomorphism_class(n: int, classes: int) -> None:
    result = _enumerate(NetworkSpec(n))
    assert result.status is EnumerationStatus.EXHAUSTED
    assert len(result.graphs) == classes
    assert len({canonical_key(g) for g in result.graphs}) == classes
    assert result.duplicates == 0


def test_stops_after_k_graphs() -> None:
    result = _enumerate(NetworkSpec(4, (NonNull(),)), k=3)
    assert result.status is EnumerationStatus.COMPLETE
    assert len(result.graphs) == 3
    assert all(g.edges for g in result.graphs)


def test_single_realization() -> None:
    result = _enumerate(NetworkSpec(3, (DegreeSequence((2, 2, 2)),)))
    assert result.status is EnumerationStatus.EXHAUSTED
    assert [g.sorted_edges() for g in result.graphs] == [[(1, 2), (1, 3), (2, 3)]]


def test_unattainable_spec() -> None:
    result = _enumerate(NetworkSpec(4, (DegreeSequence((3, 3, 1, 1)),)))
    assert result.status is EnumerationStatus.UNATTAINABLE
    assert result.graphs == []
    assert result.solves == 1


def test_leaves_the_model_unchanged() -> None:
    model, registry = build(NetworkSpec(4, (DegreeSequence((2, 2, 1, 1)),)))
    rows = model.num_constraints
    result = enumerate_nonisomorphic(model, registry, 5)
    assert len(result.graphs) == 1
    assert model.num_constraints == rows


def test_rejects_models_without_a_min_slack_objective() -> None:
    spec = NetworkSpec(4, (NonNull(),), objective=Objective(ObjectiveMode.MAXIMIZE, PropertyName.EDGE_COUNT))
    model, registry = build(spec)
    with pytest.raises(ValueError):
        enumerate_nonisomorphic(model, registry, 3)
    model, registry = build(NetworkSpec(4))
    with pytest.raises(ValueError):
        enumerate_nonisomorphic(model, registry, 0)
