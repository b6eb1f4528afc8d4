from __future__ import annotations

import pytest

from formulation import (
    Diameter,
    NetworkSpec,
    SecondaryCriterion,
    SymmetryConfig,
    SymmetryMode,
    build,
)
from solver import EnumerationStatus, SolveOptions, enumerate_nonisomorphic

pytestmark = pytest.mark.slow


def _class_count(spec: NetworkSpec) -> int:
    model, registry = build(spec)
    result = enumerate_nonisomorphic(model, registry, 50, SolveOptions(time_limit_s=None))
    assert result.status is EnumerationStatus.EXHAUSTED
    return len(result.graphs)


@pytest.mark.parametrize('symmetry', [
    SymmetryConfig(SymmetryMode.NONE),
    SymmetryConfig(SymmetryMode.PRIMARY),
    SymmetryConfig(SymmetryMode.PRIMARY_SECONDARY, SecondaryCriterion.LOCAL_CC),
    SymmetryConfig(SymmetryMode.PRIMARY_SECONDARY, SecondaryCriterion.SDN),
])
def test_ordering_keeps_a_representative_of_every_graph(symmetry: SymmetryConfig) -> None:
    assert _class_count(NetworkSpec(4, symmetry=symmetry)) == 11


@pytest.mark.parametrize('secondary', [
    SecondaryCriterion.DIST_TO_LAST,
    SecondaryCriterion.INVERSE_CLOSENESS,
])
def test_path_criteria_keep_every_connected_graph(secondary: SecondaryCriterion) -> None:
    symmetry = SymmetryConfig(SymmetryMode.PRIMARY_SECONDARY, secondary)
    assert _class_count(NetworkSpec(4, (Diameter((1, 3)),), symmetry=symmetry)) == 6
