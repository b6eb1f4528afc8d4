from __future__ import annotations

import pytest

from formulation import DegreeSequence, NetworkSpec, build
from graphs import Graph
from milp import MilpModel
from solver import SolveStatus, import_solution

SPEC = NetworkSpec(3, (DegreeSequence((2, 2, 2)),))


def _full_text(model: MilpModel, edges: dict[str, float]) -> str:
    """Every variable of the degree-sequence model with K3 values, edges overridden."""
    lines = []
    for variable in model.variables:
        if variable.name.startswith('x_'):
            value = edges.get(variable.name, 1.0)
        elif variable.name.startswith('pd_'):
            value = 2.0
        else:
            value = 0.0
        lines.append(f'{variable.name} {value:g}')
    return '\n'.join(lines) + '\n'


def test_accepts_the_triangle_with_completion() -> None:
    model, registry = build(SPEC)
    result, message = import_solution(model, registry, '# K3\nx_1_2 1\nx_1_3 1\nx_2_3 1\n')
    assert result is not None, message
    assert result.status is SolveStatus.FEASIBLE
    assert result.graph == Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)])
    assert result.total_slack == pytest.approx(0.0)
    assert 'verified' in message


def test_accepts_a_full_assignment() -> None:
    model, registry = build(SPEC)
    result, _ = import_solution(model, registry, _full_text(model, {}))
    assert result is not None
    assert result.assignment['pd_1'] == 2.0


def test_completion_fills_slacks() -> None:
    model, registry = build(SPEC)
    result, _ = import_solution(model, registry, 'x_1_2 1\nx_1_3 0\nx_2_3 1\n')
    assert result is not None
    assert result.total_slack == pytest.approx(2.0)


def test_rejects_a_flipped_edge_naming_the_row() -> None:
    model, registry = build(SPEC)
    result, message = import_solution(model, registry, _full_text(model, {'x_1_2': 0.0}))
    assert result is None
    assert message.startswith('Constraint pd_def_1 violated')


def test_rejects_missing_binaries() -> None:
    model, registry = build(SPEC)
    result, message = import_solution(model, registry, 'x_1_2 1\nx_1_3 1\n')
    assert result is None
    assert message == 'Missing binary variables: x_2_3'


def test_rejects_unknown_variables() -> None:
    model, registry = build(SPEC)
    result, message = import_solution(model, registry, 'x_1_2 1\nx_1_3 1\nx_2_3 1\ny_9 1\n')
    assert result is None
    assert message == 'Unknown variables: y_9'


def test_rejects_fractional_binaries_and_bad_text() -> None:
    model, registry = build(SPEC)
    result, message = import_solution(model, registry, _full_text(model, {'x_1_2': 0.5}))
    assert result is None
    assert 'not integral' in message
    result, message = import_solution(model, registry, 'x_1_2 one\n')
    assert result is None
    assert 'invalid value' in message
