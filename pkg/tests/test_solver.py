from __future__ import annotations

import random

import numpy as np
import pytest

from formulation import DegreeSequence, MotifCount, MotifKind, NetworkSpec, build
from graphs import Graph, check_spec
from milp import ConstraintSense, MilpModel, ObjectiveSense, VariableKind
from solver import (
    BranchingRule,
    LpMethod,
    LpStatus,
    SolveOptions,
    SolveStatus,
    solve,
    solve_relaxation,
)

K3 = Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)])


def _small_lp() -> MilpModel:
    model = MilpModel('lp')
    x = model.add_variable('x', upper=10.0)
    y = model.add_variable('y', upper=10.0)
    model.add_linear_constraint('c1', [(x, 1.0), (y, 2.0)], ConstraintSense.LE, 4.0)
    model.add_linear_constraint('c2', [(x, 3.0), (y, 1.0)], ConstraintSense.LE, 6.0)
    model.set_objective(ObjectiveSense.MAXIMIZE, [(x, 1.0), (y, 1.0)])
    return model


def _knapsack() -> MilpModel:
    model = MilpModel('knapsack')
    items = [model.add_variable(name, VariableKind.BINARY, 0, 1) for name in ('a', 'b', 'c')]
    model.add_linear_constraint('weight', zip(items, (2.0, 3.0, 1.0)), ConstraintSense.LE, 5.0)
    model.set_objective(ObjectiveSense.MAXIMIZE, zip(items, (5.0, 4.0, 3.0)))
    return model


def _random_lp(rng: np.random.Generator) -> MilpModel:
    model = MilpModel('random')
    ids = [model.add_variable(f'v{k}', lower=0.0, upper=5.0) for k in range(6)]
    for row in range(4):
        coefs = rng.integers(0, 5, size=6).astype(float)
        model.add_linear_constraint(f'r{row}', zip(ids, coefs), ConstraintSense.LE,
                                    float(rng.integers(3, 12)))
    model.add_linear_constraint('total', zip(ids, [1.0] * 6), ConstraintSense.EQ, 2.0)
    model.add_linear_constraint('floor', [(ids[0], 1.0), (ids[1], 1.0)], ConstraintSense.GE, 0.5)
    model.set_objective(ObjectiveSense.MAXIMIZE, zip(ids, rng.normal(size=6)))
    return model


@pytest.mark.parametrize('method', list(LpMethod))
def test_relaxation_of_a_small_lp(method: LpMethod) -> None:
    result = solve_relaxation(_small_lp(), method=method)
    assert result.status is LpStatus.OPTIMAL
    assert result.objective == pytest.approx(2.8)
    assert result.values == pytest.approx([1.6, 1.2])


@pytest.mark.parametrize('method', list(LpMethod))
def test_infeasible_relaxation(method: LpMethod) -> None:
    model = MilpModel('infeasible')
    x = model.add_variable('x')
    y = model.add_variable('y')
    model.add_linear_constraint('too_much', [(x, 1.0), (y, 1.0)], ConstraintSense.GE, 3.0)
    assert solve_relaxation(model, method=method).status is LpStatus.INFEASIBLE


def test_relaxation_bound_overlay() -> None:
    model = _small_lp()
    result = solve_relaxation(model, lower=np.array([0.0, 0.0]), upper=np.array([0.0, 10.0]))
    assert result.objective == pytest.approx(2.0)
    crossed = solve_relaxation(model, lower=np.array([2.0, 0.0]), upper=np.array([1.0, 10.0]))
    assert crossed.status is LpStatus.INFEASIBLE


def test_simplex_agrees_with_highs() -> None:
    rng = np.random.default_rng(7)
    for _ in range(20):
        model = _random_lp(rng)
        highs = solve_relaxation(model, method=LpMethod.HIGHS)
        simplex = solve_relaxation(model, method=LpMethod.SIMPLEX)
        assert simplex.status is highs.status
        if highs.status is LpStatus.OPTIMAL:
            assert simplex.objective == pytest.approx(highs.objective, abs=1e-6)


@pytest.mark.parametrize('options', [
    SolveOptions(),
    SolveOptions(lp_method=LpMethod.SIMPLEX),
    SolveOptions(branching=BranchingRule.MOST_FRACTIONAL),
    SolveOptions(worker_count=3),
    SolveOptions(worker_count=3, deterministic=False),
])
def test_knapsack(options: SolveOptions) -> None:
    result = solve(_knapsack(), options)
    assert result.status is SolveStatus.OPTIMAL
    assert result.objective == pytest.approx(9.0)
    assert result.assignment == {'a': 1.0, 'b': 1.0, 'c': 0.0}
    assert result.stats.best_bound == pytest.approx(9.0)


def test_node_limit_stops_the_search() -> None:
    result = solve(_knapsack(), SolveOptions(node_limit=1))
    assert result.status is SolveStatus.LIMIT_REACHED
    assert result.stats.nodes == 1
    assert not result.has_solution


def test_infeasible_model() -> None:
    model = _knapsack()
    model.add_linear_constraint('need', [(0, 1.0), (1, 1.0), (2, 1.0)], ConstraintSense.GE, 3.0)
    result = solve(model)
    assert result.status is SolveStatus.INFEASIBLE
    assert result.objective is None


def test_degree_sequence_222_gives_the_triangle() -> None:
    model, registry = build(NetworkSpec(3, (DegreeSequence((2, 2, 2)),)))
    result = solve(model, registry=registry)
    assert result.status is SolveStatus.OPTIMAL
    assert result.objective == pytest.approx(0.0)
    assert result.graph == K3
    assert result.total_slack == pytest.approx(0.0)


def test_unrealizable_degree_sequence_needs_slack_two() -> None:
    model, registry = build(NetworkSpec(4, (DegreeSequence((3, 3, 1, 1)),)))
    result = solve(model, registry=registry)
    assert result.status is SolveStatus.OPTIMAL
    assert result.objective == pytest.approx(2.0)
    assert result.total_slack == pytest.approx(2.0)
    assert [entry.label for entry in result.slack_report] == ['1:degree_sequence']


def _random_linear_spec(rng: random.Random, n: int) -> NetworkSpec:
    degrees = tuple(sorted((rng.randint(0, n - 1) for _ in range(n)), reverse=True))
    lo = rng.randint(0, 10)
    triangles = MotifCount(MotifKind.TRIANGLE, (lo, rng.randint(lo, 10)))
    return NetworkSpec(n, (DegreeSequence(degrees), triangles))


@pytest.mark.slow
@pytest.mark.parametrize('seed', range(30))
def test_slack_total_equals_measured_deviation(seed: int) -> None:
    spec = _random_linear_spec(random.Random(seed), 5)
    model, registry = build(spec)
    result = solve(model, SolveOptions(time_limit_s=None), registry)
    assert result.status is SolveStatus.OPTIMAL
    verdict = check_spec(result.graph, spec)
    assert verdict.total_deviation == pytest.approx(result.total_slack, abs=1e-6)
    assert verdict.passed == (result.total_slack <= 1e-6)


def test_solves_are_deterministic() -> None:
    model, registry = build(NetworkSpec(4, (DegreeSequence((2, 2, 1, 1)),)))
    first = solve(model, registry=registry)
    second = solve(model, registry=registry)
    assert first.assignment == second.assignment
    assert first.stats.nodes == second.stats.nodes


def test_options_from_dict() -> None:
    options = SolveOptions.from_dict({'time_limit_s': 5, 'lp_method': 'simplex'})
    assert options.lp_method is LpMethod.SIMPLEX
    assert options.to_dict()['lp_method'] == 'simplex'
    with pytest.raises(ValueError):
        SolveOptions.from_dict({'threads': 2})
    with pytest.raises(ValueError):
        SolveOptions.from_dict({'branching': 'random'})
    with pytest.raises(ValueError):
        SolveOptions(worker_count=0)
