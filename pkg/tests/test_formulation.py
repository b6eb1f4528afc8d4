from __future__ import annotations

import json
from pathlib import Path

import pytest

from config import BranchPriority
from formulation import (
    AdnByDegree,
    ClosenessSequence,
    DegreeBounds,
    DegreeSequence,
    Diameter,
    FormulationBuilder,
    MotifCount,
    MotifKind,
    NetworkSpec,
    NonNull,
    Objective,
    ObjectiveMode,
    PathFlows,
    PropertyName,
    SecondaryCriterion,
    SpecError,
    StatisticKind,
    SymmetryConfig,
    SymmetryMode,
    add_symmetry_breaking,
    build,
    encode_degree_classes,
    encode_degrees,
    encode_path_statistics,
    encode_sequence_assignment,
    encode_shortest_paths,
    encode_statistics,
    load_spec,
    parse_spec,
    spec_to_dict,
    validate_spec,
)
from graphs import Graph
from milp import ConstraintSense, LinExpr, ObjectiveSense, VariableKind
from solver import SolveOptions, SolveStatus, solve

STAR = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
PATH4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])

SPEC_DOC = {
    'version': 1,
    'n': 5,
    'constraints': [
        {'kind': 'degree_bounds', 'lower': 1, 'upper': 3},
        {'kind': 'avg_cc', 'band': [0.2, 0.6]},
        {'kind': 'diameter', 'band': [2, 3]},
        {'kind': 'adn_by_degree', 'bands': {'2': [1.5, 3.0], '1': [2, 3]}},
        {'kind': 'motif_count', 'motif': 'triangle', 'band': [1, 2]},
        {'kind': 'non_null'},
    ],
    'objective': {'mode': 'min_slack'},
    'symmetry': {'mode': 'primary_secondary', 'secondary': 'sdn'},
    'motif_mode': 'aggregated',
    'epsilon': 0.05,
    'path_flows': 'binary',
    'solver': {'time_limit_s': 60, 'worker_count': 2},
}


def _fix_graph(builder: FormulationBuilder, graph: Graph) -> None:
    for i, j in builder.pairs():
        builder.constrain(f'fix_{i}_{j}', builder.x(i, j), ConstraintSense.EQ,
                          1.0 if graph.has_edge(i, j) else 0.0)


def _range(builder: FormulationBuilder, expr: LinExpr) -> tuple[float, float]:
    """Smallest and largest value of an expression over the builder's model."""
    extremes = []
    for sense in (ObjectiveSense.MINIMIZE, ObjectiveSense.MAXIMIZE):
        model = builder.model.copy()
        model.set_objective(sense, list(expr.terms.items()))
        result = solve(model, SolveOptions(time_limit_s=None))
        assert result.status is SolveStatus.OPTIMAL
        extremes.append(result.objective + expr.constant)
    return extremes[0], extremes[1]


def _values(builder: FormulationBuilder) -> dict[str, float]:
    result = solve(builder.model.copy(), SolveOptions(time_limit_s=None))
    assert result.status is SolveStatus.OPTIMAL
    return result.assignment


# Spec files

def test_spec_document_round_trips() -> None:
    spec, solver = parse_spec(SPEC_DOC)
    assert spec.n == 5
    assert spec.constraints[3] == AdnByDegree(((1, (2.0, 3.0)), (2, (1.5, 3.0))))
    assert solver == {'time_limit_s': 60, 'worker_count': 2}
    again, solver_again = parse_spec(json.loads(json.dumps(spec_to_dict(spec, solver))))
    assert again == spec
    assert solver_again == solver


@pytest.mark.parametrize('change', [
    {'colour': 'blue'},
    {'version': 2},
    {'n': 4.5},
    {'constraints': [{'kind': 'avg_cc', 'band': [0, 1], 'weight': 2}]},
    {'constraints': [{'kind': 'motif_count', 'motif': 'pentagon', 'band': [0, 1]}]},
    {'constraints': [{'kind': 'girth', 'band': [3, 4]}]},
    {'objective': {'mode': 'maximize', 'property': 'edges'}},
    {'symmetry': {'mode': 'primary', 'order': 'sdn'}},
])
def test_parse_spec_rejects_malformed_documents(change: dict) -> None:
    doc = {**SPEC_DOC, **change}
    with pytest.raises(SpecError):
        parse_spec(doc)


def test_load_spec(tmp_path: Path) -> None:
    missing, message = load_spec(str(tmp_path / 'absent.json'))
    assert missing is None
    assert 'No such file' in message

    broken = tmp_path / 'broken.json'
    broken.write_text('{"n": ')
    loaded, message = load_spec(str(broken))
    assert loaded is None
    assert 'Malformed JSON' in message

    good = tmp_path / 'good.json'
    good.write_text(json.dumps(SPEC_DOC))
    loaded, _ = load_spec(str(good))
    assert loaded is not None
    assert loaded[0].motif_mode.value == 'aggregated'


# Validation

def test_validate_spec_collects_every_error() -> None:
    spec = NetworkSpec(4, (
        DegreeSequence((1, 2, 1, 0)),
        Diameter((3, 2)),
        ClosenessSequence(((0.2, 0.5),)),
        MotifCount(MotifKind.CLIQUE4, (0, 3)),
    ), objective=Objective(ObjectiveMode.MIN_SLACK, PropertyName.APL),
        symmetry=SymmetryConfig(SymmetryMode.PRIMARY_SECONDARY))
    errors = validate_spec(spec)
    joined = '\n'.join(errors)
    assert 'non-increasing' in joined
    assert 'inverted' in joined
    assert '1 bands for 4 nodes' in joined
    assert '2:diameter' in joined
    assert 'min_slack objective takes no property' in joined
    assert 'needs a secondary criterion' in joined
    assert len(errors) >= 6


def test_validate_spec_checks_epsilon_against_tolerance() -> None:
    spec = NetworkSpec(4, (NonNull(),), epsilon=1e-6)
    assert validate_spec(spec) == []
    assert validate_spec(spec, feasibility_tol=1e-6)


def test_labelled_degree_bounds_need_symmetry_off() -> None:
    labelled = DegreeBounds(2, 3, (1, 2))
    assert validate_spec(NetworkSpec(4, (labelled,)))
    off = SymmetryConfig(SymmetryMode.NONE)
    assert validate_spec(NetworkSpec(4, (labelled,), symmetry=off)) == []


# Model assembly

def test_build_names_rows_and_slacks_after_the_spec() -> None:
    model, registry = build(NetworkSpec(3, (DegreeSequence((2, 2, 2)),)))
    assert model.frozen
    for name in ('x_1_2', 'x_2_3', 'pd_1', 'sd_minus_1', 'sd_plus_3'):
        assert model.has_variable(name)
    rows = {c.name for c in model.constraints}
    assert {'pd_def_1', 'spec1_deg_1_eq', 'spec1_deg_3_eq'} <= rows
    # a fixed degree sequence already orders the nodes
    assert not any(name.startswith('sym_') for name in rows)

    assert [g.label for g in registry.slack_groups] == ['1:degree_sequence']
    assert sorted(var_id for var_id, _ in model.objective.terms) == sorted(registry.slack_ids())
    assert model.objective.sense is ObjectiveSense.MINIMIZE
    assert model.variables[model.variable_id('sd_minus_1')].upper == 2.0
    assert model.variables[model.variable_id('sd_plus_1')].upper == 0.0


def test_build_extremum_objective_pins_slacks() -> None:
    spec = NetworkSpec(4, (Diameter((2, 3)),),
                       objective=Objective(ObjectiveMode.MAXIMIZE, PropertyName.EDGE_COUNT))
    model, registry = build(spec)
    assert model.objective.sense is ObjectiveSense.MAXIMIZE
    assert len(model.objective.terms) == 6
    assert all(model.variables[var_id].upper == 0.0 for var_id in registry.slack_ids())
    assert {'sym_deg_1', 'sym_deg_3'} <= {c.name for c in model.constraints}


def test_build_rejects_invalid_specs() -> None:
    with pytest.raises(SpecError):
        build(NetworkSpec(3, (DegreeSequence((1, 2, 1)),)))


def test_symmetry_row_counts() -> None:
    secondary = SymmetryConfig(SymmetryMode.PRIMARY_SECONDARY, SecondaryCriterion.SDN)

    fixed = FormulationBuilder(4, fixed_degrees=(2, 2, 1, 1))
    assert add_symmetry_breaking(fixed, SymmetryConfig()) == 0
    assert add_symmetry_breaking(fixed, secondary) == 2

    free = FormulationBuilder(4)
    assert add_symmetry_breaking(free, SymmetryConfig(SymmetryMode.NONE)) == 0
    assert add_symmetry_breaking(free, secondary) == 6

    forced = FormulationBuilder(4)
    assert add_symmetry_breaking(forced, SymmetryConfig(SymmetryMode.NONE), force_degree_order=True) == 3


# Property encoders on a fixed graph

def test_path_statistics_match_the_path_graph() -> None:
    builder = FormulationBuilder(4)
    encode_shortest_paths(builder)
    handles = encode_path_statistics(builder, ['apl', 'cpl', 'closeness', 'diameter'])
    _fix_graph(builder, PATH4)

    low, high = _range(builder, LinExpr.var(handles.papl))
    assert low == pytest.approx(10 / 6) and high == pytest.approx(10 / 6)
    assert _range(builder, LinExpr.var(handles.pdiam)) == pytest.approx((3.0, 3.0))
    assert _range(builder, LinExpr.var(handles.piclc[1])) == pytest.approx((2.0, 2.0))
    # distances 1, 1, 1, 2, 2, 3: every value between the middle two is a median
    assert _range(builder, LinExpr.var(handles.pcpl)) == pytest.approx((1.0, 2.0))


def test_path_statistics_need_every_distance() -> None:
    builder = FormulationBuilder(4)
    with pytest.raises(SpecError):
        encode_path_statistics(builder, ['apl'])
    encode_shortest_paths(builder)
    with pytest.raises(SpecError):
        encode_path_statistics(builder, ['girth'])


def test_degree_classes_on_a_star() -> None:
    builder = FormulationBuilder(4)
    encode_degree_classes(builder, 0, 3, 0.01)
    _fix_graph(builder, STAR)
    values = _values(builder)
    expected = {
        'z_2_1': 1, 'z_3_1': 1, 'z_2_2': 0, 'z_1_2': 1,
        'pnnd_0': 0, 'pnnd_1': 3, 'pnnd_2': 0, 'pnnd_3': 1,
        'psdn_1': 3, 'psdn_2': 3,
        'psdnq_3_1': 3, 'psdnq_1_1': 0, 'psdnq_1_2': 3, 'psdnq_3_2': 0,
    }
    for name, value in expected.items():
        assert values[name] == pytest.approx(value, abs=1e-6), name


def test_degree_classes_must_cover_the_degree_range() -> None:
    with pytest.raises(SpecError):
        encode_degree_classes(FormulationBuilder(4), 1, 3, 0.01)
    with pytest.raises(SpecError):
        encode_degree_classes(FormulationBuilder(4), 0, 3, 1.5)


@pytest.mark.parametrize('bands, feasible', [
    ([(3, 3), (1, 1), (1, 1), (1, 1)], True),
    ([(1, 1), (1, 1), (3, 3), (0, 1)], True),
    ([(2, 3), (2, 3), (1, 1), (1, 1)], False),
    ([(3, 3)], True),
    ([(2, 2)], False),
])
def test_sequence_assignment_needs_a_matching(bands, feasible: bool) -> None:
    builder = FormulationBuilder(4)
    pd = encode_degrees(builder)
    values = [LinExpr.var(pd[i]) for i in builder.nodes]
    encode_sequence_assignment(builder, 'deg', values, [(0, 3)] * 4, bands)
    _fix_graph(builder, STAR)
    result = solve(builder.model.copy(), SolveOptions(time_limit_s=None))
    assert (result.status is SolveStatus.OPTIMAL) is feasible


def _constants(values: list[float]) -> list[tuple[LinExpr, float, float]]:
    return [(LinExpr(constant=v), v, v) for v in values]


def test_median_statistic() -> None:
    odd = FormulationBuilder(3)
    handles = encode_statistics(odd, 'odd', _constants([1.0, 2.0, 3.0]), which=StatisticKind.MEDIAN)
    assert _range(odd, LinExpr.var(handles.median)) == pytest.approx((2.0, 2.0))

    even = FormulationBuilder(4)
    handles = encode_statistics(even, 'even', _constants([1.0, 2.0, 3.0, 4.0]), which=StatisticKind.MEDIAN)
    assert _range(even, LinExpr.var(handles.median)) == pytest.approx((2.0, 3.0))

    gated = FormulationBuilder(4)
    gates = [LinExpr(constant=g) for g in (1.0, 1.0, 0.0, 1.0)]
    handles = encode_statistics(gated, 'gated', _constants([1.0, 2.0, 3.0, 4.0]), gates,
                                StatisticKind.MEDIAN)
    assert _range(gated, LinExpr.var(handles.median)) == pytest.approx((2.0, 2.0))


def test_sum_statistic_over_a_gated_subset() -> None:
    builder = FormulationBuilder(4)
    gates = [LinExpr(constant=g) for g in (1.0, 0.0, 1.0, 1.0)]
    handles = encode_statistics(builder, 'total', _constants([1.0, 2.0, 3.0, 4.0]), gates)
    assert _range(builder, handles.total) == pytest.approx((8.0, 8.0))


def test_statistics_reject_empty_candidates() -> None:
    with pytest.raises(SpecError):
        encode_statistics(FormulationBuilder(3), 'none', [])


@pytest.mark.parametrize('path_flows, kind', [
    (PathFlows.CONTINUOUS, VariableKind.CONTINUOUS),
    (PathFlows.BINARY, VariableKind.BINARY),
])
def test_flow_variable_domain(path_flows: PathFlows, kind: VariableKind) -> None:
    model, _ = build(NetworkSpec(4, (Diameter((1, 3)),), path_flows=path_flows))
    flows = [v for v in model.variables if v.name.startswith('f_')]
    assert flows
    assert all(v.kind is kind for v in flows)
    assert all(v.branch_priority == BranchPriority.FLOW for v in flows)
    assert all((v.lower, v.upper) == (0.0, 1.0) for v in flows)
