from __future__ import annotations

import networkx as nx
import pytest

from formulation import FormulationBuilder, encode_shortest_paths
from graphs import Graph
from milp import ObjectiveSense
from solver import LpMethod, LpStatus, solve_relaxation
from solver._utils import assemble


def _distance_range(graph: Graph, sense: ObjectiveSense, method: LpMethod = LpMethod.HIGHS):
    """Optimize the total encoded distance with the edge variables pinned to the graph."""
    builder = FormulationBuilder(graph.n)
    distances = encode_shortest_paths(builder)
    model = builder.model
    model.set_objective(sense, [(w, 1.0) for w in distances.values()])
    arrays = assemble(model)
    lower = arrays.lower.copy()
    upper = arrays.upper.copy()
    for pair, var_id in builder.handles['x'].items():
        lower[var_id] = upper[var_id] = 1.0 if pair in graph.edges else 0.0
    return distances, solve_relaxation(model, lower, upper, method, arrays)


def _assert_exact(graph: Graph, method: LpMethod = LpMethod.HIGHS) -> None:
    expected = dict(nx.all_pairs_shortest_path_length(graph.to_networkx()))
    for sense in (ObjectiveSense.MINIMIZE, ObjectiveSense.MAXIMIZE):
        distances, result = _distance_range(graph, sense, method)
        assert result.status is LpStatus.OPTIMAL
        for (i, j), var_id in distances.items():
            assert result.values[var_id] == pytest.approx(expected[i][j], abs=1e-6), (i, j)


def test_distances_on_a_path() -> None:
    _assert_exact(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)]))


def test_distances_with_the_simplex_engine() -> None:
    _assert_exact(Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)]), LpMethod.SIMPLEX)


def test_disconnected_graph_has_no_solution() -> None:
    graph = Graph.from_edges(4, [(1, 2), (3, 4)])
    _, result = _distance_range(graph, ObjectiveSense.MINIMIZE)
    assert result.status is LpStatus.INFEASIBLE


def test_encoder_is_idempotent_per_pair() -> None:
    builder = FormulationBuilder(4)
    first = encode_shortest_paths(builder, [(1, 3)])
    count = builder.model.num_variables
    again = encode_shortest_paths(builder, [(3, 1)])
    assert again == first
    assert builder.model.num_variables == count


@pytest.mark.slow
def test_distances_on_random_connected_graphs() -> None:
    checked = 0
    seed = 0
    while checked < 100:
        sample = nx.gnp_random_graph(5, 0.5, seed=seed)
        seed += 1
        if not nx.is_connected(sample):
            continue
        graph = Graph.from_edges(5, ((i + 1, j + 1) for i, j in sample.edges()))
        _assert_exact(graph)
        checked += 1
