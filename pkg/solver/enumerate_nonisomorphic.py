"""Enumerate non-isomorphic zero-slack graphs with no-good cuts."""

import itertools
import logging
import time
from dataclasses import replace
from typing import Optional

from config import FormulationConfig, SolverConfig
from formulation.models import VariableRegistry
from graphs import Graph, canonical_key
from milp import ConstraintSense, MilpModel, ObjectiveSense

from ._utils import node_count
from .models import EnumerationResult, EnumerationStatus, SolveOptions, SolveStatus
from .solve import solve

logger = logging.getLogger(__name__)


def _is_min_slack(model: MilpModel, registry: VariableRegistry) -> bool:
    objective = model.objective
    return (objective.sense is ObjectiveSense.MINIMIZE
            and sorted(var_id for var_id, _ in objective.terms) == sorted(registry.slack_ids())
            and all(coef == 1.0 for _, coef in objective.terms))


def _labelings(graph: Graph) -> set[frozenset[tuple[int, int]]]:
    """Every distinct edge set isomorphic to the graph."""
    nodes = range(1, graph.n + 1)
    found = set()
    for perm in itertools.permutations(nodes):
        mapping = dict(zip(nodes, perm))
        found.add(graph.relabel(mapping).edges)
    return found


def _add_cut(model: MilpModel, edge_ids: dict[tuple[int, int], int],
             edges: frozenset[tuple[int, int]], name: str) -> None:
    # sum over absent edges of x + sum over present edges of (1 - x) >= 1
    terms = [(var_id, -1.0 if pair in edges else 1.0) for pair, var_id in edge_ids.items()]
    model.add_linear_constraint(name, terms, ConstraintSense.GE, 1.0 - len(edges))


def enumerate_nonisomorphic(model: MilpModel, registry: VariableRegistry, k: int,
                            options: Optional[SolveOptions] = None) -> EnumerationResult:
    """Collect up to k pairwise non-isomorphic graphs meeting every band.

    Each zero-slack solution is cut off with a no-good row on the edge
    variables. For small n every relabeling of the graph is cut at once so
    the next solve cannot return an isomorphic copy; larger graphs are cut
    one labeling at a time and duplicates are dropped by canonical key.

    Args:
        model: Model with a min-slack objective; left unchanged
        registry: Registry of the model
        k: Number of graphs wanted
        options: Solver settings; the time limit covers the whole enumeration

    Returns:
        EnumerationResult
    """
    if not _is_min_slack(model, registry):
        raise ValueError('Enumeration needs a model with a min-slack objective')
    if k < 1:
        raise ValueError('k must be at least 1')
    n = node_count(registry)
    if n > FormulationConfig.CANONICAL_MAX_N:
        raise ValueError(f'Enumeration supports n <= {FormulationConfig.CANONICAL_MAX_N}, got {n}')
    options = options or SolveOptions()
    start = time.monotonic()
    work = model.copy()
    edge_ids = registry.edge_ids()
    orbit_cuts = n <= SolverConfig.ENUMERATION_ORBIT_MAX_N

    graphs: list[Graph] = []
    seen: set[bytes] = set()
    solves = duplicates = cuts = 0
    status = EnumerationStatus.COMPLETE
    message = ''
    while len(graphs) < k:
        round_options = options
        if options.time_limit_s is not None:
            remaining = options.time_limit_s - (time.monotonic() - start)
            if remaining <= 0:
                status, message = EnumerationStatus.LIMIT, 'Time limit reached'
                break
            round_options = replace(options, time_limit_s=remaining)

        result = solve(work, round_options, registry)
        solves += 1
        if result.status is SolveStatus.LIMIT_REACHED:
            status, message = EnumerationStatus.LIMIT, result.message
            break
        if result.status is SolveStatus.INFEASIBLE:
            status = EnumerationStatus.EXHAUSTED
            message = 'No further admissible graphs'
            break
        if result.objective > options.feasibility_tol:
            if solves == 1:
                status = EnumerationStatus.UNATTAINABLE
                message = f'Spec unattainable: optimal slack {result.objective:.6g}'
            else:
                status = EnumerationStatus.EXHAUSTED
                message = 'No further zero-slack graphs'
            break

        graph = result.graph
        key = canonical_key(graph)
        if key in seen:
            duplicates += 1
        else:
            seen.add(key)
            graphs.append(graph)
            logger.info('Graph %d found with %d edges', len(graphs), len(graph.edges))
        labelings = _labelings(graph) if orbit_cuts else {graph.edges}
        for edges in sorted(labelings, key=sorted):
            cuts += 1
            _add_cut(work, edge_ids, edges, f'nogood_{cuts}')

    if status is EnumerationStatus.COMPLETE:
        message = f'Found {len(graphs)} graphs'
    wall_time = time.monotonic() - start
    logger.info('Enumeration %s after %d solves: %s', status.value, solves, message)
    return EnumerationResult(status, graphs, solves, duplicates, wall_time, message)
