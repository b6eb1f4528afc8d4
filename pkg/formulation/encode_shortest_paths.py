"""Shortest-path distances through LP strong duality."""

import logging
from typing import Iterable, Optional

from config import BranchPriority
from milp import ConstraintSense, LinExpr, VariableKind

from .builder import FormulationBuilder
from .encode_edges import encode_edges
from .models import PathFlows, SpecError

logger = logging.getLogger(__name__)


def _encode_pair(builder: FormulationBuilder, i: int, j: int) -> int:
    n = builder.n
    big_m = n - 2
    nodes = list(builder.nodes)
    arcs = [(k, l) for k in nodes for l in nodes if k != l]
    flow_kind = VariableKind.BINARY if builder.path_flows is PathFlows.BINARY else VariableKind.CONTINUOUS
    prefix = f'sp_{i}_{j}'

    flow = {(k, l): builder.variable(('f', i, j, k, l), flow_kind, 0, 1, BranchPriority.FLOW)
            for k, l in arcs}
    potential = {k: builder.variable(('t', i, j, k), lower=0.0, upper=0.0 if k == j else n - 1)
                 for k in nodes}
    u = {}
    v = {}
    for k, l in builder.pairs():
        u[(k, l)] = builder.variable(('u', i, j, k, l), lower=-big_m, upper=0.0)
        v[(k, l)] = builder.variable(('v', i, j, k, l), lower=-big_m, upper=0.0)
    w = builder.variable(('w', i, j), lower=1.0, upper=n - 1)

    for k, l in builder.pairs():
        both = LinExpr.var(flow[(k, l)]) + LinExpr.var(flow[(l, k)])
        builder.constrain(f'{prefix}_cap_{k}_{l}', both - builder.x(k, l), ConstraintSense.LE, 0.0)
        for a, b in ((k, l), (l, k)):
            dual = LinExpr.var(v[(k, l)]) + LinExpr.var(potential[a]) - LinExpr.var(potential[b])
            builder.constrain(f'{prefix}_dual_{a}_{b}', dual, ConstraintSense.LE, 1.0)
        link = LinExpr.var(u[(k, l)]) - LinExpr.var(v[(k, l)]) + builder.x(k, l) * big_m
        builder.constrain(f'{prefix}_link_{k}_{l}', link, ConstraintSense.LE, big_m)

    for k in nodes:
        out_flow = LinExpr.sum(LinExpr.var(flow[(k, l)]) for l in nodes if l != k)
        in_flow = LinExpr.sum(LinExpr.var(flow[(l, k)]) for l in nodes if l != k)
        supply = 1.0 if k == i else (-1.0 if k == j else 0.0)
        builder.constrain(f'{prefix}_flow_{k}', out_flow - in_flow, ConstraintSense.EQ, supply)

    length = LinExpr.sum(LinExpr.var(f) for f in flow.values())
    builder.constrain(f'{prefix}_primal', LinExpr.var(w) - length, ConstraintSense.EQ, 0.0)
    dual_value = (LinExpr.sum(LinExpr.var(c) for c in u.values())
                  + LinExpr.var(potential[i]) - LinExpr.var(potential[j]))
    builder.constrain(f'{prefix}_dual', LinExpr.var(w) - dual_value, ConstraintSense.EQ, 0.0)
    return w


def encode_shortest_paths(builder: FormulationBuilder,
                          pairs: Optional[Iterable[tuple[int, int]]] = None) -> dict[tuple[int, int], int]:
    """Add w[i, j], the shortest-path distance between i and j, for each pair.

    The unit-length path LP from i to j (flows f, capacity x on each edge)
    and its dual (node potentials t, edge multipliers u and v) are both
    written out; equating both objectives with w makes w the exact
    distance. Disconnected pairs leave the primal without a solution.

    Args:
        builder: Model under construction
        pairs: Node pairs, default every unordered pair

    Returns:
        Map from (i, j), i < j, to the distance variable id of every pair
        encoded so far
    """
    encode_edges(builder)
    distances = builder.handles.setdefault('w', {})
    requested = builder.pairs() if pairs is None else list(pairs)
    added = 0
    for i, j in requested:
        if i == j:
            raise SpecError(f'Shortest path from node {i} to itself')
        if not (1 <= i <= builder.n and 1 <= j <= builder.n):
            raise SpecError(f'Pair ({i}, {j}) out of range')
        i, j = min(i, j), max(i, j)
        if (i, j) not in distances:
            distances[(i, j)] = _encode_pair(builder, i, j)
            added += 1
    if added:
        logger.debug('Shortest paths encoded for %d pairs', added)
    return distances
