"""Triangle counts and clustering coefficients."""

import logging
from math import comb
from typing import Optional

from milp import ConstraintSense, LinExpr

from .builder import FormulationBuilder
from .encode_degree_classes import class_gate, encode_degree_classes
from .encode_motif import encode_motif, motif_instances
from .encode_statistics import gated_copy
from .models import ClusteringHandles, MotifKind, SpecError

logger = logging.getLogger(__name__)


def _encode_two_paths(builder: FormulationBuilder, handles: ClusteringHandles) -> None:
    two_paths = {}
    for nodes in motif_instances(MotifKind.TWO_PATH, builder.n):
        two_paths[nodes] = encode_motif(builder, MotifKind.TWO_PATH, nodes)
    pntp = {}
    top = comb(builder.degree_range[1], 2)
    for i in builder.nodes:
        pntp[i] = builder.variable(('pntp', i), lower=0.0, upper=top)
        centred = LinExpr.sum(LinExpr.var(y) for nodes, y in two_paths.items() if nodes[0] == i)
        builder.constrain(f'pntp_def_{i}', LinExpr.var(pntp[i]) - centred, ConstraintSense.EQ, 0.0)
    handles.two_paths = two_paths
    handles.pntp = pntp


def encode_clustering(builder: FormulationBuilder, fixed_degrees: Optional[tuple[int, ...]] = None,
                      two_paths: bool = False) -> ClusteringHandles:
    """Encode per-node triangle counts, local and average clustering.

    With a fixed degree sequence the number of two-paths centred on node i
    is the constant C(d_i, 2), so pcc_i and the global coefficient pgcc are
    linear. Without one, pcc_i sums the triangle count gated by each degree
    class q and scaled by 1 / C(q, 2); the global coefficient is then only
    available in cross-multiplied form through the two-path counts.

    Args:
        builder: Model under construction
        fixed_degrees: Degree sequence for the fixed form, smallest degree >= 2
        two_paths: Also add two-path indicators and per-node counts pntp

    Returns:
        ClusteringHandles
    """
    handles = builder.handles.get('clustering')
    if handles is not None:
        if two_paths and handles.two_paths is None:
            _encode_two_paths(builder, handles)
        return handles

    n = builder.n
    if fixed_degrees is not None:
        if len(fixed_degrees) != n:
            raise SpecError(f'Degree sequence has {len(fixed_degrees)} entries for {n} nodes')
        if min(fixed_degrees) < 2:
            raise SpecError('Fixed-form clustering needs every specified degree >= 2')

    triangles = {nodes: encode_motif(builder, MotifKind.TRIANGLE, nodes)
                 for nodes in motif_instances(MotifKind.TRIANGLE, n)}
    pntr = {}
    triangle_top = comb(builder.degree_range[1], 2)
    for i in builder.nodes:
        pntr[i] = builder.variable(('pntr', i), lower=0.0, upper=triangle_top)
        closed = LinExpr.sum(LinExpr.var(y) for nodes, y in triangles.items() if i in nodes)
        builder.constrain(f'pntr_def_{i}', LinExpr.var(pntr[i]) - closed, ConstraintSense.EQ, 0.0)

    pcc = {}
    pgcc = None
    if fixed_degrees is not None:
        for i in builder.nodes:
            pairs = comb(fixed_degrees[i - 1], 2)
            pcc[i] = builder.variable(('pcc', i), lower=0.0, upper=triangle_top / pairs)
            builder.constrain(f'pcc_def_{i}', LinExpr.var(pcc[i]) - LinExpr.var(pntr[i], 1.0 / pairs),
                              ConstraintSense.EQ, 0.0)
        pacc_top = sum(builder.bounds(pcc[i])[1] for i in builder.nodes) / n
        pacc = builder.variable(('pacc',), lower=0.0, upper=pacc_top)
        denominator = sum(comb(d, 2) for d in fixed_degrees)
        pgcc = builder.variable(('pgcc',), lower=0.0, upper=3.0 * comb(n, 3) / denominator)
        total = LinExpr.sum(LinExpr.var(y, 3.0 / denominator) for y in triangles.values())
        builder.constrain('pgcc_def', LinExpr.var(pgcc) - total, ConstraintSense.EQ, 0.0)
    else:
        d_lower, d_upper = builder.degree_range
        classes = encode_degree_classes(builder, d_lower, d_upper, builder.epsilon,
                                        neighbor_sums=False)
        for i in builder.nodes:
            scaled = LinExpr()
            for q in range(max(2, d_lower), d_upper + 1):
                copy = gated_copy(builder, ('pntrq', q, i), LinExpr.var(pntr[i]), 0.0, triangle_top,
                                  [class_gate(classes, q, i)])
                scaled = scaled + LinExpr.var(copy, 1.0 / comb(q, 2))
            pcc[i] = builder.variable(('pcc', i), lower=0.0, upper=1.0)
            builder.constrain(f'pcc_def_{i}', LinExpr.var(pcc[i]) - scaled, ConstraintSense.EQ, 0.0)
        pacc = builder.variable(('pacc',), lower=0.0, upper=1.0)

    average = LinExpr.sum(LinExpr.var(pcc[i], 1.0 / n) for i in builder.nodes)
    builder.constrain('pacc_def', LinExpr.var(pacc) - average, ConstraintSense.EQ, 0.0)

    handles = ClusteringHandles(triangles, pntr, pcc, pacc, pgcc)
    builder.handles['clustering'] = handles
    if two_paths:
        _encode_two_paths(builder, handles)
    logger.debug('Clustering encoded (%s form)', 'fixed' if fixed_degrees else 'class-gated')
    return handles
