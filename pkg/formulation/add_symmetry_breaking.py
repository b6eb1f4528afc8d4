"""Node-ordering constraints that remove relabelled copies of a graph."""

import logging

from milp import ConstraintSense, LinExpr

from .builder import FormulationBuilder
from .encode_clustering import encode_clustering
from .encode_degree_classes import encode_neighbor_degree_sums
from .encode_degrees import encode_degrees
from .encode_path_statistics import encode_path_statistics
from .models import SecondaryCriterion, SpecError, SymmetryConfig, SymmetryMode

logger = logging.getLogger(__name__)


def _secondary_values(builder: FormulationBuilder, criterion: SecondaryCriterion
                      ) -> tuple[dict[int, LinExpr], float, bool]:
    """Tie-break values per node, their big-M and whether the order is reversed."""
    n = builder.n
    if criterion is SecondaryCriterion.LOCAL_CC:
        fixed = builder.fixed_degrees
        if 'clustering' not in builder.handles and fixed is not None and min(fixed) < 2:
            fixed = None
        handles = encode_clustering(builder, fixed)
        return {i: LinExpr.var(handles.pcc[i]) for i in builder.nodes}, 1.0, False

    if criterion is SecondaryCriterion.SDN:
        psdn = encode_neighbor_degree_sums(builder)
        d_upper = builder.degree_range[1]
        return {i: LinExpr.var(psdn[i]) for i in builder.nodes}, float(d_upper * d_upper), False

    distances = builder.handles.get('w', {})
    if any(pair not in distances for pair in builder.pairs()):
        raise SpecError(f'Secondary criterion {criterion.value} needs shortest paths')
    if criterion is SecondaryCriterion.DIST_TO_LAST:
        values = {i: LinExpr.var(distances[(i, n)]) for i in range(1, n)}
        return values, float(n - 2), False
    handles = encode_path_statistics(builder, ['closeness'])
    return {i: LinExpr.var(handles.piclc[i]) for i in builder.nodes}, n / 2 - 1, True


def add_symmetry_breaking(builder: FormulationBuilder, config: SymmetryConfig,
                          force_degree_order: bool = False) -> int:
    """Order nodes by non-increasing degree, then break ties by a second property.

    With a fixed degree sequence the degree order is already implied, so
    only tie-breaking rows over runs of equal specified degrees are added.

    Args:
        builder: Model under construction
        config: Symmetry-breaking mode and secondary criterion
        force_degree_order: Add the degree order even when the mode is NONE

    Returns:
        Number of rows added
    """
    fixed = builder.fixed_degrees
    added = 0
    if config.mode is SymmetryMode.NONE and not force_degree_order:
        return added

    pd = encode_degrees(builder)
    runs_only = fixed is not None and not force_degree_order
    if not runs_only:
        for i in range(1, builder.n):
            builder.constrain(f'sym_deg_{i}', LinExpr.var(pd[i]) - LinExpr.var(pd[i + 1]),
                              ConstraintSense.GE, 0.0)
            added += 1

    if config.mode is not SymmetryMode.PRIMARY_SECONDARY:
        return added
    if config.secondary is None:
        raise SpecError('primary_secondary symmetry needs a secondary criterion')

    values, big_m, reverse = _secondary_values(builder, config.secondary)
    for i in range(1, builder.n):
        if i not in values or i + 1 not in values:
            continue
        step = values[i] - values[i + 1]
        if reverse:
            step = -step
        if runs_only:
            if fixed[i - 1] != fixed[i]:
                continue
            row = step
        else:
            row = step + (LinExpr.var(pd[i]) - LinExpr.var(pd[i + 1])) * big_m
        builder.constrain(f'sym_{config.secondary.value}_{i}', row, ConstraintSense.GE, 0.0)
        added += 1
    logger.debug('Symmetry breaking added %d rows', added)
    return added
