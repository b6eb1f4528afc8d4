"""Relaxed rows for one property constraint."""

import logging
from math import comb
from typing import Optional

from config import BranchPriority
from milp import ConstraintSense, LinExpr, VariableKind

from .builder import FormulationBuilder
from .encode_clustering import encode_clustering
from .encode_degree_classes import encode_degree_classes
from .encode_degrees import encode_degrees
from .encode_edges import encode_edges
from .encode_motif import MOTIF_PREFIX, encode_motif, motif_instances
from .encode_path_statistics import encode_path_statistics
from .encode_sequence_assignment import encode_sequence_assignment
from .encode_shortest_paths import encode_shortest_paths
from .models import (
    AdnByDegree,
    AveragePathLength,
    AvgClustering,
    Band,
    CharacteristicPathLength,
    ClosenessSequence,
    DegreeBounds,
    DegreeSequence,
    Diameter,
    GlobalClustering,
    MinDegreeSpan,
    MotifCount,
    NonNull,
    PropertyConstraint,
    SpecError,
    constraint_label,
)

logger = logging.getLogger(__name__)


def _band_rows(builder: FormulationBuilder, name: str, expr: LinExpr, band: Band,
               slack_base: str, index: tuple = ()) -> tuple[int, int]:
    """lo <= expr + s- - s+ <= hi with slacks bounded by the largest violation."""
    lo, hi = band
    low, high = builder.expr_bounds(expr)
    minus, plus = builder.slack_pair(slack_base, index, lo - low, high - hi)
    relaxed = expr + LinExpr.var(minus) - LinExpr.var(plus)
    if lo == hi:
        builder.constrain(f'{name}_eq', relaxed, ConstraintSense.EQ, lo)
    else:
        builder.constrain(f'{name}_lo', relaxed, ConstraintSense.GE, lo)
        builder.constrain(f'{name}_hi', relaxed, ConstraintSense.LE, hi)
    return minus, plus


def _fraction_rows(builder: FormulationBuilder, name: str, numerator: LinExpr,
                   denominator: LinExpr, band: Band, slack_base: str,
                   index: tuple = ()) -> tuple[int, int]:
    """lo * den <= num + s- - s+ <= hi * den, the cross-multiplied band on num / den."""
    lo, hi = band
    shortfall = builder.expr_bounds(denominator * lo - numerator)[1]
    excess = builder.expr_bounds(numerator - denominator * hi)[1]
    minus, plus = builder.slack_pair(slack_base, index, shortfall, excess)
    relaxed = numerator + LinExpr.var(minus) - LinExpr.var(plus)
    builder.constrain(f'{name}_lo', relaxed - denominator * lo, ConstraintSense.GE, 0.0)
    builder.constrain(f'{name}_hi', relaxed - denominator * hi, ConstraintSense.LE, 0.0)
    return minus, plus


def _degree_bounds(builder, constraint: DegreeBounds, prefix: str, suffix: str):
    pd = encode_degrees(builder)
    nodes = constraint.nodes or tuple(builder.nodes)
    band = (constraint.lower, constraint.upper)
    return [_band_rows(builder, f'{prefix}_deg_{i}', LinExpr.var(pd[i]), band, 'sdb' + suffix, (i,))
            for i in nodes]


def _degree_sequence(builder, constraint: DegreeSequence, prefix: str, suffix: str):
    pd = encode_degrees(builder)
    return [_band_rows(builder, f'{prefix}_deg_{i}', LinExpr.var(pd[i]), (d, d), 'sd' + suffix, (i,))
            for i, d in enumerate(constraint.values, start=1)]


def _avg_clustering(builder, constraint: AvgClustering, prefix: str, suffix: str):
    handles = encode_clustering(builder, builder.fixed_degrees)
    return [_band_rows(builder, f'{prefix}_acc', LinExpr.var(handles.pacc), constraint.band,
                       'sacc' + suffix)]


def _global_clustering(builder, constraint: GlobalClustering, prefix: str, suffix: str):
    if builder.fixed_degrees is not None:
        handles = encode_clustering(builder, builder.fixed_degrees)
        return [_band_rows(builder, f'{prefix}_gcc', LinExpr.var(handles.pgcc), constraint.band,
                           'sgcc' + suffix)]
    handles = encode_clustering(builder, None, two_paths=True)
    closed = LinExpr.sum(LinExpr.var(p) for p in handles.pntr.values())
    paths = LinExpr.sum(LinExpr.var(p) for p in handles.pntp.values())
    if 'gcc_guard' not in builder.handles:
        builder.constrain('gcc_guard', paths, ConstraintSense.GE, 1.0)
        builder.handles['gcc_guard'] = True
    return [_fraction_rows(builder, f'{prefix}_gcc', closed, paths, constraint.band, 'sgcc' + suffix)]


def _apl(builder, constraint: AveragePathLength, prefix: str, suffix: str):
    encode_shortest_paths(builder)
    handles = encode_path_statistics(builder, ['apl'])
    return [_band_rows(builder, f'{prefix}_apl', LinExpr.var(handles.papl), constraint.band,
                       'sapl' + suffix)]


def _cpl(builder, constraint: CharacteristicPathLength, prefix: str, suffix: str):
    encode_shortest_paths(builder)
    handles = encode_path_statistics(builder, ['cpl'])
    return [_band_rows(builder, f'{prefix}_cpl', LinExpr.var(handles.pcpl), constraint.band,
                       'scpl' + suffix)]


def _diameter(builder, constraint: Diameter, prefix: str, suffix: str):
    """Every distance at most D^U and at least one distance at least D^L."""
    n = builder.n
    lo, hi = constraint.band
    distances = encode_shortest_paths(builder)
    minus, plus = builder.slack_pair('sD' + suffix, (), lo - 1, n - 1 - hi)
    chosen = []
    for (i, j), w in distances.items():
        psi = builder.variable((f'psi{suffix}', i, j), VariableKind.BINARY, 0, 1,
                               BranchPriority.AUXILIARY)
        chosen.append(psi)
        builder.constrain(f'{prefix}_dhi_{i}_{j}', LinExpr.var(w) - LinExpr.var(plus),
                          ConstraintSense.LE, hi)
        builder.constrain(f'{prefix}_dlo_{i}_{j}',
                          LinExpr.var(w) + LinExpr.var(minus) - LinExpr.var(psi, lo - 1),
                          ConstraintSense.GE, 1.0)
    builder.constrain(f'{prefix}_dpsi', LinExpr.sum(LinExpr.var(p) for p in chosen),
                      ConstraintSense.GE, 1.0)
    return [(minus, plus)]


def _closeness(builder, constraint: ClosenessSequence, prefix: str, suffix: str):
    """Closeness bands become bands on the mean distance 1 / closeness."""
    n = builder.n
    encode_shortest_paths(builder)
    handles = encode_path_statistics(builder, ['closeness'])
    bands = [(1.0 / hi, 1.0 / lo if lo > 0 else n / 2) for lo, hi in constraint.bands]
    top = max(hi for _, hi in bands)
    bottom = min(lo for lo, _ in bands)
    pairs, values = [], []
    for i in builder.nodes:
        minus, plus = builder.slack_pair('siclc' + suffix, (i,), top - 1.0, n / 2 - bottom)
        pairs.append((minus, plus))
        values.append(LinExpr.var(handles.piclc[i]) + LinExpr.var(minus) - LinExpr.var(plus))
    value_bounds = [builder.expr_bounds(value) for value in values]
    encode_sequence_assignment(builder, 'clc' + suffix, values, value_bounds, bands)
    return pairs


def _adn(builder, constraint: AdnByDegree, prefix: str, suffix: str):
    d_lower, d_upper = builder.degree_range
    classes = encode_degree_classes(builder, d_lower, d_upper, builder.epsilon)
    pairs = []
    for q, band in constraint.bands:
        if not max(1, d_lower) <= q <= d_upper:
            raise SpecError(f'adn degree class {q} outside [{max(1, d_lower)}, {d_upper}]')
        total = LinExpr.sum(LinExpr.var(classes.psdn_gated[(q, i)]) for i in builder.nodes)
        size = LinExpr.var(classes.pnnd[q], float(q))
        pairs.append(_fraction_rows(builder, f'{prefix}_adn_{q}', total, size, band,
                                    'sadn' + suffix, (q,)))
    return pairs


def _min_degree_span(builder, constraint: MinDegreeSpan, prefix: str, suffix: str):
    pd = encode_degrees(builder)
    spread = LinExpr.var(pd[1]) - LinExpr.var(pd[builder.n])
    return [_band_rows(builder, f'{prefix}_span', spread, (constraint.span, builder.n - 1),
                       'sspan' + suffix)]


def _non_null(builder, constraint: NonNull, prefix: str, suffix: str):
    edges = encode_edges(builder)
    total = LinExpr.sum(LinExpr.var(x) for x in edges.values())
    return [_band_rows(builder, f'{prefix}_edges', total, (1, comb(builder.n, 2)),
                       'snonnull' + suffix)]


def _motif_count(builder, constraint: MotifCount, prefix: str, suffix: str):
    indicators = [encode_motif(builder, constraint.motif, nodes)
                  for nodes in motif_instances(constraint.motif, builder.n)]
    total = LinExpr.sum(LinExpr.var(y) for y in indicators)
    base = f'smotif_{constraint.motif.value}'
    return [_band_rows(builder, f'{prefix}_{MOTIF_PREFIX[constraint.motif]}', total,
                       constraint.band, base + builder.occurrence(base))]


_HANDLERS = {
    DegreeBounds: ('sdb', _degree_bounds),
    DegreeSequence: ('sd', _degree_sequence),
    AvgClustering: ('sacc', _avg_clustering),
    GlobalClustering: ('sgcc', _global_clustering),
    AveragePathLength: ('sapl', _apl),
    CharacteristicPathLength: ('scpl', _cpl),
    Diameter: ('sD', _diameter),
    ClosenessSequence: ('siclc', _closeness),
    AdnByDegree: ('sadn', _adn),
    MinDegreeSpan: ('sspan', _min_degree_span),
    NonNull: ('snonnull', _non_null),
    MotifCount: (None, _motif_count),
}


def add_specification(builder: FormulationBuilder, constraint: PropertyConstraint,
                      index: Optional[int] = None) -> list[tuple[int, int]]:
    """Add the slack-relaxed rows of one property constraint.

    The property encoders the constraint needs are invoked on demand. Each
    scalar band gets one (minus, plus) slack pair; sequences get one pair
    per node and per-class constraints one pair per class.

    Args:
        builder: Model under construction
        constraint: Property constraint
        index: Position in the spec, used for row names and the slack label

    Returns:
        The (minus, plus) slack id pairs
    """
    handler = _HANDLERS.get(type(constraint))
    if handler is None:
        raise SpecError(f'Unsupported constraint: {constraint!r}')
    if index is None:
        index = len(builder.registry.slack_groups)
    base, encode = handler
    suffix = builder.occurrence(base) if base else ''
    pairs = encode(builder, constraint, f'spec{index + 1}', suffix)
    builder.add_slack_group(constraint_label(index, constraint), index, pairs)
    logger.debug('Added %s with %d slack pairs', constraint.kind, len(pairs))
    return pairs
