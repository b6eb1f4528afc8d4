"""Degree-class indicators, class sizes and neighbour-degree sums."""

import logging

from config import BranchPriority
from milp import ConstraintSense, LinExpr, VariableKind

from .builder import FormulationBuilder
from .encode_degrees import encode_degrees
from .encode_statistics import gated_copy
from .models import DegreeClassHandles, SpecError

logger = logging.getLogger(__name__)


def class_gate(handles: DegreeClassHandles, q: int, i: int) -> LinExpr:
    """1 exactly when node i has degree q."""
    gate = LinExpr.var(handles.z[(q, i)])
    if q < handles.d_upper:
        gate = gate - LinExpr.var(handles.z[(q + 1, i)])
    return gate


def encode_neighbor_degree_sums(builder: FormulationBuilder) -> dict[int, int]:
    """Define psdn_i, the sum of the degrees of node i's neighbours.

    With a fixed degree sequence the neighbour degrees are constants;
    otherwise each product pd_j * x_ij is a gated copy of pd_j.
    """
    if 'psdn' in builder.handles:
        return builder.handles['psdn']
    pd = encode_degrees(builder)
    fixed = builder.fixed_degrees
    lower, upper = builder.degree_range
    psdn = {}
    for i in builder.nodes:
        others = [j for j in builder.nodes if j != i]
        if fixed is not None:
            total = LinExpr.sum(builder.x(i, j) * fixed[j - 1] for j in others)
            top = sum(fixed[j - 1] for j in others)
        else:
            total = LinExpr.sum(
                LinExpr.var(gated_copy(builder, ('pdp', i, j), LinExpr.var(pd[j]), lower, upper,
                                       [builder.x(i, j)]))
                for j in others)
            top = min(upper * upper, upper * len(others))
        psdn[i] = builder.variable(('psdn', i), lower=0.0, upper=top)
        builder.constrain(f'psdn_def_{i}', LinExpr.var(psdn[i]) - total, ConstraintSense.EQ, 0.0)
    builder.handles['psdn'] = psdn
    return psdn


def encode_degree_classes(builder: FormulationBuilder, d_lower: int, d_upper: int,
                          epsilon: float, neighbor_sums: bool = True) -> DegreeClassHandles:
    """Add threshold indicators z[q, i] (pd_i >= q) and class sizes pnnd[q].

    Args:
        builder: Model under construction
        d_lower: Smallest possible degree
        d_upper: Largest possible degree
        epsilon: Offset separating consecutive thresholds, in (0, 1)
        neighbor_sums: Also add psdn and its per-class gated copies psdnq

    Returns:
        DegreeClassHandles
    """
    n = builder.n
    if not 0 <= d_lower <= d_upper <= n - 1:
        raise SpecError(f'Degree class range [{d_lower}, {d_upper}] outside [0, {n - 1}]')
    if not 0 < epsilon < 1:
        raise SpecError(f'epsilon must lie in (0, 1), got {epsilon}')
    pd = encode_degrees(builder)
    pd_lower, pd_upper = builder.degree_range
    if d_lower > pd_lower or d_upper < pd_upper:
        raise SpecError(f'Degree class range [{d_lower}, {d_upper}] does not cover the degree '
                        f'bounds [{pd_lower}, {pd_upper}]')

    handles = builder.handles.get('degree_classes')
    if handles is not None:
        if (handles.d_lower, handles.d_upper) != (d_lower, d_upper):
            raise SpecError('Degree classes already encoded with a different range')
    else:
        z, pnnd = {}, {}
        for q in range(d_lower, d_upper + 1):
            for i in builder.nodes:
                forced = 1 if q == d_lower else 0
                z[(q, i)] = builder.variable(('z', q, i), VariableKind.BINARY, forced, 1,
                                             BranchPriority.AUXILIARY)
                if q == d_lower:
                    continue
                degree = LinExpr.var(pd[i])
                builder.constrain(f'zlo_{q}_{i}', degree + LinExpr.var(z[(q, i)], d_lower - q + epsilon),
                                  ConstraintSense.GE, d_lower)
                builder.constrain(f'zhi_{q}_{i}', degree - LinExpr.var(z[(q, i)], d_upper - q + epsilon),
                                  ConstraintSense.LE, q - epsilon)
                builder.constrain(f'zmono_{q}_{i}', LinExpr.var(z[(q, i)]) - LinExpr.var(z[(q - 1, i)]),
                                  ConstraintSense.LE, 0.0)
        handles = DegreeClassHandles(d_lower, d_upper, z, pnnd)
        for q in range(d_lower, d_upper + 1):
            pnnd[q] = builder.variable(('pnnd', q), lower=0.0, upper=n)
            members = LinExpr.sum(class_gate(handles, q, i) for i in builder.nodes)
            builder.constrain(f'pnnd_def_{q}', LinExpr.var(pnnd[q]) - members, ConstraintSense.EQ, 0.0)
        builder.handles['degree_classes'] = handles
        logger.debug('Degree classes %d..%d encoded', d_lower, d_upper)

    if neighbor_sums and handles.psdn is None:
        psdn = encode_neighbor_degree_sums(builder)
        gated = {}
        for q in range(max(1, d_lower), d_upper + 1):
            for i in builder.nodes:
                top = builder.bounds(psdn[i])[1]
                gated[(q, i)] = gated_copy(builder, ('psdnq', q, i), LinExpr.var(psdn[i]), 0.0, top,
                                           [class_gate(handles, q, i)])
        handles.psdn = psdn
        handles.psdn_gated = gated
    return handles
