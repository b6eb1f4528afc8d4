"""Average, characteristic and extreme path lengths, and inverse closeness."""

import logging
import math
from typing import Iterable

from config import BranchPriority
from milp import ConstraintSense, LinExpr, VariableKind

from .builder import FormulationBuilder
from .models import PathStatisticHandles, SpecError

logger = logging.getLogger(__name__)

STATISTICS = ('apl', 'cpl', 'closeness', 'diameter')


def _distance(builder: FormulationBuilder, i: int, j: int) -> LinExpr:
    return LinExpr.var(builder.handles['w'][(min(i, j), max(i, j))])


def _encode_apl(builder: FormulationBuilder, handles: PathStatisticHandles) -> None:
    n = builder.n
    pairs = builder.pairs()
    handles.papl = builder.variable(('papl',), lower=1.0, upper=(n + 1) / 3)
    mean = LinExpr.sum(_distance(builder, i, j) * (1.0 / len(pairs)) for i, j in pairs)
    builder.constrain('papl_def', LinExpr.var(handles.papl) - mean, ConstraintSense.EQ, 0.0)


def _encode_cpl(builder: FormulationBuilder, handles: PathStatisticHandles) -> None:
    """Median distance: at least half the pairs lie on each side of pcpl."""
    n = builder.n
    pairs = builder.pairs()
    near = math.ceil(n / 2) - 1
    far = n - 2
    handles.pcpl = builder.variable(('pcpl',), lower=1.0, upper=math.ceil(n / 2))
    pcpl = LinExpr.var(handles.pcpl)
    above, below = [], []
    for i, j in pairs:
        r_plus = builder.variable(('rcpl_plus', i, j), VariableKind.BINARY, 0, 1,
                                  BranchPriority.AUXILIARY)
        r_minus = builder.variable(('rcpl_minus', i, j), VariableKind.BINARY, 0, 1,
                                   BranchPriority.AUXILIARY)
        above.append(r_plus)
        below.append(r_minus)
        gap = _distance(builder, i, j) - pcpl
        builder.constrain(f'rcpl_plus_lo_{i}_{j}', gap + LinExpr.var(r_plus, near),
                          ConstraintSense.GE, 0.0)
        builder.constrain(f'rcpl_plus_hi_{i}_{j}', gap + LinExpr.var(r_plus, far),
                          ConstraintSense.LE, far)
        builder.constrain(f'rcpl_minus_hi_{i}_{j}', gap - LinExpr.var(r_minus, far),
                          ConstraintSense.LE, 0.0)
        builder.constrain(f'rcpl_minus_lo_{i}_{j}', gap - LinExpr.var(r_minus, near),
                          ConstraintSense.GE, -near)
    half = len(pairs) + len(pairs) % 2
    builder.constrain('rcpl_plus_count', LinExpr.sum(LinExpr.var(r, 2.0) for r in above),
                      ConstraintSense.EQ, half)
    builder.constrain('rcpl_minus_count', LinExpr.sum(LinExpr.var(r, 2.0) for r in below),
                      ConstraintSense.EQ, half)


def _encode_closeness(builder: FormulationBuilder, handles: PathStatisticHandles) -> None:
    n = builder.n
    handles.piclc = {}
    for i in builder.nodes:
        handles.piclc[i] = builder.variable(('piclc', i), lower=1.0, upper=n / 2)
        mean = LinExpr.sum(_distance(builder, i, j) * (1.0 / (n - 1)) for j in builder.nodes if j != i)
        builder.constrain(f'piclc_def_{i}', LinExpr.var(handles.piclc[i]) - mean,
                          ConstraintSense.EQ, 0.0)


def _encode_diameter(builder: FormulationBuilder, handles: PathStatisticHandles) -> None:
    """Exact maximum distance: pdiam bounds every distance and meets one of them."""
    n = builder.n
    far = n - 2
    handles.pdiam = builder.variable(('pdiam',), lower=1.0, upper=n - 1)
    pdiam = LinExpr.var(handles.pdiam)
    attained = []
    for i, j in builder.pairs():
        phi = builder.variable(('phi', i, j), VariableKind.BINARY, 0, 1, BranchPriority.AUXILIARY)
        attained.append(phi)
        gap = pdiam - _distance(builder, i, j)
        builder.constrain(f'pdiam_ge_{i}_{j}', gap, ConstraintSense.GE, 0.0)
        builder.constrain(f'pdiam_le_{i}_{j}', gap + LinExpr.var(phi, far), ConstraintSense.LE, far)
    builder.constrain('pdiam_attained', LinExpr.sum(LinExpr.var(p) for p in attained),
                      ConstraintSense.GE, 1.0)


_ENCODERS = {
    'apl': ('papl', _encode_apl),
    'cpl': ('pcpl', _encode_cpl),
    'closeness': ('piclc', _encode_closeness),
    'diameter': ('pdiam', _encode_diameter),
}


def encode_path_statistics(builder: FormulationBuilder, which: Iterable[str]) -> PathStatisticHandles:
    """Add path-length statistics over all pairwise distances.

    Args:
        builder: Model with shortest paths encoded for every pair
        which: Subset of 'apl', 'cpl', 'closeness', 'diameter'

    Returns:
        PathStatisticHandles with every statistic encoded so far
    """
    which = list(which)
    unknown = [name for name in which if name not in _ENCODERS]
    if unknown:
        raise SpecError(f'Unknown path statistics: {unknown}')
    distances = builder.handles.get('w', {})
    if any(pair not in distances for pair in builder.pairs()):
        raise SpecError('Path statistics need shortest paths for every node pair')

    handles = builder.handles.setdefault('path_statistics', PathStatisticHandles())
    for name in which:
        attribute, encoder = _ENCODERS[name]
        if getattr(handles, attribute) is None:
            encoder(builder, handles)
            logger.debug('Path statistic %s encoded', name)
    return handles
