"""Gated copies of property values and statistics over gated subsets."""

import logging
from typing import Optional, Sequence

from config import BranchPriority
from milp import ConstraintSense, LinExpr, VariableKind

from .builder import FormulationBuilder
from .models import SpecError, StatisticHandles, StatisticKind

logger = logging.getLogger(__name__)

PropertyValue = tuple[LinExpr, float, float]


def gated_copy(builder: FormulationBuilder, key: tuple, value: LinExpr, lower: float,
               upper: float, gates: Sequence[LinExpr], baseline: float = 0.0) -> int:
    """Add p' equal to ``value`` when every gate is 1 and to ``baseline`` otherwise.

    Each gate switches the copy on through its own pair of rows. The
    release rows use the sum of closed gates, which is exact for one gate;
    with several gates it is a relaxation of the intersection and is
    experimental.

    Args:
        builder: Model under construction
        key: Registry key of the copy
        value: Property value expression, within [lower, upper]
        lower: Lower bound of the value
        upper: Upper bound of the value
        gates: Binary gate expressions
        baseline: Value the copy takes when gated off

    Returns:
        The copy's variable id
    """
    copy = builder.variable(key, lower=min(lower, baseline), upper=max(upper, baseline))
    name = builder.registry.name_for(key)
    below, above = lower - baseline, upper - baseline
    p = LinExpr.var(copy)
    for index, gate in enumerate(gates):
        builder.constrain(f'{name}_on_lo{index}', p - gate * below, ConstraintSense.GE, baseline)
        builder.constrain(f'{name}_on_hi{index}', p - gate * above, ConstraintSense.LE, baseline)
    closed = LinExpr.sum(1 - gate for gate in gates)
    builder.constrain(f'{name}_off_lo', value - p - closed * below, ConstraintSense.GE, 0.0)
    builder.constrain(f'{name}_off_hi', value - p - closed * above, ConstraintSense.LE, 0.0)
    return copy


def encode_statistics(builder: FormulationBuilder, name: str, values: Sequence[PropertyValue],
                      gates: Optional[Sequence[LinExpr]] = None,
                      which: StatisticKind = StatisticKind.SUM) -> StatisticHandles:
    """Encode the sum or the median of the values selected by the gates.

    Args:
        builder: Model under construction
        name: Prefix of every added symbol
        values: (expression, lower, upper) per element
        gates: One binary gate per element, or None to select every element
        which: SUM yields gated copies with baseline 0 and their total;
            MEDIAN adds a median variable with above/below indicators

    Returns:
        StatisticHandles; ``count`` is the number of selected elements
    """
    if not values:
        raise SpecError(f'Statistic {name} over an empty candidate set')
    if gates is not None and len(gates) != len(values):
        raise SpecError(f'Statistic {name}: {len(gates)} gates for {len(values)} values')
    size = len(values)
    count = LinExpr.sum(gates) if gates is not None else LinExpr(constant=size)

    if which is StatisticKind.SUM:
        copies = {}
        for index, (value, lower, upper) in enumerate(values, start=1):
            if gates is None:
                copies[index] = builder.variable((f'{name}_p', index), lower=lower, upper=upper)
                builder.constrain(f'{name}_p_def_{index}', LinExpr.var(copies[index]) - value,
                                  ConstraintSense.EQ, 0.0)
            else:
                copies[index] = gated_copy(builder, (f'{name}_p', index), value, lower, upper,
                                           [gates[index - 1]])
        total = LinExpr.sum(LinExpr.var(c) for c in copies.values())
        return StatisticHandles(copies, total, count)

    low = min(lower for _, lower, _ in values)
    high = max(upper for _, _, upper in values)
    median = builder.variable((f'{name}_median',), lower=low, upper=high)
    m = LinExpr.var(median)
    copies = {}
    above_ids, below_ids = [], []
    for index, (value, lower, upper) in enumerate(values, start=1):
        if gates is None:
            copy = value
            copy_low, copy_high = lower, upper
        else:
            copy_id = gated_copy(builder, (f'{name}_p', index), value, lower, upper,
                                 [gates[index - 1]], baseline=high)
            copies[index] = copy_id
            copy = LinExpr.var(copy_id)
            copy_low, copy_high = min(lower, high), high
        above = builder.variable((f'{name}_rplus', index), VariableKind.BINARY, 0, 1,
                                 BranchPriority.AUXILIARY)
        below = builder.variable((f'{name}_rminus', index), VariableKind.BINARY, 0, 1,
                                 BranchPriority.AUXILIARY)
        above_ids.append(above)
        below_ids.append(below)
        span_down = copy_low - high
        span_up = copy_high - low
        diff = copy - m
        builder.constrain(f'{name}_rplus_lo_{index}', diff - LinExpr.var(above, span_down),
                          ConstraintSense.GE, 0.0)
        builder.constrain(f'{name}_rplus_hi_{index}', diff + LinExpr.var(above, span_up),
                          ConstraintSense.LE, span_up)
        builder.constrain(f'{name}_rminus_hi_{index}', diff - LinExpr.var(below, span_up),
                          ConstraintSense.LE, 0.0)
        builder.constrain(f'{name}_rminus_lo_{index}', diff + LinExpr.var(below, span_down),
                          ConstraintSense.GE, span_down)
        if gates is not None:
            gate = gates[index - 1]
            builder.constrain(f'{name}_rminus_gate_{index}', LinExpr.var(below) + gate,
                              ConstraintSense.GE, 1.0)
            builder.constrain(f'{name}_rplus_gate_{index}', LinExpr.var(above) - gate,
                              ConstraintSense.LE, 0.0)

    twice_above = LinExpr.sum(LinExpr.var(r, 2.0) for r in above_ids)
    twice_below = LinExpr.sum(LinExpr.var(r, 2.0) for r in below_ids)
    builder.constrain(f'{name}_above_lo', twice_above - count, ConstraintSense.GE, 0.0)
    builder.constrain(f'{name}_above_hi', twice_above - count, ConstraintSense.LE, 1.0)
    builder.constrain(f'{name}_below_lo', twice_below + count, ConstraintSense.GE, 2.0 * size)
    builder.constrain(f'{name}_below_hi', twice_below + count, ConstraintSense.LE, 2.0 * size + 1)
    if gates is not None:
        builder.constrain(f'{name}_nonempty', count, ConstraintSense.GE, 1.0)
    logger.debug('Median %s over %d candidates', name, size)
    total = LinExpr.sum(LinExpr.var(c) for c in copies.values())
    return StatisticHandles(copies, total, count, median)
