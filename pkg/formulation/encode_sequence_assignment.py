"""One-to-one assignment of node property values to element bands."""

from typing import Optional, Sequence

from config import BranchPriority
from milp import ConstraintSense, LinExpr, VariableKind

from .builder import FormulationBuilder
from .models import Band, SpecError


def encode_sequence_assignment(builder: FormulationBuilder, name: str, values: Sequence[LinExpr],
                               value_bounds: Sequence[tuple[float, float]], bands: Sequence[Band],
                               gates: Optional[Sequence[Sequence[LinExpr]]] = None
                               ) -> dict[tuple[int, int], int]:
    """Assign every band to a distinct node whose value lies in it.

    q[i, m] = 1 activates band m on node i; inactive rows relax to the
    natural bounds of the value. Every band is used exactly once. A node
    takes at most one band, exactly one when there are as many bands as
    nodes, and only nodes selected by all subset gates take one.

    Args:
        builder: Model under construction
        name: Symbol prefix; variables are named q_<name>_<i>_<m>
        values: Property expression per node, in node order
        value_bounds: Natural (lower, upper) bounds of each value
        bands: Element bands, M <= N of them
        gates: Per subset, one binary gate expression per node (experimental
            for more than one subset)

    Returns:
        Map from (node, element) to the assignment variable id
    """
    size, count = len(values), len(bands)
    if count > size:
        raise SpecError(f'{count} bands for {size} values')
    if len(value_bounds) != size:
        raise SpecError(f'{len(value_bounds)} bounds for {size} values')
    lowest = min(lo for lo, _ in bands)
    highest = max(hi for _, hi in bands)

    assign = {}
    for i, value in enumerate(values, start=1):
        lower = min(value_bounds[i - 1][0], lowest)
        upper = max(value_bounds[i - 1][1], highest)
        for m, (lo, hi) in enumerate(bands, start=1):
            q = builder.variable((f'q_{name}', i, m), VariableKind.BINARY, 0, 1,
                                 BranchPriority.AUXILIARY)
            assign[(i, m)] = q
            builder.constrain(f'{name}_band_lo_{i}_{m}', value + LinExpr.var(q, lower - lo),
                              ConstraintSense.GE, lower)
            builder.constrain(f'{name}_band_hi_{i}_{m}', value + LinExpr.var(q, upper - hi),
                              ConstraintSense.LE, upper)

    for m in range(1, count + 1):
        column = LinExpr.sum(LinExpr.var(assign[(i, m)]) for i in range(1, size + 1))
        builder.constrain(f'{name}_element_{m}', column, ConstraintSense.EQ, 1.0)

    for i in range(1, size + 1):
        row = LinExpr.sum(LinExpr.var(assign[(i, m)]) for m in range(1, count + 1))
        if gates is None:
            sense = ConstraintSense.EQ if count == size else ConstraintSense.LE
            builder.constrain(f'{name}_node_{i}', row, sense, 1.0)
            continue
        for e, subset in enumerate(gates, start=1):
            builder.constrain(f'{name}_node_{i}_in{e}', row - subset[i - 1], ConstraintSense.LE, 0.0)
        closed = LinExpr.sum(1 - subset[i - 1] for subset in gates)
        builder.constrain(f'{name}_node_{i}_all', row + closed, ConstraintSense.GE, 1.0)
    return assign
