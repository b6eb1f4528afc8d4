"""Edge indicator variables."""

from config import BranchPriority
from milp import VariableKind

from .builder import FormulationBuilder


def encode_edges(builder: FormulationBuilder) -> dict[tuple[int, int], int]:
    """Create one binary x variable per unordered node pair.

    Returns:
        Map from (i, j), i < j, to the variable id
    """
    if 'x' not in builder.handles:
        builder.handles['x'] = {
            (i, j): builder.variable(('x', i, j), VariableKind.BINARY, 0, 1, BranchPriority.EDGE)
            for i, j in builder.pairs()
        }
    return builder.handles['x']
