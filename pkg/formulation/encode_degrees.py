"""Node degree variables."""

from milp import ConstraintSense, LinExpr

from .builder import FormulationBuilder
from .encode_edges import encode_edges


def encode_degrees(builder: FormulationBuilder) -> dict[int, int]:
    """Define pd_i as the number of edges incident to node i.

    Degree variables carry the builder's degree range as bounds.

    Returns:
        Map from node to degree variable id
    """
    if 'pd' in builder.handles:
        return builder.handles['pd']
    encode_edges(builder)
    lower, upper = builder.degree_range
    pd = {}
    for i in builder.nodes:
        pd[i] = builder.variable(('pd', i), lower=lower, upper=upper)
        incident = LinExpr.sum(builder.x(i, j) for j in builder.nodes if j != i)
        builder.constrain(f'pd_def_{i}', LinExpr.var(pd[i]) - incident, ConstraintSense.EQ, 0.0)
    builder.handles['pd'] = pd
    return pd
