"""Assemble the complete model for a network specification."""

import logging
from typing import Optional

from milp import LinExpr, MilpModel, ObjectiveSense

from .add_specification import add_specification
from .add_symmetry_breaking import add_symmetry_breaking
from .builder import FormulationBuilder
from .encode_clustering import encode_clustering
from .encode_degrees import encode_degrees
from .encode_edges import encode_edges
from .encode_path_statistics import encode_path_statistics
from .encode_shortest_paths import encode_shortest_paths
from .models import NetworkSpec, ObjectiveMode, PropertyName, SpecError, VariableRegistry
from .validate_spec import validate_spec

logger = logging.getLogger(__name__)


def _property_expr(builder: FormulationBuilder, prop: PropertyName) -> LinExpr:
    if prop is PropertyName.EDGE_COUNT:
        return LinExpr.sum(LinExpr.var(x) for x in builder.handles['x'].values())
    if prop is PropertyName.AVG_CC:
        return LinExpr.var(encode_clustering(builder, builder.fixed_degrees).pacc)
    if prop is PropertyName.GLOBAL_CC:
        return LinExpr.var(encode_clustering(builder, builder.fixed_degrees).pgcc)
    which = {PropertyName.APL: 'apl', PropertyName.CPL: 'cpl', PropertyName.DIAMETER: 'diameter'}[prop]
    handles = encode_path_statistics(builder, [which])
    attribute = {'apl': 'papl', 'cpl': 'pcpl', 'diameter': 'pdiam'}[which]
    return LinExpr.var(getattr(handles, attribute))


def build(spec: NetworkSpec, feasibility_tol: Optional[float] = None,
          name: str = 'netgen') -> tuple[MilpModel, VariableRegistry]:
    """Translate a specification into a frozen model and its registry.

    Encoders run in dependency order and only for the properties the
    constraints, the objective and the symmetry criterion need. A min-slack
    objective sums every slack; an extremum objective optimizes the property
    with every slack pinned to zero.

    Args:
        spec: Specification to build
        feasibility_tol: Solver feasibility tolerance checked against epsilon
        name: Model name

    Returns:
        Tuple of (model, registry)
    """
    errors = validate_spec(spec, feasibility_tol)
    if errors:
        raise SpecError('; '.join(errors))

    min_slack = spec.objective.mode is ObjectiveMode.MIN_SLACK
    builder = FormulationBuilder(spec.n, spec.motif_mode, spec.epsilon, slacks_enabled=min_slack,
                                 fixed_degrees=spec.fixed_degrees, degree_range=spec.degree_range,
                                 path_flows=spec.path_flows, name=name)
    encode_edges(builder)
    encode_degrees(builder)
    if spec.uses_shortest_paths:
        encode_shortest_paths(builder)

    for index, constraint in enumerate(spec.constraints):
        add_specification(builder, constraint, index)

    if min_slack:
        sense = ObjectiveSense.MINIMIZE
        terms = [(var_id, 1.0) for var_id in builder.registry.slack_ids()]
    else:
        sense = ObjectiveSense.MAXIMIZE if spec.objective.mode is ObjectiveMode.MAXIMIZE \
            else ObjectiveSense.MINIMIZE
        terms = list(_property_expr(builder, spec.objective.property).terms.items())

    add_symmetry_breaking(builder, spec.symmetry, force_degree_order=spec.forces_degree_order)

    model = builder.model
    model.set_objective(sense, terms)
    model.validate()
    model.freeze()
    logger.info('Built model %s: %d variables, %d constraints, %d slacks',
                name, model.num_variables, model.num_constraints,
                len(builder.registry.slack_ids()))
    return model, builder.registry
