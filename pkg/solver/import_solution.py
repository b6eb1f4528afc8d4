"""Verify a solution produced by an external MILP solver."""

import logging
from typing import Optional

import numpy as np

from formulation.models import VariableRegistry
from milp import MilpModel, read_assignment

from ._utils import assemble, make_result, violation
from .models import LpMethod, LpStatus, SolveOptions, SolveResult, SolveStats, SolveStatus
from .solve_relaxation import solve_relaxation

logger = logging.getLogger(__name__)


def _complete(model: MilpModel, given: dict[int, float], options: SolveOptions) -> Optional[np.ndarray]:
    """Fill the missing continuous values by an LP with the given values fixed."""
    arrays = assemble(model)
    lower = arrays.lower.copy()
    upper = arrays.upper.copy()
    for var_id, value in given.items():
        lower[var_id] = upper[var_id] = value
    result = solve_relaxation(model, lower, upper, LpMethod.HIGHS, arrays, options.feasibility_tol)
    if result.status is not LpStatus.OPTIMAL:
        return None
    values = result.values.copy()
    for var_id, value in given.items():
        values[var_id] = value
    return values


def import_solution(model: MilpModel, registry: Optional[VariableRegistry], text: str,
                    options: Optional[SolveOptions] = None) -> tuple[Optional[SolveResult], str]:
    """Check an assignment against the model and read off the graph.

    Every binary must be given. Continuous variables that are missing are
    completed by solving the LP with the given values fixed. Bounds are
    checked first, then integrality, then the rows in model order.

    Args:
        model: Model the assignment was computed for
        registry: Registry of the model
        text: Solution text of 'name value' lines
        options: Tolerances to check with

    Returns:
        Tuple of (result, message); result is None when the assignment is rejected
    """
    options = options or SolveOptions()
    assignment, message = read_assignment(text)
    if assignment is None:
        return None, message

    unknown = sorted(name for name in assignment if not model.has_variable(name))
    if unknown:
        return None, f'Unknown variables: {", ".join(unknown[:5])}'
    missing_binaries = [v.name for v in model.variables if v.is_binary and v.name not in assignment]
    if missing_binaries:
        return None, f'Missing binary variables: {", ".join(missing_binaries[:5])}'

    given = {model.variable_id(name): value for name, value in assignment.items()}
    if len(given) == model.num_variables:
        values = np.zeros(model.num_variables)
        for var_id, value in given.items():
            values[var_id] = value
    else:
        logger.info('Completing %d continuous variables', model.num_variables - len(given))
        values = _complete(model, given, options)
        if values is None:
            fallback = np.array([np.clip(0.0, v.lower, v.upper) for v in model.variables])
            for var_id, value in given.items():
                fallback[var_id] = value
            problem = violation(model, fallback, options.feasibility_tol, options.integrality_tol)
            return None, problem or 'No values of the missing variables satisfy the model'

    problem = violation(model, values, options.feasibility_tol, options.integrality_tol)
    if problem:
        logger.info('Rejected solution: %s', problem)
        return None, problem

    result = make_result(model, registry, SolveStatus.FEASIBLE, values, SolveStats(),
                         'Solution verified')
    return result, f'Solution verified with total slack {result.total_slack:.6g}'
