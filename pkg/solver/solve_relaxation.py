"""LP relaxation of a model under a bound overlay."""

import logging
from typing import Optional

import numpy as np
from scipy.optimize import linprog

from config import SolverConfig
from milp import MilpModel

from ._simplex import BoundedSimplex
from ._utils import ModelArrays, assemble
from .models import LpMethod, LpResult, LpStatus

logger = logging.getLogger(__name__)

_HIGHS_STATUS = {
    0: LpStatus.OPTIMAL,
    1: LpStatus.ITERATION_LIMIT,
    2: LpStatus.INFEASIBLE,
    3: LpStatus.UNBOUNDED,
}


def _solve_highs(arrays: ModelArrays, lower: np.ndarray, upper: np.ndarray,
                 feasibility_tol: float) -> tuple[LpStatus, Optional[np.ndarray], int, str]:
    result = linprog(
        arrays.cost,
        A_ub=arrays.a_ub,
        b_ub=arrays.b_ub,
        A_eq=arrays.a_eq,
        b_eq=arrays.b_eq,
        bounds=np.column_stack([lower, upper]),
        method='highs',
        options={'primal_feasibility_tolerance': feasibility_tol,
                 'dual_feasibility_tolerance': feasibility_tol},
    )
    status = _HIGHS_STATUS.get(result.status, LpStatus.NUMERICAL)
    values = np.asarray(result.x, dtype=float) if status is LpStatus.OPTIMAL else None
    return status, values, int(getattr(result, 'nit', 0) or 0), result.message


def _solve_simplex(arrays: ModelArrays, lower: np.ndarray, upper: np.ndarray,
                   feasibility_tol: float) -> tuple[LpStatus, Optional[np.ndarray], int, str]:
    simplex = BoundedSimplex(arrays.cost, arrays.matrix.toarray(), arrays.row_lower, arrays.row_upper,
                             lower, upper, feasibility_tol=feasibility_tol)
    outcome = simplex.solve()
    return outcome.status, outcome.values, outcome.iterations, outcome.message


def solve_relaxation(model: MilpModel, lower: Optional[np.ndarray] = None,
                     upper: Optional[np.ndarray] = None, method: LpMethod = LpMethod.HIGHS,
                     arrays: Optional[ModelArrays] = None,
                     feasibility_tol: float = SolverConfig.FEASIBILITY_TOL) -> LpResult:
    """Solve the LP relaxation with integrality dropped.

    Args:
        model: Model to relax
        lower: Variable lower bounds replacing the model's, or None
        upper: Variable upper bounds replacing the model's, or None
        method: LP engine
        arrays: Pre-assembled arrays of the model, reused across calls
        feasibility_tol: Primal feasibility tolerance

    Returns:
        LpResult with the objective in the model's own sense
    """
    if arrays is None:
        arrays = assemble(model)
    lower = arrays.lower if lower is None else lower
    upper = arrays.upper if upper is None else upper
    if np.any(lower > upper + feasibility_tol):
        return LpResult(LpStatus.INFEASIBLE, message='Crossed variable bounds')

    if method is LpMethod.HIGHS:
        status, values, iterations, message = _solve_highs(arrays, lower, upper, feasibility_tol)
    else:
        status, values, iterations, message = _solve_simplex(arrays, lower, upper, feasibility_tol)
    if status is not LpStatus.OPTIMAL:
        logger.debug('Relaxation %s: %s', status.value, message)
        return LpResult(status, iterations=iterations, message=message)
    return LpResult(status, values, arrays.model_objective(values), iterations, message)
