"""Private helpers shared by the solver operations."""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy import sparse

from formulation.models import VariableRegistry
from graphs import Graph
from milp import ConstraintSense, MilpModel, ObjectiveSense

from .models import SlackEntry, SolveResult, SolveStats, SolveStatus


@dataclass
class ModelArrays:
    """Matrix view of a model with the objective in minimization form.

    Rows are stored as ranges row_lower <= A x <= row_upper; the LE/GE
    split and the equality block are precomputed for scipy.
    """
    cost: np.ndarray
    sense_sign: float
    matrix: sparse.csr_matrix
    row_lower: np.ndarray
    row_upper: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    binary: np.ndarray
    priority: np.ndarray
    a_ub: Optional[sparse.csr_matrix]
    b_ub: Optional[np.ndarray]
    a_eq: Optional[sparse.csr_matrix]
    b_eq: Optional[np.ndarray]

    def model_objective(self, values: np.ndarray) -> float:
        return float(self.sense_sign * (self.cost @ values))


def assemble(model: MilpModel) -> ModelArrays:
    """Convert a model into arrays."""
    n = model.num_variables
    m = model.num_constraints
    sense_sign = -1.0 if model.objective.sense is ObjectiveSense.MAXIMIZE else 1.0
    cost = np.zeros(n)
    for var_id, coef in model.objective.terms:
        cost[var_id] = sense_sign * coef

    rows, cols, data = [], [], []
    row_lower = np.full(m, -np.inf)
    row_upper = np.full(m, np.inf)
    for constraint in model.constraints:
        for var_id, coef in constraint.terms:
            rows.append(constraint.id)
            cols.append(var_id)
            data.append(coef)
        if constraint.sense is not ConstraintSense.GE:
            row_upper[constraint.id] = constraint.rhs
        if constraint.sense is not ConstraintSense.LE:
            row_lower[constraint.id] = constraint.rhs
    matrix = sparse.csr_matrix((data, (rows, cols)), shape=(m, n))

    senses = np.array([c.sense.value for c in model.constraints], dtype=object)
    le = np.flatnonzero(senses == ConstraintSense.LE.value)
    ge = np.flatnonzero(senses == ConstraintSense.GE.value)
    eq = np.flatnonzero(senses == ConstraintSense.EQ.value)
    a_ub = b_ub = a_eq = b_eq = None
    if len(le) or len(ge):
        a_ub = sparse.vstack([matrix[le], -matrix[ge]]).tocsr()
        b_ub = np.concatenate([row_upper[le], -row_lower[ge]])
    if len(eq):
        a_eq = matrix[eq]
        b_eq = row_upper[eq]

    variables = model.variables
    return ModelArrays(
        cost=cost,
        sense_sign=sense_sign,
        matrix=matrix,
        row_lower=row_lower,
        row_upper=row_upper,
        lower=np.array([v.lower for v in variables], dtype=float),
        upper=np.array([v.upper for v in variables], dtype=float),
        binary=np.array([v.is_binary for v in variables], dtype=bool),
        priority=np.array([v.branch_priority for v in variables], dtype=float),
        a_ub=a_ub,
        b_ub=b_ub,
        a_eq=a_eq,
        b_eq=b_eq,
    )


def extract_graph(registry: VariableRegistry, values: Sequence[float], n: int) -> Graph:
    """Read the graph off the edge variables (x > 0.5 means present)."""
    return Graph.from_edges(n, (pair for pair, var_id in registry.edge_ids().items()
                                if values[var_id] > 0.5))


def node_count(registry: VariableRegistry) -> int:
    return max((max(pair) for pair in registry.edge_ids()), default=0)


def slack_report(model: MilpModel, registry: VariableRegistry,
                 values: Sequence[float]) -> list[SlackEntry]:
    """Slack used per property constraint; details list the non-zero slacks."""
    entries = []
    for group in registry.slack_groups:
        minus = plus = 0.0
        details = {}
        for minus_id, plus_id in group.pairs:
            for var_id in (minus_id, plus_id):
                if abs(values[var_id]) > 1e-12:
                    details[model.variables[var_id].name] = float(values[var_id])
            minus += float(values[minus_id])
            plus += float(values[plus_id])
        entries.append(SlackEntry(group.label, minus, plus, details))
    return entries


def violation(model: MilpModel, values: np.ndarray, tolerance: float,
              binary_tolerance: float) -> Optional[str]:
    """First bound, integrality or row violation, in that order, or None."""
    for variable in model.variables:
        value = values[variable.id]
        slack = tolerance * (1.0 + abs(value))
        if value < variable.lower - slack or value > variable.upper + slack:
            return (f'Variable {variable.name} = {value:g} outside '
                    f'[{variable.lower:g}, {variable.upper:g}]')
    for variable in model.variables:
        if variable.is_binary and abs(values[variable.id] - round(values[variable.id])) > binary_tolerance:
            return f'Binary variable {variable.name} = {values[variable.id]:g} is not integral'
    for constraint in model.constraints:
        lhs = sum(coef * values[var_id] for var_id, coef in constraint.terms)
        slack = tolerance * (1.0 + abs(constraint.rhs))
        if constraint.sense is ConstraintSense.LE:
            excess = lhs - constraint.rhs
        elif constraint.sense is ConstraintSense.GE:
            excess = constraint.rhs - lhs
        else:
            excess = abs(lhs - constraint.rhs)
        if excess > slack:
            return (f'Constraint {constraint.name} violated: lhs {lhs:g} '
                    f'{constraint.sense.value} {constraint.rhs:g}')
    return None


def make_result(model: MilpModel, registry: Optional[VariableRegistry], status: SolveStatus,
                values: Optional[np.ndarray], stats: SolveStats, message: str = '') -> SolveResult:
    """Package solver output, reading the graph and slacks when a registry is given."""
    if values is None:
        return SolveResult(status, stats=stats, message=message)
    objective = sum(coef * values[var_id] for var_id, coef in model.objective.terms)
    assignment = {v.name: float(values[v.id]) for v in model.variables}
    graphs, slacks = [], []
    if registry is not None:
        n = node_count(registry)
        if n >= 2:
            graphs.append(extract_graph(registry, values, n))
        slacks = slack_report(model, registry, values)
    return SolveResult(status, float(objective), assignment, graphs, slacks, stats, message)
