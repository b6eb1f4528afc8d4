"""Incremental model construction shared by all encoders."""

import logging
from typing import Any, Optional

from config import BranchPriority, FormulationConfig
from milp import ConstraintSense, LinExpr, MilpModel, VariableKind

from .models import MotifMode, PathFlows, SlackGroup, SpecError, VariableRegistry

logger = logging.getLogger(__name__)


class FormulationBuilder:
    """Owns the model under construction and the registry of its symbols.

    Encoders are idempotent: each one caches its handles in ``handles`` and
    returns them unchanged when called again.

    Attributes:
        n: Node count
        model: The MilpModel being built
        registry: Semantic key to variable id map
        motif_mode: Default motif indicator encoding
        epsilon: Degree-class threshold offset
        slacks_enabled: False pins every slack to zero (extremum objectives)
        fixed_degrees: Specified degree sequence, if any
        degree_range: Bounds imposed on every degree variable
        path_flows: Domain of shortest-path flow variables
        handles: Encoder outputs keyed by encoder name
    """

    def __init__(self, n: int, motif_mode: MotifMode = MotifMode.DISAGGREGATED,
                 epsilon: float = FormulationConfig.EPSILON, slacks_enabled: bool = True,
                 fixed_degrees: Optional[tuple[int, ...]] = None,
                 degree_range: Optional[tuple[int, int]] = None,
                 path_flows: PathFlows = PathFlows.CONTINUOUS, name: str = 'netgen'):
        if n < 2:
            raise SpecError(f'Need at least 2 nodes, got {n}')
        self.n = n
        self.model = MilpModel(name)
        self.registry = VariableRegistry()
        self.motif_mode = motif_mode
        self.epsilon = epsilon
        self.slacks_enabled = slacks_enabled
        self.fixed_degrees = fixed_degrees
        self.degree_range = degree_range or (0, n - 1)
        self.path_flows = path_flows
        self.handles: dict[str, Any] = {}
        self._occurrences: dict[str, int] = {}

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    def pairs(self) -> list[tuple[int, int]]:
        """Unordered node pairs (i < j) in lexicographic order."""
        return [(i, j) for i in self.nodes for j in range(i + 1, self.n + 1)]

    def variable(self, key: tuple, kind: VariableKind = VariableKind.CONTINUOUS,
                 lower: float = 0.0, upper: float = 1.0,
                 priority: int = BranchPriority.DEFAULT) -> int:
        """Add a variable named after its key and register it."""
        var_id = self.model.add_variable(self.registry.name_for(key), kind, lower, upper, priority)
        self.registry.register(key, var_id)
        return var_id

    def constrain(self, name: str, expr: LinExpr, sense: ConstraintSense, rhs: float = 0.0) -> int:
        """Add the row ``expr sense rhs``, moving the expression constant to the rhs."""
        return self.model.add_linear_constraint(name, expr.terms.items(), sense, rhs - expr.constant)

    def x(self, i: int, j: int) -> LinExpr:
        """Edge indicator of the unordered pair {i, j} as an expression."""
        return LinExpr.var(self.handles['x'][(min(i, j), max(i, j))])

    def bounds(self, var_id: int) -> tuple[float, float]:
        variable = self.model.variables[var_id]
        return variable.lower, variable.upper

    def expr_bounds(self, expr: LinExpr) -> tuple[float, float]:
        """Interval an expression can take under the variable bounds alone."""
        low = high = expr.constant
        for var_id, coef in expr.terms.items():
            lower, upper = self.bounds(var_id)
            if coef >= 0:
                low += coef * lower
                high += coef * upper
            else:
                low += coef * upper
                high += coef * lower
        return low, high

    def occurrence(self, base: str) -> str:
        """Suffix distinguishing repeated uses of the same symbol family."""
        count = self._occurrences.get(base, 0) + 1
        self._occurrences[base] = count
        return '' if count == 1 else f'_c{count}'

    def slack_pair(self, base: str, index: tuple, minus_upper: float,
                   plus_upper: float) -> tuple[int, int]:
        """Add a (minus, plus) slack pair bounded by the largest possible violation."""
        if not self.slacks_enabled:
            minus_upper = plus_upper = 0.0
        minus = self.variable((f'{base}_minus', *index), upper=max(0.0, minus_upper))
        plus = self.variable((f'{base}_plus', *index), upper=max(0.0, plus_upper))
        return minus, plus

    def add_slack_group(self, label: str, index: int, pairs: list[tuple[int, int]]) -> SlackGroup:
        group = SlackGroup(label, index, tuple(pairs))
        self.registry.add_slack_group(group)
        logger.debug('Constraint %s: %d slack pairs', label, len(pairs))
        return group
