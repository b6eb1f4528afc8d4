"""Data models for mixed-integer linear programs."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Union


class ModelError(ValueError):
    """Raised when a model is constructed inconsistently."""


class VariableKind(Enum):
    """Domain of a decision variable."""
    BINARY = 'binary'
    CONTINUOUS = 'continuous'


class ConstraintSense(Enum):
    """Relation between a constraint's left-hand side and its rhs."""
    LE = '<='
    EQ = '='
    GE = '>='


class ObjectiveSense(Enum):
    """Optimization direction."""
    MINIMIZE = 'min'
    MAXIMIZE = 'max'


@dataclass(frozen=True)
class Variable:
    """A column of the model."""
    id: int
    name: str
    kind: VariableKind
    lower: float
    upper: float
    branch_priority: int = 0

    @property
    def is_binary(self) -> bool:
        return self.kind is VariableKind.BINARY


@dataclass(frozen=True)
class LinearConstraint:
    """A row of the model with pre-merged terms."""
    id: int
    name: str
    terms: tuple[tuple[int, float], ...]
    sense: ConstraintSense
    rhs: float


@dataclass(frozen=True)
class Objective:
    """Objective direction and linear terms."""
    sense: ObjectiveSense
    terms: tuple[tuple[int, float], ...] = ()


class LinExpr:
    """Affine expression over variable ids: sum of coef * var plus a constant.

    Terms keep insertion order so that rows built from an expression are
    reproducible.
    """

    __slots__ = ('terms', 'constant')

    def __init__(self, terms: Optional[Iterable[tuple[int, float]]] = None, constant: float = 0.0):
        self.terms: dict[int, float] = {}
        self.constant = float(constant)
        if terms:
            for var_id, coef in terms:
                self.terms[var_id] = self.terms.get(var_id, 0.0) + coef

    @classmethod
    def var(cls, var_id: int, coef: float = 1.0) -> 'LinExpr':
        return cls(((var_id, coef),))

    @classmethod
    def sum(cls, items: Iterable[Union['LinExpr', int, float]]) -> 'LinExpr':
        """Add up expressions and numeric constants."""
        total = cls()
        for item in items:
            total._accumulate(item, 1.0)
        return total

    def copy(self) -> 'LinExpr':
        out = LinExpr(constant=self.constant)
        out.terms = dict(self.terms)
        return out

    def _accumulate(self, other: Union['LinExpr', int, float], factor: float) -> None:
        if isinstance(other, LinExpr):
            for var_id, coef in other.terms.items():
                self.terms[var_id] = self.terms.get(var_id, 0.0) + factor * coef
            self.constant += factor * other.constant
        elif isinstance(other, (int, float)):
            self.constant += factor * other
        else:
            return NotImplemented

    def __add__(self, other):
        out = self.copy()
        if out._accumulate(other, 1.0) is NotImplemented:
            return NotImplemented
        return out

    __radd__ = __add__

    def __sub__(self, other):
        out = self.copy()
        if out._accumulate(other, -1.0) is NotImplemented:
            return NotImplemented
        return out

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self * -1.0

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, float)):
            return NotImplemented
        out = LinExpr(constant=self.constant * scalar)
        out.terms = {var_id: coef * scalar for var_id, coef in self.terms.items()}
        return out

    __rmul__ = __mul__

    def value(self, values) -> float:
        """Evaluate against a sequence or mapping indexed by variable id."""
        return self.constant + sum(coef * values[var_id] for var_id, coef in self.terms.items())

    def __repr__(self):
        parts = [f'{coef:+g}*v{var_id}' for var_id, coef in self.terms.items()]
        return f"LinExpr({' '.join(parts) or '0'} {self.constant:+g})"


class MilpModel:
    """Solver-agnostic MILP: ordered variables, ordered constraints, objective.

    Attributes:
        name: model name used in exports
        variables: list of Variable, indexed by id
        constraints: list of LinearConstraint, indexed by id
        objective: current Objective
    """

    def __init__(self, name: str = 'netgen'):
        self.name = name
        self.variables: list[Variable] = []
        self.constraints: list[LinearConstraint] = []
        self.objective = Objective(ObjectiveSense.MINIMIZE)
        self._variable_ids: dict[str, int] = {}
        self._constraint_names: set[str] = set()
        self._frozen = False

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    @property
    def num_constraints(self) -> int:
        return len(self.constraints)

    @property
    def frozen(self) -> bool:
        return self._frozen

    def freeze(self) -> None:
        """Mark the model complete; further additions raise ModelError."""
        self._frozen = True

    def copy(self) -> 'MilpModel':
        """Return an unfrozen copy sharing the immutable rows and columns."""
        clone = MilpModel(self.name)
        clone.variables = list(self.variables)
        clone.constraints = list(self.constraints)
        clone.objective = self.objective
        clone._variable_ids = dict(self._variable_ids)
        clone._constraint_names = set(self._constraint_names)
        return clone

    def _check_mutable(self) -> None:
        if self._frozen:
            raise ModelError(f'Model {self.name} is frozen')

    def add_variable(self, name: str, kind: VariableKind = VariableKind.CONTINUOUS,
                     lower: float = 0.0, upper: float = 1.0, branch_priority: int = 0) -> int:
        """Append a variable.

        Args:
            name: Unique variable name
            kind: Binary or continuous
            lower: Lower bound
            upper: Upper bound
            branch_priority: Higher values are branched on first

        Returns:
            The new variable id
        """
        self._check_mutable()
        if name in self._variable_ids:
            raise ModelError(f'Duplicate variable name: {name}')
        if name == 'e' or not name or any(ch.isspace() for ch in name):
            raise ModelError(f'Invalid variable name: {name!r}')
        lower = float(lower)
        upper = float(upper)
        if math.isnan(lower) or math.isnan(upper) or lower > upper:
            raise ModelError(f'Inverted bounds for {name}: [{lower}, {upper}]')
        if kind is VariableKind.BINARY and (lower not in (0.0, 1.0) or upper not in (0.0, 1.0)):
            raise ModelError(f'Binary variable {name} needs bounds in {{0, 1}}')
        var_id = len(self.variables)
        self.variables.append(Variable(var_id, name, kind, lower, upper, branch_priority))
        self._variable_ids[name] = var_id
        return var_id

    def _merge_terms(self, terms: Iterable[tuple[int, float]]) -> tuple[tuple[int, float], ...]:
        merged: dict[int, float] = {}
        for var_id, coef in terms:
            if not isinstance(var_id, int) or not 0 <= var_id < len(self.variables):
                raise ModelError(f'Unknown variable id: {var_id}')
            merged[var_id] = merged.get(var_id, 0.0) + float(coef)
        return tuple((var_id, coef) for var_id, coef in merged.items() if coef != 0.0)

    def add_linear_constraint(self, name: str, terms: Iterable[tuple[int, float]],
                              sense: ConstraintSense, rhs: float) -> int:
        """Append a constraint, merging repeated variables.

        Args:
            name: Unique constraint name
            terms: (variable id, coefficient) pairs
            sense: Constraint sense
            rhs: Right-hand side

        Returns:
            The new constraint id
        """
        self._check_mutable()
        if name in self._constraint_names:
            raise ModelError(f'Duplicate constraint name: {name}')
        merged = self._merge_terms(terms)
        constraint_id = len(self.constraints)
        self.constraints.append(LinearConstraint(constraint_id, name, merged, sense, float(rhs)))
        self._constraint_names.add(name)
        return constraint_id

    def set_objective(self, sense: ObjectiveSense, terms: Iterable[tuple[int, float]]) -> None:
        """Replace the objective."""
        self._check_mutable()
        self.objective = Objective(sense, self._merge_terms(terms))

    def variable_id(self, name: str) -> int:
        """Look up a variable id by name (KeyError when absent)."""
        return self._variable_ids[name]

    def has_variable(self, name: str) -> bool:
        return name in self._variable_ids

    def validate(self) -> None:
        """Check every term references a live variable."""
        count = len(self.variables)
        for constraint in self.constraints:
            for var_id, _ in constraint.terms:
                if not 0 <= var_id < count:
                    raise ModelError(f'Constraint {constraint.name} references unknown id {var_id}')
        for var_id, _ in self.objective.terms:
            if not 0 <= var_id < count:
                raise ModelError(f'Objective references unknown id {var_id}')
