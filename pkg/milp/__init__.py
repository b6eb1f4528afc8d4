"""Solver-agnostic MILP representation."""

from .models import (
    ConstraintSense,
    LinearConstraint,
    LinExpr,
    MilpModel,
    ModelError,
    Objective,
    ObjectiveSense,
    Variable,
    VariableKind,
)
from .write_lp_format import format_number, write_lp_format
from .read_assignment import read_assignment

__all__ = [
    # Models
    'ConstraintSense',
    'LinearConstraint',
    'LinExpr',
    'MilpModel',
    'ModelError',
    'Objective',
    'ObjectiveSense',
    'Variable',
    'VariableKind',
    # Text formats
    'format_number',
    'write_lp_format',
    'read_assignment',
]
