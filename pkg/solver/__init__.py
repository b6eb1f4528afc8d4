"""Embedded MILP solver: LP relaxations, branch-and-bound and enumeration."""

from .models import (
    BranchingRule,
    EnumerationResult,
    EnumerationStatus,
    LpMethod,
    LpResult,
    LpStatus,
    SlackEntry,
    SolveOptions,
    SolveResult,
    SolveStats,
    SolveStatus,
)

from .solve_relaxation import solve_relaxation
from .solve import solve
from .enumerate_nonisomorphic import enumerate_nonisomorphic
from .import_solution import import_solution

__all__ = [
    # Models
    'BranchingRule',
    'EnumerationResult',
    'EnumerationStatus',
    'LpMethod',
    'LpResult',
    'LpStatus',
    'SlackEntry',
    'SolveOptions',
    'SolveResult',
    'SolveStats',
    'SolveStatus',
    # Operations
    'solve_relaxation',
    'solve',
    'enumerate_nonisomorphic',
    'import_solution',
]
