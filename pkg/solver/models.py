"""Data models for the embedded MILP solver."""

from dataclasses import asdict, dataclass, field, fields
from enum import Enum
from typing import Any, Optional

import numpy as np

from config import SolverConfig
from graphs import Graph, format_edge_list


class SolveStatus(Enum):
    """Outcome of a MILP solve or a solution import."""
    OPTIMAL = 'optimal'
    INFEASIBLE = 'infeasible'
    LIMIT_REACHED = 'limit_reached'
    FEASIBLE = 'feasible'


class LpStatus(Enum):
    """Outcome of one LP relaxation."""
    OPTIMAL = 'optimal'
    INFEASIBLE = 'infeasible'
    UNBOUNDED = 'unbounded'
    ITERATION_LIMIT = 'iteration_limit'
    NUMERICAL = 'numerical'


class LpMethod(Enum):
    """LP engine used for relaxations."""
    HIGHS = 'highs'
    SIMPLEX = 'simplex'


class BranchingRule(Enum):
    """Choice of the branching variable among fractional binaries."""
    PRIORITY_MOST_FRACTIONAL = 'priority_most_fractional'
    MOST_FRACTIONAL = 'most_fractional'


class EnumerationStatus(Enum):
    """Why enumeration stopped."""
    COMPLETE = 'complete'
    EXHAUSTED = 'exhausted'
    UNATTAINABLE = 'unattainable'
    LIMIT = 'limit'


@dataclass(frozen=True)
class SolveOptions:
    """Branch-and-bound settings.

    Attributes:
        time_limit_s: Wall-clock budget, None for unlimited
        node_limit: Maximum number of processed nodes, None for unlimited
        abs_gap: Absolute optimality gap at which search stops
        integrality_tol: Distance from 0/1 accepted as integral
        feasibility_tol: Row and bound violation accepted as feasible
        branching: Branching variable rule
        deterministic: Process parallel node batches in selection order
        worker_count: Threads solving node relaxations
        lp_method: LP engine
    """
    time_limit_s: Optional[float] = SolverConfig.TIME_LIMIT_S
    node_limit: Optional[int] = None
    abs_gap: float = SolverConfig.ABS_GAP
    integrality_tol: float = SolverConfig.INTEGRALITY_TOL
    feasibility_tol: float = SolverConfig.FEASIBILITY_TOL
    branching: BranchingRule = BranchingRule.PRIORITY_MOST_FRACTIONAL
    deterministic: bool = True
    worker_count: int = 1
    lp_method: LpMethod = LpMethod.HIGHS

    def __post_init__(self):
        for name in ('abs_gap', 'integrality_tol', 'feasibility_tol'):
            if not getattr(self, name) > 0:
                raise ValueError(f'{name} must be positive')
        if self.time_limit_s is not None and self.time_limit_s <= 0:
            raise ValueError('time_limit_s must be positive')
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError('node_limit must be at least 1')
        if self.worker_count < 1:
            raise ValueError('worker_count must be at least 1')

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> 'SolveOptions':
        """Build options from a spec file's solver block; unknown keys raise ValueError."""
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f'Unknown solver options: {unknown}')
        values = dict(data)
        try:
            if 'branching' in values:
                values['branching'] = BranchingRule(values['branching'])
            if 'lp_method' in values:
                values['lp_method'] = LpMethod(values['lp_method'])
        except ValueError as e:
            raise ValueError(f'Invalid solver option: {e}') from None
        return cls(**values)

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data['branching'] = self.branching.value
        data['lp_method'] = self.lp_method.value
        return data


@dataclass
class LpResult:
    """Solution of one relaxation; objective is in the model's own sense."""
    status: LpStatus
    values: Optional[np.ndarray] = None
    objective: Optional[float] = None
    iterations: int = 0
    message: str = ''


@dataclass
class SolveStats:
    nodes: int = 0
    lp_iterations: int = 0
    wall_time_s: float = 0.0
    incumbents: int = 0
    numerical_failures: int = 0
    best_bound: Optional[float] = None


@dataclass(frozen=True)
class SlackEntry:
    """Slack used by one property constraint."""
    label: str
    minus: float
    plus: float
    details: dict[str, float] = field(default_factory=dict)

    @property
    def total(self) -> float:
        return self.minus + self.plus


@dataclass
class SolveResult:
    """Result of solve or import_solution.

    Attributes:
        status: Solve outcome
        objective: Objective value of the incumbent, if any
        assignment: Variable name to value
        graphs: Graph read from the edge variables of the incumbent
        slack_report: Slack per property constraint
        stats: Search statistics
        message: Human-readable summary
    """
    status: SolveStatus
    objective: Optional[float] = None
    assignment: dict[str, float] = field(default_factory=dict)
    graphs: list[Graph] = field(default_factory=list)
    slack_report: list[SlackEntry] = field(default_factory=list)
    stats: SolveStats = field(default_factory=SolveStats)
    message: str = ''

    @property
    def total_slack(self) -> float:
        return sum(entry.total for entry in self.slack_report)

    @property
    def graph(self) -> Optional[Graph]:
        return self.graphs[0] if self.graphs else None

    @property
    def has_solution(self) -> bool:
        return bool(self.assignment)

    def to_dict(self) -> dict[str, Any]:
        return {
            'status': self.status.value,
            'objective': self.objective,
            'total_slack': self.total_slack if self.has_solution else None,
            'slacks': [{'label': e.label, 'minus': e.minus, 'plus': e.plus, 'details': e.details}
                       for e in self.slack_report],
            'graphs': [format_edge_list(g) for g in self.graphs],
            'stats': asdict(self.stats),
            'message': self.message,
        }


@dataclass
class EnumerationResult:
    """Distinct graphs found by repeated solves with no-good cuts."""
    status: EnumerationStatus
    graphs: list[Graph] = field(default_factory=list)
    solves: int = 0
    duplicates: int = 0
    wall_time_s: float = 0.0
    message: str = ''
