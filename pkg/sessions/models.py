"""Data models for command runs."""

import json
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class GraphRecord:
    """One emitted graph with its re-computed properties and verdict."""
    edges: list[tuple[int, int]]
    n: int
    properties: dict[str, Any]
    check: dict[str, Any]
    path: Optional[str] = None

    @property
    def passed(self) -> bool:
        return bool(self.check.get('passed'))


@dataclass
class RunReport:
    """Summary written next to the graphs of a run.

    Attributes:
        spec: Echo of the spec document
        status: Solver or enumeration status
        objective: Objective value, if any
        total_slack: Sum of the slack table
        slacks: Slack table, one row per property constraint
        graphs: Emitted graphs
        timings: Seconds per phase
        stats: Solver statistics
        message: Summary line
    """
    spec: dict[str, Any]
    status: str
    objective: Optional[float] = None
    total_slack: Optional[float] = None
    slacks: list[dict[str, Any]] = field(default_factory=list)
    graphs: list[GraphRecord] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    stats: dict[str, Any] = field(default_factory=dict)
    message: str = ''

    @property
    def all_verified(self) -> bool:
        return all(record.passed for record in self.graphs)

    def to_dict(self) -> dict[str, Any]:
        return {
            'spec': self.spec,
            'status': self.status,
            'objective': self.objective,
            'total_slack': self.total_slack,
            'slacks': self.slacks,
            'graphs': [
                {
                    'n': record.n,
                    'edges': [list(edge) for edge in record.edges],
                    'path': record.path,
                    'properties': record.properties,
                    'check': record.check,
                }
                for record in self.graphs
            ],
            'timings': self.timings,
            'stats': self.stats,
            'message': self.message,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=str) + '\n'
