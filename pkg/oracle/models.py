"""Data models for the brute-force oracle."""

from dataclasses import dataclass, field
from typing import Any, Optional

from graphs import Graph, format_edge_list


@dataclass
class OracleReport:
    """Feasible isomorphism classes of a spec over every labeled graph.

    Attributes:
        n: Node count
        spec_digest: sha256 of the canonical spec JSON
        feasible_keys: Canonical keys of the feasible classes
        labeled_feasible_count: Number of feasible labeled graphs
        witnesses: First feasible labeled graph per class, by key
        admissible_count: Labeled graphs the model does not exclude outright
        optimal_slack: Minimum total deviation over admissible graphs
        slack_witness: A graph attaining optimal_slack
        optimum: Extremum of the objective property over feasible graphs
        optimum_witness: A graph attaining optimum
    """
    n: int
    spec_digest: str
    feasible_keys: set[bytes] = field(default_factory=set)
    labeled_feasible_count: int = 0
    witnesses: dict[bytes, Graph] = field(default_factory=dict)
    admissible_count: int = 0
    optimal_slack: Optional[float] = None
    slack_witness: Optional[Graph] = None
    optimum: Optional[float] = None
    optimum_witness: Optional[Graph] = None

    @property
    def class_count(self) -> int:
        return len(self.feasible_keys)

    @property
    def feasible(self) -> bool:
        return self.labeled_feasible_count > 0

    def to_dict(self) -> dict[str, Any]:
        def edges(graph: Optional[Graph]) -> Optional[str]:
            return format_edge_list(graph) if graph is not None else None

        return {
            'n': self.n,
            'spec_digest': self.spec_digest,
            'labeled_feasible_count': self.labeled_feasible_count,
            'admissible_count': self.admissible_count,
            'classes': {key.hex(): edges(self.witnesses[key]) for key in sorted(self.feasible_keys)},
            'optimal_slack': self.optimal_slack,
            'slack_witness': edges(self.slack_witness),
            'optimum': self.optimum,
            'optimum_witness': edges(self.optimum_witness),
        }
