"""Data models for graphs and property reports."""

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

import networkx as nx


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on nodes 1..n with normalized edges (i < j)."""
    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f'Graph needs at least 2 nodes, got {self.n}')
        for i, j in self.edges:
            if not 1 <= i < j <= self.n:
                raise ValueError(f'Edge ({i}, {j}) is not normalized or out of range')

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> 'Graph':
        """Build a graph from unordered pairs, normalizing orientation."""
        edges = set()
        for i, j in pairs:
            if i == j:
                raise ValueError(f'Self-loop on node {i}')
            edges.add((min(i, j), max(i, j)))
        return cls(n, frozenset(edges))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self) -> list[set[int]]:
        """Neighbour sets; index 0 is unused so node i maps to entry i."""
        adjacency: list[set[int]] = [set() for _ in range(self.n + 1)]
        for i, j in self.edges:
            adjacency[i].add(j)
            adjacency[j].add(i)
        return adjacency

    def degrees(self) -> list[int]:
        """Degrees of nodes 1..n (list index 0 is node 1)."""
        adjacency = self.neighbors()
        return [len(adjacency[i]) for i in range(1, self.n + 1)]

    def relabel(self, mapping: dict[int, int]) -> 'Graph':
        return Graph.from_edges(self.n, ((mapping[i], mapping[j]) for i, j in self.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.sorted_edges())
        return graph


@dataclass(frozen=True)
class PropertyReport:
    """Every collective property of one graph.

    Per-node tuples are indexed by node - 1. Path scalars are None when the
    graph is disconnected; dist holds math.inf for unreachable pairs.
    """
    n: int
    degrees: tuple[int, ...]
    triplets: tuple[int, ...]
    triangles: tuple[int, ...]
    local_cc: tuple[Optional[float], ...]
    avg_cc: float
    global_cc: Optional[float]
    dist: tuple[tuple[float, ...], ...]
    connected: bool
    diameter: Optional[int]
    apl: Optional[float]
    cpl: Optional[tuple[int, int]]
    closeness: Optional[tuple[float, ...]]
    sdn: tuple[int, ...]
    nnd: tuple[int, ...]
    adn: tuple[Optional[float], ...]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def to_dict(self) -> dict[str, Any]:
        return {
            'n': self.n,
            'edges': self.edge_count,
            'degrees': list(self.degrees),
            'triangles': list(self.triangles),
            'local_cc': list(self.local_cc),
            'avg_cc': self.avg_cc,
            'global_cc': self.global_cc,
            'connected': self.connected,
            'diameter': self.diameter,
            'apl': self.apl,
            'cpl': list(self.cpl) if self.cpl else None,
            'closeness': list(self.closeness) if self.closeness else None,
            'sdn': list(self.sdn),
            'nnd': list(self.nnd),
            'adn': {str(q): value for q, value in enumerate(self.adn) if value is not None},
        }


@dataclass(frozen=True)
class ConstraintCheck:
    """Outcome of one property constraint on one graph.

    Attributes:
        label: Constraint label
        passed: True when the property lies in its band
        value: Measured value (shape depends on the constraint), None if undefined
        deviation: Minimum slack the relaxed rows need, None when inadmissible
        reason: Short explanation for failures
    """
    label: str
    passed: bool
    value: Any = None
    deviation: Optional[float] = None
    reason: str = ''


@dataclass(frozen=True)
class SpecCheckReport:
    """Verdict of a graph against a whole specification."""
    passed: bool
    admissible: bool
    checks: tuple[ConstraintCheck, ...] = field(default_factory=tuple)
    total_deviation: Optional[float] = None
    reason: str = ''

    def failures(self) -> list[ConstraintCheck]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            'passed': self.passed,
            'admissible': self.admissible,
            'total_deviation': self.total_deviation,
            'reason': self.reason,
            'checks': [
                {
                    'label': check.label,
                    'passed': check.passed,
                    'value': check.value,
                    'deviation': check.deviation,
                    'reason': check.reason,
                }
                for check in self.checks
            ],
        }
