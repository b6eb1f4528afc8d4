"""Private helpers for the oracle scans."""

import hashlib
import json
from dataclasses import dataclass, field
from typing import Optional

from formulation import NetworkSpec, ObjectiveMode, PropertyName, spec_to_dict
from graphs import Graph, PropertyReport, canonical_key, check_spec, compute_report


def pair_order(n: int) -> list[tuple[int, int]]:
    """Node pairs in bit order: bit k of a mask is the k-th pair (i < j)."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def graph_from_mask(n: int, mask: int, pairs: Optional[list[tuple[int, int]]] = None) -> Graph:
    pairs = pairs or pair_order(n)
    return Graph(n, frozenset(pair for bit, pair in enumerate(pairs) if mask >> bit & 1))


def spec_digest(spec: NetworkSpec) -> str:
    text = json.dumps(spec_to_dict(spec), sort_keys=True)
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def property_value(report: PropertyReport, prop: PropertyName, maximize: bool) -> Optional[float]:
    """Objective value of a graph, None when undefined.

    The median path length of an even pair count is an interval; the model
    may place it anywhere inside, so the favourable end counts.
    """
    if prop is PropertyName.AVG_CC:
        return report.avg_cc
    if prop is PropertyName.GLOBAL_CC:
        return report.global_cc
    if prop is PropertyName.APL:
        return report.apl
    if prop is PropertyName.DIAMETER:
        return None if report.diameter is None else float(report.diameter)
    if prop is PropertyName.CPL:
        if report.cpl is None:
            return None
        return float(report.cpl[1] if maximize else report.cpl[0])
    return float(report.edge_count)


@dataclass
class ScanPartial:
    """Findings over one range of masks; witnesses are the smallest masks."""
    labeled_feasible: int = 0
    admissible: int = 0
    witnesses: dict[bytes, int] = field(default_factory=dict)
    best_slack: Optional[tuple[float, int]] = None
    best_value: Optional[tuple[float, int]] = None

    def merge(self, other: 'ScanPartial', maximize: bool) -> None:
        self.labeled_feasible += other.labeled_feasible
        self.admissible += other.admissible
        for key, mask in other.witnesses.items():
            if key not in self.witnesses or mask < self.witnesses[key]:
                self.witnesses[key] = mask
        if other.best_slack is not None and (self.best_slack is None or other.best_slack < self.best_slack):
            self.best_slack = other.best_slack
        if other.best_value is not None and (
                self.best_value is None or _better(other.best_value, self.best_value, maximize)):
            self.best_value = other.best_value


def _better(candidate: tuple[float, int], current: tuple[float, int], maximize: bool) -> bool:
    if candidate[0] != current[0]:
        return candidate[0] > current[0] if maximize else candidate[0] < current[0]
    return candidate[1] < current[1]


def scan_range(spec: NetworkSpec, start: int, stop: int, tolerance: float) -> ScanPartial:
    """Check the graphs with masks in [start, stop) against the spec."""
    pairs = pair_order(spec.n)
    prop = spec.objective.property
    maximize = spec.objective.mode is ObjectiveMode.MAXIMIZE
    extremum = spec.objective.mode is not ObjectiveMode.MIN_SLACK and prop is not None
    partial = ScanPartial()
    for mask in range(start, stop):
        graph = graph_from_mask(spec.n, mask, pairs)
        report = compute_report(graph)
        verdict = check_spec(graph, spec, tolerance, report)
        if verdict.admissible:
            partial.admissible += 1
            candidate = (verdict.total_deviation, mask)
            if partial.best_slack is None or candidate < partial.best_slack:
                partial.best_slack = candidate
        if not verdict.passed:
            continue
        partial.labeled_feasible += 1
        key = canonical_key(graph)
        partial.witnesses.setdefault(key, mask)
        if extremum:
            value = property_value(report, prop, maximize)
            if value is not None and (partial.best_value is None
                                      or _better((value, mask), partial.best_value, maximize)):
                partial.best_value = (value, mask)
    return partial
