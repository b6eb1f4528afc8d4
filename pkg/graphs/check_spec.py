"""Check a graph against a network specification."""

import math
from typing import Optional

import numpy as np
from scipy.optimize import linear_sum_assignment

from config import FormulationConfig
from formulation.models import (
    AdnByDegree,
    AveragePathLength,
    AvgClustering,
    CharacteristicPathLength,
    ClosenessSequence,
    DegreeBounds,
    DegreeSequence,
    Diameter,
    GlobalClustering,
    MinDegreeSpan,
    MotifCount,
    NetworkSpec,
    NonNull,
    PropertyConstraint,
    constraint_label,
)

from .compute_report import compute_report
from .count_motifs import count_motifs
from .models import ConstraintCheck, Graph, PropertyReport, SpecCheckReport


def band_distance(value: float, band: tuple[float, float]) -> float:
    """Distance from a value to a closed interval."""
    return max(0.0, band[0] - value, value - band[1])


def inverse_band(band: tuple[float, float], n: int) -> tuple[float, float]:
    """Map a closeness band to the matching band on mean distance."""
    lo, hi = band
    return 1.0 / hi, (1.0 / lo if lo > 0 else n / 2)


def _admissibility(report: PropertyReport, spec: NetworkSpec) -> str:
    if spec.uses_shortest_paths and not report.connected:
        return 'disconnected graph while shortest paths are encoded'
    if spec.gcc_fractional and sum(report.triplets) == 0:
        return 'no two-paths while global clustering is specified'
    hard = spec.hard_degree_range
    if hard and any(not hard[0] <= d <= hard[1] for d in report.degrees):
        return f'degree outside the hard range {list(hard)}'
    return ''


def _check_closeness(report: PropertyReport, constraint: ClosenessSequence,
                     tolerance: float) -> ConstraintCheck:
    n = report.n
    bands = constraint.bands
    closeness = report.closeness
    misses = np.array([[0.0 if band_distance(c, band) <= tolerance else 1.0 for band in bands]
                       for c in closeness])
    rows, cols = linear_sum_assignment(misses)
    passed = misses[rows, cols].sum() == 0

    mean_distance = [1.0 / c for c in closeness]
    cost = np.array([[band_distance(p, inverse_band(band, n)) for band in bands]
                     for p in mean_distance])
    rows, cols = linear_sum_assignment(cost)
    return ConstraintCheck('', bool(passed), list(closeness), float(cost[rows, cols].sum()),
                           '' if passed else 'no one-to-one band assignment')


def _check_adn(report: PropertyReport, constraint: AdnByDegree, neighbor_degrees: list[int],
               graph: Graph, tolerance: float) -> ConstraintCheck:
    adjacency = graph.neighbors()
    deviation = 0.0
    values = {}
    failed = []
    for q, (lo, hi) in constraint.bands:
        members = [i for i in range(1, report.n + 1) if report.degrees[i - 1] == q]
        count = len(members)
        total = sum(neighbor_degrees[j - 1] for i in members for j in adjacency[i])
        deviation += max(0.0, lo * q * count - total) + max(0.0, total - hi * q * count)
        adn = report.adn[q] if q < report.n else None
        values[str(q)] = adn
        if adn is not None and band_distance(adn, (lo, hi)) > tolerance:
            failed.append(q)
    reason = f'degree classes {failed} out of band' if failed else ''
    return ConstraintCheck('', not failed, values, deviation, reason)


def _check_one(constraint: PropertyConstraint, graph: Graph, report: PropertyReport,
               spec: NetworkSpec, tolerance: float) -> ConstraintCheck:
    fixed = spec.fixed_degrees
    view = list(fixed) if fixed is not None else list(report.degrees)
    degrees = report.degrees

    if isinstance(constraint, DegreeBounds):
        nodes = constraint.nodes or range(1, report.n + 1)
        band = (constraint.lower, constraint.upper)
        deviation = sum(band_distance(degrees[i - 1], band) for i in nodes)
        return ConstraintCheck('', deviation <= tolerance, [degrees[i - 1] for i in nodes], deviation)

    if isinstance(constraint, DegreeSequence):
        deviation = sum(abs(d - target) for d, target in zip(degrees, constraint.values))
        passed = sorted(degrees, reverse=True) == sorted(constraint.values, reverse=True)
        return ConstraintCheck('', passed, list(degrees), float(deviation),
                               '' if passed else 'degree multiset differs')

    if isinstance(constraint, AvgClustering):
        if fixed is not None:
            measured = sum(t / math.comb(d, 2) if d >= 2 else 0.0
                           for t, d in zip(report.triangles, view)) / report.n
        else:
            measured = report.avg_cc
        deviation = band_distance(measured, constraint.band)
        passed = band_distance(report.avg_cc, constraint.band) <= tolerance
        return ConstraintCheck('', passed, report.avg_cc, deviation)

    if isinstance(constraint, GlobalClustering):
        lo, hi = constraint.band
        closed = sum(report.triangles)
        if fixed is not None:
            denominator = sum(math.comb(d, 2) for d in view)
            deviation = band_distance(closed / denominator, constraint.band) if denominator else None
        else:
            paths = sum(report.triplets)
            deviation = max(0.0, lo * paths - closed) + max(0.0, closed - hi * paths) if paths else None
        if report.global_cc is None:
            return ConstraintCheck('', False, None, deviation, 'undefined')
        passed = band_distance(report.global_cc, constraint.band) <= tolerance
        return ConstraintCheck('', passed, report.global_cc, deviation)

    if isinstance(constraint, (AveragePathLength, Diameter)):
        value = report.apl if isinstance(constraint, AveragePathLength) else report.diameter
        if value is None:
            return ConstraintCheck('', False, None, None, 'undefined')
        deviation = band_distance(value, constraint.band)
        return ConstraintCheck('', deviation <= tolerance, value, deviation)

    if isinstance(constraint, CharacteristicPathLength):
        if report.cpl is None:
            return ConstraintCheck('', False, None, None, 'undefined')
        lo, hi = report.cpl
        deviation = max(0.0, constraint.band[0] - hi, lo - constraint.band[1])
        return ConstraintCheck('', deviation <= tolerance, [lo, hi], deviation)

    if isinstance(constraint, ClosenessSequence):
        if report.closeness is None:
            return ConstraintCheck('', False, None, None, 'undefined')
        return _check_closeness(report, constraint, tolerance)

    if isinstance(constraint, AdnByDegree):
        return _check_adn(report, constraint, view, graph, tolerance)

    if isinstance(constraint, MinDegreeSpan):
        span = max(degrees) - min(degrees)
        deviation = float(max(0, constraint.span - span))
        return ConstraintCheck('', deviation <= tolerance, span, deviation)

    if isinstance(constraint, NonNull):
        deviation = 0.0 if graph.edges else 1.0
        return ConstraintCheck('', deviation == 0.0, len(graph.edges), deviation)

    if isinstance(constraint, MotifCount):
        count = count_motifs(graph, constraint.motif)
        deviation = band_distance(count, constraint.band)
        return ConstraintCheck('', deviation <= tolerance, count, deviation)

    raise TypeError(f'Unsupported constraint: {constraint!r}')


def check_spec(graph: Graph, spec: NetworkSpec, tolerance: float = FormulationConfig.ORACLE_TOL,
               report: Optional[PropertyReport] = None) -> SpecCheckReport:
    """Evaluate every property constraint of a spec on a graph.

    Each check carries the verdict on the true property value and the
    deviation, i.e. the smallest slack the relaxed model rows need for this
    labeled graph. A graph the model excludes outright (for instance a
    disconnected graph when shortest paths are encoded) is inadmissible:
    it fails and has no total deviation.

    Args:
        graph: Graph to check
        spec: Specification with the same node count
        tolerance: Absolute tolerance on band membership
        report: Precomputed property report, if available

    Returns:
        SpecCheckReport with one ConstraintCheck per constraint
    """
    if spec.n != graph.n:
        raise ValueError(f'Spec is for n={spec.n}, graph has n={graph.n}')
    report = report or compute_report(graph)

    checks = []
    for index, constraint in enumerate(spec.constraints):
        check = _check_one(constraint, graph, report, spec, tolerance)
        checks.append(ConstraintCheck(constraint_label(index, constraint), check.passed,
                                      check.value, check.deviation, check.reason))

    reason = _admissibility(report, spec)
    admissible = not reason
    total = None
    if admissible:
        total = float(sum(check.deviation for check in checks))
    passed = admissible and all(check.passed for check in checks)
    return SpecCheckReport(passed, admissible, tuple(checks), total, reason)
