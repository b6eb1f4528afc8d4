"""Exhaustive feasibility scan of a spec."""

import logging
from concurrent.futures import ProcessPoolExecutor

from config import FormulationConfig
from formulation import NetworkSpec, ObjectiveMode

from ._utils import ScanPartial, graph_from_mask, pair_order, scan_range, spec_digest
from .models import OracleReport

logger = logging.getLogger(__name__)


def feasible_graphs(spec: NetworkSpec, workers: int = 1,
                    tolerance: float = FormulationConfig.ORACLE_TOL) -> OracleReport:
    """Check every labeled graph on spec.n nodes and group the feasible ones.

    The mask range is split into contiguous chunks; with several workers the
    chunks run in a process pool. Partial results merge independently of
    completion order, with the smallest mask kept as witness.

    Args:
        spec: Specification with n <= 6
        workers: Number of processes
        tolerance: Band membership tolerance

    Returns:
        OracleReport
    """
    n = spec.n
    if not 2 <= n <= FormulationConfig.ORACLE_MAX_N:
        raise ValueError(f'The oracle supports 2 <= n <= {FormulationConfig.ORACLE_MAX_N}, got {n}')
    total = 1 << len(pair_order(n))
    maximize = spec.objective.mode is ObjectiveMode.MAXIMIZE

    chunk = max(1, -(-total // max(1, workers * 4)))
    ranges = [(start, min(start + chunk, total)) for start in range(0, total, chunk)]
    merged = ScanPartial()
    if workers > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(scan_range, spec, start, stop, tolerance) for start, stop in ranges]
            for future in futures:
                merged.merge(future.result(), maximize)
    else:
        for start, stop in ranges:
            merged.merge(scan_range(spec, start, stop, tolerance), maximize)

    report = OracleReport(n, spec_digest(spec))
    report.labeled_feasible_count = merged.labeled_feasible
    report.admissible_count = merged.admissible
    report.feasible_keys = set(merged.witnesses)
    report.witnesses = {key: graph_from_mask(n, mask) for key, mask in merged.witnesses.items()}
    if merged.best_slack is not None:
        report.optimal_slack = merged.best_slack[0]
        report.slack_witness = graph_from_mask(n, merged.best_slack[1])
    if merged.best_value is not None:
        report.optimum = merged.best_value[0]
        report.optimum_witness = graph_from_mask(n, merged.best_value[1])
    logger.info('Oracle n=%d: %d of %d labeled graphs feasible in %d classes',
                n, report.labeled_feasible_count, total, report.class_count)
    return report
