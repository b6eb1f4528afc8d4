"""Branch-and-bound over LP relaxations."""

import heapq
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Optional

import numpy as np

from formulation.models import VariableRegistry
from milp import MilpModel

from ._utils import ModelArrays, assemble, make_result
from .models import (
    BranchingRule,
    LpMethod,
    LpResult,
    LpStatus,
    SolveOptions,
    SolveResult,
    SolveStats,
    SolveStatus,
)
from .solve_relaxation import solve_relaxation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Node:
    """Open subproblem: the parent's bound (minimization form) and its fixings."""
    bound: float
    depth: int
    fixings: tuple[tuple[int, float], ...]


class _Search:
    """State of one branch-and-bound run; costs are in minimization form."""

    def __init__(self, model: MilpModel, arrays: ModelArrays, options: SolveOptions):
        self.model = model
        self.arrays = arrays
        self.options = options
        self.stats = SolveStats()
        self.incumbent: Optional[np.ndarray] = None
        self.incumbent_cost = math.inf
        self.stack: list[_Node] = []
        self.heap: list[tuple[float, int, _Node]] = []
        self.sequence = 0
        self.numerical_nodes = 0

    # Open nodes

    def push(self, node: _Node) -> None:
        if self.incumbent is None:
            self.stack.append(node)
        else:
            heapq.heappush(self.heap, (node.bound, self.sequence, node))
        self.sequence += 1

    def switch_to_best_bound(self) -> None:
        for node in self.stack:
            heapq.heappush(self.heap, (node.bound, self.sequence, node))
            self.sequence += 1
        self.stack.clear()

    def pop_batch(self, size: int) -> list[_Node]:
        batch = []
        while len(batch) < size and (self.stack or self.heap):
            node = self.stack.pop() if self.stack else heapq.heappop(self.heap)[2]
            if node.bound < self.incumbent_cost - self.options.abs_gap:
                batch.append(node)
        return batch

    @property
    def open_count(self) -> int:
        return len(self.stack) + len(self.heap)

    def open_bound(self) -> float:
        bounds = [node.bound for node in self.stack] + [entry[0] for entry in self.heap]
        return min(bounds, default=math.inf)

    # Node work

    def relax(self, node: _Node) -> LpResult:
        lower = self.arrays.lower.copy()
        upper = self.arrays.upper.copy()
        for var_id, value in node.fixings:
            lower[var_id] = upper[var_id] = value
        method = self.options.lp_method
        result = solve_relaxation(self.model, lower, upper, method, self.arrays,
                                  self.options.feasibility_tol)
        if result.status in (LpStatus.NUMERICAL, LpStatus.ITERATION_LIMIT, LpStatus.UNBOUNDED):
            fallback = LpMethod.SIMPLEX if method is LpMethod.HIGHS else LpMethod.HIGHS
            logger.warning('LP %s at depth %d, retrying with %s', result.status.value,
                           node.depth, fallback.value)
            retry = solve_relaxation(self.model, lower, upper, fallback, self.arrays,
                                     self.options.feasibility_tol)
            retry.iterations += result.iterations
            result = retry
        return result

    def choose_branch(self, values: np.ndarray) -> Optional[int]:
        binary = self.arrays.binary
        fractionality = np.minimum(values - np.floor(values), np.ceil(values) - values)
        candidates = np.flatnonzero(binary & (fractionality > self.options.integrality_tol))
        if len(candidates) == 0:
            return None
        if self.options.branching is BranchingRule.PRIORITY_MOST_FRACTIONAL:
            top = self.arrays.priority[candidates].max()
            candidates = candidates[self.arrays.priority[candidates] == top]
        # argmax returns the first, i.e. smallest, index among ties
        return int(candidates[np.argmax(fractionality[candidates])])

    def process(self, node: _Node, result: LpResult) -> None:
        self.stats.nodes += 1
        self.stats.lp_iterations += result.iterations
        if result.status is LpStatus.INFEASIBLE:
            logger.debug('node %d depth %d infeasible', self.stats.nodes, node.depth)
            return
        if result.status is not LpStatus.OPTIMAL:
            self.numerical_nodes += 1
            self.stats.numerical_failures += 1
            logger.warning('Dropping node at depth %d after LP status %s',
                           node.depth, result.status.value)
            return

        cost = self.arrays.sense_sign * result.objective
        if cost >= self.incumbent_cost - self.options.abs_gap:
            logger.debug('node %d depth %d pruned by bound %.6g', self.stats.nodes, node.depth, cost)
            return
        values = result.values
        branch = self.choose_branch(values)
        logger.debug('node %d depth %d bound %.6g branch %s', self.stats.nodes, node.depth,
                     cost, self.model.variables[branch].name if branch is not None else '-')
        if branch is None:
            values = values.copy()
            values[self.arrays.binary] = np.round(values[self.arrays.binary])
            first = self.incumbent is None
            self.incumbent = values
            self.incumbent_cost = cost
            self.stats.incumbents += 1
            logger.info('Incumbent %d: objective %.6g after %d nodes', self.stats.incumbents,
                        self.arrays.sense_sign * cost, self.stats.nodes)
            if first:
                self.switch_to_best_bound()
            return

        near, far = (1.0, 0.0) if values[branch] >= 0.5 else (0.0, 1.0)
        # the stack pops the last push, so the nearer child goes last
        self.push(_Node(cost, node.depth + 1, node.fixings + ((branch, far),)))
        self.push(_Node(cost, node.depth + 1, node.fixings + ((branch, near),)))


def solve(model: MilpModel, options: Optional[SolveOptions] = None,
          registry: Optional[VariableRegistry] = None) -> SolveResult:
    """Solve a model to optimality or until a limit.

    Search is depth-first until the first incumbent and best-bound after.
    Only binaries with a fractional LP value are branched on. With several
    workers, batches of open nodes are relaxed concurrently; in deterministic
    mode the batch is processed in selection order.

    Args:
        model: Model to solve
        options: Solver settings
        registry: Registry used to read graphs and slacks from the solution

    Returns:
        SolveResult; on a limit the incumbent, if any, is returned
    """
    options = options or SolveOptions()
    start = time.monotonic()
    arrays = assemble(model)
    search = _Search(model, arrays, options)
    search.push(_Node(-math.inf, 0, ()))
    limit = ''

    executor = ThreadPoolExecutor(max_workers=options.worker_count) if options.worker_count > 1 else None
    try:
        while search.open_count:
            if options.time_limit_s is not None and time.monotonic() - start >= options.time_limit_s:
                limit = f'time limit of {options.time_limit_s:g}s'
                break
            if options.node_limit is not None and search.stats.nodes >= options.node_limit:
                limit = f'node limit of {options.node_limit}'
                break
            batch = search.pop_batch(options.worker_count)
            if not batch:
                continue
            if executor is None:
                results = [search.relax(node) for node in batch]
            else:
                futures = [executor.submit(search.relax, node) for node in batch]
                if options.deterministic:
                    results = [future.result() for future in futures]
                else:
                    owner = dict(zip(futures, batch))
                    finished = list(as_completed(futures))
                    batch = [owner[future] for future in finished]
                    results = [future.result() for future in finished]
            for node, result in zip(batch, results):
                search.process(node, result)
    finally:
        if executor is not None:
            executor.shutdown(wait=True)

    stats = search.stats
    stats.wall_time_s = time.monotonic() - start
    has_incumbent = search.incumbent is not None
    if limit or search.numerical_nodes:
        open_bound = min(search.open_bound(), search.incumbent_cost)
        stats.best_bound = arrays.sense_sign * open_bound if math.isfinite(open_bound) else None
    elif has_incumbent:
        stats.best_bound = arrays.sense_sign * search.incumbent_cost

    if limit:
        status = SolveStatus.LIMIT_REACHED
        message = f'Stopped at the {limit} with {"an" if has_incumbent else "no"} incumbent'
    elif search.numerical_nodes:
        status = SolveStatus.LIMIT_REACHED
        message = f'{search.numerical_nodes} nodes dropped after numerical failures'
    elif has_incumbent:
        status = SolveStatus.OPTIMAL
        message = f'Optimal after {stats.nodes} nodes'
    else:
        status = SolveStatus.INFEASIBLE
        message = f'Infeasible after {stats.nodes} nodes'
    logger.info('%s (%d LP iterations, %.2fs)', message, stats.lp_iterations, stats.wall_time_s)
    return make_result(model, registry, status, search.incumbent, stats, message)

