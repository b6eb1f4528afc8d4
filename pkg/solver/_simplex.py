"""Dense bounded-variable primal simplex.

Rows l_r <= a_r x <= u_r are rewritten as a_r x - s_r = 0 with the row
slack s_r bounded by [l_r, u_r]. Phase 1 starts from an all-slack or
artificial basis and minimizes the artificial sum; phase 2 fixes the
artificials at zero and minimizes the real cost.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from config import SolverConfig

from .models import LpStatus

logger = logging.getLogger(__name__)


@dataclass
class SimplexOutcome:
    status: LpStatus
    values: Optional[np.ndarray]
    cost: Optional[float]
    iterations: int
    message: str = ''


class _Singular(Exception):
    pass


class BoundedSimplex:
    """Revised simplex with an explicit dense basis inverse.

    Columns 0..n-1 are the structural variables, n..n+m-1 the row slacks
    (column -e_r) and n+m..n+2m-1 the artificials (column sign_r * e_r).
    Pricing is Dantzig until a run of degenerate pivots, then Bland until
    the next pivot that makes progress.
    """

    def __init__(self, cost: np.ndarray, matrix: np.ndarray, row_lower: np.ndarray,
                 row_upper: np.ndarray, lower: np.ndarray, upper: np.ndarray,
                 feasibility_tol: float = SolverConfig.FEASIBILITY_TOL,
                 optimality_tol: float = SolverConfig.OPTIMALITY_TOL,
                 pivot_tol: float = SolverConfig.PIVOT_TOL,
                 max_iterations: int = SolverConfig.SIMPLEX_MAX_ITERATIONS):
        self.m, self.n = matrix.shape
        self.matrix = matrix
        self.feasibility_tol = feasibility_tol
        self.optimality_tol = optimality_tol
        self.pivot_tol = pivot_tol
        self.max_iterations = max_iterations
        self.iterations = 0

        m, n = self.m, self.n
        self.lower = np.concatenate([lower, row_lower, np.zeros(m)])
        self.upper = np.concatenate([upper, row_upper, np.full(m, np.inf)])
        self.real_cost = np.concatenate([cost, np.zeros(2 * m)])
        self.art_sign = np.ones(m)
        self.x = np.zeros(n + 2 * m)
        self.basis = np.zeros(m, dtype=int)
        self.binv = np.eye(m)

    # Columns

    def _column(self, j: int) -> np.ndarray:
        if j < self.n:
            return self.matrix[:, j]
        col = np.zeros(self.m)
        if j < self.n + self.m:
            col[j - self.n] = -1.0
        else:
            r = j - self.n - self.m
            col[r] = self.art_sign[r]
        return col

    def _reduced_costs(self, cost: np.ndarray, duals: np.ndarray) -> np.ndarray:
        n, m = self.n, self.m
        reduced = cost.copy()
        reduced[:n] -= self.matrix.T @ duals
        reduced[n:n + m] += duals
        reduced[n + m:] -= self.art_sign * duals
        return reduced

    def _basis_matrix(self) -> np.ndarray:
        return np.column_stack([self._column(j) for j in self.basis])

    def _refactor(self) -> None:
        if self.m == 0:
            return
        try:
            self.binv = np.linalg.inv(self._basis_matrix())
        except np.linalg.LinAlgError:
            raise _Singular() from None
        if not np.all(np.isfinite(self.binv)):
            raise _Singular()
        nonbasic = np.ones(len(self.x), dtype=bool)
        nonbasic[self.basis] = False
        activity = np.zeros(self.m)
        for j in np.flatnonzero(nonbasic):
            if self.x[j] != 0.0:
                activity += self.x[j] * self._column(j)
        self.x[self.basis] = -self.binv @ activity

    # Start

    def _initial_basis(self) -> bool:
        """Place structurals at a finite bound and pick slack or artificial basics.

        Returns:
            True when artificials are needed
        """
        n, m = self.n, self.m
        for j in range(n):
            if np.isfinite(self.lower[j]):
                self.x[j] = self.lower[j]
            elif np.isfinite(self.upper[j]):
                self.x[j] = self.upper[j]
        activity = self.matrix @ self.x[:n] if m else np.zeros(0)
        needs_phase1 = False
        for r in range(m):
            slack = n + r
            artificial = n + m + r
            lo, hi = self.lower[slack], self.upper[slack]
            if lo - self.feasibility_tol <= activity[r] <= hi + self.feasibility_tol:
                self.basis[r] = slack
                self.x[slack] = activity[r]
                self.upper[artificial] = 0.0
                continue
            bound = lo if activity[r] < lo else hi
            self.x[slack] = bound
            self.art_sign[r] = 1.0 if bound > activity[r] else -1.0
            self.x[artificial] = abs(bound - activity[r])
            self.basis[r] = artificial
            needs_phase1 = True
        self.binv = np.diag([1.0 / self._column(j)[r] for r, j in enumerate(self.basis)]) \
            if m else np.zeros((0, 0))
        return needs_phase1

    # Iterations

    def _choose_entering(self, reduced: np.ndarray, is_basic: np.ndarray, bland: bool) -> Optional[int]:
        tol = self.optimality_tol
        can_increase = self.x < self.upper - self.feasibility_tol
        can_decrease = self.x > self.lower + self.feasibility_tol
        eligible = ~is_basic & (self.lower < self.upper) & (
            ((reduced < -tol) & can_increase) | ((reduced > tol) & can_decrease))
        candidates = np.flatnonzero(eligible)
        if len(candidates) == 0:
            return None
        if bland:
            return int(candidates[0])
        return int(candidates[np.argmax(np.abs(reduced[candidates]))])

    def _ratio_test(self, entering: int, direction: float, alpha: np.ndarray,
                    bland: bool) -> tuple[float, Optional[int], float]:
        """Step length, leaving row (None for a bound flip) and the bound the leaving variable hits."""
        step = self.upper[entering] - self.lower[entering]
        leaving: Optional[int] = None
        leaving_bound = 0.0
        best_pivot = 0.0
        basic_values = self.x[self.basis]
        for r in range(self.m):
            rate = alpha[r] * direction
            j = self.basis[r]
            if rate > self.pivot_tol:
                if not np.isfinite(self.lower[j]):
                    continue
                limit = max(0.0, (basic_values[r] - self.lower[j]) / rate)
                bound = self.lower[j]
            elif rate < -self.pivot_tol:
                if not np.isfinite(self.upper[j]):
                    continue
                limit = max(0.0, (self.upper[j] - basic_values[r]) / -rate)
                bound = self.upper[j]
            else:
                continue
            better = limit < step - 1e-12
            tie = not better and abs(limit - step) <= 1e-12 and leaving is not None
            if tie:
                if bland:
                    better = j < self.basis[leaving]
                else:
                    better = abs(rate) > best_pivot
            if better:
                step = limit
                leaving = r
                leaving_bound = bound
                best_pivot = abs(rate)
        return step, leaving, leaving_bound

    def _run(self, cost: np.ndarray) -> LpStatus:
        degenerate = 0
        since_refactor = 0
        while True:
            if self.iterations >= self.max_iterations:
                return LpStatus.ITERATION_LIMIT
            bland = degenerate >= SolverConfig.BLAND_AFTER_DEGENERATE
            duals = cost[self.basis] @ self.binv if self.m else np.zeros(0)
            reduced = self._reduced_costs(cost, duals)
            is_basic = np.zeros(len(self.x), dtype=bool)
            is_basic[self.basis] = True
            entering = self._choose_entering(reduced, is_basic, bland)
            if entering is None:
                return LpStatus.OPTIMAL

            direction = -1.0 if reduced[entering] > 0 else 1.0
            alpha = self.binv @ self._column(entering)
            step, leaving, leaving_bound = self._ratio_test(entering, direction, alpha, bland)
            if not np.isfinite(step):
                return LpStatus.UNBOUNDED

            self.iterations += 1
            degenerate = degenerate + 1 if step <= self.feasibility_tol * 1e-3 else 0
            self.x[entering] += direction * step
            if self.m:
                self.x[self.basis] -= direction * step * alpha
            if leaving is None:
                continue

            leaving_var = self.basis[leaving]
            self.x[leaving_var] = leaving_bound
            pivot_row = self.binv[leaving] / alpha[leaving]
            self.binv -= np.outer(alpha, pivot_row)
            self.binv[leaving] = pivot_row
            self.basis[leaving] = entering
            since_refactor += 1
            if since_refactor >= SolverConfig.REFACTOR_EVERY:
                self._refactor()
                since_refactor = 0

    def solve(self) -> SimplexOutcome:
        """Run both phases."""
        n, m = self.n, self.m
        try:
            if self._initial_basis():
                phase1_cost = np.zeros(n + 2 * m)
                phase1_cost[n + m:] = 1.0
                status = self._run(phase1_cost)
                if status is not LpStatus.OPTIMAL:
                    return SimplexOutcome(status, None, None, self.iterations,
                                          f'Phase 1 stopped: {status.value}')
                infeasibility = float(self.x[n + m:].sum())
                if infeasibility > self.feasibility_tol * max(1.0, np.sqrt(m)):
                    return SimplexOutcome(LpStatus.INFEASIBLE, None, None, self.iterations,
                                          f'Artificial sum {infeasibility:g} after phase 1')
                logger.debug('Phase 1 done after %d iterations', self.iterations)
            self.upper[n + m:] = 0.0
            self.x[n + m:] = np.minimum(self.x[n + m:], 0.0)
            self._refactor()
            status = self._run(self.real_cost)
            if status is not LpStatus.OPTIMAL:
                return SimplexOutcome(status, None, None, self.iterations,
                                      f'Phase 2 stopped: {status.value}')
            self._refactor()
        except _Singular:
            return SimplexOutcome(LpStatus.NUMERICAL, None, None, self.iterations,
                                  'Singular basis during refactorization')
        values = np.clip(self.x[:n], self.lower[:n], self.upper[:n])
        return SimplexOutcome(LpStatus.OPTIMAL, values, float(self.real_cost[:n] @ values),
                              self.iterations)
