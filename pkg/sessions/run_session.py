"""RunSession - one spec taken from file to verified graphs."""

import logging
import os
import time
from typing import Any, Callable, Optional

from config import FormulationConfig
from formulation import NetworkSpec, SpecError, build, load_spec, spec_to_dict
from graphs import (
    Graph,
    SpecCheckReport,
    check_spec,
    compute_report,
    read_edge_list,
    write_dot,
    write_edge_list,
)
from milp import MilpModel, ModelError
from solver import (
    EnumerationResult,
    SolveOptions,
    SolveResult,
    enumerate_nonisomorphic,
    import_solution,
    solve,
)

from .models import GraphRecord, RunReport

logger = logging.getLogger(__name__)

GRAPH_FORMATS = ('edgelist', 'dot')


class RunSession:
    """State of a command run over one spec file.

    Attributes:
        spec_path: Path the spec was loaded from
        spec: Parsed NetworkSpec or None
        solver_settings: The spec file's solver block
        model: Built model or None
        registry: Registry of the built model
        timings: Seconds spent per phase

    Callbacks (set by the command):
        set_status: called with (message, msg_type) for user-facing messages
    """

    def __init__(self):
        self.spec_path = ''
        self.spec: Optional[NetworkSpec] = None
        self.solver_settings: dict[str, Any] = {}
        self.model: Optional[MilpModel] = None
        self.registry = None
        self.timings: dict[str, float] = {}

        self.set_status: Optional[Callable[[str, str], None]] = None

    def _status(self, message: str, msg_type: str = 'info') -> None:
        if msg_type == 'error':
            logger.error(message)
        else:
            logger.info(message)
        if self.set_status:
            self.set_status(message, msg_type)

    @property
    def stem(self) -> str:
        return os.path.splitext(os.path.basename(self.spec_path))[0] or 'netgen'

    def load(self, path: str) -> bool:
        """Load and parse a spec file.

        Returns:
            True if the spec was loaded.
        """
        loaded, message = load_spec(path)
        if loaded is None:
            self._status(message, 'error')
            return False
        self.spec_path = path
        self.spec, self.solver_settings = loaded
        self._status(message)
        return True

    def options(self, overrides: Optional[dict[str, Any]] = None) -> Optional[SolveOptions]:
        """Solver options from the spec's solver block with CLI overrides on top."""
        settings = dict(self.solver_settings)
        settings.update({key: value for key, value in (overrides or {}).items() if value is not None})
        try:
            return SolveOptions.from_dict(settings)
        except (TypeError, ValueError) as e:
            self._status(f'Invalid solver settings: {e}', 'error')
            return None

    def build(self, feasibility_tol: Optional[float] = None) -> bool:
        """Build the model of the loaded spec.

        Returns:
            True if the model was built.
        """
        if self.spec is None:
            self._status('No spec loaded', 'error')
            return False
        start = time.monotonic()
        try:
            self.model, self.registry = build(self.spec, feasibility_tol, name=self.stem)
        except (SpecError, ModelError) as e:
            self._status(f'Invalid spec: {e}', 'error')
            return False
        self.timings['build_s'] = time.monotonic() - start
        self._status(f'Built model with {self.model.num_variables} variables '
                     f'and {self.model.num_constraints} constraints')
        return True

    def solve(self, options: SolveOptions) -> SolveResult:
        start = time.monotonic()
        result = solve(self.model, options, self.registry)
        self.timings['solve_s'] = time.monotonic() - start
        self._status(result.message)
        return result

    def enumerate(self, k: int, options: SolveOptions) -> EnumerationResult:
        start = time.monotonic()
        result = enumerate_nonisomorphic(self.model, self.registry, k, options)
        self.timings['enumerate_s'] = time.monotonic() - start
        self._status(result.message)
        return result

    def import_text(self, text: str, options: SolveOptions) -> Optional[SolveResult]:
        result, message = import_solution(self.model, self.registry, text, options)
        self._status(message, 'info' if result else 'error')
        return result

    def verify(self, graph: Graph) -> SpecCheckReport:
        """Check a graph against the loaded spec at the verification tolerance."""
        return check_spec(graph, self.spec, FormulationConfig.VERIFY_TOL)

    def record(self, graph: Graph, path: Optional[str] = None) -> GraphRecord:
        verdict = self.verify(graph)
        return GraphRecord(graph.sorted_edges(), graph.n, compute_report(graph).to_dict(),
                           verdict.to_dict(), path)

    def write_graph(self, graph: Graph, out_dir: str, name: str, fmt: str = 'edgelist') -> Optional[str]:
        """Write a graph and re-read edge lists to confirm the file round-trips.

        Returns:
            The written path, or None on failure
        """
        os.makedirs(out_dir, exist_ok=True)
        if fmt == 'dot':
            path = os.path.join(out_dir, f'{name}.dot')
            ok, message = write_dot(graph, path, name)
        else:
            path = os.path.join(out_dir, f'{name}.edges')
            ok, message = write_edge_list(graph, path)
            if ok:
                reread, message = read_edge_list(path)
                ok = reread == graph
                if not ok:
                    message = f'{path} does not read back as the written graph'
        if not ok:
            self._status(message, 'error')
            return None
        return path

    def report(self, status: str, records: list[GraphRecord],
               result: Optional[SolveResult] = None, message: str = '') -> RunReport:
        """Assemble the run report; the slack total is the sum of the table."""
        report = RunReport(spec_to_dict(self.spec, self.solver_settings), status,
                           graphs=records, timings=dict(self.timings), message=message)
        if result is not None and result.has_solution:
            report.objective = result.objective
            report.slacks = [{'label': e.label, 'minus': e.minus, 'plus': e.plus, 'details': e.details}
                             for e in result.slack_report]
            report.total_slack = sum(row['minus'] + row['plus'] for row in report.slacks)
            report.stats = result.to_dict()['stats']
        return report

    def write_report(self, report: RunReport, out_dir: str, name: str) -> Optional[str]:
        path = os.path.join(out_dir, f'{name}.report.json')
        try:
            os.makedirs(out_dir, exist_ok=True)
            with open(path, 'w') as f:
                f.write(report.to_json())
        except OSError as e:
            self._status(str(e), 'error')
            return None
        return path
