"""netgen solve: build and solve a spec, then write the verified graph."""

import argparse

from config import ExitCode
from formulation import ObjectiveMode
from solver import SolveStatus
from utils import format_seconds

from ._common import add_output_flags, add_solver_flags, build_session, print_status


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('spec', help='spec file (JSON)')
    add_solver_flags(parser)
    add_output_flags(parser)


def run(args: argparse.Namespace) -> int:
    session, options, code = build_session(args.spec, args)
    if session is None:
        return code

    result = session.solve(options)
    min_slack = session.spec.objective.mode is ObjectiveMode.MIN_SLACK
    records = []
    if result.graph is not None:
        path = session.write_graph(result.graph, args.out_dir, session.stem, args.format)
        if path is None:
            return ExitCode.FAILED
        records.append(session.record(result.graph, path))
    report = session.report(result.status.value, records, result, result.message)
    report_path = session.write_report(report, args.out_dir, session.stem)
    if report_path is None:
        return ExitCode.FAILED
    print_status(f'Report written to {report_path}')

    if result.status is SolveStatus.LIMIT_REACHED:
        return ExitCode.LIMIT
    if result.status is SolveStatus.INFEASIBLE:
        print_status('Spec unattainable: no admissible graph exists', 'error')
        return ExitCode.UNATTAINABLE
    if min_slack and result.total_slack > options.feasibility_tol:
        print_status(f'Spec unattainable: optimal total slack {result.total_slack:.6g}', 'error')
        return ExitCode.UNATTAINABLE
    if not report.all_verified:
        print_status('Emitted graph failed verification', 'error')
        return ExitCode.FAILED
    print_status(f'Solved with objective {result.objective:.6g} '
                 f'in {format_seconds(result.stats.wall_time_s)}')
    return ExitCode.OK
