"""netgen enumerate: write up to k non-isomorphic graphs meeting a spec."""

import argparse

from config import ExitCode
from solver import EnumerationStatus
from utils import format_seconds

from ._common import add_output_flags, add_solver_flags, build_session, print_status


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('spec', help='spec file (JSON)')
    parser.add_argument('-k', type=int, default=10, help='number of graphs wanted')
    add_solver_flags(parser)
    add_output_flags(parser)


def run(args: argparse.Namespace) -> int:
    if args.k < 1:
        print_status('-k must be at least 1', 'error')
        return ExitCode.USAGE
    session, options, code = build_session(args.spec, args)
    if session is None:
        return code
    try:
        result = session.enumerate(args.k, options)
    except ValueError as e:
        print_status(str(e), 'error')
        return ExitCode.USAGE

    records = []
    for index, graph in enumerate(result.graphs, start=1):
        path = session.write_graph(graph, args.out_dir, f'{session.stem}_{index}', args.format)
        if path is None:
            return ExitCode.FAILED
        records.append(session.record(graph, path))
    report = session.report(result.status.value, records, message=result.message)
    report.stats = {'solves': result.solves, 'duplicates': result.duplicates,
                    'wall_time_s': result.wall_time_s}
    session.write_report(report, args.out_dir, session.stem)
    print_status(f'{len(result.graphs)} graphs written to {args.out_dir} '
                 f'in {format_seconds(result.wall_time_s)}')

    if result.status is EnumerationStatus.LIMIT:
        return ExitCode.LIMIT
    if result.status is EnumerationStatus.UNATTAINABLE or not result.graphs:
        return ExitCode.UNATTAINABLE
    if not report.all_verified:
        print_status('An enumerated graph failed verification', 'error')
        return ExitCode.FAILED
    return ExitCode.OK
