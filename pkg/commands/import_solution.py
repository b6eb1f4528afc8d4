"""netgen import: verify an external solver's solution against a spec."""

import argparse
import json
import os

from config import ExitCode
from milp import write_lp_format

from ._common import add_output_flags, add_solver_flags, build_session, print_status
from .export import lp_digest


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('spec', help='spec file (JSON)')
    parser.add_argument('solution', help="solution file of 'name value' lines")
    parser.add_argument('--sidecar', default=None,
                        help='sidecar written by export; the rebuilt model must match it')
    add_solver_flags(parser)
    add_output_flags(parser)


def _check_sidecar(path: str, lp_text: str) -> str:
    try:
        with open(path, 'r') as f:
            sidecar = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        return f'Unreadable sidecar {path}: {e}'
    if sidecar.get('lp_sha256') != lp_digest(lp_text):
        return f'Model does not match the exported LP recorded in {path}'
    return ''


def run(args: argparse.Namespace) -> int:
    session, options, code = build_session(args.spec, args)
    if session is None:
        return code
    if args.sidecar:
        problem = _check_sidecar(args.sidecar, write_lp_format(session.model))
        if problem:
            print_status(problem, 'error')
            return ExitCode.USAGE
    if not os.path.isfile(args.solution):
        print_status(f'No such file: {args.solution}', 'error')
        return ExitCode.USAGE
    try:
        with open(args.solution, 'r') as f:
            text = f.read()
    except OSError as e:
        print_status(str(e), 'error')
        return ExitCode.USAGE

    result = session.import_text(text, options)
    if result is None:
        return ExitCode.FAILED
    path = session.write_graph(result.graph, args.out_dir, session.stem, args.format)
    if path is None:
        return ExitCode.FAILED
    report = session.report(result.status.value, [session.record(result.graph, path)], result,
                            result.message)
    session.write_report(report, args.out_dir, session.stem)
    if not report.all_verified:
        print_status('Imported graph does not meet the spec', 'error')
        return ExitCode.FAILED
    print_status(f'Imported graph verified, total slack {report.total_slack:.6g}')
    return ExitCode.OK
