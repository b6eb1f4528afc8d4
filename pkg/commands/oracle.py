"""netgen oracle: brute-force every labeled graph of a small spec."""

import argparse
import json
import os

from config import ExitCode, FormulationConfig
from formulation import validate_spec
from oracle import feasible_graphs

from ._common import open_session, print_status


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('spec', help='spec file (JSON)')
    parser.add_argument('--workers', type=int, default=1, help='processes scanning the graphs')
    parser.add_argument('--out-dir', default='.', help='directory for the report')


def run(args: argparse.Namespace) -> int:
    session, code = open_session(args.spec)
    if session is None:
        return code
    spec = session.spec
    if spec.n > FormulationConfig.ORACLE_MAX_N:
        print_status(f'The oracle supports n <= {FormulationConfig.ORACLE_MAX_N}, spec has n={spec.n}',
                     'error')
        return ExitCode.USAGE
    errors = validate_spec(spec)
    if errors:
        print_status('Invalid spec: ' + '; '.join(errors), 'error')
        return ExitCode.USAGE

    report = feasible_graphs(spec, workers=max(1, args.workers))
    path = os.path.join(args.out_dir, f'{session.stem}.oracle.json')
    try:
        os.makedirs(args.out_dir, exist_ok=True)
        with open(path, 'w') as f:
            f.write(json.dumps(report.to_dict(), indent=2, sort_keys=True) + '\n')
    except OSError as e:
        print_status(str(e), 'error')
        return ExitCode.FAILED
    print_status(f'{report.labeled_feasible_count} labeled graphs in {report.class_count} classes; '
                 f'optimal slack {report.optimal_slack}')
    print_status(f'Report written to {path}')
    return ExitCode.OK
