"""netgen verify: check an edge-list file against a spec."""

import argparse

from config import ExitCode
from graphs import read_edge_list

from ._common import open_session, print_status


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('graph', help='edge-list file')
    parser.add_argument('spec', help='spec file (JSON)')


def run(args: argparse.Namespace) -> int:
    session, code = open_session(args.spec)
    if session is None:
        return code
    graph, message = read_edge_list(args.graph)
    if graph is None:
        print_status(message, 'error')
        return ExitCode.USAGE
    if graph.n != session.spec.n:
        print_status(f'Graph has n={graph.n}, spec has n={session.spec.n}', 'error')
        return ExitCode.USAGE

    verdict = session.verify(graph)
    for check in verdict.checks:
        mark = 'ok' if check.passed else 'FAIL'
        detail = f' ({check.reason})' if check.reason else ''
        print_status(f'{mark:4} {check.label}: {check.value}{detail}')
    if not verdict.admissible:
        print_status(f'Inadmissible: {verdict.reason}', 'error')
    if verdict.passed:
        print_status('Graph meets the spec')
        return ExitCode.OK
    return ExitCode.FAILED
