"""Shared helpers for the subcommands (not exported)."""

import argparse
import sys
from typing import Any, Optional

from config import ExitCode
from sessions import GRAPH_FORMATS, RunSession
from solver import LpMethod, SolveOptions


def print_status(message: str, msg_type: str = 'info') -> None:
    stream = sys.stderr if msg_type == 'error' else sys.stdout
    print(message, file=stream)


def add_solver_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--time-limit', type=float, default=None, metavar='SECONDS',
                        help='wall-clock limit for the solver')
    parser.add_argument('--node-limit', type=int, default=None,
                        help='maximum number of branch-and-bound nodes')
    parser.add_argument('--workers', type=int, default=None,
                        help='threads relaxing branch-and-bound nodes')
    order = parser.add_mutually_exclusive_group()
    order.add_argument('--seedless-deterministic', dest='deterministic', action='store_const',
                       const=True, default=None,
                       help='process parallel node batches in selection order (default)')
    order.add_argument('--nondeterministic', dest='deterministic', action='store_const',
                       const=False, help='process parallel node batches as they finish')
    parser.add_argument('--lp-method', choices=[m.value for m in LpMethod], default=None,
                        help='LP engine for relaxations')


def add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--out-dir', default='.', help='directory for graphs and reports')
    parser.add_argument('--format', choices=GRAPH_FORMATS, default='edgelist',
                        help='graph file format')


def solver_overrides(args: argparse.Namespace) -> dict[str, Any]:
    return {
        'time_limit_s': getattr(args, 'time_limit', None),
        'node_limit': getattr(args, 'node_limit', None),
        'worker_count': getattr(args, 'workers', None),
        'deterministic': getattr(args, 'deterministic', None),
        'lp_method': getattr(args, 'lp_method', None),
    }


def open_session(spec_path: str) -> tuple[Optional[RunSession], int]:
    """Load and build a spec.

    Returns:
        Tuple of (session, exit code); the session is None on failure
    """
    session = RunSession()
    session.set_status = print_status
    if not session.load(spec_path):
        return None, ExitCode.USAGE
    return session, ExitCode.OK


def session_options(session: RunSession, args: argparse.Namespace) -> Optional[SolveOptions]:
    return session.options(solver_overrides(args))


def build_session(spec_path: str, args: argparse.Namespace) -> tuple[Optional[RunSession],
                                                                      Optional[SolveOptions], int]:
    """Load a spec, resolve solver options and build the model."""
    session, code = open_session(spec_path)
    if session is None:
        return None, None, code
    options = session_options(session, args)
    if options is None or not session.build(options.feasibility_tol):
        return None, None, ExitCode.USAGE
    return session, options, ExitCode.OK
