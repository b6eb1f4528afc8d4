"""netgen export: write the model as an LP file plus a sidecar for import."""

import argparse
import hashlib
import json
import os

from config import ExitCode
from formulation import spec_to_dict
from milp import write_lp_format

from ._common import build_session, print_status


def sidecar_path(lp_path: str) -> str:
    return lp_path + '.json'


def lp_digest(text: str) -> str:
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('spec', help='spec file (JSON)')
    parser.add_argument('out', help='LP file to write')


def run(args: argparse.Namespace) -> int:
    session, _, code = build_session(args.spec, args)
    if session is None:
        return code

    text = write_lp_format(session.model)
    model = session.model
    sidecar = {
        'spec': spec_to_dict(session.spec, session.solver_settings),
        'lp_sha256': lp_digest(text),
        'variables': model.num_variables,
        'constraints': model.num_constraints,
        'slacks': {group.label: [model.variables[var_id].name for pair in group.pairs for var_id in pair]
                   for group in session.registry.slack_groups},
        'edges': {model.variables[var_id].name: list(pair)
                  for pair, var_id in sorted(session.registry.edge_ids().items())},
    }
    try:
        directory = os.path.dirname(os.path.abspath(args.out))
        os.makedirs(directory, exist_ok=True)
        with open(args.out, 'w') as f:
            f.write(text)
        with open(sidecar_path(args.out), 'w') as f:
            f.write(json.dumps(sidecar, indent=2, sort_keys=True) + '\n')
    except OSError as e:
        print_status(str(e), 'error')
        return ExitCode.FAILED
    print_status(f'Wrote {args.out} ({model.num_variables} variables, {model.num_constraints} constraints)')
    return ExitCode.OK
