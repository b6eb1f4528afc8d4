"""Subcommand definitions for netgen."""

import argparse

import commands


# Subcommand definitions: (name, help, module)
# Each module provides configure(parser) and run(args) -> exit code
COMMANDS = [
    ('solve', 'build and solve a spec, write the graph and a report', commands.solve),
    ('export', 'write the model as an LP file with an import sidecar', commands.export),
    ('import', 'verify a solution computed by an external solver', commands.import_solution),
    ('enumerate', 'find up to k non-isomorphic graphs meeting a spec', commands.enumeration),
    ('oracle', 'check every labeled graph of a small spec', commands.oracle),
    ('verify', 'check an edge-list file against a spec', commands.verify),
]


def get_command(name):
    """Look up a subcommand module by name.

    Args:
        name: Subcommand name (e.g., 'solve')

    Returns:
        The module, or None if there is no such subcommand
    """
    for command_name, _, module in COMMANDS:
        if command_name == name:
            return module
    return None


def setup_commands(subparsers):
    """Register every subcommand on an argparse subparsers object."""
    for name, help_text, module in COMMANDS:
        parser = subparsers.add_parser(name, help=help_text, description=help_text)
        module.configure(parser)
        parser.set_defaults(command=name)


def setup_global_flags(parser: argparse.ArgumentParser):
    parser.add_argument('-v', '--verbose', action='count', default=None,
                        help='log verbosity (-v info, -vv debug); overrides NETGEN_LOG')
