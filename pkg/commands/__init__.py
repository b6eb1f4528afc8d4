"""Subcommands of the netgen command line."""

from . import enumeration, export, import_solution, oracle, solve, verify

__all__ = [
    'enumeration',
    'export',
    'import_solution',
    'oracle',
    'solve',
    'verify',
]
