"""Command-line application class for netgen."""

import argparse
import logging

from actions import get_command, setup_commands, setup_global_flags
from config import ExitCode
from utils import setup_logging

logger = logging.getLogger(__name__)

VERSION = '1.0.0'


class NetgenApplication:
    """Main application class."""

    def __init__(self):
        self.parser = self.build_parser()

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog='netgen',
            description='Generate networks with prescribed properties by mixed-integer programming.',
        )
        parser.add_argument('--version', action='version', version=f'%(prog)s {VERSION}')
        setup_global_flags(parser)
        subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
        setup_commands(subparsers)
        return parser

    def run(self, argv: list[str]) -> int:
        """Parse arguments and dispatch to a subcommand.

        Args:
            argv: Arguments without the program name

        Returns:
            Process exit code
        """
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            # argparse exits 0 for --help/--version and 2 on usage errors
            return ExitCode.OK if e.code in (0, None) else ExitCode.USAGE
        if not args.command:
            self.parser.print_usage()
            return ExitCode.USAGE

        setup_logging(args.verbose)
        logger.debug('Running %s with %s', args.command, vars(args))
        return get_command(args.command).run(args)
