#!/usr/bin/python3
"""netgen - generate networks with prescribed properties."""

import sys

from application import NetgenApplication


def main(argv=None):
    """Application entry point."""
    app = NetgenApplication()
    return app.run(sys.argv[1:] if argv is None else argv)


if __name__ == '__main__':
    sys.exit(main())
