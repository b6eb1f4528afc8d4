"""Utility functions for netgen."""

import logging
import os
import sys
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

_LEVELS = {
    0: logging.WARNING,
    1: logging.INFO,
    2: logging.DEBUG,
}


def log_level(verbosity: Optional[int] = None) -> int:
    """Map a verbosity (or the NETGEN_LOG env var) to a logging level.

    Args:
        verbosity: Explicit verbosity, or None to read NETGEN_LOG

    Returns:
        A logging level
    """
    if verbosity is None:
        raw = os.environ.get('NETGEN_LOG', '0').strip().lower()
        named = {'warning': 0, 'info': 1, 'debug': 2}
        if raw in named:
            verbosity = named[raw]
        else:
            try:
                verbosity = int(raw)
            except ValueError:
                verbosity = 0
    return _LEVELS[max(0, min(2, verbosity))]


def setup_logging(verbosity: Optional[int] = None) -> None:
    """Configure the root logger to write to standard error."""
    root = logging.getLogger()
    root.setLevel(log_level(verbosity))
    if not any(getattr(h, '_netgen', False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._netgen = True
        root.addHandler(handler)


def format_seconds(seconds: float) -> str:
    """Format a duration in human-readable form."""
    if seconds < 1:
        return f'{seconds * 1000:.0f} ms'
    if seconds < 120:
        return f'{seconds:.1f} s'
    return f'{seconds / 60:.1f} min'
