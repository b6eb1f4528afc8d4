"""Command runs: load, build, solve, verify and write."""

from .models import GraphRecord, RunReport
from .run_session import GRAPH_FORMATS, RunSession

__all__ = [
    'GraphRecord',
    'GRAPH_FORMATS',
    'RunReport',
    'RunSession',
]
