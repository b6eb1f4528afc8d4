"""Brute-force ground truth over all labeled graphs on a few nodes."""

from .models import OracleReport

from .enumerate_graphs import enumerate_graphs
from .feasible_graphs import feasible_graphs
from .optimal_value import optimal_value

__all__ = [
    # Models
    'OracleReport',
    # Operations
    'enumerate_graphs',
    'feasible_graphs',
    'optimal_value',
]
