"""Graphs, property verification and canonical keys."""

from .models import ConstraintCheck, Graph, PropertyReport, SpecCheckReport

from .compute_report import compute_report
from .count_motifs import count_motifs
from .check_spec import band_distance, check_spec, inverse_band
from .canonical_key import canonical_key
from .edge_list import format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from .write_dot import format_dot, write_dot

__all__ = [
    # Models
    'ConstraintCheck',
    'Graph',
    'PropertyReport',
    'SpecCheckReport',
    # Properties
    'compute_report',
    'count_motifs',
    'band_distance',
    'check_spec',
    'inverse_band',
    # Isomorphism
    'canonical_key',
    # I/O
    'format_edge_list',
    'parse_edge_list',
    'read_edge_list',
    'write_edge_list',
    'format_dot',
    'write_dot',
]
