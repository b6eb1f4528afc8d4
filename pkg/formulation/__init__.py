"""Network specifications and their MILP formulation."""

from .models import (
    AdnByDegree,
    AveragePathLength,
    AvgClustering,
    Band,
    CharacteristicPathLength,
    ClosenessSequence,
    ClusteringHandles,
    DegreeBounds,
    DegreeClassHandles,
    DegreeSequence,
    Diameter,
    GlobalClustering,
    MinDegreeSpan,
    MotifCount,
    MotifKind,
    MotifMode,
    NetworkSpec,
    NonNull,
    Objective,
    ObjectiveMode,
    PathFlows,
    PathStatisticHandles,
    PropertyConstraint,
    PropertyName,
    SecondaryCriterion,
    SlackGroup,
    SpecError,
    StatisticHandles,
    StatisticKind,
    SymmetryConfig,
    SymmetryMode,
    VariableRegistry,
    constraint_label,
)
from .builder import FormulationBuilder

from .encode_edges import encode_edges
from .encode_motif import encode_motif, motif_edges, motif_instances
from .encode_degrees import encode_degrees
from .encode_clustering import encode_clustering
from .encode_shortest_paths import encode_shortest_paths
from .encode_path_statistics import encode_path_statistics
from .encode_degree_classes import class_gate, encode_degree_classes, encode_neighbor_degree_sums
from .encode_sequence_assignment import encode_sequence_assignment
from .encode_statistics import encode_statistics, gated_copy
from .add_specification import add_specification
from .add_symmetry_breaking import add_symmetry_breaking
from .validate_spec import validate_spec
from .build import build
from .spec_io import load_spec, parse_spec, spec_to_dict

__all__ = [
    # Models
    'AdnByDegree',
    'AveragePathLength',
    'AvgClustering',
    'Band',
    'CharacteristicPathLength',
    'ClosenessSequence',
    'ClusteringHandles',
    'DegreeBounds',
    'DegreeClassHandles',
    'DegreeSequence',
    'Diameter',
    'GlobalClustering',
    'MinDegreeSpan',
    'MotifCount',
    'MotifKind',
    'MotifMode',
    'NetworkSpec',
    'NonNull',
    'Objective',
    'ObjectiveMode',
    'PathFlows',
    'PathStatisticHandles',
    'PropertyConstraint',
    'PropertyName',
    'SecondaryCriterion',
    'SlackGroup',
    'SpecError',
    'StatisticHandles',
    'StatisticKind',
    'SymmetryConfig',
    'SymmetryMode',
    'VariableRegistry',
    'constraint_label',
    'FormulationBuilder',
    # Encoders
    'encode_edges',
    'encode_motif',
    'motif_edges',
    'motif_instances',
    'encode_degrees',
    'encode_clustering',
    'encode_shortest_paths',
    'encode_path_statistics',
    'class_gate',
    'encode_degree_classes',
    'encode_neighbor_degree_sums',
    'encode_sequence_assignment',
    'encode_statistics',
    'gated_copy',
    # Assembly
    'add_specification',
    'add_symmetry_breaking',
    'validate_spec',
    'build',
    # Spec files
    'load_spec',
    'parse_spec',
    'spec_to_dict',
]
