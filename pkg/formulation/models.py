"""Data models for network specifications and variable registries."""

from dataclasses import dataclass, field
from enum import Enum
from typing import ClassVar, Iterator, Optional, Union

from config import FormulationConfig

Band = tuple[float, float]


class SpecError(ValueError):
    """Raised for invalid or unsupported specifications."""


class MotifKind(Enum):
    """Small subgraph patterns with indicator variables."""
    TWO_PATH = 'two_path'
    TRIANGLE = 'triangle'
    CLIQUE4 = 'clique4'
    STAR4 = 'star4'


class MotifMode(Enum):
    """Encoding of motif indicators."""
    DISAGGREGATED = 'disaggregated'
    AGGREGATED = 'aggregated'


class ObjectiveMode(Enum):
    """What the model optimizes."""
    MIN_SLACK = 'min_slack'
    MAXIMIZE = 'maximize'
    MINIMIZE = 'minimize'


class PropertyName(Enum):
    """Scalar properties usable as objectives."""
    AVG_CC = 'avg_cc'
    GLOBAL_CC = 'global_cc'
    APL = 'apl'
    CPL = 'cpl'
    DIAMETER = 'diameter'
    EDGE_COUNT = 'edge_count'


class SymmetryMode(Enum):
    """Symmetry-breaking strength."""
    NONE = 'none'
    PRIMARY = 'primary'
    PRIMARY_SECONDARY = 'primary_secondary'


class SecondaryCriterion(Enum):
    """Tie-breaker among nodes of equal degree."""
    LOCAL_CC = 'local_cc'
    DIST_TO_LAST = 'dist_to_last'
    SDN = 'sdn'
    INVERSE_CLOSENESS = 'inverse_closeness'


class PathFlows(Enum):
    """Domain of shortest-path flow variables."""
    CONTINUOUS = 'continuous'
    BINARY = 'binary'


@dataclass(frozen=True)
class DegreeBounds:
    """Degree band for a node subset (None = every node)."""
    kind: ClassVar[str] = 'degree_bounds'
    lower: int
    upper: int
    nodes: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class DegreeSequence:
    """Full degree sequence, non-increasing."""
    kind: ClassVar[str] = 'degree_sequence'
    values: tuple[int, ...]


@dataclass(frozen=True)
class AvgClustering:
    kind: ClassVar[str] = 'avg_cc'
    band: Band


@dataclass(frozen=True)
class GlobalClustering:
    kind: ClassVar[str] = 'global_cc'
    band: Band


@dataclass(frozen=True)
class AveragePathLength:
    kind: ClassVar[str] = 'apl'
    band: Band


@dataclass(frozen=True)
class CharacteristicPathLength:
    kind: ClassVar[str] = 'cpl'
    band: Band


@dataclass(frozen=True)
class Diameter:
    kind: ClassVar[str] = 'diameter'
    band: Band


@dataclass(frozen=True)
class ClosenessSequence:
    """One closeness band per node, matched one-to-one."""
    kind: ClassVar[str] = 'closeness_sequence'
    bands: tuple[Band, ...]


@dataclass(frozen=True)
class AdnByDegree:
    """Average neighbour degree band per degree class q."""
    kind: ClassVar[str] = 'adn_by_degree'
    bands: tuple[tuple[int, Band], ...]


@dataclass(frozen=True)
class MinDegreeSpan:
    """Largest minus smallest degree is at least span."""
    kind: ClassVar[str] = 'min_degree_span'
    span: int


@dataclass(frozen=True)
class NonNull:
    """At least one edge."""
    kind: ClassVar[str] = 'non_null'


@dataclass(frozen=True)
class MotifCount:
    """Band on the number of occurrences of a motif."""
    kind: ClassVar[str] = 'motif_count'
    motif: MotifKind
    band: Band


PropertyConstraint = Union[
    DegreeBounds, DegreeSequence, AvgClustering, GlobalClustering,
    AveragePathLength, CharacteristicPathLength, Diameter, ClosenessSequence,
    AdnByDegree, MinDegreeSpan, NonNull, MotifCount,
]

PATH_CONSTRAINTS = (AveragePathLength, CharacteristicPathLength, Diameter, ClosenessSequence)
PATH_PROPERTIES = (PropertyName.APL, PropertyName.CPL, PropertyName.DIAMETER)


@dataclass(frozen=True)
class Objective:
    """Objective mode and, for extremum modes, the property."""
    mode: ObjectiveMode = ObjectiveMode.MIN_SLACK
    property: Optional[PropertyName] = None


@dataclass(frozen=True)
class SymmetryConfig:
    mode: SymmetryMode = SymmetryMode.PRIMARY
    secondary: Optional[SecondaryCriterion] = None


@dataclass(frozen=True)
class NetworkSpec:
    """Declarative bundle: node count, property constraints, objective.

    Attributes:
        n: Node count
        constraints: Property constraints in declaration order
        objective: Min-slack or a property extremum
        symmetry: Symmetry-breaking configuration
        motif_mode: Motif indicator encoding
        epsilon: Offset of the degree-class threshold indicators
        path_flows: Domain of shortest-path flow variables
    """
    n: int
    constraints: tuple[PropertyConstraint, ...] = ()
    objective: Objective = field(default_factory=Objective)
    symmetry: SymmetryConfig = field(default_factory=SymmetryConfig)
    motif_mode: MotifMode = MotifMode.DISAGGREGATED
    epsilon: float = FormulationConfig.EPSILON
    path_flows: PathFlows = PathFlows.CONTINUOUS

    def of_type(self, *types) -> list[PropertyConstraint]:
        return [c for c in self.constraints if isinstance(c, types)]

    @property
    def fixed_degrees(self) -> Optional[tuple[int, ...]]:
        """The specified degree sequence, if any."""
        sequences = self.of_type(DegreeSequence)
        return sequences[0].values if sequences else None

    @property
    def uses_shortest_paths(self) -> bool:
        if self.of_type(*PATH_CONSTRAINTS):
            return True
        return self.objective.property in PATH_PROPERTIES

    @property
    def hard_degree_range(self) -> Optional[tuple[int, int]]:
        """Degree range imposed as hard bounds when degree classes need it."""
        if not self.of_type(AdnByDegree):
            return None
        lower, upper = 0, self.n - 1
        for bounds in self.of_type(DegreeBounds):
            if bounds.nodes is None:
                lower = max(lower, bounds.lower)
                upper = min(upper, bounds.upper)
        return lower, upper

    @property
    def degree_range(self) -> tuple[int, int]:
        return self.hard_degree_range or (0, self.n - 1)

    @property
    def gcc_fractional(self) -> bool:
        """Whether global clustering needs the cross-multiplied form."""
        if self.fixed_degrees is not None:
            return False
        return bool(self.of_type(GlobalClustering))

    @property
    def forces_degree_order(self) -> bool:
        return bool(self.of_type(MinDegreeSpan))


def constraint_label(index: int, constraint: PropertyConstraint) -> str:
    """Stable label used in slack and check reports."""
    return f'{index + 1}:{constraint.kind}'


@dataclass(frozen=True)
class SlackGroup:
    """Slack pairs created for one property constraint."""
    label: str
    index: int
    pairs: tuple[tuple[int, int], ...]


class VariableRegistry:
    """Bidirectional map between semantic keys and model variable ids.

    Keys are tuples whose first element names the family, e.g. ('x', 1, 2)
    or ('sd_minus', 3); the model variable name joins the parts with '_'.
    """

    def __init__(self):
        self._ids: dict[tuple, int] = {}
        self._keys: dict[int, tuple] = {}
        self.slack_groups: list[SlackGroup] = []

    @staticmethod
    def name_for(key: tuple) -> str:
        return '_'.join(str(part) for part in key)

    def register(self, key: tuple, var_id: int) -> None:
        if key in self._ids:
            raise SpecError(f'Symbol registered twice: {self.name_for(key)}')
        self._ids[key] = var_id
        self._keys[var_id] = key

    def __contains__(self, key: tuple) -> bool:
        return key in self._ids

    def __len__(self) -> int:
        return len(self._ids)

    def id(self, *key) -> int:
        return self._ids[tuple(key)]

    def get(self, *key) -> Optional[int]:
        return self._ids.get(tuple(key))

    def key(self, var_id: int) -> tuple:
        return self._keys[var_id]

    def family(self, name: str) -> dict[tuple, int]:
        """All ids of a family keyed by the remaining key parts."""
        return {key[1:]: var_id for key, var_id in self._ids.items() if key[0] == name}

    def items(self) -> Iterator[tuple[tuple, int]]:
        return iter(self._ids.items())

    def edge_ids(self) -> dict[tuple[int, int], int]:
        return self.family('x')

    def add_slack_group(self, group: SlackGroup) -> None:
        self.slack_groups.append(group)

    def slack_ids(self) -> list[int]:
        ids = []
        for group in self.slack_groups:
            for minus, plus in group.pairs:
                ids.extend((minus, plus))
        return ids


class StatisticKind(Enum):
    """Statistic computed over a gated set of property values."""
    SUM = 'sum'
    MEDIAN = 'median'


@dataclass
class ClusteringHandles:
    """Variable ids of the clustering block (None where not encoded)."""
    triangles: dict[tuple[int, int, int], int]
    pntr: dict[int, int]
    pcc: dict[int, int]
    pacc: int
    pgcc: Optional[int] = None
    two_paths: Optional[dict[tuple[int, int, int], int]] = None
    pntp: Optional[dict[int, int]] = None


@dataclass
class PathStatisticHandles:
    """Variable ids of path statistics encoded so far."""
    papl: Optional[int] = None
    pcpl: Optional[int] = None
    piclc: Optional[dict[int, int]] = None
    pdiam: Optional[int] = None


@dataclass
class DegreeClassHandles:
    """Degree-class indicators, class sizes and neighbour-degree sums."""
    d_lower: int
    d_upper: int
    z: dict[tuple[int, int], int]
    pnnd: dict[int, int]
    psdn: Optional[dict[int, int]] = None
    psdn_gated: Optional[dict[tuple[int, int], int]] = None


@dataclass
class StatisticHandles:
    """Result of a statistics gadget."""
    copies: dict[int, int]
    total: 'object'
    count: 'object'
    median: Optional[int] = None
