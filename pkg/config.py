"""Configuration for netgen."""


class SolverConfig:
    """Branch-and-bound and LP defaults."""

    TIME_LIMIT_S = 1800.0
    ABS_GAP = 1e-6
    INTEGRALITY_TOL = 1e-6
    FEASIBILITY_TOL = 1e-6
    OPTIMALITY_TOL = 1e-9
    PIVOT_TOL = 1e-9
    REFACTOR_EVERY = 50
    BLAND_AFTER_DEGENERATE = 50
    SIMPLEX_MAX_ITERATIONS = 200000
    ENUMERATION_ORBIT_MAX_N = 6


class FormulationConfig:
    """Formulation and verification defaults."""

    EPSILON = 0.01
    EPSILON_TOL_FACTOR = 10.0
    SPEC_VERSION = 1
    CANONICAL_MAX_N = 12
    ORACLE_MAX_N = 6
    ORACLE_TOL = 1e-9
    VERIFY_TOL = 1e-6


class BranchPriority:
    """Branch priorities; higher is branched first."""

    EDGE = 100
    AUXILIARY = 50
    DEFAULT = 0
    FLOW = -10


class ExitCode:
    """CLI exit codes."""

    OK = 0
    FAILED = 1
    USAGE = 2
    UNATTAINABLE = 3
    LIMIT = 4
