"""Motif indicator variables."""

from itertools import combinations
from typing import Iterator, Optional

from config import BranchPriority
from milp import ConstraintSense, LinExpr, VariableKind

from .builder import FormulationBuilder
from .encode_edges import encode_edges
from .models import MotifKind, MotifMode, SpecError

MOTIF_PREFIX = {
    MotifKind.TWO_PATH: 'ytp',
    MotifKind.TRIANGLE: 'ytr',
    MotifKind.CLIQUE4: 'yclq',
    MotifKind.STAR4: 'ystr',
}

MOTIF_SIZE = {
    MotifKind.TWO_PATH: 3,
    MotifKind.TRIANGLE: 3,
    MotifKind.CLIQUE4: 4,
    MotifKind.STAR4: 4,
}

_CENTERED = (MotifKind.TWO_PATH, MotifKind.STAR4)


def canonical_nodes(kind: MotifKind, nodes: tuple[int, ...]) -> tuple[int, ...]:
    """Order nodes so that each occurrence has one key; centred motifs keep the centre first."""
    if kind in _CENTERED:
        return (nodes[0], *sorted(nodes[1:]))
    return tuple(sorted(nodes))


def motif_edges(kind: MotifKind, nodes: tuple[int, ...]
                ) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Edges a motif occurrence requires present and absent."""
    if kind in _CENTERED:
        center, leaves = nodes[0], nodes[1:]
        present = [(center, leaf) for leaf in leaves]
        absent = list(combinations(leaves, 2)) if kind is MotifKind.STAR4 else []
        return present, absent
    return list(combinations(nodes, 2)), []


def motif_instances(kind: MotifKind, n: int) -> Iterator[tuple[int, ...]]:
    """All occurrences of a motif on nodes 1..n, in canonical node order."""
    nodes = range(1, n + 1)
    if kind in _CENTERED:
        leaves = MOTIF_SIZE[kind] - 1
        for center in nodes:
            others = [v for v in nodes if v != center]
            for chosen in combinations(others, leaves):
                yield (center, *chosen)
    else:
        yield from combinations(nodes, MOTIF_SIZE[kind])


def encode_motif(builder: FormulationBuilder, kind: MotifKind, nodes: tuple[int, ...],
                 mode: Optional[MotifMode] = None) -> int:
    """Add the indicator of one motif occurrence.

    In disaggregated mode the indicator is continuous in [0, 1] with one
    upper row per required or forbidden edge; in aggregated mode it is
    binary with one row per edge group. Both add the same lower row, so the
    only feasible value on an integral x is the product of the edge terms.

    Args:
        builder: Model under construction
        kind: Motif kind
        nodes: Occurrence nodes; centred motifs list the centre first
        mode: Encoding, defaults to the builder's

    Returns:
        The indicator variable id
    """
    nodes = tuple(nodes)
    if len(nodes) != MOTIF_SIZE[kind]:
        raise SpecError(f'{kind.value} needs {MOTIF_SIZE[kind]} nodes, got {len(nodes)}')
    if len(set(nodes)) != len(nodes):
        raise SpecError(f'Duplicate node indices in {kind.value}{nodes}')
    if any(not 1 <= v <= builder.n for v in nodes):
        raise SpecError(f'Node index out of range in {kind.value}{nodes}')

    nodes = canonical_nodes(kind, nodes)
    key = (MOTIF_PREFIX[kind], *nodes)
    existing = builder.registry.get(*key)
    if existing is not None:
        return existing

    encode_edges(builder)
    mode = mode or builder.motif_mode
    present, absent = motif_edges(kind, nodes)
    name = builder.registry.name_for(key)
    present_sum = LinExpr.sum(builder.x(a, b) for a, b in present)
    absent_sum = LinExpr.sum(builder.x(a, b) for a, b in absent)

    if mode is MotifMode.DISAGGREGATED:
        y = builder.variable(key, VariableKind.CONTINUOUS, 0.0, 1.0)
        for a, b in present:
            builder.constrain(f'{name}_up_{a}_{b}', LinExpr.var(y) - builder.x(a, b),
                              ConstraintSense.LE, 0.0)
        for a, b in absent:
            builder.constrain(f'{name}_dn_{a}_{b}', LinExpr.var(y) + builder.x(a, b),
                              ConstraintSense.LE, 1.0)
    else:
        y = builder.variable(key, VariableKind.BINARY, 0, 1, BranchPriority.AUXILIARY)
        builder.constrain(f'{name}_pos', LinExpr.var(y, len(present)) - present_sum,
                          ConstraintSense.LE, 0.0)
        if absent:
            builder.constrain(f'{name}_neg', LinExpr.var(y, len(absent)) + absent_sum,
                              ConstraintSense.LE, float(len(absent)))

    builder.constrain(f'{name}_lo', LinExpr.var(y) - present_sum + absent_sum,
                      ConstraintSense.GE, 1.0 - len(present))
    return y
