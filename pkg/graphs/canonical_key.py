"""Canonical isomorphism key for small graphs."""

from config import FormulationConfig

from .models import Graph

Partition = list[list[int]]


def _refine(partition: Partition, adjacency: list[set[int]]) -> Partition:
    """Split cells by neighbour counts per cell until the partition is equitable."""
    while True:
        cell_of = {}
        for index, cell in enumerate(partition):
            for v in cell:
                cell_of[v] = index
        refined: Partition = []
        for cell in partition:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                counts = [0] * len(partition)
                for u in adjacency[v]:
                    counts[cell_of[u]] += 1
                groups.setdefault(tuple(counts), []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(partition):
            return refined
        partition = refined


def _code(order: list[int], adjacency: list[set[int]]) -> int:
    value = 0
    for a in range(len(order)):
        neighbors = adjacency[order[a]]
        for b in range(a + 1, len(order)):
            value = (value << 1) | (order[b] in neighbors)
    return value


def _twins(u: int, v: int, adjacency: list[set[int]]) -> bool:
    return adjacency[u] - {v} == adjacency[v] - {u}


def canonical_key(graph: Graph) -> bytes:
    """Return a key equal for two graphs iff they are isomorphic.

    The key is the smallest upper-triangle adjacency bitstring over the
    vertex orders reached by individualizing vertices of the first
    non-singleton cell and refining. Interchangeable twins are tried once.

    Args:
        graph: Graph with at most 12 nodes

    Returns:
        Node count byte followed by the packed bitstring
    """
    n = graph.n
    if n > FormulationConfig.CANONICAL_MAX_N:
        raise ValueError(f'canonical_key supports n <= {FormulationConfig.CANONICAL_MAX_N}, got {n}')
    adjacency = [set() for _ in range(n)]
    for i, j in graph.edges:
        adjacency[i - 1].add(j - 1)
        adjacency[j - 1].add(i - 1)

    best = None
    stack = [_refine([list(range(n))], adjacency)]
    while stack:
        partition = stack.pop()
        target = next((k for k, cell in enumerate(partition) if len(cell) > 1), None)
        if target is None:
            code = _code([cell[0] for cell in partition], adjacency)
            if best is None or code < best:
                best = code
            continue
        cell = sorted(partition[target])
        tried: list[int] = []
        for v in cell:
            if any(_twins(u, v, adjacency) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            child = partition[:target] + [[v], rest] + partition[target + 1:]
            stack.append(_refine(child, adjacency))

    pairs = n * (n - 1) // 2
    return bytes([n]) + best.to_bytes((pairs + 7) // 8, 'big')
