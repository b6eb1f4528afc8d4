"""Every labeled graph on n nodes."""

from typing import Iterator

from config import FormulationConfig
from graphs import Graph

from ._utils import graph_from_mask, pair_order


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Yield all 2^C(n,2) labeled graphs in mask order.

    Bit k of the mask selects the k-th pair in lexicographic (i, j) order,
    so the empty graph comes first and the complete graph last.

    Args:
        n: Node count, 2 <= n <= 6

    Raises:
        ValueError: n outside the supported range
    """
    if not 2 <= n <= FormulationConfig.ORACLE_MAX_N:
        raise ValueError(f'Graph enumeration supports 2 <= n <= {FormulationConfig.ORACLE_MAX_N}, got {n}')
    pairs = pair_order(n)
    for mask in range(1 << len(pairs)):
        yield graph_from_mask(n, mask, pairs)
