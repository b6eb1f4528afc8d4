"""Motif occurrence counts."""

import itertools
import math

import networkx as nx

from formulation.models import MotifKind

from .models import Graph


def count_motifs(graph: Graph, kind: MotifKind) -> int:
    """Count occurrences of a motif.

    Two-paths are counted per centre and unordered endpoint pair (open or
    closed), triangles and 4-cliques once per node set, 4-stars per centre
    with three mutually non-adjacent leaves.

    Args:
        graph: Graph to count in
        kind: Motif kind

    Returns:
        Number of occurrences
    """
    g = graph.to_networkx()
    if kind is MotifKind.TWO_PATH:
        return sum(math.comb(d, 2) for _, d in g.degree())
    if kind is MotifKind.TRIANGLE:
        return sum(nx.triangles(g).values()) // 3
    if kind is MotifKind.CLIQUE4:
        return sum(1 for clique in nx.enumerate_all_cliques(g) if len(clique) == 4)
    count = 0
    for centre in g.nodes:
        for leaves in itertools.combinations(sorted(g.neighbors(centre)), 3):
            if not any(g.has_edge(a, b) for a, b in itertools.combinations(leaves, 2)):
                count += 1
    return count
