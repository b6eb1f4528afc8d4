"""Independent computation of every collective property of a graph."""

import math
import statistics

import networkx as nx

from .models import Graph, PropertyReport


def compute_report(graph: Graph) -> PropertyReport:
    """Compute degrees, clustering, distances and degree correlations.

    Args:
        graph: Graph to analyse

    Returns:
        PropertyReport; path scalars are None on disconnected graphs
    """
    n = graph.n
    g = graph.to_networkx()
    nodes = range(1, n + 1)

    degrees = tuple(g.degree(i) for i in nodes)
    triangles_by_node = nx.triangles(g)
    triangles = tuple(triangles_by_node[i] for i in nodes)
    triplets = tuple(math.comb(d, 2) for d in degrees)

    clustering = nx.clustering(g)
    local_cc = tuple(clustering[i] if degrees[i - 1] >= 2 else None for i in nodes)
    avg_cc = sum(value or 0.0 for value in local_cc) / n
    total_triplets = sum(triplets)
    global_cc = sum(triangles) / total_triplets if total_triplets > 0 else None

    lengths = dict(nx.all_pairs_shortest_path_length(g))
    dist = tuple(
        tuple(float(lengths[i].get(j, math.inf)) for j in nodes)
        for i in nodes
    )

    connected = nx.is_connected(g)
    if connected:
        pair_lengths = [lengths[i][j] for i in nodes for j in nodes if i < j]
        diameter = nx.diameter(g)
        apl = nx.average_shortest_path_length(g)
        cpl = (statistics.median_low(pair_lengths), statistics.median_high(pair_lengths))
        centrality = nx.closeness_centrality(g)
        closeness = tuple(centrality[i] for i in nodes)
    else:
        diameter = apl = cpl = closeness = None

    sdn = tuple(sum(degrees[j - 1] for j in g.neighbors(i)) for i in nodes)
    nnd = tuple(degrees.count(q) for q in range(n))
    adn = []
    for q in range(n):
        if q == 0 or nnd[q] == 0:
            adn.append(None)
        else:
            total = sum(sdn[i] for i in range(n) if degrees[i] == q)
            adn.append(total / (q * nnd[q]))

    return PropertyReport(
        n=n,
        degrees=degrees,
        triplets=triplets,
        triangles=triangles,
        local_cc=local_cc,
        avg_cc=avg_cc,
        global_cc=global_cc,
        dist=dist,
        connected=connected,
        diameter=diameter,
        apl=apl,
        cpl=cpl,
        closeness=closeness,
        sdn=sdn,
        nnd=nnd,
        adn=tuple(adn),
    )
