from __future__ import annotations

import math
from pathlib import Path

import pytest

from formulation import MotifKind
from graphs import (
    Graph,
    canonical_key,
    compute_report,
    count_motifs,
    format_dot,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from oracle import enumerate_graphs

PATH3 = Graph.from_edges(3, [(1, 2), (2, 3)])
TRIANGLE = Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])
STAR4 = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


def test_graph_normalizes_and_validates_edges() -> None:
    graph = Graph.from_edges(4, [(2, 1), (4, 3)])
    assert graph.sorted_edges() == [(1, 2), (3, 4)]
    assert graph.has_edge(2, 1)
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 4)}))


def test_report_of_path_on_three_nodes() -> None:
    report = compute_report(PATH3)
    assert report.degrees == (1, 2, 1)
    assert report.cpl == (1, 1)
    assert report.apl == pytest.approx(4 / 3)
    assert report.diameter == 2
    assert report.closeness == pytest.approx((2 / 3, 1.0, 2 / 3))
    assert report.local_cc == (None, 0.0, None)
    assert report.global_cc == 0.0


def test_report_of_triangle_and_star() -> None:
    triangle = compute_report(TRIANGLE)
    assert triangle.avg_cc == pytest.approx(1.0)
    assert triangle.global_cc == pytest.approx(1.0)
    assert triangle.triangles == (1, 1, 1)

    star = compute_report(STAR4)
    assert star.adn[1] == pytest.approx(3.0)
    assert star.adn[3] == pytest.approx(1.0)
    assert star.sdn == (3, 3, 3, 3)
    assert star.nnd[1] == 3


def test_even_pair_count_gives_cpl_interval() -> None:
    # path on 4 nodes: distances 1,1,1,2,2,3 with median between 1 and 2
    report = compute_report(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)]))
    assert report.cpl == (1, 2)


def test_disconnected_graph_has_undefined_path_scalars() -> None:
    report = compute_report(Graph.from_edges(4, [(1, 2)]))
    assert not report.connected
    assert report.diameter is None and report.apl is None and report.cpl is None
    assert math.isinf(report.dist[0][3])


def test_count_motifs() -> None:
    k4 = Graph.from_edges(4, [(i, j) for i in range(1, 5) for j in range(i + 1, 5)])
    assert count_motifs(k4, MotifKind.TRIANGLE) == 4
    assert count_motifs(k4, MotifKind.CLIQUE4) == 1
    assert count_motifs(k4, MotifKind.TWO_PATH) == 12
    assert count_motifs(k4, MotifKind.STAR4) == 0
    assert count_motifs(STAR4, MotifKind.STAR4) == 1
    assert count_motifs(PATH3, MotifKind.TWO_PATH) == 1


def test_canonical_key_is_invariant_under_relabeling() -> None:
    graph = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 3)])
    relabeled = graph.relabel({1: 5, 2: 3, 3: 1, 4: 2, 5: 4})
    assert canonical_key(graph) == canonical_key(relabeled)
    assert canonical_key(graph) != canonical_key(Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)]))


@pytest.mark.parametrize('n, classes', [(3, 4), (4, 11), (5, 34)])
def test_canonical_key_counts_unlabeled_graphs(n: int, classes: int) -> None:
    assert len({canonical_key(graph) for graph in enumerate_graphs(n)}) == classes


def test_edge_list_round_trip(tmp_path: Path) -> None:
    path = tmp_path / 'g.edges'
    ok, _ = write_edge_list(TRIANGLE, str(path))
    assert ok
    graph, _ = read_edge_list(str(path))
    assert graph == TRIANGLE


@pytest.mark.parametrize('text', ['', '3\n1\n', '3\n1 2\n2 1\n', '3\n1 4\n', 'x\n'])
def test_parse_edge_list_rejects_malformed_text(text: str) -> None:
    graph, _ = parse_edge_list(text)
    assert graph is None


def test_format_dot_labels_nodes_by_degree() -> None:
    text = format_dot(PATH3, 'p3')
    assert text.startswith('graph "p3" {')
    assert '  2 [label="2"];' in text
    assert '  1 -- 2;' in text
