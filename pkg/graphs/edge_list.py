"""Edge-list text format: an 'n' header line, then one 'i j' line per edge."""

import os
from typing import Optional

from .models import Graph


def format_edge_list(graph: Graph) -> str:
    """Render a graph as edge-list text."""
    lines = [str(graph.n)]
    lines.extend(f'{i} {j}' for i, j in graph.sorted_edges())
    return '\n'.join(lines) + '\n'


def parse_edge_list(text: str) -> tuple[Optional[Graph], str]:
    """Parse edge-list text.

    Args:
        text: File contents; '#' lines and blank lines are ignored

    Returns:
        Tuple of (graph, message); graph is None when the text is malformed
    """
    rows = [line.split() for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith('#')]
    if not rows or len(rows[0]) != 1:
        return None, 'Missing node count header'
    try:
        n = int(rows[0][0])
        pairs = []
        for row in rows[1:]:
            if len(row) != 2:
                return None, f'Malformed edge line: {" ".join(row)}'
            pairs.append((int(row[0]), int(row[1])))
    except ValueError as e:
        return None, f'Invalid integer: {e}'
    normalized = [(min(i, j), max(i, j)) for i, j in pairs]
    if len(set(normalized)) != len(normalized):
        return None, 'Duplicate edge'
    try:
        return Graph.from_edges(n, pairs), f'Read graph with {n} nodes and {len(pairs)} edges'
    except ValueError as e:
        return None, str(e)


def write_edge_list(graph: Graph, path: str) -> tuple[bool, str]:
    """Write a graph to an edge-list file.

    Returns:
        Tuple of (success, message/error)
    """
    try:
        with open(path, 'w') as f:
            f.write(format_edge_list(graph))
        return True, f'Wrote {path}'
    except OSError as e:
        return False, str(e)


def read_edge_list(path: str) -> tuple[Optional[Graph], str]:
    """Read an edge-list file.

    Returns:
        Tuple of (graph, message); graph is None on failure
    """
    if not os.path.isfile(path):
        return None, f'No such file: {path}'
    try:
        with open(path, 'r') as f:
            text = f.read()
    except OSError as e:
        return None, str(e)
    return parse_edge_list(text)
