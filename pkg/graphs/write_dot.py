"""DOT export with degree labels."""

from .models import Graph


def format_dot(graph: Graph, name: str = 'G') -> str:
    """Render a graph in DOT with each node labelled by its degree."""
    degrees = graph.degrees()
    lines = [f'graph "{name}" {{']
    lines.extend(f'  {i} [label="{degrees[i - 1]}"];' for i in range(1, graph.n + 1))
    lines.extend(f'  {i} -- {j};' for i, j in graph.sorted_edges())
    lines.append('}')
    return '\n'.join(lines) + '\n'


def write_dot(graph: Graph, path: str, name: str = 'G') -> tuple[bool, str]:
    """Write a DOT file.

    Returns:
        Tuple of (success, message/error)
    """
    try:
        with open(path, 'w') as f:
            f.write(format_dot(graph, name))
        return True, f'Wrote {path}'
    except OSError as e:
        return False, str(e)
