"""Solution text parsing."""

from typing import Optional


def read_assignment(text: str) -> tuple[Optional[dict[str, float]], str]:
    """Parse 'name value' lines into an assignment.

    Blank lines and lines starting with '#' are skipped, so solution files
    written by common MILP tools can be read directly.

    Args:
        text: Solution file contents

    Returns:
        Tuple of (assignment, message); assignment is None on parse errors
    """
    assignment: dict[str, float] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        parts = line.split()
        if len(parts) != 2:
            return None, f'Line {line_number}: expected "name value", got {raw!r}'
        name, value = parts
        try:
            number = float(value)
        except ValueError:
            return None, f'Line {line_number}: invalid value {value!r}'
        if name in assignment:
            return None, f'Line {line_number}: duplicate variable {name}'
        assignment[name] = number
    return assignment, f'Read {len(assignment)} values'
