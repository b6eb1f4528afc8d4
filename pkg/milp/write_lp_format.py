"""CPLEX-LP text export."""

import math

from .models import ConstraintSense, MilpModel, ObjectiveSense

_SENSES = {
    ConstraintSense.LE: '<=',
    ConstraintSense.EQ: '=',
    ConstraintSense.GE: '>=',
}


def format_number(value: float) -> str:
    """Format a number with 12 significant digits and no negative zero."""
    if value == 0:
        return '0'
    if math.isinf(value):
        return '+inf' if value > 0 else '-inf'
    return f'{value:.12g}'


def _format_term(coef: float, name: str) -> str:
    sign = '+' if coef >= 0 else '-'
    return f' {sign}{format_number(abs(coef))} {name}'


def write_lp_format(model: MilpModel) -> str:
    """Render a model in the CPLEX LP dialect.

    Args:
        model: Model to export (must have at least one variable)

    Returns:
        LP text; identical models give identical bytes
    """
    if not model.variables:
        raise ValueError('Cannot export an empty model')

    names = [variable.name for variable in model.variables]
    lines = [f'\\* {model.name} *\\', '']

    lines.append('Maximize' if model.objective.sense is ObjectiveSense.MAXIMIZE else 'Minimize')
    lines.append('obj:')
    if model.objective.terms:
        lines.extend(_format_term(coef, names[var_id]) for var_id, coef in model.objective.terms)
    else:
        lines.append(f' 0 {names[0]}')
    lines.append('')

    lines.append('Subject To')
    for constraint in model.constraints:
        lines.append(f'{constraint.name}:')
        if constraint.terms:
            lines.extend(_format_term(coef, names[var_id]) for var_id, coef in constraint.terms)
        else:
            lines.append(f' 0 {names[0]}')
        lines.append(f' {_SENSES[constraint.sense]} {format_number(constraint.rhs)}')
    lines.append('')

    lines.append('Bounds')
    for variable in model.variables:
        if variable.lower == variable.upper:
            lines.append(f' {variable.name} = {format_number(variable.lower)}')
        else:
            lines.append(f' {format_number(variable.lower)} <= {variable.name} '
                         f'<= {format_number(variable.upper)}')
    lines.append('')

    binaries = [variable.name for variable in model.variables if variable.is_binary]
    if binaries:
        lines.append('Binaries')
        lines.extend(f' {name}' for name in binaries)
        lines.append('')

    lines.append('End')
    return '\n'.join(lines) + '\n'
