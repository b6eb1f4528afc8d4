from __future__ import annotations

import pytest

from milp import (
    ConstraintSense,
    LinExpr,
    MilpModel,
    ModelError,
    ObjectiveSense,
    VariableKind,
    read_assignment,
    write_lp_format,
)


def _small_model() -> MilpModel:
    model = MilpModel('toy')
    x1 = model.add_variable('x1', VariableKind.BINARY, 0, 1)
    x2 = model.add_variable('x2', VariableKind.BINARY, 0, 1)
    s = model.add_variable('s', lower=0.0, upper=2.5)
    model.add_linear_constraint('cap', [(x1, 1.0), (x2, 1.0)], ConstraintSense.LE, 1.0)
    model.add_linear_constraint('link', [(x1, 1.0), (s, -1.0), (x1, 1.0)], ConstraintSense.GE, -0.5)
    model.set_objective(ObjectiveSense.MAXIMIZE, [(x1, 1.0), (x2, 1.0)])
    return model


def test_linexpr_arithmetic_keeps_constant_separate() -> None:
    expr = LinExpr.var(0, 2.0) + LinExpr.var(1) - 3
    expr = 1 - expr * 2
    assert expr.terms == {0: -4.0, 1: -2.0}
    assert expr.constant == 7.0
    assert expr.value([1.0, 0.5]) == pytest.approx(2.0)


def test_linexpr_sum_drops_cancelled_terms() -> None:
    expr = LinExpr.sum([LinExpr.var(3), LinExpr.var(3, -1.0), 4])
    assert expr.value([0.0, 0.0, 0.0, 9.0]) == 4.0


def test_add_linear_constraint_merges_repeated_variables() -> None:
    model = _small_model()
    link = model.constraints[1]
    assert dict(link.terms) == {0: 2.0, 2: -1.0}


def test_duplicate_names_are_rejected() -> None:
    model = _small_model()
    with pytest.raises(ModelError):
        model.add_variable('x1')
    with pytest.raises(ModelError):
        model.add_linear_constraint('cap', [(0, 1.0)], ConstraintSense.LE, 1.0)


def test_binary_bounds_and_inverted_bounds_are_rejected() -> None:
    model = MilpModel()
    with pytest.raises(ModelError):
        model.add_variable('b', VariableKind.BINARY, 0, 2)
    with pytest.raises(ModelError):
        model.add_variable('c', lower=3.0, upper=1.0)


def test_frozen_model_refuses_changes_but_copy_is_extensible() -> None:
    model = _small_model()
    model.freeze()
    with pytest.raises(ModelError):
        model.add_variable('late')
    clone = model.copy()
    clone.add_linear_constraint('cut', [(0, 1.0)], ConstraintSense.LE, 0.0)
    assert clone.num_constraints == model.num_constraints + 1
    assert not clone.frozen


def test_write_lp_format_is_deterministic_and_complete() -> None:
    text = write_lp_format(_small_model())
    assert text == write_lp_format(_small_model())
    assert text.startswith('\\* toy *\\')
    for section in ('Maximize', 'Subject To', 'Bounds', 'Binaries', 'End'):
        assert section in text
    assert 'cap:\n +1 x1\n +1 x2\n <= 1\n' in text
    assert ' 0 <= s <= 2.5' in text


def test_read_assignment_accepts_comments_and_rejects_garbage() -> None:
    assignment, _ = read_assignment('# solution\nx1 1\n\nx2 0.0\n')
    assert assignment == {'x1': 1.0, 'x2': 0.0}

    assignment, message = read_assignment('x1 one\n')
    assert assignment is None
    assert 'Line 1' in message

    assignment, message = read_assignment('x1 1\nx1 0\n')
    assert assignment is None
    assert 'duplicate' in message
