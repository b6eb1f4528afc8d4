"""JSON spec files.

A spec file is an object with keys ``version``, ``n``, ``constraints``,
``objective``, ``symmetry``, ``motif_mode``, ``epsilon``, ``path_flows`` and
``solver``. Unknown keys are rejected at every level. The ``solver`` block
is passed through as a dict for the solver to validate.
"""

import json
import os
from typing import Any, Optional

from config import FormulationConfig

from .models import (
    AdnByDegree,
    AveragePathLength,
    AvgClustering,
    CharacteristicPathLength,
    ClosenessSequence,
    DegreeBounds,
    DegreeSequence,
    Diameter,
    GlobalClustering,
    MinDegreeSpan,
    MotifCount,
    MotifKind,
    MotifMode,
    NetworkSpec,
    NonNull,
    Objective,
    ObjectiveMode,
    PathFlows,
    PropertyConstraint,
    PropertyName,
    SecondaryCriterion,
    SpecError,
    SymmetryConfig,
    SymmetryMode,
)

_TOP_KEYS = {'version', 'n', 'constraints', 'objective', 'symmetry', 'motif_mode', 'epsilon',
             'path_flows', 'solver'}

_BAND_KINDS = {
    AvgClustering.kind: AvgClustering,
    GlobalClustering.kind: GlobalClustering,
    AveragePathLength.kind: AveragePathLength,
    CharacteristicPathLength.kind: CharacteristicPathLength,
    Diameter.kind: Diameter,
}


def _check_keys(data: Any, allowed: set[str], where: str) -> dict:
    if not isinstance(data, dict):
        raise SpecError(f'{where}: expected an object')
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise SpecError(f'{where}: unknown keys {unknown}')
    return data


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SpecError(f'{where}: expected a number, got {value!r}')
    return float(value)


def _integer(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(f'{where}: expected an integer, got {value!r}')
    return value


def _band(value: Any, where: str) -> tuple[float, float]:
    if not isinstance(value, list) or len(value) != 2:
        raise SpecError(f'{where}: expected a [lo, hi] pair')
    return _number(value[0], where), _number(value[1], where)


def _enum(enum_type, value: Any, where: str):
    try:
        return enum_type(value)
    except ValueError:
        choices = ', '.join(member.value for member in enum_type)
        raise SpecError(f'{where}: {value!r} is not one of {choices}') from None


def _require(data: dict, key: str, where: str) -> Any:
    if key not in data:
        raise SpecError(f'{where}: missing {key!r}')
    return data[key]


def _parse_constraint(data: Any, where: str) -> PropertyConstraint:
    if not isinstance(data, dict) or 'kind' not in data:
        raise SpecError(f'{where}: expected an object with a kind')
    kind = data['kind']

    if kind in _BAND_KINDS:
        _check_keys(data, {'kind', 'band'}, where)
        return _BAND_KINDS[kind](_band(_require(data, 'band', where), where))
    if kind == DegreeBounds.kind:
        _check_keys(data, {'kind', 'lower', 'upper', 'nodes'}, where)
        nodes = data.get('nodes')
        if nodes is not None:
            if not isinstance(nodes, list):
                raise SpecError(f'{where}: nodes must be a list')
            nodes = tuple(_integer(v, where) for v in nodes)
        return DegreeBounds(_integer(_require(data, 'lower', where), where),
                            _integer(_require(data, 'upper', where), where), nodes)
    if kind == DegreeSequence.kind:
        _check_keys(data, {'kind', 'values'}, where)
        values = _require(data, 'values', where)
        if not isinstance(values, list):
            raise SpecError(f'{where}: values must be a list')
        return DegreeSequence(tuple(_integer(v, where) for v in values))
    if kind == ClosenessSequence.kind:
        _check_keys(data, {'kind', 'bands'}, where)
        bands = _require(data, 'bands', where)
        if not isinstance(bands, list):
            raise SpecError(f'{where}: bands must be a list')
        return ClosenessSequence(tuple(_band(band, where) for band in bands))
    if kind == AdnByDegree.kind:
        _check_keys(data, {'kind', 'bands'}, where)
        bands = _require(data, 'bands', where)
        if not isinstance(bands, dict):
            raise SpecError(f'{where}: bands must map degree classes to [lo, hi]')
        try:
            parsed = tuple(sorted((int(q), _band(band, where)) for q, band in bands.items()))
        except ValueError:
            raise SpecError(f'{where}: degree classes must be integers') from None
        return AdnByDegree(parsed)
    if kind == MinDegreeSpan.kind:
        _check_keys(data, {'kind', 'span'}, where)
        return MinDegreeSpan(_integer(_require(data, 'span', where), where))
    if kind == NonNull.kind:
        _check_keys(data, {'kind'}, where)
        return NonNull()
    if kind == MotifCount.kind:
        _check_keys(data, {'kind', 'motif', 'band'}, where)
        return MotifCount(_enum(MotifKind, _require(data, 'motif', where), where),
                          _band(_require(data, 'band', where), where))
    raise SpecError(f'{where}: unknown constraint kind {kind!r}')


def parse_spec(data: Any) -> tuple[NetworkSpec, dict]:
    """Turn decoded JSON into a NetworkSpec.

    Args:
        data: Decoded spec document

    Returns:
        Tuple of (spec, solver settings dict)
    """
    _check_keys(data, _TOP_KEYS, 'spec')
    version = data.get('version', FormulationConfig.SPEC_VERSION)
    if version != FormulationConfig.SPEC_VERSION:
        raise SpecError(f'Unsupported spec version {version!r}')
    n = _integer(_require(data, 'n', 'spec'), 'n')

    raw_constraints = data.get('constraints', [])
    if not isinstance(raw_constraints, list):
        raise SpecError('constraints must be a list')
    constraints = tuple(_parse_constraint(item, f'constraints[{index}]')
                        for index, item in enumerate(raw_constraints))

    raw_objective = _check_keys(data.get('objective', {}), {'mode', 'property'}, 'objective')
    objective = Objective(
        _enum(ObjectiveMode, raw_objective.get('mode', ObjectiveMode.MIN_SLACK.value), 'objective'),
        _enum(PropertyName, raw_objective['property'], 'objective')
        if raw_objective.get('property') is not None else None,
    )

    raw_symmetry = _check_keys(data.get('symmetry', {}), {'mode', 'secondary'}, 'symmetry')
    symmetry = SymmetryConfig(
        _enum(SymmetryMode, raw_symmetry.get('mode', SymmetryMode.PRIMARY.value), 'symmetry'),
        _enum(SecondaryCriterion, raw_symmetry['secondary'], 'symmetry')
        if raw_symmetry.get('secondary') is not None else None,
    )

    solver = data.get('solver', {})
    if not isinstance(solver, dict):
        raise SpecError('solver: expected an object')

    spec = NetworkSpec(
        n=n,
        constraints=constraints,
        objective=objective,
        symmetry=symmetry,
        motif_mode=_enum(MotifMode, data.get('motif_mode', MotifMode.DISAGGREGATED.value), 'motif_mode'),
        epsilon=_number(data.get('epsilon', FormulationConfig.EPSILON), 'epsilon'),
        path_flows=_enum(PathFlows, data.get('path_flows', PathFlows.CONTINUOUS.value), 'path_flows'),
    )
    return spec, dict(solver)


def _constraint_to_dict(constraint: PropertyConstraint) -> dict:
    out: dict[str, Any] = {'kind': constraint.kind}
    if isinstance(constraint, DegreeBounds):
        out.update(lower=constraint.lower, upper=constraint.upper)
        if constraint.nodes is not None:
            out['nodes'] = list(constraint.nodes)
    elif isinstance(constraint, DegreeSequence):
        out['values'] = list(constraint.values)
    elif isinstance(constraint, ClosenessSequence):
        out['bands'] = [list(band) for band in constraint.bands]
    elif isinstance(constraint, AdnByDegree):
        out['bands'] = {str(q): list(band) for q, band in constraint.bands}
    elif isinstance(constraint, MinDegreeSpan):
        out['span'] = constraint.span
    elif isinstance(constraint, MotifCount):
        out.update(motif=constraint.motif.value, band=list(constraint.band))
    elif not isinstance(constraint, NonNull):
        out['band'] = list(constraint.band)
    return out


def spec_to_dict(spec: NetworkSpec, solver: Optional[dict] = None) -> dict:
    """Serialize a spec into the JSON document parse_spec accepts."""
    objective: dict[str, Any] = {'mode': spec.objective.mode.value}
    if spec.objective.property is not None:
        objective['property'] = spec.objective.property.value
    symmetry: dict[str, Any] = {'mode': spec.symmetry.mode.value}
    if spec.symmetry.secondary is not None:
        symmetry['secondary'] = spec.symmetry.secondary.value
    return {
        'version': FormulationConfig.SPEC_VERSION,
        'n': spec.n,
        'constraints': [_constraint_to_dict(c) for c in spec.constraints],
        'objective': objective,
        'symmetry': symmetry,
        'motif_mode': spec.motif_mode.value,
        'epsilon': spec.epsilon,
        'path_flows': spec.path_flows.value,
        'solver': dict(solver or {}),
    }


def load_spec(path: str) -> tuple[Optional[tuple[NetworkSpec, dict]], str]:
    """Read and parse a spec file.

    Returns:
        Tuple of ((spec, solver settings), message); the first item is None
        when the file is missing or malformed
    """
    if not os.path.isfile(path):
        return None, f'No such file: {path}'
    try:
        with open(path, 'r') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        return None, f'Malformed JSON in {path}: {e}'
    except OSError as e:
        return None, str(e)
    try:
        spec, solver = parse_spec(data)
    except SpecError as e:
        return None, f'Invalid spec {path}: {e}'
    return (spec, solver), f'Loaded spec with n={spec.n} and {len(spec.constraints)} constraints'
