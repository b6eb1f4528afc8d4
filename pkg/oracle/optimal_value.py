"""Exact extremum of a property over the feasible set."""

from dataclasses import replace
from typing import Optional

from formulation import NetworkSpec, Objective, ObjectiveMode, PropertyName
from graphs import Graph

from .feasible_graphs import feasible_graphs


def optimal_value(spec: NetworkSpec, prop: Optional[PropertyName] = None,
                  mode: Optional[ObjectiveMode] = None, workers: int = 1) -> tuple[float, Graph]:
    """Best property value over the graphs that satisfy every constraint.

    Graphs on which the property is undefined are skipped. Path properties
    restrict the scan to connected graphs, as the model does.

    Args:
        spec: Specification with n <= 6
        prop: Property to optimize; defaults to the spec's objective property
        mode: MAXIMIZE or MINIMIZE; defaults to the spec's objective mode
        workers: Number of processes

    Returns:
        Tuple of (optimum, witness graph)

    Raises:
        ValueError: no property given, or no feasible graph has a defined value
    """
    prop = prop or spec.objective.property
    mode = mode or spec.objective.mode
    if prop is None or mode is ObjectiveMode.MIN_SLACK:
        raise ValueError('optimal_value needs a property and a maximize or minimize mode')
    report = feasible_graphs(replace(spec, objective=Objective(mode, prop)), workers)
    if report.optimum is None:
        raise ValueError(f'No feasible graph has a defined {prop.value}')
    return report.optimum, report.optimum_witness
