"""Graphviz export: states as nodes, one labelled edge per (state, input)
with the output annotated after a slash."""

from __future__ import annotations

from .first_type import PureAutomatonFirst, SemigroupAutomatonFirst
from .mealy import MealyElement, MealyMachine
from .second_type import PureAutomatonSecond, SemigroupAutomatonSecond


def _quote(s: str) -> str:
    return '"' + s.replace('"', r'\"') + '"'


def _element_label(table, g: int) -> str:
    if table.names is not None:
        return "".join(f"g{letter}" for letter in table.names[g])
    return f"e{g}"


def to_dot(obj) -> str:
    """Render any automaton or machine as a DOT digraph."""
    lines = ["digraph {", "  rankdir=LR;"]
    if isinstance(obj, (PureAutomatonFirst, PureAutomatonSecond)):
        for a in range(obj.states.size):
            lines.append(f"  {a} [label={_quote(obj.states.label(a))}];")
        for a in range(obj.states.size):
            for x in range(obj.inputs.size):
                label = f"{obj.inputs.label(x)}/{obj.outputs.label(obj.out[a][x])}"
                lines.append(f"  {a} -> {obj.next[a][x]} [label={_quote(label)}];")
    elif isinstance(obj, SemigroupAutomatonFirst):
        for a in range(obj.states.size):
            lines.append(f"  {a} [label={_quote(obj.states.label(a))}];")
        for a in range(obj.states.size):
            for g in range(obj.gamma.order):
                label = f"{_element_label(obj.gamma, g)}/{obj.outputs.label(obj.out[a][g])}"
                lines.append(f"  {a} -> {obj.next[a][g]} [label={_quote(label)}];")
    elif isinstance(obj, SemigroupAutomatonSecond):
        for a in range(obj.states.size):
            lines.append(f"  {a} [label={_quote(obj.states.label(a))}];")
        for a in range(obj.states.size):
            for g in range(obj.gamma.order):
                label = (f"{_element_label(obj.gamma, g)}/"
                         f"{_element_label(obj.sigma, obj.out[a][g])}")
                lines.append(f"  {a} -> {obj.next[a][g]} [label={_quote(label)}];")
    elif isinstance(obj, (MealyMachine, MealyElement)):
        machine = obj.machine if isinstance(obj, MealyElement) else obj
        initial = obj.initial if isinstance(obj, MealyElement) else None
        for q in range(machine.states):
            shape = "doublecircle" if q == initial else "circle"
            lines.append(f"  {q} [shape={shape}];")
        for q in range(machine.states):
            for x in range(machine.alphabet):
                label = f"{x}/{machine.out[q][x]}"
                lines.append(f"  {q} -> {machine.next[q][x]} [label={_quote(label)}];")
    else:
        raise TypeError(f"no DOT renderer for {type(obj).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"
