"""A single self-describing JSON schema for every object the command line
handles, with a "type" discriminator.

All indices are zero-based.  Files are written with sorted keys and a
canonical element order, so equal objects produce identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .cascade import CascadeTriplePure, CascadeTripleSemigroup
from .core import FiniteSet, SemigroupTable
from .first_type import PureAutomatonFirst, SemigroupAutomatonFirst
from .mealy import MealyElement, MealyMachine
from .second_type import GeneratorHom, PureAutomatonSecond, SemigroupAutomatonSecond
from .serial import SerialConnection


class SchemaError(ValueError):
    """The file does not match the schema; the message names the spot."""


def _expect(cond: bool, where: str, what: str) -> None:
    if not cond:
        raise SchemaError(f"{where}: {what}")


def _get(data: dict, key: str, where: str):
    _expect(isinstance(data, dict), where, "expected an object")
    _expect(key in data, where, f"missing key {key!r}")
    return data[key]


def _int_table(value, where: str) -> tuple[tuple[int, ...], ...]:
    _expect(isinstance(value, list), where, "expected a list of rows")
    rows = []
    for i, row in enumerate(value):
        _expect(isinstance(row, list), f"{where}[{i}]", "expected a list")
        for j, v in enumerate(row):
            _expect(isinstance(v, int) and not isinstance(v, bool),
                    f"{where}[{i}][{j}]", f"expected an integer, got {v!r}")
        rows.append(tuple(row))
    return tuple(rows)


def _int_list(value, where: str) -> tuple[int, ...]:
    _expect(isinstance(value, list), where, "expected a list")
    for j, v in enumerate(value):
        _expect(isinstance(v, int) and not isinstance(v, bool),
                f"{where}[{j}]", f"expected an integer, got {v!r}")
    return tuple(value)


def dump_finite_set(s: FiniteSet) -> dict:
    data: dict = {"size": s.size}
    if s.labels is not None:
        data["labels"] = list(s.labels)
    return data


def load_finite_set(data, where: str) -> FiniteSet:
    size = _get(data, "size", where)
    _expect(isinstance(size, int) and not isinstance(size, bool), where,
            f"size must be an integer, got {size!r}")
    labels = data.get("labels")
    if labels is not None:
        _expect(isinstance(labels, list), f"{where}.labels", "expected a list")
    try:
        return FiniteSet(size, tuple(labels) if labels is not None else None)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def dump_semigroup_table(t: SemigroupTable) -> dict:
    return {
        "order": t.order,
        "product": [list(r) for r in t.product],
        "generators": list(t.generators) if t.generators is not None else None,
        "names": [list(w) for w in t.names] if t.names is not None else None,
    }


def load_semigroup_table(data, where: str) -> SemigroupTable:
    order = _get(data, "order", where)
    _expect(isinstance(order, int) and not isinstance(order, bool), where,
            "order must be an integer")
    product = _int_table(_get(data, "product", where), f"{where}.product")
    generators = data.get("generators")
    names = data.get("names")
    try:
        return SemigroupTable(
            order, product,
            _int_list(generators, f"{where}.generators") if generators is not None else None,
            tuple(tuple(_int_list(w, f"{where}.names[{i}]"))
                  for i, w in enumerate(names)) if names is not None else None)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def _dump_tables(obj) -> dict:
    return {"next": [list(r) for r in obj.next], "out": [list(r) for r in obj.out]}


def dump_object(obj) -> dict:
    """Serialize any supported object, tagged with its type."""
    if isinstance(obj, PureAutomatonFirst):
        return {"type": "first-pure", "states": dump_finite_set(obj.states),
                "inputs": dump_finite_set(obj.inputs),
                "outputs": dump_finite_set(obj.outputs), **_dump_tables(obj)}
    if isinstance(obj, SemigroupAutomatonFirst):
        return {"type": "first-semigroup", "states": dump_finite_set(obj.states),
                "semigroup": dump_semigroup_table(obj.gamma),
                "outputs": dump_finite_set(obj.outputs), **_dump_tables(obj)}
    if isinstance(obj, PureAutomatonSecond):
        return {"type": "second-pure", "states": dump_finite_set(obj.states),
                "inputs": dump_finite_set(obj.inputs),
                "outputs": dump_finite_set(obj.outputs), **_dump_tables(obj)}
    if isinstance(obj, SemigroupAutomatonSecond):
        return {"type": "second-semigroup", "states": dump_finite_set(obj.states),
                "semigroup": dump_semigroup_table(obj.gamma),
                "sigma": dump_semigroup_table(obj.sigma), **_dump_tables(obj)}
    if isinstance(obj, CascadeTriplePure):
        return {"type": "cascade-triple", "inputs": dump_finite_set(obj.inputs),
                "alpha": [list(r) for r in obj.alpha], "beta": list(obj.beta)}
    if isinstance(obj, CascadeTripleSemigroup):
        return {"type": "cascade-triple", "gamma": dump_semigroup_table(obj.gamma),
                "alpha": [list(r) for r in obj.alpha], "beta": list(obj.beta)}
    if isinstance(obj, MealyElement):
        data = dump_object(obj.machine)
        data["initial"] = obj.initial
        return data
    if isinstance(obj, MealyMachine):
        return {"type": "mealy", "states": obj.states, "alphabet": obj.alphabet,
                "next": [list(r) for r in obj.next], "out": [list(r) for r in obj.out]}
    if isinstance(obj, GeneratorHom):
        return {"type": "generator-hom", "alphabet_size": obj.alphabet_size,
                "target": dump_semigroup_table(obj.target),
                "assignment": list(obj.assignment)}
    if isinstance(obj, SerialConnection):
        return {"type": "serial", "first": dump_object(obj.first),
                "second": dump_object(obj.second),
                "alpha": [list(r) for r in obj.alpha]}
    raise TypeError(f"no schema for {type(obj).__name__}")


def load_object(data, where: str = "file"):
    """Deserialize any supported object by its type tag."""
    kind = _get(data, "type", where)
    try:
        if kind == "first-pure":
            return PureAutomatonFirst(
                load_finite_set(_get(data, "states", where), f"{where}.states"),
                load_finite_set(_get(data, "inputs", where), f"{where}.inputs"),
                load_finite_set(_get(data, "outputs", where), f"{where}.outputs"),
                _int_table(_get(data, "next", where), f"{where}.next"),
                _int_table(_get(data, "out", where), f"{where}.out"))
        if kind == "first-semigroup":
            return SemigroupAutomatonFirst(
                load_finite_set(_get(data, "states", where), f"{where}.states"),
                load_semigroup_table(_get(data, "semigroup", where), f"{where}.semigroup"),
                load_finite_set(_get(data, "outputs", where), f"{where}.outputs"),
                _int_table(_get(data, "next", where), f"{where}.next"),
                _int_table(_get(data, "out", where), f"{where}.out"))
        if kind == "second-pure":
            return PureAutomatonSecond(
                load_finite_set(_get(data, "states", where), f"{where}.states"),
                load_finite_set(_get(data, "inputs", where), f"{where}.inputs"),
                load_finite_set(_get(data, "outputs", where), f"{where}.outputs"),
                _int_table(_get(data, "next", where), f"{where}.next"),
                _int_table(_get(data, "out", where), f"{where}.out"))
        if kind == "second-semigroup":
            return SemigroupAutomatonSecond(
                load_finite_set(_get(data, "states", where), f"{where}.states"),
                load_semigroup_table(_get(data, "semigroup", where), f"{where}.semigroup"),
                load_semigroup_table(_get(data, "sigma", where), f"{where}.sigma"),
                _int_table(_get(data, "next", where), f"{where}.next"),
                _int_table(_get(data, "out", where), f"{where}.out"))
        if kind == "cascade-triple":
            alpha = _int_table(_get(data, "alpha", where), f"{where}.alpha")
            beta = _int_list(_get(data, "beta", where), f"{where}.beta")
            if "gamma" in data:
                return CascadeTripleSemigroup(
                    load_semigroup_table(data["gamma"], f"{where}.gamma"), alpha, beta)
            inputs = (load_finite_set(data["inputs"], f"{where}.inputs")
                      if "inputs" in data else FiniteSet(len(beta)))
            return CascadeTriplePure(inputs, alpha, beta)
        if kind == "mealy":
            states = _get(data, "states", where)
            alphabet = _get(data, "alphabet", where)
            _expect(isinstance(states, int) and isinstance(alphabet, int), where,
                    "states and alphabet must be integers")
            machine = MealyMachine(
                states, alphabet,
                _int_table(_get(data, "next", where), f"{where}.next"),
                _int_table(_get(data, "out", where), f"{where}.out"))
            if "initial" in data:
                initial = data["initial"]
                _expect(isinstance(initial, int), f"{where}.initial", "must be an integer")
                return MealyElement(machine, initial)
            return machine
        if kind == "generator-hom":
            alphabet_size = _get(data, "alphabet_size", where)
            _expect(isinstance(alphabet_size, int), where, "alphabet_size must be an integer")
            return GeneratorHom(
                alphabet_size,
                load_semigroup_table(_get(data, "target", where), f"{where}.target"),
                _int_list(_get(data, "assignment", where), f"{where}.assignment"))
        if kind == "serial":
            first = load_object(_get(data, "first", where), f"{where}.first")
            second = load_object(_get(data, "second", where), f"{where}.second")
            _expect(isinstance(first, SemigroupAutomatonFirst), f"{where}.first",
                    "must be a first-semigroup automaton")
            _expect(isinstance(second, SemigroupAutomatonFirst), f"{where}.second",
                    "must be a first-semigroup automaton")
            return SerialConnection(first, second,
                                    _int_table(_get(data, "alpha", where), f"{where}.alpha"))
    except ValueError as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"{where}: {exc}") from exc
    raise SchemaError(f"{where}: unknown type {kind!r}")


def dumps(obj) -> str:
    return json.dumps(dump_object(obj), indent=2, sort_keys=True) + "\n"


def save(path: str | Path, obj) -> None:
    Path(path).write_text(dumps(obj))


def load(path: str | Path):
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    return load_object(data, where=str(path))
