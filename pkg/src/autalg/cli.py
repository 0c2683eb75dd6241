"""Command-line front end.

Exit codes are uniform across verbs: 0 for a pass or a computed result,
1 for a failed property (an axiom violation, an incompatible quotient, a
false equality), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import dot as dot_mod
from . import schema
from .cascade import (
    CascadeTriplePure,
    CascadeTripleSemigroup,
    cascade_pure,
    cascade_semigroup,
    check_pure_triple,
    check_semigroup_triple,
    embed_into_wreath,
    wreath_automaton,
    wreath_product,
)
from .core import CapExceeded, CheckReport, DEFAULT_CAP, VerificationError, Word, all_words
from .first_type import (
    PureAutomatonFirst,
    SemigroupAutomatonFirst,
    act_word,
    check_first_axioms,
    semigroupify,
)
from .mealy import (
    MealyElement,
    MealyMachine,
    element_apply,
    element_compose,
    element_equal,
    element_invert,
    element_order_bounded,
    is_invertible,
    minimize_element,
)
from .second_type import (
    GeneratorHom,
    PureAutomatonSecond,
    QuotientWitness,
    SemigroupAutomatonSecond,
    act_letters,
    check_second_axioms,
    free_extension_out,
    quotient_construct,
)
from .serial import NotInvertible, SerialConnection, check_serial, derive_second_type, serial_from_second


@dataclass(frozen=True)
class CommandResult:
    """What a command concluded: a status, an optional counterexample, and
    any files it wrote."""

    status: str  # pass | fail | error
    witness: object = None
    artifact_paths: tuple[str, ...] = ()
    message: str = ""

    def __post_init__(self) -> None:
        if self.status not in ("pass", "fail", "error"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError("fail results carry a witness")

    @property
    def exit_code(self) -> int:
        return {"pass": 0, "fail": 1, "error": 2}[self.status]


def _passed(message: str = "pass", paths: tuple[str, ...] = ()) -> CommandResult:
    return CommandResult("pass", artifact_paths=paths, message=message)


def _failed(witness, message: str) -> CommandResult:
    return CommandResult("fail", witness=witness, message=message)


def parse_word(tokens: list[str], alphabet_size: int) -> Word:
    """Letters as whitespace-separated labels; a single all-digit token is
    also accepted one character per letter when that can be unambiguous."""
    if (len(tokens) == 1 and len(tokens[0]) > 1 and alphabet_size <= 10
            and all(c.isdigit() for c in tokens[0])):
        letters = tuple(int(c) for c in tokens[0])
    else:
        try:
            letters = tuple(int(t) for t in tokens)
        except ValueError:
            raise ValueError(f"cannot parse word from {tokens!r}") from None
    return Word(letters, alphabet_size)


def format_word(w: Word) -> str:
    return " ".join(str(letter) for letter in w.letters)


def _write(path: str | None, obj, paths: list[str]) -> str:
    if path is None:
        return schema.dumps(obj).rstrip("\n")
    schema.save(path, obj)
    paths.append(path)
    return f"wrote {path}"


def _export_dot(path: str | None, obj, paths: list[str]) -> None:
    if path is not None:
        Path(path).write_text(dot_mod.to_dot(obj))
        paths.append(path)


def _word_bound_check(obj, max_len: int) -> CheckReport:
    """Bounded word-level cross-checks for the pure models."""
    if isinstance(obj, PureAutomatonFirst):
        image = semigroupify(obj)
        for w in all_words(obj.inputs.size, max_len):
            if act_word(obj, 0, w) != act_word(image, 0, w):
                return CheckReport.failed("pure/semigroup word agreement",
                                          (0, w.letters),
                                          act_word(obj, 0, w), act_word(image, 0, w))
        return CheckReport.passed()
    if isinstance(obj, PureAutomatonSecond):
        for a in range(obj.states.size):
            for w in all_words(obj.inputs.size, max_len):
                full = free_extension_out(obj, a, w)
                for k in range(1, len(w)):
                    u = Word(w.letters[:k], w.alphabet_size)
                    v = Word(w.letters[k:], w.alphabet_size)
                    glued = free_extension_out(obj, a, u) + free_extension_out(
                        obj, act_letters(obj, a, u.letters), v)
                    if full != glued:
                        return CheckReport.failed("split law", (a, w.letters, k),
                                                  full.letters, glued.letters)
        return CheckReport.passed()
    return CheckReport.passed()


def cmd_check(args) -> CommandResult:
    obj = schema.load(args.file)
    paths: list[str] = []
    _export_dot(args.dot, obj, paths)
    report = CheckReport.passed()
    notes = []
    if isinstance(obj, SemigroupAutomatonFirst):
        report = check_first_axioms(obj)
    elif isinstance(obj, SemigroupAutomatonSecond):
        report = check_second_axioms(obj)
    elif isinstance(obj, SerialConnection):
        for name, rep in (("first component", check_first_axioms(obj.first)),
                          ("second component", check_first_axioms(obj.second)),
                          ("connection", check_serial(obj))):
            if not rep.ok:
                report = rep
                notes.append(name)
                break
    elif isinstance(obj, (CascadeTriplePure, CascadeTripleSemigroup)):
        if args.components:
            m1 = schema.load(args.components[0])
            m2 = schema.load(args.components[1])
            if isinstance(obj, CascadeTriplePure):
                check_pure_triple(obj, m1, m2)
            else:
                report = check_semigroup_triple(obj, m1, m2)
        else:
            notes.append("structure only; pass --components to verify against automata")
    elif isinstance(obj, (MealyMachine, MealyElement)):
        machine = obj.machine if isinstance(obj, MealyElement) else obj
        notes.append("invertible" if is_invertible(machine) else "not invertible")
    if report.ok and args.max_len:
        report = _word_bound_check(obj, args.max_len)
    if not report.ok:
        prefix = f"{notes[0]}: " if notes else ""
        return _failed(report, prefix + report.describe())
    suffix = f" ({'; '.join(notes)})" if notes else ""
    return _passed("pass" + suffix, tuple(paths))


def _load_as(path: str, kind, what: str):
    obj = schema.load(path)
    if not isinstance(obj, kind):
        raise schema.SchemaError(f"{path}: expected {what}")
    return obj


def cmd_construct(args) -> CommandResult:
    paths: list[str] = []
    verb = args.verb
    if verb == "semigroupify":
        source = _load_as(args.inputs[0], PureAutomatonFirst, "a first-pure automaton")
        built = semigroupify(source, cap=args.cap)
    elif verb == "cascade":
        m1 = schema.load(args.inputs[0])
        m2 = schema.load(args.inputs[1])
        triple = schema.load(args.inputs[2])
        if isinstance(triple, CascadeTripleSemigroup):
            report = check_semigroup_triple(triple, m1, m2)
            if not report.ok:
                return _failed(report, report.describe())
            built = cascade_semigroup(m1, m2, triple)
        else:
            built = cascade_pure(m1, m2, triple)
    elif verb == "wreath":
        m1 = _load_as(args.inputs[0], SemigroupAutomatonFirst, "a first-semigroup automaton")
        m2 = _load_as(args.inputs[1], SemigroupAutomatonFirst, "a first-semigroup automaton")
        built, triple = wreath_automaton(m1, m2, cap=args.cap)
        if args.triple_out:
            schema.save(args.triple_out, triple)
            paths.append(args.triple_out)
    elif verb == "serial":
        source = _load_as(args.inputs[0], SemigroupAutomatonSecond,
                          "a second-semigroup automaton")
        built = serial_from_second(source)
    elif verb == "derive-second":
        source = _load_as(args.inputs[0], SerialConnection, "a serial connection")
        built = derive_second_type(source)
    elif verb == "quotient":
        source = _load_as(args.inputs[0], PureAutomatonSecond, "a second-pure automaton")
        mu = _load_as(args.inputs[1], GeneratorHom, "a generator-hom")
        nu = _load_as(args.inputs[2], GeneratorHom, "a generator-hom")
        outcome = quotient_construct(source, mu, nu)
        if isinstance(outcome, QuotientWitness):
            return _failed(outcome, "incompatible: " + outcome.describe())
        built = outcome
    elif verb == "embed":
        triple = _load_as(args.inputs[0], CascadeTripleSemigroup, "a semigroup cascade-triple")
        m1 = _load_as(args.inputs[1], SemigroupAutomatonFirst, "a first-semigroup automaton")
        m2 = _load_as(args.inputs[2], SemigroupAutomatonFirst, "a first-semigroup automaton")
        report = check_semigroup_triple(triple, m1, m2)
        if not report.ok:
            return _failed(report, "triple invalid: " + report.describe())
        w = wreath_product(m1.gamma, m2.states, m2.next, m2.gamma, cap=args.cap)
        try:
            mapping = embed_into_wreath(triple, w)
        except VerificationError as exc:
            return _failed(str(exc), f"embedding verification failed: {exc}")
        message = "embedding " + " ".join(str(v) for v in mapping)
        if args.output:
            Path(args.output).write_text(json.dumps(
                {"type": "embedding", "mapping": list(mapping)},
                indent=2, sort_keys=True) + "\n")
            paths.append(args.output)
            message += f"\nwrote {args.output}"
        return _passed(message, tuple(paths))
    else:  # unreachable behind argparse choices
        raise ValueError(f"unknown verb {verb!r}")
    message = _write(args.output, built, paths)
    _export_dot(args.dot, built, paths)
    return _passed(message, tuple(paths))


def _load_element(path: str) -> MealyElement:
    obj = schema.load(path)
    if isinstance(obj, MealyMachine):
        return MealyElement(obj, 0)
    if isinstance(obj, MealyElement):
        return obj
    raise schema.SchemaError(f"{path}: expected a mealy machine")


def cmd_group(args) -> CommandResult:
    paths: list[str] = []
    verb = args.verb
    if verb == "apply":
        e = _load_element(args.inputs[0])
        w = parse_word(args.inputs[1:], e.machine.alphabet)
        return _passed(format_word(element_apply(e, w)))
    if verb == "compose":
        e1 = _load_element(args.inputs[0])
        e2 = _load_element(args.inputs[1])
        built = element_compose(e1, e2)
        message = _write(args.output, built, paths)
        _export_dot(args.dot, built, paths)
        return _passed(message, tuple(paths))
    if verb == "invert":
        built = element_invert(_load_element(args.inputs[0]))
        message = _write(args.output, built, paths)
        _export_dot(args.dot, built, paths)
        return _passed(message, tuple(paths))
    if verb == "equal":
        e1 = _load_element(args.inputs[0])
        e2 = _load_element(args.inputs[1])
        verdict = element_equal(e1, e2)
        lines = ["true" if verdict else "false"]
        if args.depth:
            agree = all(element_apply(e1, w) == element_apply(e2, w)
                        for w in all_words(e1.machine.alphabet, args.depth))
            lines.append(f"words up to length {args.depth} "
                         + ("agree" if agree else "disagree"))
        message = "\n".join(lines)
        if verdict:
            return _passed(message)
        return _failed((e1, e2), message)
    if verb == "order":
        e = _load_element(args.inputs[0])
        result = element_order_bounded(e, max_power=args.max_power,
                                       max_states=args.max_states)
        return _passed(result.describe())
    if verb == "minimize":
        built = minimize_element(_load_element(args.inputs[0]))
        message = _write(args.output, built, paths)
        _export_dot(args.dot, built, paths)
        return _passed(message, tuple(paths))
    raise ValueError(f"unknown verb {verb!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autalg",
        description="Build, verify, and run algebraic automata stored as JSON files.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="validate a file and verify its laws")
    check.add_argument("file")
    check.add_argument("--components", nargs=2, metavar=("M1", "M2"),
                       help="component automata for verifying a cascade triple")
    check.add_argument("--max-len", type=int, default=0,
                       help="also run word-level checks up to this length (pure models)")
    check.add_argument("--dot", help="write a DOT rendering of the object")
    check.set_defaults(func=cmd_check)

    construct = sub.add_parser("construct", help="run a construction and write the result")
    construct.add_argument("verb", choices=["semigroupify", "cascade", "wreath", "serial",
                                            "derive-second", "quotient", "embed"])
    construct.add_argument("inputs", nargs="+", help="input files for the verb")
    construct.add_argument("-o", "--output", help="output file (default: print JSON)")
    construct.add_argument("--cap", type=int, default=DEFAULT_CAP,
                           help="closure / wreath size cap")
    construct.add_argument("--triple-out", help="wreath: also write the steering triple")
    construct.add_argument("--dot", help="write a DOT rendering of the result")
    construct.set_defaults(func=cmd_construct)

    group = sub.add_parser("group", help="operate on word-machine elements")
    group.add_argument("verb", choices=["apply", "compose", "invert", "equal",
                                        "order", "minimize"])
    group.add_argument("inputs", nargs="+",
                       help="machine files; for apply, a machine then word letters")
    group.add_argument("-o", "--output", help="output file for machine results")
    group.add_argument("--depth", type=int, default=0,
                       help="equal: cross-check by word agreement to this depth")
    group.add_argument("--max-power", type=int, default=64, help="order: power bound")
    group.add_argument("--max-states", type=int, default=100_000,
                       help="order: state-count bound")
    group.add_argument("--dot", help="write a DOT rendering of the result")
    group.set_defaults(func=cmd_group)
    return parser


_ARITY = {"semigroupify": 1, "cascade": 3, "wreath": 2, "serial": 1,
          "derive-second": 1, "quotient": 3, "embed": 3,
          "compose": 2, "invert": 1, "equal": 2, "order": 1, "minimize": 1}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    arity = _ARITY.get(getattr(args, "verb", None))
    if arity is not None and len(args.inputs) != arity:
        print(f"error: {args.verb} takes {arity} input file(s), got {len(args.inputs)}",
              file=sys.stderr)
        return 2
    if getattr(args, "verb", None) == "apply" and len(args.inputs) < 2:
        print("error: apply takes a machine file and a word", file=sys.stderr)
        return 2
    try:
        result = args.func(args)
    except (schema.SchemaError, CapExceeded, NotInvertible, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if result.message:
        print(result.message)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
