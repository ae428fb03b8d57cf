"""Synthesis problems: a partial program, input-output examples, and the
resource sets (usable integer constants, integer variables, and array
variables) that candidate completions may draw from.

Problems load from JSON files shaped like::

    {
      "name": "reverse",
      "description": "reverse the digits of n",
      "program": "reverse(n){ r := 0; while(?){?}; return r; }",
      "ints": [0, 1, 10],
      "ivars": ["n", "r", "x"],
      "avars": [],
      "examples": [{"in": [12], "out": 21}]
    }

Integer values are JSON numbers; array values are JSON arrays of numbers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import lang
from .interp import Example, Value
from .lang import ArrRef, Program, Var


@dataclass(frozen=True)
class Resources:
    """What a completion may be built from."""

    ints: frozenset[int]
    ivars: frozenset[str]
    avars: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "ints", frozenset(self.ints))
        object.__setattr__(self, "ivars", frozenset(self.ivars))
        object.__setattr__(self, "avars", frozenset(self.avars))
        overlap = self.ivars & self.avars
        if overlap:
            raise ProblemError(f"variables declared both integer and array: {sorted(overlap)}")


@dataclass(frozen=True)
class Problem:
    program: Program
    examples: list[Example]
    resources: Resources
    name: str = ""
    description: str = ""


class ProblemError(Exception):
    """A problem file is malformed or internally inconsistent."""


def _as_value(raw, where: str) -> Value:
    if isinstance(raw, bool):
        raise ProblemError(f"{where}: booleans are not values")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, list):
        out = []
        for i, x in enumerate(raw):
            if isinstance(x, bool) or not isinstance(x, int):
                raise ProblemError(f"{where}[{i}]: array elements must be integers")
            out.append(x)
        return tuple(out)
    raise ProblemError(f"{where}: expected an integer or an array of integers")


def _used_identifiers(program: Program) -> tuple[set[str], set[str]]:
    """(plain-variable uses, array uses) appearing anywhere in the body."""
    plain: set[str] = set()
    arrays: set[str] = set()

    def lv(x):
        if isinstance(x, Var):
            plain.add(x.name)
        elif isinstance(x, ArrRef):
            arrays.add(x.array)
            plain.add(x.index)

    stack: list = [program.body]
    while stack:
        node = stack.pop()
        if isinstance(node, lang.Assign):
            lv(node.target)
            stack.append(node.value)
        elif isinstance(node, lang.Seq):
            stack += (node.first, node.second)
        elif isinstance(node, lang.If):
            stack += (node.cond, node.then_body, node.else_body)
        elif isinstance(node, lang.While):
            stack += (node.cond, node.body)
        elif isinstance(node, (lang.And, lang.Or)):
            stack += (node.left, node.right)
        elif isinstance(node, lang.Not):
            stack.append(node.operand)
        elif isinstance(node, lang.Load):
            lv(node.lv)
        elif isinstance(node, (lang.BinLL, lang.RelLL)):
            lv(node.left)
            lv(node.right)
        elif isinstance(node, (lang.BinLN, lang.RelLN)):
            lv(node.left)
    return plain, arrays


def validate(problem: Problem) -> None:
    """Raise ProblemError if the problem's pieces do not fit together."""
    p = problem.program
    res = problem.resources
    if not p.inputs:
        raise ProblemError("program takes no inputs")
    if len(set(p.inputs)) != len(p.inputs):
        raise ProblemError("input names must be pairwise distinct")
    declared = res.ivars | res.avars
    for x in p.inputs:
        if x not in declared:
            raise ProblemError(f"input {x!r} is not a declared variable")
    if p.output not in declared:
        raise ProblemError(f"output {p.output!r} is not a declared variable")

    plain, arrays = _used_identifiers(p)
    for x in arrays:
        if x not in res.avars:
            raise ProblemError(f"{x!r} is used as an array but not declared in avars")
    for x in plain:
        if x not in res.ivars:
            raise ProblemError(f"{x!r} is used as an integer but not declared in ivars")

    for i, (ins, out) in enumerate(problem.examples):
        if len(ins) != len(p.inputs):
            raise ProblemError(
                f"examples[{i}]: expected {len(p.inputs)} inputs, got {len(ins)}"
            )
        for name, v in zip(p.inputs, ins):
            want_array = name in res.avars
            if want_array != isinstance(v, tuple):
                kind = "an array" if want_array else "an integer"
                raise ProblemError(f"examples[{i}]: input {name!r} must be {kind}")
        want_array = p.output in res.avars
        if want_array != isinstance(out, tuple):
            kind = "an array" if want_array else "an integer"
            raise ProblemError(f"examples[{i}]: output must be {kind}")


def from_dict(data: dict, name_hint: str = "") -> Problem:
    for key in ("program", "ints", "ivars", "avars", "examples"):
        if key not in data:
            raise ProblemError(f"missing field {key!r}")
    try:
        program = lang.parse(data["program"])
    except lang.ParseError as e:
        raise ProblemError(f"program: {e}") from e
    for n in data["ints"]:
        if isinstance(n, bool) or not isinstance(n, int):
            raise ProblemError("ints: expected integers")
    resources = Resources(
        ints=frozenset(data["ints"]),
        ivars=frozenset(data["ivars"]),
        avars=frozenset(data["avars"]),
    )
    examples: list[Example] = []
    for i, ex in enumerate(data["examples"]):
        if not isinstance(ex, dict) or "in" not in ex or "out" not in ex:
            raise ProblemError(f'examples[{i}]: expected {{"in": [...], "out": ...}}')
        ins = [_as_value(v, f"examples[{i}].in") for v in ex["in"]]
        out = _as_value(ex["out"], f"examples[{i}].out")
        examples.append((ins, out))
    problem = Problem(
        program=program,
        examples=examples,
        resources=resources,
        name=data.get("name", name_hint),
        description=data.get("description", ""),
    )
    validate(problem)
    return problem


def load_problem(path: str | Path) -> Problem:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as e:
        raise ProblemError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ProblemError(f"{path}: invalid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ProblemError(f"{path}: expected a JSON object")
    try:
        return from_dict(data, name_hint=path.stem)
    except ProblemError as e:
        raise ProblemError(f"{path}: {e}") from e


def to_dict(problem: Problem) -> dict:
    """Inverse of `from_dict`, up to formatting."""

    def enc(v: Value):
        return list(v) if isinstance(v, tuple) else v

    return {
        "name": problem.name,
        "description": problem.description,
        "program": lang.pretty(problem.program),
        "ints": sorted(problem.resources.ints),
        "ivars": sorted(problem.resources.ivars),
        "avars": sorted(problem.resources.avars),
        "examples": [
            {"in": [enc(v) for v in ins], "out": enc(out)}
            for ins, out in problem.examples
        ],
    }
