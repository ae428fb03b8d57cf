"""impsynth: complete partial imperative programs from input-output examples.

The search enumerates candidate completions in increasing size,
normalizes them to collapse equivalent states, and statically prunes
candidates whose abstract behaviour already contradicts an example.
"""

from .absdom import AbsValue, Interval, alpha
from .absint import Feasibility, analyze_state, feasible, prune
from .interp import EvalError, Memory, Value, eval_cmd, is_solution, run_program
from .lang import (
    Command,
    ParseError,
    Program,
    holes,
    parse,
    parse_command,
    pretty,
    pretty_command,
    size,
)
from .problem import Problem, ProblemError, Resources, load_problem
from .search import SearchConfig, SearchStats, next_states, normalize, synthesize, termination_ok

__all__ = [
    "AbsValue",
    "Command",
    "EvalError",
    "Feasibility",
    "Interval",
    "Memory",
    "ParseError",
    "Problem",
    "ProblemError",
    "Program",
    "Resources",
    "SearchConfig",
    "SearchStats",
    "Value",
    "alpha",
    "analyze_state",
    "eval_cmd",
    "feasible",
    "holes",
    "is_solution",
    "load_problem",
    "next_states",
    "normalize",
    "parse",
    "parse_command",
    "pretty",
    "pretty_command",
    "prune",
    "run_program",
    "size",
    "synthesize",
    "termination_ok",
]

__version__ = "0.1.0"
