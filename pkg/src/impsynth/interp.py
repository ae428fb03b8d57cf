"""Concrete semantics of complete programs.

Values are Python ints (64-bit signed range enforced) and tuples of ints
for arrays.  Evaluation of a candidate that divides by zero, indexes out
of range, overflows, or runs out of fuel raises an :class:`EvalError`;
`is_solution` absorbs every such error as "not a solution".

Commands compile to closures, memoized on the hash-consed AST, so the
search pays the translation cost once per distinct subtree no matter how
many sibling candidates share it.

Conventions nailed down here and relied on elsewhere:

* division and modulo truncate toward zero (C-style), so
  ``(a / b) * b + (a % b) == a`` for every nonzero ``b``;
* non-input integer variables start at 0;
* array writes never resize, and arrays are only available when bound
  as inputs.
"""

from __future__ import annotations

from typing import Callable

from .lang import (
    AHole,
    And,
    ArrRef,
    Assign,
    BHole,
    BinLL,
    BinLN,
    BinOp,
    BoolLit,
    CHole,
    Command,
    Const,
    If,
    Load,
    LValue,
    Not,
    Or,
    Program,
    RelLL,
    RelLN,
    RelOp,
    Seq,
    Skip,
    Var,
    While,
)

INT_MIN = -(2**63)
INT_MAX = 2**63 - 1

Value = int | tuple[int, ...]
Memory = dict[str, Value]

DEFAULT_FUEL = 10_000


class EvalError(Exception):
    """Base class for every runtime failure of a candidate program."""


class DivByZero(EvalError):
    pass


class IndexOutOfBounds(EvalError):
    def __init__(self, index: int, length: int):
        super().__init__(f"index {index} out of bounds for length {length}")
        self.index = index
        self.length = length


class UnboundVariable(EvalError):
    def __init__(self, name: str):
        super().__init__(f"unbound variable {name!r}")
        self.name = name


class FuelExhausted(EvalError):
    pass


class HoleEncountered(EvalError):
    pass


class ArithmeticOverflow(EvalError):
    pass


class TypeMismatch(EvalError):
    pass


def trunc_div(a: int, b: int) -> int:
    """Truncated (toward-zero) integer division; b must be nonzero."""
    q = abs(a) // abs(b)
    return -q if (a < 0) != (b < 0) else q


def trunc_mod(a: int, b: int) -> int:
    """C-style remainder: same sign as the dividend; b must be nonzero."""
    return a - trunc_div(a, b) * b


def apply_binop(op: BinOp, a: int, b: int) -> int:
    if op is BinOp.ADD:
        r = a + b
    elif op is BinOp.SUB:
        r = a - b
    elif op is BinOp.MUL:
        r = a * b
    elif op is BinOp.DIV:
        if b == 0:
            raise DivByZero()
        r = trunc_div(a, b)
    else:
        if b == 0:
            raise DivByZero()
        r = trunc_mod(a, b)
    if r < INT_MIN or r > INT_MAX:
        raise ArithmeticOverflow()
    return r


def apply_relop(op: RelOp, a: int, b: int) -> bool:
    if op is RelOp.EQ:
        return a == b
    if op is RelOp.GT:
        return a > b
    return a < b


# --------------------------------------------------------------------------
# Compilation to closures.  An arithmetic closure maps a memory to a value,
# a guard closure to a bool, and a command closure mutates the memory it is
# given, spending one unit of fuel per executed command (and per loop
# iteration).  Fuel lives in a one-element list cell.

_MISSING = object()

_AFun = Callable[[Memory], Value]
_BFun = Callable[[Memory], bool]
_CFun = Callable[[Memory, list], None]

_aexp_cc: dict = {}
_bexp_cc: dict = {}
_cmd_cc: dict = {}


def _c_read(lv: LValue) -> _AFun:
    if isinstance(lv, Var):
        name = lv.name

        def read_var(m):
            v = m.get(name, _MISSING)
            if v is _MISSING:
                raise UnboundVariable(name)
            return v

        return read_var

    array, index = lv.array, lv.index

    def read_cell(m):
        arr = m.get(array, _MISSING)
        if arr is _MISSING:
            raise UnboundVariable(array)
        if type(arr) is not tuple:
            raise TypeMismatch(f"{array} is not an array")
        i = m.get(index, _MISSING)
        if i is _MISSING:
            raise UnboundVariable(index)
        if type(i) is not int:
            raise TypeMismatch(f"{index} is not an integer")
        if i < 0 or i >= len(arr):
            raise IndexOutOfBounds(i, len(arr))
        return arr[i]

    return read_cell


def _c_read_int(lv: LValue) -> _AFun:
    read = _c_read(lv)
    if isinstance(lv, ArrRef):
        return read  # array cells always hold ints
    name = lv.name

    def read_int(m):
        v = read(m)
        if type(v) is not int:
            raise TypeMismatch(f"{name} is not an integer")
        return v

    return read_int


def _c_binop(op: BinOp, fa: _AFun, fb: _AFun) -> _AFun:
    if op is BinOp.ADD:

        def run(m):
            r = fa(m) + fb(m)
            if r < INT_MIN or r > INT_MAX:
                raise ArithmeticOverflow()
            return r

    elif op is BinOp.SUB:

        def run(m):
            r = fa(m) - fb(m)
            if r < INT_MIN or r > INT_MAX:
                raise ArithmeticOverflow()
            return r

    elif op is BinOp.MUL:

        def run(m):
            r = fa(m) * fb(m)
            if r < INT_MIN or r > INT_MAX:
                raise ArithmeticOverflow()
            return r

    elif op is BinOp.DIV:

        def run(m):
            a, b = fa(m), fb(m)
            if b == 0:
                raise DivByZero()
            q = abs(a) // abs(b)
            r = -q if (a < 0) != (b < 0) else q
            if r < INT_MIN or r > INT_MAX:
                raise ArithmeticOverflow()
            return r

    else:

        def run(m):
            a, b = fa(m), fb(m)
            if b == 0:
                raise DivByZero()
            q = abs(a) // abs(b)
            if (a < 0) != (b < 0):
                q = -q
            return a - q * b

    return run


def compile_aexp(a) -> _AFun:
    f = _aexp_cc.get(a)
    if f is not None:
        return f
    if isinstance(a, Const):
        n = a.value
        f = lambda m: n
    elif isinstance(a, Load):
        f = _c_read(a.lv)
    elif isinstance(a, BinLL):
        f = _c_binop(a.op, _c_read_int(a.left), _c_read_int(a.right))
    elif isinstance(a, BinLN):
        n = a.value
        f = _c_binop(a.op, _c_read_int(a.left), lambda m: n)
    else:

        def f(m):
            raise HoleEncountered("arithmetic hole evaluated")

    _aexp_cc[a] = f
    return f


def compile_bexp(b) -> _BFun:
    f = _bexp_cc.get(b)
    if f is not None:
        return f
    if isinstance(b, BoolLit):
        v = b.value
        f = lambda m: v
    elif isinstance(b, (RelLL, RelLN)):
        fa = _c_read_int(b.left)
        if isinstance(b, RelLL):
            fb = _c_read_int(b.right)
        else:
            n = b.value
            fb = lambda m: n
        if b.op is RelOp.EQ:
            f = lambda m: fa(m) == fb(m)
        elif b.op is RelOp.GT:
            f = lambda m: fa(m) > fb(m)
        else:
            f = lambda m: fa(m) < fb(m)
    elif isinstance(b, (And, Or)):
        fl, fr = compile_bexp(b.left), compile_bexp(b.right)
        conj = isinstance(b, And)

        def f(m, _fl=fl, _fr=fr, _conj=conj):
            # both sides evaluate (errors propagate left to right)
            a = _fl(m)
            b2 = _fr(m)
            return (a and b2) if _conj else (a or b2)

    elif isinstance(b, Not):
        fo = compile_bexp(b.operand)
        f = lambda m: not fo(m)
    else:

        def f(m):
            raise HoleEncountered("guard hole evaluated")

    _bexp_cc[b] = f
    return f


def _c_assign(c: Assign) -> _CFun:
    value = compile_aexp(c.value)
    target = c.target
    if isinstance(target, Var):
        name = target.name

        def run(m, fuel):
            fuel[0] -= 1
            if fuel[0] < 0:
                raise FuelExhausted()
            v = value(m)
            old = m.get(name, _MISSING)
            if old is _MISSING:
                raise UnboundVariable(name)
            if type(old) is tuple:
                raise TypeMismatch(f"{name} is an array; assign to its cells")
            if type(v) is not int:
                raise TypeMismatch(f"{name} is not an array")
            m[name] = v

        return run

    array, index = target.array, target.index

    def run(m, fuel):
        fuel[0] -= 1
        if fuel[0] < 0:
            raise FuelExhausted()
        v = value(m)
        arr = m.get(array, _MISSING)
        if arr is _MISSING:
            raise UnboundVariable(array)
        if type(arr) is not tuple:
            raise TypeMismatch(f"{array} is not an array")
        i = m.get(index, _MISSING)
        if i is _MISSING:
            raise UnboundVariable(index)
        if type(i) is not int:
            raise TypeMismatch(f"{index} is not an integer")
        if i < 0 or i >= len(arr):
            raise IndexOutOfBounds(i, len(arr))
        if type(v) is not int:
            raise TypeMismatch("array cells hold integers")
        m[array] = arr[:i] + (v,) + arr[i + 1 :]

    return run


def compile_cmd(c: Command) -> _CFun:
    f = _cmd_cc.get(c)
    if f is not None:
        return f
    if isinstance(c, Assign):
        f = _c_assign(c)
    elif isinstance(c, Seq):
        f1, f2 = compile_cmd(c.first), compile_cmd(c.second)

        def f(m, fuel):
            fuel[0] -= 1
            if fuel[0] < 0:
                raise FuelExhausted()
            f1(m, fuel)
            f2(m, fuel)

    elif isinstance(c, Skip):

        def f(m, fuel):
            fuel[0] -= 1
            if fuel[0] < 0:
                raise FuelExhausted()

    elif isinstance(c, If):
        g = compile_bexp(c.cond)
        ft, fe = compile_cmd(c.then_body), compile_cmd(c.else_body)

        def f(m, fuel):
            fuel[0] -= 1
            if fuel[0] < 0:
                raise FuelExhausted()
            if g(m):
                ft(m, fuel)
            else:
                fe(m, fuel)

    elif isinstance(c, While):
        g = compile_bexp(c.cond)
        fb = compile_cmd(c.body)

        def f(m, fuel):
            fuel[0] -= 1
            if fuel[0] < 0:
                raise FuelExhausted()
            while g(m):
                fb(m, fuel)
                fuel[0] -= 1
                if fuel[0] < 0:
                    raise FuelExhausted()

    else:

        def f(m, fuel):
            raise HoleEncountered("statement hole executed")

    _cmd_cc[c] = f
    return f


# --------------------------------------------------------------------------
# Public evaluation API


def eval_aexp(a, m: Memory) -> Value:
    return compile_aexp(a)(m)


def eval_bexp(b, m: Memory) -> bool:
    return compile_bexp(b)(m)


def eval_cmd(c: Command, m: Memory, fuel: int = DEFAULT_FUEL) -> Memory:
    """Run a hole-free command; returns the final memory, leaving `m` intact."""
    out = dict(m)
    compile_cmd(c)(out, [fuel])
    return out


def written_vars(c: Command) -> set[str]:
    """Syntactic write set: names of variables (or arrays) assigned in c."""
    out: set[str] = set()
    stack = [c]
    while stack:
        node = stack.pop()
        if isinstance(node, Assign):
            out.add(node.target.name if isinstance(node.target, Var) else node.target.array)
        elif isinstance(node, Seq):
            stack += (node.first, node.second)
        elif isinstance(node, If):
            stack += (node.then_body, node.else_body)
        elif isinstance(node, While):
            stack.append(node.body)
        elif isinstance(node, CHole):
            out.add("*")  # a statement hole may write anything
    return out


def _mentioned_vars(p: Program) -> tuple[set[str], set[str]]:
    """Infer (integer vars, array vars) from syntactic usage plus the header."""
    ints: set[str] = set()
    arrays: set[str] = set()

    def lv(x) -> None:
        if isinstance(x, Var):
            ints.add(x.name)
        else:
            arrays.add(x.array)
            ints.add(x.index)

    stack: list = [p.body]
    while stack:
        node = stack.pop()
        if isinstance(node, Assign):
            lv(node.target)
            stack.append(node.value)
        elif isinstance(node, Seq):
            stack += (node.first, node.second)
        elif isinstance(node, If):
            stack += (node.cond, node.then_body, node.else_body)
        elif isinstance(node, While):
            stack += (node.cond, node.body)
        elif isinstance(node, (And, Or)):
            stack += (node.left, node.right)
        elif isinstance(node, Not):
            stack.append(node.operand)
        elif isinstance(node, Load):
            lv(node.lv)
        elif isinstance(node, (BinLL, RelLL)):
            lv(node.left)
            lv(node.right)
        elif isinstance(node, (BinLN, RelLN)):
            lv(node.left)
    return ints, arrays


def initial_memory(
    p: Program, inputs: list[Value], ivars: set[str] | None = None
) -> Memory:
    """Bind inputs positionally; all other integer variables start at 0.

    Arrays not bound as inputs stay unbound (using one is an error).
    `ivars`, when given, is the problem's integer-variable set; otherwise
    integer variables are inferred from the program text.
    """
    if len(inputs) != len(p.inputs):
        raise ValueError(
            f"expected {len(p.inputs)} inputs ({', '.join(p.inputs)}), got {len(inputs)}"
        )
    m: Memory = {}
    for name, v in zip(p.inputs, inputs):
        if isinstance(v, list):
            v = tuple(v)
        m[name] = v
    if ivars is None:
        ivars = _mentioned_vars(p)[0] | {p.output}
    for name in ivars:
        if name not in m:
            m[name] = 0
    return m


def run_program(
    p: Program,
    inputs: list[Value],
    fuel: int = DEFAULT_FUEL,
    ivars: set[str] | None = None,
) -> Value:
    """Execute a terminal program on the given inputs and return its output."""
    m = initial_memory(p, inputs, ivars)
    out = eval_cmd(p.body, m, fuel)
    if p.output not in out:
        raise UnboundVariable(p.output)
    return out[p.output]


Example = tuple[list[Value], Value]


def is_solution(
    p: Program,
    examples: list[Example],
    fuel: int = DEFAULT_FUEL,
    ivars: set[str] | None = None,
) -> bool:
    """True iff the program runs cleanly and matches every example."""
    body = compile_cmd(p.body)
    for ins, expected in examples:
        if isinstance(expected, list):
            expected = tuple(expected)
        try:
            m = initial_memory(p, ins, ivars)
            body(m, [fuel])
            if m.get(p.output, _MISSING) is _MISSING:
                return False
            if m[p.output] != expected:
                return False
        except EvalError:
            return False
    return True
