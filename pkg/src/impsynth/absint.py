"""Abstract interpreter over partial programs.

Runs the interval x symbolic semantics on a candidate that may still
contain holes, over-approximating every terminal completion at once: an
arithmetic or guard hole evaluates to top, and a statement hole
scrambles the whole memory (each integer variable gets its own symbol,
so exact algebraic facts like "the output is 10 * x" survive).

The result feeds a feasibility check against an expected output value; a
candidate whose analysis cannot cover some example's output is a
provable dead end and is pruned from the search.

Like the concrete interpreter, the abstract semantics compiles to
closures memoized on the hash-consed AST (per analyzer, since the
semantics of a statement hole depends on the variable sets).  Abstract
memories are plain dicts over the problem's variables; the memory with
no concrete states is one canonical dict per analyzer, so emptiness
checks are pointer comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .absdom import (
    AbsMemory,
    AbsValue,
    BOT,
    BOTTOM_VALUE,
    Interval,
    NEG_INF,
    POS_INF,
    S_BOT,
    S_TOP,
    SBin,
    SConst,
    SSym,
    SymExp,
    Symbolic,
    TOP,
    TOP_VALUE,
    alpha,
    const_itv,
    itv_arith,
    mem_is_bottom,
    mem_join,
    mem_leq,
    mem_widen,
    sym_binop,
)
from .interp import Example, Value
from .lang import (
    AHole,
    And,
    ArrRef,
    Assign,
    BExp,
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
from .problem import Resources

DEFAULT_WIDEN_AFTER = 3
DEFAULT_UNROLL_LIMIT = 50

# Total loop iterations allowed in one analysis run.  Nested loops multiply
# per-loop unrolling, so a global valve keeps pathological candidates from
# stalling the search; blowing it falls back to "know nothing", never to a
# wrong answer.
ANALYSIS_STEP_BUDGET = 20_000


class _AnalysisBudgetExceeded(Exception):
    pass


class AbsBool(Enum):
    BOT = 0
    TRUE = 1
    FALSE = 2
    TOP = 3


_AB_BOT = AbsBool.BOT
_AB_TRUE = AbsBool.TRUE
_AB_FALSE = AbsBool.FALSE
_AB_TOP = AbsBool.TOP


def _ab_not(x: AbsBool) -> AbsBool:
    if x is _AB_TRUE:
        return _AB_FALSE
    if x is _AB_FALSE:
        return _AB_TRUE
    return x


def _ab_and(x: AbsBool, y: AbsBool) -> AbsBool:
    if x is _AB_BOT or y is _AB_BOT:
        return _AB_BOT
    if x is _AB_FALSE or y is _AB_FALSE:
        return _AB_FALSE
    if x is _AB_TRUE and y is _AB_TRUE:
        return _AB_TRUE
    return _AB_TOP


def _ab_or(x: AbsBool, y: AbsBool) -> AbsBool:
    if x is _AB_BOT or y is _AB_BOT:
        return _AB_BOT
    if x is _AB_TRUE or y is _AB_TRUE:
        return _AB_TRUE
    if x is _AB_FALSE and y is _AB_FALSE:
        return _AB_FALSE
    return _AB_TOP


def compare_intervals(op: RelOp, i1: Interval, i2: Interval) -> AbsBool:
    """Decide a comparison from interval bounds when possible."""
    if i1.empty or i2.empty:
        return _AB_BOT
    if op is RelOp.LT:
        if i1.hi < i2.lo:
            return _AB_TRUE
        if i1.lo >= i2.hi:
            return _AB_FALSE
    elif op is RelOp.GT:
        if i1.lo > i2.hi:
            return _AB_TRUE
        if i1.hi <= i2.lo:
            return _AB_FALSE
    else:
        if i1 is i2 and i1.is_const():
            return _AB_TRUE
        if i1.meet(i2).empty:
            return _AB_FALSE
    return _AB_TOP


_MFun = Callable[[AbsMemory], AbsMemory]
_VFun = Callable[[AbsMemory], AbsValue]
_GFun = Callable[[AbsMemory], AbsBool]


class Analyzer:
    """Abstract semantics of commands over a fixed variable domain."""

    def __init__(
        self,
        resources: Resources,
        widen_after: int = DEFAULT_WIDEN_AFTER,
        unroll_limit: int = DEFAULT_UNROLL_LIMIT,
    ):
        self.ivars = sorted(resources.ivars)
        self.avars = sorted(resources.avars)
        self.widen_after = widen_after
        self.unroll_limit = unroll_limit
        # one symbol per integer variable; a statement hole rebinds each
        # integer variable to its symbol and each array to top
        self._hole_template: AbsMemory = {
            x: AbsValue(TOP, SSym(x)) for x in self.ivars
        }
        self._hole_template.update({x: TOP_VALUE for x in self.avars})
        self.bottom_memory: AbsMemory = {
            x: BOTTOM_VALUE for x in (*self.ivars, *self.avars)
        }
        self._top_memory: AbsMemory = {
            x: TOP_VALUE for x in (*self.ivars, *self.avars)
        }
        self._steps = 0
        self._aexp_cc: dict = {}
        self._bexp_cc: dict = {}
        self._refine_cc: dict = {}
        self._cmd_cc: dict = {}

    # -- small helpers using the canonical bottom memory ----------------------

    def canon(self, m: AbsMemory) -> AbsMemory:
        """Map any memory with a bottom component to the canonical bottom."""
        return self.bottom_memory if mem_is_bottom(m) else m

    def _join(self, m1: AbsMemory, m2: AbsMemory) -> AbsMemory:
        bot = self.bottom_memory
        if m1 is bot:
            return m2
        if m2 is bot or m1 is m2:
            return m1
        out = {}
        for x, v1 in m1.items():
            v2 = m2[x]
            out[x] = v1 if v1 is v2 else v1.join(v2)
        return out

    def _widen(self, m1: AbsMemory, m2: AbsMemory) -> AbsMemory:
        bot = self.bottom_memory
        if m1 is bot:
            return m2
        if m2 is bot or m1 is m2:
            return m1
        out = {}
        for x, v1 in m1.items():
            v2 = m2[x]
            out[x] = v1 if v1 is v2 else v1.widen(v2)
        return out

    def _leq(self, m1: AbsMemory, m2: AbsMemory) -> bool:
        if m1 is m2 or m1 is self.bottom_memory:
            return True
        if m2 is self.bottom_memory:
            return False
        for x, v1 in m1.items():
            v2 = m2[x]
            if v1 is not v2 and not v1.leq(v2):
                return False
        return True

    # -- expressions -----------------------------------------------------------

    def _compile_aexp(self, a) -> _VFun:
        f = self._aexp_cc.get(a)
        if f is not None:
            return f
        if isinstance(a, Const):
            v = AbsValue(const_itv(a.value), SConst(a.value))
            f = lambda m: v
        elif isinstance(a, Load):
            name = a.lv.name if isinstance(a.lv, Var) else a.lv.array
            # array reads ignore the index: one abstract cell stands for all
            f = lambda m: m[name]
        elif isinstance(a, BinLL):
            n1 = a.left.name if isinstance(a.left, Var) else a.left.array
            n2 = a.right.name if isinstance(a.right, Var) else a.right.array
            op = a.op

            def f(m):
                v1 = m[n1]
                v2 = m[n2]
                return AbsValue(
                    itv_arith(op, v1.itv, v2.itv), sym_binop(op, v1.sym, v2.sym)
                )

        elif isinstance(a, BinLN):
            n1 = a.left.name if isinstance(a.left, Var) else a.left.array
            op = a.op
            k_itv = const_itv(a.value)
            k_sym = SConst(a.value)

            def f(m):
                v1 = m[n1]
                return AbsValue(
                    itv_arith(op, v1.itv, k_itv), sym_binop(op, v1.sym, k_sym)
                )

        else:
            f = lambda m: TOP_VALUE  # arithmetic hole
        self._aexp_cc[a] = f
        return f

    def _compile_bexp(self, b) -> _GFun:
        f = self._bexp_cc.get(b)
        if f is not None:
            return f
        if isinstance(b, BoolLit):
            v = _AB_TRUE if b.value else _AB_FALSE
            f = lambda m: v
        elif isinstance(b, (RelLL, RelLN)):
            n1 = b.left.name if isinstance(b.left, Var) else b.left.array
            op = b.op
            if isinstance(b, RelLL):
                n2 = b.right.name if isinstance(b.right, Var) else b.right.array
                f = lambda m: compare_intervals(op, m[n1].itv, m[n2].itv)
            else:
                k = const_itv(b.value)
                f = lambda m: compare_intervals(op, m[n1].itv, k)
        elif isinstance(b, And):
            fl, fr = self._compile_bexp(b.left), self._compile_bexp(b.right)
            f = lambda m: _ab_and(fl(m), fr(m))
        elif isinstance(b, Or):
            fl, fr = self._compile_bexp(b.left), self._compile_bexp(b.right)
            f = lambda m: _ab_or(fl(m), fr(m))
        elif isinstance(b, Not):
            fo = self._compile_bexp(b.operand)
            f = lambda m: _ab_not(fo(m))
        else:
            f = lambda m: _AB_TOP  # guard hole
        self._bexp_cc[b] = f
        return f

    # -- guard refinement --------------------------------------------------------

    def _narrow_step(self, name: str):
        """Closure narrowing one variable's interval with a computed bound."""

        def narrow(m, bound: Interval):
            old = m[name]
            ni = old.itv.meet(bound)
            if ni is old.itv:
                return m
            if ni.empty:
                return self.bottom_memory
            m2 = dict(m)
            m2[name] = AbsValue(ni, old.sym)
            return m2

        return narrow

    def _compile_refine(self, b: BExp, positive: bool) -> _MFun:
        """Narrow intervals so that b (or its negation) can still hold.

        Atomic comparisons narrow their integer-variable operands; a
        conjunction refines both sides; anything undecomposable narrows
        nothing.  Array summaries never narrow: a guard constrains one
        cell, the summary covers them all.  A definitely-contradicted
        guard yields the bottom memory.
        """
        key = (b, positive)
        f = self._refine_cc.get(key)
        if f is not None:
            return f
        identity = lambda m: m
        if isinstance(b, BoolLit):
            if b.value == positive:
                f = identity
            else:
                f = lambda m: self.bottom_memory
        elif isinstance(b, (RelLL, RelLN)):
            f = self._compile_refine_rel(b, positive)
        elif isinstance(b, Not):
            f = self._compile_refine(b.operand, not positive)
        elif isinstance(b, And) and positive:
            fl = self._compile_refine(b.left, True)
            fr = self._compile_refine(b.right, True)
            f = lambda m: fr(fl(m))
        elif isinstance(b, Or) and not positive:
            fl = self._compile_refine(b.left, False)
            fr = self._compile_refine(b.right, False)
            f = lambda m: fr(fl(m))
        else:
            f = identity
        self._refine_cc[key] = f
        return f

    def _compile_refine_rel(self, b, positive: bool) -> _MFun:
        op = b.op
        left_var = isinstance(b.left, Var)
        lname = b.left.name if left_var else b.left.array
        if isinstance(b, RelLN):
            rname = None
            right_var = False
            k = const_itv(b.value)
        else:
            right_var = isinstance(b.right, Var)
            rname = b.right.name if right_var else b.right.array
            k = None
        narrow_l = self._narrow_step(lname) if left_var else None
        narrow_r = self._narrow_step(rname) if right_var else None

        def run(m):
            if m is self.bottom_memory:
                return m
            li = m[lname].itv
            ri = k if rname is None else m[rname].itv
            if li.empty or ri.empty:
                return self.bottom_memory
            if positive:
                if op is RelOp.LT:  # left < right
                    lb = Interval(NEG_INF, ri.hi - 1)
                    rb = Interval(li.lo + 1, POS_INF)
                elif op is RelOp.GT:  # left > right
                    lb = Interval(ri.lo + 1, POS_INF)
                    rb = Interval(NEG_INF, li.hi - 1)
                else:  # left == right
                    lb, rb = ri, li
            else:
                if op is RelOp.LT:  # left >= right
                    lb = Interval(ri.lo, POS_INF)
                    rb = Interval(NEG_INF, li.hi)
                elif op is RelOp.GT:  # left <= right
                    lb = Interval(NEG_INF, ri.hi)
                    rb = Interval(li.lo, POS_INF)
                else:  # left != right: drop a matching endpoint
                    lb = _trim_neq(li, ri)
                    rb = _trim_neq(ri, li)
            if narrow_l is not None:
                m = narrow_l(m, lb)
                if m is self.bottom_memory:
                    return m
            if narrow_r is not None:
                m = narrow_r(m, rb)
            return m

        return run

    # -- commands ------------------------------------------------------------------

    def _compile_cmd(self, c: Command) -> _MFun:
        f = self._cmd_cc.get(c)
        if f is not None:
            return f
        bot_of = lambda: self.bottom_memory
        if isinstance(c, Assign):
            target = c.target
            if isinstance(target, Var):
                name = target.name
                if isinstance(c.value, AHole):
                    # an unknown expression, but a *single* unknown: name it
                    v = AbsValue(TOP, SSym(name))

                    def f(m):
                        if m is self.bottom_memory:
                            return m
                        m2 = dict(m)
                        m2[name] = v
                        return m2

                else:
                    val = self._compile_aexp(c.value)

                    def f(m):
                        if m is self.bottom_memory:
                            return m
                        v = val(m)
                        if v.bot:
                            return self.bottom_memory
                        m2 = dict(m)
                        m2[name] = v
                        return m2

            else:
                array = target.array
                # array cell: weak update, the summary only grows
                if isinstance(c.value, AHole):
                    val = lambda m: TOP_VALUE
                else:
                    val = self._compile_aexp(c.value)

                def f(m):
                    if m is self.bottom_memory:
                        return m
                    v = val(m)
                    if v.bot:
                        return self.bottom_memory
                    m2 = dict(m)
                    m2[array] = m[array].join(v)
                    return m2

        elif isinstance(c, Seq):
            f1 = self._compile_cmd(c.first)
            f2 = self._compile_cmd(c.second)
            f = lambda m: f2(f1(m))
        elif isinstance(c, Skip):
            f = lambda m: m
        elif isinstance(c, If):
            g = self._compile_bexp(c.cond)
            refp = self._compile_refine(c.cond, True)
            refn = self._compile_refine(c.cond, False)
            ft = self._compile_cmd(c.then_body)
            fe = self._compile_cmd(c.else_body)

            def f(m):
                if m is self.bottom_memory:
                    return m
                t = g(m)
                if t is _AB_TRUE:
                    return ft(refp(m))
                if t is _AB_FALSE:
                    return fe(refn(m))
                if t is _AB_BOT:
                    return self.bottom_memory
                return self._join(ft(refp(m)), fe(refn(m)))

        elif isinstance(c, While):
            f = self._compile_while(c)
        else:
            template = self._hole_template

            def f(m):
                # statement hole: any completion may write anything
                if m is self.bottom_memory:
                    return m
                return dict(template)

        self._cmd_cc[c] = f
        return f

    def _compile_while(self, c: While) -> _MFun:
        """Loop semantics by unrolling with join/widen convergence.

        `cur` tracks the states reaching the loop head, `exit_mem`
        accumulates the states seen leaving.  While the guard is
        definitely true no state can leave, so the head advances with no
        join; that is what preserves facts like "after this loop the
        accumulator grew at least once".  Widening starts after
        `widen_after` joins, and unconditionally past `unroll_limit`
        iterations, so the analysis always terminates.
        """
        g = self._compile_bexp(c.cond)
        refp = self._compile_refine(c.cond, True)
        refn = self._compile_refine(c.cond, False)
        fbody = self._compile_cmd(c.body)
        widen_after = self.widen_after
        unroll_limit = self.unroll_limit
        join, widen, leq = self._join, self._widen, self._leq

        def f(m0):
            if m0 is self.bottom_memory:
                return m0
            cur = m0
            exit_mem = self.bottom_memory
            iterations = 0
            joins = 0
            while True:
                self._steps += 1
                if self._steps > ANALYSIS_STEP_BUDGET:
                    raise _AnalysisBudgetExceeded()
                t = g(cur)
                if t is _AB_FALSE or t is _AB_BOT:
                    return join(exit_mem, cur)
                if t is _AB_TOP:
                    exit_mem = join(exit_mem, refn(cur))
                nxt = fbody(refp(cur))
                if leq(nxt, cur):
                    break
                iterations += 1
                if iterations > unroll_limit:
                    cur = widen(cur, nxt)  # force convergence
                elif t is _AB_TRUE:
                    cur = nxt
                else:
                    joins += 1
                    cur = join(cur, nxt) if joins <= widen_after else widen(cur, nxt)
            return join(exit_mem, refn(cur))

        return f

    # -- public evaluation surface ---------------------------------------------------

    def eval_aexp(self, a, m: AbsMemory) -> AbsValue:
        return self._compile_aexp(a)(self.canon(m))

    def eval_bexp(self, b, m: AbsMemory) -> AbsBool:
        return self._compile_bexp(b)(m)

    def refine(self, m: AbsMemory, b: BExp, positive: bool) -> AbsMemory:
        return self._compile_refine(b, positive)(self.canon(m))

    def eval_cmd(self, c: Command, m: AbsMemory) -> AbsMemory:
        self._steps = 0
        try:
            return self._compile_cmd(c)(self.canon(m))
        except _AnalysisBudgetExceeded:
            return dict(self._top_memory)  # sound: give up, know nothing

    def eval_while(self, b: BExp, body: Command, m0: AbsMemory) -> AbsMemory:
        return self._compile_while(While(b, body))(self.canon(m0))

    def initial_memory(self, program: Program, inputs: list[Value]) -> AbsMemory:
        m: AbsMemory = {}
        bound = dict(zip(program.inputs, inputs))
        zero = AbsValue(const_itv(0), SConst(0))
        for x in self.ivars:
            # non-input integers match the interpreter's zero-initialization
            m[x] = alpha(bound[x]) if x in bound else zero
        for x in self.avars:
            m[x] = alpha(bound[x]) if x in bound else TOP_VALUE
        return self.canon(m)

    def analyze(self, program: Program, inputs: list[Value]) -> AbsValue:
        m = self.eval_cmd(program.body, self.initial_memory(program, inputs))
        return m[program.output]


def _trim_neq(i: Interval, other: Interval) -> Interval:
    """Under i != other with `other` a single point, drop a matching endpoint."""
    if i.empty or not other.is_const():
        return i
    n = other.lo
    lo, hi = i.lo, i.hi
    if lo == n:
        lo = n + 1
    if hi == n:
        hi = n - 1
    return Interval(lo, hi)


def analyze_state(
    program: Program,
    inputs: list[Value],
    resources: Resources,
    widen_after: int = DEFAULT_WIDEN_AFTER,
    unroll_limit: int = DEFAULT_UNROLL_LIMIT,
) -> AbsValue:
    """Abstract value of the output variable for one example input."""
    return Analyzer(resources, widen_after, unroll_limit).analyze(program, inputs)


# --------------------------------------------------------------------------
# Feasibility of the output constraint


class Feasibility(Enum):
    SATISFIABLE = "satisfiable"
    UNSATISFIABLE = "unsatisfiable"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Constraint:
    """Analysis result vs. the abstraction [lo, hi] of an expected output."""

    itv_s: Interval
    out_itv: Interval
    sym_s: Symbolic


def _linear_form(e: SymExp) -> tuple[dict[str, int], int] | None:
    """Interpret e as sum(coeff[x] * sym_x) + const, if it has that shape."""
    if isinstance(e, SConst):
        return {}, e.value
    if isinstance(e, SSym):
        return {e.var: 1}, 0
    lhs = _linear_form(e.left)
    rhs = _linear_form(e.right)
    if lhs is None or rhs is None:
        return None
    cl, kl = lhs
    cr, kr = rhs
    if e.op is BinOp.ADD:
        coeffs = dict(cl)
        for x, c in cr.items():
            coeffs[x] = coeffs.get(x, 0) + c
        return coeffs, kl + kr
    if e.op is BinOp.SUB:
        coeffs = dict(cl)
        for x, c in cr.items():
            coeffs[x] = coeffs.get(x, 0) - c
        return coeffs, kl - kr
    if e.op is BinOp.MUL:
        if not cl:
            return {x: kl * c for x, c in cr.items()}, kl * kr
        if not cr:
            return {x: kr * c for x, c in cl.items()}, kr * kl
    return None


def _linear_feasible(coeffs: dict[str, int], k: int, lo: int, hi: int) -> Feasibility:
    """Does sum(c_i * z_i) + k hit [lo, hi] for some integers z_i?"""
    from math import gcd

    g = 0
    for c in coeffs.values():
        g = gcd(g, abs(c))
    if g == 0:
        return Feasibility.SATISFIABLE if lo <= k <= hi else Feasibility.UNSATISFIABLE
    # values are exactly k + g*Z; look for a multiple of g in [lo-k, hi-k]
    if g * ((hi - k) // g) >= lo - k:
        return Feasibility.SATISFIABLE
    return Feasibility.UNSATISFIABLE


def _contains_symbol(e: SymExp) -> bool:
    if isinstance(e, SSym):
        return True
    if isinstance(e, SBin):
        return _contains_symbol(e.left) or _contains_symbol(e.right)
    return False


def _div_preimage(target: Interval, c: int) -> Interval:
    """{y : trunc(y / c) in target}; truncated division is monotone for c > 0."""
    if c < 0:
        return _div_preimage(Interval(-target.hi, -target.lo), -c)
    l, u = target.lo, target.hi
    new_lo = NEG_INF if l == NEG_INF else (l * c if l > 0 else l * c - (c - 1))
    new_hi = POS_INF if u == POS_INF else (u * c + (c - 1) if u >= 0 else u * c)
    return Interval(new_lo, new_hi)


def _chain_feasible(e: SymExp, target: Interval) -> Feasibility:
    """Backward preimage propagation for expressions where each binary node
    has the symbol on exactly one side.  Every step is exact except modulo,
    which can only certify unsatisfiability via the remainder range."""
    while True:
        if target.empty:
            return Feasibility.UNSATISFIABLE
        if isinstance(e, SConst):
            return (
                Feasibility.SATISFIABLE
                if target.contains(e.value)
                else Feasibility.UNSATISFIABLE
            )
        if isinstance(e, SSym):
            return Feasibility.SATISFIABLE  # any integer in a nonempty target
        left_sym = _contains_symbol(e.left)
        right_sym = _contains_symbol(e.right)
        if left_sym == right_sym:  # both sides or neither: not a chain
            return Feasibility.UNKNOWN
        sym_side, const_side = (e.left, e.right) if left_sym else (e.right, e.left)
        if not isinstance(const_side, SConst):
            return Feasibility.UNKNOWN
        c = const_side.value
        op = e.op
        if op is BinOp.ADD:
            target = Interval(target.lo - c, target.hi - c)
        elif op is BinOp.SUB:
            if left_sym:  # y - c in T  =>  y in T + c
                target = Interval(target.lo + c, target.hi + c)
            else:  # c - y in T  =>  y in c - T
                target = Interval(c - target.hi, c - target.lo)
        elif op is BinOp.MUL:
            if c == 0:
                return (
                    Feasibility.SATISFIABLE
                    if target.contains(0)
                    else Feasibility.UNSATISFIABLE
                )
            if c < 0:
                target = Interval(-target.hi, -target.lo)
                c = -c
            # c*y in [lo,hi]  =>  y in [ceil(lo/c), floor(hi/c)]
            new_lo = NEG_INF if target.lo == NEG_INF else -((-target.lo) // c)
            new_hi = POS_INF if target.hi == POS_INF else target.hi // c
            target = Interval(new_lo, new_hi)
        elif op is BinOp.DIV:
            if not left_sym:
                return Feasibility.UNKNOWN  # constant / symbol: not monotone
            if c == 0:
                return Feasibility.UNSATISFIABLE  # always an error, never a value
            target = _div_preimage(target, c)
        else:  # MOD
            if not left_sym:
                return Feasibility.UNKNOWN
            if c == 0:
                return Feasibility.UNSATISFIABLE
            reachable = Interval(-(abs(c) - 1), abs(c) - 1)
            if target.meet(reachable).empty:
                return Feasibility.UNSATISFIABLE
            if isinstance(sym_side, SSym):
                # a bare symbol reaches every remainder in range
                return Feasibility.SATISFIABLE
            return Feasibility.UNKNOWN
        e = sym_side


def feasible(c: Constraint) -> Feasibility:
    """Decide whether some completion could still produce the output.

    The interval conjunct is checked directly on bounds.  The symbolic
    conjunct asks for an integer assignment to the symbols placing the
    expression inside the output's abstraction; shapes the built-in
    procedure cannot decide return UNKNOWN, which callers must keep.
    """
    if c.itv_s.empty:
        return Feasibility.UNSATISFIABLE
    if not (c.itv_s.lo <= c.out_itv.lo and c.out_itv.hi <= c.itv_s.hi):
        return Feasibility.UNSATISFIABLE
    s = c.sym_s
    if s is S_TOP or s is S_BOT:
        return Feasibility.SATISFIABLE
    lo, hi = c.out_itv.lo, c.out_itv.hi
    lin = _linear_form(s)
    if lin is not None:
        return _linear_feasible(lin[0], lin[1], lo, hi)
    return _chain_feasible(s, c.out_itv)


def constraint_for(
    program: Program,
    example: Example,
    resources: Resources,
    widen_after: int = DEFAULT_WIDEN_AFTER,
    unroll_limit: int = DEFAULT_UNROLL_LIMIT,
) -> Constraint | None:
    """Build the output constraint for one example; None when the example
    itself has no defined abstraction (an empty array)."""
    ins, out = example
    if any(isinstance(v, tuple) and len(v) == 0 for v in ins):
        return None
    out_abs = alpha(tuple(out) if isinstance(out, list) else out)
    if out_abs.bot:
        return None
    result = analyze_state(program, ins, resources, widen_after, unroll_limit)
    return Constraint(itv_s=result.itv, out_itv=out_abs.itv, sym_s=result.sym)


class StatePruner:
    """Reusable pruning context for one synthesis run.

    Precomputes the analyzer, the abstract initial memory for every
    example, and the abstraction of every expected output, so checking a
    candidate only costs the abstract run itself.
    """

    def __init__(
        self,
        template: Program,
        examples: list[Example],
        resources: Resources,
        widen_after: int = DEFAULT_WIDEN_AFTER,
        unroll_limit: int = DEFAULT_UNROLL_LIMIT,
    ):
        self.template = template
        self.analyzer = Analyzer(resources, widen_after, unroll_limit)
        self.output = template.output
        self.cases: list[tuple[AbsMemory, Interval]] = []
        for ins, out in examples:
            if any(isinstance(v, tuple) and len(v) == 0 for v in ins):
                continue  # the abstraction is undefined; never prune on it
            out_abs = alpha(tuple(out) if isinstance(out, list) else out)
            if out_abs.bot:
                continue
            self.cases.append((self.analyzer.initial_memory(template, ins), out_abs.itv))

    def prune_body(self, body: Command) -> bool:
        run = self.analyzer._compile_cmd(body)
        output = self.output
        unsat = Feasibility.UNSATISFIABLE
        for init, out_itv in self.cases:
            self.analyzer._steps = 0
            try:
                result = run(init)[output]
            except _AnalysisBudgetExceeded:
                return False  # analysis too costly here; keep the state
            c = Constraint(itv_s=result.itv, out_itv=out_itv, sym_s=result.sym)
            if feasible(c) is unsat:
                return True
        return False


def prune(
    program: Program,
    examples: list[Example],
    resources: Resources,
    widen_after: int = DEFAULT_WIDEN_AFTER,
    unroll_limit: int = DEFAULT_UNROLL_LIMIT,
) -> bool:
    """True iff some example's constraint is provably unsatisfiable.

    Safe: a pruned state has no completion that satisfies every example,
    so discarding it never loses a solution.
    """
    pruner = StatePruner(program, examples, resources, widen_after, unroll_limit)
    return pruner.prune_body(program.body)
