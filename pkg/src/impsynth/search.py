"""Synthesis as size-ordered state search.

A state is a command that may contain holes.  The search pops the
smallest state from a priority queue; a hole-free state is checked
against the examples, anything else is either discarded by the static
pruner or expanded by rewriting its leftmost hole in every way the
resource sets allow.  States are normalized before being queued so that
syntactically different but equivalent candidates collapse.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from heapq import heappop, heappush

from .absint import DEFAULT_UNROLL_LIMIT, DEFAULT_WIDEN_AFTER, StatePruner
from .interp import DEFAULT_FUEL, EvalError, apply_binop, apply_relop, is_solution
from .lang import (
    A_HOLE,
    AHole,
    And,
    ArrRef,
    Assign,
    B_HOLE,
    BExp,
    BHole,
    BinLL,
    BinLN,
    BinOp,
    BoolLit,
    C_HOLE,
    CHole,
    Command,
    Const,
    FALSE,
    If,
    Load,
    LValue,
    Not,
    Or,
    Program,
    RelLL,
    RelLN,
    RelOp,
    SKIP,
    Seq,
    Skip,
    TRUE,
    Var,
    While,
    first_hole,
    holes,
    pretty_command,
    pretty_lvalue,
    replace_at,
)
from .problem import Problem, Resources, validate

# --------------------------------------------------------------------------
# Transition relation: all single-step expansions of the leftmost hole.


class Expansions:
    """Replacement subtrees for each hole kind, fixed by the resources.

    Listed in a deterministic order (constants ascending, variables
    alphabetical) so that equal-sized states are explored FIFO and runs
    are reproducible.
    """

    def __init__(self, res: Resources):
        ivars = sorted(res.ivars)
        ints = sorted(res.ints)
        lvalues: list[LValue] = [Var(x) for x in ivars]
        lvalues += [ArrRef(a, i) for a in sorted(res.avars) for i in ivars]

        self.command: list[Command] = [Assign(l, A_HOLE) for l in lvalues]
        self.command += [SKIP, Seq(C_HOLE, C_HOLE), If(B_HOLE, C_HOLE, C_HOLE), While(B_HOLE, C_HOLE)]

        self.guard: list[BExp] = [TRUE, FALSE]
        self.guard += [RelLL(l1, op, l2) for l1 in lvalues for op in RelOp for l2 in lvalues]
        self.guard += [RelLN(l, op, n) for l in lvalues for op in RelOp for n in ints]
        self.guard += [And(B_HOLE, B_HOLE), Or(B_HOLE, B_HOLE), Not(B_HOLE)]

        self.arith: list = [Const(n) for n in ints]
        self.arith += [Load(l) for l in lvalues]
        self.arith += [BinLL(l1, op, l2) for l1 in lvalues for op in BinOp for l2 in lvalues]
        self.arith += [BinLN(l, op, n) for l in lvalues for op in BinOp for n in ints]

        # The search's canonical statement productions.  The plain relation
        # lets a statement hole split into two adjacent holes, which makes
        # every statement list reachable through many interleavings; here a
        # hole instead becomes a single statement form, optionally preceded
        # by one growth hole.  Same reachable terminal states, one path each.
        units = [Assign(l, A_HOLE) for l in lvalues]
        units += [SKIP, If(B_HOLE, C_HOLE, C_HOLE), While(B_HOLE, C_HOLE)]
        self.command_canonical: list[Command] = units + [Seq(C_HOLE, u) for u in units]

    def for_kind(self, kind: str, canonical: bool = False) -> list:
        if kind == "C":
            return self.command_canonical if canonical else self.command
        if kind == "B":
            return self.guard
        return self.arith


def _holes_with_context(
    c, path: tuple[int, ...], in_while_cond: bool, out: list
) -> None:
    kind = {AHole: "A", BHole: "B", CHole: "C"}.get(type(c))
    if kind is not None:
        out.append((kind, path, in_while_cond))
        return
    if not c.has_hole:
        return
    if isinstance(c, While):
        _holes_with_context(c.cond, path + (0,), True, out)
        _holes_with_context(c.body, path + (1,), False, out)
    elif isinstance(c, If):
        _holes_with_context(c.cond, path + (0,), False, out)
        _holes_with_context(c.then_body, path + (1,), False, out)
        _holes_with_context(c.else_body, path + (2,), False, out)
    elif isinstance(c, Seq):
        _holes_with_context(c.first, path + (0,), in_while_cond, out)
        _holes_with_context(c.second, path + (1,), in_while_cond, out)
    elif isinstance(c, Assign):
        _holes_with_context(c.value, path + (0,), False, out)
    elif isinstance(c, (And, Or)):
        _holes_with_context(c.left, path + (0,), in_while_cond, out)
        _holes_with_context(c.right, path + (1,), in_while_cond, out)
    elif isinstance(c, Not):
        _holes_with_context(c.operand, path + (0,), in_while_cond, out)


def pick_hole(c: Command) -> tuple[str, tuple[int, ...]] | None:
    """The hole the search expands next: a loop-guard hole if any
    (leftmost first), otherwise the rightmost hole.

    Expanding exactly one designated hole per state still reaches every
    terminal state, just along one canonical path.  Loop guards go first
    so the termination heuristics can constrain a body from its first
    statement.  Everything else grows tail-first: trailing code is what
    pins the output's abstract value, so pruning can discard a doomed
    suffix together with every prefix at once.  In particular an if's
    branches complete before its guard; a guard hole only joins the two
    branches, so the branch pair is what pruning can judge."""
    found: list = []
    _holes_with_context(c, (), False, found)
    if not found:
        return None
    for kind, path, in_while_cond in found:
        if in_while_cond:
            return kind, path
    kind, path, _ = found[-1]
    return kind, path


def next_states(
    c: Command, res: Resources | Expansions, canonical: bool = False
) -> list[Command]:
    """One-step successors: every grammar production for the chosen hole.

    With `canonical` the statement productions are the search's
    append-one-statement forms; without it they are the plain relation
    (including the hole-splitting sequence rule)."""
    found = pick_hole(c)
    if found is None:
        return []
    kind, path = found
    exps = res if isinstance(res, Expansions) else Expansions(res)
    return [replace_at(c, path, r) for r in exps.for_kind(kind, canonical)]


# --------------------------------------------------------------------------
# Normalization: constant propagation, copy propagation, dead code
# elimination, and expression simplification, iterated to a fixed point.
#
# Holes act as barriers.  A statement hole may read and write anything, so
# no fact survives it and everything is live before it; expression and
# guard holes may read anything.  All rewrites preserve the results of
# runs that complete without an error, and never introduce new errors or
# divergence, so a solution stays a solution in both directions.

_Fact = Const | Var  # known constant value, or "same value as this variable"
_Env = dict[str, _Fact]


def _subst_var(name: str, env: _Env) -> str:
    f = env.get(name)
    return f.name if isinstance(f, Var) else name


def _subst_lv(lv: LValue, env: _Env) -> LValue:
    if isinstance(lv, Var):
        n = _subst_var(lv.name, env)
        return lv if n == lv.name else Var(n)
    i = _subst_var(lv.index, env)
    return lv if i == lv.index else ArrRef(lv.array, i)


def _const_of(lv: LValue, env: _Env) -> int | None:
    if isinstance(lv, Var):
        f = env.get(lv.name)
        if isinstance(f, Const):
            return f.value
    return None


def _try_fold(op: BinOp, a: int, b: int) -> Const | None:
    try:
        return Const(apply_binop(op, a, b))
    except EvalError:
        return None


def _simp_binln(left: LValue, op: BinOp, n: int):
    if op is BinOp.MUL and n == 0:
        return Const(0)
    if op is BinOp.MUL and n == 1:
        return Load(left)
    if op is BinOp.ADD and n == 0:
        return Load(left)
    if op is BinOp.SUB and n == 0:
        return Load(left)
    if op is BinOp.DIV and n == 1:
        return Load(left)
    if op is BinOp.MOD and n == 1:
        return Const(0)
    return BinLN(left, op, n)


def _rewrite_aexp(a, env: _Env):
    if isinstance(a, Load):
        c = _const_of(a.lv, env)
        if c is not None:
            return Const(c)
        lv = _subst_lv(a.lv, env)
        return a if lv is a.lv else Load(lv)
    if isinstance(a, BinLN):
        left = _subst_lv(a.left, env)
        c = _const_of(left, env)
        if c is not None:
            folded = _try_fold(a.op, c, a.value)
            if folded is not None:
                return folded
        return _simp_binln(left, a.op, a.value)
    if isinstance(a, BinLL):
        left = _subst_lv(a.left, env)
        right = _subst_lv(a.right, env)
        cl = _const_of(left, env)
        cr = _const_of(right, env)
        if cl is not None and cr is not None:
            folded = _try_fold(a.op, cl, cr)
            if folded is not None:
                return folded
        if cr is not None:
            return _simp_binln(left, a.op, cr)
        if cl is not None and a.op in (BinOp.ADD, BinOp.MUL):
            return _simp_binln(right, a.op, cl)
        if left is right and a.op is BinOp.SUB:
            return Const(0)
        if a.op in (BinOp.ADD, BinOp.MUL) and pretty_lvalue(right) < pretty_lvalue(left):
            left, right = right, left  # commutative: canonical operand order
        return BinLL(left, a.op, right)
    return a  # Const or AHole


_FLIP = {RelOp.LT: RelOp.GT, RelOp.GT: RelOp.LT, RelOp.EQ: RelOp.EQ}


def _rewrite_bexp(b, env: _Env):
    if isinstance(b, RelLN):
        left = _subst_lv(b.left, env)
        c = _const_of(left, env)
        if c is not None:
            return TRUE if apply_relop(b.op, c, b.value) else FALSE
        return RelLN(left, b.op, b.value)
    if isinstance(b, RelLL):
        left = _subst_lv(b.left, env)
        right = _subst_lv(b.right, env)
        cl = _const_of(left, env)
        cr = _const_of(right, env)
        if cl is not None and cr is not None:
            return TRUE if apply_relop(b.op, cl, cr) else FALSE
        if cr is not None:
            return RelLN(left, b.op, cr)
        if cl is not None:
            return RelLN(right, _FLIP[b.op], cl)
        if left is right:
            return TRUE if b.op is RelOp.EQ else FALSE
        if b.op is RelOp.GT:
            left, right = right, left  # x > y reads as y < x
            op = RelOp.LT
        else:
            op = b.op
        if op is RelOp.EQ and pretty_lvalue(right) < pretty_lvalue(left):
            left, right = right, left
        return RelLL(left, op, right)
    if isinstance(b, And):
        l = _rewrite_bexp(b.left, env)
        r = _rewrite_bexp(b.right, env)
        if l is FALSE or r is FALSE:
            return FALSE
        if l is TRUE:
            return r
        if r is TRUE:
            return l
        return And(l, r)
    if isinstance(b, Or):
        l = _rewrite_bexp(b.left, env)
        r = _rewrite_bexp(b.right, env)
        if l is TRUE or r is TRUE:
            return TRUE
        if l is FALSE:
            return r
        if r is FALSE:
            return l
        return Or(l, r)
    if isinstance(b, Not):
        o = _rewrite_bexp(b.operand, env)
        if isinstance(o, BoolLit):
            return FALSE if o.value else TRUE
        if isinstance(o, Not):
            return o.operand
        return Not(o)
    return b  # BoolLit or BHole


def _kill(env: _Env, name: str) -> None:
    env.pop(name, None)
    stale = [x for x, f in env.items() if isinstance(f, Var) and f.name == name]
    for x in stale:
        del env[x]


_written_cache: dict[Command, tuple[frozenset, bool]] = {}


def _written(c: Command) -> tuple[frozenset, bool]:
    """(assigned variable names, contains-a-statement-hole)."""
    cached = _written_cache.get(c)
    if cached is not None:
        return cached
    out: set[str] = set()
    any_hole = False
    stack = [c]
    while stack:
        node = stack.pop()
        if isinstance(node, Assign):
            if isinstance(node.target, Var):
                out.add(node.target.name)
            else:
                out.add(node.target.array)
        elif isinstance(node, Seq):
            stack += (node.first, node.second)
        elif isinstance(node, If):
            stack += (node.then_body, node.else_body)
        elif isinstance(node, While):
            stack.append(node.body)
        elif isinstance(node, CHole):
            any_hole = True
    result = (frozenset(out), any_hole)
    _written_cache[c] = result
    return result


def _forward(c: Command, env: _Env) -> Command:
    """Propagate constants and copies, folding expressions and guards.
    Mutates env to reflect the state after c."""
    if isinstance(c, Assign):
        value = _rewrite_aexp(c.value, env)
        target = c.target
        if isinstance(target, Var):
            if value is Load(target):
                return SKIP  # x := x
            _kill(env, target.name)
            if isinstance(value, Const):
                env[target.name] = value
            elif isinstance(value, Load) and isinstance(value.lv, Var):
                env[target.name] = value.lv
            return Assign(target, value)
        new_target = ArrRef(target.array, _subst_var(target.index, env))
        return Assign(new_target, value)
    if isinstance(c, Seq):
        first = _forward(c.first, env)
        second = _forward(c.second, env)
        return Seq(first, second)
    if isinstance(c, If):
        cond = _rewrite_bexp(c.cond, env)
        if cond is TRUE:
            return _forward(c.then_body, env)
        if cond is FALSE:
            return _forward(c.else_body, env)
        then_src, else_src = c.then_body, c.else_body
        if isinstance(cond, Not):  # if (!b) A else B reads as if (b) B else A
            cond = cond.operand
            then_src, else_src = else_src, then_src
        env_then = dict(env)
        env_else = dict(env)
        then_body = _forward(then_src, env_then)
        else_body = _forward(else_src, env_else)
        env.clear()
        env.update({x: f for x, f in env_then.items() if env_else.get(x) is f})
        if then_body is else_body and not then_body.has_hole:
            return then_body
        return If(cond, then_body, else_body)
    if isinstance(c, While):
        killed, body_has_hole = _written(c.body)
        if body_has_hole:
            env.clear()
        else:
            for x in killed:
                _kill(env, x)
        cond = _rewrite_bexp(c.cond, env)
        if cond is FALSE:
            return SKIP  # the loop can never be entered
        body_env = dict(env)
        body = _forward(c.body, body_env)
        # facts that survived the kill set hold at exit as well
        return While(cond, body)
    if isinstance(c, CHole):
        env.clear()
        return c
    return c  # Skip


def _lv_uses(lv: LValue) -> set[str]:
    if isinstance(lv, Var):
        return {lv.name}
    return {lv.array, lv.index}


def _aexp_uses(a) -> set[str] | None:
    if isinstance(a, Const):
        return set()
    if isinstance(a, Load):
        return _lv_uses(a.lv)
    if isinstance(a, BinLL):
        return _lv_uses(a.left) | _lv_uses(a.right)
    if isinstance(a, BinLN):
        return _lv_uses(a.left)
    return None  # a hole may read anything


def _bexp_uses(b) -> set[str] | None:
    if isinstance(b, BoolLit):
        return set()
    if isinstance(b, RelLL):
        return _lv_uses(b.left) | _lv_uses(b.right)
    if isinstance(b, RelLN):
        return _lv_uses(b.left)
    if isinstance(b, (And, Or)):
        l = _bexp_uses(b.left)
        r = _bexp_uses(b.right)
        return None if l is None or r is None else l | r
    if isinstance(b, Not):
        return _bexp_uses(b.operand)
    return None  # a hole may read anything


_allvars_cache: dict[Command, frozenset] = {}


def _all_vars(c: Command) -> frozenset:
    """Every identifier mentioned in c (a finite universe for liveness)."""
    cached = _allvars_cache.get(c)
    if cached is not None:
        return cached
    out: set[str] = set()
    stack: list = [c]
    while stack:
        node = stack.pop()
        if isinstance(node, (Var, ArrRef)):
            out |= _lv_uses(node)
        elif isinstance(node, Assign):
            stack += (node.target, node.value)
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
            stack.append(node.lv)
        elif isinstance(node, (BinLL, RelLL)):
            stack += (node.left, node.right)
        elif isinstance(node, (BinLN, RelLN)):
            stack.append(node.left)
    result = frozenset(out)
    _allvars_cache[c] = result
    return result


def _dce(c: Command, live: set[str], universe: frozenset) -> tuple[Command, set[str]]:
    """Drop assignments whose target is dead; returns (command, live-before).

    `live` is threaded backwards and mutated in place; a hole makes the
    whole universe live at its position.  An assignment whose value is a
    hole is never dropped: holes must survive normalization.
    """
    if isinstance(c, Assign):
        uses = _aexp_uses(c.value)
        if isinstance(c.target, Var):
            if uses is None:  # value is a hole
                live |= universe
                return c, live
            if c.target.name not in live:
                return SKIP, live
            live.discard(c.target.name)
            live |= uses
            return c, live
        # a cell write leaves the rest of the array intact: the array stays live
        live |= universe if uses is None else uses
        live |= _lv_uses(c.target)
        return c, live
    if isinstance(c, Seq):
        second, live = _dce(c.second, live, universe)
        first, live = _dce(c.first, live, universe)
        if first is c.first and second is c.second:
            return c, live
        return Seq(first, second), live
    if isinstance(c, If):
        branch_live = set(live)
        then_body, lt = _dce(c.then_body, branch_live, universe)
        else_body, live = _dce(c.else_body, live, universe)
        live |= lt
        uses = _bexp_uses(c.cond)
        live |= universe if uses is None else uses
        if then_body is c.then_body and else_body is c.else_body:
            return c, live
        return If(c.cond, then_body, else_body), live
    if isinstance(c, While):
        bound = set(live)
        uses = _bexp_uses(c.cond)
        bound |= universe if uses is None else uses
        while True:  # iterate liveness through the loop to a fixed point
            body, live_body = _dce(c.body, set(bound), universe)
            if live_body <= bound:
                if body is c.body:
                    return c, bound
                return While(c.cond, body), bound
            bound |= live_body
    if isinstance(c, CHole):
        live |= universe
        return c, live
    return c, live  # Skip


def _flatten(c: Command, out: list[Command]) -> None:
    if isinstance(c, Seq):
        _flatten(c.first, out)
        _flatten(c.second, out)
    elif not isinstance(c, Skip):
        out.append(c)


def _rw_sets(s: Assign) -> tuple[frozenset, frozenset]:
    """(reads, writes) of a hole-free assignment; arrays count whole."""
    uses = _aexp_uses(s.value)
    if isinstance(s.target, Var):
        return frozenset(uses), frozenset((s.target.name,))
    # a cell write reads the index and the rest of the array
    return frozenset(uses | _lv_uses(s.target)), frozenset((s.target.array,))


_order_key_cache: dict[Command, str] = {}


def _order_key(s: Command) -> str:
    k = _order_key_cache.get(s)
    if k is None:
        k = pretty_command(s)
        _order_key_cache[s] = k
    return k


def _sort_independent(parts: list[Command], protect_last: bool) -> None:
    """Canonically order adjacent independent assignments (bubble passes).

    Swapping adjacent statements that touch disjoint state is semantics
    preserving, so permutations of straight-line code collapse to one
    representative.  The final statement of a loop body is pinned: it
    carries the loop's progress argument.
    """
    n = len(parts) - 1 if protect_last else len(parts)
    swapped = True
    while swapped:
        swapped = False
        for i in range(n - 1):
            a, b = parts[i], parts[i + 1]
            if not (isinstance(a, Assign) and isinstance(b, Assign)):
                continue
            if a.has_hole or b.has_hole:
                continue
            if _order_key(b) >= _order_key(a):
                continue
            ra, wa = _rw_sets(a)
            rb, wb = _rw_sets(b)
            if wa & (rb | wb) or wb & ra:
                continue
            parts[i], parts[i + 1] = b, a
            swapped = True


def _canon(c: Command, in_loop: bool = False) -> Command:
    """Right-nest sequences, dropping skips and canonicalizing the order of
    independent statements; recurses into blocks."""
    if isinstance(c, If):
        c = If(c.cond, _canon(c.then_body), _canon(c.else_body))
    elif isinstance(c, While):
        c = While(c.cond, _canon(c.body, in_loop=True))
    if not isinstance(c, Seq):
        return c
    parts: list[Command] = []
    _flatten(c, parts)
    parts = [_canon(p, in_loop=False) for p in parts]
    if not parts:
        return SKIP
    _sort_independent(parts, protect_last=in_loop)
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Seq(p, out)
    return out


_MAX_ROUNDS = 25


def normalize(c: Command, live_out: set[str] | None = None) -> Command:
    """Canonical semantically-equivalent form of a (possibly partial) command.

    `live_out` names the variables observable after the command (for a
    program body, its output variable); None treats everything as
    observable, which disables exit-driven dead-store removal.
    """
    for _ in range(_MAX_ROUNDS):
        c2 = _forward(c, {})
        universe = _all_vars(c2)
        seed = set(universe) if live_out is None else set(live_out)
        c2, _ = _dce(c2, seed, universe)
        c2 = _canon(c2)
        if c2 is c:
            return c
        c = c2
    return c


# --------------------------------------------------------------------------
# Loop-termination heuristics.  A completed loop must have a guard of the
# form x < y or x > n, its body's final statement must step the induction
# variable toward the exit, and nothing else in the body may assign the
# guard's variables.


def _spine(c: Command) -> list[Command]:
    """The statements of c in order, flattening sequence nesting."""
    out: list[Command] = []
    _spine_collect(c, out)
    return out


def _spine_collect(c: Command, out: list[Command]) -> None:
    if isinstance(c, Seq):
        _spine_collect(c.first, out)
        _spine_collect(c.second, out)
    else:
        out.append(c)


def _assigns_any(c: Command, names: set[str]) -> bool:
    stack = [c]
    while stack:
        node = stack.pop()
        if isinstance(node, Assign):
            if isinstance(node.target, Var) and node.target.name in names:
                return True
        elif isinstance(node, Seq):
            stack += (node.first, node.second)
        elif isinstance(node, If):
            stack += (node.then_body, node.else_body)
        elif isinstance(node, While):
            stack.append(node.body)
    return False


def _valid_update(last: Command, x: str, direction: str, bound: int | None) -> bool:
    """Is `last` of the form x := x (+|-|/|%) k stepping toward loop exit?"""
    if not (
        isinstance(last, Assign)
        and last.target is Var(x)
        and isinstance(last.value, BinLN)
        and last.value.left is Var(x)
    ):
        return False
    op, k = last.value.op, last.value.value
    if direction == "up":
        return op is BinOp.ADD and k > 0
    if op is BinOp.SUB:
        return k > 0
    if bound is not None and bound >= 0:
        # positive counters also shrink under division or remainder
        if op is BinOp.DIV:
            return k >= 2
        if op is BinOp.MOD:
            return k >= 1
    return False


def _loop_ok(cond: BExp, body: Command) -> bool:
    if isinstance(cond, RelLL):
        if cond.op is not RelOp.LT:
            return False
        if not (isinstance(cond.left, Var) and isinstance(cond.right, Var)):
            return False
        x, names = cond.left.name, {cond.left.name, cond.right.name}
        direction, bound = "up", None
    elif isinstance(cond, RelLN):
        if cond.op is not RelOp.GT or not isinstance(cond.left, Var):
            return False
        x, names = cond.left.name, {cond.left.name}
        direction, bound = "down", cond.value
    else:
        return False
    parts = _spine(body)
    if not _valid_update(parts[-1], x, direction, bound):
        return False
    return not any(_assigns_any(p, names) for p in parts[:-1])


def termination_ok(c: Command) -> bool:
    """Check the make-progress rules on every completed loop.

    A loop still containing a hole in its guard or body passes vacuously;
    it is judged once complete.
    """
    stack = [c]
    while stack:
        node = stack.pop()
        if isinstance(node, Seq):
            stack += (node.first, node.second)
        elif isinstance(node, If):
            stack += (node.then_body, node.else_body)
        elif isinstance(node, While):
            if not node.cond.has_hole and not node.body.has_hole and not _loop_ok(node.cond, node.body):
                return False
            stack.append(node.body)
    return True


# The search-time gate: reject a state as soon as *every* completion of
# some loop is doomed to violate the heuristics.  Holes only ever expand
# in place, so a loop's built structure (guard root, sequence spine, the
# target of its final assignment) is already fixed; judging it early
# never discards a state with a surviving completion, it only discards
# the subtree below it sooner than `termination_ok` would.

_viable_cache: dict[Command, bool] = {}


def _guard_doomed(cond: BExp) -> tuple[str, str | None, int | None] | None:
    """Classify a loop guard: ("bad",..) unredeemable, ("open",..) still a
    hole, or ("ok", x, bound) with the induction variable."""
    if isinstance(cond, BHole):
        return ("open", None, None)
    if isinstance(cond, RelLL):
        if cond.op is RelOp.LT and isinstance(cond.left, Var) and isinstance(cond.right, Var):
            return ("ok", cond.left.name, None)
        return None
    if isinstance(cond, RelLN):
        if cond.op is RelOp.GT and isinstance(cond.left, Var):
            return ("ok", cond.left.name, cond.value)
        return None
    return None  # literals and connectives can never become an allowed atom


def _while_viable(node: While) -> bool:
    verdict = _guard_doomed(node.cond)
    if verdict is None:
        return False
    state, x, bound = verdict
    parts = _spine(node.body)
    last = parts[-1]
    # the final spine slot stays final in every completion
    if isinstance(last, (Skip, If, While)):
        return False
    if isinstance(last, Assign) and isinstance(last.target, ArrRef):
        return False
    if state == "open":
        return True  # induction variable unknown; judge the rest later
    names = {x}
    if isinstance(node.cond, RelLL):
        names.add(node.cond.right.name)
    if isinstance(last, Assign):
        if last.target is not Var(x):
            return False
        if not isinstance(last.value, AHole):
            direction = "up" if isinstance(node.cond, RelLL) else "down"
            if not _valid_update(last, x, direction, bound):
                return False
    # a completed assignment to the guard's variables anywhere else can
    # never become the final update
    return not any(_assigns_any(p, names) for p in parts[:-1])


def loops_viable(c: Command) -> bool:
    """True unless some loop in c can no longer satisfy the heuristics in
    any completion.  Agrees with `termination_ok` on hole-free commands."""
    cached = _viable_cache.get(c)
    if cached is not None:
        return cached
    if isinstance(c, Seq):
        ok = loops_viable(c.first) and loops_viable(c.second)
    elif isinstance(c, If):
        ok = loops_viable(c.then_body) and loops_viable(c.else_body)
    elif isinstance(c, While):
        ok = _while_viable(c) and loops_viable(c.body)
    else:
        ok = True
    _viable_cache[c] = ok
    return ok


# --------------------------------------------------------------------------
# The workset loop


@dataclass
class SearchConfig:
    max_size: int = 40
    fuel: int = DEFAULT_FUEL
    pruning: bool = True
    normalization: bool = True
    dedup: bool = True
    widen_after: int = DEFAULT_WIDEN_AFTER
    unroll_limit: int = DEFAULT_UNROLL_LIMIT
    time_budget: float | None = None  # wall-clock seconds, None = unlimited

    @staticmethod
    def for_mode(mode: str, **overrides) -> "SearchConfig":
        """base = plain enumeration, opt = normalization, ours = opt + pruning."""
        if mode == "base":
            cfg = SearchConfig(pruning=False, normalization=False)
        elif mode == "opt":
            cfg = SearchConfig(pruning=False, normalization=True)
        elif mode == "ours":
            cfg = SearchConfig(pruning=True, normalization=True)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        for k, v in overrides.items():
            setattr(cfg, k, v)
        return cfg


SOLVED = "solved"
EXHAUSTED = "exhausted"
TIMED_OUT = "timeout"


@dataclass
class SearchStats:
    expanded: int = 0
    pruned: int = 0
    deduplicated: int = 0
    checked: int = 0
    loop_rejected: int = 0
    elapsed: float = 0.0
    outcome: str = EXHAUSTED
    solution: Program | None = None

    @property
    def solved(self) -> bool:
        return self.outcome == SOLVED


def synthesize(
    problem: Problem,
    cfg: SearchConfig | None = None,
    expansion_budget: int | None = None,
) -> SearchStats:
    """Search for the smallest complete program consistent with all examples.

    `expansion_budget` bounds the number of popped states (mainly for
    comparing configurations with a deterministic cutoff); exceeding it
    reports a timeout outcome.
    """
    cfg = cfg or SearchConfig()
    validate(problem)
    res = problem.resources
    template = problem.program
    examples = [
        (ins, tuple(out) if isinstance(out, list) else out)
        for ins, out in problem.examples
    ]
    exps = Expansions(res)
    pruner = StatePruner(template, examples, res, cfg.widen_after, cfg.unroll_limit)
    ivars = set(res.ivars)
    live_out = {template.output}

    def norm(c: Command) -> Command:
        return normalize(c, live_out) if cfg.normalization else c

    stats = SearchStats()
    start = time.monotonic()
    c0 = norm(template.body)
    heap: list[tuple[int, int, Command]] = [(c0.size, 0, c0)]
    seen: set[Command] = {c0}
    raw_seen: set[Command] = set()
    counter = 1
    max_size = cfg.max_size
    check_clock = cfg.time_budget is not None

    while heap:
        if check_clock and time.monotonic() - start > cfg.time_budget:
            stats.outcome = TIMED_OUT
            break
        if expansion_budget is not None and stats.expanded >= expansion_budget:
            stats.outcome = TIMED_OUT
            break
        sz, _, c = heappop(heap)
        stats.expanded += 1
        if not c.has_hole:
            stats.checked += 1
            candidate = template.with_body(c)
            if is_solution(candidate, examples, cfg.fuel, ivars):
                stats.outcome = SOLVED
                stats.solution = candidate
                break
            continue
        if cfg.pruning and pruner.prune_body(c):
            stats.pruned += 1
            continue
        for succ in next_states(c, exps, canonical=True):
            if succ in raw_seen:
                stats.deduplicated += 1
                continue
            raw_seen.add(succ)
            if not loops_viable(succ):
                stats.loop_rejected += 1
                continue
            nc = norm(succ)
            if nc.size > max_size:
                continue
            if cfg.dedup:
                if nc in seen:
                    stats.deduplicated += 1
                    continue
                seen.add(nc)
            heappush(heap, (nc.size, counter, nc))
            counter += 1

    stats.elapsed = time.monotonic() - start
    return stats
