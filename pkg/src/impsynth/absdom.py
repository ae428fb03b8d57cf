"""Abstract value domain: intervals with widening, a flat lattice of
symbolic expressions, their product, and pointwise abstract memories.

Interval bounds are Python ints, with ``float("-inf")`` / ``float("inf")``
standing in for the missing endpoints; finite bounds therefore never lose
precision.  Intervals, symbolic expressions, and product values are all
hash-consed, so lattice comparisons start with a pointer check; the empty
interval and the bottom product value are canonical singletons.  Symbolic
constant folding reuses the interpreter's 64-bit truncated arithmetic so
a folded constant always agrees with a concrete run.
"""

from __future__ import annotations

import warnings

from .lang import BinOp
from .interp import EvalError, INT_MAX, INT_MIN, Value, apply_binop

NEG_INF = float("-inf")
POS_INF = float("inf")

Bound = int | float  # float only ever holds +-inf


def _clamp(b: Bound) -> Bound:
    # Concrete arithmetic past the 64-bit range overflows (an error, not a
    # value), so a bound beyond it widens soundly to infinity.  This also
    # keeps bounds from growing into huge bignums in loops.
    if b > INT_MAX:
        return POS_INF
    if b < INT_MIN:
        return NEG_INF
    return b


# --------------------------------------------------------------------------
# Intervals


class Interval:
    """Closed integer interval [lo, hi]; `BOT` is the canonical empty one.

    Constructing any empty shape (lo > hi, or a bound that only an
    infinite "value" could satisfy) returns `BOT`.
    """

    __slots__ = ("lo", "hi", "empty")
    _pool: dict = {}

    def __new__(cls, lo: Bound, hi: Bound):
        if lo > hi or lo == POS_INF or hi == NEG_INF:
            return BOT
        key = (lo, hi)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.lo = lo
            self.hi = hi
            self.empty = False
            cls._pool[key] = self
        return self

    def is_bottom(self) -> bool:
        return self.empty

    def is_const(self) -> bool:
        return self.lo == self.hi and not self.empty

    def contains(self, n: int) -> bool:
        return not self.empty and self.lo <= n <= self.hi

    def join(self, other: "Interval") -> "Interval":
        if self is other:
            return self
        if self.empty:
            return other
        if other.empty:
            return self
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def meet(self, other: "Interval") -> "Interval":
        if self is other:
            return self
        if self.empty or other.empty:
            return BOT
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def leq(self, other: "Interval") -> bool:
        if self is other:
            return True
        if self.empty:
            return True
        if other.empty:
            return False
        return other.lo <= self.lo and self.hi <= other.hi

    def widen(self, next_: "Interval") -> "Interval":
        """Unstable bounds jump to infinity; widen(BOT, x) = x."""
        if self is next_:
            return self
        if self.empty:
            return next_
        if next_.empty:
            return self
        lo = self.lo if next_.lo >= self.lo else NEG_INF
        hi = self.hi if next_.hi <= self.hi else POS_INF
        return Interval(lo, hi)

    def __repr__(self):
        return "Interval(empty)" if self.empty else f"Interval({self.lo}, {self.hi})"


def _make_bot() -> Interval:
    bot = object.__new__(Interval)
    bot.lo = POS_INF
    bot.hi = NEG_INF
    bot.empty = True
    return bot


BOT = _make_bot()
TOP = Interval(NEG_INF, POS_INF)


def const_itv(n: int) -> Interval:
    return Interval(n, n)


def _bmul(a: Bound, b: Bound) -> Bound:
    if a == 0 or b == 0:
        return 0
    return a * b


def _bdiv(a: Bound, b: Bound) -> Bound:
    """Truncated division of bounds; used only with b of a definite sign."""
    if isinstance(a, float):  # +-inf / anything
        return a if b > 0 else -a
    if isinstance(b, float):  # finite / +-inf
        return 0
    q = abs(a) // abs(b)
    return -q if (a < 0) != (b < 0) else q


_NONNEG = Interval(0, POS_INF)
_NONPOS = Interval(NEG_INF, 0)
_NEGATIVE = Interval(NEG_INF, -1)
_POSITIVE = Interval(1, POS_INF)


def itv_arith(op: BinOp, i1: Interval, i2: Interval) -> Interval:
    """Sound interval arithmetic; Bot absorbs.

    Division by an interval spanning zero takes the hull over the nonzero
    sub-intervals; division by exactly [0,0] has no defined outcome and
    yields Bot.  Modulo is precise only for a positive constant divisor.
    """
    if i1.empty or i2.empty:
        return BOT
    if op is BinOp.ADD:
        return Interval(_clamp(i1.lo + i2.lo), _clamp(i1.hi + i2.hi))
    if op is BinOp.SUB:
        return Interval(_clamp(i1.lo - i2.hi), _clamp(i1.hi - i2.lo))
    if op is BinOp.MUL:
        p1 = _bmul(i1.lo, i2.lo)
        p2 = _bmul(i1.lo, i2.hi)
        p3 = _bmul(i1.hi, i2.lo)
        p4 = _bmul(i1.hi, i2.hi)
        return Interval(_clamp(min(p1, p2, p3, p4)), _clamp(max(p1, p2, p3, p4)))
    if op is BinOp.DIV:
        result = BOT
        for d in (i2.meet(_NEGATIVE), i2.meet(_POSITIVE)):
            if d.empty:
                continue
            q1 = _bdiv(i1.lo, d.lo)
            q2 = _bdiv(i1.lo, d.hi)
            q3 = _bdiv(i1.hi, d.lo)
            q4 = _bdiv(i1.hi, d.hi)
            result = result.join(
                Interval(_clamp(min(q1, q2, q3, q4)), _clamp(max(q1, q2, q3, q4)))
            )
        return result
    # MOD: remainder takes the dividend's sign and stays below the divisor
    if i2.is_const() and i2.lo > 0:
        d = i2.lo
        r = Interval(-(d - 1), d - 1)
        if i1.lo >= 0:
            r = r.meet(_NONNEG)
        elif i1.hi <= 0:
            r = r.meet(_NONPOS)
        return r
    return TOP


# --------------------------------------------------------------------------
# Symbolic expressions: a flat lattice over exact algebraic descriptions.
# Hash-consed like the AST, so the joins' equality tests are pointer
# comparisons.


class SConst:
    __slots__ = ("value",)
    _pool: dict = {}

    def __new__(cls, value: int):
        self = cls._pool.get(value)
        if self is None:
            self = object.__new__(cls)
            self.value = value
            cls._pool[value] = self
        return self

    def __repr__(self):
        return f"SConst({self.value})"


class SSym:
    __slots__ = ("var",)
    _pool: dict = {}

    def __new__(cls, var: str):
        self = cls._pool.get(var)
        if self is None:
            self = object.__new__(cls)
            self.var = var
            cls._pool[var] = self
        return self

    def __repr__(self):
        return f"SSym({self.var!r})"


class SBin:
    __slots__ = ("left", "op", "right")
    _pool: dict = {}

    def __new__(cls, left: "SymExp", op: BinOp, right: "SymExp"):
        key = (left, op, right)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.left = left
            self.op = op
            self.right = right
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"SBin({self.left!r}, {self.op}, {self.right!r})"


SymExp = SConst | SSym | SBin


class _SymTop:
    __slots__ = ()

    def __repr__(self) -> str:
        return "sym-top"


class _SymBot:
    __slots__ = ()

    def __repr__(self) -> str:
        return "sym-bot"


S_TOP = _SymTop()
S_BOT = _SymBot()

Symbolic = SymExp | _SymTop | _SymBot


def sym_leq(s1: Symbolic, s2: Symbolic) -> bool:
    return s1 is S_BOT or s2 is S_TOP or s1 is s2


def sym_join(s1: Symbolic, s2: Symbolic) -> Symbolic:
    if s1 is s2:
        return s1
    if s1 is S_BOT:
        return s2
    if s2 is S_BOT:
        return s1
    return S_TOP


def sym_binop(op: BinOp, s1: Symbolic, s2: Symbolic) -> Symbolic:
    if s1 is S_BOT or s2 is S_BOT:
        return S_BOT
    if s1 is S_TOP or s2 is S_TOP:
        return S_TOP
    if type(s1) is SConst and type(s2) is SConst:
        try:
            return SConst(apply_binop(op, s1.value, s2.value))
        except EvalError:
            return S_TOP
    return SBin(s1, op, s2)


# --------------------------------------------------------------------------
# Product values and memories


class AbsValue:
    """An interval paired with a symbolic description.

    Either component being bottom collapses the pair to the canonical
    bottom value, so `bot` is equivalent to either component check.
    """

    __slots__ = ("itv", "sym", "bot")
    _pool: dict = {}

    def __new__(cls, itv: Interval, sym: Symbolic):
        if itv.empty or sym is S_BOT:
            return BOTTOM_VALUE
        key = (itv, id(sym))
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.itv = itv
            self.sym = sym
            self.bot = False
            cls._pool[key] = self
        return self

    def is_bottom(self) -> bool:
        return self.bot

    def join(self, other: "AbsValue") -> "AbsValue":
        if self is other:
            return self
        if self.bot:
            return other
        if other.bot:
            return self
        return AbsValue(self.itv.join(other.itv), sym_join(self.sym, other.sym))

    def widen(self, next_: "AbsValue") -> "AbsValue":
        if self is next_:
            return self
        if self.bot:
            return next_
        if next_.bot:
            return self
        return AbsValue(self.itv.widen(next_.itv), sym_join(self.sym, next_.sym))

    def leq(self, other: "AbsValue") -> bool:
        if self is other:
            return True
        if self.bot:
            return True
        if other.bot:
            return False
        return self.itv.leq(other.itv) and sym_leq(self.sym, other.sym)

    def __repr__(self):
        return "AbsValue(bottom)" if self.bot else f"AbsValue({self.itv!r}, {self.sym!r})"


def _make_bottom_value() -> AbsValue:
    v = object.__new__(AbsValue)
    v.itv = BOT
    v.sym = S_BOT
    v.bot = True
    return v


BOTTOM_VALUE = _make_bottom_value()
TOP_VALUE = AbsValue(TOP, S_TOP)

absval = AbsValue  # the constructor already normalizes bottoms


def alpha(v: Value) -> AbsValue:
    """Abstraction of a concrete value.

    An integer abstracts to an exact point; an array to the range of its
    elements with an unknown (top) symbolic part.  The empty array has no
    defined abstraction and maps to bottom.
    """
    if isinstance(v, int):
        return AbsValue(const_itv(v), SConst(v))
    if len(v) == 0:
        warnings.warn("abstracting an empty array yields bottom", stacklevel=2)
        return BOTTOM_VALUE
    return AbsValue(Interval(min(v), max(v)), S_TOP)


AbsMemory = dict[str, AbsValue]


def mem_is_bottom(m: AbsMemory) -> bool:
    for v in m.values():
        if v.bot:
            return True
    return False


def _check_domains(m1: AbsMemory, m2: AbsMemory) -> None:
    if m1.keys() != m2.keys():
        raise RuntimeError(
            f"abstract memories over different variables: {sorted(m1)} vs {sorted(m2)}"
        )


def mem_join(m1: AbsMemory, m2: AbsMemory) -> AbsMemory:
    if m1 is m2:
        return m1
    _check_domains(m1, m2)
    if mem_is_bottom(m1):
        return m2
    if mem_is_bottom(m2):
        return m1
    out = {}
    for x, v1 in m1.items():
        v2 = m2[x]
        out[x] = v1 if v1 is v2 else v1.join(v2)
    return out


def mem_widen(m1: AbsMemory, m2: AbsMemory) -> AbsMemory:
    if m1 is m2:
        return m1
    _check_domains(m1, m2)
    if mem_is_bottom(m1):
        return m2
    if mem_is_bottom(m2):
        return m1
    out = {}
    for x, v1 in m1.items():
        v2 = m2[x]
        out[x] = v1 if v1 is v2 else v1.widen(v2)
    return out


def mem_leq(m1: AbsMemory, m2: AbsMemory) -> bool:
    if m1 is m2:
        return True
    _check_domains(m1, m2)
    if mem_is_bottom(m1):
        return True
    if mem_is_bottom(m2):
        return False
    for x, v1 in m1.items():
        v2 = m2[x]
        if v1 is not v2 and not v1.leq(v2):
            return False
    return True


def mem_bottom(domain) -> AbsMemory:
    return {x: BOTTOM_VALUE for x in domain}
