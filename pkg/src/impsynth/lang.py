"""AST, concrete syntax, and size metric for the hole language.

The language is a small imperative core over integers and integer arrays:
assignments to variables or array cells, sequencing, conditionals, and
while loops.  Arithmetic operands are l-values or integer literals;
guards are relations between l-values (or an l-value and a literal)
combined with &&, || and !.

Incomplete programs carry typed holes, all written ``?`` in the concrete
syntax and disambiguated by position: an arithmetic hole on the right of
``:=``, a guard hole inside ``while (...)`` / ``if (...)``, and a
statement hole in statement position.

AST nodes are hash-consed: constructing a node returns the one canonical
instance for that shape, so structural equality is pointer identity,
hashing is O(1), and every node carries its precomputed ``size`` (total
constructor count) and ``has_hole`` flag.  The search touches millions of
nodes; this representation is what keeps it cheap.  Nodes must never be
mutated, copied, or pickled.

Concrete syntax (EBNF)::

    program   = [ident "(" [ident {"," ident}] ")" "{"] body "return" ident ";" ["}"]
    body      = {stmt}
    stmt      = ("skip" | "?" | assign | while | if) [";"]
    assign    = lvalue ":=" aexp
    while     = "while" "(" bexp ")" "{" body "}"
    if        = "if" "(" bexp ")" "{" body "}" "else" "{" body "}"
    lvalue    = ident ["[" ident "]"]
    aexp      = "?" | int | lvalue [binop (lvalue | int)]
    bexp      = band {"||" band}
    band      = bunary {"&&" bunary}
    bunary    = "!" bunary | batom
    batom     = "true" | "false" | "?" | "(" bexp ")" | rel
    rel       = lvalue relop (lvalue | int)
    binop     = "+" | "-" | "*" | "/" | "%"
    relop     = "==" | "=" | ">" | "<"
    int       = ["-"] digit {digit}

The grammar deliberately excludes nested arithmetic and literals as left
operands; the parser rejects them rather than silently extending the
language.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class BinOp(Enum):
    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"
    MOD = "%"


class RelOp(Enum):
    EQ = "=="
    GT = ">"
    LT = "<"


class Node:
    __slots__ = ()


# --------------------------------------------------------------------------
# L-values


class Var(Node):
    __slots__ = ("name", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, name: str):
        self = cls._pool.get(name)
        if self is None:
            self = object.__new__(cls)
            self.name = name
            self.size = 1
            self.has_hole = False
            cls._pool[name] = self
        return self

    def __repr__(self):
        return f"Var({self.name!r})"


class ArrRef(Node):
    __slots__ = ("array", "index", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, array: str, index: str):
        key = (array, index)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.array = array
            self.index = index
            self.size = 1
            self.has_hole = False
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"ArrRef({self.array!r}, {self.index!r})"


LValue = Var | ArrRef


# --------------------------------------------------------------------------
# Arithmetic expressions


class Const(Node):
    __slots__ = ("value", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, value: int):
        self = cls._pool.get(value)
        if self is None:
            self = object.__new__(cls)
            self.value = value
            self.size = 1
            self.has_hole = False
            cls._pool[value] = self
        return self

    def __repr__(self):
        return f"Const({self.value})"


class Load(Node):
    """A read of an l-value, injected into expression position.

    Transparent for the size metric: a variable read weighs the same as a
    literal."""

    __slots__ = ("lv", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, lv: LValue):
        self = cls._pool.get(lv)
        if self is None:
            self = object.__new__(cls)
            self.lv = lv
            self.size = 1
            self.has_hole = False
            cls._pool[lv] = self
        return self

    def __repr__(self):
        return f"Load({self.lv!r})"


class BinLL(Node):
    __slots__ = ("left", "op", "right", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, left: LValue, op: BinOp, right: LValue):
        key = (left, op, right)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.left = left
            self.op = op
            self.right = right
            self.size = 3
            self.has_hole = False
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"BinLL({self.left!r}, {self.op}, {self.right!r})"


class BinLN(Node):
    __slots__ = ("left", "op", "value", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, left: LValue, op: BinOp, value: int):
        key = (left, op, value)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.left = left
            self.op = op
            self.value = value
            self.size = 2
            self.has_hole = False
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"BinLN({self.left!r}, {self.op}, {self.value})"


class AHole(Node):
    __slots__ = ("size", "has_hole")
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            self = object.__new__(cls)
            self.size = 1
            self.has_hole = True
            cls._instance = self
        return cls._instance

    def __repr__(self):
        return "AHole()"


AExp = Const | Load | BinLL | BinLN | AHole


# --------------------------------------------------------------------------
# Boolean expressions


class BoolLit(Node):
    __slots__ = ("value", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, value: bool):
        self = cls._pool.get(value)
        if self is None:
            self = object.__new__(cls)
            self.value = value
            self.size = 1
            self.has_hole = False
            cls._pool[value] = self
        return self

    def __repr__(self):
        return f"BoolLit({self.value})"


class RelLL(Node):
    __slots__ = ("left", "op", "right", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, left: LValue, op: RelOp, right: LValue):
        key = (left, op, right)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.left = left
            self.op = op
            self.right = right
            self.size = 3
            self.has_hole = False
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"RelLL({self.left!r}, {self.op}, {self.right!r})"


class RelLN(Node):
    __slots__ = ("left", "op", "value", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, left: LValue, op: RelOp, value: int):
        key = (left, op, value)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.left = left
            self.op = op
            self.value = value
            self.size = 2
            self.has_hole = False
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"RelLN({self.left!r}, {self.op}, {self.value})"


class And(Node):
    __slots__ = ("left", "right", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, left: BExp, right: BExp):
        key = (left, right)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.left = left
            self.right = right
            self.size = 1 + left.size + right.size
            self.has_hole = left.has_hole or right.has_hole
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"And({self.left!r}, {self.right!r})"


class Or(Node):
    __slots__ = ("left", "right", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, left: BExp, right: BExp):
        key = (left, right)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.left = left
            self.right = right
            self.size = 1 + left.size + right.size
            self.has_hole = left.has_hole or right.has_hole
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"Or({self.left!r}, {self.right!r})"


class Not(Node):
    __slots__ = ("operand", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, operand: BExp):
        self = cls._pool.get(operand)
        if self is None:
            self = object.__new__(cls)
            self.operand = operand
            self.size = 1 + operand.size
            self.has_hole = operand.has_hole
            cls._pool[operand] = self
        return self

    def __repr__(self):
        return f"Not({self.operand!r})"


class BHole(Node):
    __slots__ = ("size", "has_hole")
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            self = object.__new__(cls)
            self.size = 1
            self.has_hole = True
            cls._instance = self
        return cls._instance

    def __repr__(self):
        return "BHole()"


BExp = BoolLit | RelLL | RelLN | And | Or | Not | BHole


# --------------------------------------------------------------------------
# Commands


class Assign(Node):
    __slots__ = ("target", "value", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, target: LValue, value: AExp):
        key = (target, value)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.target = target
            self.value = value
            self.size = 1 + target.size + value.size
            self.has_hole = value.has_hole
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"Assign({self.target!r}, {self.value!r})"


class Skip(Node):
    __slots__ = ("size", "has_hole")
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            self = object.__new__(cls)
            self.size = 1
            self.has_hole = False
            cls._instance = self
        return cls._instance

    def __repr__(self):
        return "Skip()"


class Seq(Node):
    __slots__ = ("first", "second", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, first: Command, second: Command):
        key = (first, second)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.first = first
            self.second = second
            self.size = 1 + first.size + second.size
            self.has_hole = first.has_hole or second.has_hole
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"Seq({self.first!r}, {self.second!r})"


class If(Node):
    __slots__ = ("cond", "then_body", "else_body", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, cond: BExp, then_body: Command, else_body: Command):
        key = (cond, then_body, else_body)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.cond = cond
            self.then_body = then_body
            self.else_body = else_body
            self.size = 1 + cond.size + then_body.size + else_body.size
            self.has_hole = cond.has_hole or then_body.has_hole or else_body.has_hole
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"If({self.cond!r}, {self.then_body!r}, {self.else_body!r})"


class While(Node):
    __slots__ = ("cond", "body", "size", "has_hole")
    _pool: dict = {}

    def __new__(cls, cond: BExp, body: Command):
        key = (cond, body)
        self = cls._pool.get(key)
        if self is None:
            self = object.__new__(cls)
            self.cond = cond
            self.body = body
            self.size = 1 + cond.size + body.size
            self.has_hole = cond.has_hole or body.has_hole
            cls._pool[key] = self
        return self

    def __repr__(self):
        return f"While({self.cond!r}, {self.body!r})"


class CHole(Node):
    __slots__ = ("size", "has_hole")
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            self = object.__new__(cls)
            self.size = 1
            self.has_hole = True
            cls._instance = self
        return cls._instance

    def __repr__(self):
        return "CHole()"


Command = Assign | Skip | Seq | If | While | CHole

TRUE = BoolLit(True)
FALSE = BoolLit(False)
SKIP = Skip()
A_HOLE = AHole()
B_HOLE = BHole()
C_HOLE = CHole()


@dataclass(frozen=True)
class Program:
    """A function: named inputs, a command body, and the returned variable."""

    inputs: tuple[str, ...]
    body: Command
    output: str
    name: str = "f"

    def with_body(self, body: Command) -> "Program":
        return Program(self.inputs, body, self.output, self.name)


# --------------------------------------------------------------------------
# Size metric: total AST node count.  Every constructor (holes included)
# counts one; identifiers and integer literals inside a node do not add.


def size(node: Node | Program) -> int:
    if isinstance(node, Program):
        return node.body.size
    return node.size


# --------------------------------------------------------------------------
# Hole discovery and replacement.  A hole descriptor is (kind, path) where
# kind is one of "A", "B", "C" and path is a tuple of child indices from
# the root.  Children are ordered left to right; only hole-bearing slots
# are indexed (an Assign's target cannot contain a hole).

_CHILDREN = {
    Assign: ("value",),
    Seq: ("first", "second"),
    If: ("cond", "then_body", "else_body"),
    While: ("cond", "body"),
    And: ("left", "right"),
    Or: ("left", "right"),
    Not: ("operand",),
}

_HOLE_KIND = {AHole: "A", BHole: "B", CHole: "C"}


def holes(node: Node) -> list[tuple[str, tuple[int, ...]]]:
    """All holes in preorder, left to right.  Empty iff the state is terminal."""
    out: list[tuple[str, tuple[int, ...]]] = []
    _collect_holes(node, (), out)
    return out


def _collect_holes(node, path, out) -> None:
    if not node.has_hole:
        return
    kind = _HOLE_KIND.get(type(node))
    if kind is not None:
        out.append((kind, path))
        return
    for i, f in enumerate(_CHILDREN[type(node)]):
        _collect_holes(getattr(node, f), path + (i,), out)


def first_hole(node: Node) -> tuple[str, tuple[int, ...]] | None:
    if not node.has_hole:
        return None
    path = []
    while True:
        kind = _HOLE_KIND.get(type(node))
        if kind is not None:
            return kind, tuple(path)
        for i, f in enumerate(_CHILDREN[type(node)]):
            child = getattr(node, f)
            if child.has_hole:
                path.append(i)
                node = child
                break


def is_terminal(node: Node) -> bool:
    return not node.has_hole


def _rebuild(node: Node, field: str, child: Node) -> Node:
    cls = type(node)
    if cls is Assign:
        return Assign(node.target, child)
    if cls is Seq:
        return Seq(child, node.second) if field == "first" else Seq(node.first, child)
    if cls is If:
        if field == "cond":
            return If(child, node.then_body, node.else_body)
        if field == "then_body":
            return If(node.cond, child, node.else_body)
        return If(node.cond, node.then_body, child)
    if cls is While:
        return While(child, node.body) if field == "cond" else While(node.cond, child)
    if cls is And:
        return And(child, node.right) if field == "left" else And(node.left, child)
    if cls is Or:
        return Or(child, node.right) if field == "left" else Or(node.left, child)
    if cls is Not:
        return Not(child)
    raise TypeError(f"cannot rebuild {cls.__name__}")


def replace_at(node: Node, path: tuple[int, ...], replacement: Node) -> Node:
    """Rebuild `node` with the subtree at `path` swapped for `replacement`."""
    if not path:
        return replacement
    field = _CHILDREN[type(node)][path[0]]
    child = replace_at(getattr(node, field), path[1:], replacement)
    return _rebuild(node, field, child)


# --------------------------------------------------------------------------
# Pretty-printing


def pretty_lvalue(lv: LValue) -> str:
    if isinstance(lv, Var):
        return lv.name
    return f"{lv.array}[{lv.index}]"


def pretty_aexp(a: AExp) -> str:
    if isinstance(a, Const):
        return str(a.value)
    if isinstance(a, Load):
        return pretty_lvalue(a.lv)
    if isinstance(a, BinLL):
        return f"{pretty_lvalue(a.left)} {a.op.value} {pretty_lvalue(a.right)}"
    if isinstance(a, BinLN):
        return f"{pretty_lvalue(a.left)} {a.op.value} {a.value}"
    return "?"


# precedence: || < && < !
def pretty_bexp(b: BExp, parent_prec: int = 0) -> str:
    if isinstance(b, BoolLit):
        return "true" if b.value else "false"
    if isinstance(b, RelLL):
        return f"{pretty_lvalue(b.left)} {b.op.value} {pretty_lvalue(b.right)}"
    if isinstance(b, RelLN):
        return f"{pretty_lvalue(b.left)} {b.op.value} {b.value}"
    if isinstance(b, BHole):
        return "?"
    if isinstance(b, Or):
        s = f"{pretty_bexp(b.left, 1)} || {pretty_bexp(b.right, 2)}"
        return f"({s})" if parent_prec > 1 else s
    if isinstance(b, And):
        s = f"{pretty_bexp(b.left, 2)} && {pretty_bexp(b.right, 3)}"
        return f"({s})" if parent_prec > 2 else s
    if isinstance(b, Not):
        return f"!{pretty_bexp(b.operand, 4)}"
    raise TypeError(f"not a boolean expression: {b!r}")


def pretty_command(c: Command, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(c, Seq):
        return f"{pretty_command(c.first, indent)}\n{pretty_command(c.second, indent)}"
    if isinstance(c, Assign):
        return f"{pad}{pretty_lvalue(c.target)} := {pretty_aexp(c.value)};"
    if isinstance(c, Skip):
        return f"{pad}skip;"
    if isinstance(c, CHole):
        return f"{pad}?;"
    if isinstance(c, While):
        body = pretty_command(c.body, indent + 1)
        return f"{pad}while ({pretty_bexp(c.cond)}){{\n{body}\n{pad}}};"
    if isinstance(c, If):
        t = pretty_command(c.then_body, indent + 1)
        e = pretty_command(c.else_body, indent + 1)
        return f"{pad}if ({pretty_bexp(c.cond)}){{\n{t}\n{pad}}} else {{\n{e}\n{pad}}};"
    raise TypeError(f"not a command: {c!r}")


def pretty(p: Program) -> str:
    """Render a program so that ``parse(pretty(p))`` is structurally `p`."""
    body = pretty_command(p.body, 1)
    header = f"{p.name}({', '.join(p.inputs)}){{"
    return f"{header}\n{body}\n  return {p.output};\n}}"


# --------------------------------------------------------------------------
# Parsing


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


_TOKEN_RE = re.compile(
    r"\s+|(?P<num>\d+)|(?P<id>[A-Za-z_]\w*)"
    r"|(?P<sym>:=|==|&&|\|\||[-+*/%<>=!?;,(){}\[\]])"
)

_KEYWORDS = {"while", "if", "else", "skip", "return", "true", "false"}


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "id", or the symbol text itself
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        col = m.start() - line_start + 1
        if m.lastgroup == "num":
            tokens.append(_Token("num", m.group(), line, col))
        elif m.lastgroup == "id":
            t = m.group()
            tokens.append(_Token(t if t in _KEYWORDS else "id", t, line, col))
        elif m.lastgroup == "sym":
            tokens.append(_Token(m.group(), m.group(), line, col))
        else:
            line += m.group().count("\n")
            if "\n" in m.group():
                line_start = m.start() + m.group().rindex("\n") + 1
        pos = m.end()
    tokens.append(_Token("eof", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def next(self) -> _Token:
        t = self.tokens[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def expect(self, kind: str) -> _Token:
        t = self.peek()
        if t.kind != kind:
            self.fail(f"expected {kind!r}, found {t.text or 'end of input'!r}")
        return self.next()

    def fail(self, message: str):
        t = self.peek()
        raise ParseError(message, t.line, t.col)

    # program := [header] body 'return' id ';' ['}']
    def program(self) -> Program:
        name, inputs = "f", ()
        if self.peek().kind == "id" and self.peek(1).kind == "(":
            name = self.next().text
            self.next()
            params = []
            if self.peek().kind != ")":
                params.append(self.expect("id").text)
                while self.peek().kind == ",":
                    self.next()
                    params.append(self.expect("id").text)
            self.expect(")")
            self.expect("{")
            inputs = tuple(params)
            body, output = self.body_with_return()
            self.expect("}")
        else:
            body, output = self.body_with_return()
        self.expect("eof")
        return Program(inputs, body, output, name)

    def body_with_return(self) -> tuple[Command, str]:
        body = self.statements(stop={"return"})
        self.expect("return")
        output = self.expect("id").text
        self.expect(";")
        return body, output

    def statements(self, stop: set[str]) -> Command:
        stmts = []
        while True:
            k = self.peek().kind
            if k in stop or k in ("}", "eof"):
                break
            stmts.append(self.statement())
            while self.peek().kind == ";":
                self.next()
        if not stmts:
            return SKIP
        cmd = stmts[-1]
        for s in reversed(stmts[:-1]):
            cmd = Seq(s, cmd)
        return cmd

    def statement(self) -> Command:
        t = self.peek()
        if t.kind == "skip":
            self.next()
            return SKIP
        if t.kind == "?":
            self.next()
            return C_HOLE
        if t.kind == "while":
            self.next()
            self.expect("(")
            cond = self.bexp()
            self.expect(")")
            self.expect("{")
            body = self.statements(stop=set())
            self.expect("}")
            return While(cond, body)
        if t.kind == "if":
            self.next()
            self.expect("(")
            cond = self.bexp()
            self.expect(")")
            self.expect("{")
            then_body = self.statements(stop=set())
            self.expect("}")
            self.expect("else")
            self.expect("{")
            else_body = self.statements(stop=set())
            self.expect("}")
            return If(cond, then_body, else_body)
        if t.kind == "id":
            target = self.lvalue()
            self.expect(":=")
            return Assign(target, self.aexp())
        self.fail(f"expected a statement, found {t.text or 'end of input'!r}")

    def lvalue(self) -> LValue:
        name = self.expect("id").text
        if self.peek().kind == "[":
            self.next()
            index = self.expect("id").text
            self.expect("]")
            return ArrRef(name, index)
        return Var(name)

    def integer(self) -> int:
        neg = False
        if self.peek().kind == "-":
            self.next()
            neg = True
        n = int(self.expect("num").text)
        return -n if neg else n

    def aexp(self) -> AExp:
        t = self.peek()
        if t.kind == "?":
            self.next()
            return A_HOLE
        if t.kind in ("num", "-"):
            value = self.integer()
            if self.peek().kind in ("+", "-", "*", "/", "%"):
                self.fail("a literal cannot be the left operand of an operator")
            return Const(value)
        left = self.lvalue()
        if self.peek().kind in ("+", "-", "*", "/", "%"):
            op = BinOp(self.next().text)
            if self.peek().kind in ("num", "-"):
                result: AExp = BinLN(left, op, self.integer())
            else:
                result = BinLL(left, op, self.lvalue())
            if self.peek().kind in ("+", "-", "*", "/", "%"):
                self.fail("arithmetic does not nest; operands are l-values or literals")
            return result
        return Load(left)

    def bexp(self) -> BExp:
        b = self.band()
        while self.peek().kind == "||":
            self.next()
            b = Or(b, self.band())
        return b

    def band(self) -> BExp:
        b = self.bunary()
        while self.peek().kind == "&&":
            self.next()
            b = And(b, self.bunary())
        return b

    def bunary(self) -> BExp:
        if self.peek().kind == "!":
            self.next()
            return Not(self.bunary())
        return self.batom()

    def batom(self) -> BExp:
        t = self.peek()
        if t.kind == "true":
            self.next()
            return TRUE
        if t.kind == "false":
            self.next()
            return FALSE
        if t.kind == "?":
            self.next()
            return B_HOLE
        if t.kind == "(":
            self.next()
            b = self.bexp()
            self.expect(")")
            return b
        if t.kind == "id":
            left = self.lvalue()
            op_tok = self.peek()
            if op_tok.kind == "==" or op_tok.kind == "=":
                self.next()
                op = RelOp.EQ
            elif op_tok.kind == ">":
                self.next()
                op = RelOp.GT
            elif op_tok.kind == "<":
                self.next()
                op = RelOp.LT
            else:
                self.fail("expected a comparison operator")
            if self.peek().kind in ("num", "-"):
                return RelLN(left, op, self.integer())
            return RelLL(left, op, self.lvalue())
        self.fail(f"expected a condition, found {t.text or 'end of input'!r}")


def parse(text: str) -> Program:
    """Parse a full program; the final ``return y;`` names the output variable."""
    return _Parser(text).program()


def parse_command(text: str) -> Command:
    """Parse a statement sequence without a function header or return."""
    p = _Parser(text)
    cmd = p.statements(stop=set())
    p.expect("eof")
    return cmd


def parse_bexp(text: str) -> BExp:
    p = _Parser(text)
    b = p.bexp()
    p.expect("eof")
    return b


def parse_aexp(text: str) -> AExp:
    p = _Parser(text)
    a = p.aexp()
    p.expect("eof")
    return a
