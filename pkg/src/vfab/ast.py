"""AST node types for the supported Verilog subset, plus the flat Program form.

Expression nodes evaluate to masked ints; every node has a derivable width
(self-determined sizing, see infer_width).  Statements follow the subset:
blocking/non-blocking assigns, if/case, begin/fork, system tasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field


# --- expressions -----------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    width: int | None = None    # None for bare (context defaults to 32)


@dataclass(frozen=True)
class Str:
    value: str                  # only legal as a system-call argument


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class Unary:
    op: str                     # ~ ! -
    a: object


@dataclass(frozen=True)
class Binary:
    op: str                     # + - & | ^ == != < <= >> <<
    a: object
    b: object


@dataclass(frozen=True)
class Concat:
    parts: tuple


@dataclass(frozen=True)
class Index:
    name: str                   # memory element or bit select
    idx: object


@dataclass(frozen=True)
class Slice:
    name: str                   # constant part select
    hi: int
    lo: int


@dataclass(frozen=True)
class SysCall:
    """Value-returning system call in expression position ($fopen, $feof).

    Desugared into a SystemTask with a destination before state-machine
    lowering; the reference interpreter evaluates it inline.
    """
    kind: str
    args: tuple


# --- statements ------------------------------------------------------------

@dataclass
class BlockingAssign:
    lhs: object                 # Ident | Index | Slice
    rhs: object


@dataclass
class NonBlockingAssign:
    lhs: object
    rhs: object


@dataclass
class If:
    cond: object
    then: object | None
    orelse: object | None = None


@dataclass
class Case:
    subject: object
    items: list                 # [(labels: [expr], stmt)]
    default: object | None = None


@dataclass
class Begin:
    stmts: list


@dataclass
class Fork:
    stmts: list


@dataclass
class SystemTask:
    """Statement-position system task.

    dest holds the lvalue receiving a result for fopen/feof/fread32;
    it is None for display/finish/save/restart/yield.
    """
    kind: str
    args: list
    dest: object | None = None


VALUE_TASKS = {"fopen": 32, "feof": 1}          # kinds usable in expressions -> result width
STMT_TASKS = {"display", "fread32", "finish", "save", "restart", "yield", "fopen", "feof"}


# --- declarations / modules ------------------------------------------------

@dataclass
class Decl:
    name: str
    kind: str                   # "reg" | "wire"
    width: int
    depth: int | None = None    # memories: reg [W-1:0] name [0:D-1]
    initial: int = 0
    annotations: set = field(default_factory=set)


@dataclass
class Port:
    name: str
    direction: str              # "input" | "output"
    width: int


@dataclass
class Instance:
    module: str
    name: str
    # named connections port -> expr; positional lists resolved at parse time
    conns: list                 # [(port_name | None, expr)]


@dataclass
class ModuleDecl:
    name: str
    ports: list
    decls: list
    assigns: list               # [(lvalue_name, expr)] continuous assigns
    blocks: list                # [(guards: [(kind, var)], stmt)]
    instances: list
    line: int = 0


@dataclass
class SourceUnit:
    modules: list

    def module(self, name: str) -> ModuleDecl:
        for m in self.modules:
            if m.name == name:
                return m
        raise KeyError(name)


@dataclass
class Program:
    """Elaborated, flat program with hierarchical dot names."""
    top: str
    declarations: dict          # name -> Decl (insertion ordered)
    continuous_assigns: list    # [(lvalue_name, expr)]
    procedural_blocks: list     # [(guards: [(kind, var)], stmt)]
    top_inputs: list            # [(name, width)]
    top_outputs: list           # [(name, width)]

    def decl(self, name: str) -> Decl:
        return self.declarations[name]


# --- width inference --------------------------------------------------------

def infer_width(expr, decls) -> int:
    """Self-determined width of an expression (bare literals count as 32)."""
    if isinstance(expr, Num):
        return expr.width if expr.width is not None else 32
    if isinstance(expr, Ident):
        d = decls[expr.name]
        return d.width
    if isinstance(expr, Unary):
        if expr.op == "!":
            return 1
        return infer_width(expr.a, decls)
    if isinstance(expr, Binary):
        if expr.op in ("==", "!=", "<", "<="):
            return 1
        if expr.op in (">>", "<<"):
            return infer_width(expr.a, decls)
        return max(infer_width(expr.a, decls), infer_width(expr.b, decls))
    if isinstance(expr, Concat):
        return sum(infer_width(p, decls) for p in expr.parts)
    if isinstance(expr, Index):
        d = decls[expr.name]
        return d.width if d.depth is not None else 1
    if isinstance(expr, Slice):
        return expr.hi - expr.lo + 1
    if isinstance(expr, SysCall):
        return VALUE_TASKS[expr.kind]
    raise TypeError(f"not an expression: {expr!r}")


def expr_vars(expr, out=None) -> set:
    """Names read by an expression (including index expressions)."""
    if out is None:
        out = set()
    if isinstance(expr, Ident):
        out.add(expr.name)
    elif isinstance(expr, Unary):
        expr_vars(expr.a, out)
    elif isinstance(expr, Binary):
        expr_vars(expr.a, out)
        expr_vars(expr.b, out)
    elif isinstance(expr, Concat):
        for p in expr.parts:
            expr_vars(p, out)
    elif isinstance(expr, Index):
        out.add(expr.name)
        expr_vars(expr.idx, out)
    elif isinstance(expr, Slice):
        out.add(expr.name)
    elif isinstance(expr, SysCall):
        for a in expr.args:
            expr_vars(a, out)
    return out
