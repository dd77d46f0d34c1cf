"""Textual graph specifications.

Grammar (whitespace insensitive, vertex indices 1-based)::

    expr  := prim | wedge
    prim  := ("P" | "C") "(" int ")"
    wedge := "wedge(" expr "@" int ("," expr "@" int)+ ")"
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError
from .graph import Graph, cycle, path, wedge


class SpecSyntaxError(InvalidParameterError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Prim:
    kind: str  # "P" or "C"
    size: int

    @property
    def vertex_count(self) -> int:
        return self.size


@dataclass(frozen=True)
class Wedge:
    operands: tuple  # of (expr, 1-based index)

    @property
    def vertex_count(self) -> int:
        return sum(e.vertex_count for e, _ in self.operands) - (len(self.operands) - 1)


Expr = Prim | Wedge


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos : self.pos + 1]

    def expect(self, token: str) -> None:
        self.skip()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos : self.pos + 1] or "end of input"
            raise SpecSyntaxError(f"expected {token!r}, found {found!r}", self.pos)
        self.pos += len(token)

    def integer(self) -> tuple[int, int]:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise SpecSyntaxError("expected an integer", start)
        return int(self.text[start : self.pos]), start

    def expr(self) -> Expr:
        self.skip()
        start = self.pos
        if self.text.startswith("wedge", self.pos):
            return self.wedge()
        kind = self.peek()
        if kind not in ("P", "C"):
            raise SpecSyntaxError("expected 'P', 'C' or 'wedge'", start)
        self.pos += 1
        self.expect("(")
        size, at = self.integer()
        self.expect(")")
        if kind == "P" and size < 1:
            raise SpecSyntaxError("a path needs at least one vertex", at)
        if kind == "C" and size < 3:
            raise SpecSyntaxError(f"cycle needs at least 3 vertices, got {size}", at)
        return Prim(kind, size)

    def wedge(self) -> Wedge:
        self.expect("wedge")
        self.expect("(")
        operands = [self.operand()]
        while self.peek() == ",":
            self.pos += 1
            operands.append(self.operand())
        self.expect(")")
        if len(operands) < 2:
            raise SpecSyntaxError("a wedge needs at least two operands", self.pos)
        return Wedge(tuple(operands))

    def operand(self) -> tuple[Expr, int]:
        e = self.expr()
        self.expect("@")
        index, at = self.integer()
        if not 1 <= index <= e.vertex_count:
            raise SpecSyntaxError(
                f"index {index} outside 1..{e.vertex_count} of {serialize(e)}", at
            )
        return e, index


def parse_spec(text: str) -> Expr:
    parser = _Parser(text)
    e = parser.expr()
    parser.skip()
    if parser.pos != len(text):
        raise SpecSyntaxError("unexpected trailing input", parser.pos)
    return e


def serialize(e: Expr) -> str:
    if isinstance(e, Prim):
        return f"{e.kind}({e.size})"
    inner = ", ".join(f"{serialize(x)}@{i}" for x, i in e.operands)
    return f"wedge({inner})"


def build_graph(e: Expr) -> Graph:
    if isinstance(e, Prim):
        return path(e.size) if e.kind == "P" else cycle(e.size)
    return wedge([(build_graph(x), i - 1) for x, i in e.operands])


def canonicalize(e: Expr) -> Expr:
    """Rewrite cycle base points to 1; cycles are vertex-transitive."""
    if isinstance(e, Prim):
        return e
    ops = []
    for x, i in e.operands:
        x = canonicalize(x)
        if isinstance(x, Prim) and x.kind == "C":
            i = 1
        ops.append((x, i))
    return Wedge(tuple(ops))
