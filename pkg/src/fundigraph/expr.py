"""Expressions over functional digraphs.

Grammar (``*`` binds tighter than ``+``; juxtaposition is a product)::

    expr   := term ('+' term)*
    term   := factor ('*'? factor)*
    factor := INT | 'C' INT | '[' ints ']' | '(' expr ')'

An integer ``k`` stands for ``k C1``, so ``2C3`` is ``2 * C3``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple, Union

from .algebra import add, cycle, product, scalar
from .core import FunctionalDigraph
from .errors import ParseError


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Cycle:
    length: int


@dataclass(frozen=True)
class Literal:
    succ: Tuple[int, ...]


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Cycle, Literal, Add, Mul]

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            toks.append(("INT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            ch = m.group(2)
            if ch not in "C[],()+*":
                raise ParseError(f"unexpected character {ch!r}", m.start(2))
            toks.append((ch, ch, m.start(2)))
        pos = m.end()
    toks.append(("EOF", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self, kind: str) -> str:
        k, val, pos = self.toks[self.i]
        if k != kind:
            want = "integer" if kind == "INT" else repr(kind)
            got = "end of input" if k == "EOF" else repr(val)
            raise ParseError(f"expected {want}, got {got}", pos)
        self.i += 1
        return val

    def expr(self) -> Expr:
        node = self.term()
        while self.peek() == "+":
            self.take("+")
            node = Add(node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek() in ("*", "INT", "C", "[", "("):
            if self.peek() == "*":
                self.take("*")
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Expr:
        k, val, pos = self.toks[self.i]
        if k == "INT":
            self.i += 1
            return Num(int(val))
        if k == "C":
            self.i += 1
            n = int(self.take("INT"))
            if n < 1:
                raise ParseError("cycle length must be at least 1", pos)
            return Cycle(n)
        if k == "[":
            self.i += 1
            vals: List[int] = []
            if self.peek() != "]":
                vals.append(int(self.take("INT")))
                while self.peek() == ",":
                    self.take(",")
                    vals.append(int(self.take("INT")))
            self.take("]")
            if any(v >= len(vals) for v in vals):
                raise ParseError("successor out of range in literal", pos)
            return Literal(tuple(vals))
        if k == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        got = "end of input" if k == "EOF" else repr(val)
        raise ParseError(f"expected a factor, got {got}", pos)


def parse(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    if p.peek() != "EOF":
        _, val, pos = p.toks[p.i]
        raise ParseError(f"unexpected {val!r}", pos)
    return node


def evaluate(e: Expr) -> FunctionalDigraph:
    if isinstance(e, Num):
        return scalar(e.value, cycle(1))
    if isinstance(e, Cycle):
        return cycle(e.length)
    if isinstance(e, Literal):
        return FunctionalDigraph(e.succ)
    if isinstance(e, Add):
        return add(evaluate(e.left), evaluate(e.right))
    if isinstance(e, Mul):
        return product(evaluate(e.left), evaluate(e.right))
    raise TypeError(f"not an expression: {e!r}")


def to_text(e: Expr) -> str:
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Cycle):
        return f"C{e.length}"
    if isinstance(e, Literal):
        return "[" + ",".join(map(str, e.succ)) + "]"
    if isinstance(e, Add):
        return f"{to_text(e.left)}+{to_text(e.right)}"
    if isinstance(e, Mul):
        left = to_text(e.left)
        right = to_text(e.right)
        if isinstance(e.left, Add):
            left = f"({left})"
        if isinstance(e.right, (Add, Mul)):
            right = f"({right})"
        return f"{left}*{right}"
    raise TypeError(f"not an expression: {e!r}")


def eval_text(text: str) -> FunctionalDigraph:
    return evaluate(parse(text))
