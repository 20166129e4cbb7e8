"""A small parser for symmetric-function expressions.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := ('+' | '-') factor | power
    power   := primary ('^' ['-'] int)?
    primary := int | 'q' | 't' | atom | '(' expr ')'
    atom    := ('p' | 'h' | 'm' | 's') '[' int (',' int)* ']'

Scalars live in ℚ(q,t); atoms are converted to the p-basis.  Division is
only allowed by scalars.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .partitions import InvalidPartition, Partition
from .qscalar import RationalFunction2, as_rf2
from .symfunc import SymFunc, h_to_p, lift, m_to_p, s_to_p


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# -- AST


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Atom:
    basis: str
    partition: Partition


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


Node = Union[Num, Var, Atom, Neg, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|([pqhmst])|(.))", re.DOTALL)


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()[],":
                raise ExprSyntaxError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, strict: bool):
        self.tokens = _tokenize(text)
        self.i = 0
        self.strict = strict

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, value) -> bool:
        kind, v, _ = self.peek()
        if kind == "op" and v == value:
            self.i += 1
            return True
        return False

    def expect(self, value):
        if not self.accept(value):
            _, v, pos = self.peek()
            found = "end of input" if v is None else repr(v)
            raise ExprSyntaxError(f"expected {value!r}, found {found}", pos)

    def parse(self) -> Node:
        node = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {v!r}", pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            if self.accept("+"):
                node = BinOp("+", node, self.term())
            elif self.accept("-"):
                node = BinOp("-", node, self.term())
            else:
                return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            if self.accept("*"):
                node = BinOp("*", node, self.factor())
            elif self.accept("/"):
                node = BinOp("/", node, self.factor())
            else:
                return node

    def factor(self) -> Node:
        if self.accept("-"):
            return Neg(self.factor())
        if self.accept("+"):
            return self.factor()
        return self.power()

    def power(self) -> Node:
        base = self.primary()
        if self.accept("^"):
            sign = -1 if self.accept("-") else 1
            kind, v, pos = self.next()
            if kind != "int":
                raise ExprSyntaxError("expected an integer exponent", pos)
            return Pow(base, sign * v)
        return base

    def primary(self) -> Node:
        kind, v, pos = self.next()
        if kind == "int":
            return Num(v)
        if kind == "name":
            if v in ("q", "t"):
                return Var(v)
            return self.atom(v, pos)
        if kind == "op" and v == "(":
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if v is None else repr(v)
        raise ExprSyntaxError(f"expected a number, q, t, an atom or '(', found {found}", pos)

    def atom(self, basis: str, pos: int) -> Atom:
        self.expect("[")
        parts = []
        while True:
            kind, v, p = self.next()
            if kind != "int":
                raise ExprSyntaxError("expected a partition part", p)
            parts.append(v)
            if self.accept("]"):
                break
            if not self.accept(","):
                _, v, p = self.peek()
                found = "end of input" if v is None else repr(v)
                raise ExprSyntaxError(f"expected ',' or ']', found {found}", p)
        try:
            lam = Partition(parts, sort=not self.strict)
        except InvalidPartition as exc:
            raise InvalidPartition(f"{exc} at position {pos}") from None
        return Atom(basis, lam)


def parse_expr(text: str, strict: bool = False) -> Node:
    """Parse text into an AST; strict rejects partitions that are not sorted."""
    return _Parser(text, strict).parse()


# -- evaluation

_ATOMS = {"p": SymFunc.p, "h": h_to_p, "m": m_to_p, "s": s_to_p}


def _is_scalar(x) -> bool:
    return not isinstance(x, SymFunc)


def _evaluate(node: Node):
    if isinstance(node, Num):
        return as_rf2(node.value)
    if isinstance(node, Var):
        return RationalFunction2.q() if node.name == "q" else RationalFunction2.t()
    if isinstance(node, Atom):
        return lift(_ATOMS[node.basis](node.partition), "qt")
    if isinstance(node, Neg):
        return -_evaluate(node.arg)
    if isinstance(node, Pow):
        base = _evaluate(node.base)
        if _is_scalar(base):
            return base ** node.exponent
        if node.exponent < 0:
            raise ValueError("negative power of a symmetric function")
        return lift(base, "qt") ** node.exponent if node.exponent else lift(SymFunc.constant(1), "qt")
    left, right = _evaluate(node.left), _evaluate(node.right)
    if node.op == "+":
        return _coerce(left) + _coerce(right) if not (_is_scalar(left) and _is_scalar(right)) else left + right
    if node.op == "-":
        return _coerce(left) - _coerce(right) if not (_is_scalar(left) and _is_scalar(right)) else left - right
    if node.op == "*":
        if _is_scalar(left) and not _is_scalar(right):
            return right.scale(left)
        return left * right
    if not _is_scalar(right):
        raise ValueError("division by a symmetric function")
    if not right:
        raise ZeroDivisionError("division by zero")
    return left / right


def _coerce(x) -> SymFunc:
    return x if isinstance(x, SymFunc) else SymFunc.constant(x)


def evaluate(node: Node) -> SymFunc:
    """Lower the AST to a SymFunc over ℚ(q,t)."""
    return _coerce(_evaluate(node))


def parse_symfunc(text: str, strict: bool = False) -> SymFunc:
    return evaluate(parse_expr(text, strict))
