"""Small expression language for amplitude and phase functions.

Recursive-descent parser over the grammar: decimal/scientific
literals, constants ``pi`` and ``i``, the variable ``x``, unary minus,
binary ``+ - * / ^`` (``^`` right-associative and binding tighter than
unary minus), the calls sin cos exp sqrt abs asin atan log, and
parentheses. Everything evaluates in complex arithmetic with principal
branches.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["AmplitudeExpr", "ParseError", "parse_amplitude"]

_FUNCTIONS = {
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
    "sqrt": np.sqrt,
    "abs": np.abs,
    "asin": np.arcsin,
    "atan": np.arctan,
    "log": np.log,
}

_CONSTANTS = {"pi": np.pi + 0j, "i": 1j}


class ParseError(ValueError):
    """Syntax error with the byte offset and the tokens expected there."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str):
        self.offset = offset
        self.expected = expected
        super().__init__(
            f"at offset {offset}: expected {' or '.join(expected)}, found {found}"
        )


@dataclass(frozen=True)
class Node:
    def evaluate(self, x):
        raise NotImplementedError

    def to_string(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Num(Node):
    value: float

    def evaluate(self, x):
        return np.full_like(np.asarray(x, dtype=complex), self.value)

    def to_string(self):
        return repr(self.value)


@dataclass(frozen=True)
class Const(Node):
    name: str

    def evaluate(self, x):
        return np.full_like(np.asarray(x, dtype=complex), _CONSTANTS[self.name])

    def to_string(self):
        return self.name


@dataclass(frozen=True)
class Var(Node):
    def evaluate(self, x):
        return np.asarray(x, dtype=complex)

    def to_string(self):
        return "x"


@dataclass(frozen=True)
class Neg(Node):
    operand: Node

    def evaluate(self, x):
        return -self.operand.evaluate(x)

    def to_string(self):
        return f"(-{self.operand.to_string()})"


@dataclass(frozen=True)
class Bin(Node):
    op: str
    left: Node
    right: Node

    def evaluate(self, x):
        a = self.left.evaluate(x)
        b = self.right.evaluate(x)
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        if self.op == "*":
            return a * b
        if self.op == "/":
            return a / b
        return a**b

    def to_string(self):
        return f"({self.left.to_string()}{self.op}{self.right.to_string()})"


@dataclass(frozen=True)
class Call(Node):
    name: str
    arg: Node

    def evaluate(self, x):
        return _FUNCTIONS[self.name](self.arg.evaluate(x))

    def to_string(self):
        return f"{self.name}({self.arg.to_string()})"


@dataclass(frozen=True)
class AmplitudeExpr:
    """Parsed expression; callable on real or complex numpy input."""

    root: Node
    source: str

    def __call__(self, x):
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.root.evaluate(x)

    def to_string(self) -> str:
        return self.root.to_string()


_TOKEN_CHARS = set("+-*/^()")


def _tokenize(src: str):
    tokens = []  # (kind, text, offset)
    pos = 0
    n = len(src)
    while pos < n:
        ch = src[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _TOKEN_CHARS:
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        if ch.isdigit() or (ch == "." and pos + 1 < n and src[pos + 1].isdigit()):
            start = pos
            while pos < n and (src[pos].isdigit() or src[pos] == "."):
                pos += 1
            if pos < n and src[pos] in "eE":
                mark = pos
                pos += 1
                if pos < n and src[pos] in "+-":
                    pos += 1
                if pos < n and src[pos].isdigit():
                    while pos < n and src[pos].isdigit():
                        pos += 1
                else:
                    pos = mark  # not an exponent; 'e' belongs to what follows
            text = src[start:pos]
            try:
                float(text)
            except ValueError:
                raise ParseError(start, ("number",), text) from None
            tokens.append(("num", text, start))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (src[pos].isalnum() or src[pos] == "_"):
                pos += 1
            tokens.append(("ident", src[start:pos], start))
            continue
        raise ParseError(pos, ("number", "identifier", "operator"), ch)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(tok[2], (kind,), tok[1] or "end of input")
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(tok[2], ("operator", "end of input"), tok[1])
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            node = Bin(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.advance()[0]
            node = Bin(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            # right-associative; exponent may itself be signed
            return Bin("^", base, self.unary())
        return base

    def atom(self) -> Node:
        kind, text, offset = self.peek()
        if kind == "num":
            self.advance()
            return Num(float(text))
        if kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "ident":
            self.advance()
            if text in _FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(text, arg)
            if text in _CONSTANTS:
                return Const(text)
            if text == "x":
                return Var()
            raise ParseError(
                offset,
                ("x", "pi", "i") + tuple(sorted(_FUNCTIONS)),
                text,
            )
        raise ParseError(offset, ("number", "identifier", "("), text or "end of input")


def parse_amplitude(src: str) -> AmplitudeExpr:
    """Parse an amplitude expression in the variable x."""
    return AmplitudeExpr(root=_Parser(src).parse(), source=src)
