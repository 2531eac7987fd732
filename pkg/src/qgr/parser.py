"""Recursive-descent parser for algebra expressions.

Grammar (whitespace-insensitive)::

    expr      := ['+'|'-'] term (('+'|'-') term)*
    term      := factor (('*'|'/') factor | factor)*     juxtaposition multiplies
    factor    := atom ('^' ['-'] int)?
    atom      := int | 'q' | generator | minor | brace | '(' expr ')'
    generator := 'X[' int ',' int ']'
    minor     := '[' ints ('|' ints)? ']'
    brace     := '{' ints '}'
    ints      := int ((','|' ') int)*

When n < 10 a single multi-digit token inside a minor or brace is read digit
by digit, so ``[13]`` means ``[1 3]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import Q, Scalar, as_scalar
from .qmatrix import Ambient, IndexRangeError, MatAlgElem, generator, quantum_minor

__all__ = ["ParseError", "parse_expr", "evaluate", "parse_and_eval", "Node"]


class ParseError(ValueError):
    def __init__(self, msg, text, offset):
        line = text.count("\n", 0, offset) + 1
        col = offset - (text.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"syntax error at offset {offset} (line {line}, column {col}): {msg}")
        self.offset = offset
        self.line = line
        self.column = col


@dataclass(frozen=True)
class Node:
    kind: str  # num q gen minor brace add sub neg mul div pow
    args: tuple
    pos: int = 0


class _Parser:
    def __init__(self, text):
        self.text = text
        self.i = 0

    def error(self, msg, at=None):
        raise ParseError(msg, self.text, self.i if at is None else at)

    def skip(self):
        t = self.text
        while self.i < len(t) and t[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, got {got}")
        self.i += 1

    def integer(self):
        self.skip()
        start = self.i
        t = self.text
        while self.i < len(t) and t[self.i].isdigit():
            self.i += 1
        if start == self.i:
            got = repr(t[self.i]) if self.i < len(t) else "end of input"
            self.error(f"expected integer, got {got}")
        return self.text[start:self.i], start

    def parse(self):
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self):
        pos = (self.skip(), self.i)[1]
        sign = None
        if self.peek() in "+-":
            sign = self.peek()
            self.i += 1
        node = self.term()
        if sign == "-":
            node = Node("neg", (node,), pos)
        while self.peek() in ("+", "-") and self.peek():
            op = self.peek()
            at = self.i
            self.i += 1
            rhs = self.term()
            node = Node("add" if op == "+" else "sub", (node, rhs), at)
        return node

    def term(self):
        node = self.factor()
        while True:
            c = self.peek()
            if c in ("*", "/") and c:
                at = self.i
                self.i += 1
                rhs = self.factor()
                node = Node("mul" if c == "*" else "div", (node, rhs), at)
            elif c and c in "[{(Xq":
                at = self.i
                rhs = self.factor()
                node = Node("mul", (node, rhs), at)
            else:
                return node

    def factor(self):
        node = self.atom()
        if self.peek() == "^":
            at = self.i
            self.i += 1
            neg = False
            if self.peek() == "-":
                neg = True
                self.i += 1
            digits, _ = self.integer()
            k = -int(digits) if neg else int(digits)
            node = Node("pow", (node, k), at)
        return node

    def ints(self, closer):
        tokens = []
        while True:
            digits, at = self.integer()
            tokens.append((digits, at))
            c = self.peek()
            if c == ",":
                self.i += 1
                continue
            if c.isdigit():
                continue
            if c in closer and c:
                break
            self.error(f"expected {' or '.join(repr(x) for x in closer)}")
        return tokens

    def atom(self):
        c = self.peek()
        pos = self.i
        if not c:
            self.error("unexpected end of input")
        if c.isdigit():
            digits, _ = self.integer()
            return Node("num", (int(digits),), pos)
        if c == "q":
            self.i += 1
            return Node("q", (), pos)
        if c == "X":
            self.i += 1
            self.expect("[")
            i, _ = self.integer()
            self.expect(",")
            j, _ = self.integer()
            self.expect("]")
            return Node("gen", (int(i), int(j)), pos)
        if c == "[":
            self.i += 1
            first = self.ints("|]")
            second = None
            if self.peek() == "|":
                self.i += 1
                second = self.ints("]")
            self.expect("]")
            if second is None:
                return Node("minor", (None, tuple(first)), pos)
            return Node("minor", (tuple(first), tuple(second)), pos)
        if c == "{":
            self.i += 1
            cols = self.ints("}")
            self.expect("}")
            return Node("brace", (tuple(cols),), pos)
        if c == "(":
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        self.error(f"unexpected {c!r}")


def parse_expr(text: str) -> Node:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# evaluation


def _index_set(tokens, bound, text, pos):
    if len(tokens) == 1 and len(tokens[0][0]) > 1 and bound < 10:
        out = [int(ch) for ch in tokens[0][0]]
    else:
        out = [int(d) for d, _ in tokens]
    if any(b <= a for a, b in zip(out, out[1:])):
        raise ParseError(f"index set {out} must be strictly increasing", text, pos)
    if out and (out[0] < 1 or out[-1] > bound):
        raise ParseError(f"index set {out} outside 1..{bound}", text, pos)
    return tuple(out)


def _is_scalar(v):
    return isinstance(v, Scalar)


def evaluate(node: Node, ambient, context="grass", text=""):
    """Evaluate an AST; ``context`` is 'scalar', 'matalg', 'grass' or 'dhom'."""
    from .dehom import DhomElem
    from .grassmann import GrassElem

    amb = ambient if isinstance(ambient, Ambient) else Ambient(*ambient)

    def lift(v):
        if _is_scalar(v):
            if context == "matalg":
                return MatAlgElem.scalar(amb, v)
            if context == "grass":
                return GrassElem.scalar(amb, v)
            if context == "dhom":
                return DhomElem.scalar(amb, v)
        return v

    def ev(nd):
        k = nd.kind
        if k == "num":
            return as_scalar(nd.args[0])
        if k == "q":
            return Q
        if k == "gen":
            if context != "matalg":
                raise ParseError("generators X[i,j] are only allowed in matrix expressions", text, nd.pos)
            i, j = nd.args
            try:
                return generator(amb, i, j)
            except IndexRangeError as exc:
                raise ParseError(str(exc), text, nd.pos) from None
        if k == "minor":
            rows_t, cols_t = nd.args
            cols = _index_set(cols_t, amb.n, text, nd.pos)
            if rows_t is not None:
                rows = _index_set(rows_t, amb.m, text, nd.pos)
            else:
                rows = tuple(range(1, len(cols) + 1))
            if len(rows) != len(cols):
                raise ParseError("row and column sets differ in size", text, nd.pos)
            if context == "matalg":
                if len(cols) > amb.m:
                    raise ParseError(f"minor larger than {amb.m} rows", text, nd.pos)
                return quantum_minor(rows, cols, amb)
            if context in ("grass", "dhom"):
                if len(cols) != amb.m or rows != tuple(range(1, amb.m + 1)):
                    raise ParseError(f"Grassmannian minors need {amb.m} columns and rows 1..{amb.m}", text, nd.pos)
                g = GrassElem.minor(amb, cols)
                return DhomElem.from_grass(g) if context == "dhom" else g
            raise ParseError("minors are not allowed in scalar expressions", text, nd.pos)
        if k == "brace":
            if context != "dhom":
                raise ParseError("braces {..} are only allowed in dehomogenised expressions", text, nd.pos)
            cols = _index_set(nd.args[0], amb.n, text, nd.pos)
            if len(cols) != amb.m:
                raise ParseError(f"brace needs {amb.m} columns", text, nd.pos)
            return DhomElem.brace(amb, cols)
        if k == "neg":
            return -ev(nd.args[0])
        if k in ("add", "sub"):
            a, b = ev(nd.args[0]), ev(nd.args[1])
            if not (_is_scalar(a) and _is_scalar(b)):
                a, b = lift(a), lift(b)
            return a + b if k == "add" else a - b
        if k == "mul":
            a, b = ev(nd.args[0]), ev(nd.args[1])
            if _is_scalar(a) and not _is_scalar(b):
                return b.scale(a) if hasattr(b, "scale") else a * b
            if _is_scalar(b) and not _is_scalar(a):
                return a.scale(b)
            return a * b
        if k == "div":
            a, b = ev(nd.args[0]), ev(nd.args[1])
            if not _is_scalar(b):
                raise ParseError("can only divide by scalars", text, nd.pos)
            if not b:
                raise ParseError("division by zero", text, nd.pos)
            return a / b
        if k == "pow":
            base, e = nd.args
            v = ev(base)
            if e < 0 and context == "dhom" and v == DhomElem.top_power(amb, 1):
                return DhomElem.top_power(amb, e)
            if e < 0 and not _is_scalar(v):
                raise ParseError("negative powers are only allowed on q, scalars and the top minor", text, nd.pos)
            if _is_scalar(v) and e < 0 and not v:
                raise ParseError("zero to a negative power", text, nd.pos)
            return v ** e
        raise AssertionError(k)

    return lift(ev(node))


def parse_and_eval(text, ambient, context="grass"):
    return evaluate(parse_expr(text), ambient, context, text)
