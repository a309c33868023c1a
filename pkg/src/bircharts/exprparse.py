"""Expression front-end for rational functions.

Grammar (standard precedence, ^ binds tightest, then unary minus, then
* /, then + -; binary - and / associate left):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' integer] | '-' factor
    atom   := integer | var | '(' expr ')'
    var    := name ['(' indices ')']

Indexed variables like u(1,2) map onto canonical universe names ("u12");
a bare name is accepted when it is itself a universe variable, so printed
canonical forms parse back to themselves.
"""

from __future__ import annotations

from typing import Sequence

from .exact_arith import RatFunc


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_SYMBOLS = "+-*/^(),"


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _SYMBOLS:
            tokens.append((c, c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, universe: Sequence[str]):
        self.text = text
        self.universe = tuple(universe)
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    # grammar ----------------------------------------------------------

    def parse(self) -> RatFunc:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.advance()[0]
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self) -> RatFunc:
        if self.peek()[0] == "-":
            self.advance()
            return -self.factor()
        value = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            sign = 1
            if self.peek()[0] == "-":
                self.advance()
                sign = -1
            tok = self.expect("int")
            value = value ** (sign * int(tok[1]))
        return value

    def atom(self) -> RatFunc:
        tok = self.advance()
        if tok[0] == "int":
            return RatFunc.const(self.universe, int(tok[1]))
        if tok[0] == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok[0] == "name":
            return self.variable(tok)
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2])

    def variable(self, tok) -> RatFunc:
        name, pos = tok[1], tok[2]
        if self.peek()[0] == "(":
            self.advance()
            indices = [int(self.expect("int")[1])]
            while self.peek()[0] == ",":
                self.advance()
                indices.append(int(self.expect("int")[1]))
            self.expect(")")
            if all(k < 10 for k in indices):
                canonical = name + "".join(str(k) for k in indices)
            else:
                canonical = name + "_".join(str(k) for k in indices)
        else:
            canonical = name
        if canonical in self.universe:
            return RatFunc.var(self.universe, canonical)
        if any(v.rstrip("0123456789_") == name for v in self.universe):
            raise ParseError(f"index out of bounds for {name!r}", pos)
        raise ParseError(f"unknown variable {canonical!r}", pos)


def parse_expression(text: str, universe: Sequence[str]) -> RatFunc:
    """Parse text into a canonical rational function over the universe."""
    return _Parser(text, universe).parse()
