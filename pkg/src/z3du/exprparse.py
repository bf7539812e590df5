"""Recursive-descent parser for the expression input language.

Grammar (whitespace-insensitive):

    expr     := ['-'] term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := atom ('^' ['-'] digits)?
    atom     := rational | ident | '[' expr ',' expr ']' | '(' expr ')'
    rational := digits ('/' digits)?
    ident    := [A-Za-z_][A-Za-z0-9_]*

Division is only defined by coefficient (generator-free) expressions.

Identifiers resolve first against generators, then parameters.  Parameter
powers may be negative; generator powers may not.  Brackets lower to
commutators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .coeff import CoeffError, ParamSet, RatFunc
from .freealg import EMPTY, GenAlphabet, NcPoly


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class ExprAst:
    """Expression tree node.

    kind is one of: num, ident, add, sub, neg, mul, pow, bracket, paren.
    """

    kind: str
    value: object = None
    children: tuple = ()


_SYMBOLS = set("+-*^()[],/")


def tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind: Optional[str] = None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse_expr(self) -> ExprAst:
        if self.peek()[0] == "-":
            self.take()
            node = ExprAst("neg", children=(self.parse_term(),))
        else:
            node = self.parse_term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.parse_term()
            node = ExprAst("add" if op == "+" else "sub", children=(node, rhs))
        return node

    def parse_term(self) -> ExprAst:
        node = self.parse_factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            rhs = self.parse_factor()
            node = ExprAst("mul" if op == "*" else "div", children=(node, rhs))
        return node

    def parse_factor(self) -> ExprAst:
        node = self.parse_atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.take("num")
            node = ExprAst("pow", value=sign * int(tok[1]), children=(node,))
        return node

    def parse_atom(self) -> ExprAst:
        kind, text, pos = self.peek()
        if kind == "num":
            self.take()
            # "p/q" with integer q is a rational literal; otherwise leave the
            # '/' for the term level (general coefficient division)
            if self.peek()[0] == "/" and self.tokens[self.pos + 1][0] == "num":
                self.take()
                den = self.take("num")
                if int(den[1]) == 0:
                    raise ParseError("rational literal with zero denominator", den[2])
                return ExprAst("num", value=Fraction(int(text), int(den[1])))
            return ExprAst("num", value=Fraction(int(text)))
        if kind == "ident":
            self.take()
            return ExprAst("ident", value=text)
        if kind == "[":
            self.take()
            left = self.parse_expr()
            self.take(",")
            right = self.parse_expr()
            self.take("]")
            return ExprAst("bracket", children=(left, right))
        if kind == "(":
            self.take()
            inner = self.parse_expr()
            self.take(")")
            return ExprAst("paren", children=(inner,))
        raise ParseError(f"unexpected token {text!r}", pos)


def parse_ast(text: str) -> ExprAst:
    p = _Parser(text)
    node = p.parse_expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return node


def _is_coeff(p: NcPoly) -> bool:
    return all(w == EMPTY for w in p.terms)


def lower(node: ExprAst, alphabet: GenAlphabet, params: ParamSet) -> NcPoly:
    """Lower an AST into an NcPoly, expanding brackets and powers."""
    if node.kind == "num":
        return NcPoly.const(alphabet, params, node.value)
    if node.kind == "ident":
        name = node.value
        if name in alphabet.names:
            return NcPoly.gen(alphabet, params, name)
        if name in params:
            return NcPoly.const(alphabet, params, RatFunc.param(params, name))
        raise ParseError(f"unknown identifier {name!r}", 0)
    if node.kind in ("add", "sub"):
        a = lower(node.children[0], alphabet, params)
        b = lower(node.children[1], alphabet, params)
        return a + b if node.kind == "add" else a - b
    if node.kind == "neg":
        return -lower(node.children[0], alphabet, params)
    if node.kind == "mul":
        a = lower(node.children[0], alphabet, params)
        b = lower(node.children[1], alphabet, params)
        return a * b
    if node.kind == "div":
        a = lower(node.children[0], alphabet, params)
        b = lower(node.children[1], alphabet, params)
        if not _is_coeff(b):
            raise ParseError("division by a generator expression", 0)
        c = b.terms.get(EMPTY)
        if c is None:
            raise CoeffError("division by zero")
        return a * c.inv()
    if node.kind == "paren":
        return lower(node.children[0], alphabet, params)
    if node.kind == "bracket":
        a = lower(node.children[0], alphabet, params)
        b = lower(node.children[1], alphabet, params)
        return a * b - b * a
    if node.kind == "pow":
        base = lower(node.children[0], alphabet, params)
        n = node.value
        if n >= 0:
            return base ** n
        if not _is_coeff(base):
            raise ParseError("negative generator power (declare an inverse generator)", 0)
        c = base.terms.get(EMPTY)
        if c is None:
            raise CoeffError("inversion of zero")
        return NcPoly.const(alphabet, params, c ** n)
    raise ParseError(f"unknown node kind {node.kind!r}", 0)


def parse_expr(text: str, alphabet: GenAlphabet, params: ParamSet) -> NcPoly:
    """Parse and lower in one step (the usual entry point)."""
    return lower(parse_ast(text), alphabet, params)


_NO_GENS = GenAlphabet(())


def parse_coeff(text: str, params: ParamSet) -> RatFunc:
    """Parse a generator-free expression into a RatFunc."""
    p = lower(parse_ast(text), _NO_GENS, params)
    return p.terms.get(EMPTY, RatFunc.const(params, 0))


def collect_identifiers(text: str):
    """Identifier names in order of first appearance (for binding scans)."""
    seen = []
    for kind, value, _ in tokenize(text):
        if kind == "ident" and value not in seen:
            seen.append(value)
    return seen
