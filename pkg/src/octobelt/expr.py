"""Octonion expressions where the grouping of products is significant.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := rational | basis | '-' factor | 'conj' '(' expr ')' | '(' expr ')'
    rational := integer ('/' positive-integer)?

Basis names are ``1 i j k L Li Lj Lk``. A bare ``1`` is the basis element; any
other integer (or ``p/q``) is a rational literal. Chained products group to
the left unless ``strict_parens`` is set, in which case they are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Union

from .algebra import BASIS_NAMES, Octonion, oct_conj, oct_mul


class ExprError(ValueError):
    """Base for all parse errors; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class LexError(ExprError):
    pass


class ParseError(ExprError):
    pass


class StrictParensError(ParseError):
    pass


class ZeroDenominatorError(ExprError):
    pass


@dataclass(frozen=True)
class RationalLiteral:
    value: Fraction

    def __post_init__(self):
        value = Fraction(self.value)
        if value < 0:
            raise ValueError("rational literals are non-negative; wrap in Negate")
        object.__setattr__(self, "value", value)


@dataclass(frozen=True)
class BasisLiteral:
    name: str

    def __post_init__(self):
        if self.name not in BASIS_NAMES:
            raise ValueError(f"unknown basis name {self.name!r}")


@dataclass(frozen=True)
class Negate:
    child: "Node"


@dataclass(frozen=True)
class Conj:
    child: "Node"


@dataclass(frozen=True)
class Sum:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Difference:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Product:
    left: "Node"
    right: "Node"


Node = Union[RationalLiteral, BasisLiteral, Negate, Conj, Sum, Difference, Product]


class Token(NamedTuple):
    kind: str  # INT, NAME, CONJ, OP, END
    text: str
    pos: int


_NAMES = set(BASIS_NAMES) - {"1"}


def tokenize(src: str) -> List[Token]:
    tokens = []
    n = len(src)
    pos = 0
    while pos < n:
        ch = src[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            start = pos
            while pos < n and src[pos].isdigit():
                pos += 1
            if pos < n and (src[pos].isalpha() or src[pos] == "_"):
                raise LexError(f"unexpected {src[pos]!r} after number (use '*')", pos)
            tokens.append(Token("INT", src[start:pos], start))
        elif ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (src[pos].isalnum() or src[pos] == "_"):
                pos += 1
            word = src[start:pos]
            if word == "conj":
                tokens.append(Token("CONJ", word, start))
            elif word in _NAMES:
                tokens.append(Token("NAME", word, start))
            else:
                raise LexError(f"unknown token {word!r}", start)
        elif ch in "+-*/()":
            tokens.append(Token("OP", ch, pos))
            pos += 1
        else:
            raise LexError(f"unexpected character {ch!r}", pos)
    tokens.append(Token("END", "", n))
    return tokens


class _Parser:
    def __init__(self, src: str, strict_parens: bool):
        self.tokens = tokenize(src)
        self.i = 0
        self.strict = strict_parens

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _is_op(self, ch: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text == ch

    def _expect_op(self, ch: str) -> Token:
        if not self._is_op(ch):
            raise ParseError(f"expected {ch!r}, found {self._describe()}", self.tok.pos)
        t = self.tok
        self.i += 1
        return t

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "END" else repr(self.tok.text)

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "END":
            raise ParseError(f"unexpected {self._describe()}", self.tok.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self._is_op("+") or self._is_op("-"):
            op = self.tok.text
            self.i += 1
            rhs = self.term()
            node = Sum(node, rhs) if op == "+" else Difference(node, rhs)
        return node

    def term(self) -> Node:
        node = self.factor()
        count = 1
        while self._is_op("*"):
            star = self.tok
            count += 1
            if self.strict and count >= 3:
                raise StrictParensError(
                    "ambiguous chained product; add parentheses", star.pos
                )
            self.i += 1
            node = Product(node, self.factor())
        return node

    def factor(self) -> Node:
        tok = self.tok
        if tok.kind == "INT":
            self.i += 1
            if self._is_op("/"):
                self.i += 1
                den_tok = self.tok
                if den_tok.kind != "INT":
                    raise ParseError(
                        f"expected denominator, found {self._describe()}", den_tok.pos
                    )
                self.i += 1
                if int(den_tok.text) == 0:
                    raise ZeroDenominatorError("zero denominator", den_tok.pos)
                return RationalLiteral(Fraction(int(tok.text), int(den_tok.text)))
            if tok.text == "1":
                return BasisLiteral("1")
            return RationalLiteral(Fraction(int(tok.text)))
        if tok.kind == "NAME":
            self.i += 1
            return BasisLiteral(tok.text)
        if tok.kind == "CONJ":
            self.i += 1
            self._expect_op("(")
            inner = self.expr()
            self._expect_op(")")
            return Conj(inner)
        if self._is_op("-"):
            self.i += 1
            return Negate(self.factor())
        if self._is_op("("):
            self.i += 1
            inner = self.expr()
            self._expect_op(")")
            return inner
        raise ParseError(f"unexpected {self._describe()}", tok.pos)


def parse(src: str, strict_parens: bool = False) -> Node:
    return _Parser(src, strict_parens).parse()


def eval_ast(t: Node) -> Octonion:
    if isinstance(t, RationalLiteral):
        return Octonion.scalar(t.value)
    if isinstance(t, BasisLiteral):
        return Octonion.basis(BASIS_NAMES.index(t.name))
    if isinstance(t, Negate):
        return -eval_ast(t.child)
    if isinstance(t, Conj):
        return oct_conj(eval_ast(t.child))
    if isinstance(t, Sum):
        return eval_ast(t.left) + eval_ast(t.right)
    if isinstance(t, Difference):
        return eval_ast(t.left) - eval_ast(t.right)
    if isinstance(t, Product):
        return oct_mul(eval_ast(t.left), eval_ast(t.right))
    raise TypeError(f"not an expression node: {t!r}")


def evaluate(src: str, strict_parens: bool = False) -> Octonion:
    return eval_ast(parse(src, strict_parens))


def format_ast(t: Node) -> str:
    """Fully parenthesized text that parses back (even in strict mode) to ``t``."""
    if isinstance(t, RationalLiteral):
        v = t.value
        # a bare "1" would read back as the basis element
        if v.denominator != 1 or v == 1:
            return f"{v.numerator}/{v.denominator}"
        return str(v.numerator)
    if isinstance(t, BasisLiteral):
        return t.name
    if isinstance(t, Negate):
        return f"(-{format_ast(t.child)})"
    if isinstance(t, Conj):
        return f"conj({format_ast(t.child)})"
    if isinstance(t, Sum):
        return f"({format_ast(t.left)} + {format_ast(t.right)})"
    if isinstance(t, Difference):
        return f"({format_ast(t.left)} - {format_ast(t.right)})"
    if isinstance(t, Product):
        return f"({format_ast(t.left)}*{format_ast(t.right)})"
    raise TypeError(f"not an expression node: {t!r}")


def product_of(names, start: Optional[Node] = None) -> Node:
    """Left-nested product of basis names, e.g. ``['i', 'j', 'k']`` -> ((i*j)*k)."""
    node = start
    for name in names:
        leaf = BasisLiteral(name)
        node = leaf if node is None else Product(node, leaf)
    return node if node is not None else BasisLiteral("1")
