"""Word expressions over named generators and swap literals.

Grammar::

    expr     := term*                      juxtaposition is product
    term     := primary ('^' exponent)*
    exponent := INT | factor               INT -> power, otherwise conjugation
    factor   := primary ('^' exponent)*
    primary  := NAME | '<' ADDR ADDR '>' | '(' expr ')' | '[' expr ',' expr ']' | '1'

``x^g`` is ``g⁻¹ x g`` and ``[x, y]`` is ``x⁻¹ y⁻¹ x y``.  A word exponent
binds to the right, so ``a^b^-1`` reads as ``a^(b^-1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .address import Address, AddressError, format_address, incomparable, parse_address


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True, order=True)
class SwapLit:
    alpha: Address
    beta: Address

    def __post_init__(self):
        if not incomparable(self.alpha, self.beta):
            raise AddressError(
                f"<{format_address(self.alpha)} {format_address(self.beta)}> "
                "needs incomparable addresses"
            )

    def __str__(self):
        return f"<{format_address(self.alpha)} {format_address(self.beta)}>"


GenName = Union[str, SwapLit]


# expression tree --------------------------------------------------------------


class WordExpr:
    __slots__ = ()


@dataclass(frozen=True)
class Empty(WordExpr):
    pass


@dataclass(frozen=True)
class Gen(WordExpr):
    name: GenName


@dataclass(frozen=True)
class Inverse(WordExpr):
    base: WordExpr


@dataclass(frozen=True)
class Power(WordExpr):
    base: WordExpr
    exponent: int


@dataclass(frozen=True)
class Conjugate(WordExpr):
    base: WordExpr
    by: WordExpr


@dataclass(frozen=True)
class Commutator(WordExpr):
    left: WordExpr
    right: WordExpr


@dataclass(frozen=True)
class Product(WordExpr):
    factors: tuple[WordExpr, ...]


def product(*factors: WordExpr) -> WordExpr:
    flat: list[WordExpr] = []
    for f in factors:
        if isinstance(f, Product):
            flat.extend(f.factors)
        elif not isinstance(f, Empty):
            flat.append(f)
    if not flat:
        return Empty()
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def swap(alpha: Address, beta: Address) -> Gen:
    return Gen(SwapLit(alpha, beta))


# tokenizer / parser ----------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<swap><\s*(?P<a1>[01]+|e|ε)\s+(?P<a2>[01]+|e|ε)\s*>)
  | (?P<int>-?\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[()\[\],^])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if m.group("swap") is not None:
            a, b = parse_address(m.group("a1")), parse_address(m.group("a2"))
            if not incomparable(a, b):
                raise ParseError(
                    f"swap literal <{format_address(a)} {format_address(b)}> has comparable addresses",
                    pos,
                )
            tokens.append(("swap", SwapLit(a, b), pos))
        elif kind == "int":
            tokens.append(("int", int(m.group("int")), pos))
        elif kind == "name":
            tokens.append(("name", m.group("name"), pos))
        elif kind == "punct":
            tokens.append((m.group("punct"), None, pos))
        pos = m.end()
    tokens.append(("eof", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def kind(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {self._describe(tok)}", tok[2])
        self.i += 1
        return tok

    @staticmethod
    def _describe(tok) -> str:
        if tok[0] == "eof":
            return "end of input"
        if tok[1] is not None:
            return repr(str(tok[1]))
        return repr(tok[0])

    def expr(self) -> WordExpr:
        terms = []
        while self.kind in ("name", "swap", "(", "[", "int"):
            terms.append(self.term())
        return product(*terms)

    def term(self) -> WordExpr:
        node = self.primary()
        while self.kind == "^":
            self.take("^")
            if self.kind == "int":
                node = Power(node, self.take("int")[1])
            else:
                node = Conjugate(node, self.term())
        return node

    def primary(self) -> WordExpr:
        kind, value, pos = self.tokens[self.i]
        if kind == "name":
            self.i += 1
            return Gen(value)
        if kind == "swap":
            self.i += 1
            return Gen(value)
        if kind == "int":
            if value != 1:
                raise ParseError(f"bare integer {value} (only 1 denotes the identity)", pos)
            self.i += 1
            return Empty()
        if kind == "(":
            self.i += 1
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "[":
            self.i += 1
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return Commutator(left, right)
        raise ParseError(f"unexpected {self._describe(self.tokens[self.i])}", pos)


def parse(text: str) -> WordExpr:
    p = _Parser(text)
    node = p.expr()
    p.take("eof")
    return node


def parse_relation(text: str) -> WordExpr:
    """``lhs = rhs`` becomes the relator ``lhs · rhs⁻¹``; plain text is a relator."""
    if text.count("=") > 1:
        raise ParseError("at most one '=' per relation", text.index("=", text.index("=") + 1))
    if "=" not in text:
        return parse(text)
    lhs, rhs = text.split("=")
    left = parse(lhs)
    try:
        right = parse(rhs)
    except ParseError as exc:
        raise ParseError(str(exc).rsplit(" at position", 1)[0], exc.position + len(lhs) + 1) from None
    if isinstance(right, Empty):
        return left
    return product(left, Inverse(right))


# flattening -----------------------------------------------------------------

Letter = tuple[GenName, int]
Word = tuple[Letter, ...]


def _invert(word: list[Letter]) -> list[Letter]:
    return [(g, -e) for g, e in reversed(word)]


def _expand(e: WordExpr) -> list[Letter]:
    if isinstance(e, Empty):
        return []
    if isinstance(e, Gen):
        return [(e.name, 1)]
    if isinstance(e, Inverse):
        return _invert(_expand(e.base))
    if isinstance(e, Power):
        base = _expand(e.base)
        if e.exponent < 0:
            base = _invert(base)
        return base * abs(e.exponent)
    if isinstance(e, Conjugate):
        g = _expand(e.by)
        return _invert(g) + _expand(e.base) + g
    if isinstance(e, Commutator):
        x, y = _expand(e.left), _expand(e.right)
        return _invert(x) + _invert(y) + x + y
    if isinstance(e, Product):
        out: list[Letter] = []
        for f in e.factors:
            out.extend(_expand(f))
        return out
    raise TypeError(f"not a word expression: {e!r}")


def free_reduce(word) -> Word:
    stack: list[Letter] = []
    for g, e in word:
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


def flatten(e: WordExpr) -> Word:
    return free_reduce(_expand(e))


def word_to_expr(word: Word) -> WordExpr:
    return product(*(Gen(g) if e == 1 else Inverse(Gen(g)) for g, e in word))


def _gen_text(g: GenName) -> str:
    return str(g)


def format_word(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(_gen_text(g) if e == 1 else f"{_gen_text(g)}^-1" for g, e in word)


def format_expr(e: WordExpr) -> str:
    """Structure-preserving rendering in the input grammar."""
    if isinstance(e, Empty):
        return "1"
    if isinstance(e, Gen):
        return _gen_text(e.name)
    if isinstance(e, Inverse):
        return f"{_atom(e.base)}^-1"
    if isinstance(e, Power):
        return f"{_atom(e.base)}^{e.exponent}"
    if isinstance(e, Conjugate):
        return f"{_atom(e.base)}^{_atom(e.by, exponent=True)}"
    if isinstance(e, Commutator):
        return f"[{format_expr(e.left)}, {format_expr(e.right)}]"
    if isinstance(e, Product):
        return " ".join(_atom(f) if isinstance(f, Product) else format_expr(f) for f in e.factors)
    raise TypeError(f"not a word expression: {e!r}")


def _atom(e: WordExpr, exponent: bool = False) -> str:
    if isinstance(e, (Gen, Commutator, Empty)):
        return format_expr(e)
    if exponent and isinstance(e, (Inverse, Power)) and isinstance(e.base, Gen):
        return format_expr(e)
    return f"({format_expr(e)})"


def generators_of(e: WordExpr) -> set[GenName]:
    return {g for g, _ in _expand(e)}


def substitute(e: WordExpr, mapping: dict) -> WordExpr:
    """Replace ``Gen(name)`` leaves found in ``mapping`` by expressions."""
    if isinstance(e, Gen):
        return mapping.get(e.name, e)
    if isinstance(e, Empty):
        return e
    if isinstance(e, Inverse):
        return Inverse(substitute(e.base, mapping))
    if isinstance(e, Power):
        return Power(substitute(e.base, mapping), e.exponent)
    if isinstance(e, Conjugate):
        return Conjugate(substitute(e.base, mapping), substitute(e.by, mapping))
    if isinstance(e, Commutator):
        return Commutator(substitute(e.left, mapping), substitute(e.right, mapping))
    if isinstance(e, Product):
        return Product(tuple(substitute(f, mapping) for f in e.factors))
    raise TypeError(f"not a word expression: {e!r}")
