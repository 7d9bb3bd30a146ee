"""The claim expression language: a small algebra over q-products.

Grammar (precedence low to high: + - then * / then ^):

    expr  := term { ("+" | "-") term }
    term  := factor { ("*" | "/") factor }
    factor:= atom [ "^" int ]
    atom  := "l(" nat ")" | "q" ["^" int] | int | "-" atom
           | "mock(" name ")"
           | "f(" sq "," sq ")"            sq := ["-"] "q" ["^" nat]
           | "phi(" sq ")" | "psi(" sq ")"
           | "poch(" sq "," nat ")"        (sign q^a ; q^step)_inf
           | "stream(" kind "," nat ")"    kind in pentagonal|jacobi|phi|psi
           | "ruleset(" name ")"
           | "AP(" expr "," nat "," nat ")"
           | "SUB(" expr "," nat ")"
           | "ALT(" expr ")"               q -> -q
           | "(" expr ")"

Evaluation is bottom-up over :class:`TruncatedSeries`; the requested order is
propagated downward so that extraction and substitution nodes receive deep
enough expansions (an ``AP(e, m, r)`` node asks its child for ``m*N + r``
coefficients to deliver N of its own).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import mock as mock_mod
from . import partitions, products
from .series import TruncatedSeries


class ParseError(ValueError):
    """Syntax error with a character offset into the source text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class UnknownSymbolError(ParseError):
    pass


# -- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Mono:
    k: int


@dataclass(frozen=True)
class Eta:
    k: int


@dataclass(frozen=True)
class Phi:
    sign: int
    k: int


@dataclass(frozen=True)
class Psi:
    sign: int
    k: int


@dataclass(frozen=True)
class Theta:
    sign1: int
    a: int
    sign2: int
    b: int


@dataclass(frozen=True)
class Poch:
    sign: int
    a: int
    step: int


@dataclass(frozen=True)
class Mock:
    name: str


@dataclass(frozen=True)
class Stream:
    kind: str
    scale: int


@dataclass(frozen=True)
class RulesetRef:
    name: str


@dataclass(frozen=True)
class Neg:
    child: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Ap:
    child: "Expr"
    modulus: int
    residue: int


@dataclass(frozen=True)
class Subst:
    child: "Expr"
    power: int


@dataclass(frozen=True)
class Alt:
    child: "Expr"


Expr = (
    Lit | Mono | Eta | Phi | Psi | Theta | Poch | Mock | Stream | RulesetRef
    | Neg | BinOp | Pow | Ap | Subst | Alt
)


# -- tokenizer / parser ------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_.]*)|([()+\-*/^,]))")

_MOCK_NAMES = {m.value for m in mock_mod.MockThetaId}
_STREAM_KINDS = {k.value for k in partitions.ThetaStreamKind}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == m.start():
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                at = len(text) - len(stripped)
                raise ParseError(f"unexpected character {stripped[0]!r}", at)
            if m.group(1):
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2):
                self.tokens.append(("name", m.group(2), m.start(2)))
            else:
                self.tokens.append(("sym", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    # token helpers

    def peek(self) -> tuple[str, str, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        self.i += 1
        return tok

    def expect_sym(self, sym: str) -> None:
        kind, val, pos = self.next()
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r}", pos)

    def expect_int(self) -> int:
        kind, val, pos = self.next()
        if kind != "int":
            raise ParseError("expected an integer", pos)
        return int(val)

    def expect_signed_int(self) -> int:
        kind, val, pos = self.peek()
        neg = False
        if kind == "sym" and val == "-":
            self.next()
            neg = True
        n = self.expect_int()
        return -n if neg else n

    def expect_name(self) -> str:
        kind, val, pos = self.next()
        if kind != "name":
            raise ParseError("expected a name", pos)
        return val

    # grammar

    def parse(self) -> Expr:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected trailing {val!r}", pos)
        return e

    def expr(self) -> Expr:
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in "+-":
                self.next()
                node = BinOp(val, node, self.term())
            else:
                return node

    def term(self) -> Expr:
        node = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in "*/":
                self.next()
                node = BinOp(val, node, self.factor())
            else:
                return node

    def factor(self) -> Expr:
        node = self.atom()
        kind, val, _ = self.peek()
        if kind == "sym" and val == "^":
            self.next()
            node = Pow(node, self.expect_signed_int())
        return node

    def signed_q_power(self) -> tuple[int, int]:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "sym" and val in "+-":
            self.next()
            sign = -1 if val == "-" else 1
        kind, val, pos = self.next()
        if kind != "name" or val != "q":
            raise ParseError("expected q", pos)
        k = 1
        kind, val, _ = self.peek()
        if kind == "sym" and val == "^":
            self.next()
            k = self.expect_int()
        return sign, k

    def atom(self) -> Expr:
        kind, val, pos = self.next()
        if kind == "int":
            return Lit(int(val))
        if kind == "sym" and val == "-":
            return Neg(self.atom())
        if kind == "sym" and val == "(":
            node = self.expr()
            self.expect_sym(")")
            return node
        if kind != "name":
            raise ParseError(f"unexpected {val!r}", pos)
        if val == "q":
            k = 1
            nk, nv, _ = self.peek()
            if nk == "sym" and nv == "^":
                self.next()
                k = self.expect_signed_int()
            return Mono(k)
        if val == "l":
            self.expect_sym("(")
            k = self.expect_int()
            self.expect_sym(")")
            return Eta(k)
        if val == "mock":
            self.expect_sym("(")
            name = self.expect_name()
            self.expect_sym(")")
            if name not in _MOCK_NAMES:
                raise UnknownSymbolError(f"unknown mock theta function {name!r}", pos)
            return Mock(name)
        if val == "f":
            self.expect_sym("(")
            s1, a = self.signed_q_power()
            self.expect_sym(",")
            s2, b = self.signed_q_power()
            self.expect_sym(")")
            return Theta(s1, a, s2, b)
        if val in ("phi", "psi"):
            self.expect_sym("(")
            sign, k = self.signed_q_power()
            self.expect_sym(")")
            return Phi(sign, k) if val == "phi" else Psi(sign, k)
        if val == "poch":
            self.expect_sym("(")
            sign, a = self.signed_q_power()
            self.expect_sym(",")
            step = self.expect_int()
            self.expect_sym(")")
            return Poch(sign, a, step)
        if val == "stream":
            self.expect_sym("(")
            k = self.expect_name()
            if k not in _STREAM_KINDS:
                raise UnknownSymbolError(f"unknown stream kind {k!r}", pos)
            self.expect_sym(",")
            scale = self.expect_int()
            self.expect_sym(")")
            return Stream(k, scale)
        if val == "ruleset":
            self.expect_sym("(")
            name = self.expect_name()
            self.expect_sym(")")
            return RulesetRef(name)
        if val == "AP":
            self.expect_sym("(")
            child = self.expr()
            self.expect_sym(",")
            m = self.expect_int()
            self.expect_sym(",")
            r = self.expect_int()
            self.expect_sym(")")
            return Ap(child, m, r)
        if val == "SUB":
            self.expect_sym("(")
            child = self.expr()
            self.expect_sym(",")
            k = self.expect_int()
            self.expect_sym(")")
            return Subst(child, k)
        if val == "ALT":
            self.expect_sym("(")
            child = self.expr()
            self.expect_sym(")")
            return Alt(child)
        raise UnknownSymbolError(f"unknown symbol {val!r}", pos)


def parse_expr(text: str) -> Expr:
    """Parse claim-language text into an AST; errors carry a character offset."""
    return _Parser(text).parse()


# -- canonical printer -------------------------------------------------------

def _sq(sign: int, k: int) -> str:
    base = "q" if k == 1 else f"q^{k}"
    return base if sign == 1 else f"-{base}"


def to_text(node: Expr) -> str:
    """Canonical rendering; ``parse_expr(to_text(e))`` reproduces ``e``."""
    return _print(node, 0)


def _print(node: Expr, level: int) -> str:
    # level: 0 sum position, 1 right of +/-, 2 product position,
    # 3 right of * or /, 4 power base
    if isinstance(node, Lit):
        return str(node.value)
    if isinstance(node, Mono):
        return "q" if node.k == 1 else f"q^{node.k}"
    if isinstance(node, Eta):
        return f"l({node.k})"
    if isinstance(node, Phi):
        return f"phi({_sq(node.sign, node.k)})"
    if isinstance(node, Psi):
        return f"psi({_sq(node.sign, node.k)})"
    if isinstance(node, Theta):
        return f"f({_sq(node.sign1, node.a)},{_sq(node.sign2, node.b)})"
    if isinstance(node, Poch):
        return f"poch({_sq(node.sign, node.a)},{node.step})"
    if isinstance(node, Mock):
        return f"mock({node.name})"
    if isinstance(node, Stream):
        return f"stream({node.kind},{node.scale})"
    if isinstance(node, RulesetRef):
        return f"ruleset({node.name})"
    if isinstance(node, Ap):
        return f"AP({_print(node.child, 0)},{node.modulus},{node.residue})"
    if isinstance(node, Subst):
        return f"SUB({_print(node.child, 0)},{node.power})"
    if isinstance(node, Alt):
        return f"ALT({_print(node.child, 0)})"
    if isinstance(node, Neg):
        inner = _print(node.child, 4)
        text = f"-{inner}"
        return f"({text})" if level >= 1 else text
    if isinstance(node, Pow):
        base = _print(node.base, 4)
        # Mono carries its own ^k syntax, so a monomial base needs parens
        if isinstance(node.base, (BinOp, Neg, Pow, Mono)):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, BinOp):
        if node.op in "+-":
            text = f"{_print(node.left, 0)} {node.op} {_print(node.right, 1)}"
            return f"({text})" if level >= 1 else text
        text = f"{_print(node.left, 2)}{node.op}{_print(node.right, 3)}"
        return f"({text})" if level >= 3 else text
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluator ----------------------------------------------------------------

def eval_expr(node: Expr, order: int) -> TruncatedSeries:
    """Evaluate bottom-up to a series valid to (about) the requested order.

    Extraction and substitution nodes request deeper expansions of their
    children, so the root result is valid to the full order except for small
    Laurent shifts introduced by q^-k monomial factors.
    """
    if isinstance(node, Lit):
        return TruncatedSeries.one(order).scale(node.value)
    if isinstance(node, Mono):
        return TruncatedSeries.monomial(node.k, order + node.k)
    if isinstance(node, Eta):
        return products.eta(node.k, order)
    if isinstance(node, Phi):
        base = products.phi(-(-order // node.k))
        if node.sign == -1:
            base = base.alternate()
        return base.substitute(node.k)
    if isinstance(node, Psi):
        base = products.psi(-(-order // node.k))
        if node.sign == -1:
            base = base.alternate()
        return base.substitute(node.k)
    if isinstance(node, Theta):
        return products.theta_f(node.sign1, node.a, node.sign2, node.b, order)
    if isinstance(node, Poch):
        return products.pochhammer(
            products.PochhammerSpec(node.sign, node.a, node.step), order
        )
    if isinstance(node, Mock):
        return mock_mod.mock_series(node.name, order)
    if isinstance(node, Stream):
        return partitions.theta_stream(node.kind, node.scale, order)
    if isinstance(node, RulesetRef):
        if node.name not in partitions.RULESETS:
            raise KeyError(f"unknown ruleset {node.name!r}")
        return partitions.count_dp(partitions.RULESETS[node.name], order)
    if isinstance(node, Neg):
        return -eval_expr(node.child, order)
    if isinstance(node, Pow):
        return eval_expr(node.base, order) ** node.exponent
    if isinstance(node, Ap):
        child = eval_expr(node.child, node.modulus * order + node.residue)
        return child.extract_ap(node.modulus, node.residue)
    if isinstance(node, Subst):
        child = eval_expr(node.child, -(-order // node.power))
        return child.substitute(node.power)
    if isinstance(node, Alt):
        return eval_expr(node.child, order).alternate()
    if isinstance(node, BinOp):
        if node.op == "*":
            # integer scaling is lossless, keep it out of the min-order rule
            if isinstance(node.left, Lit):
                return eval_expr(node.right, order).scale(node.left.value)
            if isinstance(node.right, Lit):
                return eval_expr(node.left, order).scale(node.right.value)
        a = eval_expr(node.left, order)
        b = eval_expr(node.right, order)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        return a / b
    raise TypeError(f"not an expression node: {node!r}")
