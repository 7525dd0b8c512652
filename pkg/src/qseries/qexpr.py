"""A small expression language for eta-quotient and theta identities.

Registry items and CLI users state identities as text, e.g.

    5*f5^5/f1^6
    f1^3 - f3*a(q^3) + 3*q*f9^3
    B(q^7)/C(q^7) - q*A(q^7)/B(q^7) - q^2 + q^5*C(q^7)/A(q^7)

Grammar (EBNF), whitespace-insensitive::

    expr    = term , { ("+" | "-") , term } ;
    term    = unary , { ("*" | "/") , unary } ;
    unary   = "-" , unary | power ;
    power   = atom , [ "^" , [ "-" ] , integer ] ;
    atom    = integer
            | "q"
            | "f" digits                           (* Euler product f_k *)
            | "a" "(" "q" [ "^" integer ] ")"      (* cubic theta a(q^k) *)
            | ("A" | "B" | "C") [ "(" "q" "^" integer ")" ]
            | "theta" "(" integer "," integer ")"
            | "(" expr ")" ;

Precedence is ^ above unary minus above * and / above + and -; the
multiplicative and additive operators associate to the left, and ^ binds
a single integer exponent.  "f18" always means f_18: the lexer consumes
maximal digit runs.  Bare "a" is a syntax error; the cubic theta is
always written with its argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Union

from . import qfunctions
from .series import CoefficientRing, EXACT, SeriesError, TruncatedSeries


class QSyntaxError(Exception):
    """Lexing or parsing failure, carrying the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class EvalError(Exception):
    """Evaluation failure, naming the subexpression that raised it."""

    def __init__(self, message: str, fragment: str):
        super().__init__(f"{message} in '{fragment}'")
        self.fragment = fragment


# --------------------------------------------------------------------------
# Tokens
# --------------------------------------------------------------------------

class Token(NamedTuple):
    kind: str   # INT, EULER, NAME, OP, END
    text: str
    value: int  # integer payload for INT/EULER, 0 otherwise
    pos: int


_NAMES = {"a", "A", "B", "C", "q", "theta"}
_OPS = set("+-*/^(),")


def tokenize(text: str) -> list[Token]:
    """Lex an expression into tokens; raises QSyntaxError on bad input."""
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], int(text[i:j]), i))
            i = j
            continue
        if ch == "f" and i + 1 < n and text[i + 1].isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("EULER", text[i:j], int(text[i + 1:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            name = text[i:j]
            if name not in _NAMES:
                raise QSyntaxError(f"unknown identifier '{name}'", i)
            tokens.append(Token("NAME", name, 0, i))
            i = j
            continue
        if ch in _OPS:
            tokens.append(Token("OP", ch, 0, i))
            i += 1
            continue
        raise QSyntaxError(f"illegal character {ch!r}", i)
    tokens.append(Token("END", "", 0, n))
    return tokens


# --------------------------------------------------------------------------
# Syntax tree
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class QVar:
    pass


@dataclass(frozen=True)
class Euler:
    k: int


@dataclass(frozen=True)
class CubicA:
    """The cubic theta a(q)."""


@dataclass(frozen=True)
class Septic:
    letter: str  # "A", "B" or "C", at argument q


@dataclass(frozen=True)
class Theta:
    a: int
    b: int


@dataclass(frozen=True)
class Subst:
    """Power substitution q -> q^k applied to a named atom."""

    child: "QExpr"
    k: int


@dataclass(frozen=True)
class Neg:
    child: "QExpr"


@dataclass(frozen=True)
class Add:
    left: "QExpr"
    right: "QExpr"


@dataclass(frozen=True)
class Sub:
    left: "QExpr"
    right: "QExpr"


@dataclass(frozen=True)
class Mul:
    left: "QExpr"
    right: "QExpr"


@dataclass(frozen=True)
class Div:
    left: "QExpr"
    right: "QExpr"


@dataclass(frozen=True)
class Pow:
    base: "QExpr"
    exponent: int


QExpr = Union[IntLit, QVar, Euler, CubicA, Septic, Theta, Subst,
              Neg, Add, Sub, Mul, Div, Pow]


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------

class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            raise QSyntaxError(
                f"expected {want!r}, found {tok.text or 'end of input'!r}",
                tok.pos)
        return self.advance()

    def at_op(self, *texts: str) -> bool:
        tok = self.peek()
        return tok.kind == "OP" and tok.text in texts

    def parse_expr(self) -> QExpr:
        node = self.parse_term()
        while self.at_op("+", "-"):
            op = self.advance().text
            rhs = self.parse_term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def parse_term(self) -> QExpr:
        node = self.parse_unary()
        while self.at_op("*", "/"):
            op = self.advance().text
            rhs = self.parse_unary()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def parse_unary(self) -> QExpr:
        if self.at_op("-"):
            self.advance()
            return Neg(self.parse_unary())
        return self.parse_power()

    def parse_power(self) -> QExpr:
        base = self.parse_atom()
        if self.at_op("^"):
            self.advance()
            return Pow(base, self.parse_exponent())
        return base

    def parse_exponent(self) -> int:
        sign = 1
        if self.at_op("-"):
            self.advance()
            sign = -1
        tok = self.expect("INT")
        return sign * tok.value

    def parse_atom(self) -> QExpr:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return IntLit(tok.value)
        if tok.kind == "EULER":
            self.advance()
            if tok.value < 1:
                raise QSyntaxError("Euler product index must be >= 1", tok.pos)
            return Euler(tok.value)
        if tok.kind == "NAME":
            if tok.text == "q":
                self.advance()
                return QVar()
            if tok.text == "a":
                self.advance()
                k = self.parse_q_argument(required=True)
                return CubicA() if k == 1 else Subst(CubicA(), k)
            if tok.text in ("A", "B", "C"):
                self.advance()
                k = self.parse_q_argument(required=False)
                atom: QExpr = Septic(tok.text)
                return atom if k == 1 else Subst(atom, k)
            if tok.text == "theta":
                self.advance()
                self.expect("OP", "(")
                a = self.expect("INT").value
                self.expect("OP", ",")
                b = self.expect("INT").value
                self.expect("OP", ")")
                return Theta(a, b)
        if self.at_op("("):
            self.advance()
            node = self.parse_expr()
            self.expect("OP", ")")
            return node
        raise QSyntaxError(
            "expected an integer, 'q', 'f<k>', 'a(q^k)', 'A', 'B', 'C', "
            f"'theta(a,b)' or '(', found {tok.text or 'end of input'!r}",
            tok.pos)

    def parse_q_argument(self, required: bool) -> int:
        """Parse an optional '(q^k)' suffix; returns k (1 when absent)."""
        if not self.at_op("("):
            if required:
                tok = self.peek()
                raise QSyntaxError(
                    "the cubic theta needs an argument: write 'a(q)' or "
                    "'a(q^k)'", tok.pos)
            return 1
        self.advance()
        self.expect("NAME", "q")
        k = 1
        if self.at_op("^"):
            self.advance()
            k = self.expect("INT").value
            if k < 1:
                raise QSyntaxError("substitution power must be >= 1",
                                   self.tokens[self.i - 1].pos)
        self.expect("OP", ")")
        return k


def parse(tokens: list[Token]) -> QExpr:
    """Parse a token stream into a syntax tree."""
    parser = _Parser(tokens)
    node = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "END":
        raise QSyntaxError(f"unexpected trailing input {tok.text!r}", tok.pos)
    return node


def parse_expr(text: str) -> QExpr:
    """Convenience: tokenize and parse in one call."""
    return parse(tokenize(text))


# --------------------------------------------------------------------------
# Printer (canonical; parse(to_text(e)) reproduces e structurally)
# --------------------------------------------------------------------------

_LEVEL_ADD, _LEVEL_MUL, _LEVEL_NEG, _LEVEL_POW, _LEVEL_ATOM = 1, 2, 3, 4, 5


def _level(e: QExpr) -> int:
    if isinstance(e, (Add, Sub)):
        return _LEVEL_ADD
    if isinstance(e, (Mul, Div)):
        return _LEVEL_MUL
    if isinstance(e, Neg):
        return _LEVEL_NEG
    if isinstance(e, Pow):
        return _LEVEL_POW
    return _LEVEL_ATOM


def to_text(e: QExpr) -> str:
    """Render a syntax tree back to expression text."""
    def wrap(child: QExpr, strict: bool, parent_level: int) -> str:
        lv = _level(child)
        text = to_text(child)
        if lv < parent_level or (strict and lv == parent_level):
            return f"({text})"
        return text

    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, QVar):
        return "q"
    if isinstance(e, Euler):
        return f"f{e.k}"
    if isinstance(e, CubicA):
        return "a(q)"
    if isinstance(e, Septic):
        return e.letter
    if isinstance(e, Theta):
        return f"theta({e.a},{e.b})"
    if isinstance(e, Subst):
        if isinstance(e.child, CubicA):
            return f"a(q^{e.k})"
        if isinstance(e.child, Septic):
            return f"{e.child.letter}(q^{e.k})"
        raise ValueError("power substitution only wraps named atoms")
    if isinstance(e, Neg):
        return "-" + wrap(e.child, False, _LEVEL_NEG)
    if isinstance(e, Add):
        return (wrap(e.left, False, _LEVEL_ADD) + " + "
                + wrap(e.right, True, _LEVEL_ADD))
    if isinstance(e, Sub):
        return (wrap(e.left, False, _LEVEL_ADD) + " - "
                + wrap(e.right, True, _LEVEL_ADD))
    if isinstance(e, Mul):
        return (wrap(e.left, False, _LEVEL_MUL) + "*"
                + wrap(e.right, True, _LEVEL_MUL))
    if isinstance(e, Div):
        return (wrap(e.left, False, _LEVEL_MUL) + "/"
                + wrap(e.right, True, _LEVEL_MUL))
    if isinstance(e, Pow):
        return wrap(e.base, True, _LEVEL_POW) + f"^{e.exponent}"
    raise TypeError(f"not a QExpr node: {e!r}")


# --------------------------------------------------------------------------
# Evaluator
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class EvalContext:
    """Target truncation order and coefficient ring for evaluation."""

    order: int
    ring: CoefficientRing = EXACT

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("evaluation order must be positive")


@lru_cache(maxsize=16)
def _septic_cached(order: int, modulus: int):
    ring = CoefficientRing(modulus)
    return qfunctions.septic_ABC(order, ring)


def evaluate(e: QExpr, ctx: EvalContext) -> TruncatedSeries:
    """Evaluate a syntax tree bottom-up at the context's order and ring.

    The result's order can fall below ctx.order when a division cancels a
    common q-valuation; callers compare series only on the order actually
    achieved.
    """
    n, ring = ctx.order, ctx.ring
    try:
        if isinstance(e, IntLit):
            return TruncatedSeries.one(ring, n).scalar_mul(e.value)
        if isinstance(e, QVar):
            return TruncatedSeries.monomial(ring, n, 1)
        if isinstance(e, Euler):
            return qfunctions.euler_f(e.k, n, ring)
        if isinstance(e, CubicA):
            return qfunctions.borwein_a(1, n, ring)
        if isinstance(e, Septic):
            a, b, c = _septic_cached(n, ring.modulus)
            return {"A": a, "B": b, "C": c}[e.letter]
        if isinstance(e, Theta):
            return qfunctions.ramanujan_theta((e.a, e.b), n, ring)
        if isinstance(e, Subst):
            inner = evaluate(e.child, EvalContext(-(-n // e.k), ring))
            return inner.substitute_power(e.k).truncate(n)
        if isinstance(e, Neg):
            return -evaluate(e.child, ctx)
        if isinstance(e, Add):
            return evaluate(e.left, ctx) + evaluate(e.right, ctx)
        if isinstance(e, Sub):
            return evaluate(e.left, ctx) - evaluate(e.right, ctx)
        if isinstance(e, Mul):
            return evaluate(e.left, ctx) * evaluate(e.right, ctx)
        if isinstance(e, Div):
            return evaluate(e.left, ctx).divide(evaluate(e.right, ctx))
        if isinstance(e, Pow):
            return evaluate(e.base, ctx) ** e.exponent
    except EvalError:
        raise
    except SeriesError as exc:
        raise EvalError(str(exc), to_text(e)) from exc
    raise TypeError(f"not a QExpr node: {e!r}")


def evaluate_text(text: str, order: int,
                  ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """Parse and evaluate expression text in one call."""
    return evaluate(parse_expr(text), EvalContext(order, ring))
