"""A small expression language for symmetric functions and operators.

Grammar, loosest binding first::

    sum     := prod (("+" | "-") prod)*
    prod    := comp (("*" | "/") comp)*
    comp    := unary (("∘" | "@") unary)*          plethysm
    unary   := "-" unary | power
    power   := primary ("^" INT)?
    primary := NUMBER ("/" NUMBER)? | atom | operator "(" sum ")" | "(" sum ")"

Atoms are ``m[λ] e[λ] h[λ] pow[λ] s[λ] s[λ/μ] Id[n] seq(Species, n)
full(genus, [λ])``; operators are ``D D_i D_[λ] E(a) E(formal) eps omega pi``.
Partitions are bracketed lists; non-descending input is sorted with a warning.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from . import partitions as P
from .bases import e, h, omega, pow_, schur, skew_schur
from .config import check_degree
from .errors import DomainError, UmbraError
from .genera import QuasiGenus, e_genus, full_sequence, h_genus, plethysm, species_genus
from .operators import ShiftedPoly, d_lambda, epsilon, iterated_derivative, shift_eval, shift_formal, sym_derivative
from .polys import UniPoly
from .species import linear_sequence, named_species
from .symfunc import SymFunc, m, project_pi

FORMAL_SYMBOLS = ("a", "b", "c")


class ParseError(UmbraError, ValueError):
    """Malformed input; carries the 1-based line and column of the offending token."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line, self.column = line, column


# -- AST --------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Basis:
    kind: str  # m, e, h, pow, s, Id
    lam: Tuple[int, ...]
    mu: Optional[Tuple[int, ...]] = None  # skew shape for s


@dataclass(frozen=True)
class Seq:
    species: str
    n: int


@dataclass(frozen=True)
class Full:
    genus: str
    lam: Tuple[int, ...]


@dataclass(frozen=True)
class Apply:
    op: str  # D, D_i, D_lam, E, eps, omega, pi
    arg: "Expr"
    param: object = None


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Bin:
    op: str  # + - * / o ^
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Basis, Seq, Full, Apply, Neg, Bin]
Value = Union[Fraction, SymFunc, UniPoly, ShiftedPoly]


# -- tokenizer --------------------------------------------------------------------

_TOKENS = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<str>"[^"]*")
  | (?P<op>[-+*/^()\[\],@]|∘|−)
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    out: List[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        match = _TOKENS.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup
        chunk = match.group()
        if kind != "ws":
            tok_text = "-" if chunk == "−" else ("∘" if chunk == "@" else chunk)
            out.append(Token(kind, tok_text, line, pos - line_start + 1))
        for i, ch in enumerate(chunk):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = match.end()
    out.append(Token("end", "", line, pos - line_start + 1))
    return out


# -- parser ------------------------------------------------------------------------

_BASIS_ATOMS = ("m", "e", "h", "pow", "s", "Id")
_UNARY_OPS = ("D", "eps", "omega", "pi")
_D_INDEX = re.compile(r"D_(\d+)$")


@dataclass
class Parser:
    text: str
    tokens: List[Token] = field(init=False)
    pos: int = 0
    warnings: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.tokens = tokenize(self.text)

    # token helpers
    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column)

    def accept(self, text: str) -> bool:
        if self.tok.text == text and self.tok.kind in ("op", "name"):
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        tok = self.tok
        self.pos += 1
        return tok

    def integer(self) -> int:
        if self.tok.kind != "num":
            raise self.error(f"expected an integer, found {self.tok.text or 'end of input'!r}")
        value = int(self.tok.text)
        self.pos += 1
        return value

    def rational(self) -> Fraction:
        sign = -1 if self.accept("-") else 1
        num = self.integer()
        den = 1
        if self.accept("/"):
            den_tok = self.tok
            den = self.integer()
            if den == 0:
                raise self.error("zero denominator", den_tok)
        return Fraction(sign * num, den)

    # grammar
    def parse(self) -> Expr:
        node = self.sum()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def sum(self) -> Expr:
        node = self.prod()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            op = self.tok.text
            self.pos += 1
            node = Bin(op, node, self.prod())
        return node

    def prod(self) -> Expr:
        node = self.comp()
        while self.tok.text in ("*", "/") and self.tok.kind == "op":
            op = self.tok.text
            self.pos += 1
            node = Bin(op, node, self.comp())
        return node

    def comp(self) -> Expr:
        node = self.unary()
        while self.accept("∘"):
            node = Bin("o", node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        node = self.primary()
        if self.accept("^"):
            node = Bin("^", node, Num(Fraction(self.integer())))
        return node

    def partition(self, allow_skew: bool = False):
        start = self.expect("[")
        outer = self._parts()
        inner = None
        if allow_skew and self.accept("/"):
            inner = self._parts()
        self.expect("]")
        return self._normalize(outer, start), (None if inner is None else self._normalize(inner, start))

    def _parts(self) -> List[int]:
        parts: List[int] = []
        if self.tok.kind == "num":
            parts.append(self.integer())
            while self.accept(","):
                parts.append(self.integer())
        return parts

    def _normalize(self, parts: List[int], where: Token) -> Tuple[int, ...]:
        lam = P.partition(parts)
        nonzero = [p for p in parts if p]
        if list(lam) != nonzero or len(nonzero) != len(parts):
            self.warnings.append(
                f"line {where.line}, column {where.column}: partition {parts} normalized to {list(lam)}"
            )
        return lam

    def primary(self) -> Expr:
        tok = self.tok
        if tok.kind == "num":
            self.pos += 1
            value = Fraction(int(tok.text))
            if self.tok.text == "/" and self.tokens[self.pos + 1].kind == "num":
                self.pos += 1
                den_tok = self.tok
                den = self.integer()
                if den == 0:
                    raise self.error("zero denominator", den_tok)
                value = value / den
            return Num(value)
        if self.accept("("):
            node = self.sum()
            self.expect(")")
            return node
        if tok.kind != "name":
            raise self.error(f"unexpected {tok.text or 'end of input'!r}")
        name = tok.text
        self.pos += 1
        if name in _BASIS_ATOMS:
            if self.tok.text != "[":
                raise self.error(f"{name} needs a bracketed partition")
            if name == "Id":
                self.expect("[")
                n = self.integer()
                self.expect("]")
                return Basis("Id", (n,) if n else ())
            lam, mu = self.partition(allow_skew=(name == "s"))
            return Basis(name, lam, mu)
        if name == "seq":
            self.expect("(")
            sp = self.tok
            if sp.kind != "name":
                raise self.error("expected a species name")
            self.pos += 1
            self.expect(",")
            n = self.integer()
            self.expect(")")
            return Seq(sp.text, n)
        if name == "full":
            self.expect("(")
            g = self.tok
            if g.kind not in ("name", "str"):
                raise self.error("expected a genus name or a quoted JSON path")
            self.pos += 1
            self.expect(",")
            lam, _ = self.partition()
            self.expect(")")
            return Full(g.text.strip('"'), lam)
        if name in _UNARY_OPS:
            return Apply(name, self._argument())
        match = _D_INDEX.match(name)
        if match:
            i = int(match.group(1))
            if i < 1:
                raise self.error("derivative index must be positive", tok)
            return Apply("D_i", self._argument(), i)
        if name == "D_":
            lam, _ = self.partition()
            return Apply("D_lam", self._argument(), lam)
        if name == "E":
            self.expect("(")
            if self.accept("formal"):
                param: object = "formal"
            elif self.tok.kind == "num" or self.tok.text == "-":
                param = self.rational()
            else:
                raise self.error(f"E takes a rational or 'formal', found {self.tok.text or 'end of input'!r}")
            self.expect(")")
            return Apply("E", self._argument(), param)
        raise self.error(f"unknown name {name!r}", tok)

    def _argument(self) -> Expr:
        self.expect("(")
        node = self.sum()
        self.expect(")")
        return node


def parse(text: str) -> Expr:
    return Parser(text).parse()


def parse_with_warnings(text: str) -> Tuple[Expr, List[str]]:
    parser = Parser(text)
    return parser.parse(), parser.warnings


# -- printer ---------------------------------------------------------------------

def _plist(lam: Tuple[int, ...]) -> str:
    return ",".join(map(str, lam))


def _rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def unparse(node: Expr) -> str:
    """Canonical text; ``parse(unparse(x)) == x``."""
    if isinstance(node, Num):
        text = _rational(abs(node.value))
        return f"(-{text})" if node.value < 0 else text
    if isinstance(node, Basis):
        if node.kind == "Id":
            return f"Id[{node.lam[0] if node.lam else 0}]"
        if node.mu is not None:
            return f"s[{_plist(node.lam)}/{_plist(node.mu)}]"
        return f"{node.kind}[{_plist(node.lam)}]"
    if isinstance(node, Seq):
        return f"seq({node.species}, {node.n})"
    if isinstance(node, Full):
        name = node.genus if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", node.genus) else f'"{node.genus}"'
        return f"full({name}, [{_plist(node.lam)}])"
    if isinstance(node, Apply):
        arg = unparse(node.arg)
        if node.op == "D_i":
            return f"D_{node.param}({arg})"
        if node.op == "D_lam":
            return f"D_[{_plist(node.param)}]({arg})"
        if node.op == "E":
            p = "formal" if node.param == "formal" else _rational(node.param)
            return f"E({p})({arg})"
        return f"{node.op}({arg})"
    if isinstance(node, Neg):
        return f"-({unparse(node.arg)})"
    if isinstance(node, Bin):
        sym = {"o": "∘"}.get(node.op, node.op)
        if node.op == "^":
            return f"({unparse(node.left)})^{node.right.value}"
        right = unparse(node.right)
        if node.op == "/" and isinstance(node.right, Num):
            right = f"({right})"  # keep "a / b" from folding into one rational literal
        return f"({unparse(node.left)} {sym} {right})"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ------------------------------------------------------------------

def _name(value: Value) -> str:
    return {Fraction: "rational", SymFunc: "symmetric function", UniPoly: "polynomial",
            ShiftedPoly: "shifted function"}.get(type(value), type(value).__name__)


def _as_symfunc(value: Value, op: str) -> SymFunc:
    if isinstance(value, Fraction):
        return SymFunc.constant(value)
    if isinstance(value, SymFunc):
        return value
    raise DomainError(f"{op} needs a symmetric function, got a {_name(value)}")


def load_genus(name: str) -> QuasiGenus:
    """``e``, ``h``, a species name (product genus) or a path to genus JSON."""
    if name == "e":
        return e_genus()
    if name == "h":
        return h_genus()
    if name.endswith(".json"):
        try:
            with open(name, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise DomainError(f"cannot read genus file {name!r}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise DomainError(f"genus file {name!r} is not valid JSON: {exc.msg}") from None
        return QuasiGenus.from_json(data)
    return species_genus(named_species(name))


def _arith(op: str, a: Value, b: Value) -> Value:
    if isinstance(a, ShiftedPoly) or isinstance(b, ShiftedPoly):
        if op in ("+", "-") and isinstance(a, ShiftedPoly) and isinstance(b, ShiftedPoly):
            return a + b if op == "+" else a - b
        if op == "*":
            sp, other = (a, b) if isinstance(a, ShiftedPoly) else (b, a)
            if isinstance(other, (Fraction, SymFunc)):
                return sp.scale(other)
        raise DomainError(f"cannot combine a {_name(a)} and a {_name(b)} with {op!r}")
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        pass
    elif isinstance(a, UniPoly) or isinstance(b, UniPoly):
        if isinstance(a, SymFunc) or isinstance(b, SymFunc):
            raise DomainError(f"cannot combine a {_name(a)} and a {_name(b)}")
        a = a if isinstance(a, UniPoly) else UniPoly.constant(a)
        b = b if isinstance(b, UniPoly) else UniPoly.constant(b)
    else:
        a, b = _as_symfunc(a, op), _as_symfunc(b, op)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    return a * b


def evaluate(node: Expr) -> Value:
    """Exact value of ``node``.  Library errors are re-raised with the failing operation named."""
    try:
        return _eval(node)
    except UmbraError as exc:
        if getattr(exc, "operation", None) is None:
            exc.operation = _op_name(node)
            exc.args = (f"{exc.operation}: {exc}",)
        raise


def _op_name(node: Expr) -> str:
    if isinstance(node, Apply):
        return {"D_i": f"D_{node.param}", "D_lam": "D_[...]"}.get(node.op, node.op)
    if isinstance(node, Bin):
        return {"o": "plethysm", "^": "power", "+": "sum", "-": "difference", "*": "product",
                "/": "quotient"}[node.op]
    if isinstance(node, (Seq, Full)):
        return type(node).__name__.lower()
    if isinstance(node, Basis):
        return node.kind
    return "eval"


def _eval(node: Expr) -> Value:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Basis):
        return _eval_basis(node)
    if isinstance(node, Seq):
        return linear_sequence(named_species(node.species), node.n)
    if isinstance(node, Full):
        return full_sequence(load_genus(node.genus), node.lam)
    if isinstance(node, Neg):
        value = evaluate(node.arg)
        return value.scale(-1) if isinstance(value, ShiftedPoly) else -value
    if isinstance(node, Bin):
        return _eval_bin(node)
    if isinstance(node, Apply):
        return _eval_apply(node)
    raise TypeError(f"not an expression node: {node!r}")


def _eval_basis(node: Basis) -> SymFunc:
    check_degree(sum(node.lam))
    if node.kind == "Id":
        return linear_sequence(named_species("Deg"), node.lam[0] if node.lam else 0)
    if node.kind == "s":
        return schur(node.lam) if node.mu is None else skew_schur(node.lam, node.mu)
    return {"m": m, "e": e, "h": h, "pow": pow_}[node.kind](node.lam)


def _eval_bin(node: Bin) -> Value:
    left = evaluate(node.left)
    right = evaluate(node.right)
    if node.op == "^":
        k = int(right)
        if isinstance(left, ShiftedPoly):
            out = ShiftedPoly.lift(SymFunc.constant(1), left.symbols)
            for _ in range(k):
                out = out * left
            return out
        return left ** k
    if node.op == "/":
        if not isinstance(right, Fraction):
            raise DomainError(f"can only divide by a rational, got a {_name(right)}")
        if not right:
            raise DomainError("division by zero")
        return left.scale(1 / right) if isinstance(left, ShiftedPoly) else left * (1 / right)
    if node.op == "o":
        return plethysm(_as_symfunc(left, "plethysm"), _as_symfunc(right, "plethysm"))
    return _arith(node.op, left, right)


def _eval_apply(node: Apply) -> Value:
    value = evaluate(node.arg)
    op = node.op
    if op == "E":
        if node.param == "formal":
            if isinstance(value, ShiftedPoly):
                free = [s for s in FORMAL_SYMBOLS if s not in value.symbols]
                if not free:
                    raise DomainError("out of formal shift symbols")
                return shift_formal(value, free[0])
            return shift_formal(_as_symfunc(value, "E"), FORMAL_SYMBOLS[0])
        if isinstance(value, ShiftedPoly):
            return ShiftedPoly(value.symbols, {k: shift_eval(node.param, v) for k, v in value.terms.items()})
        return shift_eval(node.param, _as_symfunc(value, "E"))
    if op == "eps":
        if isinstance(value, ShiftedPoly):
            return value.epsilon()
        return epsilon(_as_symfunc(value, op))
    p = _as_symfunc(value, _op_name(node))
    if op == "D":
        return sym_derivative(p)
    if op == "D_i":
        return iterated_derivative(node.param, p)
    if op == "D_lam":
        return d_lambda(node.param, p)
    if op == "omega":
        return omega(p)
    if op == "pi":
        return project_pi(p)
    raise DomainError(f"unknown operator {op!r}")


def eval_text(text: str) -> Value:
    return evaluate(parse(text))


# -- output --------------------------------------------------------------------

def format_value(value: Value) -> str:
    if isinstance(value, Fraction):
        return _rational(value)
    return str(value)


def value_to_json(value: Value) -> object:
    if isinstance(value, Fraction):
        return {"rational": f"{value.numerator}/{value.denominator}"}
    if isinstance(value, UniPoly):
        return {"poly": value.to_json()}
    return value.to_json()
