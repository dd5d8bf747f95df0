"""Scalar profile expressions in one variable ``x``.

Grammar (``^`` is right-associative; unary minus binds tighter than ``^``)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := unary ('^' factor)?
    unary  := '-' unary | atom
    atom   := number | 'x' | name '(' args ')' | '(' expr ')'

Comparisons (``<  <=  >  >=``, also ``≤ ≥``) may only appear as the first
argument of ``ite(cond, then, else)``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

FUNCTIONS = {
    "abs": 1,
    "sign": 1,
    "min": 2,
    "max": 2,
    "sin": 1,
    "cos": 1,
    "exp": 1,
    "log": 1,
    "floor": 1,
    "ite": 3,
}

_RELOPS = {"<": "<", "<=": "<=", ">": ">", ">=": ">=", "≤": "<=", "≥": ">="}


# ---------------------------------------------------------------------------
# errors


class ExprError(ValueError):
    """Base class; ``offset`` is a byte offset into the UTF-8 source."""

    def __init__(self, message, source="", offset=0):
        self.source = source
        self.offset = offset
        super().__init__(f"{message} (line {self.line}, column {self.column})")

    @property
    def line(self):
        prefix = self.source.encode()[: self.offset].decode(errors="ignore")
        return prefix.count("\n") + 1

    @property
    def column(self):
        prefix = self.source.encode()[: self.offset].decode(errors="ignore")
        return len(prefix) - (prefix.rfind("\n") + 1) + 1


class ExprSyntaxError(ExprError):
    def __init__(self, source, offset, expected, found):
        self.expected = frozenset(expected)
        self.found = found
        exp = ", ".join(repr(t) for t in sorted(self.expected))
        super().__init__(f"unexpected {found!r}; expected one of: {exp}", source, offset)


class UnknownFunctionError(ExprError):
    def __init__(self, source, offset, name):
        self.name = name
        super().__init__(f"unknown function {name!r}", source, offset)


class ArityError(ExprError):
    def __init__(self, source, offset, name, expected, got):
        self.name, self.expected, self.got = name, expected, got
        super().__init__(f"{name}() takes {expected} argument(s), got {got}", source, offset)


class ExprEvalError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# AST


class Expr:
    __slots__ = ()

    def __call__(self, x):
        return evaluate(self, x)

    def __str__(self):
        return pretty(self)


@dataclass(frozen=True)
class Num(Expr):
    value: float


@dataclass(frozen=True)
class Var(Expr):
    pass


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Compare(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call(Expr):
    name: str
    args: tuple


def is_constant(e: Expr) -> bool:
    """True when ``e`` does not reference x."""
    if isinstance(e, Num):
        return True
    if isinstance(e, Var):
        return False
    if isinstance(e, Neg):
        return is_constant(e.operand)
    if isinstance(e, (BinOp, Compare)):
        return is_constant(e.left) and is_constant(e.right)
    return all(is_constant(a) for a in e.args)


def pretty(e: Expr) -> str:
    """Fully parenthesised source that parses back to an equal tree."""
    if isinstance(e, Num):
        return repr(float(e.value))
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Neg):
        return f"(-{pretty(e.operand)})"
    if isinstance(e, BinOp):
        return f"({pretty(e.left)} {e.op} {pretty(e.right)})"
    if isinstance(e, Compare):
        # only legal as ite's first argument, where parentheses are not allowed
        return f"{pretty(e.left)} {e.op} {pretty(e.right)}"
    return f"{e.name}({', '.join(pretty(a) for a in e.args)})"


# ---------------------------------------------------------------------------
# lexer / parser

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op><=|>=|≤|≥|[-+*/^(),<>])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str  # num, name, op, end
    text: str
    offset: int  # bytes


def _tokenize(src):
    toks = []
    pos = 0
    byte = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ExprSyntaxError(src, byte, {"number", "x", "function", "(", "-"}, src[pos])
        text = m.group()
        if m.lastgroup != "ws":
            toks.append(_Tok(m.lastgroup, text, byte))
        byte += len(text.encode())
        pos = m.end()
    toks.append(_Tok("end", "", byte))
    return toks


_ATOM_START = {"number", "x", "function", "(", "-"}


class _Parser:
    def __init__(self, src):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, expected):
        t = self.tok
        raise ExprSyntaxError(self.src, t.offset, expected, t.text or "end of input")

    def eat(self, text, expected=None):
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return
        self.fail(expected or {text})

    def parse(self):
        e = self.expr()
        if self.tok.kind != "end":
            self.fail({"+", "-", "*", "/", "^", "end of input"})
        return e

    def expr(self):
        left = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            left = BinOp(op, left, self.term())
        return left

    def term(self):
        left = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.tok.text
            self.i += 1
            left = BinOp(op, left, self.factor())
        return left

    def factor(self):
        base = self.unary()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.i += 1
            return BinOp("^", base, self.factor())
        return base

    def unary(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            self.i += 1
            return Neg(self.unary())
        return self.atom()

    def atom(self):
        t = self.tok
        if t.kind == "num":
            v = float(t.text)
            if not math.isfinite(v):
                raise ExprSyntaxError(self.src, t.offset, {"finite number"}, t.text)
            self.i += 1
            return Num(v)
        if t.kind == "name":
            self.i += 1
            if t.text == "x":
                return Var()
            if not (self.tok.kind == "op" and self.tok.text == "("):
                if t.text in FUNCTIONS:
                    self.fail({"("})
                raise UnknownFunctionError(self.src, t.offset, t.text)
            if t.text not in FUNCTIONS:
                raise UnknownFunctionError(self.src, t.offset, t.text)
            return self.call(t)
        if t.kind == "op" and t.text == "(":
            self.i += 1
            e = self.expr()
            self.eat(")", {")", "+", "-", "*", "/", "^"})
            return e
        self.fail(_ATOM_START)

    def comparison(self):
        left = self.expr()
        t = self.tok
        if t.kind == "op" and t.text in _RELOPS:
            self.i += 1
            return Compare(_RELOPS[t.text], left, self.expr())
        self.fail({"<", "<=", ">", ">="})

    def call(self, name_tok):
        name = name_tok.text
        self.eat("(")
        args = []
        if not (self.tok.kind == "op" and self.tok.text == ")"):
            while True:
                if name == "ite" and not args:
                    args.append(self.comparison())
                else:
                    args.append(self.expr())
                if self.tok.kind == "op" and self.tok.text == ",":
                    self.i += 1
                    continue
                break
        self.eat(")", {",", ")"})
        if len(args) != FUNCTIONS[name]:
            raise ArityError(self.src, name_tok.offset, name, FUNCTIONS[name], len(args))
        return Call(name, tuple(args))


def parse(source: str) -> Expr:
    """Parse a profile expression."""
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    return _Parser(source).parse()


# ---------------------------------------------------------------------------
# evaluation


def _check(v, what):
    if not np.all(np.isfinite(v)):
        raise ExprEvalError(f"non-finite result in {what}")
    return v


def _eval(e, x):
    if isinstance(e, Num):
        return np.full(x.shape, e.value)
    if isinstance(e, Var):
        return x
    if isinstance(e, Neg):
        return -_eval(e.operand, x)
    if isinstance(e, Compare):
        a, b = _eval(e.left, x), _eval(e.right, x)
        return {"<": np.less, "<=": np.less_equal, ">": np.greater, ">=": np.greater_equal}[e.op](a, b)
    if isinstance(e, BinOp):
        a, b = _eval(e.left, x), _eval(e.right, x)
        with np.errstate(all="ignore"):
            if e.op == "+":
                return _check(a + b, "+")
            if e.op == "-":
                return _check(a - b, "-")
            if e.op == "*":
                return _check(a * b, "*")
            if e.op == "/":
                if np.any(b == 0):
                    raise ExprEvalError("division by zero")
                return _check(a / b, "/")
            if np.any((a == 0) & (b < 0)):
                raise ExprEvalError("zero raised to a negative power")
            return _check(np.power(a, b), "^")
    args = e.args
    if e.name == "ite":
        cond = _eval(args[0], x)
        out = np.empty(x.shape)
        if np.any(cond):
            out[cond] = _eval(args[1], x[cond])
        if not np.all(cond):
            out[~cond] = _eval(args[2], x[~cond])
        return out
    vals = [_eval(a, x) for a in args]
    with np.errstate(all="ignore"):
        if e.name == "log":
            if np.any(vals[0] <= 0):
                raise ExprEvalError("log of a non-positive number")
            return np.log(vals[0])
        if e.name == "min":
            return np.minimum(*vals)
        if e.name == "max":
            return np.maximum(*vals)
        fn = {"abs": np.abs, "sign": np.sign, "sin": np.sin, "cos": np.cos, "exp": np.exp, "floor": np.floor}
        return _check(fn[e.name](vals[0]), e.name + "()")


def evaluate(expr: Expr, x):
    """Evaluate at a finite scalar or array ``x``; scalars give floats."""
    scalar = np.ndim(x) == 0
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    if not np.all(np.isfinite(xa)):
        raise ExprEvalError("x must be finite")
    out = np.asarray(_eval(expr, xa), dtype=float)
    return float(out[0]) if scalar else out
