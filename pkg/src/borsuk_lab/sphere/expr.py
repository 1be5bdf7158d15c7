"""Expression language for user-supplied functions on S^2.

Grammar (whitespace insensitive)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | base ('^' integer)?
    base   := number | 'i' | 'x' | 'y' | 'z' | '(' expr ')' | func '(' expr ')'
    func   := 'exp' | 'sin' | 'cos'

The leading unary minus in ``factor`` is an extension so that negative
coefficients can be printed and re-parsed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from ..errors import ExprSyntaxError

FUNCS = {"exp": np.exp, "sin": np.sin, "cos": np.cos}
VARS = ("x", "y", "z")


class Expr:
    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at an (m, 3) array of points (or a single 3-vector)."""
        pts = np.asarray(points, dtype=float)
        single = pts.ndim == 1
        pts = np.atleast_2d(pts)
        out = np.broadcast_to(np.asarray(self._eval(pts[:, 0], pts[:, 1], pts[:, 2]), dtype=np.complex128),
                              (pts.shape[0],)).copy()
        return out[0] if single else out

    def __call__(self, points):
        return self.evaluate(points)

    def _eval(self, x, y, z):
        raise NotImplementedError


@dataclass(frozen=True)
class Const(Expr):
    value: complex

    def _eval(self, x, y, z):
        return complex(self.value)

    def __str__(self):
        v = complex(self.value)
        if v == 1j:
            return "i"
        if v.imag == 0:
            return repr(v.real) if v.real >= 0 else f"-{-v.real!r}"
        # not producible by the parser; printed in an equivalent (not identical) form
        return f"({v.real!r} + {v.imag!r}*i)"


@dataclass(frozen=True)
class Var(Expr):
    name: str

    def _eval(self, x, y, z):
        return {"x": x, "y": y, "z": z}[self.name]

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr

    def _eval(self, x, y, z):
        return -self.operand._eval(x, y, z)

    def __str__(self):
        return "-" + _wrap(self.operand, 3)


@dataclass(frozen=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr

    def _eval(self, x, y, z):
        a = self.left._eval(x, y, z)
        b = self.right._eval(x, y, z)
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        if self.op == "*":
            return a * b
        return a / b

    def __str__(self):
        p = _PREC[self.op]
        # left-associative: an equal-precedence right operand needs parentheses
        return f"{_wrap(self.left, p)} {self.op} {_wrap(self.right, p + 1)}"


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int

    def _eval(self, x, y, z):
        return self.base._eval(x, y, z) ** self.exponent

    def __str__(self):
        return f"{_wrap(self.base)}^{self.exponent}"


@dataclass(frozen=True)
class Call(Expr):
    func: str
    arg: Expr

    def _eval(self, x, y, z):
        return FUNCS[self.func](np.asarray(self.arg._eval(x, y, z), dtype=np.complex128))

    def __str__(self):
        return f"{self.func}({self.arg})"


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return 3
    if isinstance(e, Pow):
        return 4
    if isinstance(e, Const) and not _is_atom_const(e):
        return 1
    return 5


def _wrap(e: Expr, above: int = 5) -> str:
    """Print e, parenthesized if its precedence is below ``above``."""
    s = str(e)
    return f"({s})" if _prec(e) < above else s


def _is_atom_const(e: Const) -> bool:
    v = complex(e.value)
    return v == 1j or (v.imag == 0 and v.real >= 0)


_TOKEN = re.compile(r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            # skip whitespace to report the offending character
            p = pos
            while p < len(src) and src[p].isspace():
                p += 1
            raise ExprSyntaxError(f"unexpected character {src[p]!r}", p)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        t = self.tokens[self.k]
        self.k += 1
        return t

    def expect(self, value: str):
        kind, text, pos = self.take()
        if text != value or kind == "end":
            raise ExprSyntaxError(f"expected {value!r}, found {text or 'end of input'!r}", pos)

    def parse(self) -> Expr:
        e = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected token {text!r}", pos)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            e = BinOp(op, e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op, pos = self.take()[1], self.peek()[2]
            rhs = self.factor()
            if op == "/" and isinstance(rhs, Const) and complex(rhs.value) == 0:
                raise ExprSyntaxError("division by literal zero", pos)
            e = BinOp(op, e, rhs)
        return e

    def factor(self) -> Expr:
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return Neg(self.factor())
        b = self.base()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, text, pos = self.take()
            if kind != "num" or not text.isdigit():
                raise ExprSyntaxError("exponent must be a non-negative integer literal", pos)
            return Pow(b, int(text))
        return b

    def base(self) -> Expr:
        kind, text, pos = self.take()
        if kind == "num":
            return Const(complex(float(text)))
        if kind == "name":
            if text == "i":
                return Const(1j)
            if text in VARS:
                return Var(text)
            if text in FUNCS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(text, arg)
            raise ExprSyntaxError(f"unknown identifier {text!r}", pos)
        if kind == "op" and text == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ExprSyntaxError(f"unexpected {text or 'end of input'!r}", pos)


def parse_expr(src: str) -> Expr:
    if not src or not src.strip():
        raise ExprSyntaxError("empty expression", 0)
    return _Parser(src).parse()


def random_trig_source(rng: np.random.Generator, degree: int = 3, scale: float = 1.0) -> str:
    """Source text of a trig polynomial sum c * cos(a.x) + d * sin(a.x) with integer
    frequency vectors a, |a|_1 <= degree, and complex Gaussian coefficients c, d."""
    terms = []
    freqs = [(a, b, c) for a in range(degree + 1) for b in range(-degree, degree + 1)
             for c in range(-degree, degree + 1) if a + abs(b) + abs(c) <= degree]
    chosen = rng.choice(len(freqs), size=min(6, len(freqs)), replace=False)
    for k in sorted(chosen):
        a, b, c = freqs[k]
        arg = " + ".join(f"{m}*{v}" for m, v in zip((a, b, c), VARS) if m) or "0"
        arg = arg.replace("+ -", "- ")
        for fn in ("cos", "sin"):
            re_, im_ = (float(v) for v in np.round(rng.normal(scale=scale, size=2), 6))
            terms.append(f"({re_!r} + {im_!r}*i)*{fn}({arg})")
    return " + ".join(terms)
