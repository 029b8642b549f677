"""System documents: a JSON container holding polynomial expressions in t.

Example::

    {
      "q": "2", "nu": 0, "order": 1, "dimension": 1,
      "A": [[["-1"]], [["1"]]],
      "b": ["t"]
    }

``A[j]`` is the m x m coefficient matrix of ``sigma^j``. Expressions follow::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := base ['^' int]
    base   := int ['/' int] | 't' | '(' expr ')'

Juxtaposition (``16t^2``) is accepted as multiplication so rendered output
parses back.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .arith import RationalFunction, TPoly, format_fraction
from .errors import DocumentError, InvalidQError
from .ore import OreMatrix, QRecSystem, check_q


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        pos = self.pos if pos is None else pos
        raise DocumentError(msg, column=pos + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> TPoly:
        if not self.text.strip():
            self.error("empty expression")
        p = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return p

    def expr(self) -> TPoly:
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        acc = self.term() * sign
        while self.peek() in ("+", "-") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> TPoly:
        acc = self.factor()
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                acc = acc * self.factor()
            elif c and (c.isdigit() or c in "t("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> TPoly:
        base = self.base()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            start = self.pos
            n = self.integer()
            if n is None:
                self.error("expected a nonnegative integer exponent", start)
            return base**n
        return base

    def integer(self) -> int | None:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            return None
        return int(self.text[start : self.pos])

    def base(self) -> TPoly:
        c = self.peek()
        if c == "t":
            self.pos += 1
            return TPoly.var()
        if c == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if c.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.pos += 1
                self.skip()
                start = self.pos
                den = self.integer()
                if not den:
                    self.error("expected a positive integer denominator", start)
                return TPoly.const(Fraction(num, den))
            return TPoly.const(num)
        if not c:
            self.error("unexpected end of expression")
        self.error(f"unexpected {c!r}")


def parse_expression(text: str) -> TPoly:
    """Parse a polynomial expression in t."""
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            return TPoly.const(text)
        raise DocumentError(f"expected an expression string, got {type(text).__name__}")
    return _ExprParser(text).parse()


def _parse_q(value: Any) -> Fraction:
    try:
        if isinstance(value, bool):
            raise ValueError
        if isinstance(value, int):
            q = Fraction(value)
        elif isinstance(value, str):
            q = Fraction(value.strip())
        else:
            raise ValueError
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"q must be a rational literal, got {value!r}", path="q") from None
    try:
        return check_q(q)
    except InvalidQError:
        raise DocumentError("q must not be a root of unity", path="q") from None


def _locate(text: str, literal: str, column: int | None) -> tuple[int | None, int | None]:
    """Line/column of ``column`` inside the first occurrence of a JSON string literal."""
    needle = json.dumps(literal)
    at = text.find(needle)
    if at < 0 or column is None:
        return None, column
    at += 1 + (column - 1)
    line = text.count("\n", 0, at) + 1
    col = at - (text.rfind("\n", 0, at) + 1) + 1
    return line, col


def system_from_document(doc: dict, text: str | None = None) -> QRecSystem:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("q", "A", "b"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    q = _parse_q(doc["q"])
    nu = doc.get("nu", 0)
    if not isinstance(nu, int) or isinstance(nu, bool) or nu < 0:
        raise DocumentError("nu must be a nonnegative integer", path="nu")
    mats = doc["A"]
    b = doc["b"]
    if not isinstance(mats, list) or not mats:
        raise DocumentError("A must be a nonempty list of matrices", path="A")
    if not isinstance(b, list):
        raise DocumentError("b must be a list of expressions", path="b")
    m = doc.get("dimension", len(b))
    order = doc.get("order", len(mats) - 1)
    if m != len(b):
        raise DocumentError(f"dimension is {m} but b has {len(b)} entries", path="b")
    if order != len(mats) - 1:
        raise DocumentError(f"order is {order} but A has {len(mats)} matrices", path="A")

    def expr(value, path):
        try:
            return parse_expression(value)
        except DocumentError as exc:
            line, col = _locate(text, value, exc.column) if text and isinstance(value, str) else (None, exc.column)
            raise DocumentError(exc.message, line=line, column=col, path=path) from None

    parsed = []
    for j, M in enumerate(mats):
        if not isinstance(M, list) or len(M) != m or any(not isinstance(r, list) or len(r) != m for r in M):
            raise DocumentError(f"A[{j}] must be a {m}x{m} matrix", path=f"A[{j}]")
        parsed.append([[expr(v, f"A[{j}][{r}][{c}]") for c, v in enumerate(row)] for r, row in enumerate(M)])
    bb = [expr(v, f"b[{i}]") for i, v in enumerate(b)]
    if m == 0:
        raise DocumentError("dimension must be positive")
    return QRecSystem(OreMatrix.from_coefficient_matrices(parsed, q), tuple(bb), nu)


def parse_system(text: str) -> QRecSystem:
    """Parse a system document from JSON text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return system_from_document(doc, text)


def load_system(path: str) -> QRecSystem:
    with open(path, encoding="utf-8") as fh:
        return parse_system(fh.read())


def system_to_document(sys: QRecSystem) -> dict:
    s = 0 if sys.A.is_zero() else sys.order
    return {
        "q": format_fraction(sys.q),
        "nu": sys.nu,
        "order": s,
        "dimension": sys.m,
        "A": [[[p.to_str() for p in row] for row in sys.A.coefficient_matrix(j)] for j in range(s + 1)],
        "b": [p.to_str() for p in sys.b],
    }


def render_system(sys: QRecSystem) -> str:
    return json.dumps(system_to_document(sys), indent=2, sort_keys=True)


# --- JSON encodings of values ---------------------------------------------


def poly_json(p) -> list[str]:
    """Ascending coefficient list of ``p/q`` strings (``[]`` for zero)."""
    return [format_fraction(c) for c in p.coeffs]


def rf_json(f: RationalFunction) -> dict:
    return {"num": poly_json(f.num), "den": poly_json(f.den)}


def sigma_matrix_json(X) -> list:
    return [[poly_json(p) for p in row] for row in X]


def sigma_matrix_str(X) -> str:
    return "[" + "; ".join(", ".join(p.to_str() for p in row) for row in X) + "]"


__all__ = [
    "parse_expression",
    "parse_system",
    "load_system",
    "system_from_document",
    "system_to_document",
    "render_system",
    "poly_json",
    "rf_json",
    "sigma_matrix_json",
    "sigma_matrix_str",
]
