"""Exact univariate polynomials and rational functions over the rationals.

Scalars are :class:`fractions.Fraction`. Two polynomial flavours share one
dense implementation: :class:`TPoly` (variable ``t``) and :class:`SigmaPoly`
(the commutative ring K[sigma], printed with ``x``). Mixing the two in one
arithmetic expression raises ``TypeError``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from numbers import Rational as _RationalABC
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial. Compares below every integer and
    refuses arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "MINUS_INFINITY"

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return other is not self

    def __hash__(self) -> int:
        return hash("MINUS_INFINITY")

    def __reduce__(self):
        return (_MinusInfinity, ())


MINUS_INFINITY = _MinusInfinity()


def as_fraction(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)) and not isinstance(c, bool):
        return Fraction(c)
    raise TypeError(f"expected an exact rational scalar, got {type(c).__name__}")


def format_fraction(c: Fraction) -> str:
    """``p/q`` or ``p``."""
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Poly:
    """Dense univariate polynomial with rational coefficients (ascending)."""

    __slots__ = ("coeffs",)
    VAR = "z"

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def const(cls, c: Scalar):
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1):
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def var(cls):
        return cls.monomial(1)

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def valuation(self) -> int:
        """Largest k with x^k dividing self."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise AssertionError("unreachable")

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if type(other) is not type(self):
                raise TypeError(
                    f"cannot mix {type(self).__name__} and {type(other).__name__}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return type(self)((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return type(self)()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = type(self).one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, c):
        """Division by a nonzero scalar only."""
        if isinstance(c, Poly):
            return NotImplemented
        c = as_fraction(c)
        if c == 0:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        return type(self)(x / c for x in self.coeffs)

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return type(other) is type(self) and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == type(self)((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coeffs))

    # -- helpers ----------------------------------------------------------
    def shift_up(self, k: int):
        """Multiply by x^k."""
        if not self.coeffs or k == 0:
            return self
        return type(self)([0] * k + list(self.coeffs))

    def shift_down(self, k: int):
        """Exact division by x^k; raises if not divisible."""
        if k and any(self.coeffs[:k]):
            raise ValueError(f"polynomial not divisible by {self.VAR}^{k}")
        return type(self)(self.coeffs[k:])

    def scale_var(self, c: Scalar):
        """p(c*x)."""
        c = as_fraction(c)
        out, p = [], Fraction(1)
        for a in self.coeffs:
            out.append(a * p)
            p *= c
        return type(self)(out)

    def monic(self):
        return self / self.lc if self.coeffs else self

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive in Z[x]; 0 for zero."""
        from math import gcd

        if not self.coeffs:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def to_str(self, var: str | None = None) -> str:
        """Descending powers, explicit signs, implicit multiplication."""
        var = var or self.VAR
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = format_fraction(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if a == 1:
                    body = mono
                elif a.denominator == 1:
                    body = f"{a.numerator}{mono}"
                else:
                    body = f"({format_fraction(a)}){mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_str()!r})"


class TPoly(Poly):
    """Polynomial in t."""

    __slots__ = ()
    VAR = "t"


class SigmaPoly(Poly):
    """Polynomial in the (commuting) shift sigma; printed with ``x``."""

    __slots__ = ()
    VAR = "x"


def poly_divmod(a: Poly, d: Poly):
    """Euclidean division: ``a = quotient*d + remainder``, deg remainder < deg d."""
    if not isinstance(d, Poly) or type(d) is not type(a):
        raise TypeError("poly_divmod needs two polynomials of the same kind")
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    cls = type(a)
    r = list(a.coeffs)
    dd = len(d.coeffs) - 1
    lc = d.coeffs[-1]
    if len(r) - 1 < dd:
        return cls(), a
    quo = [Fraction(0)] * (len(r) - dd)
    for k in range(len(r) - 1 - dd, -1, -1):
        c = r[k + dd] / lc
        quo[k] = c
        if c:
            for i, x in enumerate(d.coeffs):
                r[k + i] -= c * x
    return cls(quo), cls(r[:dd])


def exact_div(a: Poly, d: Poly) -> Poly:
    q, r = poly_divmod(a, d)
    if r:
        raise ArithmeticError(f"{d} does not divide {a}")
    return q


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def t_power_split(f: Poly) -> tuple[int, Poly]:
    """Write ``f = var^k * g`` with ``g(0) != 0``."""
    if f.is_zero():
        raise ValueError("t_power_split of the zero polynomial")
    k = f.valuation()
    return k, type(f)(f.coeffs[k:])


class RationalFunction:
    """Reduced quotient of TPolys with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, TPoly):
            num = TPoly((num,))
        if den is None:
            den = TPoly.one()
        elif not isinstance(den, TPoly):
            den = TPoly((den,))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = TPoly(), TPoly.one()
            return
        g = poly_gcd(num, den)
        if not g.is_constant():
            num, den = exact_div(num, g), exact_div(den, g)
        lc = den.lc
        self.num, self.den = num / lc, den / lc

    @classmethod
    def t_power(cls, k: int) -> "RationalFunction":
        """t^k for any integer k."""
        if k >= 0:
            return cls(TPoly.monomial(k))
        return cls(TPoly.one(), TPoly.monomial(-k))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, TPoly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalFunction(TPoly((other,)))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("rational function division by zero")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def normalized(self) -> "RationalFunction":
        return RationalFunction(self.num, self.den)

    def __call__(self, x: Scalar) -> Fraction:
        return self.num(x) / self.den(x)

    def to_str(self) -> str:
        if self.den == 1:
            return self.num.to_str()
        n, d = self.num.to_str(), self.den.to_str()
        if sum(1 for c in self.num.coeffs if c) > 1:
            n = f"({n})"
        if sum(1 for c in self.den.coeffs if c) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_str()!r})"


def substitute_qt(f, q: Scalar):
    """``f(q*t)`` for a TPoly or RationalFunction."""
    q = as_fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    if isinstance(f, Poly):
        return f.scale_var(q)
    return RationalFunction(f.num.scale_var(q), f.den.scale_var(q))


def as_rational_function(f) -> RationalFunction:
    if isinstance(f, RationalFunction):
        return f
    if isinstance(f, TPoly):
        return RationalFunction(f)
    return RationalFunction(TPoly((as_fraction(f),)))


