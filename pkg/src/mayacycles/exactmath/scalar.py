"""Exact scalars: rationals and elements of a quadratic field Q(sqrt(m)).

Rationals are represented by ``gmpy2.mpq`` directly.  Irrational elements
``a + b*sqrt(m)`` are :class:`ExactScalar` instances.  Arithmetic on an
``ExactScalar`` collapses back to ``mpq`` whenever the surd part cancels, so
a polynomial whose coefficients all happen to be rational never carries a
radicand around.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from gmpy2 import mpq, mpz

Rational = type(mpq(0))


class RadicandMismatch(ArithmeticError):
    """Raised when two scalars from different quadratic fields meet."""


def to_rational(value) -> mpq:
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to ``mpq``."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, (int, type(mpz(0)))):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/")
            return mpq(int(num), int(den))
        return mpq(int(text))
    if isinstance(value, ExactScalar):
        raise TypeError(f"{value!r} is not rational")
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, m)`` with ``n == s*s*m`` and ``m`` squarefree (n >= 0)."""
    if n < 0:
        raise ValueError("negative radicands are not supported")
    if n == 0:
        return 0, 0
    s, m = 1, 1
    d = 2
    rest = n
    while d * d <= rest:
        count = 0
        while rest % d == 0:
            rest //= d
            count += 1
        s *= d ** (count // 2)
        if count % 2:
            m *= d
        d += 1
    m *= rest
    return s, m


class ExactScalar:
    """The number ``a + b*sqrt(m)`` with rational ``a``, ``b`` and squarefree ``m > 1``.

    Use :func:`make_scalar` rather than the constructor when the surd part
    may vanish; it returns a plain ``mpq`` in that case.  The constructor
    itself accepts ``b == 0`` (or ``m`` in {0, 1}) and folds the value into
    the rational part.
    """

    __slots__ = ("a", "b", "m")

    def __init__(self, a=0, b=0, m: int = 0):
        a = to_rational(a)
        b = to_rational(b)
        m = int(m)
        if m < 0:
            raise ValueError("radicand must be non-negative")
        if b and m > 1:
            s, m = squarefree_split(m)
            b = b * s
        if m == 1:
            a, b, m = a + b, mpq(0), 0
        if not b or m == 0:
            b, m = mpq(0), 0
        self.a = a
        self.b = b
        self.m = m

    # -- helpers -----------------------------------------------------
    @staticmethod
    def _parts(other, m: int):
        if isinstance(other, ExactScalar):
            if other.m and m and other.m != m:
                raise RadicandMismatch(f"sqrt({m}) and sqrt({other.m}) cannot be mixed")
            return other.a, other.b, other.m or m
        return to_rational(other), mpq(0), m

    def is_rational(self) -> bool:
        return self.m == 0

    def conjugate(self):
        return make_scalar(self.a, -self.b, self.m)

    def norm(self) -> mpq:
        """Field norm ``a^2 - m b^2``."""
        return self.a * self.a - self.m * self.b * self.b

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        try:
            a, b, m = self._parts(other, self.m)
        except TypeError:
            return NotImplemented
        return make_scalar(self.a + a, self.b + b, m)

    __radd__ = __add__

    def __neg__(self):
        return make_scalar(-self.a, -self.b, self.m)

    def __sub__(self, other):
        try:
            a, b, m = self._parts(other, self.m)
        except TypeError:
            return NotImplemented
        return make_scalar(self.a - a, self.b - b, m)

    def __rsub__(self, other):
        try:
            a, b, m = self._parts(other, self.m)
        except TypeError:
            return NotImplemented
        return make_scalar(a - self.a, b - self.b, m)

    def __mul__(self, other):
        try:
            a, b, m = self._parts(other, self.m)
        except TypeError:
            return NotImplemented
        return make_scalar(self.a * a + m * self.b * b, self.a * b + self.b * a, m)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero scalar")
        return make_scalar(self.a / n, -self.b / n, self.m)

    def __truediv__(self, other):
        if isinstance(other, ExactScalar):
            return self * other.inverse()
        try:
            q = to_rational(other)
        except TypeError:
            return NotImplemented
        return make_scalar(self.a / q, self.b / q, self.m)

    def __rtruediv__(self, other):
        try:
            q = to_rational(other)
        except TypeError:
            return NotImplemented
        return q * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = mpq(1)
        base = self
        while n:
            if n & 1:
                result = base * result
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactScalar):
            return (self.a, self.b, self.m) == (other.a, other.b, other.m)
        try:
            q = to_rational(other)
        except TypeError:
            return NotImplemented
        return self.m == 0 and self.a == q

    def __hash__(self) -> int:
        if self.m == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def __repr__(self) -> str:
        return f"ExactScalar({self.a}, {self.b}, {self.m})"

    def __str__(self) -> str:
        if self.m == 0:
            return str(self.a)
        return f"({self.a} + {self.b}*sqrt({self.m}))"


Scalar = Union[mpq, ExactScalar]


def make_scalar(a, b=0, m: int = 0) -> Scalar:
    """Build ``a + b*sqrt(m)``; returns ``mpq`` when the value is rational."""
    value = ExactScalar(a, b, m)
    if value.m == 0:
        return value.a
    return value


def sqrt_rational(q) -> Scalar:
    """Exact square root of a non-negative rational."""
    q = to_rational(q)
    if q < 0:
        raise ValueError("square root of a negative rational")
    num, den = int(q.numerator), int(q.denominator)
    s, m = squarefree_split(num * den)
    return make_scalar(0, mpq(s, den), m) if m > 1 else mpq(s, den)


def radicand_of(value) -> int:
    return value.m if isinstance(value, ExactScalar) else 0


def scalar_to_json(value):
    if isinstance(value, ExactScalar) and value.m:
        return {"a": _qstr(value.a), "b": _qstr(value.b), "m": value.m}
    if isinstance(value, ExactScalar):
        value = value.a
    return _qstr(to_rational(value))


def scalar_from_json(data) -> Scalar:
    if isinstance(data, dict):
        return make_scalar(to_rational(data["a"]), to_rational(data["b"]), int(data["m"]))
    return to_rational(data)


def _qstr(q: mpq) -> str:
    return f"{q.numerator}/{q.denominator}"
