"""Dense univariate polynomials over Q or Q(sqrt(m))."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import mpq, mpz

from .kronecker import exact_quotient_ints, int_form, max_bits, mul_ints, pack, unpack
from .scalar import (
    ExactScalar,
    RadicandMismatch,
    Scalar,
    make_scalar,
    radicand_of,
    scalar_from_json,
    scalar_to_json,
    to_rational,
)

_ZERO = mpq(0)
_ONE = mpq(1)


def _coerce(c) -> Scalar:
    if isinstance(c, ExactScalar):
        return c.a if c.m == 0 else c
    return to_rational(c)


def _is_scalar(c) -> bool:
    return isinstance(c, (int, mpz, mpq, Fraction, str, ExactScalar))


def _all_rational(cs) -> bool:
    return not any(isinstance(c, ExactScalar) for c in cs)


def _fast_exact_div(a: "Poly", b: "Poly") -> "Poly | None":
    """Integer-kernel quotient for rational operands; None when it does not apply."""
    if not a.coeffs or len(b.coeffs) < 2 or len(a.coeffs) < len(b.coeffs):
        return None
    fa, fb = a.int_form(), b.int_form()
    if fa is None or fb is None:
        return None
    qs = exact_quotient_ints(fa[0], fb[0])
    if qs is None:
        return None
    # a quotient of primitive polynomials is primitive (Gauss)
    return Poly._from_int_form(qs, fa[1] / fb[1])


class Poly:
    """Polynomial in one variable with exact coefficients, ascending degree.

    Instances are immutable.  The zero polynomial has no coefficients and
    degree ``-inf``.
    """

    __slots__ = ("coeffs", "_hash", "_ints")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self._hash = None
        self._ints = None
        m = 0
        for c in self.coeffs:
            cm = radicand_of(c)
            if cm:
                if m and cm != m:
                    raise RadicandMismatch(f"coefficients mix sqrt({m}) and sqrt({cm})")
                m = cm

    @classmethod
    def _raw(cls, cs: list) -> "Poly":
        # cs already coerced; strip and wrap without re-validation
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(cs)
        obj._hash = None
        obj._ints = None
        return obj

    @classmethod
    def _from_int_form(cls, ints: list, scale: mpq) -> "Poly":
        # ints must be primitive and scale positive, as produced by int_form
        obj = cls._raw([c * scale for c in ints])
        obj._ints = (ints, scale)
        return obj

    def int_form(self) -> tuple[list, mpq] | None:
        """``(ints, scale)`` with ``self == scale * ints`` and ``ints`` primitive;
        None when a coefficient is irrational.  Cached."""
        if self._ints is None:
            self._ints = int_form(self.coeffs) if _all_rational(self.coeffs) else False
        return self._ints or None

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    @classmethod
    def from_ints(cls, ints: Sequence[int]) -> "Poly":
        return cls._raw([mpq(i) for i in ints])

    # -- basic properties ----------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def radicand(self) -> int:
        for c in self.coeffs:
            m = radicand_of(c)
            if m:
                return m
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def is_rational(self) -> bool:
        return self.radicand == 0

    def __len__(self) -> int:
        return len(self.coeffs)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if not _is_scalar(other):
                return NotImplemented
            other = Poly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return Poly._raw(cs)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if not _is_scalar(other):
                return NotImplemented
            other = Poly.constant(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        cs = list(a) + [_ZERO] * (n - len(a))
        for i, c in enumerate(b):
            cs[i] = cs[i] - c
        return Poly._raw(cs)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if not _is_scalar(other):
                return NotImplemented
            c = _coerce(other)
            if not c:
                return Poly()
            return Poly._raw([x * c for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        if len(a) * len(b) > 400:
            fa, fb = self.int_form(), other.int_form()
            if fa is not None and fb is not None:
                # a product of primitive polynomials is primitive (Gauss)
                return Poly._from_int_form(mul_ints(fa[0], fb[0]), fa[1] * fb[1])
        if len(a) < len(b):
            a, b = b, a
        cs = [_ZERO] * (len(a) + len(b) - 1)
        for j, bj in enumerate(b):
            if not bj:
                continue
            for i, ai in enumerate(a):
                cs[i + j] += ai * bj
        return Poly._raw(cs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_by(self, c) -> "Poly":
        """Divide every coefficient by the scalar ``c``."""
        c = _coerce(c)
        inv = 1 / c if isinstance(c, ExactScalar) else _ONE / c
        return Poly._raw([x * inv for x in self.coeffs])

    def __divmod__(self, other: "Poly"):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        inv = lead.inverse() if isinstance(lead, ExactScalar) else _ONE / lead
        if len(rem) <= db:
            return Poly(), self
        quo = [_ZERO] * (len(rem) - db)
        bcs = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv
            quo[k - db] = q
            off = k - db
            for i in range(db):
                rem[off + i] = rem[off + i] - q * bcs[i]
            rem[k] = _ZERO
        return Poly._raw(quo), Poly._raw(rem[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient of a division known to be exact; raises if a remainder appears."""
        q = _fast_exact_div(self, other)
        if q is not None:
            return q
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale_by(self.coeffs[-1])

    # -- calculus and substitution --------------------------------------
    def derivative(self, k: int = 1) -> "Poly":
        if k < 0:
            raise ValueError("derivative order must be non-negative")
        cs = self.coeffs
        for _ in range(k):
            cs = [cs[i] * i for i in range(1, len(cs))]
        return Poly._raw(list(cs))

    def __call__(self, x):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_scale(self, c) -> "Poly":
        """Return ``p(c*z)``."""
        c = _coerce(c)
        cs = []
        power = _ONE
        for x in self.coeffs:
            cs.append(x * power)
            power = power * c
        return Poly([_coerce(x) for x in cs])

    def reflect(self) -> "Poly":
        """Return ``p(-z)``."""
        return Poly._raw([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def parity(self):
        """+1 if even, -1 if odd, 0 if neither (zero polynomial counts as even)."""
        even = all(not c for c in self.coeffs[1::2])
        if even:
            return 1
        odd = all(not c for c in self.coeffs[0::2])
        return -1 if odd else 0

    def in_square(self) -> "Poly":
        """For an even polynomial ``p(z) = q(z**2)`` return ``q``."""
        if any(self.coeffs[1::2]):
            raise ValueError("polynomial is not even")
        return Poly._raw(list(self.coeffs[0::2]))

    # -- comparison and output -----------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly.constant(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def proportional_to(self, other: "Poly") -> bool:
        """True when ``self == c*other`` for a nonzero scalar ``c``."""
        if not self.coeffs or not other.coeffs:
            return not self.coeffs and not other.coeffs
        return self * other.lc() == other * self.lc()

    def to_json(self) -> list:
        return [scalar_to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Poly":
        return cls(scalar_from_json(c) for c in data)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: Poly, var: str = "z") -> str:
    if not p.coeffs:
        return "0"
    terms = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if isinstance(c, ExactScalar):
            body = str(c)
            sign = "+"
        else:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = str(a) if (a != 1 or not mono) else ""
        text = body + ("*" if body and mono else "") + mono
        terms.append((sign, text))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in terms[1:]:
        out += f" {sign} {text}"
    return out


Z = Poly((0, 1))


def _primitive_ints(p: Poly) -> list:
    """Integer coefficients of the primitive part of a rational polynomial."""
    return p.int_form()[0]


def _heuristic_gcd(a: Poly, b: Poly) -> Poly | None:
    """Evaluate at a large power of two, take the integer gcd, read the digits back.

    A candidate is accepted only when it divides both inputs exactly, so a
    wrong guess costs time but never correctness.  Returns None on giving up.
    """
    fa, fb = _primitive_ints(a), _primitive_ints(b)
    bits = min(max_bits(fa), max_bits(fb)) + 6
    ndig = min(len(fa), len(fb))
    for _ in range(6):
        gamma = gmpy2.gcd(pack(fa, bits), pack(fb, bits))
        digits = unpack(gamma, bits, ndig)
        if digits is not None:
            cand = Poly.from_ints(digits)
            if cand.degree <= 0:
                return Poly.constant(1)
            ic = _primitive_ints(cand)
            if exact_quotient_ints(fa, ic) is not None and exact_quotient_ints(fb, ic) is not None:
                return cand.monic()
        bits += bits // 2 + 7
    return None


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor.

    Rational inputs go through the heuristic integer gcd first; Euclid over
    the coefficient field is the fallback and handles quadratic surds.
    """
    if not a.coeffs:
        return b.monic()
    if not b.coeffs:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return Poly.constant(1)
    if not a.radicand and not b.radicand:
        g = _heuristic_gcd(a, b)
        if g is not None:
            return g
    return _euclid_gcd(a, b)


def _euclid_gcd(a: Poly, b: Poly) -> Poly:
    a, b = a.monic(), b.monic()
    if a.degree < b.degree:
        a, b = b, a
    while b.coeffs:
        _, r = divmod(a, b)
        a, b = b, r.monic()
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    g = poly_gcd(a, b)
    if g.degree > 0:
        a = a.exact_div(g)
    return (a * b).monic()


def to_scalar(c) -> Scalar:
    return _coerce(c)


def from_scalar_parts(a_part: Poly, b_part: Poly, m: int) -> Poly:
    """Build ``A(z) + sqrt(m) B(z)`` from two rational polynomials."""
    n = max(len(a_part), len(b_part))
    return Poly(make_scalar(a_part.coeff(i), b_part.coeff(i), m) for i in range(n))
