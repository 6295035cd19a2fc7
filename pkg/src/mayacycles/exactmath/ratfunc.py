"""Rational functions kept in lowest terms with a monic denominator."""

from __future__ import annotations

from .poly import Poly, format_poly, poly_gcd, poly_lcm, to_scalar


class RatFunc:
    """Quotient ``num/den`` of polynomials, normalized at construction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced: bool = False):
        if not isinstance(num, Poly):
            num = Poly.constant(num)
        if den is None:
            den = Poly.constant(1)
        elif not isinstance(den, Poly):
            den = Poly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.constant(1)
        elif not reduced and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.lc()
        if lead != 1:
            num = num.scale_by(lead)
            den = den.monic()
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p, reduced=True)

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @property
    def radicand(self) -> int:
        return self.num.radicand or self.den.radicand

    # -- arithmetic ----------------------------------------------------
    @staticmethod
    def _lift(other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        return RatFunc(Poly.constant(to_scalar(other)), reduced=True)

    def __add__(self, other) -> "RatFunc":
        o = self._lift(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        g = poly_gcd(self.den, o.den)
        if g.degree > 0:
            d1 = self.den.exact_div(g)
            d2 = o.den.exact_div(g)
            return RatFunc(self.num * d2 + o.num * d1, self.den * d2)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den, reduced=True)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other) -> "RatFunc":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "RatFunc":
        return self._lift(other) + (-self)

    def __mul__(self, other) -> "RatFunc":
        o = self._lift(other)
        if self.is_zero() or o.is_zero():
            return RatFunc(Poly())
        # cross-cancel before multiplying to keep degrees small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num.exact_div(g1) if g1.degree > 0 else self.num
        d2 = o.den.exact_div(g1) if g1.degree > 0 else o.den
        n2 = o.num.exact_div(g2) if g2.degree > 0 else o.num
        d1 = self.den.exact_div(g2) if g2.degree > 0 else self.den
        return RatFunc(n1 * n2, d1 * d2, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num, reduced=True)

    def __truediv__(self, other) -> "RatFunc":
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, reduced=True)

    # -- calculus ------------------------------------------------------
    def derivative(self) -> "RatFunc":
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def logderiv(self) -> "RatFunc":
        """``f'/f`` in lowest terms."""
        if self.is_zero():
            raise ZeroDivisionError("log-derivative of zero")
        return logderiv_poly(self.num) - logderiv_poly(self.den)

    def compose_scale(self, c) -> "RatFunc":
        """Return ``f(c*z)``."""
        return RatFunc(self.num.compose_scale(c), self.den.compose_scale(c))

    def reflect(self) -> "RatFunc":
        return RatFunc(self.num.reflect(), self.den.reflect(), reduced=True)

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(x) / d

    def in_square(self) -> "RatFunc":
        """For an even function ``f(z) = g(z**2)`` return ``g``."""
        num, den = self.num, self.den
        if num.parity() == -1 and den.parity() == -1:
            z = Poly((0, 1))
            num, den = num.exact_div(z), den.exact_div(z)
        if num.parity() != 1 or den.parity() != 1:
            raise ValueError("rational function is not even")
        return RatFunc(num.in_square(), den.in_square())

    # -- comparison / output -------------------------------------------
    def __eq__(self, other) -> bool:
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RatFunc":
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))

    def format(self, var: str = "z") -> str:
        if self.is_polynomial():
            return format_poly(self.num.scale_by(self.den.lc()), var)
        return f"({format_poly(self.num, var)})/({format_poly(self.den, var)})"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def logderiv_poly(p: Poly) -> RatFunc:
    """``p'/p`` for a nonzero polynomial."""
    if p.is_zero():
        raise ZeroDivisionError("log-derivative of the zero polynomial")
    return RatFunc(p.derivative(), p)


def ratfunc_logderiv(f: RatFunc) -> RatFunc:
    return f.logderiv()



def common_denominator(fs, hint: Poly | None = None) -> tuple[Poly, list[Poly]]:
    """``D`` and numerators ``P_i`` with ``f_i = P_i / D`` for every ``f_i``.

    ``hint`` is a candidate common multiple of the denominators (known from
    the construction, say); it is used when every denominator divides it,
    which skips the gcd computations.  Otherwise ``D`` is the monic lcm.
    """
    fs = list(fs)
    if hint is not None and hint:
        D = hint.monic()
        nums = []
        for f in fs:
            try:
                nums.append(f.num * D.exact_div(f.den))
            except ArithmeticError:
                break
        else:
            return D, nums
    D = Poly.constant(1)
    for f in fs:
        if f.den != D and f.den.degree > 0:
            D = poly_lcm(D, f.den)
    return D, [f.num * D.exact_div(f.den) if f.den != D else f.num for f in fs]
