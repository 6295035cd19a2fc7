"""Fraction-free determinants of polynomial matrices."""

from __future__ import annotations

from typing import Sequence

import gmpy2
from gmpy2 import mpq, mpz

from .poly import Poly


def bareiss_det(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant by Bareiss elimination over the polynomial ring.

    Every intermediate division is exact (Sylvester's identity); the
    remainder is checked rather than assumed.
    """
    n = len(matrix)
    if n == 0:
        return Poly.constant(1)
    a = [list(row) for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = Poly.constant(1)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Poly()
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j]
                if aik:
                    num = num - aik * row_k[j]
                row_i[j] = num.exact_div(prev) if k else num
            row_i[k] = Poly()
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def wronskian(ps: Sequence[Poly]) -> Poly:
    """Wronskian ``det(d^j p_i / dz^j)`` of the given polynomials."""
    if not ps:
        raise ValueError("wronskian of an empty list")
    n = len(ps)
    rows = []
    for p in ps:
        row = [p]
        for _ in range(n - 1):
            row.append(row[-1].derivative())
        rows.append(row)
    return bareiss_det(rows)


def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Bareiss determinant of an integer matrix."""
    n = len(matrix)
    if n == 0:
        return mpz(1)
    a = [[mpz(x) for x in row] for row in matrix]
    sign = 1
    prev = mpz(1)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return mpz(0)
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _taylor_at(cs: Sequence[int], x: int, n: int) -> list[int]:
    """First ``n`` Taylor coefficients ``p^(j)(x)/j!`` by repeated synthetic division."""
    cs = list(cs)
    out = []
    for _ in range(n):
        if not cs:
            out.append(mpz(0))
            continue
        acc = mpz(0)
        quot = [mpz(0)] * (len(cs) - 1)
        for i in range(len(cs) - 1, -1, -1):
            acc = acc * x + cs[i]
            if i:
                quot[i - 1] = acc
        out.append(acc)
        cs = quot
    return out


def taylor_at(cs: Sequence[int], x: int) -> list[int]:
    """All Taylor coefficients of the integer polynomial ``cs`` about ``x``."""
    return _taylor_at(cs, x, len(cs))


def _wronskian_value(ints, x: int, taylor=None) -> int:
    n = len(ints)
    if taylor is None:
        rows = [_taylor_at(cs, x, n) for cs in ints]
    else:
        rows = [_pad(taylor(i, x), n) for i in range(n)]
    scale = mpz(1)
    for j in range(2, n):
        scale *= gmpy2.fac(j)
    return int_det(rows) * scale


def _pad(row: Sequence[int], n: int) -> list[int]:
    row = list(row[:n])
    return row + [mpz(0)] * (n - len(row))


def wronskian_interpolated(
    ps: Sequence[Poly], degree: int, parity: int | None = None, taylor=None
) -> Poly | None:
    """Wronskian of integer polynomials by evaluation and interpolation.

    ``degree`` is the known degree; with ``parity`` (0 even, 1 odd) only the
    even or odd part is interpolated.  One extra evaluation point confirms the
    interpolant; None is returned if it disagrees, so callers can fall back
    to :func:`wronskian`.  ``taylor(i, x)``, if given, supplies the Taylor
    coefficients of ``ps[i]`` about ``x`` (typically from a cache).
    """
    ints = []
    for p in ps:
        if any(c.denominator != 1 for c in p.coeffs):
            return None
        ints.append([c.numerator for c in p.coeffs])

    def value(x: int) -> int:
        return _wronskian_value(ints, x, taylor)

    if parity is None:
        xs = list(range(degree + 1))
        ys = [value(x) for x in xs]
        check_x = degree + 1
        coeffs = newton_to_monomial(xs, ys)
        expected = value(check_x)
        if Poly(coeffs)(check_x) != expected:
            return None
        return Poly(coeffs)
    m = degree // 2
    xs = list(range(1, m + 2))
    us = [x * x for x in xs]
    ys = [mpq(value(x), x**parity) for x in xs]
    half = newton_to_monomial(us, ys)
    check_x = m + 2
    if Poly(half)(check_x * check_x) * check_x**parity != value(check_x):
        return None
    if value(-check_x) != (-1) ** parity * value(check_x):
        return None
    cs = [mpq(0)] * (2 * len(half) - 1 + parity)
    for i, c in enumerate(half):
        cs[2 * i + parity] = c
    return Poly(cs)


def newton_to_monomial(xs: Sequence, ys: Sequence) -> list[mpq]:
    """Coefficients (ascending) of the interpolating polynomial through ``(xs, ys)``."""
    n = len(xs)
    dd = [mpq(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [mpq(0)] * n
    coeffs[0] = dd[n - 1]
    size = 1
    for i in range(n - 2, -1, -1):
        # coeffs <- coeffs * (z - xs[i]) + dd[i]
        for k in range(size, 0, -1):
            coeffs[k] = coeffs[k - 1] - xs[i] * coeffs[k]
        coeffs[0] = dd[i] - xs[i] * coeffs[0]
        size += 1
    return coeffs
