"""Integer polynomial kernels by Kronecker substitution.

A polynomial with integer coefficients is packed into one big integer by
evaluating it at ``2**bits``; products and exact quotients of the packed
integers are then unpacked digit by digit.  gmpy2 does the heavy lifting.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import gmpy2
from gmpy2 import mpq, mpz


def int_form(coeffs: Sequence[mpq]) -> tuple[list[mpz], mpq]:
    """Split rational coefficients as ``scale * ints`` with ``ints`` primitive."""
    den = gmpy2.lcm(*[c.denominator for c in coeffs]) if coeffs else mpz(1)
    if den == 1:
        ints = [c.numerator for c in coeffs]
    else:
        ints = [c.numerator * (den // c.denominator) for c in coeffs]
    g = gmpy2.gcd(*ints) if ints else mpz(0)
    if g > 1:
        ints = [c // g for c in ints]
    elif g == 0:
        g = mpz(1)
    return ints, mpq(g, den)


def max_bits(ints: Sequence[mpz]) -> int:
    if not ints:
        return 0
    return max(max(ints).bit_length(), min(ints).bit_length())


@lru_cache(maxsize=4096)
def _offset(bits: int, n: int) -> mpz:
    """``sum(half * 2**(bits*i))`` for ``i < n`` with ``half = 2**(bits-1)``."""
    ones = ((mpz(1) << (bits * n)) - 1) // ((mpz(1) << bits) - 1)
    return ones << (bits - 1)


def pack(ints: Sequence[mpz], bits: int) -> mpz:
    """``sum(ints[i] * 2**(bits*i))``.

    Digits are shifted to be non-negative so gmpy2's packer can do the work.
    """
    if not ints:
        return mpz(0)
    if max_bits(ints) >= bits:
        return _evaluate(ints, mpz(1) << bits)
    half = mpz(1) << (bits - 1)
    return gmpy2.pack([c + half for c in ints], bits) - _offset(bits, len(ints))


def _evaluate(ints: Sequence[mpz], base: mpz) -> mpz:
    # plain evaluation for coefficients too wide to be digits
    if len(ints) <= 16:
        acc = mpz(0)
        for c in reversed(ints):
            acc = acc * base + c
        return acc
    mid = len(ints) // 2
    return _evaluate(ints[:mid], base) + _evaluate(ints[mid:], base) * base**mid


def unpack(value: mpz, bits: int, n: int) -> list[mpz] | None:
    """The ``n`` signed base-``2**bits`` digits of ``value``, least significant first.

    Returns None if ``value`` needs more than ``n`` digits.
    """
    v = value + _offset(bits, n)
    if v < 0 or v.bit_length() > bits * n:
        return None
    half = mpz(1) << (bits - 1)
    digits = [d - half for d in gmpy2.unpack(v, bits)]
    if len(digits) < n:
        digits.extend([-half] * (n - len(digits)))
    return digits


def mul_ints(a: Sequence[mpz], b: Sequence[mpz]) -> list[mpz]:
    bits = max_bits(a) + max_bits(b) + min(len(a), len(b)).bit_length() + 2
    return unpack(pack(a, bits) * pack(b, bits), bits, len(a) + len(b) - 1)


def exact_quotient_ints(a: Sequence[mpz], b: Sequence[mpz]) -> list[mpz] | None:
    """Quotient ``a / b`` when ``b`` divides ``a`` in Z[x], else None.

    The digit width covers the Mignotte bound on the quotient, and the
    candidate is confirmed by multiplying back.
    """
    dq = len(a) - len(b)
    if dq < 0:
        return None
    bits = max_bits(a) + len(a).bit_length() + dq + 2
    na, nb = pack(a, bits), pack(b, bits)
    q, r = gmpy2.f_divmod(na, nb)
    if r:
        return None
    qs = unpack(q, bits, dq + 1)
    if qs is None:
        return None
    if mul_ints(qs, b) != list(a):
        return None
    return qs
