"""Hermite and conjugate Hermite polynomials with exact integer coefficients."""

from __future__ import annotations

import threading

from .exactmath import Poly


class HermiteCache:
    """Grow-only table of polynomials generated by a three-term recurrence.

    ``sign`` selects the recurrence ``P_{n+1} = 2z P_n + sign*2n P_{n-1}``:
    ``-1`` gives the Hermite polynomials, ``+1`` their conjugates.
    """

    def __init__(self, sign: int = -1):
        self.sign = sign
        self.table: list[Poly] = [Poly.from_ints([1]), Poly.from_ints([0, 2])]
        self._lock = threading.Lock()

    def _next(self, n: int) -> Poly:
        # P_{n+1} from P_n, P_{n-1}
        hn = self.table[n].coeffs
        hm = self.table[n - 1].coeffs
        cs = [0] * (len(hn) + 1)
        for i, c in enumerate(hn):
            cs[i + 1] += 2 * c
        for i, c in enumerate(hm):
            cs[i] += self.sign * 2 * n * c
        return Poly(cs)

    def __getitem__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError(f"Hermite index must be non-negative, got {n}")
        table = self.table
        if n < len(table):
            return table[n]
        with self._lock:
            while len(self.table) <= n:
                self.table.append(self._next(len(self.table) - 1))
        return self.table[n]


_HERMITE = HermiteCache(-1)
_CONJUGATE = HermiteCache(+1)


def hermite(n: int) -> Poly:
    """Physicists' Hermite polynomial ``H_n`` (leading coefficient ``2**n``)."""
    return _HERMITE[n]


def conjugate_hermite(n: int) -> Poly:
    """``i**(-n) H_n(i z)``: same coefficients as ``H_n`` up to sign, all positive."""
    return _CONJUGATE[n]


def hermite_ode_residual(n: int) -> Poly:
    """``H_n'' - 2z H_n' + 2n H_n``; identically zero."""
    h = hermite(n)
    return h.derivative(2) - Poly.from_ints([0, 2]) * h.derivative() + h * (2 * n)
