"""Hermite-type tau functions attached to Maya diagrams."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from gmpy2 import mpq

from . import hermite as _hermite
from .exactmath import Poly, bareiss_det, wronskian, wronskian_interpolated
from .exactmath.linalg import taylor_at
from .maya import MayaDiagram, MayaError


class TauError(ValueError):
    pass


@dataclass(frozen=True)
class TauFunction:
    """``tau_M`` together with the translation that brought ``M`` to standard form."""

    diagram: MayaDiagram
    poly: Poly
    shift: int = 0

    def __post_init__(self):
        if self.poly.is_zero():
            raise TauError(f"vanishing tau function for {self.diagram!r}")

    @property
    def degree(self) -> int:
        return self.poly.degree

    def to_json(self) -> dict:
        return {"diagram": self.diagram.to_json(), "poly": self.poly.to_json(), "degree": self.degree}

    @classmethod
    def from_json(cls, data) -> "TauFunction":
        tau = cls(MayaDiagram.from_json(data["diagram"]), Poly.from_json(data["poly"]))
        if tau.degree != data.get("degree", tau.degree):
            raise TauError("stored degree does not match the polynomial")
        return tau


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = field(default=())

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts):
            raise TauError("partition parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise TauError("partition parts must be non-increasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def diagram(self) -> MayaDiagram:
        """Standard-form diagram with occupied sites ``t_i = lambda_i + q - i``."""
        q = len(self.parts)
        return MayaDiagram((), (lam + q - i for i, lam in enumerate(self.parts, start=1)))

    @classmethod
    def from_diagram(cls, M: MayaDiagram) -> "Partition":
        if not M.is_standard():
            raise TauError("diagram is not in standard form")
        ts = sorted(M.plus, reverse=True)
        q = len(ts)
        return cls(tuple(t - q + i for i, t in enumerate(ts, start=1)))


def partitions(n: int, largest: int | None = None):
    """All partitions of ``n`` in reverse lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def expected_degree(M: MayaDiagram) -> int:
    """``sum(t_i) - q(q-1)/2`` for the standard-form translate of ``M``."""
    S, _ = M.standardize()
    q = len(S.plus)
    return sum(S.plus) - q * (q - 1) // 2


def tau_standard(M: MayaDiagram) -> TauFunction:
    if not M.is_standard():
        raise TauError(f"{M!r} is not in standard form")
    return TauFunction(M, _wronskian_of(tuple(sorted(M.plus))))


@lru_cache(maxsize=4096)
def _wronskian_of(ts: tuple[int, ...]) -> Poly:
    if not ts:
        return Poly.constant(1)
    hs = [_hermite.hermite(t) for t in ts]
    if len(ts) > 2:
        # degree and parity are known, so a handful of integer determinants suffice
        d = sum(ts) - len(ts) * (len(ts) - 1) // 2
        w = wronskian_interpolated(hs, d, d % 2, lambda i, x: _hermite_taylor(ts[i], x))
        if w is not None:
            return w
    return wronskian(hs)


@lru_cache(maxsize=None)
def _hermite_taylor(t: int, x: int) -> list:
    return taylor_at([c.numerator for c in _hermite.hermite(t).coeffs], x)


def wronskian_bareiss(ts: Sequence[int]) -> Poly:
    """Hermite Wronskian by polynomial Bareiss elimination (independent route)."""
    if not ts:
        return Poly.constant(1)
    return wronskian([_hermite.hermite(t) for t in sorted(ts)])


def pseudo_wronskian(s: Sequence[int], t: Sequence[int]) -> Poly:
    """Mixed determinant: conjugate Hermite rows for ``s``, Wronskian rows for ``t``."""
    r, q = len(s), len(t)
    n = r + q
    if n == 0:
        return Poly.constant(1)
    rows = []
    for si in s:
        rows.append([_hermite.conjugate_hermite(si + j) for j in range(n)])
    for tj in sorted(t):
        h = _hermite.hermite(tj)
        row = [h]
        for _ in range(n - 1):
            row.append(row[-1].derivative())
        rows.append(row)
    return bareiss_det(rows)


def tau_normalized_frobenius(s: Sequence[int], t: Sequence[int]) -> Poly:
    if len(set(s)) != len(s) or len(set(t)) != len(t):
        raise TauError("repeated indices in Frobenius data")
    s = sorted(s, reverse=True)
    t = sorted(t, reverse=True)
    r, q = len(s), len(t)
    denom = 1
    for i in range(r):
        for j in range(i + 1, r):
            denom *= 2 * s[j] - 2 * s[i]
    for i in range(q):
        for j in range(i + 1, q):
            denom *= 2 * t[i] - 2 * t[j]
    pw = pseudo_wronskian(s, t)
    if (r * q) % 2:
        pw = -pw
    return pw.scale_by(mpq(denom))


def tau_normalized(M: MayaDiagram) -> Poly:
    """Normalized pseudo-Wronskian; identical for ``M`` and every translate of ``M``."""
    s, t = M.frobenius()
    return tau_normalized_frobenius(s, t)


@lru_cache(maxsize=8192)
def tau_of_diagram(M: MayaDiagram) -> TauFunction:
    """Tau function of an arbitrary diagram via its standard-form translate."""
    S, b = M.standardize()
    return TauFunction(M, tau_standard(S).poly, b)


def schur_tau(lam: Partition | Sequence[int]) -> Poly:
    """Jacobi-Trudi route: ``C_lambda * det(H_{lambda_i + j - i} / (lambda_i + j - i)!)``."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    n = len(lam)
    if n == 0:
        return Poly.constant(1)
    parts = lam.parts

    def b(m: int) -> Poly:
        if m < 0:
            return Poly()
        return _hermite.hermite(m).scale_by(math.factorial(m))

    matrix = [[b(parts[i] + j - i) for j in range(n)] for i in range(n)]
    c = 2 ** (n * (n - 1) // 2)
    for i, lam_i in enumerate(parts, start=1):
        c *= math.factorial(lam_i + n - i)
    return bareiss_det(matrix) * c


def clear_caches() -> None:
    """Forget memoized tau functions (needed after swapping the Hermite tables)."""
    _wronskian_of.cache_clear()
    _hermite_taylor.cache_clear()
    tau_of_diagram.cache_clear()


__all__ = [
    "MayaError",
    "Partition",
    "TauError",
    "TauFunction",
    "clear_caches",
    "expected_degree",
    "partitions",
    "pseudo_wronskian",
    "schur_tau",
    "tau_normalized",
    "tau_normalized_frobenius",
    "wronskian_bareiss",
    "tau_of_diagram",
    "tau_standard",
]
