"""Maya diagrams and the combinatorics of cyclic flip sequences.

A Maya diagram is a set of integers containing every sufficiently negative
integer and no sufficiently positive one.  It is stored by its Frobenius
pair: ``minus`` holds ``-m-1`` for each vacant negative site ``m`` and
``plus`` holds the occupied non-negative sites.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence


class MayaError(ValueError):
    """Malformed Maya diagram data."""


class MayaDiagram:
    __slots__ = ("minus", "plus", "_hash")

    def __init__(self, minus: Iterable[int] = (), plus: Iterable[int] = ()):
        minus = frozenset(int(s) for s in minus)
        plus = frozenset(int(t) for t in plus)
        if any(s < 0 for s in minus) or any(t < 0 for t in plus):
            raise MayaError("Frobenius entries must be non-negative")
        self.minus = minus
        self.plus = plus
        self._hash = hash((minus, plus))

    # -- constructors ----------------------------------------------------
    @classmethod
    def vacuum(cls) -> "MayaDiagram":
        return cls()

    @classmethod
    def from_predicate(cls, lo: int, hi: int, member: Callable[[int], bool]) -> "MayaDiagram":
        """``(-inf, lo)`` together with the sites in ``[lo, hi)`` accepted by ``member``."""
        minus = []
        plus = []
        for m in range(min(lo, 0), max(hi, 0)):
            inside = m < lo or (m < hi and member(m))
            if m < 0 and not inside:
                minus.append(-m - 1)
            elif m >= 0 and inside:
                plus.append(m)
        return cls(minus, plus)

    @classmethod
    def from_set(cls, lo: int, members: Iterable[int]) -> "MayaDiagram":
        """``(-inf, lo)`` union a finite set of sites at or above ``lo``."""
        members = set(members)
        if any(m < lo for m in members):
            raise MayaError("finite part must lie at or above lo")
        hi = max(members, default=lo) + 1
        return cls.from_predicate(lo, hi, members.__contains__)

    # -- basic queries ---------------------------------------------------
    def __contains__(self, m: int) -> bool:
        if m >= 0:
            return m in self.plus
        return (-m - 1) not in self.minus

    @property
    def lo(self) -> int:
        """Every site below ``lo`` is occupied."""
        return -max(self.minus) - 1 if self.minus else 0

    @property
    def hi(self) -> int:
        """Every site at or above ``hi`` is vacant."""
        return max(self.plus) + 1 if self.plus else 0

    def window(self) -> range:
        return range(self.lo, self.hi)

    @property
    def index(self) -> int:
        return len(self.plus) - len(self.minus)

    def frobenius(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """``(s, t)``, both listed in descending order."""
        return tuple(sorted(self.minus, reverse=True)), tuple(sorted(self.plus, reverse=True))

    def is_standard(self) -> bool:
        return not self.minus and 0 not in self.plus

    def first_vacancy(self) -> int:
        m = self.lo
        while m in self:
            m += 1
        return m

    def standardize(self) -> tuple["MayaDiagram", int]:
        """Return ``(M - b, b)`` with ``M - b`` in standard form."""
        b = self.first_vacancy()
        return self.shift(-b), b

    # -- transformations -------------------------------------------------
    def shift(self, k: int) -> "MayaDiagram":
        if k == 0:
            return self
        return MayaDiagram.from_predicate(self.lo + k, self.hi + k, lambda m: (m - k) in self)

    def __add__(self, k: int) -> "MayaDiagram":
        return self.shift(k)

    def __sub__(self, k: int) -> "MayaDiagram":
        return self.shift(-k)

    def flip(self, m: int) -> tuple["MayaDiagram", int]:
        """Toggle site ``m``; sigma is +1 when ``m`` was occupied before."""
        minus, plus = set(self.minus), set(self.plus)
        occupied = m in self
        if m >= 0:
            (plus.discard if occupied else plus.add)(m)
        else:
            (minus.add if occupied else minus.discard)(-m - 1)
        return MayaDiagram(minus, plus), (1 if occupied else -1)

    def multi_flip(self, sites: Iterable[int]) -> "MayaDiagram":
        out = self
        for m in sites:
            out = out.flip(m)[0]
        return out

    # -- block coordinates -------------------------------------------------
    def block_coordinates(self) -> tuple[int, ...]:
        betas = []
        filled = True
        for m in range(self.lo, self.hi + 1):
            here = m in self
            if here != filled:
                betas.append(m)
                filled = here
        return tuple(betas)

    @property
    def genus(self) -> int:
        return (len(self.block_coordinates()) - 1) // 2

    # -- comparison / output ---------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, MayaDiagram):
            return NotImplemented
        return self.minus == other.minus and self.plus == other.plus

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Xi{self.block_coordinates()}"

    def to_json(self) -> dict:
        return {"minus": sorted(self.minus), "plus": sorted(self.plus)}

    @classmethod
    def from_json(cls, data) -> "MayaDiagram":
        return cls(data["minus"], data["plus"])

    def render(self, lo: int | None = None, hi: int | None = None, ascii: bool = False) -> str:
        """Glyph run over ``[lo, hi)`` with a bar just left of the origin."""
        full, empty, bar = ("#", ".", "|") if ascii else ("■", "□", "┃")
        lo = min(self.lo, 0) - 1 if lo is None else lo
        hi = max(self.hi, 1) + 1 if hi is None else hi
        out = ["..."]
        for m in range(lo, hi):
            if m == 0:
                out.append(bar)
            out.append(full if m in self else empty)
        out.append("...")
        return "".join(out)


def from_frobenius(s: Sequence[int], t: Sequence[int]) -> MayaDiagram:
    """Diagram with Frobenius symbol ``(s | t)``; the lists must not repeat."""
    for name, seq in (("s", s), ("t", t)):
        if len(set(seq)) != len(seq):
            raise MayaError(f"repeated entries in {name}")
        if any(x < 0 for x in seq):
            raise MayaError(f"negative entries in {name}")
    return MayaDiagram(s, t)


def shift(M: MayaDiagram, k: int) -> MayaDiagram:
    return M.shift(k)


def flip(M: MayaDiagram, m: int) -> tuple[MayaDiagram, int]:
    return M.flip(m)


def upsilon(M: MayaDiagram, M2: MayaDiagram) -> frozenset[int]:
    """Symmetric difference of two Maya diagrams."""
    lo = min(M.lo, M2.lo)
    hi = max(M.hi, M2.hi)
    return frozenset(m for m in range(lo, hi) if (m in M) != (m in M2))


def xi(betas: Sequence[int]) -> MayaDiagram:
    """``(-inf, b0) U [b1, b2) U ...`` for a non-decreasing odd-length list."""
    betas = list(betas)
    if len(betas) % 2 == 0:
        raise MayaError("block coordinates must have odd length")
    if any(b > c for b, c in zip(betas, betas[1:])):
        raise MayaError("block coordinates must be non-decreasing")
    lo = betas[0]
    members = set()
    for i in range(1, len(betas), 2):
        members.update(range(betas[i], betas[i + 1]))
    return MayaDiagram.from_predicate(lo, max(betas) + 1, members.__contains__)


def block_coordinates(M: MayaDiagram) -> tuple[int, ...]:
    return M.block_coordinates()


def from_blocks(betas: Sequence[int]) -> MayaDiagram:
    """Inverse of :func:`block_coordinates`; requires strictly increasing input."""
    if any(b >= c for b, c in zip(betas, betas[1:])):
        raise MayaError("block coordinates must be strictly increasing")
    return xi(betas)


def interlace(Ms: Sequence[MayaDiagram]) -> MayaDiagram:
    k = len(Ms)
    if k < 1:
        raise MayaError("interlacing needs at least one diagram")
    lo = min(k * M.lo for M in Ms)
    hi = max(k * M.hi + k for M in Ms)
    return MayaDiagram.from_predicate(lo, hi, lambda m: (m // k) in Ms[m % k])


def modular_decompose(M: MayaDiagram, k: int) -> list[MayaDiagram]:
    if k < 1:
        raise MayaError("modulus must be positive")
    out = []
    for i in range(k):
        lo = (M.lo - i) // k
        hi = (M.hi - i) // k + 1
        out.append(MayaDiagram.from_predicate(lo, hi, lambda m, i=i: (k * m + i) in M))
    return out


def cyclic_signature(M: MayaDiagram, k: int) -> tuple[tuple[int, ...], int]:
    """``k``-signature ``(p_0, ..., p_{k-1})`` and period ``p`` of ``M``."""
    sig = tuple(2 * D.genus + 1 for D in modular_decompose(M, k))
    return sig, sum(sig)


def admissible_shifts(p: int) -> list[int]:
    """Positive shifts ``k`` for which ``(p, k)``-cyclic diagrams exist."""
    if p < 1:
        raise MayaError("period must be positive")
    return list(range(p, 0, -2))


def odd_compositions(p: int, k: int) -> list[tuple[int, ...]]:
    """All ordered ways to write ``p`` as ``k`` odd positive parts, lexicographic."""
    if k == 0:
        return [()] if p == 0 else []
    out = []
    for first in range(1, p - (k - 1) + 1, 2):
        for rest in odd_compositions(p - first, k - 1):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True)
class KBlockCoordinates:
    """``k``-block coordinates ``(beta^(0) | ... | beta^(k-1))``."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(int(b) for b in block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise MayaError("need at least one block")
        for block in blocks:
            if len(block) % 2 == 0:
                raise MayaError(f"block {block} has even length")
            if any(b > c for b, c in zip(block, block[1:])):
                raise MayaError(f"block {block} is not non-decreasing")

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def signature(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def p(self) -> int:
        return sum(self.signature)

    def is_degenerate(self) -> bool:
        return any(b == c for block in self.blocks for b, c in zip(block, block[1:]))

    def diagram(self) -> MayaDiagram:
        return interlace([xi(block) for block in self.blocks])

    @classmethod
    def parse(cls, text: str) -> "KBlockCoordinates":
        """Parse ``"0,3,4|2"`` style notation."""
        try:
            blocks = [tuple(int(x) for x in part.split(",") if x.strip()) for part in text.split("|")]
        except ValueError as exc:
            raise MayaError(f"malformed coordinates {text!r}") from exc
        if any(not b for b in blocks):
            raise MayaError(f"empty block in {text!r}")
        return cls(tuple(blocks))

    @classmethod
    def of(cls, M: MayaDiagram, k: int) -> "KBlockCoordinates":
        return cls(tuple(D.block_coordinates() for D in modular_decompose(M, k)))

    def __str__(self) -> str:
        return "|".join(",".join(str(b) for b in block) for block in self.blocks)

    def to_json(self) -> dict:
        return {"k": self.k, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data) -> "KBlockCoordinates":
        kb = cls(tuple(tuple(b) for b in data["blocks"]))
        if "k" in data and data["k"] != kb.k:
            raise MayaError("k does not match the number of blocks")
        return kb


@dataclass(frozen=True)
class FlipSequence:
    mus: tuple[int, ...]
    k: int

    def apply(self, M: MayaDiagram) -> MayaDiagram:
        return M.multi_flip(self.mus)

    def permuted(self, perm: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.mus[i] for i in perm)


def canonical_flip_sequence(kblocks: KBlockCoordinates) -> FlipSequence:
    """Flip sites ``k*beta^(i)_j + i`` in residue-class-major, ascending order."""
    k = kblocks.k
    mus = tuple(k * b + i for i, block in enumerate(kblocks.blocks) for b in block)
    return FlipSequence(mus, k)


def precedes(m: int, n: int, k: int) -> bool:
    """The total order: residue class mod ``k`` first, then magnitude."""
    return (m % k, m) <= (n % k, n)


def enumerate_cyclic(
    p: int, k: int, max_coord: int, *, degenerate: bool = False
) -> Iterator[KBlockCoordinates]:
    """All normalized ``k``-block coordinates of ``(p, k)``-cyclic diagrams.

    The first coordinate is pinned to 0 and every entry lies in
    ``[0, max_coord]``.  Blocks are strictly increasing unless
    ``degenerate`` is set, which also admits repeated entries (a site
    flipped twice within one cycle).
    """
    if k not in admissible_shifts(p):
        raise MayaError(f"shift k={k} is not admissible for period p={p}")
    if max_coord < 0:
        raise MayaError("max_coord must be non-negative")
    pick = itertools.combinations_with_replacement if degenerate else itertools.combinations
    coords = range(max_coord + 1)
    for sig in odd_compositions(p, k):
        first = [(0,) + rest for rest in pick(range(0 if degenerate else 1, max_coord + 1), sig[0] - 1)]
        others = [list(pick(coords, n)) for n in sig[1:]]
        for combo in itertools.product(first, *others):
            yield KBlockCoordinates(tuple(combo))


def brute_force_cyclic(p: int, bound: int, margin: int = 2) -> set[MayaDiagram]:
    """Diagrams with ``|Upsilon(M, M+1)| == p`` found by exhaustive search.

    Every occupation pattern of the window ``[-margin, bound + margin)`` is
    tried (everything below the window occupied).  A hit is kept when its
    flip sites lie in ``[0, bound]`` with the smallest at 0, which is the
    normalization used by :func:`enumerate_cyclic`.
    """
    found = set()
    lo, hi = -margin, bound + margin
    sites = range(lo, hi)
    for r in range(len(sites) + 1):
        for subset in itertools.combinations(sites, r):
            M = MayaDiagram.from_set(lo, subset)
            ups = upsilon(M, M.shift(1))
            if len(ups) == p and min(ups) == 0 and max(ups) <= bound:
                found.add(M)
    return found
