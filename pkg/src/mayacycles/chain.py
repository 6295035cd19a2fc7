"""Maya p-cycles and the rational solutions of the cyclic dressing chain they produce."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .exactmath import Poly, RatFunc, Z, common_denominator, scalar_from_json, scalar_to_json
from .maya import (
    KBlockCoordinates,
    MayaDiagram,
    canonical_flip_sequence,
)
from .tau import TauFunction, expected_degree, tau_of_diagram


class CycleError(ValueError):
    pass


@dataclass(frozen=True)
class CycleSpec:
    kblocks: KBlockCoordinates
    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(i) for i in self.perm)
        object.__setattr__(self, "perm", perm)
        if sorted(perm) != list(range(self.kblocks.p)):
            raise CycleError(f"perm {perm} is not a permutation of 0..{self.kblocks.p - 1}")

    @property
    def p(self) -> int:
        return self.kblocks.p

    @property
    def k(self) -> int:
        return self.kblocks.k

    @classmethod
    def parse(cls, coords: str, perm: str | Sequence[int]) -> "CycleSpec":
        if isinstance(perm, str):
            perm = tuple(int(x) for x in perm.split(",") if x.strip())
        return cls(KBlockCoordinates.parse(coords), tuple(perm))

    def __str__(self) -> str:
        return f"Xi({self.kblocks}) perm ({','.join(map(str, self.perm))})"

    def to_json(self) -> dict:
        return {"kblocks": self.kblocks.to_json(), "perm": list(self.perm)}

    @classmethod
    def from_json(cls, data) -> "CycleSpec":
        return cls(KBlockCoordinates.from_json(data["kblocks"]), tuple(data["perm"]))


@dataclass
class ChainSolution:
    """Rational solution ``(w_i, a_i)`` of the p-cyclic dressing chain.

    ``taus`` and ``diagrams`` are empty for solutions obtained by scaling,
    since those are no longer tied to a Maya cycle.
    """

    ws: list[RatFunc]
    a: list
    delta: object
    k: int = 0
    spec: CycleSpec | None = None
    flip_seq: list[int] = field(default_factory=list)
    sigmas: list[int] = field(default_factory=list)
    diagrams: list[MayaDiagram] = field(default_factory=list)
    taus: list[TauFunction] = field(default_factory=list)

    @property
    def p(self) -> int:
        return len(self.ws)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "delta": scalar_to_json(self.delta),
            "perm": list(self.spec.perm) if self.spec else [],
            "spec": self.spec.to_json() if self.spec else None,
            "flip_seq": list(self.flip_seq),
            "sigmas": list(self.sigmas),
            "as": [scalar_to_json(x) for x in self.a],
            "taus": [t.to_json() for t in self.taus],
            "ws": [w.to_json() for w in self.ws],
        }

    @classmethod
    def from_json(cls, data) -> "ChainSolution":
        spec = CycleSpec.from_json(data["spec"]) if data.get("spec") else None
        taus = [TauFunction.from_json(t) for t in data.get("taus", [])]
        return cls(
            ws=[RatFunc.from_json(w) for w in data["ws"]],
            a=[scalar_from_json(x) for x in data["as"]],
            delta=scalar_from_json(data["delta"]),
            k=data.get("k", 0),
            spec=spec,
            flip_seq=list(data.get("flip_seq", [])),
            sigmas=list(data.get("sigmas", [])),
            diagrams=[t.diagram for t in taus],
            taus=taus,
        )


def build_cycle(spec: CycleSpec) -> ChainSolution:
    k, p = spec.k, spec.p
    mus = canonical_flip_sequence(spec.kblocks).permuted(spec.perm)
    M0 = spec.kblocks.diagram()
    diagrams = [M0]
    sigmas = []
    for mu in mus:
        nxt, sigma = diagrams[-1].flip(mu)
        diagrams.append(nxt)
        sigmas.append(sigma)
    if diagrams[-1] != M0.shift(k):
        raise CycleError(f"flip sequence {mus} does not close the cycle")
    ext = list(mus) + [mus[0] + k]
    a = [2 * (ext[i] - ext[i + 1]) for i in range(p)]
    taus = [tau_of_diagram(M) for M in diagrams]
    if not taus[-1].poly.proportional_to(taus[0].poly):
        raise CycleError("tau of the closing diagram is not proportional to the first")
    ws = [_w_from_taus(sigmas[i], taus[i].poly, taus[i + 1].poly) for i in range(p)]
    return ChainSolution(
        ws=ws,
        a=[mpq(x) for x in a],
        delta=mpq(2 * k),
        k=k,
        spec=spec,
        flip_seq=list(mus),
        sigmas=sigmas,
        diagrams=diagrams,
        taus=taus,
    )


def _w_from_taus(sigma: int, t0: Poly, t1: Poly) -> RatFunc:
    # sigma z + t1'/t1 - t0'/t0 over the denominator t0 t1
    t0, t1 = _primitive(t0), _primitive(t1)
    num = Z * t0 * t1 * sigma + t1.derivative() * t0 - t0.derivative() * t1
    return RatFunc(num, t0 * t1)


def _primitive(p: Poly) -> Poly:
    return p.scale_by(p.lc())


@dataclass
class ChainReport:
    residuals: list[RatFunc]
    sum_a_ok: bool
    first_integral_ok: bool
    closure_ok: bool

    @property
    def equations_ok(self) -> list[bool]:
        return [r.is_zero() for r in self.residuals]

    @property
    def ok(self) -> bool:
        return all(self.equations_ok) and self.sum_a_ok and self.first_integral_ok and self.closure_ok

    def summary(self) -> str:
        marks = "".join("." if ok else "x" for ok in self.equations_ok)
        return (
            f"chain [{marks}] sum(a)={'ok' if self.sum_a_ok else 'FAIL'} "
            f"first-integral={'ok' if self.first_integral_ok else 'FAIL'} "
            f"closure={'ok' if self.closure_ok else 'FAIL'}"
        )


def tau_product(sol: ChainSolution) -> Poly | None:
    """Product of the distinct tau functions of a cycle: a common multiple of
    every denominator in the chain and in its Noumi-Yamada form."""
    if not sol.taus:
        return None
    polys: list[Poly] = []
    for tau in sol.taus[:-1]:
        if not any(tau.poly.proportional_to(q) for q in polys):
            polys.append(tau.poly)
    out = Poly.constant(1)
    for q in polys:
        out = out * _primitive(q)
    return out


def chain_residuals(ws: Sequence[RatFunc], a: Sequence, denominator: Poly | None = None) -> list[RatFunc]:
    """``(w_i + w_{i+1})' + w_{i+1}^2 - w_i^2 - a_i`` for each ``i`` mod ``p``.

    Every ``w_i`` is put over one denominator ``D``, so each residual is
    ``N_i / D^2`` and only the polynomial ``N_i`` has to be formed.
    ``denominator`` optionally proposes ``D`` (see :func:`common_denominator`).
    """
    return _chain_residuals(ws, a, common_denominator(ws, denominator))


def _chain_residuals(ws, a, common) -> list[RatFunc]:
    p = len(ws)
    D, W = common
    dD = D.derivative()
    D2 = D * D
    sq = [x * x for x in W]
    out = []
    for i in range(p):
        j = (i + 1) % p
        s = W[i] + W[j]
        num = s.derivative() * D - s * dD + sq[j] - sq[i] - D2 * a[i]
        out.append(RatFunc(num, D2) if num else RatFunc(Poly()))
    return out


def first_integral(ws: Sequence[RatFunc], delta, denominator: Poly | None = None) -> RatFunc:
    """``sum(w_i) + (delta/2) z``; identically zero for a p-cycle solution."""
    return _first_integral(delta, common_denominator(ws, denominator))


def _first_integral(delta, common) -> RatFunc:
    D, W = common
    num = sum(W, Poly()) + Z * D * (delta / 2)
    return RatFunc(num, D) if num else RatFunc(Poly())


def verify_chain(sol: ChainSolution) -> ChainReport:
    common = common_denominator(sol.ws, tau_product(sol))
    residuals = _chain_residuals(sol.ws, sol.a, common)
    sum_a_ok = sum(sol.a) == -sol.delta
    first = _first_integral(sol.delta, common)
    closure_ok = True
    if sol.diagrams and sol.k:
        closure_ok = sol.diagrams[-1] == sol.diagrams[0].shift(sol.k)
    return ChainReport(residuals, sum_a_ok, first.is_zero(), closure_ok)


def hirota_residual(f: Poly, g: Poly, eps) -> Poly:
    """``D^2 f.g - 2z D f.g + eps f g`` with ``D f.g = f'g - g'f``."""
    f1, g1 = f.derivative(), g.derivative()
    f2, g2 = f1.derivative(), g1.derivative()
    d2 = f2 * g - f1 * g1 * 2 + g2 * f
    d1 = f1 * g - g1 * f
    return d2 - Z * d1 * 2 + f * g * eps


def verify_bilinear(M1: MayaDiagram, m: int) -> tuple[int, bool]:
    """Check the bilinear relation between ``tau_{M1}`` and ``tau_{M1 + {m}}``."""
    if m in M1:
        raise CycleError(f"site {m} is already occupied")
    M2, _ = M1.flip(m)
    f = tau_of_diagram(M2).poly
    g = tau_of_diagram(M1).poly
    eps = 2 * (f.degree - g.degree)
    if f.degree != expected_degree(M2) or g.degree != expected_degree(M1):
        return eps, False
    return eps, hirota_residual(f, g, eps).is_zero()


def verify_cycle_bilinear(sol: ChainSolution) -> list[bool]:
    """Bilinear check for each single flip of a built cycle, state-adding side first."""
    out = []
    for i, mu in enumerate(sol.flip_seq):
        before, after = sol.diagrams[i], sol.diagrams[i + 1]
        smaller = after if mu in before else before
        out.append(verify_bilinear(smaller, mu)[1])
    return out


def apply_symmetry(sol: ChainSolution, which: str, scale=None) -> ChainSolution:
    """Reversal, cyclic relabelling, or rescaling ``w(z) -> c w(c z)``."""
    p = sol.p
    if which == "cyclic":
        idx = [(i + 1) % p for i in range(p)]
        return ChainSolution(
            ws=[sol.ws[i] for i in idx],
            a=[sol.a[i] for i in idx],
            delta=sol.delta,
            k=sol.k,
            spec=sol.spec,
            flip_seq=[sol.flip_seq[i] for i in idx] if sol.flip_seq else [],
            sigmas=[sol.sigmas[i] for i in idx] if sol.sigmas else [],
            diagrams=sol.diagrams[1:] + [sol.diagrams[1].shift(sol.k)] if sol.diagrams else [],
            taus=[],
        )
    if which == "reversal":
        # w_i -> -w_{-i}; the chain then holds with a_i -> -a_{-i-1} and the shift changes sign
        return ChainSolution(
            ws=[-sol.ws[(-i) % p] for i in range(p)],
            a=[-sol.a[(-i - 1) % p] for i in range(p)],
            delta=-sol.delta,
            k=sol.k,
        )
    if which == "scaling":
        if scale is None or not scale:
            raise ValueError("scaling needs a nonzero factor")
        return ChainSolution(
            ws=[w.compose_scale(scale) * scale for w in sol.ws],
            a=[x * scale * scale for x in sol.a],
            delta=sol.delta * scale * scale,
            k=sol.k,
        )
    raise ValueError(f"unknown symmetry {which!r}")
