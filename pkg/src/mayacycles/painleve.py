"""Noumi-Yamada systems and the scalar fourth and fifth Painleve equations.

Everything is carried in the chain variable ``z``.  The Noumi-Yamada
variables are stored as ``F_i(z) = -(w_i + w_{i+1})(z)``; the physical
``f_i(x) = F_i(x / sqrt(D)) / sqrt(D)`` is produced on demand with the
quadratic surd tracked exactly and checked to cancel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .chain import ChainSolution, CycleSpec, build_cycle, tau_product, verify_chain
from .exactmath import Poly, RatFunc, Z, common_denominator, scalar_from_json, scalar_to_json, sqrt_rational
from .maya import KBlockCoordinates


class PainleveError(ValueError):
    pass


def _rational(f: RatFunc, what: str) -> RatFunc:
    if f.radicand:
        raise PainleveError(f"{what} did not reduce to a rational function over Q")
    return f


def scale_argument(F: RatFunc, c) -> RatFunc:
    """``c * F(c z)`` for an exact scalar ``c``; the surd must cancel."""
    return _rational(F.compose_scale(c) * c, "rescaled function")


# -- Noumi-Yamada -------------------------------------------------------------


@dataclass
class NYSolution:
    Fs: list[RatFunc]
    alphas: list
    delta: int
    chain: ChainSolution | None = None

    @property
    def p(self) -> int:
        return len(self.Fs)

    @property
    def parity(self) -> str:
        """``even`` for the A_{2n} system (p odd), ``odd`` for A_{2n-1}."""
        return "even" if self.p % 2 else "odd"

    def f_in_x(self, i: int) -> RatFunc:
        """``f_i(x) = F_i(x / sqrt(D)) / sqrt(D)``, as an exact function over Q."""
        return scale_argument(self.Fs[i], 1 / sqrt_rational(mpq(self.delta)))

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "parity": self.parity,
            "alphas": [scalar_to_json(a) for a in self.alphas],
            "Fs": [F.to_json() for F in self.Fs],
            "fs_x": [self.f_in_x(i).to_json() for i in range(self.p)],
            "chain": self.chain.to_json() if self.chain else None,
        }

    @classmethod
    def from_json(cls, data) -> "NYSolution":
        chain = ChainSolution.from_json(data["chain"]) if data.get("chain") else None
        return cls(
            Fs=[RatFunc.from_json(F) for F in data["Fs"]],
            alphas=[scalar_from_json(a) for a in data["alphas"]],
            delta=data["delta"],
            chain=chain,
        )


def to_noumi_yamada(sol: ChainSolution) -> NYSolution:
    delta = sol.delta
    if not delta > 0:
        raise PainleveError(f"shift must be positive, got {delta}")
    p = sol.p
    Fs = [-(sol.ws[i] + sol.ws[(i + 1) % p]) for i in range(p)]
    alphas = [-a / delta for a in sol.a]
    return NYSolution(Fs, alphas, int(delta), sol)


@dataclass
class NYReport:
    residuals: list[RatFunc]
    normalizations: list[RatFunc]
    alpha_sum_ok: bool
    extra_integral_ok: bool = True

    @property
    def ok(self) -> bool:
        return (
            all(r.is_zero() for r in self.residuals)
            and all(r.is_zero() for r in self.normalizations)
            and self.alpha_sum_ok
            and self.extra_integral_ok
        )

    def summary(self) -> str:
        eqs = "".join("." if r.is_zero() else "x" for r in self.residuals)
        norms = "".join("." if r.is_zero() else "x" for r in self.normalizations)
        return (
            f"noumi-yamada [{eqs}] normalization [{norms}] "
            f"sum(alpha)={'ok' if self.alpha_sum_ok else 'FAIL'}"
            + ("" if self.extra_integral_ok else " alternating-integral=FAIL")
        )


def _even_residuals(Fs, alphas, delta, common) -> list[RatFunc]:
    # f_i' - sum_j (-1)^(j+1) f_i f_{i+j} - alpha_i, rewritten in z and divided by D;
    # with F_i = P_i / Q the residual is N_i / (delta Q^2)
    p = len(Fs)
    Q, P = common
    dQ = Q.derivative()
    Q2 = Q * Q
    out = []
    for i in range(p):
        acc = Poly()
        for j in range(1, p):
            acc = acc + P[(i + j) % p] if j % 2 else acc - P[(i + j) % p]
        num = P[i].derivative() * Q - P[i] * dQ - P[i] * acc - Q2 * (delta * alphas[i])
        out.append(RatFunc(num, Q2 * delta) if num else RatFunc(Poly()))
    return out


def _odd_residuals(Fs, alphas, delta, common) -> list[RatFunc]:
    # x f_i' = f_i (1 - 2 sum alpha_{i+2k} + 2 sum sgn(2k+1-2j) f_{2j+i-1} f_{2k+i})
    #          + 2 alpha_i sum f_{i+2k}, multiplied through by D and by Q^3
    p = len(Fs)
    n = p // 2
    Q, P = common
    dQ = Q.derivative()
    Q2 = Q * Q
    Q3 = Q2 * Q
    out = []
    for i in range(p):
        lin = delta - 2 * delta * sum((alphas[(i + 2 * k) % p] for k in range(1, n)), mpq(0))
        quad = Poly()
        for j in range(1, n + 1):
            for k in range(1, n):
                prod = P[(2 * j + i - 1) % p] * P[(2 * k + i) % p]
                quad = quad + prod if 2 * k + 1 > 2 * j else quad - prod
        tail = sum((P[(i + 2 * k) % p] for k in range(1, n)), Poly())
        lhs = Z * (P[i].derivative() * Q - P[i] * dQ) * Q * delta
        rhs = P[i] * quad * 2 + P[i] * Q2 * lin + tail * Q2 * (2 * delta * alphas[i])
        num = lhs - rhs
        out.append(RatFunc(num, Q3) if num else RatFunc(Poly()))
    return out


def verify_ny(ny: NYSolution) -> NYReport:
    Fs, alphas, delta, p = ny.Fs, ny.alphas, ny.delta, ny.p
    alpha_ok = sum(alphas, mpq(0)) == 1
    common = common_denominator(Fs, tau_product(ny.chain) if ny.chain is not None else None)
    if p % 2:
        residuals = _even_residuals(Fs, alphas, delta, common)
        norms = [_sum_minus_linear(common, range(p), delta)]
        return NYReport(residuals, norms, alpha_ok)
    residuals = _odd_residuals(Fs, alphas, delta, common)
    half = mpq(delta, 2)
    norms = [
        _sum_minus_linear(common, range(1, p, 2), half),
        _sum_minus_linear(common, range(0, p, 2), half),
    ]
    extra = True
    if ny.chain is not None:
        extra = alternating_integral(ny.chain).is_zero()
    return NYReport(residuals, norms, alpha_ok, extra)


def _sum_minus_linear(common, idx, c) -> RatFunc:
    # sum of the selected F_i minus c z, over the common denominator
    Q, P = common
    num = sum((P[i] for i in idx), Poly()) - Z * Q * c
    return RatFunc(num, Q) if num else RatFunc(Poly())


def alternating_integral(sol: ChainSolution) -> RatFunc:
    """``2(w_1^2 - w_2^2 + ... - w_p^2) + a_1 - a_2 + ... - a_p`` for even ``p``."""
    p = sol.p
    if p % 2:
        raise PainleveError("alternating first integral needs an even period")
    acc = RatFunc(Poly())
    for j in range(1, p + 1):
        term = sol.ws[j % p] * sol.ws[j % p] * 2 + sol.a[j % p]
        acc = acc + term if j % 2 else acc - term
    return acc


# -- fourth Painleve -----------------------------------------------------------


@dataclass
class P4Solution:
    y: RatFunc
    a: mpq
    b: mpq
    source_spec: CycleSpec | None = None

    @property
    def params(self) -> dict:
        return {"a": self.a, "b": self.b}

    def to_json(self) -> dict:
        return {
            "y": self.y.to_json(),
            "params": {k: scalar_to_json(v) for k, v in self.params.items()},
            "source_spec": self.source_spec.to_json() if self.source_spec else None,
        }

    @classmethod
    def from_json(cls, data) -> "P4Solution":
        params = data["params"]
        spec = CycleSpec.from_json(data["source_spec"]) if data.get("source_spec") else None
        return cls(
            RatFunc.from_json(data["y"]),
            scalar_from_json(params["a"]),
            scalar_from_json(params["b"]),
            spec,
        )


def to_p4(ny: NYSolution) -> P4Solution:
    """``y(t) = sqrt(2) f_0(-sqrt(2) t)``, ``a = alpha_2 - alpha_1``, ``b = -2 alpha_0^2``."""
    if ny.p != 3:
        raise PainleveError(f"P_IV needs a 3-cycle, got p={ny.p}")
    # sqrt(2) F_0(c t) / sqrt(D) with c = -sqrt(2/D)
    c = -sqrt_rational(mpq(2, ny.delta))
    y = -scale_argument(ny.Fs[0], c)
    a0, a1, a2 = ny.alphas
    spec = ny.chain.spec if ny.chain else None
    return P4Solution(y, a2 - a1, -2 * a0 * a0, spec)


def p4_residual(y: RatFunc, a, b) -> RatFunc:
    """``y'' - y'^2/(2y) - 3/2 y^3 - 4t y^2 - 2(t^2 - a) y - b/y``."""
    if y.is_zero():
        raise PainleveError("y = 0 is not admissible (the equation divides by y)")
    t = RatFunc.from_poly(Z)
    y1 = y.derivative()
    y2 = y1.derivative()
    y_sq = y * y
    return (
        y2
        - y1 * y1 / (y * 2)
        - y_sq * y * mpq(3, 2)
        - t * y_sq * 4
        - (t * t - a) * y * 2
        - y.inverse() * b
    )


def p4_cleared_residual(y: RatFunc, a, b) -> RatFunc:
    """The P_IV residual multiplied by ``2y``; defined for ``y = 0`` as well."""
    t = RatFunc.from_poly(Z)
    y1 = y.derivative()
    y_sq = y * y
    return (
        y * y1.derivative() * 2
        - y1 * y1
        - y_sq * y_sq * 3
        - t * y_sq * y * 8
        - (t * t - a) * y_sq * 4
        - b * 2
    )


def verify_p4(s: P4Solution) -> bool:
    return p4_residual(s.y, s.a, s.b).is_zero()


def classify_three_cycle(kblocks: KBlockCoordinates) -> str:
    """``GH`` (one residue class of genus 1) or ``Okamoto`` (three classes of genus 0)."""
    if kblocks.p != 3:
        raise PainleveError("classification applies to 3-cyclic diagrams only")
    if kblocks.signature == (3,):
        return "GH"
    if kblocks.signature == (1, 1, 1):
        return "Okamoto"
    raise PainleveError(f"unexpected signature {kblocks.signature}")


# -- fifth Painleve ------------------------------------------------------------


@dataclass
class P5Solution:
    y: RatFunc
    a: mpq
    b: mpq
    c: mpq
    d: mpq
    source_spec: CycleSpec | None = None

    @property
    def params(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}

    def to_json(self) -> dict:
        return {
            "y": self.y.to_json(),
            "params": {k: scalar_to_json(v) for k, v in self.params.items()},
            "source_spec": self.source_spec.to_json() if self.source_spec else None,
        }

    @classmethod
    def from_json(cls, data) -> "P5Solution":
        ps = data["params"]
        spec = CycleSpec.from_json(data["source_spec"]) if data.get("source_spec") else None
        return cls(
            RatFunc.from_json(data["y"]),
            *(scalar_from_json(ps[k]) for k in "abcd"),
            source_spec=spec,
        )


def to_p5(ny: NYSolution) -> P5Solution:
    """``y = -f_2/f_0`` in ``t = x^2/D``; the ratio must be even in ``x``."""
    if ny.p != 4:
        raise PainleveError(f"P_V needs a 4-cycle, got p={ny.p}")
    F0, F2 = ny.Fs[0], ny.Fs[2]
    if F0.is_zero():
        raise PainleveError("f_0 vanishes identically")
    # x / sqrt(D) = z and t = z^2, so the ratio is read off in z directly
    ratio = -(F2 / F0)
    try:
        y = ratio.in_square()
    except ValueError as exc:
        raise PainleveError("-f_2/f_0 is not a function of x^2") from exc
    al0, al1, al2, al3 = ny.alphas
    delta = ny.delta
    spec = ny.chain.spec if ny.chain else None
    return P5Solution(
        y,
        al0 * al0 / 2,
        -al2 * al2 / 2,
        mpq(delta, 4) * (al3 - al1),
        -mpq(delta * delta, 32),
        spec,
    )


def p5_residual(y: RatFunc, a, b, c, d) -> RatFunc:
    t = RatFunc.from_poly(Z)
    if y.is_zero() or (y - 1).is_zero():
        raise PainleveError("y must avoid the constants 0 and 1")
    y1 = y.derivative()
    y2 = y1.derivative()
    ym1 = y - 1
    rhs = (
        y1 * y1 * (y.inverse() / 2 + ym1.inverse())
        - y1 / t
        + ym1 * ym1 / (t * t) * (y * a + y.inverse() * b)
        + y * c / t
        + y * (y + 1) * d / ym1
    )
    return y2 - rhs


def p5_cleared_residual(y: RatFunc, a, b, c, d) -> RatFunc:
    """The P_V residual multiplied by ``t^2 y (y - 1)``; defined for every ``y``."""
    t = RatFunc.from_poly(Z)
    y1 = y.derivative()
    ym1 = y - 1
    lhs = t * t * y * ym1 * y1.derivative()
    rhs = (
        t * t * y1 * y1 * (ym1 / 2 + y)
        - t * y * ym1 * y1
        + ym1 * ym1 * ym1 * (y * y * a + b)
        + t * y * y * ym1 * c
        + t * t * y * y * (y + 1) * d
    )
    return lhs - rhs


def verify_p5(s: P5Solution) -> bool:
    return p5_residual(s.y, s.a, s.b, s.c, s.d).is_zero()


# -- isotropy ------------------------------------------------------------------


def p4_isotropy(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Permutations expected to give the same P_IV solution: swap the first two flips."""
    perm = tuple(perm)
    return [perm, (perm[1], perm[0]) + perm[2:]]


def p5_isotropy(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """The Klein four-group orbit: swap flips (0,1), flips (2,3), or both."""
    a, b, c, d = perm
    return [(a, b, c, d), (b, a, c, d), (a, b, d, c), (b, a, d, c)]


@dataclass
class ScalarReduction:
    chain: ChainSolution
    ny: NYSolution
    scalar: P4Solution | P5Solution | None = None
    note: str = ""


def solve_spec(spec: CycleSpec) -> ScalarReduction:
    """Build the cycle and every reduction that applies to its period."""
    chain = build_cycle(spec)
    ny = to_noumi_yamada(chain)
    if ny.p == 3:
        return ScalarReduction(chain, ny, to_p4(ny))
    if ny.p == 4:
        if ny.Fs[0].is_zero():
            return ScalarReduction(chain, ny, None, "f_0 vanishes identically; y = -f_2/f_0 undefined")
        return ScalarReduction(chain, ny, to_p5(ny))
    return ScalarReduction(chain, ny)


@dataclass
class Certificate:
    spec: CycleSpec
    chain_ok: bool
    ny_ok: bool
    scalar: str  # "ok", "trivial", "n/a" or "FAIL"
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.chain_ok and self.ny_ok and self.scalar != "FAIL"

    def line(self) -> str:
        verdict = "pass" if self.ok else "FAIL"
        extra = f" ({self.note})" if self.note else ""
        return (
            f"{verdict} {self.spec}: chain={'ok' if self.chain_ok else 'FAIL'} "
            f"ny={'ok' if self.ny_ok else 'FAIL'} scalar={self.scalar}{extra}"
        )


def scalar_status(red: ScalarReduction) -> tuple[str, str]:
    """Verify the scalar reduction; constant ``y`` is checked in cleared-denominator form."""
    s = red.scalar
    if s is None:
        return "n/a", red.note
    if isinstance(s, P4Solution):
        if s.y.is_zero():
            ok = p4_cleared_residual(s.y, s.a, s.b).is_zero()
            return ("trivial" if ok else "FAIL"), "y = 0"
        return ("ok" if verify_p4(s) else "FAIL"), ""
    if s.y.is_zero() or (s.y - 1).is_zero():
        ok = p5_cleared_residual(s.y, s.a, s.b, s.c, s.d).is_zero()
        return ("trivial" if ok else "FAIL"), f"y = {s.y}"
    return ("ok" if verify_p5(s) else "FAIL"), ""


def certify(spec: CycleSpec) -> Certificate:
    """Build a spec and run every exact verification that applies to it."""
    red = solve_spec(spec)
    status, note = scalar_status(red)
    return Certificate(spec, verify_chain(red.chain).ok, verify_ny(red.ny).ok, status, note)
