from __future__ import annotations

import pytest
from gmpy2 import mpq

from mayacycles.chain import CycleSpec, build_cycle
from mayacycles.exactmath import Poly, RatFunc, Z
from mayacycles.maya import KBlockCoordinates
from mayacycles.painleve import (
    NYSolution,
    P4Solution,
    P5Solution,
    PainleveError,
    alternating_integral,
    certify,
    classify_three_cycle,
    p4_cleared_residual,
    p4_isotropy,
    p4_residual,
    p5_cleared_residual,
    p5_isotropy,
    p5_residual,
    scale_argument,
    solve_spec,
    to_noumi_yamada,
    to_p4,
    to_p5,
    verify_ny,
    verify_p4,
    verify_p5,
)


def P(*cs) -> Poly:
    return Poly([mpq(c) for c in cs])


def solve(coords: str, perm: str):
    return solve_spec(CycleSpec.parse(coords, perm))


@pytest.fixture(scope="module")
def gh():
    return solve("0,3,8", "2,1,0")


@pytest.fixture(scope="module")
def ex42():
    return solve("0,3,4|2", "0,1,3,2")


class TestNoumiYamada:
    def test_even_system(self, gh):
        ny = gh.ny
        assert ny.parity == "even"
        assert tuple(ny.alphas) == (-5, -3, 9)
        assert verify_ny(ny).ok

    def test_odd_system(self, ex42):
        assert ex42.ny.parity == "odd"
        assert verify_ny(ex42.ny).ok

    def test_tampered_alpha_shifts_even_residual(self, gh):
        ny = gh.ny
        delta = mpq(1, 7)
        alphas = list(ny.alphas)
        alphas[0] += delta
        bad = NYSolution(ny.Fs, alphas, ny.delta)
        rep = verify_ny(bad)
        assert rep.residuals[0] == RatFunc(Poly.constant(-delta))
        assert not rep.ok

    def test_tampered_alpha_breaks_odd_system(self, ex42):
        ny = ex42.ny
        alphas = list(ny.alphas)
        alphas[1] += 1
        assert not verify_ny(NYSolution(ny.Fs, alphas, ny.delta)).ok

    def test_published_f_in_x(self, ex42):
        f0 = RatFunc(P(0, -24, 0, -24, 0, 6), P(-24, 0, -12, 0, -6, 0, 1))
        assert ex42.ny.f_in_x(0) == f0

    def test_alternating_integral(self, ex42):
        assert alternating_integral(ex42.chain).is_zero()

    def test_alternating_integral_needs_even_period(self, gh):
        with pytest.raises(PainleveError):
            alternating_integral(gh.chain)

    def test_json_round_trip(self, ex42):
        again = NYSolution.from_json(ex42.ny.to_json())
        assert again.Fs == ex42.ny.Fs and again.alphas == ex42.ny.alphas
        assert verify_ny(again).ok

    def test_five_cycle(self):
        red = solve("0,2,5,6,7", "3,4,2,1,0")
        assert red.scalar is None
        assert verify_ny(red.ny).ok


class TestP4:
    def test_gh(self, gh):
        s = gh.scalar
        assert (s.a, s.b) == (12, -50)
        assert verify_p4(s)

    def test_okamoto_over_sqrt3(self):
        s = solve("0|3|2", "2,0,1").scalar
        assert (s.a, s.b) == (-3, mpq(-128, 9))
        assert verify_p4(s)

    def test_wrong_parameter_fails(self, gh):
        assert not p4_residual(gh.scalar.y, 11, -50).is_zero()

    def test_zero_y_raises(self):
        with pytest.raises(PainleveError):
            p4_residual(RatFunc(Poly()), 1, 0)

    def test_cleared_form_accepts_zero_solution(self):
        assert p4_cleared_residual(RatFunc(Poly()), 5, 0).is_zero()
        assert not p4_cleared_residual(RatFunc(Poly()), 5, 1).is_zero()

    def test_known_elementary_solution(self):
        # y = -2t is the classical elementary solution with (a, b) = (0, -2)
        y = RatFunc(P(0, -2))
        assert p4_residual(y, 0, -2).is_zero()

    def test_classification(self):
        assert classify_three_cycle(KBlockCoordinates.parse("0,3,8")) == "GH"
        assert classify_three_cycle(KBlockCoordinates.parse("0|1|2")) == "Okamoto"
        with pytest.raises(PainleveError):
            classify_three_cycle(KBlockCoordinates.parse("0|1,2,3"))

    def test_json_round_trip(self, gh):
        again = P4Solution.from_json(gh.scalar.to_json())
        assert again.y == gh.scalar.y and verify_p4(again)

    def test_needs_three_cycle(self, ex42):
        with pytest.raises(PainleveError):
            to_p4(ex42.ny)


class TestP5:
    def test_ex42(self, ex42):
        s = ex42.scalar
        assert (s.a, s.b, s.c, s.d) == (mpq(9, 2), mpq(-9, 8), mpq(-5, 2), mpq(-1, 2))
        y = RatFunc(P("7/6", "-1/3")) + RatFunc(P(2, 4), P(-3, -12, 12))
        assert s.y == y
        assert verify_p5(s)

    def test_wrong_parameter_fails(self, ex42):
        s = ex42.scalar
        assert not p5_residual(s.y, s.a, s.b, s.c, s.d + 1).is_zero()

    def test_constant_y_rejected(self):
        with pytest.raises(PainleveError):
            p5_residual(RatFunc(Poly.constant(1)), 0, 0, 0, 0)

    def test_cleared_form_matches(self, ex42):
        s = ex42.scalar
        assert p5_cleared_residual(s.y, s.a, s.b, s.c, s.d).is_zero()

    def test_json_round_trip(self, ex42):
        again = P5Solution.from_json(ex42.scalar.to_json())
        assert again.params == ex42.scalar.params

    def test_needs_four_cycle(self, gh):
        with pytest.raises(PainleveError):
            to_p5(gh.ny)


class TestIsotropy:
    def test_p4_orbit(self):
        assert p4_isotropy((2, 1, 0)) == [(2, 1, 0), (1, 2, 0)]

    def test_p5_orbit(self):
        assert sorted(p5_isotropy((0, 1, 3, 2))) == sorted([(0, 1, 3, 2), (1, 0, 3, 2), (0, 1, 2, 3), (1, 0, 2, 3)])

    def test_p4_swap_gives_same_y(self, gh):
        other = solve("0,3,8", "1,2,0").scalar
        assert other.y == gh.scalar.y

    def test_p5_orbit_gives_same_y(self, ex42):
        for perm in p5_isotropy((0, 1, 3, 2)):
            assert solve("0,3,4|2", ",".join(map(str, perm))).scalar.y == ex42.scalar.y


class TestCertificates:
    def test_pass_line(self):
        cert = certify(CycleSpec.parse("0,3,8", "2,1,0"))
        assert cert.ok and cert.line().startswith("pass Xi(0,3,8)")

    def test_degenerate_trivial_scalar(self):
        # consecutive flips at one site make y vanish identically
        cert = certify(CycleSpec.parse("0,0,2", "0,1,2"))
        assert cert.ok and cert.scalar == "trivial"


def test_scale_argument():
    f = RatFunc(P(0, 1), P(1, 0, 1))
    assert scale_argument(f, 2) == RatFunc(P(0, 4), P(1, 0, 4))


def test_to_noumi_yamada_rejects_nonpositive_shift():
    sol = build_cycle(CycleSpec.parse("0,3,8", "2,1,0"))
    sol.delta = mpq(0)
    with pytest.raises(PainleveError):
        to_noumi_yamada(sol)
