from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mayacycles import hermite
from mayacycles.exactmath import Poly
from mayacycles.hermite import HermiteCache, conjugate_hermite, hermite_ode_residual


def test_low_orders():
    assert hermite.hermite(0) == Poly.from_ints([1])
    assert hermite.hermite(1) == Poly.from_ints([0, 2])
    assert hermite.hermite(2) == Poly.from_ints([-2, 0, 4])
    assert hermite.hermite(3) == Poly.from_ints([0, -12, 0, 8])
    assert hermite.hermite(4) == Poly.from_ints([12, 0, -48, 0, 16])


def test_conjugate_low_orders():
    assert conjugate_hermite(2) == Poly.from_ints([2, 0, 4])
    assert conjugate_hermite(3) == Poly.from_ints([0, 12, 0, 8])


@given(st.integers(0, 40))
def test_ode_holds(n):
    assert hermite_ode_residual(n).is_zero()


@given(st.integers(1, 40))
def test_derivative_lowers_index(n):
    assert hermite.hermite(n).derivative() == hermite.hermite(n - 1) * (2 * n)


@given(st.integers(0, 30))
def test_conjugate_is_rotated_hermite(n):
    # coefficient of z^j in the conjugate is |coefficient in H_n|
    h, c = hermite.hermite(n), conjugate_hermite(n)
    assert [abs(x) for x in h.coeffs] == list(c.coeffs)


@given(st.integers(0, 30))
def test_parity_and_leading_coefficient(n):
    h = hermite.hermite(n)
    assert h.degree == n and h.lc() == 2**n
    assert h.reflect() == h * (-1) ** n


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        hermite.hermite(-1)


def test_cache_grows_on_demand():
    cache = HermiteCache(-1)
    assert cache[10] == hermite.hermite(10)
    assert len(cache.table) == 11
