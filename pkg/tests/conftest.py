from __future__ import annotations

import pytest

from mayacycles import tau


@pytest.fixture(autouse=True)
def _fresh_tau_caches():
    # fault-injection tests swap the Hermite table; never leak memoized taus across tests
    yield
    tau.clear_caches()
