import pytest

from gkz import QuadratureSettings, catalog


@pytest.fixture(scope="session")
def gauss_entry():
    return catalog("gauss")


@pytest.fixture(scope="session")
def quadric_entry():
    return catalog("quadric")


@pytest.fixture(scope="session")
def square_entry():
    return catalog("square")


@pytest.fixture(scope="session")
def fast_settings():
    # unit tests compare against 1e-6..1e-8 oracles; no need for the
    # default 1e-10 budget
    return QuadratureSettings(rel_tol=1e-9, abs_tol=1e-12)
