import pytest
from hypothesis import settings

settings.register_profile("ci", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("ci")

from stmod import fixtures, module as md, resolve, steenrod as st


@pytest.fixture(scope="session")
def A1():
    return st.A(1)


@pytest.fixture(scope="session")
def A2():
    return st.A(2)


@pytest.fixture(scope="session")
def joker():
    return fixtures.load_fixture("Joker")


@pytest.fixture(scope="session")
def hz():
    return fixtures.load_fixture("HZ")


@pytest.fixture(scope="session")
def f2_a1(A1):
    return md.trivial_module(A1)


@pytest.fixture(scope="session")
def a1_regular(A1):
    return md.regular_module(A1)


@pytest.fixture(scope="session")
def f2_resolution(f2_a1):
    """The workhorse resolution of the trivial module over A(1)."""
    return resolve.minimal_resolution(f2_a1, 13, 30)
