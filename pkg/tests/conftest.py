import numpy as np
import pytest
import qsspy as qs


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    """Conditionally skip slow tests unless '--runslow' is specified"""
    if not config.getoption("--runslow"):
        skip_slow = pytest.mark.skip(reason="need --runslow option to run")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip_slow)


@pytest.fixture
def rng():
    return np.random.default_rng()


@pytest.fixture(scope="session")
def five_qubit_code():
    return qs.dt.five_qubit_code()


@pytest.fixture(scope="session")
def vandermonde_msp():
    return qs.dt.shamir_msp(2, 3, 5)


@pytest.fixture(scope="session")
def five_qubit_scheme(five_qubit_code):
    return qs.tl.encode_stabilizer_qts(five_qubit_code, qs.tl.SecretSpec.uniform(2))


@pytest.fixture(scope="session")
def vandermonde_scheme(vandermonde_msp):
    return qs.tl.encode_msp(vandermonde_msp, qs.tl.SecretSpec.uniform(5))
