from fractions import Fraction

import pytest

from tdpair import onsager_tensor, tensor_pair

CORPUS = ["1:2", "1:3", "1:2,1:3", "2:2", "3:2", "2:2,1:3", "1:2,1:3,1:5", "3:2,2:3"]
SMALL = ["1:2", "1:3", "1:2,1:3", "2:2"]

_cache: dict = {}


def build(spec: str):
    if spec not in _cache:
        _cache[spec] = onsager_tensor(spec)
    return _cache[spec]


@pytest.fixture(scope="session")
def corpus():
    return {s: build(s) for s in CORPUS}


@pytest.fixture(scope="session")
def k12():
    return build("1:2")


@pytest.fixture(scope="session")
def negatives():
    from tdpair import Matrix, TDPair

    swap2 = Matrix([[0, 1], [1, 0]])
    return {
        "a=1": tensor_pair([(1, 1)]),
        "reciprocal": tensor_pair([(1, 2), (1, Fraction(1, 2))]),
        "A=A*": TDPair(swap2, swap2),
    }


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
