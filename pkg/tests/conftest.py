import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from knotdet.diagram import build_universe, parse_pd

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

# Known determinants, cross-checked against the Goeritz oracle in tests.
CORPUS = {
    "trefoil": 3,
    "figure8": 5,
    "hopf": 2,
    "k5_1": 5,
    "k5_2": 7,
    "k6_1": 9,
}

KNOTS = [name for name in CORPUS if name != "hopf"]

# A one-crossing unknot with a nugatory crossing (curl); not in the
# acceptance corpus but a useful degenerate case.
KINK = "X 1 2 2 1\n"


def fixture_path(name: str) -> pathlib.Path:
    suffix = ".graph" if name == "k23" else ".pd"
    return FIXTURES / f"{name}{suffix}"


def load(name: str):
    return parse_pd(fixture_path(name).read_text())


@pytest.fixture(scope="session")
def corpus():
    return {name: load(name) for name in CORPUS}


@pytest.fixture(scope="session")
def corpus_universes(corpus):
    return {name: build_universe(d) for name, d in corpus.items()}


@pytest.fixture(scope="session")
def trefoil():
    return load("trefoil")


@pytest.fixture(scope="session")
def hopf():
    return load("hopf")


@pytest.fixture(scope="session")
def figure8():
    return load("figure8")
