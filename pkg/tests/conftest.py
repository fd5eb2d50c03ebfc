import json
import pathlib

import pytest

from flagcalc import builtin_cartan, enumerate_cosets

DATA = pathlib.Path(__file__).parent / "data"


def load_data(name):
    with open(DATA / name) as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def g94():
    """Grassmannian G_{9,4}: type A8, K={4}, 126 classes."""
    return enumerate_cosets(builtin_cartan("A", 8), {4})


@pytest.fixture(scope="session")
def g94_len8():
    return enumerate_cosets(builtin_cartan("A", 8), {4}, max_length=8)


@pytest.fixture(scope="session")
def g42():
    return enumerate_cosets(builtin_cartan("A", 3), {2})


@pytest.fixture(scope="session")
def g52():
    return enumerate_cosets(builtin_cartan("A", 4), {2})


@pytest.fixture(scope="session")
def g63():
    return enumerate_cosets(builtin_cartan("A", 5), {3})


@pytest.fixture(scope="session")
def b2t():
    return enumerate_cosets(builtin_cartan("B", 2), {1, 2})


@pytest.fixture(scope="session")
def g2t():
    return enumerate_cosets(builtin_cartan("G", 2), {1, 2})


@pytest.fixture(scope="session")
def e6p2():
    """E6 modulo the parabolic subgroup of node 2; 72 classes, top degree 21."""
    return enumerate_cosets(builtin_cartan("E", 6), {2})


@pytest.fixture(scope="session")
def cp3():
    return enumerate_cosets(builtin_cartan("A", 3), {1})
