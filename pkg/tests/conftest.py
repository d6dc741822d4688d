import functools

import pytest

from realcount import LabelledGraph
from realcount.fixtures import fixture
from realcount.graphs import henneberg_generate


@functools.lru_cache(maxsize=None)
def catalog(n):
    return henneberg_generate(n)


@functools.lru_cache(maxsize=None)
def catalog_up_to(n):
    out = []
    for k in range(3, n + 1):
        out.extend(catalog(k))
    return tuple(out)


def k3():
    return LabelledGraph(3, ((0, 1), (1, 2), (0, 2)))


@pytest.fixture
def k4minus():
    return fixture("k4minus")


@pytest.fixture
def prism3():
    return fixture("prism3")


@pytest.fixture
def k33():
    return fixture("k33")


@pytest.fixture
def fig2():
    return fixture("fig2")
