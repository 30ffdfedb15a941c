import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from tuttemaps.corpus import named_map  # noqa: E402

MAPS_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "maps")


@pytest.fixture
def k3():
    return named_map("k3")


@pytest.fixture
def torus6():
    return named_map("torus6")


@pytest.fixture
def triangle_dbl():
    return named_map("triangle_dbl")


@pytest.fixture
def edge_map():
    return named_map("edge")


@pytest.fixture
def loop_map():
    return named_map("loop")


def E(m, *names):
    """Edge mask from half-edge tokens."""
    mask = 0
    for n in names:
        mask |= 1 << m.edge(n)
    return mask


def V(m, token):
    return m.vertex(token)
