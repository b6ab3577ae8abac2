"""
Shared fixtures and graph generators
"""
from itertools import combinations
import random

import pytest
from hypothesis import strategies as st

from app.models.graph import Graph
from app.services.canonical_service import canonical_service
from app.services.family_service import family_service


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """G(n, p) with a seeded generator"""
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


@pytest.fixture
def code():
    return canonical_service.canonical_code


@pytest.fixture
def k2() -> Graph:
    return family_service.complete(2)


@pytest.fixture
def k3() -> Graph:
    return family_service.complete(3)


@pytest.fixture
def p3() -> Graph:
    return family_service.path(3)


@pytest.fixture
def p4() -> Graph:
    return family_service.path(4)
