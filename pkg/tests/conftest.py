"""Shared test oracles, independent of the package's own arithmetic paths."""

import random

import pytest

from gaincover import Graph


def mul_poly(a, b):
    """Schoolbook product of ascending coefficient lists (test-local oracle)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def poly_from_roots(roots):
    p = [1]
    for r in roots:
        p = mul_poly(p, [-r, 1])
    return p


def random_graph(rng: random.Random, n, p=0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240817)
