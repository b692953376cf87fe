"""Shared instance factories for the test suite."""

import random

from cyclecover.generators import generate, random_max_degree
from cyclecover.graph import Graph


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    g = Graph()
    for v in range(n):
        g.add_vertex(v)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def mixed_instance(seed: int, max_n: int = 18) -> Graph:
    """One graph from a rotating population: sparse random, degree-capped,
    cubic, trees, cycles. Deterministic in the seed."""
    rng = random.Random(seed)
    style = seed % 6
    n = rng.randrange(3, max_n + 1)
    if style == 0:
        return gnp(n, 3.0 / max(n - 1, 1), rng)
    if style == 1:
        return gnp(n, rng.uniform(0.1, 0.7), rng)
    if style == 2:
        return random_max_degree(n, rng, max_deg=5, proposals=4 * n)
    if style == 3:
        n += n % 2
        if n < 4:
            n = 4
        return generate("cubic", n, rng.randrange(10**9))
    if style == 4:
        return generate("tree", n, rng.randrange(10**9))
    return generate("maxdeg3", n, rng.randrange(10**9))
