import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from monoconn.graphs import Graph, is_connected, random_gnp


def random_connected(n: int, seed: int, p: float = 0.5) -> Graph:
    """Deterministic connected G(n,p) sample (re-draws until connected)."""
    rng = random.Random(seed)
    while True:
        g = random_gnp(n, p, seed=rng.randrange(2**30))
        if is_connected(g):
            return g


@pytest.fixture(scope="session")
def small_connected_pool():
    """A deterministic mixed pool of small connected graphs."""
    pool = []
    for seed in range(60):
        n = 2 + seed % 7  # n in 2..8
        pool.append(random_connected(n, seed=seed * 7 + 1))
    return pool
