import numpy as np
import pytest
from hypothesis import strategies as st

from discord_lab.dominance import inside_tetrahedron

# Tetrahedron vertices; any physical coefficient triple is a convex combination.
VERTICES = np.array(
    [[1, 1, -1], [-1, -1, -1], [1, -1, 1], [-1, 1, 1]], dtype=float
)


def random_valid_triples(n: int, seed: int = 0) -> np.ndarray:
    """Uniform coefficient triples from the tetrahedron, by rejection."""
    rng = np.random.default_rng(seed)
    out = np.empty((n, 3))
    filled = 0
    while filled < n:
        block = rng.random((max(256, 4 * (n - filled)), 3)) * 2.0 - 1.0
        ok = block[inside_tetrahedron(block)]
        take = min(len(ok), n - filled)
        out[filled : filled + take] = ok[:take]
        filled += take
    return out


@pytest.fixture
def rand_triples():
    return random_valid_triples


@st.composite
def bell_triples(draw):
    """Valid (c1, c2, c3) triples as convex combinations of the vertices."""
    w = np.array([draw(st.floats(0.0, 1.0)) for _ in range(4)])
    total = w.sum()
    if total < 1e-9:
        w, total = np.ones(4), 4.0
    c = (w / total) @ VERTICES
    return float(c[0]), float(c[1]), float(c[2])


@st.composite
def directions(draw):
    theta = draw(st.floats(0.0, np.pi))
    phi = draw(st.floats(0.0, 2.0 * np.pi, exclude_max=True))
    return theta, phi
