import os
import random
import sys
from fractions import Fraction
from itertools import combinations

import pytest

from wedgehom.graph import Graph

SEED = int(os.environ.get("WEDGEHOM_SEED", "20240611"))


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_graph(rng: random.Random, n: int, p: float = 0.35) -> Graph:
    edges = frozenset((u, v) for u, v in combinations(range(n), 2) if rng.random() < p)
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.3) -> Graph:
    # random spanning tree plus extra edges
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(u, v) for u, v in combinations(range(n), 2) if rng.random() < p}
    return Graph(n, frozenset(edges))


def rational_rank(rows) -> int:
    """Rank over Q by Gaussian elimination on Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def naive_betti(faces) -> dict:
    """Reduced rational Betti numbers straight from a face list.

    Independent of the package's boundary code: faces are tuples, the
    boundary is rebuilt here and ranks come from :func:`rational_rank`.
    """
    by_dim: dict[int, list] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for d in by_dim:
        by_dim[d].sort()
    top = max(by_dim)

    def rank_of(d):
        # ∂_d : C_d -> C_{d-1}
        if d not in by_dim or d - 1 not in by_dim:
            return 0
        index = {f: i for i, f in enumerate(by_dim[d - 1])}
        rows = [[0] * len(by_dim[d]) for _ in by_dim[d - 1]]
        for j, f in enumerate(by_dim[d]):
            for i in range(len(f)):
                rows[index[f[:i] + f[i + 1 :]]][j] = (-1) ** i
        return rational_rank(rows)

    betti = {}
    for d in range(-1, top + 1):
        b = len(by_dim.get(d, [])) - rank_of(d) - rank_of(d + 1)
        if b:
            betti[d] = b
    return betti


def faces_as_tuples(k) -> list:
    return [tuple(i for i in range(k.vertex_count) if f >> i & 1) for f in k.faces]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
