import random

import pytest

from bcturan import BipartiteGraph
from bcturan.graph_core import _connected_rows


def random_connected_bipartite(rng: random.Random, max_part: int = 8) -> BipartiteGraph:
    """Random connected graph: shuffled edges added until connected, then a
    few extra edges for density variety."""
    a = rng.randint(1, max_part)
    b = rng.randint(1, max_part)
    rows = [0] * a
    order = [(i, j) for i in range(a) for j in range(b)]
    rng.shuffle(order)
    for i, j in order:
        rows[i] |= 1 << j
        if _connected_rows(a, b, rows):
            break
    for _ in range(rng.randint(0, a * b // 3)):
        rows[rng.randrange(a)] |= 1 << rng.randrange(b)
    return BipartiteGraph(a, b, tuple(rows))


@pytest.fixture
def rng():
    return random.Random(0xBC17)


# verdict lines recorded by test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
