import random

import pytest

from spt.graphs import Graph, complete, cycle, cycle_with_pendant, from_edge_list

COUNTEREXAMPLE_TEXT = "7\n1 2\n2 3\n3 4\n4 5\n5 1\n1 6\n6 7"


@pytest.fixture
def counterexample():
    return from_edge_list(COUNTEREXAMPLE_TEXT)


def random_graph(rng, num_vertices, p=0.4):
    edges = [(i, j) for i in range(1, num_vertices + 1) for j in range(i + 1, num_vertices + 1)
             if rng.random() < p]
    if not edges:
        edges = [(1, 2)]
    return Graph(num_vertices, tuple(edges))


def small_graphs():
    """Graphs on at most 8 vertices used by the exhaustive sweeps."""
    rng = random.Random(7)
    graphs = [cycle(n) for n in range(3, 9)]
    graphs += [complete(4), complete(5), from_edge_list(COUNTEREXAMPLE_TEXT),
               cycle_with_pendant(5, 1), cycle_with_pendant(5, 3), cycle_with_pendant(7, 1),
               Graph(6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6)))]
    graphs += [random_graph(rng, rng.randint(4, 8)) for _ in range(4)]
    return graphs


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
