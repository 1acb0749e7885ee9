import math

import networkx as nx
import pytest

from coprime_lab.numtheory import build_prime_tables


@pytest.fixture(scope="session")
def tables_1000():
    return build_prime_tables(1000)


def nx_coprime_graph(n: int) -> nx.Graph:
    """Reference construction straight from the definition."""
    h = nx.Graph()
    h.add_nodes_from(range(1, n + 1))
    h.add_edges_from((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if math.gcd(i, j) == 1)
    return h
