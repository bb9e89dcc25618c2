import random
from itertools import combinations
from pathlib import Path

import pytest

from nsdp.graph import InteractionGraph

DATA = Path(__file__).parent / "data"


def make_graph(n, edges):
    return InteractionGraph(n, edges)


def path_graph(n):
    return InteractionGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return InteractionGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return InteractionGraph(n, combinations(range(n), 2))


def random_graph(n, p, rng):
    return InteractionGraph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_ktree(n, k, rng):
    """Random k-tree (k=1 gives a tree) on n >= k+1 vertices with shuffled labels."""
    label = list(range(n))
    rng.shuffle(label)
    edges = set(combinations(range(k + 1), 2))
    cliques = [tuple(range(k + 1))]
    for v in range(k + 1, n):
        base = rng.choice(cliques)
        keep = rng.sample(base, k)
        edges.update((u, v) for u in keep)
        cliques.append(tuple(keep) + (v,))
    return InteractionGraph(n, [(label[u], label[v]) for u, v in edges])


def chordal_family(count=60, seed=3):
    rng = random.Random(seed)
    graphs = []
    for i in range(count):
        k = i % 4
        n = rng.randint(k + 2, 12)
        if k == 0:
            # forest: a tree plus isolated/split pieces
            g = random_ktree(n, 1, rng)
            drop = rng.choice(g.edges())
            g.adj[drop[0]].discard(drop[1])
            g.adj[drop[1]].discard(drop[0])
        else:
            g = random_ktree(n, k, rng)
        graphs.append(g)
    return graphs


def fill_path_adjacency(g, eliminated, u, w):
    """u, w adjacent in the elimination graph after removing `eliminated` iff
    some path joins them in the ORIGINAL graph with all interior vertices
    eliminated."""
    if w in g.adj[u]:
        return True
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y == w:
                return True
            if y in eliminated and y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def naive_induced_width(g, order):
    """Rebuild every elimination graph from scratch via fill paths."""
    width = 0
    eliminated = set()
    for v in order:
        remaining = [u for u in range(g.n) if u not in eliminated and u != v]
        deg = sum(fill_path_adjacency(g, eliminated, v, u) for u in remaining)
        width = max(width, deg)
        eliminated.add(v)
    return width


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
