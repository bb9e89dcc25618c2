import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import (
    complete_graph,
    cycle_graph,
    naive_induced_width,
    path_graph,
    random_graph,
)
from nsdp.generator import generate_instance, random_k_uniform
from nsdp.graph import (
    InteractionGraph,
    build_interaction_graph,
    eliminate_vertex,
    format_edge_list,
    induced_width,
    neighborhood,
    parse_edge_list,
    run_elimination_game,
)
from nsdp.model import DopInstance, LinearComponent, LinearConstraint, Relation, TabularComponent


def test_constraints_build_path():
    inst = DopInstance(
        3,
        components=[LinearComponent((j,), (1,)) for j in range(3)],
        constraints=[
            LinearConstraint((0, 1), (1, 1), Relation.LE, 1),
            LinearConstraint((1, 2), (1, 1), Relation.LE, 1),
        ],
    )
    assert build_interaction_graph(inst).edges() == [(0, 1), (1, 2)]


def test_tabular_component_becomes_clique():
    inst = DopInstance(3, components=[TabularComponent((0, 1, 2), tuple(range(8)))])
    assert build_interaction_graph(inst).edges() == [(0, 1), (0, 2), (1, 2)]


def test_dubois20_shape():
    h = random_k_uniform(60, 3, 40, seed=20)
    g = build_interaction_graph(generate_instance(h))
    assert g.n == 60
    assert set(g.edges()) == h.primal_edges()


def test_neighborhood():
    assert neighborhood(path_graph(3), 1) == (0, 2)
    assert neighborhood(InteractionGraph(2), 0) == ()
    with pytest.raises(IndexError):
        neighborhood(path_graph(3), 3)


def test_neighborhood_matches_adjacency(rng):
    g = random_graph(12, 0.3, rng)
    for v in range(12):
        assert set(neighborhood(g, v)) == {u for u in range(12) if g.has_edge(u, v)}


def test_eliminate_cycle_vertex():
    g = cycle_graph(4)
    h, fill = eliminate_vertex(g, 0)
    assert fill == [(1, 3)]
    assert h.vertices() == [1, 2, 3]
    assert h.edges() == [(1, 2), (1, 3), (2, 3)]
    # input untouched
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_eliminate_star_center():
    g = InteractionGraph(4, [(0, 1), (0, 2), (0, 3)])
    h, fill = eliminate_vertex(g, 0)
    assert fill == [(1, 2), (1, 3), (2, 3)]


def test_eliminate_simplicial_vertex():
    g = InteractionGraph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    _, fill = eliminate_vertex(g, 0)
    assert fill == []


def test_eliminate_twice_rejected():
    h, _ = eliminate_vertex(path_graph(3), 1)
    with pytest.raises(ValueError):
        h.eliminate(1)
    with pytest.raises(IndexError):
        h.eliminate(7)


def test_game_examples():
    trace = run_elimination_game(path_graph(3), (0, 1, 2))
    assert (trace.induced_width, trace.total_fill) == (1, 0)
    trace = run_elimination_game(complete_graph(4), (2, 0, 3, 1))
    assert (trace.induced_width, trace.total_fill) == (3, 0)
    assert run_elimination_game(InteractionGraph(3), (0, 1, 2)).steps[-1].degree == 0


def test_cycle_all_orders_width_two():
    g = cycle_graph(4)
    for order in itertools.permutations(range(4)):
        assert naive_induced_width(g, order) == 2
        assert induced_width(g, order) == 2


def test_path5_widths():
    g = path_graph(5)
    assert induced_width(g, (0, 1, 2, 3, 4)) == 1
    mid_first = (2, 0, 1, 3, 4)
    assert naive_induced_width(g, mid_first) == 2
    assert induced_width(g, mid_first) == 2
    assert induced_width(complete_graph(4), (0, 1, 2, 3)) == 3


def test_game_rejects_non_permutation():
    with pytest.raises(ValueError):
        run_elimination_game(path_graph(3), (0, 1, 1))
    with pytest.raises(ValueError):
        run_elimination_game(path_graph(3), (0, 1))


def test_trace_totals_consistent(rng):
    g = random_graph(10, 0.4, rng)
    trace = run_elimination_game(g, list(range(10)))
    assert trace.induced_width == max(s.degree for s in trace.steps)
    assert trace.total_fill == sum(len(s.fill) for s in trace.steps)
    for s in trace.steps:
        assert list(s.fill) == sorted(s.fill)
        assert all(u < v for u, v in s.fill)


graphs = st.integers(1, 9).flatmap(lambda n: st.tuples(
    st.just(n),
    st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])),
    st.permutations(range(n)),
))


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_game_compositional_and_symmetric(case):
    n, edges, order = case
    g = InteractionGraph(n, edges)
    trace = run_elimination_game(g, order)
    cur = g
    for step, v in zip(trace.steps, order):
        deg = cur.degree(v)
        cur, fill = eliminate_vertex(cur, v)
        assert (step.vertex, step.degree, list(step.fill)) == (v, deg, fill)
        for u in cur.vertices():
            assert u not in cur.adj[u]
            assert all(u in cur.adj[w] for w in cur.adj[u])
    assert cur.num_vertices() == 0 and cur.num_edges() == 0


@settings(max_examples=100, deadline=None)
@given(graphs, st.randoms(use_true_random=False))
def test_width_invariant_under_relabeling(case, r):
    n, edges, order = case
    relabel = list(range(n))
    r.shuffle(relabel)
    g = InteractionGraph(n, edges)
    h = InteractionGraph(n, [(relabel[u], relabel[v]) for u, v in edges])
    assert induced_width(g, order) == induced_width(h, [relabel[v] for v in order])


def test_width_at_least_degeneracy_lower_bound():
    # min over all orders of the width is the treewidth; degeneracy bounds it below
    rng = random.Random(8)
    for _ in range(15):
        n = rng.randint(3, 7)
        g = random_graph(n, 0.5, rng)
        work = g.copy()
        degeneracy = 0
        while work.num_vertices():
            v = min(work.vertices(), key=lambda u: (work.degree(u), u))
            degeneracy = max(degeneracy, work.degree(v))
            for u in list(work.adj[v]):
                work.adj[u].discard(v)
            work.adj[v] = set()
            work.alive[v] = False
        best = min(induced_width(g, p) for p in itertools.permutations(range(n)))
        assert best >= degeneracy


def test_edge_list_round_trip(rng):
    g = random_graph(9, 0.3, rng)
    text = format_edge_list(g)
    assert text.splitlines()[0] == f"9 {g.num_edges()}"
    assert parse_edge_list(text) == g
