import random

import pytest

from nsdp.bench import CSV_HEADER, BenchRecord, emit_report, run_benchmark, summarize_wins
from nsdp.generator import GeneratorConfig, chain, generate_instance, grid, random_k_uniform
from nsdp.graph import build_interaction_graph, run_elimination_game
from nsdp.model import DopInstance, LinearComponent, LinearConstraint, Relation
from nsdp.orderings import Heuristic, compute_ordering
from nsdp.solver import Status, brute_force_solve

H = list(Heuristic)


def rec(name, h, width, t=0.1, status=Status.OPTIMAL, optimum=10):
    return BenchRecord(name, 5, 3, h, 0.01, t, width, 0, 8, status, optimum)


def test_one_instance_all_heuristics():
    inst = generate_instance(grid(3, 3), GeneratorConfig(seed=1), "g33")
    records = run_benchmark([inst], H, repeats=3)
    assert [r.heuristic for r in records] == H
    assert len({r.optimum for r in records}) == 1
    assert records[0].optimum == brute_force_solve(inst).optimum
    g = build_interaction_graph(inst)
    for r in records:
        trace = run_elimination_game(g, compute_ordering(g, r.heuristic))
        assert (r.induced_width, r.total_fill) == (trace.induced_width, trace.total_fill)
        assert r.order_time >= 0 and r.solve_time >= 0
        assert r.induced_width < r.n


def test_budget_hits_one_heuristic_only():
    # on this structure the level-structure separators of ND cost width 5, every
    # other heuristic stays at width 2; a 2**4-cell budget sits between them
    inst = generate_instance(random_k_uniform(10, 3, 6, seed=4), GeneratorConfig(seed=1), "rk10")
    g = build_interaction_graph(inst)
    widths = {h: run_elimination_game(g, compute_ordering(g, h)).induced_width for h in H}
    assert widths == {Heuristic.MD: 2, Heuristic.ND: 5, Heuristic.MCS: 2, Heuristic.MIN_FILL: 2, Heuristic.LEX_BFS: 2}
    records = run_benchmark([inst], H, repeats=1, budget=2**4)
    for r in records:
        expected = Status.WIDTH_EXCEEDED if r.heuristic is Heuristic.ND else Status.OPTIMAL
        assert r.status is expected
        assert r.induced_width == widths[r.heuristic]
    optima = {r.optimum for r in records if r.status is Status.OPTIMAL}
    assert optima == {brute_force_solve(inst).optimum}


def test_dubois20_shape_chain():
    inst = generate_instance(chain(60, 20, 21), GeneratorConfig(seed=20), "chain60")
    records = run_benchmark([inst], [Heuristic.MIN_FILL], repeats=1, budget=2**10)
    assert (records[0].n, records[0].m) == (60, 40)


def test_invalid_instance_skipped(caplog):
    bad = DopInstance(2, constraints=[LinearConstraint((0, 5), (1, 1), Relation.LE, 1)], name="bad")
    assert run_benchmark([bad], H, repeats=1) == []
    assert "bad" in caplog.text


def test_wins_unique_minimum():
    records = [rec("a", h, 3 if h is Heuristic.MIN_FILL else 5) for h in H]
    table = summarize_wins(records)
    assert table.wins[Heuristic.MIN_FILL] == 1 and table.percent(Heuristic.MIN_FILL) == 100.0
    assert sum(table.wins.values()) == 1


def test_wins_all_tied():
    table = summarize_wins([rec("a", h, 4) for h in H])
    assert all(w == 1 for w in table.wins.values())


def test_wins_inconsistent_coverage():
    records = [rec("a", h, 4) for h in H] + [rec("b", h, 4) for h in H[:3]]
    with pytest.raises(ValueError, match="instance b"):
        summarize_wins(records)


def test_wins_against_rescan():
    records = []
    for i in range(20):
        inst = generate_instance(grid(3, 3 + i % 4), GeneratorConfig(seed=i), f"grid{i:02d}")
        records += run_benchmark([inst], H, repeats=1)
    for metric in ("induced_width", "solve_time"):
        table = summarize_wins(records, metric)
        expected = {h: 0 for h in H}
        for i in range(20):
            row = [r for r in records if r.instance == f"grid{i:02d}"]
            best = min(getattr(r, metric) for r in row)
            for r in row:
                if getattr(r, metric) == best:
                    expected[r.heuristic] += 1
        assert table.wins == expected
        assert table.instances == 20


def test_time_metric_ignores_budget_failures():
    records = [rec("a", h, 4, t=0.001 if h is Heuristic.MD else 0.5) for h in H]
    records[0] = rec("a", Heuristic.MD, 4, t=0.001, status=Status.WIDTH_EXCEEDED, optimum=None)
    table = summarize_wins(records, "solve_time")
    assert table.wins[Heuristic.MD] == 0
    assert sum(table.wins.values()) == 4


def test_csv_empty_and_small():
    assert emit_report([], "csv") == ",".join(CSV_HEADER) + "\n"
    text = emit_report([rec("b", Heuristic.MCS, 2), rec("a", Heuristic.MD, 3)], "csv")
    lines = text.splitlines()
    assert len(lines) == 3
    assert lines[1].startswith("a,5,3,MD,0.010000,0.100000,3,0,8,optimal,10")
    assert lines[2].startswith("b,")


def test_csv_infeasible_optimum():
    text = emit_report([rec("a", Heuristic.MD, 1, status=Status.INFEASIBLE, optimum=float("-inf"))])
    assert text.splitlines()[1].endswith("infeasible,-inf")


def test_markdown_flags_row_minima():
    rng = random.Random(2)
    records = []
    for name in ("p", "q", "r"):
        times = [rng.choice([0.1, 0.2, 0.3]) for _ in H]
        records += [rec(name, h, 1, t=t) for h, t in zip(H, times)]
    text = emit_report(records, "markdown", metric="total_time")
    rows = text.splitlines()[2:]
    assert len(rows) == 3
    for name, row in zip(("p", "q", "r"), rows):
        cells = [c.strip() for c in row.strip("|").split("|")][3:]
        mine = [r for r in records if r.instance == name]
        best = min(r.total_time for r in mine)
        flagged = [c.startswith("**") for c in cells]
        assert flagged == [r.total_time == best for r in mine]


def test_report_deterministic():
    records = [rec(n, h, w, t=0.1 * w) for n in "xyz" for w, h in enumerate(H)]
    for fmt in ("csv", "markdown"):
        assert emit_report(records, fmt) == emit_report(list(reversed(records)), fmt)
