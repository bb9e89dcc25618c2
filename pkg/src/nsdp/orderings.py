"""Elimination-ordering heuristics.

Every heuristic is deterministic: ties go to the smallest vertex index, and
MCS / LEX-BFS start from vertex 0. MCS and LEX-BFS return the reverse of
their visit order, so on chordal graphs they produce perfect elimination
orderings.
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Callable, Sequence

from .graph import InteractionGraph, check_ordering, run_elimination_game


class Heuristic(enum.Enum):
    MD = "md"
    ND = "nd"
    MCS = "mcs"
    MIN_FILL = "minfill"
    LEX_BFS = "lexbfs"

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def parse(cls, token: str) -> list["Heuristic"]:
        """Map a CLI token (`md`, ..., or `all`) to heuristics."""
        token = token.lower()
        if token == "all":
            return list(cls)
        try:
            return [cls(token)]
        except ValueError:
            choices = ", ".join([h.value for h in cls] + ["all"])
            raise ValueError(f"unknown ordering '{token}' (choose from {choices})") from None


_LABELS = {
    Heuristic.MD: "MD",
    Heuristic.ND: "ND",
    Heuristic.MCS: "MCS",
    Heuristic.MIN_FILL: "MIN-FILL",
    Heuristic.LEX_BFS: "LEX-BFS",
}


def _greedy(g: InteractionGraph, score: Callable[[InteractionGraph, int], int]) -> list[int]:
    work = g.copy()
    order = []
    for _ in range(work.num_vertices()):
        v = min(work.vertices(), key=lambda u: (score(work, u), u))
        work.eliminate(v)
        order.append(v)
    return order


def order_min_degree(g: InteractionGraph) -> list[int]:
    return _greedy(g, InteractionGraph.degree)


def order_min_fill(g: InteractionGraph) -> list[int]:
    return _greedy(g, InteractionGraph.fill_count)


def mcs_visit_order(g: InteractionGraph, start: int = 0) -> list[int]:
    """Maximum cardinality search: always visit an unvisited vertex with the
    most visited neighbors."""
    n = g.n
    if n == 0:
        return []
    weight = [0] * n
    visited = [False] * n
    visit = []
    nxt = start
    for _ in range(n):
        if nxt is None:
            best = -1
            for u in range(n):
                if not visited[u] and weight[u] > best:
                    best, nxt = weight[u], u
        visited[nxt] = True
        visit.append(nxt)
        for w in g.adj[nxt]:
            weight[w] += 1
        nxt = None
    return visit


def order_mcs(g: InteractionGraph, start: int = 0) -> list[int]:
    return mcs_visit_order(g, start)[::-1]


def lex_bfs_numbering(g: InteractionGraph) -> list[int]:
    """Vertices in the order LEX-BFS numbers them (number n first, down to 1).

    A label is the decreasing list of numbers already given to a vertex's
    neighbors; the unnumbered vertex with the lexicographically largest label
    is numbered next.
    """
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    numbered = [False] * n
    seq = []
    for number in range(n, 0, -1):
        best = None
        for u in range(n):
            if not numbered[u] and (best is None or labels[u] > labels[best]):
                best = u
        numbered[best] = True
        seq.append(best)
        for w in g.adj[best]:
            if not numbered[w]:
                labels[w].append(number)
    return seq


def order_lex_bfs(g: InteractionGraph) -> list[int]:
    return lex_bfs_numbering(g)[::-1]


# -- nested dissection ---------------------------------------------------------

ND_LEAF_SIZE = 3


def _bfs_levels(g: InteractionGraph, root: int, pool: set[int]) -> list[list[int]]:
    levels = [[root]]
    seen = {root}
    while True:
        nxt = sorted({w for u in levels[-1] for w in g.adj[u] if w in pool and w not in seen})
        if not nxt:
            return levels
        seen.update(nxt)
        levels.append(nxt)


def pseudo_peripheral_vertex(g: InteractionGraph, component: Sequence[int]) -> int:
    pool = set(component)
    v = min(component)
    for _ in range(2):
        v = min(_bfs_levels(g, v, pool)[-1])
    return v


def find_separator(g: InteractionGraph, component: Sequence[int]):
    """Level-structure separator of a connected vertex set.

    Returns (separator, rest) with `rest` the vertices outside the separator,
    or None when the level structure is too shallow to split (fewer than three
    levels).
    """
    pool = set(component)
    root = pseudo_peripheral_vertex(g, component)
    levels = _bfs_levels(g, root, pool)
    if len(levels) < 3:
        return None
    mid = len(levels) // 2
    lower = set().union(*levels[:mid])
    upper = set().union(*levels[mid + 1:])
    sep = set(levels[mid])
    # a separator vertex touching only one side can join that side
    for s in sorted(sep):
        nb = g.adj[s]
        if not nb & lower:
            sep.discard(s)
            upper.add(s)
        elif not nb & upper:
            sep.discard(s)
            lower.add(s)
    return sorted(sep), sorted(lower | upper)


def _nd(g: InteractionGraph, component: list[int], out: list[int]):
    if len(component) <= ND_LEAF_SIZE:
        out.extend(_induced_min_degree(g, component))
        return
    split = find_separator(g, component)
    if split is None:
        out.extend(_induced_min_degree(g, component))
        return
    sep, rest = split
    for comp in g.subgraph_components(rest):
        _nd(g, comp, out)
    out.extend(sep)


def _induced_min_degree(g: InteractionGraph, vertices: Sequence[int]) -> list[int]:
    keep = set(vertices)
    sub = InteractionGraph(g.n, ((u, w) for u in keep for w in g.adj[u] if w in keep))
    for u in range(g.n):
        if u not in keep:
            sub.alive[u] = False
    return order_min_degree(sub)


def order_nested_dissection(g: InteractionGraph) -> list[int]:
    """Number a small vertex separator last and recurse on the pieces it leaves."""
    out: list[int] = []
    for comp in g.subgraph_components(g.vertices()):
        _nd(g, comp, out)
    return out


HEURISTICS: dict[Heuristic, Callable[[InteractionGraph], list[int]]] = {
    Heuristic.MD: order_min_degree,
    Heuristic.ND: order_nested_dissection,
    Heuristic.MCS: order_mcs,
    Heuristic.MIN_FILL: order_min_fill,
    Heuristic.LEX_BFS: order_lex_bfs,
}


def compute_ordering(g: InteractionGraph, heuristic: Heuristic) -> list[int]:
    return HEURISTICS[Heuristic(heuristic)](g)


def is_perfect_elimination_ordering(g: InteractionGraph, order: Sequence[int]) -> bool:
    return run_elimination_game(g, check_ordering(order, g.n)).total_fill == 0
