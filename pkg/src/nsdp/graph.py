"""Interaction graphs and the elimination game."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .model import DopInstance


class InteractionGraph:
    """Undirected simple graph on dense vertex indices 0..n-1.

    Eliminated vertices are tombstoned (kept as indices, dropped from
    `vertices()`), so vertex identity is stable across elimination graphs.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        self.n = n
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.alive = [True] * n
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int):
        if u == v:
            return
        self._check(u)
        self._check(v)
        self.adj[u].add(v)
        self.adj[v].add(u)

    def _check(self, v: int):
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range [0, {self.n})")
        if not self.alive[v]:
            raise ValueError(f"vertex {v} already eliminated")

    def copy(self) -> "InteractionGraph":
        g = InteractionGraph.__new__(InteractionGraph)
        g.n = self.n
        g.adj = [set(s) for s in self.adj]
        g.alive = list(self.alive)
        return g

    def vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.alive[v]]

    def num_vertices(self) -> int:
        return sum(self.alive)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def fill_count(self, v: int) -> int:
        """Edges missing among the neighbors of `v`."""
        nb = list(self.adj[v])
        missing = 0
        for i, a in enumerate(nb):
            row = self.adj[a]
            for b in nb[i + 1:]:
                if b not in row:
                    missing += 1
        return missing

    def eliminate(self, v: int) -> list[tuple[int, int]]:
        """Eliminate `v` in place; returns the fill edges added, sorted."""
        self._check(v)
        nb = sorted(self.adj[v])
        fill = []
        for a, b in combinations(nb, 2):
            if b not in self.adj[a]:
                self.adj[a].add(b)
                self.adj[b].add(a)
                fill.append((a, b))
        for a in nb:
            self.adj[a].discard(v)
        self.adj[v] = set()
        self.alive[v] = False
        return fill

    def subgraph_components(self, vertices: Iterable[int]) -> list[list[int]]:
        """Connected components of the subgraph induced by `vertices`, each
        sorted, ordered by smallest member."""
        pool = set(vertices)
        comps = []
        for s in sorted(pool):
            if s not in pool:
                continue
            pool.discard(s)
            comp, stack = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if w in pool:
                        pool.discard(w)
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def __eq__(self, other):
        if not isinstance(other, InteractionGraph):
            return NotImplemented
        return self.n == other.n and self.alive == other.alive and self.adj == other.adj

    def __repr__(self):
        return f"InteractionGraph(n={self.n}, edges={self.edges()})"


def build_interaction_graph(instance: DopInstance) -> InteractionGraph:
    """Variables interact when they share an objective component or a constraint."""
    g = InteractionGraph(instance.n)
    for item in (*instance.components, *instance.constraints):
        for u, v in combinations(item.scope, 2):
            g.add_edge(u, v)
    return g


def neighborhood(g: InteractionGraph, v: int) -> tuple[int, ...]:
    """Open neighborhood of `v`; the closed one is this plus `v` itself."""
    g._check(v)
    return tuple(sorted(g.adj[v]))


def eliminate_vertex(g: InteractionGraph, v: int) -> tuple[InteractionGraph, list[tuple[int, int]]]:
    h = g.copy()
    fill = h.eliminate(v)
    return h, fill


def check_ordering(order: Sequence[int], n: int) -> tuple[int, ...]:
    order = tuple(int(v) for v in order)
    if len(order) != n or sorted(order) != list(range(n)):
        raise ValueError(f"ordering is not a permutation of range({n})")
    return order


@dataclass(frozen=True)
class EliminationStep:
    vertex: int
    degree: int
    fill: tuple[tuple[int, int], ...]


@dataclass
class EliminationTrace:
    steps: list[EliminationStep] = field(default_factory=list)

    @property
    def induced_width(self) -> int:
        return max((s.degree for s in self.steps), default=0)

    @property
    def total_fill(self) -> int:
        return sum(len(s.fill) for s in self.steps)


def run_elimination_game(g: InteractionGraph, order: Sequence[int]) -> EliminationTrace:
    order = check_ordering(order, g.n)
    work = g.copy()
    trace = EliminationTrace()
    for v in order:
        deg = work.degree(v)
        fill = work.eliminate(v)
        trace.steps.append(EliminationStep(v, deg, tuple(fill)))
    return trace


def induced_width(g: InteractionGraph, order: Sequence[int]) -> int:
    return run_elimination_game(g, order).induced_width


def format_edge_list(g: InteractionGraph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> InteractionGraph:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not rows:
        raise ValueError("empty edge list")
    n, m = map(int, rows[0])
    if len(rows) - 1 != m:
        raise ValueError(f"header announces {m} edges, found {len(rows) - 1}")
    return InteractionGraph(n, ((int(u), int(v)) for u, v in rows[1:]))
