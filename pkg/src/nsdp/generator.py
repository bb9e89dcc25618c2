"""Hypergraph structures and random linear binary instances built on them.

Randomness comes from Python's `random.Random` (MT19937), seeded with the
configured integer. Only `random()`, `randint()` and `sample()` are used;
their output for a given seed is stable across platforms and CPython
releases, so generated instances are portable golden files.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from itertools import combinations

from .model import DopInstance, LinearComponent, LinearConstraint, Relation


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        for i, e in enumerate(self.edges):
            if not e:
                raise ValueError(f"edge {i} is empty")
            if len(set(e)) != len(e):
                raise ValueError(f"edge {i} repeats a vertex")
            if any(not 0 <= v < self.n for v in e):
                raise ValueError(f"edge {i} has a vertex outside [0, {self.n})")

    def primal_edges(self) -> set[tuple[int, int]]:
        return {tuple(sorted(p)) for e in self.edges for p in combinations(e, 2)}


_NAMED_EDGE = re.compile(r"^\s*([^\s(]+)\s*\(([^)]*)\)\s*[,.]?\s*$")


def parse_hypergraph(text: str) -> Hypergraph:
    """Read `name(v1,v2,...)` or whitespace-separated vertex lines.

    An optional `verts <n>` header fixes the vertex count; vertex names get
    dense indices in order of first appearance. Lines starting with `#` or
    `%` are comments.
    """
    header_n = None
    index: dict[str, int] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        if line.startswith("verts"):
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: expected 'verts <n>'")
            header_n = int(parts[1])
            continue
        match = _NAMED_EDGE.match(line)
        if match:
            names = [t.strip() for t in match.group(2).split(",")]
            if any(not t for t in names):
                raise ValueError(f"line {lineno}: empty vertex name")
        elif "(" in line or ")" in line:
            raise ValueError(f"line {lineno}: malformed edge '{line}'")
        else:
            names = line.split()
        if not names:
            raise ValueError(f"line {lineno}: empty edge")
        edge = []
        for t in names:
            if t not in index:
                index[t] = len(index)
            if index[t] in edge:
                raise ValueError(f"line {lineno}: vertex '{t}' repeated")
            edge.append(index[t])
        edges.append(edge)
    if not edges:
        raise ValueError("no edges")
    n = len(index)
    if header_n is not None:
        if header_n < n:
            raise ValueError(f"header declares {header_n} vertices but {n} are named")
        n = header_n
    return Hypergraph(n, edges, tuple(index))


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"verts {h.n}"]
    lines += [f"e{i}({','.join(str(v) for v in e)})" for i, e in enumerate(h.edges)]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    coeff_lo: int = 1
    coeff_hi: int = 100
    relation: Relation = Relation.LE
    max_retries: int = 100

    def __post_init__(self):
        if not 1 <= self.coeff_lo <= self.coeff_hi:
            raise ValueError("need 1 <= coeff_lo <= coeff_hi")
        object.__setattr__(self, "relation", Relation(self.relation))


def generate_instance(h: Hypergraph, cfg: GeneratorConfig = GeneratorConfig(), name: str = "instance") -> DopInstance:
    """Binary linear instance: one constraint per hyperedge, rhs = floor(sigma * sum(A))
    with sigma in (0, 1) redrawn until rhs >= 1, and a positive objective term
    on every vertex."""
    rng = random.Random(cfg.seed)
    lo, hi = cfg.coeff_lo, cfg.coeff_hi
    constraints = []
    for i, edge in enumerate(h.edges):
        for _ in range(cfg.max_retries):
            coefs = [rng.randint(lo, hi) for _ in edge]
            if sum(coefs) >= 2:
                break
        else:
            raise ValueError(f"edge {i}: coefficient sum stays below 2 after {cfg.max_retries} draws")
        total = sum(coefs)
        rhs = 0
        while rhs < 1:
            sigma = rng.random()
            rhs = math.floor(sigma * total) if sigma > 0 else 0
        constraints.append(LinearConstraint(edge, coefs, cfg.relation, rhs))
    components = [LinearComponent((j,), (rng.randint(lo, hi),)) for j in range(h.n)]
    return DopInstance(h.n, None, components, constraints, name)


# -- synthetic families ----------------------------------------------------------


def chain(length: int, overlap: int, width: int) -> Hypergraph:
    """Windows of `width` consecutive vertices, consecutive windows sharing
    `overlap` vertices, over `length` vertices."""
    if not 0 <= overlap < width <= length:
        raise ValueError("chain needs 0 <= overlap < width <= length")
    step = width - overlap
    edges = [tuple(range(s, s + width)) for s in range(0, length - width + 1, step)]
    return Hypergraph(length, edges)


def grid(rows: int, cols: int) -> Hypergraph:
    if rows < 1 or cols < 1:
        raise ValueError("grid needs rows, cols >= 1")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Hypergraph(rows * cols, edges)


def random_k_uniform(n: int, k: int, m: int, seed: int) -> Hypergraph:
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if m < 0 or m > math.comb(n, k):
        raise ValueError(f"cannot draw {m} distinct {k}-sets from {n} vertices")
    rng = random.Random(seed)
    seen = set()
    edges = []
    while len(edges) < m:
        e = tuple(sorted(rng.sample(range(n), k)))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Hypergraph(n, edges)


FAMILIES = {"chain": chain, "grid": grid, "random": random_k_uniform}


def synth_family(family: str, **params) -> Hypergraph:
    if family == "random_k_uniform":
        family = "random"
    try:
        make = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family '{family}'") from None
    return make(**params)
