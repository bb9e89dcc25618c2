"""Nonserial dynamic programming (variable elimination) and a brute-force oracle.

Tables are dense numpy int64 arrays over the domain positions of their scope,
paired with a boolean feasibility mask; a masked-out entry stands for NEG_INF.
All arithmetic is exact: an instance whose value range could leave int64 is
rejected up front with OverflowError.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .graph import InteractionGraph, build_interaction_graph, check_ordering
from .model import (
    NEG_INF,
    DopInstance,
    LinearComponent,
    LinearConstraint,
    Relation,
    validate_instance,
)

DEFAULT_BUDGET = 2**25
ORACLE_BOUND = 2**20
_SAFE_MAGNITUDE = 2**62


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    WIDTH_EXCEEDED = "width_exceeded"


class WidthExceeded(Exception):
    def __init__(self, step: int, var: int, cells: int, budget: int):
        super().__init__(f"step {step}: eliminating variable {var} needs {cells} cells (budget {budget})")
        self.step = step
        self.var = var
        self.cells = cells
        self.budget = budget


@dataclass
class LocalTable:
    """The message left behind when `eliminated_var` is eliminated.

    `values[row]` is the best value of the consumed components over the
    eliminated variable for that assignment of `scope`; `argmax[row]` is the
    domain position achieving it, -1 where no choice is feasible.
    """

    eliminated_var: int
    scope: tuple[int, ...]
    values: np.ndarray
    feasible: np.ndarray
    argmax: np.ndarray

    @property
    def cells(self) -> int:
        return int(self.values.size)

    def value(self, row: tuple[int, ...]):
        if not self.feasible[row]:
            return NEG_INF
        return int(self.values[row])

    def to_list(self) -> list:
        flat = self.values.ravel()
        ok = self.feasible.ravel()
        return [int(x) if f else NEG_INF for x, f in zip(flat, ok)]


@dataclass
class SolveStats:
    induced_width: int = 0
    total_fill: int = 0
    peak_cells: int = 0
    max_table_cells: int = 0
    forward_time: float = 0.0
    backward_time: float = 0.0
    exceeded: Optional[WidthExceeded] = None


@dataclass
class SolveResult:
    status: Status
    optimum: object
    assignment: Optional[tuple[int, ...]]
    stats: SolveStats = field(default_factory=SolveStats)
    tables: list[LocalTable] = field(default_factory=list)


class _Linear:
    def __init__(self, scope, coefs):
        self.scope = tuple(scope)
        self.coefs = tuple(coefs)


class _Table:
    def __init__(self, scope, values, feasible=None):
        self.scope = tuple(scope)
        self.values = values
        self.feasible = feasible

    @property
    def cells(self) -> int:
        return int(self.values.size)


def _axis_view(arr: np.ndarray, scope: Sequence[int], axes: dict[int, int], ndim: int) -> np.ndarray:
    """Reshape a table over `scope` so it broadcasts into the working array."""
    if not scope:
        return arr
    perm = sorted(range(len(scope)), key=lambda i: axes[scope[i]])
    arr = arr.transpose(perm)
    shape = [1] * ndim
    for i in perm:
        shape[axes[scope[i]]] = arr.shape[perm.index(i)]
    return arr.reshape(shape)


@dataclass
class SolverState:
    instance: DopInstance
    graph: InteractionGraph
    factors: list
    pending: list[LinearConstraint]
    budget: int = DEFAULT_BUDGET
    constant: object = 0
    tables: list[LocalTable] = field(default_factory=list)
    stats: SolveStats = field(default_factory=SolveStats)
    live_cells: int = 0

    @property
    def step(self) -> int:
        return len(self.tables)

    def _domain(self, j: int) -> np.ndarray:
        return np.asarray(self.instance.domains[j], dtype=np.int64)

    def _linear_view(self, scope, coefs, axes, ndim):
        acc = np.zeros([1] * ndim, dtype=np.int64)
        for j, c in zip(scope, coefs):
            shape = [1] * ndim
            shape[axes[j]] = -1
            acc = acc + (c * self._domain(j)).reshape(shape)
        return acc


def _check_magnitudes(instance: DopInstance):
    def dmax(j):
        return max(abs(x) for x in instance.domains[j])

    total = 0
    for comp in instance.components:
        if isinstance(comp, LinearComponent):
            total += sum(abs(c) * dmax(j) for j, c in zip(comp.scope, comp.coefficients))
        else:
            total += max((abs(x) for x in comp.values if x != NEG_INF), default=0)
    if total >= _SAFE_MAGNITUDE:
        raise OverflowError("objective range does not fit exact int64 arithmetic")
    for i, con in enumerate(instance.constraints):
        bound = sum(abs(c) * dmax(j) for j, c in zip(con.scope, con.coefficients)) + abs(con.rhs)
        if bound >= _SAFE_MAGNITUDE:
            raise OverflowError(f"constraint {i} does not fit exact int64 arithmetic")


def init_state(instance: DopInstance, budget: int = DEFAULT_BUDGET) -> SolverState:
    problems = validate_instance(instance)
    if problems:
        raise ValueError("invalid instance: " + "; ".join(problems))
    _check_magnitudes(instance)
    state = SolverState(instance, build_interaction_graph(instance), [], list(instance.constraints), budget)
    sizes = instance.domain_sizes()
    for comp in instance.components:
        if isinstance(comp, LinearComponent):
            state.factors.append(_Linear(comp.scope, comp.coefficients))
            continue
        raw = np.array([0 if x == NEG_INF else x for x in comp.values], dtype=np.int64)
        ok = np.array([x != NEG_INF for x in comp.values], dtype=bool)
        shape = [sizes[j] for j in comp.scope]
        if not comp.scope:
            state.constant = NEG_INF if not ok[0] else state.constant + int(raw[0])
            continue
        state.factors.append(_Table(comp.scope, raw.reshape(shape), None if ok.all() else ok.reshape(shape)))
        state.live_cells += raw.size
    return state


def eliminate_variable(state: SolverState, v: int) -> SolverState:
    """Eliminate `v`: maximize the components and constraints touching it
    over its domain, for every assignment of its current neighbors.

    The consumed components and constraints are replaced by one table over the
    neighborhood (or folded into the running constant when it is empty).
    Mutates and returns `state`.
    """
    g = state.graph
    g._check(v)
    inst = state.instance
    scope = tuple(sorted(g.adj[v]))
    full = scope + (v,)
    shape = [len(inst.domains[j]) for j in full]
    cells = math.prod(shape)
    if cells > state.budget:
        raise WidthExceeded(state.step, v, cells, state.budget)
    axes = {j: i for i, j in enumerate(full)}
    ndim = len(full)

    total = np.zeros(shape, dtype=np.int64)
    feasible = np.ones(shape, dtype=bool)
    keep = []
    for f in state.factors:
        if v not in f.scope:
            keep.append(f)
        elif isinstance(f, _Linear):
            total += state._linear_view(f.scope, f.coefs, axes, ndim)
        else:
            total += _axis_view(f.values, f.scope, axes, ndim)
            if f.feasible is not None:
                feasible &= _axis_view(f.feasible, f.scope, axes, ndim)
            state.live_cells -= f.cells
    state.factors = keep

    pending = []
    for con in state.pending:
        if v not in con.scope:
            pending.append(con)
            continue
        lhs = state._linear_view(con.scope, con.coefficients, axes, ndim)
        if con.relation is Relation.LE:
            feasible &= lhs <= con.rhs
        elif con.relation is Relation.GE:
            feasible &= lhs >= con.rhs
        else:
            feasible &= lhs == con.rhs
    state.pending = pending

    # scan the eliminated axis in increasing value order so ties pick the smallest value
    by_value = np.argsort(state._domain(v), kind="stable")
    total = total[..., by_value]
    feasible = feasible[..., by_value]
    masked = np.where(feasible, total, np.iinfo(np.int64).min)
    pos = np.argmax(masked, axis=-1)
    best = np.take_along_axis(total, pos[..., None], axis=-1)[..., 0]
    ok = feasible.any(axis=-1)
    argmax = np.where(ok, by_value[pos], -1)
    values = np.where(ok, best, 0)

    stats = state.stats
    stats.peak_cells = max(stats.peak_cells, state.live_cells + cells)
    stats.max_table_cells = max(stats.max_table_cells, cells)
    stats.induced_width = max(stats.induced_width, len(scope))

    table = LocalTable(v, scope, values, ok, argmax)
    state.tables.append(table)
    if scope:
        state.factors.append(_Table(scope, values, None if ok.all() else ok))
        state.live_cells += table.cells
    elif state.constant != NEG_INF:
        state.constant = state.constant + int(values) if bool(ok) else NEG_INF

    stats.total_fill += len(g.eliminate(v))
    return state


def _recover(state: SolverState) -> tuple[int, ...]:
    inst = state.instance
    pos = [0] * inst.n
    for table in reversed(state.tables):
        row = tuple(pos[j] for j in table.scope)
        p = int(table.argmax[row])
        if p < 0:
            raise RuntimeError(f"no feasible value recorded for variable {table.eliminated_var}")
        pos[table.eliminated_var] = p
    return tuple(inst.domains[j][pos[j]] for j in range(inst.n))


def solve(instance: DopInstance, order: Sequence[int], budget: int = DEFAULT_BUDGET) -> SolveResult:
    order = check_ordering(order, instance.n)
    state = init_state(instance, budget)
    t0 = time.perf_counter()
    try:
        for v in order:
            eliminate_variable(state, v)
    except WidthExceeded as exc:
        state.stats.exceeded = exc
        state.stats.forward_time = time.perf_counter() - t0
        return SolveResult(Status.WIDTH_EXCEEDED, None, None, state.stats, state.tables)
    state.stats.forward_time = time.perf_counter() - t0

    if state.constant == NEG_INF:
        return SolveResult(Status.INFEASIBLE, NEG_INF, None, state.stats, state.tables)
    t0 = time.perf_counter()
    assignment = _recover(state)
    state.stats.backward_time = time.perf_counter() - t0
    return SolveResult(Status.OPTIMAL, state.constant, assignment, state.stats, state.tables)


def brute_force_solve(instance: DopInstance, bound: int = ORACLE_BOUND, chunk: int = 1 << 16) -> SolveResult:
    """Exhaustive enumeration; returns the lexicographically smallest optimizer."""
    problems = validate_instance(instance)
    if problems:
        raise ValueError("invalid instance: " + "; ".join(problems))
    sizes = instance.domain_sizes()
    space = math.prod(sizes)
    if space > bound:
        raise ValueError(f"search space {space} exceeds oracle bound {bound}")
    _check_magnitudes(instance)
    n = instance.n
    doms = [np.asarray(d, dtype=np.int64) for d in instance.domains]
    sorted_pos = [np.argsort(d, kind="stable") for d in doms]

    best_val, best_idx = None, None
    for start in range(0, space, chunk):
        idx = np.arange(start, min(start + chunk, space), dtype=np.int64)
        # row-major decode with variable 0 most significant: lexicographic order
        orig = [None] * n
        rem = idx.copy()
        for j in range(n - 1, -1, -1):
            orig[j] = sorted_pos[j][rem % sizes[j]]
            rem //= sizes[j]
        vals = [doms[j][orig[j]] for j in range(n)]

        obj = np.zeros(idx.shape, dtype=np.int64)
        ok = np.ones(idx.shape, dtype=bool)
        for comp in instance.components:
            if isinstance(comp, LinearComponent):
                for j, c in zip(comp.scope, comp.coefficients):
                    obj += c * vals[j]
            else:
                flat = np.zeros(idx.shape, dtype=np.int64)
                for j in comp.scope:
                    flat = flat * sizes[j] + orig[j]
                excluded = np.array([x == NEG_INF for x in comp.values], dtype=bool)
                table = np.array([0 if x == NEG_INF else x for x in comp.values], dtype=np.int64)
                ok &= ~excluded[flat]
                obj += table[flat]
        for con in instance.constraints:
            lhs = np.zeros(idx.shape, dtype=np.int64)
            for j, c in zip(con.scope, con.coefficients):
                lhs += c * vals[j]
            if con.relation is Relation.LE:
                ok &= lhs <= con.rhs
            elif con.relation is Relation.GE:
                ok &= lhs >= con.rhs
            else:
                ok &= lhs == con.rhs
        if not ok.any():
            continue
        masked = np.where(ok, obj, np.iinfo(np.int64).min)
        k = int(np.argmax(masked))
        if best_val is None or obj[k] > best_val:
            best_val, best_idx = int(obj[k]), int(idx[k])

    if best_val is None:
        return SolveResult(Status.INFEASIBLE, NEG_INF, None)
    assignment = []
    rem = best_idx
    for j in range(n - 1, -1, -1):
        assignment.append(int(doms[j][sorted_pos[j][rem % sizes[j]]]))
        rem //= sizes[j]
    return SolveResult(Status.OPTIMAL, int(best_val), tuple(reversed(assignment)))
