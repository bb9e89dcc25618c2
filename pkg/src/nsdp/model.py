"""Discrete optimization problems: maximize a sum of components subject to
relational linear constraints over finite integer domains.
"""

from __future__ import annotations

import enum
import io
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

NEG_INF = float("-inf")
DEFAULT_DOMAIN = (0, 1)


class Relation(enum.Enum):
    LE = "le"
    EQ = "eq"
    GE = "ge"

    def holds(self, lhs: int, rhs: int) -> bool:
        if self is Relation.LE:
            return lhs <= rhs
        if self is Relation.GE:
            return lhs >= rhs
        return lhs == rhs


@dataclass(frozen=True)
class LinearComponent:
    scope: tuple[int, ...]
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "scope", tuple(self.scope))
        object.__setattr__(self, "coefficients", tuple(self.coefficients))


@dataclass(frozen=True)
class TabularComponent:
    """Value table over `scope`, dense row-major over domain positions.

    Entries are ints or NEG_INF (an excluded combination).
    """

    scope: tuple[int, ...]
    values: tuple[Union[int, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "scope", tuple(self.scope))
        object.__setattr__(self, "values", tuple(self.values))


ObjectiveComponent = Union[LinearComponent, TabularComponent]


@dataclass(frozen=True)
class LinearConstraint:
    scope: tuple[int, ...]
    coefficients: tuple[int, ...]
    relation: Relation
    rhs: int

    def __post_init__(self):
        object.__setattr__(self, "scope", tuple(self.scope))
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        object.__setattr__(self, "relation", Relation(self.relation))

    def lhs(self, a) -> int:
        return sum(c * _lookup(a, j) for j, c in zip(self.scope, self.coefficients))

    def satisfied(self, a) -> bool:
        return self.relation.holds(self.lhs(a), self.rhs)


@dataclass(frozen=True)
class DopInstance:
    n: int
    domains: tuple[tuple[int, ...], ...] = None
    components: tuple[ObjectiveComponent, ...] = ()
    constraints: tuple[LinearConstraint, ...] = ()
    name: str = "instance"

    def __post_init__(self):
        domains = self.domains
        if domains is None:
            domains = [DEFAULT_DOMAIN] * self.n
        object.__setattr__(self, "domains", tuple(tuple(d) for d in domains))
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "constraints", tuple(self.constraints))

    @property
    def m(self) -> int:
        return len(self.constraints)

    def domain_sizes(self) -> list[int]:
        return [len(d) for d in self.domains]


Assignment = Union[Mapping[int, int], Sequence[int]]


class UnassignedVariableError(ValueError):
    def __init__(self, var: int):
        super().__init__(f"variable {var} is unassigned")
        self.var = var


def _lookup(a: Assignment, j: int) -> int:
    try:
        v = a[j]
    except (KeyError, IndexError):
        raise UnassignedVariableError(j) from None
    if v is None:
        raise UnassignedVariableError(j)
    return v


def _table_index(instance: DopInstance, scope: Sequence[int], a: Assignment) -> int:
    idx = 0
    for j in scope:
        dom = instance.domains[j]
        v = _lookup(a, j)
        try:
            pos = dom.index(v)
        except ValueError:
            raise ValueError(f"value {v} not in domain of variable {j}") from None
        idx = idx * len(dom) + pos
    return idx


def validate_instance(instance: DopInstance) -> list[str]:
    """Return a list of invariant violations; empty means the instance is well formed."""
    problems = []
    n = instance.n
    if n < 0:
        problems.append(f"negative variable count {n}")
    if len(instance.domains) != n:
        problems.append(f"{len(instance.domains)} domains for {n} variables")
    for j, dom in enumerate(instance.domains):
        if not dom:
            problems.append(f"variable {j}: empty domain")
        elif len(set(dom)) != len(dom):
            problems.append(f"variable {j}: duplicate domain values")

    def check_scope(what, scope):
        bad = [j for j in scope if not 0 <= j < n]
        if bad:
            problems.append(f"{what}: index {bad[0]} out of range [0, {n})")
        if len(set(scope)) != len(scope):
            problems.append(f"{what}: duplicate index in scope")
        return not bad

    for k, comp in enumerate(instance.components):
        what = f"component {k}"
        in_range = check_scope(what, comp.scope)
        if isinstance(comp, LinearComponent):
            if len(comp.coefficients) != len(comp.scope):
                problems.append(f"{what}: {len(comp.coefficients)} coefficients for scope of {len(comp.scope)}")
        elif in_range and len(instance.domains) == n:
            expected = 1
            for j in comp.scope:
                expected *= len(instance.domains[j])
            if len(comp.values) != expected:
                problems.append(f"{what}: {len(comp.values)} table entries, expected {expected}")
    for i, con in enumerate(instance.constraints):
        what = f"constraint {i}"
        check_scope(what, con.scope)
        if len(con.coefficients) != len(con.scope):
            problems.append(f"{what}: {len(con.coefficients)} coefficients for scope of {len(con.scope)}")
    return problems


def evaluate_objective(instance: DopInstance, a: Assignment):
    """Sum of all components at `a`; NEG_INF if any table excludes it."""
    total = 0
    for comp in instance.components:
        if isinstance(comp, LinearComponent):
            total += sum(c * _lookup(a, j) for j, c in zip(comp.scope, comp.coefficients))
        else:
            v = comp.values[_table_index(instance, comp.scope, a)]
            if v == NEG_INF:
                return NEG_INF
            total += v
    return total


def check_feasible(instance: DopInstance, a: Assignment) -> bool:
    return all(con.satisfied(a) for con in instance.constraints)


# -- text format -------------------------------------------------------------


class InstanceFormatError(ValueError):
    pass


def parse_instance(text: str, name: str = "instance") -> DopInstance:
    """Parse the line-oriented instance format (`vars`, `dom`, `obj`, `con`)."""
    n = None
    domains = {}
    components = []
    constraints = []

    def ints(tokens, lineno):
        try:
            return [int(t) for t in tokens]
        except ValueError as exc:
            raise InstanceFormatError(f"line {lineno}: {exc}") from None

    def pairs(tokens, lineno):
        vals = ints(tokens, lineno)
        if len(vals) % 2:
            raise InstanceFormatError(f"line {lineno}: odd number of index/coefficient tokens")
        return vals[0::2], vals[1::2]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, *rest = line.split()
        if key == "vars":
            if len(rest) != 1:
                raise InstanceFormatError(f"line {lineno}: expected 'vars <n>'")
            (n,) = ints(rest, lineno)
        elif n is None:
            raise InstanceFormatError(f"line {lineno}: '{key}' before 'vars'")
        elif key == "dom":
            vals = ints(rest, lineno)
            if len(vals) < 2:
                raise InstanceFormatError(f"line {lineno}: expected 'dom <j> <v1> ...'")
            domains[vals[0]] = tuple(vals[1:])
        elif key == "obj":
            idx, coefs = pairs(rest, lineno)
            components.extend(LinearComponent((j,), (c,)) for j, c in zip(idx, coefs))
        elif key == "con":
            if len(rest) < 3 or rest[2] != ":":
                raise InstanceFormatError(f"line {lineno}: expected 'con <rel> <rhs> : ...'")
            try:
                rel = Relation(rest[0])
            except ValueError:
                raise InstanceFormatError(f"line {lineno}: unknown relation '{rest[0]}'") from None
            (rhs,) = ints(rest[1:2], lineno)
            idx, coefs = pairs(rest[3:], lineno)
            constraints.append(LinearConstraint(idx, coefs, rel, rhs))
        else:
            raise InstanceFormatError(f"line {lineno}: unknown keyword '{key}'")
    if n is None:
        raise InstanceFormatError("missing 'vars' line")
    bad = [j for j in domains if not 0 <= j < n]
    if bad:
        raise InstanceFormatError(f"dom for variable {bad[0]} out of range [0, {n})")
    doms = [domains.get(j, DEFAULT_DOMAIN) for j in range(n)]
    return DopInstance(n, doms, components, constraints, name)


def format_instance(instance: DopInstance) -> str:
    """Serialize to the text format. Only singleton linear components are representable."""
    out = io.StringIO()
    out.write(f"# {instance.name}\n")
    out.write(f"vars {instance.n}\n")
    for j, dom in enumerate(instance.domains):
        if dom != DEFAULT_DOMAIN:
            out.write(f"dom {j} {' '.join(map(str, dom))}\n")
    terms = []
    for k, comp in enumerate(instance.components):
        if not isinstance(comp, LinearComponent) or len(comp.scope) != 1:
            raise InstanceFormatError(f"component {k} is not a singleton linear term")
        terms.append(f"{comp.scope[0]} {comp.coefficients[0]}")
    if terms:
        out.write(f"obj {' '.join(terms)}\n")
    for con in instance.constraints:
        body = " ".join(f"{j} {c}" for j, c in zip(con.scope, con.coefficients))
        out.write(f"con {con.relation.value} {con.rhs} : {body}\n")
    return out.getvalue()
