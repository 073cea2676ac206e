"""Maps between finite spaces: continuity and the closed-graph property.

A map out of a finite space has closed graph exactly when it is constant on
each connected component with a closed point as the value.
:func:`has_closed_graph` decides it that way in near-linear time, while
:func:`has_closed_graph_oracle` takes the closure of the graph inside the
product space.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from .components import components
from .errors import EnumerationTooLarge, MapSpaceMismatch, OracleTooLarge
from .space import FinSpace, iter_bits, product

GRAPH_ORACLE_LIMIT = 10_000


@dataclass(frozen=True)
class SpaceMap:
    """Total map; ``values[i]`` is the codomain index of domain point ``i``."""

    domain: FinSpace = field(repr=False)
    codomain: FinSpace = field(repr=False)
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(self.domain):
            raise MapSpaceMismatch(
                f"{len(self.values)} values for a domain of {len(self.domain)} points"
            )
        m = len(self.codomain)
        for v in self.values:
            if not (isinstance(v, int) and 0 <= v < m):
                raise MapSpaceMismatch(f"value index {v!r} outside codomain")

    @classmethod
    def from_dict(cls, domain: FinSpace, codomain: FinSpace, values: Mapping) -> SpaceMap:
        extra = set(values) - set(domain.points)
        if extra:
            raise MapSpaceMismatch(f"values given for non-domain points {sorted(map(str, extra))}")
        out = []
        for p in domain.points:
            if p not in values:
                raise MapSpaceMismatch(f"no value for domain point {p!r}")
            v = values[p]
            if v not in codomain.index:
                raise MapSpaceMismatch(f"value {v!r} of {p!r} is not a codomain point")
            out.append(codomain.index[v])
        return cls(domain, codomain, tuple(out))

    @classmethod
    def constant(cls, domain: FinSpace, codomain: FinSpace, value) -> SpaceMap:
        if value not in codomain.index:
            raise MapSpaceMismatch(f"value {value!r} is not a codomain point")
        return cls(domain, codomain, (codomain.index[value],) * len(domain))

    @classmethod
    def identity(cls, space: FinSpace) -> SpaceMap:
        return cls(space, space, tuple(range(len(space))))

    def __call__(self, x):
        return self.codomain.points[self.values[self.domain._idx(x)]]

    def as_dict(self) -> dict:
        return {p: self.codomain.points[v] for p, v in zip(self.domain.points, self.values)}

    def image_mask(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= 1 << self.values[i]
        return out


@dataclass(frozen=True)
class GraphSet:
    domain: FinSpace = field(repr=False)
    codomain: FinSpace = field(repr=False)
    pairs: frozenset

    def __post_init__(self):
        for x, y in self.pairs:
            if x not in self.domain.index:
                raise MapSpaceMismatch(f"{x!r} is not a domain point")
            if y not in self.codomain.index:
                raise MapSpaceMismatch(f"{y!r} is not a codomain point")


@dataclass(frozen=True)
class NotConstantOnComponent:
    component: tuple
    x: object
    y: object


@dataclass(frozen=True)
class ValueNotClosed:
    component: tuple
    value: object
    witness: object


Violation = Union[NotConstantOnComponent, ValueNotClosed]


@dataclass(frozen=True)
class CountReport:
    alpha: int
    beta: int
    count: int


def is_continuous(f: SpaceMap) -> bool:
    """f(V_x) must sit inside V_f(x) for every x."""
    cod = f.codomain.nbhd
    return all(
        not f.image_mask(v) & ~cod[f.values[i]] for i, v in enumerate(f.domain.nbhd)
    )


def graph_of(f: SpaceMap) -> GraphSet:
    return GraphSet(f.domain, f.codomain, frozenset(f.as_dict().items()))


def has_closed_graph_oracle(f: SpaceMap, limit: int = GRAPH_ORACLE_LIMIT) -> bool:
    """Closure of the graph in the product space equals the graph."""
    size = len(f.domain) * len(f.codomain)
    if size > limit:
        raise OracleTooLarge(size, limit)
    xy = product(f.domain, f.codomain)
    m = len(f.codomain)
    g = sum(1 << (i * m + v) for i, v in enumerate(f.values))
    return xy.closure_mask(g) == g


def closed_graph_witness(f: SpaceMap) -> Optional[Violation]:
    """First reason ``f`` fails to have closed graph, or ``None``.

    Components are scanned in order.  Within a component the first point is
    compared with the others in point order; if ``f`` is constant there, the
    value is checked for being closed and the first extra point of its
    closure is reported.
    """
    dom, cod = f.domain, f.codomain
    closed = cod.closed_mask
    for comp in components(dom).masks:
        members = list(iter_bits(comp))
        first = members[0]
        v = f.values[first]
        for i in members[1:]:
            if f.values[i] != v:
                return NotConstantOnComponent(dom.ordered(comp), dom.points[first], dom.points[i])
        if not closed >> v & 1:
            extra = cod.up[v] & ~(1 << v)
            w = (extra & -extra).bit_length() - 1
            return ValueNotClosed(dom.ordered(comp), cod.points[v], cod.points[w])
    return None


def has_closed_graph(f: SpaceMap) -> bool:
    return closed_graph_witness(f) is None


def count_closed_graph_maps(domain: FinSpace, codomain: FinSpace) -> CountReport:
    alpha = len(components(domain))
    beta = bin(codomain.closed_mask).count("1")
    return CountReport(alpha, beta, beta**alpha)


def enumerate_closed_graph_maps(domain: FinSpace, codomain: FinSpace, limit: int) -> list:
    """Every closed-graph map, in lexicographic order of the assignment
    component -> closed point.  Raises ``EnumerationTooLarge`` rather than
    truncating."""
    report = count_closed_graph_maps(domain, codomain)
    if report.count > limit:
        raise EnumerationTooLarge(report.count, limit)
    which = components(domain).class_index()
    closed = list(iter_bits(codomain.closed_mask))
    return [
        SpaceMap(domain, codomain, tuple(choice[k] for k in which))
        for choice in itertools.product(closed, repeat=report.alpha)
    ]


def restrict(f: SpaceMap, subset) -> SpaceMap:
    sub = f.domain.subspace(subset)
    values = tuple(f.values[f.domain.index[p]] for p in sub.points)
    return SpaceMap(sub, f.codomain, values)
