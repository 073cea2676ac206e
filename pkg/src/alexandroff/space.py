"""Finite spaces stored by their minimal open neighborhoods.

A finite topology is determined by the map ``x -> V_x`` (smallest open set
containing ``x``).  Internally points are dense indices and every set of
points is a Python ``int`` used as a bit-set; labels are only touched at the
boundary.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping

from .errors import (
    DuplicatePoint,
    InteriorityViolation,
    MissingNeighborhood,
    ReflexivityViolation,
    UnknownPoint,
)

Label = Hashable


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def format_label(label) -> str:
    """String form used in JSON/DOT output; tuples become ``"(a,b)"``."""
    if isinstance(label, str):
        return label
    if isinstance(label, tuple):
        return "(" + ",".join(format_label(c) for c in label) + ")"
    return str(label)


def validate(points, min_nbhd: Mapping | None = None) -> None:
    """Check raw ``(points, min_nbhd)`` data against the two neighborhood axioms.

    Raises the first violation found: duplicate ids, then unknown ids, then
    missing neighborhoods, then reflexivity (``x in V_x``) over all points,
    then interiority (``y in V_x`` implies ``V_y <= V_x``).  Points are
    scanned in the given order, neighborhood members in point order.

    A :class:`FinSpace` may be passed alone to re-check its stored data.
    """
    if isinstance(points, FinSpace):
        points, min_nbhd = points.points, points.min_nbhd
    points = list(points)
    index: dict = {}
    for p in points:
        if p in index:
            raise DuplicatePoint(p)
        index[p] = len(index)
    for key, nbhd in min_nbhd.items():
        if key not in index:
            raise UnknownPoint(key)
        for y in nbhd:
            if y not in index:
                raise UnknownPoint(y)
    for p in points:
        if p not in min_nbhd:
            raise MissingNeighborhood(p)
    masks = [_to_mask(index, min_nbhd[p]) for p in points]
    for i, m in enumerate(masks):
        if not m >> i & 1:
            raise ReflexivityViolation(points[i])
    for i, m in enumerate(masks):
        for j in iter_bits(m):
            if masks[j] & ~m:
                raise InteriorityViolation(points[i], points[j])


def _to_mask(index: Mapping, subset: Iterable) -> int:
    mask = 0
    for p in subset:
        try:
            mask |= 1 << index[p]
        except KeyError:
            raise UnknownPoint(p) from None
    return mask


@dataclass(frozen=True)
class FinSpace:
    """A finite topological space.

    ``nbhd[i]`` is the bit-set of V for the ``i``-th point.  The raw
    constructor trusts its input; use :meth:`from_sets` (or the other
    builders in this package) for checked construction.
    """

    points: tuple
    nbhd: tuple

    @classmethod
    def from_sets(cls, points: Iterable, min_nbhd: Mapping) -> FinSpace:
        points = tuple(points)
        validate(points, min_nbhd)
        index = {p: i for i, p in enumerate(points)}
        return cls(points, tuple(_to_mask(index, min_nbhd[p]) for p in points))

    @classmethod
    def discrete(cls, points: Iterable) -> FinSpace:
        points = tuple(points)
        return cls(points, tuple(1 << i for i in range(len(points))))

    @classmethod
    def indiscrete(cls, points: Iterable) -> FinSpace:
        points = tuple(points)
        full = (1 << len(points)) - 1
        return cls(points, (full,) * len(points))

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        body = ", ".join(
            f"{p!r}: {set(self.labels(m))!r}" for p, m in zip(self.points, self.nbhd)
        )
        return f"FinSpace({{{body}}})"

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    @cached_property
    def index(self) -> dict:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def up(self) -> tuple:
        """Inverted index: ``up[j]`` is the bit-set of ``{x : j in V_x}``."""
        up = [0] * len(self.points)
        for i, m in enumerate(self.nbhd):
            for j in iter_bits(m):
                up[j] |= 1 << i
        return tuple(up)

    @cached_property
    def closed_mask(self) -> int:
        return sum(1 << j for j, u in enumerate(self.up) if u == 1 << j)

    @property
    def min_nbhd(self) -> dict:
        return {p: self.labels(m) for p, m in zip(self.points, self.nbhd)}

    def mask(self, subset: Iterable) -> int:
        return _to_mask(self.index, subset)

    def ordered(self, mask: int) -> tuple:
        """Labels of ``mask`` in point order."""
        return tuple(self.points[i] for i in iter_bits(mask))

    def labels(self, mask: int) -> frozenset:
        return frozenset(self.ordered(mask))

    def V(self, x) -> frozenset:
        return self.labels(self.nbhd[self._idx(x)])

    def _idx(self, x) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise UnknownPoint(x) from None

    # -- closure / openness -------------------------------------------------

    def closure_mask(self, mask: int) -> int:
        # p in cl(S) iff V_p meets S, i.e. the union of up[s] over s in S
        out = 0
        for j in iter_bits(mask):
            out |= self.up[j]
        return out

    def closure(self, subset: Iterable) -> frozenset:
        return self.labels(self.closure_mask(self.mask(subset)))

    def is_open_mask(self, mask: int) -> bool:
        return all(not self.nbhd[i] & ~mask for i in iter_bits(mask))

    def is_open(self, subset: Iterable) -> bool:
        return self.is_open_mask(self.mask(subset))

    def is_closed_mask(self, mask: int) -> bool:
        return self.is_open_mask(self.full & ~mask)

    def is_closed_point(self, x) -> bool:
        return bool(self.closed_mask >> self._idx(x) & 1)

    def closed_points(self) -> tuple:
        return self.ordered(self.closed_mask)

    def subspace(self, subset: Iterable) -> FinSpace:
        """Subspace on ``subset`` (kept in this space's point order)."""
        keep = list(iter_bits(self.mask(subset)))
        keep_mask = sum(1 << i for i in keep)
        new_index = {old: new for new, old in enumerate(keep)}
        nbhd = []
        for i in keep:
            nbhd.append(sum(1 << new_index[j] for j in iter_bits(self.nbhd[i] & keep_mask)))
        return FinSpace(tuple(self.points[i] for i in keep), tuple(nbhd))


def product(a: FinSpace, b: FinSpace) -> FinSpace:
    """Product space with points ``(x, y)`` in row-major order and
    ``V_(x,y) = V_x * V_y``."""
    m = len(b)
    points = tuple((x, y) for x in a.points for y in b.points)
    nbhd = []
    for va in a.nbhd:
        rows = [i for i in iter_bits(va)]
        for vb in b.nbhd:
            nbhd.append(sum(vb << (i * m) for i in rows))
    return FinSpace(points, tuple(nbhd))
