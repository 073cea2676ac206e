"""Connected components of finite spaces.

Two points are related when a chain of points with pairwise overlapping
minimal neighborhoods joins them; the classes of that relation are the
connected components.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import oracle
from .space import FinSpace, iter_bits


class UnionFind:
    """Disjoint sets over 0..n-1 with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


@dataclass(frozen=True)
class Partition:
    space: FinSpace = field(repr=False)
    masks: tuple  # one bit-set per class, sorted by smallest member

    @property
    def classes(self) -> list:
        """Classes as tuples of labels, in point order."""
        return [self.space.ordered(m) for m in self.masks]

    @property
    def class_of(self) -> dict:
        return {self.space.points[i]: k for k, m in enumerate(self.masks) for i in iter_bits(m)}

    def class_index(self) -> list:
        """``out[i]`` is the class number of point index ``i``."""
        out = [0] * len(self.space)
        for k, m in enumerate(self.masks):
            for i in iter_bits(m):
                out[i] = k
        return out

    def __len__(self):
        return len(self.masks)


def _from_masks(space: FinSpace, masks) -> Partition:
    return Partition(space, tuple(sorted(masks, key=lambda m: m & -m)))


def components(space: FinSpace) -> Partition:
    """Components via union-find over the inverted neighborhood index.

    All ``x`` with a common point ``j`` in ``V_x`` overlap pairwise, so it is
    enough to union each bucket ``up[j]``.  Linear in the total size of the
    neighborhoods.
    """
    n = len(space)
    uf = UnionFind(n)
    for bucket in space.up:
        first = (bucket & -bucket).bit_length() - 1
        for i in iter_bits(bucket & (bucket - 1)):
            uf.union(first, i)
    groups: dict = {}
    for i in range(n):
        r = uf.find(i)
        groups[r] = groups.get(r, 0) | 1 << i
    return _from_masks(space, groups.values())


def components_oracle(space: FinSpace, limit: int = oracle.COMPONENT_ORACLE_LIMIT) -> Partition:
    """Components from clopen-set enumeration; raises ``OracleTooLarge`` above
    ``limit`` points."""
    return _from_masks(space, oracle.component_masks_oracle(space, limit))
