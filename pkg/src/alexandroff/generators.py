"""Seeded random spaces and maps for property tests.

The bit generator is numpy's PCG64 (``numpy.random.Generator(PCG64(seed))``).
Each call builds its own generator from the seed, so there is no shared state.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .components import components
from .errors import EmptyCodomain
from .maps import SpaceMap
from .space import FinSpace


@dataclass(frozen=True)
class GenConfig:
    seed: int
    n_points: int
    density: float = 0.3

    def __post_init__(self):
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density {self.density} outside [0, 1]")
        if self.n_points < 0:
            raise ValueError("n_points must be >= 0")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & 0xFFFF_FFFF_FFFF_FFFF))


def reflexive_transitive_closure(rows: list) -> list:
    """Warshall on bit-set rows: ``rows[i]`` bit ``j`` means i -> j."""
    rows = [r | 1 << i for i, r in enumerate(rows)]
    for k in range(len(rows)):
        bit = 1 << k
        rk = rows[k]
        for i in range(len(rows)):
            if rows[i] & bit:
                rows[i] |= rk
    return rows


def random_space(cfg: GenConfig) -> FinSpace:
    """Random relation with edge probability ``density``, closed up to a
    preorder; ``V_x`` is the set of points reachable from ``x``.
    Point labels are ``"0" .. "n-1"``."""
    n = cfg.n_points
    draws = _rng(cfg.seed).random((n, n)) < cfg.density
    rows = [sum(1 << j for j in range(n) if draws[i, j] and i != j) for i in range(n)]
    return FinSpace(tuple(str(i) for i in range(n)), tuple(reflexive_transitive_closure(rows)))


def random_map(seed: int, domain: FinSpace, codomain: FinSpace) -> SpaceMap:
    """Each value drawn uniformly and independently."""
    if len(domain) and not len(codomain):
        raise EmptyCodomain()
    if not len(domain):
        return SpaceMap(domain, codomain, ())
    values = _rng(seed).integers(0, len(codomain), size=len(domain))
    return SpaceMap(domain, codomain, tuple(int(v) for v in values))


def random_subset(seed: int, space: FinSpace, p: float = 0.5) -> int:
    """Bit-set with each point included with probability ``p``."""
    draws = _rng(seed).random(len(space)) < p
    return sum(1 << i for i, d in enumerate(draws) if d)


def random_component_map(seed: int, domain: FinSpace, codomain: FinSpace, p_closed: float = 0.5) -> SpaceMap:
    """A map constant on each component of ``domain``.

    Each component value is a closed point with probability ``p_closed`` when
    the codomain has any, otherwise any point.  Uniform maps almost never have
    closed graph, so property suites mix these in to exercise both outcomes.
    """
    if len(domain) and not len(codomain):
        raise EmptyCodomain()
    rng = _rng(seed)
    closed = list(codomain.closed_points())
    which = components(domain).class_index()
    n_comp = max(which, default=-1) + 1
    picks = []
    for _ in range(n_comp):
        if closed and rng.random() < p_closed:
            picks.append(codomain.index[closed[int(rng.integers(len(closed)))]])
        else:
            picks.append(int(rng.integers(len(codomain))))
    return SpaceMap(domain, codomain, tuple(picks[k] for k in which))
