"""Finite windows of the Khalimsky line and its n-fold products.

On the full line odd points are open and the smallest neighborhood of an
even point ``2m`` is ``{2m-1, 2m, 2m+1}``.  A window ``[lo, hi]`` carries the
subspace topology, so neighborhoods at an even endpoint get clipped.
"""
from __future__ import annotations

import itertools
import warnings

from .errors import EmptyWindow, SizeLimit
from .space import FinSpace

MAX_POINTS = 200_000


def _line_nbhds(lo: int, hi: int) -> list:
    # masks relative to lo, clipped to the window
    out = []
    for k in range(lo, hi + 1):
        if k % 2:
            out.append([k])
        else:
            out.append([j for j in (k - 1, k, k + 1) if lo <= j <= hi])
    return out


def khalimsky_line(lo: int, hi: int) -> FinSpace:
    if lo > hi:
        raise EmptyWindow(lo, hi)
    nb = _line_nbhds(lo, hi)
    return FinSpace(
        tuple(range(lo, hi + 1)),
        tuple(sum(1 << (j - lo) for j in v) for v in nb),
    )


def khalimsky_space(dim: int, lo: int, hi: int, max_points: int = MAX_POINTS) -> FinSpace:
    """``dim``-fold product of ``khalimsky_line(lo, hi)``.

    Points are ``dim``-tuples in lexicographic order (plain ints when
    ``dim == 1``), which is the same order :func:`~alexandroff.space.product`
    produces.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    if lo > hi:
        raise EmptyWindow(lo, hi)
    if dim == 1:
        return khalimsky_line(lo, hi)
    w = hi - lo + 1
    size = w**dim
    if size > max_points:
        raise SizeLimit(size, max_points)
    axis = [[j - lo for j in v] for v in _line_nbhds(lo, hi)]
    points = tuple(itertools.product(range(lo, hi + 1), repeat=dim))
    nbhd = []
    for p in points:
        mask = 0
        for offs in itertools.product(*(axis[c - lo] for c in p)):
            idx = 0
            for o in offs:
                idx = idx * w + o
            mask |= 1 << idx
        nbhd.append(mask)
    return FinSpace(points, tuple(nbhd))


def khalimsky_closed_points(dim: int, lo: int, hi: int, max_points: int = MAX_POINTS) -> list:
    """All-even tuples of the window, in point order.

    Only odd-endpoint windows are accepted as-is.  For an even endpoint a
    warning is issued and the closed points are computed from the generated
    space instead.
    """
    space = khalimsky_space(dim, lo, hi, max_points)
    if lo % 2 == 0 or hi % 2 == 0:
        warnings.warn(
            f"window [{lo}, {hi}] has an even endpoint; returning the closed points "
            "computed from the clipped space",
            stacklevel=2,
        )
        return list(space.closed_points())
    if dim == 1:
        return [p for p in space.points if p % 2 == 0]
    return [p for p in space.points if all(c % 2 == 0 for c in p)]
