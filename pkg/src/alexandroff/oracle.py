"""Definition-level brute force, used to cross-check the fast algorithms.

Nothing here looks at the overlap relation between neighborhoods.  Open sets
are found by testing every subset, connectedness by testing every bipartition.
All enumeration is vectorized over numpy ``int64`` arrays of bit-sets.
"""
from __future__ import annotations

import numpy as np

from .errors import OracleTooLarge
from .space import FinSpace, iter_bits

COMPONENT_ORACLE_LIMIT = 12
OPEN_SET_LIMIT = 20


def _all_masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def _submasks(mask: int) -> np.ndarray:
    """Every submask of ``mask`` (including 0 and ``mask``)."""
    bits = list(iter_bits(mask))
    t = _all_masks(len(bits))
    out = np.zeros_like(t)
    for j, pos in enumerate(bits):
        out |= ((t >> j) & 1) << pos
    return out


def _relatively_open(space: FinSpace, ambient: int, subs: np.ndarray) -> np.ndarray:
    """Flags: is each ``B`` in ``subs`` open in the subspace ``ambient``?

    ``B`` is open in the subspace iff ``V_i & ambient`` stays inside ``B``
    for every ``i`` in ``B``.
    """
    ok = np.ones(subs.shape, dtype=bool)
    for i in iter_bits(ambient):
        v = space.nbhd[i] & ambient
        has_i = ((subs >> i) & 1).astype(bool)
        ok &= ~(has_i & ((v & ~subs) != 0))
    return ok


def open_set_masks(space: FinSpace, limit: int = OPEN_SET_LIMIT) -> np.ndarray:
    """All open sets of ``space`` as bit-sets, by testing each of the 2^n subsets."""
    n = len(space)
    if n > limit:
        raise OracleTooLarge(n, limit)
    subs = _all_masks(n)
    return subs[_relatively_open(space, space.full, subs)]


def is_connected_brute(space: FinSpace, mask: int) -> bool:
    """True iff the subspace on ``mask`` has no separation into two nonempty
    relatively open pieces."""
    subs = _submasks(mask)
    ok = _relatively_open(space, mask, subs) & _relatively_open(space, mask, mask ^ subs)
    # the trivial pair (0, mask) is always clopen
    return int(ok.sum()) <= 2 if mask else True


def connected_subset_flags(space: FinSpace, limit: int = COMPONENT_ORACLE_LIMIT) -> np.ndarray:
    """``flags[A]`` is True iff the subset with bit-set ``A`` is connected."""
    n = len(space)
    if n > limit:
        raise OracleTooLarge(n, limit)
    flags = np.zeros(1 << n, dtype=bool)
    for a in range(1 << n):
        flags[a] = is_connected_brute(space, a)
    return flags


def components_by_connected_subsets(space: FinSpace, limit: int = COMPONENT_ORACLE_LIMIT) -> list:
    """Component bit-sets straight from the definition: the component of x is
    the union of all connected subsets containing x.  Cost is 3^n."""
    flags = connected_subset_flags(space, limit)
    connected = np.nonzero(flags)[0]
    comps = []
    seen = 0
    for x in range(len(space)):
        if seen >> x & 1:
            continue
        containing = connected[((connected >> x) & 1).astype(bool)]
        comp = int(np.bitwise_or.reduce(containing))
        comps.append(comp)
        seen |= comp
    return comps


def component_masks_oracle(space: FinSpace, limit: int = COMPONENT_ORACLE_LIMIT) -> list:
    """Component bit-sets, ordered by smallest member.

    For each x take the intersection Q of every clopen set containing x.  Any
    connected set through x lies inside Q (a clopen set cannot split it); if Q
    itself passes the bipartition test it is therefore exactly the component.
    Should a Q ever fail that test, fall back to the 3^n union-of-connected-
    subsets definition.
    """
    n = len(space)
    if n > limit:
        raise OracleTooLarge(n, limit)
    if n == 0:
        return []
    subs = _all_masks(n)
    is_open = _relatively_open(space, space.full, subs)
    clopen = subs[is_open & is_open[space.full ^ subs]]
    comps = []
    seen = 0
    for x in range(n):
        if seen >> x & 1:
            continue
        q = int(np.bitwise_and.reduce(clopen[((clopen >> x) & 1).astype(bool)]))
        if not is_connected_brute(space, q):
            return components_by_connected_subsets(space, limit)
        comps.append(q)
        seen |= q
    return comps


def is_continuous_brute(domain: FinSpace, codomain: FinSpace, values, limit: int = OPEN_SET_LIMIT) -> bool:
    """Preimage of every open set of the codomain is open in the domain.

    ``values[i]`` is the codomain index of domain point ``i``.
    """
    for u in open_set_masks(codomain, limit):
        u = int(u)
        pre = sum(1 << i for i, v in enumerate(values) if u >> v & 1)
        if not domain.is_open_mask(pre):
            return False
    return True
