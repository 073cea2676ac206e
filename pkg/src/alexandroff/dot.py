"""Graphviz export of the specialization structure (``x -> y`` when ``y`` is
in ``V_x``), reduced to covering edges."""
from __future__ import annotations

from .space import FinSpace, format_label, iter_bits


def _quote(label) -> str:
    s = format_label(label).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{s}"'


def export_dot(space: FinSpace, name: str = "space") -> str:
    """DOT digraph; closed points are drawn as double circles.

    Points with identical neighborhoods (a cycle of the preorder) are joined
    by edges both ways and are not reduced against each other.  Between
    distinct classes only covering edges are kept.
    """
    nb = space.nbhd
    # strict part: drop the points that share x's neighborhood
    strict = [v & ~sum(1 << j for j in iter_bits(v) if nb[j] == v) for v in nb]
    lines = [f"digraph {name} {{"]
    closed = space.closed_mask
    for i, p in enumerate(space.points):
        shape = "doublecircle" if closed >> i & 1 else "circle"
        lines.append(f"  {_quote(p)} [shape={shape}];")
    for i, p in enumerate(space.points):
        same = sum(1 << j for j in iter_bits(nb[i]) if nb[j] == nb[i] and j != i)
        below = 0
        for j in iter_bits(strict[i]):
            below |= strict[j]
        covers = strict[i] & ~below
        for j in iter_bits(same | covers):
            lines.append(f"  {_quote(p)} -> {_quote(space.points[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
