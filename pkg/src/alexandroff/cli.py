"""Command-line front end.

JSON (or DOT) goes to stdout, diagnostics to stderr.  Exit status is 0 on
success, 1 on a domain error (with ``{"error": {...}}`` on stdout) and 2 on
a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io, oracle
from .components import components, components_oracle
from .dot import export_dot
from .errors import TopologyError
from .generators import GenConfig, random_space
from .khalimsky import MAX_POINTS, khalimsky_space
from .maps import (
    GRAPH_ORACLE_LIMIT,
    NotConstantOnComponent,
    closed_graph_witness,
    count_closed_graph_maps,
    enumerate_closed_graph_maps,
    has_closed_graph_oracle,
    is_continuous,
)
from .space import format_label, validate


def _labels(seq):
    return [format_label(p) for p in seq]


def _witness_obj(w):
    if isinstance(w, NotConstantOnComponent):
        return {"type": "NotConstantOnComponent", "component": _labels(w.component),
                "x": format_label(w.x), "y": format_label(w.y)}
    return {"type": "ValueNotClosed", "component": _labels(w.component),
            "value": format_label(w.value), "witness": format_label(w.witness)}


def cmd_validate(args):
    with open(args.space) as fh:
        obj = io.parse_json(fh.read(), args.space)
    if not isinstance(obj, dict) or "points" not in obj or "min_nbhd" not in obj:
        raise io.FormatError("space JSON needs 'points' and 'min_nbhd'")
    points = [str(p) for p in obj["points"]]
    validate(points, {str(k): [str(y) for y in v] for k, v in obj["min_nbhd"].items()})
    return {"valid": True, "points": len(points)}


def cmd_components(args):
    space = io.load_space(args.space)
    out = {"classes": [_labels(c) for c in components(space).classes]}
    if args.oracle:
        brute = components_oracle(space, limit=args.oracle_limit)
        out["classes_oracle"] = [_labels(c) for c in brute.classes]
        out["agree"] = out["classes"] == out["classes_oracle"]
    return out


def cmd_closed_points(args):
    space = io.load_space(args.space)
    return {"closed_points": _labels(space.closed_points())}


def cmd_closure(args):
    space = io.load_space(args.space)
    subset = [s for s in args.set.split(",") if s] if args.set else []
    mask = space.mask(subset)
    return {"closure": _labels(space.ordered(space.closure_mask(mask)))}


def cmd_check_map(args):
    f = io.load_map(args.map)
    w = closed_graph_witness(f)
    rep = count_closed_graph_maps(f.domain, f.codomain)
    out = {"continuous": is_continuous(f), "closed_graph": w is None}
    if args.oracle:
        out["closed_graph_oracle"] = has_closed_graph_oracle(f, limit=args.oracle_limit)
    if w is not None:
        out["witness"] = _witness_obj(w)
    out.update(alpha=rep.alpha, beta=rep.beta, count=str(rep.count))
    return out


def cmd_count(args):
    rep = count_closed_graph_maps(io.load_space(args.domain), io.load_space(args.codomain))
    return {"alpha": rep.alpha, "beta": rep.beta, "count": str(rep.count)}


def cmd_enumerate(args):
    dom, cod = io.load_space(args.domain), io.load_space(args.codomain)
    maps = enumerate_closed_graph_maps(dom, cod, args.limit)
    return {"count": str(len(maps)), "maps": [io.map_to_obj(f, inline=False) for f in maps]}


def cmd_gen_khalimsky(args):
    return io.space_to_obj(khalimsky_space(args.dim, args.lo, args.hi, args.max_points))


def cmd_gen_random(args):
    return io.space_to_obj(random_space(GenConfig(args.seed, args.points, args.density)))


def cmd_export_dot(args):
    return export_dot(io.load_space(args.space))


def _density(text):
    v = float(text)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError("density must lie in [0, 1]")
    return v


def _nonnegative(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alexandroff", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the neighborhood axioms")
    s.add_argument("space")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("components", help="connected components")
    s.add_argument("space")
    s.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    s.add_argument("--oracle-limit", type=_positive, default=oracle.COMPONENT_ORACLE_LIMIT)
    s.set_defaults(func=cmd_components)

    s = sub.add_parser("closed-points", help="points whose closure is themselves")
    s.add_argument("space")
    s.set_defaults(func=cmd_closed_points)

    s = sub.add_parser("closure", help="closure of a set of points")
    s.add_argument("space")
    s.add_argument("--set", default="", help="comma-separated point labels")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("check-map", help="continuity and closed graph of a map")
    s.add_argument("map")
    s.add_argument("--oracle", action="store_true", help="also take the closure of the graph in X*Y")
    s.add_argument("--oracle-limit", type=_positive, default=GRAPH_ORACLE_LIMIT)
    s.set_defaults(func=cmd_check_map)

    s = sub.add_parser("count", help="number of closed-graph maps X -> Y")
    s.add_argument("domain")
    s.add_argument("codomain")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("enumerate", help="list all closed-graph maps X -> Y")
    s.add_argument("domain")
    s.add_argument("codomain")
    s.add_argument("--limit", type=_positive, required=True)
    s.set_defaults(func=cmd_enumerate)

    g = sub.add_parser("gen", help="generate a space").add_subparsers(dest="kind", required=True)
    s = g.add_parser("khalimsky", help="window of the n-dimensional Khalimsky space")
    s.add_argument("--dim", type=_positive, default=1)
    s.add_argument("--lo", type=int, required=True)
    s.add_argument("--hi", type=int, required=True)
    s.add_argument("--max-points", type=_positive, default=MAX_POINTS)
    s.set_defaults(func=cmd_gen_khalimsky)
    s = g.add_parser("random", help="seeded random space")
    s.add_argument("--points", type=_nonnegative, required=True)
    s.add_argument("--density", type=_density, default=0.3)
    s.add_argument("--seed", type=int, required=True)
    s.set_defaults(func=cmd_gen_random)

    s = sub.add_parser("export-dot", help="Hasse-style DOT graph of the space")
    s.add_argument("space")
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except TopologyError as e:
        print(json.dumps({"error": e.to_json()}))
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(json.dumps({"error": {"type": "IOError", "reason": str(e)}}))
        print(f"error: {e}", file=sys.stderr)
        return 1
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        print(json.dumps(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
