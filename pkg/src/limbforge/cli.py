"""Command-line interface.

All machine output is JSON with arbitrary-precision integers rendered as
decimal strings; identical invocations produce byte-identical output.
Exit codes: 0 success, 2 validation/usage error, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions, hopf, limbs, series, spectra, trees, verify
from .census import KINDS, PROPERTIES, census as run_census
from .errors import LimbforgeError

SERIES_ALIASES = {
    "T": "rooted", "rooted": "rooted",
    "TW": "weighted-rooted", "weighted-rooted": "weighted-rooted",
    "W": "weighted-free", "weighted-free": "weighted-free",
    "S": "avoid-limb", "avoid-limb": "avoid-limb",
    "SW": "avoid-limb-weighted", "avoid-limb-weighted": "avoid-limb-weighted",
    "SSTAR": "avoid-maximal-limb", "avoid-maximal-limb": "avoid-maximal-limb",
    "SU": "avoid-limb-weighted-free",
    "avoid-limb-weighted-free": "avoid-limb-weighted-free",
    "F": "dominating-bound", "dominating-bound": "dominating-bound",
}


def _read_graph(path: str) -> trees.WeightedGraph:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return trees.WeightedGraph.from_json(json.loads(text))


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _poly_json(p: spectra.IntPolynomial) -> dict:
    return {"degree": p.degree,
            "coefficients": [str(c) for c in p.coeffs]}


def _tree_json(t: trees.CanonicalTree) -> dict:
    return trees.to_graph(t).to_json()


def _cmd_enumerate(args) -> int:
    stream = {
        "rooted": trees.enumerate_rooted,
        "free": trees.enumerate_free,
        "weighted-rooted": trees.enumerate_weighted_rooted,
        "weighted-free": trees.enumerate_weighted_free,
    }[args.kind](args.size)
    out = [_tree_json(t) for t in stream]
    _emit({"kind": args.kind, "size": args.size, "count": len(out), "trees": out})
    return 0


def _cmd_series(args) -> int:
    which = SERIES_ALIASES.get(args.which)
    if which is None:
        raise LimbforgeError(f"unknown series {args.which!r}")
    needs_ell = which.startswith("avoid")
    if needs_ell and args.ell is None:
        raise LimbforgeError(f"series {which!r} needs --ell")
    n = args.terms
    if which == "rooted":
        s = series.series_rooted(n)
    elif which == "weighted-rooted":
        s = series.series_weighted_rooted(n)
    elif which == "weighted-free":
        s = series.series_weighted_free(n)
    elif which == "avoid-limb":
        s = series.series_avoid_limb_rooted(args.ell, n)
    elif which == "avoid-limb-weighted":
        s = series.series_avoid_limb_weighted(args.ell, n)
    elif which == "avoid-maximal-limb":
        s = series.series_avoid_maximal_limb(args.ell, n)
    elif which == "avoid-limb-weighted-free":
        s = series.series_avoid_limb_weighted_free(args.ell, n)
    else:
        s = series.series_dominating_bound(n)
    _emit({"which": args.which, "N": n,
           "coefficients": [str(c) for c in s.integer_coefficients()]})
    return 0


def _cmd_count_avoiding(args) -> int:
    pattern = trees.canonicalize_rooted(_read_graph(args.limb))
    spec = limbs.LimbSpec(pattern, args.mode)
    count = limbs.count_avoiding(args.n, spec, weighted=args.weighted, free=args.free)
    _emit({"n": args.n, "count": str(count)})
    return 0


def _cmd_charpoly(args) -> int:
    g = _read_graph(args.graph)
    _emit(_poly_json(spectra.char_poly(g, weighted=args.weighted)))
    return 0


def _cmd_cospectral(args) -> int:
    g = _read_graph(args.graph)
    classes = spectra.cospectral_vertices(g, weighted=args.weighted)
    _emit({"classes": [{"vertices": list(members),
                        "polynomial": _poly_json(poly)["coefficients"]}
                       for members, poly in classes.classes]})
    return 0


def _cmd_mate(args) -> int:
    g = _read_graph(args.graph)
    mate = spectra.schwenk_mate(g)
    _emit(mate.to_json() if mate is not None else None)
    return 0


def _cmd_construct(args) -> int:
    if args.recipe != "k-cospectral":
        raise LimbforgeError(f"unknown recipe {args.recipe!r}")
    text = sys.stdin.read() if args.seed == "-" else open(args.seed, encoding="utf-8").read()
    data = json.loads(text)
    seed = constructions.CospectralSeed(
        trees.WeightedGraph.from_json(data["base"]),
        tuple(frozenset(s) for s in data["sets"]))
    graph, designated = constructions.k_cospectral_construction(seed)
    out = graph.to_json()
    out["designated"] = list(designated)
    _emit(out)
    return 0


def _cmd_fixture(args) -> int:
    _emit(constructions.fixture(args.name).to_json())
    return 0


def _cmd_coproduct(args) -> int:
    t = trees.canonicalize_rooted(_read_graph(args.graph))
    out = [{"left": [_tree_json(x) for x in term.left],
            "right": _tree_json(term.right) if term.right is not None else None,
            "coeff": term.coefficient}
           for term in hopf.coproduct(t)]
    _emit(out)
    return 0


def _cmd_census(args) -> int:
    limb_spec = None
    if args.limb is not None:
        pattern = trees.canonicalize_rooted(_read_graph(args.limb))
        limb_spec = limbs.LimbSpec(pattern, args.mode)
    elif args.property == "has_limb":
        base = constructions.fixture("schwenk_tree")
        a = constructions.SCHWENK_COSPECTRAL_PAIR[0]
        limb_spec = limbs.LimbSpec(trees.canonicalize_rooted(base.with_root(a)),
                                   args.mode)
    for row in run_census(args.property, args.kind, args.n_max,
                                 n_min=args.n_min, limb=limb_spec, k=args.k):
        print(json.dumps(row.to_json()))
    return 0


def _cmd_verify(args) -> int:
    return 0 if verify.run_verify() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="limbforge")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream tree representatives")
    p.add_argument("--kind", default="rooted",
                   choices=["rooted", "free", "weighted-rooted", "weighted-free"])
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("series", help="exact counting-series coefficients")
    p.add_argument("--which", required=True)
    p.add_argument("--terms", type=int, default=series.DEFAULT_ORDER)
    p.add_argument("--ell", type=int, default=None)
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("count-avoiding", help="brute-force avoidance count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limb", required=True, help="rooted tree JSON ('-' for stdin)")
    p.add_argument("--mode", default=limbs.LIMB, choices=[limbs.LIMB, limbs.MAXIMAL])
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--free", action="store_true")
    p.set_defaults(fn=_cmd_count_avoiding)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial")
    p.add_argument("graph", help="graph JSON file or '-'")
    p.add_argument("--weighted", action="store_true")
    p.set_defaults(fn=_cmd_charpoly)

    p = sub.add_parser("cospectral-vertices", help="deleted-vertex polynomial classes")
    p.add_argument("graph")
    p.add_argument("--weighted", action="store_true")
    p.set_defaults(fn=_cmd_cospectral)

    p = sub.add_parser("mate", help="cospectral mate via the exchange limb")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_mate)

    p = sub.add_parser("construct", help="build a many-cospectral-vertex graph")
    p.add_argument("--recipe", default="k-cospectral")
    p.add_argument("--seed", required=True, help="seed JSON file or '-'")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("fixture", help="named example graphs")
    p.add_argument("--name", required=True, choices=list(constructions.FIXTURE_NAMES))
    p.set_defaults(fn=_cmd_fixture)

    p = sub.add_parser("coproduct", help="rooted-tree coproduct terms")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_coproduct)

    p = sub.add_parser("census", help="property fractions over tree families")
    p.add_argument("--property", required=True, choices=list(PROPERTIES))
    p.add_argument("--kind", default="free", choices=list(KINDS))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--limb", default=None)
    p.add_argument("--mode", default=limbs.LIMB, choices=[limbs.LIMB, limbs.MAXIMAL])
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("verify", help="run the whole identity/oracle suite")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (LimbforgeError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - report, don't traceback-spam
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
