"""Command-line interface.  Every command writes canonical JSON (sorted keys).

Exit codes: 0 success, 1 computational error, 2 usage error or malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import birational as bir
from .catalog import CatalogError, ChartSpec, chart_weights, identify, standard_fan
from .linalg import LinalgError, transposed_gale_dual
from .polyhedral import Fan, PolyhedralError, fan_report
from .quotients import (
    QuotientError,
    WeightSystem,
    chow_polytope,
    fiber_polytope,
    git_chambers,
    git_quotient_fan,
    quotient_fan,
    quotient_fan_general,
    semistable_support,
)


class InputError(Exception):
    """Malformed input; the message names the offending field."""


def _encode(o: Any):
    if isinstance(o, Fraction):
        return int(o) if o.denominator == 1 else f"{o.numerator}/{o.denominator}"
    if isinstance(o, (tuple, set, frozenset)):
        return list(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, default=_encode)


# ---------------------------------------------------------------------------
# input parsing


def _read_json(args) -> dict:
    text = open(args.input).read() if args.input and args.input != "-" else sys.stdin.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    return data


def _int_matrix(data: dict, key: str) -> list[list[int]]:
    if key not in data:
        raise InputError(f"missing field '{key}'")
    rows = data[key]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError(f"field '{key}' must be a list of integer lists")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError(f"field '{key}' has a non-integer entry {x!r}")
    if len({len(r) for r in rows}) > 1:
        raise InputError(f"field '{key}' has rows of different lengths")
    return rows


def _weight_system(data: dict) -> WeightSystem:
    if "weights" in data:
        weights = _int_matrix(data, "weights")
        if not weights:
            raise InputError("field 'weights' is empty")
        mat = [list(c) for c in zip(*weights)]
    elif "matrix" in data:
        mat = _int_matrix(data, "matrix")
    else:
        raise InputError("missing field 'weights'")
    labels = data.get("labels", [])
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise InputError("field 'labels' must be a list of strings")
    if labels and mat and len(labels) != len(mat[0]):
        raise InputError("field 'labels' must have one entry per weight")
    return WeightSystem(tuple(map(tuple, mat)), tuple(labels))


def _fan(data: dict) -> Fan:
    if "rank" not in data or isinstance(data["rank"], bool) or not isinstance(data["rank"], int):
        raise InputError("missing or non-integer field 'rank'")
    rays = _int_matrix(data, "rays")
    if "max_cones" not in data or not isinstance(data["max_cones"], list):
        raise InputError("missing field 'max_cones'")
    for c in data["max_cones"]:
        if not isinstance(c, list) or not all(isinstance(i, int) and 0 <= i < len(rays) for i in c):
            raise InputError(f"field 'max_cones' has an invalid cone {c!r}")
    try:
        return Fan.from_json({"rank": data["rank"], "rays": rays, "max_cones": data["max_cones"]})
    except (PolyhedralError, LinalgError) as exc:
        raise InputError(str(exc))


def _vector(text: str | None) -> list[Fraction]:
    if text is None:
        raise InputError("missing --v")
    try:
        return [Fraction(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"--v must be comma-separated rationals, got {text!r}")


def _fan_json(f: Fan) -> dict:
    d = f.to_json()
    d["report"] = fan_report(f).to_json()
    return d


# ---------------------------------------------------------------------------
# commands


def cmd_gale(args):
    ws_data = _read_json(args)
    if "weights" in ws_data:
        mat = [list(c) for c in zip(*_int_matrix(ws_data, "weights"))]
    else:
        mat = _int_matrix(ws_data, "matrix" if "matrix" in ws_data else "weights")
    return {"gale": transposed_gale_dual(mat)}


def cmd_quotient_fan(args):
    return _fan_json(quotient_fan(_weight_system(_read_json(args))))


def cmd_quotient_fan_general(args):
    data = _read_json(args)
    if "fan" not in data or not isinstance(data["fan"], dict):
        raise InputError("missing field 'fan'")
    return _fan_json(quotient_fan_general(_fan(data["fan"]), _int_matrix(data, "projection")))


def cmd_git_chambers(args):
    cc = git_chambers(_weight_system(_read_json(args)))
    d = cc.to_json()
    d["count"] = len(cc.chambers)
    return d


def cmd_fiber_polytope(args):
    return fiber_polytope(_weight_system(_read_json(args)), _vector(args.v)).to_json()


def cmd_git_fan(args):
    return _fan_json(git_quotient_fan(_weight_system(_read_json(args)), _vector(args.v)))


def cmd_semistable(args):
    ws = _weight_system(_read_json(args))
    support = semistable_support(ws, _vector(args.v))
    return {"labels": list(ws.labels), "may_vanish": support,
            "unstable": [lab for lab, ok in zip(ws.labels, support) if not ok]}


def cmd_chow_polytope(args):
    return chow_polytope(_weight_system(_read_json(args))).to_json()


def cmd_identify(args):
    return identify(_fan(_read_json(args)), args.against)


def cmd_catalog(args):
    spec = ChartSpec(args.family, args.n or 0, args.k or 0, args.copies or 0)
    d = chart_weights(spec).to_json()
    d["chart"] = {"family": spec.family, "n": spec.n, "k": spec.k, "copies": spec.copies}
    return d


def cmd_catalog_fan(args):
    if args.dims is None:
        raise InputError("missing --dims")
    try:
        dims = [int(x) for x in args.dims.split(",")]
    except ValueError:
        raise InputError(f"--dims must be comma-separated integers, got {args.dims!r}")
    return _fan_json(standard_fan(args.kind, dims if args.kind == "product" else dims[0]))


def cmd_mutations(args):
    n, k = args.n, args.k
    maps = [bir.mutation_map(n, k, i) for i in range(1, n + 1)]
    rep = bir.verify_coxeter(maps, mode=args.mode, seed=args.seed, samples=args.samples)
    eq = bir.verify_equivariance(n, k, mode=args.mode, seed=args.seed, samples=args.samples)
    return {"n": n, "k": k, "coxeter": rep.to_json(), "equivariance": eq.to_json(),
            "maps": [str(m) for m in maps], "holds": rep.holds and eq.holds}


def cmd_quadric(args):
    if args.action == "boundary":
        forms = bir.quadric_boundary(args.n, even=args.even)
        first = 2 if args.even else 1
        return {"n": args.n, "even": args.even, "forms": forms,
                "equations": [bir.format_linear_form(f, first) for f in forms]}
    if args.i is None:
        raise InputError("missing --i")
    if args.even:
        M = bir.even_quadric_transition(args.n, args.i)
    else:
        M = bir.quadric_transition(args.n, args.i, order=args.order)
    return {"n": args.n, "i": args.i, "even": args.even, "order": args.order, "matrix": M}


def cmd_verify_paper(args):
    from .acceptance import run_all
    which = [int(x) for x in args.only.split(",")] if args.only else None
    results = run_all(which)
    if args.json:
        print(dumps({"results": [r.to_json() for r in results],
                     "passed": all(r.passed for r in results)}))
    else:
        for r in results:
            print(r.line())
            for d in r.details:
                print(f"       {d}")
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return None if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="combquot", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, needs_input=True, v=False):
        sp = sub.add_parser(name)
        if needs_input:
            sp.add_argument("--input", "-i", help="JSON input file (default stdin)")
        if v:
            sp.add_argument("--v", help="linearization, comma-separated rationals (write --v=-1,2 for a leading minus)")
        sp.add_argument("--output", "-o", help="write JSON here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    add("gale", cmd_gale)
    add("quotient-fan", cmd_quotient_fan)
    add("quotient-fan-general", cmd_quotient_fan_general)
    add("git-chambers", cmd_git_chambers)
    add("fiber-polytope", cmd_fiber_polytope, v=True)
    add("git-fan", cmd_git_fan, v=True)
    add("semistable", cmd_semistable, v=True)
    add("chow-polytope", cmd_chow_polytope)
    sp = add("identify", cmd_identify)
    sp.add_argument("--against", help="projective_space:d, product:d1,d2,... or permutohedral:d")
    sp = add("catalog", cmd_catalog, needs_input=False)
    sp.add_argument("family", choices=["ptpn", "quadric_odd", "quadric_even", "grassmann",
                                       "product_diagonal"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--copies", type=int)
    sp = add("catalog-fan", cmd_catalog_fan, needs_input=False)
    sp.add_argument("kind", choices=["projective_space", "product", "permutohedral"])
    sp.add_argument("--dims", help="dimension, or comma-separated dimensions for product")
    sp = add("mutations", cmd_mutations, needs_input=False)
    sp.add_argument("action", choices=["verify"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--mode", choices=["symbolic", "eval"], default="symbolic")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=20)
    sp = add("quadric", cmd_quadric, needs_input=False)
    sp.add_argument("action", choices=["boundary", "transition"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--i", type=int)
    sp.add_argument("--even", action="store_true")
    sp.add_argument("--order", choices=["involutive", "literal"], default="involutive")
    sp = add("verify-paper", cmd_verify_paper, needs_input=False)
    sp.add_argument("--only", help="comma-separated criterion numbers")
    sp.add_argument("--json", action="store_true")
    return p


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LinalgError, PolyhedralError, QuotientError, CatalogError,
            bir.BirationalError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.command == "verify-paper":
        return result or 0
    text = dumps(result)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
