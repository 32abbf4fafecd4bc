"""Command-line front end.

Usage:
    quatlat weak-classes --input config.json [--format json|text] [--budget N]
    quatlat classes      --input config.json [--format json|text] [--budget N]
    quatlat brandt       --input config.json --n A..B [--format json|text]
    quatlat theta        --input config.json --i I --j J --prec P [--format json|text]
    quatlat fixtures

The config file describes the algebra and the order:

    {"algebra": {"kind": "quaternion", "a": "-1", "b": "-3"},
     "order": {"basis": [["1","0","0","0"], ["0","2","0","0"],
                         ["0","0","2","0"], ["0","0","0","2"]]}}

Matrix algebras use {"kind": "matrix", "r": 3} and coordinate vectors of
length r*r (row-major elementary-matrix basis).  All rationals are strings
("p/q" or integers); output rationals are strings as well.  An optional
"overorder": {"basis": [...]} field supplies an explicit O' for the weak
class computation.

Exit codes: 0 success, 2 configuration error, 3 unsupported feature,
4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import matrix_algebra, quaternion_algebra
from .brandt import BrandtSeries
from .classes import right_equivalence_classes
from .errors import ResourceBudgetExceededError, UnsupportedFeatureError
from .fixtures import run_all
from .ideals import weak_right_equivalence_classes
from .lattice import Lattice, Order


class ConfigError(ValueError):
    pass


def _rational(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ConfigError(f"expected a rational string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad rational {value!r}: {exc}") from exc


def _load_config(path: str):
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    spec = cfg.get("algebra")
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError('config needs an "algebra" object with a "kind"')
    kind = spec["kind"]
    if kind == "quaternion":
        a, b = _rational(spec.get("a")), _rational(spec.get("b"))
        try:
            alg = quaternion_algebra(a, b)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    elif kind == "matrix":
        r = spec.get("r")
        if not isinstance(r, int) or r < 1:
            raise ConfigError('"matrix" algebra needs a positive integer "r"')
        alg = matrix_algebra(r)
    else:
        raise ConfigError(f"unknown algebra kind {kind!r}")
    order = _parse_order(alg, cfg.get("order"), "order")
    overorder = None
    if "overorder" in cfg:
        overorder = _parse_order(alg, cfg["overorder"], "overorder")
    return alg, order, overorder


def _parse_order(alg, section, label: str) -> Order:
    if not isinstance(section, dict) or "basis" not in section:
        raise ConfigError(f'config needs an "{label}" object with a "basis"')
    basis = section["basis"]
    if (not isinstance(basis, list) or not basis
            or any(not isinstance(row, list) for row in basis)):
        raise ConfigError(f'"{label}" basis must be a list of coordinate vectors')
    rows = [[_rational(x) for x in row] for row in basis]
    try:
        return Order(Lattice.from_rows(alg, rows))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise ConfigError(f"bad range {text!r} (expected A..B)") from exc
    if lo < 1 or hi < lo:
        raise ConfigError(f"bad range {text!r}")
    return lo, hi


def _emit(payload, fmt: str, render_text) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        render_text(payload)


def cmd_weak_classes(args) -> int:
    _, order, overorder = _load_config(args.input)
    wc = weak_right_equivalence_classes(order, o_prime=overorder, budget=args.budget)
    payload = {"count": len(wc.representatives),
               "representatives": [r.to_json() for r in wc.representatives]}

    def text(p):
        print(f"{p['count']} weak right equivalence classes")
        for k, rep in enumerate(p["representatives"]):
            print(f"  [{k}] den={rep['den']} hnf={rep['hnf']}")

    _emit(payload, args.format, text)
    return 0


def cmd_classes(args) -> int:
    _, order, overorder = _load_config(args.input)
    weak = weak_right_equivalence_classes(order, o_prime=overorder, budget=args.budget)
    cs = right_equivalence_classes(order, weak=weak)
    payload = {"count": cs.size,
               "representatives": [
                   {"lattice": rep.to_json(),
                    "invertible": cs.invertible_flags[k],
                    "weak_class": cs.provenance[k][0],
                    "invertible_class": cs.provenance[k][1]}
                   for k, rep in enumerate(cs.representatives)]}

    def text(p):
        print(f"{p['count']} right equivalence classes")
        for k, rep in enumerate(p["representatives"]):
            flag = "invertible" if rep["invertible"] else "non-invertible"
            print(f"  [{k}] {flag} (weak {rep['weak_class']},"
                  f" invertible {rep['invertible_class']})"
                  f" den={rep['lattice']['den']} hnf={rep['lattice']['hnf']}")

    _emit(payload, args.format, text)
    return 0


def cmd_brandt(args) -> int:
    _, order, overorder = _load_config(args.input)
    lo, hi = _parse_range(args.n)
    weak = weak_right_equivalence_classes(order, o_prime=overorder, budget=args.budget)
    bs = BrandtSeries(right_equivalence_classes(order, weak=weak))
    payload = [{"n": n, "matrix": [[str(x) for x in row]
                                   for row in bs.brandt_matrix(n)]}
               for n in range(lo, hi + 1)]

    def text(p):
        for item in p:
            print(f"T({item['n']}) =")
            for row in item["matrix"]:
                print("  " + "  ".join(f"{x:>6}" for x in row))
            print()

    _emit(payload, args.format, text)
    return 0


def cmd_theta(args) -> int:
    _, order, overorder = _load_config(args.input)
    if args.prec < 0:
        raise ConfigError("--prec must be nonnegative")
    weak = weak_right_equivalence_classes(order, o_prime=overorder, budget=args.budget)
    bs = BrandtSeries(right_equivalence_classes(order, weak=weak))
    if not (1 <= args.i <= bs.size and 1 <= args.j <= bs.size):
        raise ConfigError(f"--i/--j must be in 1..{bs.size}")
    coeffs = bs.theta_series(args.i - 1, args.j - 1, args.prec)
    payload = {"i": args.i, "j": args.j,
               "coefficients": [str(c) for c in coeffs]}

    def text(p):
        terms = [p["coefficients"][0]]
        for n, c in enumerate(p["coefficients"][1:], start=1):
            terms.append(f"{c}q^{n}" if n > 1 else f"{c}q")
        print(f"Theta_{{{p['i']},{p['j']}}}(q) = " + " + ".join(terms))

    _emit(payload, args.format, text)
    return 0


def cmd_fixtures(args) -> int:
    rows = run_all()
    width = max(len(f"{f}: {c}") for f, c, _ in rows)
    failures = 0
    for fixture, check, passed in rows:
        status = "pass" if passed else "FAIL"
        if not passed:
            failures += 1
        print(f"{fixture + ': ' + check:<{width}}  {status}")
    print(f"{len(rows) - failures}/{len(rows)} checks passed")
    return 0 if failures == 0 else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="quatlat",
        description="Right equivalence classes, Brandt matrices and theta "
                    "series for lattices over orders in Q-algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", required=True, help="path to the config JSON")
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--budget", type=int, default=None,
                       help="cap on the weak-class quotient module size")

    p = sub.add_parser("weak-classes", help="weak right equivalence classes")
    common(p)
    p.set_defaults(func=cmd_weak_classes)

    p = sub.add_parser("classes", help="full right equivalence class set")
    common(p)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("brandt", help="Brandt matrices T(n)")
    common(p)
    p.add_argument("--n", required=True, help="index or range A..B")
    p.set_defaults(func=cmd_brandt)

    p = sub.add_parser("theta", help="theta series of one (i, j) component")
    common(p)
    p.add_argument("--i", type=int, required=True, help="row class index (1-based)")
    p.add_argument("--j", type=int, required=True, help="column class index (1-based)")
    p.add_argument("--prec", type=int, required=True, help="highest power of q")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("fixtures", help="run the built-in example fixtures")
    p.set_defaults(func=cmd_fixtures)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedFeatureError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 3
    except ResourceBudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
