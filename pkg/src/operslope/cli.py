"""Batch front door: JSON in, JSON report out.

Exit codes: 0 success; 1 mathematical failure (non-reduced polar part,
non-unit coefficient, violated bound, failed check); 2 precision
exhausted; 3 schema error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import series as series_mod
from .connection import order_and_polar
from .errors import (BoundViolation, OperslopeError, PrecisionExhausted,
                     SchemaError)
from .jsonio import (decode_oper, decode_oper_general, decode_rational,
                     decode_uelement, encode_connection, encode_gauge_word,
                     encode_lie_element, encode_oper, encode_rational,
                     encode_series, load_algebra)
from .kacmoody import Level
from .moyprasad import ApartmentPoint, jumps, lattice
from .oper import canonicalize, reduced_form_via_oper, slope_of_oper, \
    typeA_newton_slope
from .selftest import run_all
from .sugawara import annihilation_check, quadratic_sugawara

EXIT_OK, EXIT_MATH, EXIT_PRECISION, EXIT_SCHEMA = 0, 1, 2, 3


def _read_doc(args):
    if args.infile:
        with open(args.infile) as fh:
            return json.load(fh)
    return json.load(sys.stdin)


def _write_doc(args, doc) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_oper(args):
    doc = _read_doc(args)
    if not isinstance(doc, dict):
        raise SchemaError("input must be a JSON object")
    alg = load_algebra(args.algebra) if args.algebra else None
    if "v" in doc:
        chi = decode_oper(doc, alg)
        return chi, None
    og = decode_oper_general(doc, alg)
    chi, word = canonicalize(og)
    return chi, word


def _parse_point(alg, text: str) -> ApartmentPoint:
    parts = text.split(",")
    if len(parts) != alg.rank:
        raise SchemaError(f"--x needs {alg.rank} comma-separated rationals")
    return ApartmentPoint(alg, tuple(decode_rational(p.strip()) for p in parts))


def _parse_range(text: str) -> tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise SchemaError("range must be lo:hi")
    return decode_rational(lo), decode_rational(hi)


# -- subcommands -------------------------------------------------------------

def cmd_slope(args) -> int:
    chi, _ = _load_oper(args)
    _write_doc(args, {"algebra": chi.algebra.name,
                      "slope": encode_rational(slope_of_oper(chi))})
    return EXIT_OK


def cmd_canonicalize(args) -> int:
    doc = _read_doc(args)
    alg = load_algebra(args.algebra) if args.algebra else None
    og = decode_oper_general(doc, alg)
    chi, word = canonicalize(og)
    _write_doc(args, {"oper": encode_oper(chi),
                      "gauge": encode_gauge_word(word, chi.algebra)})
    return EXIT_OK


def cmd_reduce(args) -> int:
    chi, _ = _load_oper(args)
    conn, info = reduced_form_via_oper(chi)
    _write_doc(args, {
        "b": info.ram,
        "order": info.order,
        "polar": encode_lie_element(info.polar) if info.polar else None,
        "slope": encode_rational(info.slope),
        "connection": encode_connection(conn),
    })
    return EXIT_OK


def cmd_newton_slope(args) -> int:
    chi, _ = _load_oper(args)
    _write_doc(args, {"algebra": chi.algebra.name,
                      "slope": encode_rational(typeA_newton_slope(chi))})
    return EXIT_OK


def cmd_mp(args) -> int:
    alg = load_algebra(args.algebra)
    x = _parse_point(alg, args.x)
    r = decode_rational(args.r)
    lat = lattice(x, r, plus=args.plus)
    report = {
        "algebra": alg.name,
        "x": [encode_rational(v) for v in x.simple_values],
        "r": encode_rational(r),
        "plus": args.plus,
        "powers": {b.label: lat.power(b.weight) for b in alg.basis},
    }
    if args.jumps:
        lo, hi = _parse_range(args.jumps)
        report["jumps"] = [encode_rational(j) for j in jumps(x, lo, hi)]
    _write_doc(args, report)
    return EXIT_OK


def cmd_sugawara_check(args) -> int:
    alg = load_algebra(args.algebra)
    x = _parse_point(alg, args.x)
    r = decode_rational(args.r)
    level = Level.of(decode_rational(args.level))
    if args.vector:
        with open(args.vector) as fh:
            state = decode_uelement(json.load(fh), alg)
        if not state:
            raise SchemaError("state vector is zero")
        mono = next(iter(state))
        degree = -sum(n for _, n in mono) - 1
    else:
        state = quadratic_sugawara(alg)
        degree = 1
    lo, hi = _parse_range(args.modes)
    modes = list(range(int(lo), int(hi) + 1))
    violations = []
    try:
        rep = annihilation_check(x, r, state, degree, modes, level)
        results = rep.annihilated
        bounds = {"theorem": encode_rational(rep.theorem_bound),
                  "monomial": rep.monomial_bound,
                  "enforced": rep.enforced_bound}
        ok = rep.ok
    except BoundViolation as exc:
        violations.append(str(exc))
        results, bounds, ok = {}, {}, False
    _write_doc(args, {
        "algebra": alg.name,
        "x": [encode_rational(v) for v in x.simple_values],
        "r": encode_rational(r),
        "level": encode_rational(level.c_factor),
        "modes": {str(m): "zero" if z else "nonzero"
                  for m, z in results.items()},
        "bound": bounds,
        "violations": violations,
        "ok": ok,
    })
    return EXIT_OK if ok else EXIT_MATH


def cmd_selftest(args) -> int:
    checks = run_all(args.seed)
    for name, ok, detail in checks:
        print(("PASS" if ok else "FAIL"), name, "-", detail)
    if args.out:
        _write_doc(args, {"checks": [
            {"name": n, "ok": ok, "detail": d} for n, ok, d in checks]})
    return EXIT_OK if all(ok for _, ok, _ in checks) else EXIT_MATH


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="operslope",
        description="Exact slopes, canonical forms, filtration lattices and "
                    "Sugawara annihilation bounds for connections on the "
                    "punctured formal disk.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, needs_input=False):
        p.add_argument("--algebra", help="A1..A8 or a structure-constant file")
        p.add_argument("--in", dest="infile", help="input JSON path (default stdin)")
        p.add_argument("--out", help="output JSON path (default stdout)")
        p.add_argument("--prec", type=int, default=40,
                       help="working precision past the valuation for "
                            "series inversion (default 40)")
        p.add_argument("--seed", type=int, default=0)

    for name, fn in [("slope", cmd_slope), ("canonicalize", cmd_canonicalize),
                     ("reduce", cmd_reduce), ("newton-slope", cmd_newton_slope)]:
        p = sub.add_parser(name)
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("mp")
    common(p)
    p.add_argument("--x", required=True, help="apartment point, e.g. 1/2 or 1/3,0")
    p.add_argument("--r", required=True, help="depth, a rational >= 0")
    p.add_argument("--plus", action="store_true", help="open lattice g_{x,r+}")
    p.add_argument("--jumps", help="also list filtration jumps in lo:hi")
    p.set_defaults(func=cmd_mp)

    p = sub.add_parser("sugawara-check")
    common(p)
    p.add_argument("--x", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--modes", required=True, help="mode range lo:hi")
    p.add_argument("--level", default="-1/2",
                   help="multiple of the Killing form (default critical -1/2)")
    p.add_argument("--vector", help="JSON file with a creation-monomial state")
    p.set_defaults(func=cmd_sugawara_check)

    p = sub.add_parser("selftest")
    common(p)
    p.set_defaults(func=cmd_selftest)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    series_mod.DEFAULT_EXTRA_PREC = args.prec
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except json.JSONDecodeError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except PrecisionExhausted as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except OperslopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
