"""Command-line interface: ``wmod <command> ...``.

Exit codes: 0 success, 2 parse or domain error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .arith import DomainError, factorize
from .laska import WeierstrassEquation, c_invariants, laska_reduce
from .parser import parse_form
from .reduction import (
    ReductionReport,
    SuperellipticCurve,
    is_minimal,
    minimal_model,
    minimal_twist,
    minimize_discriminant,
)
from .store import StoreError, db_add, db_find, db_list, default_store, make_record
from .weighted import WeightedPoint, abs_wgcd, normalize, weighted_height, wgcd

EXIT_OK, EXIT_DOMAIN, EXIT_IO = 0, 2, 3


def _ints(text: str) -> list:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise DomainError(f"expected comma-separated integers, got {text!r}") from None


def _rationals(text: str) -> list:
    try:
        return [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    except ValueError:
        raise DomainError(f"expected comma-separated numbers, got {text!r}") from None


def _factored(x: Fraction) -> str:
    if x == 0:
        return "0"
    if x.denominator == 1:
        return str(factorize(x.numerator))
    return f"({factorize(x.numerator)})/({factorize(x.denominator)})"


def _curve(args) -> SuperellipticCurve:
    if not args.form:
        raise DomainError("--form is required")
    f = parse_form(args.form, args.degree)
    return SuperellipticCurve(args.m, f, Fraction(args.twist))


def _point(args) -> WeightedPoint:
    if args.point:
        if not args.weights:
            raise DomainError("--point needs --weights")
        return WeightedPoint(_rationals(args.point), _ints(args.weights))
    p = _curve(args).moduli_point()
    if args.weights:
        return WeightedPoint(p.coords, _ints(args.weights))
    return p


def _point_payload(p: WeightedPoint) -> dict:
    out = {
        "invariants": {
            "values": [str(c) for c in p.coords],
            "factored": [_factored(c) for c in p.coords],
            "weights": list(p.weights),
        },
        "wgcd": str(wgcd(p)) if p.is_integral else None,
        "point_normalized": [str(c) for c in normalize(p).coords],
    }
    h = weighted_height(p)
    out["height"] = {"decimal": h.decimal(12), "argmax_index": h.argmax_index}
    return out


def _curve_payload(curve: SuperellipticCurve) -> dict:
    out = {
        "m": curve.m,
        "d": curve.d,
        "form": [str(c) for c in curve.form.int_coeffs()],
        "twist_scalar": str(curve.twist_scalar),
        "minimal": is_minimal(curve),
    }
    out.update(_point_payload(curve.moduli_point()))
    if curve.low_degree:
        out["warning"] = "degree below 5"
    return out


def _report_payload(curve: SuperellipticCurve, r: ReductionReport) -> dict:
    out = _curve_payload(curve)
    lam = r.lam
    out.update(
        {
            "mode": r.mode,
            "lambda": {
                "primes": lam.to_json(),
                "value": str(lam.as_rational()) if lam.is_rational() else None,
                "star_exponents": r.star_exponents.to_json(),
            },
            "output_point": [str(c) for c in r.output_point.coords],
            "realized_equation": None,
            "defined_over_base": r.defined_over_base,
            "extension_note": r.extension_note,
            "flags": list(r.flags),
        }
    )
    if r.realized_equation is not None:
        eq = r.realized_equation
        out["realized_equation"] = {
            "m": eq.m,
            "form": [str(c) for c in eq.form.int_coeffs()],
            "twist_scalar": str(eq.twist_scalar),
            "text": eq.render(),
        }
    return out


def _emit(args, payload: dict, lines) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _point_lines(payload: dict) -> list:
    inv = payload["invariants"]
    lines = [f"weights: ({', '.join(map(str, inv['weights']))})"]
    for i, (v, fz) in enumerate(zip(inv["values"], inv["factored"])):
        lines.append(f"  x{i} = {v}" + (f" = {fz}" if fz != v else ""))
    if payload.get("wgcd") is not None:
        lines.append(f"wgcd: {payload['wgcd']}")
    lines.append("normalized: [" + " : ".join(payload["point_normalized"]) + "]")
    h = payload["height"]
    lines.append(f"height: {h['decimal']} (coordinate {h['argmax_index']})")
    return lines


def cmd_invariants(args) -> int:
    curve = _curve(args)
    payload = _curve_payload(curve)
    lines = [f"curve: {curve.render()}"] + _point_lines(payload) + [f"minimal: {payload['minimal']}"]
    _emit(args, payload, lines)
    return EXIT_OK


def _report_lines(payload: dict) -> list:
    lam = payload["lambda"]
    lines = [
        f"mode: {payload['mode']}",
        f"lambda: {lam['value'] if lam['value'] is not None else lam['primes']}",
        "output point: [" + " : ".join(payload["output_point"]) + "]",
    ]
    eq = payload["realized_equation"]
    lines.append(f"equation: {eq['text']}" if eq else "equation: (point only)")
    lines.append(f"defined over base: {payload['defined_over_base']}")
    if payload["extension_note"]:
        lines.append(payload["extension_note"])
    return lines


def cmd_minimize(args) -> int:
    curve = _curve(args)
    if args.discriminant:
        reduced, u = minimize_discriminant(curve)
        payload = _curve_payload(reduced)
        payload["u"] = str(u)
        _emit(args, payload, [f"u: {u}", f"equation: {reduced.render()}"])
        return EXIT_OK
    r = minimal_model(curve)
    payload = _report_payload(curve, r)
    _emit(args, payload, _report_lines(payload))
    return EXIT_OK


def cmd_twist(args) -> int:
    curve = _curve(args)
    r = minimal_twist(curve, integral_only=args.integral)
    payload = _report_payload(curve, r)
    _emit(args, payload, _report_lines(payload))
    return EXIT_OK


def cmd_height(args) -> int:
    p = _point(args)
    h = weighted_height(p, "logarithmic" if args.log else "multiplicative")
    payload = {"height": {"decimal": h.decimal(12), "argmax_index": h.argmax_index,
                          "base": str(h.base), "root": h.weight, "logarithmic": args.log}}
    _emit(args, payload, [f"height: {h.decimal(12)} = {h.base}^(1/{h.weight}) at coordinate {h.argmax_index}"])
    return EXIT_OK


def cmd_wgcd(args) -> int:
    p = _point(args)
    payload = _point_payload(p)
    payload["abs_wgcd"] = abs_wgcd(p).to_json()
    _emit(args, payload, _point_lines(payload) + [f"absolute wgcd: {abs_wgcd(p).render()}"])
    return EXIT_OK


def cmd_laska(args) -> int:
    E = WeierstrassEquation.from_list(_ints(args.a))
    res = laska_reduce(E)
    c4, c6 = c_invariants(E)
    payload = {
        "input": [str(v) for v in E.as_tuple()],
        "c4": str(c4),
        "c6": str(c6),
        "discriminant": str(E.discriminant),
        "reduced": [str(v) for v in res.equation.as_tuple()],
        "reduced_discriminant": str(res.equation.discriminant),
        "u": str(res.u),
        "r": str(res.r),
        "s": str(res.s),
        "t": str(res.t),
    }
    _emit(args, payload, [
        f"input: {list(E.as_tuple())}  discriminant {E.discriminant}",
        f"minimal: {list(res.equation.as_tuple())}  discriminant {res.equation.discriminant}",
        f"u = {res.u}, r = {res.r}, s = {res.s}, t = {res.t}",
    ])
    return EXIT_OK


def _store(args) -> str:
    store = args.store or default_store()
    if not store:
        raise DomainError("no store given: use --store or set WMOD_STORE")
    return store


def cmd_db(args) -> int:
    store = _store(args)
    if args.action == "add":
        rec = make_record(_curve(args), args.provenance)
        res = db_add(rec, store)
        payload = {"status": res.status, "id": res.id}
        msg = f"added {res.id}" if res.status == "added" else f"duplicate-of {res.id}"
        _emit(args, payload, [msg])
    elif args.action == "find":
        key = _point(args) if args.point else _curve(args)
        rec = db_find(key, store)
        payload = {"found": rec is not None, "record": json.loads(rec.to_json()) if rec else None}
        _emit(args, payload, [f"found {rec.id}: {rec.canonical_key}" if rec else "not found"])
    else:
        recs = db_list(store)
        payload = {"records": [json.loads(r.to_json()) for r in recs]}
        _emit(args, payload, [f"{r.id}  m={r.m} d={r.d}  h={r.height}  {r.canonical_key}" for r in recs])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=2, help="superelliptic exponent (default 2)")
    common.add_argument("--form", help='binary form, e.g. "x^6 + 3*x*y^5 + y^6"')
    common.add_argument("--degree", type=int, help="degree to homogenize univariate input to")
    common.add_argument("--twist", default="1", help="twist scalar c in c*z^m*y^(d-m) = f")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--store", help="curve store path (default $WMOD_STORE)")

    parser = argparse.ArgumentParser(prog="wmod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="moduli point of a curve")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("minimize", parents=[common], help="minimal model")
    p.add_argument("--discriminant", action="store_true", help="minimize the discriminant instead")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("twist", parents=[common], help="minimal twist")
    p.add_argument("--integral", action="store_true", help="rational scalars only (wgcd normalization)")
    p.set_defaults(func=cmd_twist)

    for name, func, extra in (("height", cmd_height, True), ("wgcd", cmd_wgcd, False)):
        p = sub.add_parser(name, parents=[common], help=f"weighted {name} of a point or curve")
        p.add_argument("--point", help="comma-separated coordinates")
        p.add_argument("--weights", help="comma-separated weights q0,q1,...")
        if extra:
            p.add_argument("--log", action="store_true", help="logarithmic height")
        p.set_defaults(func=func)

    p = sub.add_parser("laska", parents=[common], help="minimal Weierstrass equation")
    p.add_argument("--a", required=True, help="a1,a2,a3,a4,a6")
    p.set_defaults(func=cmd_laska)

    p = sub.add_parser("db", parents=[common], help="curve store")
    p.add_argument("action", choices=("add", "find", "list"))
    p.add_argument("--point", help="look up a point instead of a curve")
    p.add_argument("--weights", help="weights for --point")
    p.add_argument("--provenance", default="", help="free-text label stored with the record")
    p.set_defaults(func=cmd_db)
    return parser


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OSError, StoreError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
