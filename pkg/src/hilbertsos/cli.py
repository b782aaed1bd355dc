"""Command line interface.

Every command prints a report (JSON or text) and exits 0 only when all exact
checks it performed passed.  Exact claims are tagged ``"kind": "exact"``,
numerical ones ``"kind": "audit"``.  Sampling uses ``--seed`` (default 0).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import analysis, catalog, interp
from . import polycore as pc
from .hilbert import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    construct_not_sos,
    not_sos_certificate,
    psd_audit,
)
from .pointideal import (
    DualWitness,
    PointSet,
    forced_zeros,
    geometry_report,
    vanishing_basis,
)


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# input helpers


def _read_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def load_poly(path: str) -> tuple[pc.Poly, list[str]]:
    return pc.from_json_obj(_read_json(path))


def load_points(path: str) -> PointSet:
    obj = _read_json(path)
    if isinstance(obj, list):
        obj = {"mode": "affine", "points": obj}
    return PointSet.from_json_obj(obj)


def parse_params(items: Sequence[str] | None) -> dict[str, Fraction]:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise InputError(f"parameter {item!r} is not of the form name=value")
        k, v = item.split("=", 1)
        out[k.strip()] = pc.parse_rational(v.strip())
    return out


def substitute_params(p: pc.Poly, names: list[str], params: dict[str, Fraction]) -> tuple[pc.Poly, list[str]]:
    """Fix named variables; ``v2=a`` sets v^2 = a and needs p even in v."""
    drop = []
    for key, val in params.items():
        if key in names:
            i = names.index(key)
            p = p.substitute(i, val)
        elif key.endswith("2") and key[:-1] in names:
            i = names.index(key[:-1])
            terms = {}
            for e, c in p.terms.items():
                if e[i] % 2:
                    raise InputError(f"polynomial is not even in {key[:-1]}")
                ne = list(e)
                ne[i] = 0
                terms[tuple(ne)] = terms.get(tuple(ne), 0) + c * val ** (e[i] // 2)
            p = pc.Poly(p.nvars, terms)
        else:
            raise InputError(f"unknown parameter {key}")
        drop.append(names.index(key if key in names else key[:-1]))
    keep = [i for i in range(p.nvars) if i not in drop]
    return p.drop_vars(keep), [names[i] for i in keep]


def _poly_source(args) -> tuple[pc.Poly, list[str]]:
    params = parse_params(getattr(args, "param", None))
    if getattr(args, "name", None):
        e = catalog.entry(args.name)
        return e.generate(**params), list(pc.default_names(e.arity))
    if not getattr(args, "poly", None):
        raise InputError("give --poly FILE or --name CATALOG_NAME")
    p, names = load_poly(args.poly)
    if params:
        p, names = substitute_params(p, names, params)
    return p, names


# ---------------------------------------------------------------------------
# output


def emit(report: dict, fmt: str, summary: Sequence[str]) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        for line in summary:
            print(line)


def _fmt_num(x) -> str:
    return f"{float(x):.6g}"


# ---------------------------------------------------------------------------
# verbs


def cmd_construct(args) -> int:
    A = load_points(args.points)
    g = load_poly(args.g)[0] if args.g else None
    c = None if args.c in (None, "auto") else pc.parse_rational(args.c)
    res = construct_not_sos(A, args.degree, c=c, g=g, samples=args.samples, seed=args.seed)
    ok = res.not_sos_witness.verify(res.p_c)
    report = {"command": "construct", "passed": ok, "result": res.to_json_obj(), "warnings": []}
    if res.audit is not None and res.audit.minimum < -args.tol:
        report["warnings"].append("audit found values below -tol; try a smaller c")
    lines = [
        f"basis: {', '.join(pc.to_text(b) for b in res.basis.basis)}",
        f"forced zeros: {len(res.forced)}",
        f"c = {pc.format_rational(res.c)}",
        f"p_c = {pc.to_text(res.p_c)}",
        f"not-sos witness (exact): {'verified' if ok else 'FAILED'}",
    ]
    if res.audit is not None:
        lines.append(f"audit: {res.audit.verdict}, min {_fmt_num(res.audit.minimum)}")
    emit(report, args.format, lines)
    return 0 if ok else 1


def cmd_certify(args) -> int:
    p, names = load_poly(args.poly)
    A = load_points(args.points)
    out = not_sos_certificate(p, A, args.degree)
    if isinstance(out, DualWitness):
        ok = out.verify(p)
        obj = out.to_json_obj()
        obj.update(kind="exact", result="not_sos", verified=ok)
        lines = [f"not sos: dual witness {'verified' if ok else 'FAILED'} (exact)"]
    else:
        ok = False
        obj = out.to_json_obj()
        lines = ["p lies in the product span; coordinates Q:"] + [
            "  " + " ".join(pc.format_rational(c) for c in row) for row in out.quadform.matrix]
    emit({"command": "certify not-sos", "passed": ok, "result": obj}, args.format, lines)
    return 0 if ok else 1


def cmd_audit(args) -> int:
    p, names = _poly_source(args)
    if not p.is_homogeneous():
        raise InputError("audit expects a form; homogenize first")
    rep = psd_audit(p, samples=args.samples, tol=args.tol, seed=args.seed)
    lines = [f"audit (non-rigorous): {rep.verdict}", f"minimum {_fmt_num(rep.minimum)} at "
             + ", ".join(_fmt_num(v) for v in rep.location)]
    if rep.negative_witness is not None:
        lines.append("exact negative value " + pc.format_rational(rep.witness_value) + " at ("
                     + ", ".join(pc.format_rational(c) for c in rep.negative_witness) + ")")
    emit({"command": "audit", "passed": not rep.negative, "result": rep.to_json_obj()}, args.format, lines)
    return 1 if rep.negative else 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        items = [{"name": n, "arity": catalog.entry(n).arity, "params": list(catalog.entry(n).params)}
                 for n in catalog.names()]
        emit({"command": "catalog list", "passed": True, "result": items}, args.format,
             [f"{i['name']}({', '.join(i['params'])})" for i in items])
        return 0
    if args.action == "show":
        if not args.name:
            raise InputError("catalog show needs --name")
        e = catalog.entry(args.name)
        params = parse_params(args.param)
        if args.symbolic:
            num, den = e.symbolic(**{k: v for k, v in params.items() if k in e.structural})
            names = list(e.variable_names())
            obj = {"numerator": pc.to_json_obj(num, names), "clearing_factor": pc.to_json_obj(den, names)}
            lines = [f"({pc.to_text(num, names)}) / ({pc.to_text(den, names)})"]
        else:
            p = e.generate(**params)
            obj = pc.to_json_obj(p)
            lines = [pc.to_text(p)]
        if args.emit:
            with open(args.emit, "w") as fh:
                json.dump(obj if not args.symbolic else obj["numerator"], fh)
        emit({"command": "catalog show", "name": e.name, "passed": True, "result": obj}, args.format, lines)
        return 0
    if args.action == "zeros":
        params = parse_params(args.param)
        zs = catalog.known_zeros(args.name, **params)
        pts = [[pc.format_rational(c) for c in z.point] for z in zs]
        emit({"command": "catalog zeros", "passed": True, "result": {"kind": "exact", "zeros": pts}},
             args.format, [f"({', '.join(p)}) singular" for p in pts])
        return 0
    # verify
    if args.name:
        checks = [catalog.verify_identity(args.name)]
        rel = []
    elif args.all:
        checks = catalog.verify_all_identities()
        rel = catalog.verify_relations() + catalog.verify_zero_catalog()
    else:
        raise InputError("catalog verify needs --all or --name")
    ok = all(c.passed for c in checks) and all(r.passed for r in rel)
    report = {"command": "catalog verify", "passed": ok,
              "identities": [c.to_json_obj() for c in checks],
              "relations": [r.to_json_obj() for r in rel]}
    lines = [f"{'pass' if c.passed else 'FAIL'}  {c.name}" for c in checks]
    lines += [f"{'pass' if r.passed else 'FAIL'}  {r.name}" for r in rel]
    emit(report, args.format, lines)
    return 0 if ok else 1


def cmd_analysis(args) -> int:
    a = args.action
    if a == "sigma":
        width = Fraction(1, 10 ** (args.digits + 2))
        s = analysis.sigma(pc.parse_rational(args.c1), pc.parse_rational(args.c3), width)
        obj = s.to_json_obj(args.digits)
        lo, hi = s.two_sigma
        emit({"command": "analysis sigma", "passed": True, "result": obj}, args.format,
             [f"sigma = {float(s):.{args.digits}f}", f"2 sigma in [{float(lo):.{args.digits + 2}f}, "
              f"{float(hi):.{args.digits + 2}f}]"])
        return 0
    if a == "region":
        r, s = pc.parse_rational(args.r), pc.parse_rational(args.s)
        inside = analysis.in_region_K(r, s)
        emit({"command": "analysis region", "passed": True,
              "result": {"kind": "exact", "r": pc.format_rational(r), "s": pc.format_rational(s), "in_K": inside}},
             args.format, [f"({pc.format_rational(r)}, {pc.format_rational(s)}) {'is' if inside else 'is not'} in K"])
        return 0
    if a == "newton":
        p, names = _poly_source(args)
        res = analysis.newton_not_sos(p)
        lines = (["not sos: coefficient of " + pc.to_text(pc.Poly.monomial(res.target), names)
                  + f" is {pc.format_rational(res.coefficient)} and only "
                  + pc.to_text(pc.Poly.monomial(res.candidate), names) + " squared reaches it"]
                 if res.conclusive else ["inconclusive"])
        emit({"command": "analysis newton", "passed": True, "result": res.to_json_obj()}, args.format, lines)
        return 0
    if a == "triangle":
        m = analysis.robinson_multiplier(*(pc.parse_rational(v) for v in (args.r, args.s, args.t)))
        emit({"command": "analysis triangle", "passed": True, "result": m.to_json_obj()}, args.format,
             [f"discriminant {pc.format_rational(m.discriminant)}; feasible: {m.feasible}"])
        return 0
    if a == "classify":
        cs = [pc.parse_rational(v) for v in (args.c1, args.c2, args.c3, args.c4)]
        c = analysis.classify_phi(*cs)
        emit({"command": "analysis classify", "passed": True,
              "result": {"kind": "exact", "label": c.label, "on_boundary": c.on_boundary, "reason": c.reason}},
             args.format, [f"{c.label} ({c.reason})"])
        return 0
    raise InputError(f"unknown analysis action {a}")


def cmd_interp(args) -> int:
    if args.action == "biermann":
        p = interp.biermann(args.r, args.s, args.d)
        emit({"command": "interp biermann", "passed": True, "result": pc.to_json_obj(p)}, args.format,
             [pc.to_text(p)])
        return 0
    inst = interp.gondola(args.d)
    est = None
    if args.c in (None, "auto"):
        est = interp.gondola_max_c(args.d, samples=args.samples, seed=args.seed)
        c = (Fraction(9, 10) * Fraction(est.c_max_estimate)).limit_denominator(10 ** 6)
    else:
        c = pc.parse_rational(args.c)
    p = inst.p(c)
    if args.emit:
        with open(args.emit, "w") as fh:
            json.dump(pc.to_json_obj(p), fh)
    obj = {
        "d": args.d,
        "points": [list(q) for q in inst.points],
        "forced": [list(q) for q in inst.forced],
        "g": {"kind": "exact", "poly": pc.to_text(inst.g)},
        "c": pc.format_rational(c),
        "p": {"kind": "exact", "poly": pc.to_text(p)},
        "perturbation": None if est is None else est.to_json_obj(),
    }
    lines = [f"A_{args.d}: {len(inst.points)} points; forced zeros {inst.forced}", f"c = {pc.format_rational(c)}"]
    if est is not None:
        lines.append(f"estimated c_max {est.c_max_estimate:.6f} (audit)")
    lines.append(f"p = {pc.to_text(p)}")
    emit({"command": "interp gondola", "passed": True, "result": obj}, args.format, lines)
    return 0


def cmd_ideal(args) -> int:
    A = load_points(args.points)
    if args.action == "geometry":
        rep = geometry_report(A)
        emit({"command": "ideal geometry", "passed": True, "result": rep.to_json_obj()}, args.format,
             [f"max collinear {rep.max_collinear}, max on a conic {rep.max_on_conic}"])
        return 0
    b = vanishing_basis(A, args.degree, args.order)
    if args.action == "basis":
        emit({"command": "ideal basis", "passed": True, "result": b.to_json_obj()}, args.format,
             [f"dimension {b.dim}"] + [pc.to_text(p) for p in b.basis])
        return 0
    fz = forced_zeros(b)
    obj = fz.to_json_obj()
    obj["kind"] = "exact"
    emit({"command": "ideal forced", "passed": True, "result": obj}, args.format,
         [f"{len(fz)} forced zeros", json.dumps(obj["affine"]), json.dumps(obj["at_infinity"])])
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampling seed (default 0)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)

    ap = argparse.ArgumentParser(prog="hilbertsos", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a psd, not-sos polynomial from points")
    p.add_argument("--points", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--c", default="auto")
    p.add_argument("--g", help="perturbation term to use instead of the computed one")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify", parents=[common], help="exact not-sos certificate")
    p.add_argument("what", choices=("not-sos",))
    p.add_argument("--poly", required=True)
    p.add_argument("--points", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("audit", parents=[common], help="numerical positivity audit of a form")
    p.add_argument("--poly")
    p.add_argument("--name")
    p.add_argument("--param", action="append")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("catalog", parents=[common], help="named forms and identities")
    p.add_argument("action", choices=("list", "show", "verify", "zeros"))
    p.add_argument("--name")
    p.add_argument("--param", action="append")
    p.add_argument("--all", action="store_true")
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--emit")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("analysis", parents=[common], help="region K, sigma, multipliers, Newton polytopes")
    p.add_argument("action", choices=("sigma", "region", "newton", "triangle", "classify"))
    for k in ("c1", "c2", "c3", "c4", "r", "s", "t"):
        p.add_argument(f"--{k}", default="0")
    p.add_argument("--digits", type=int, default=8)
    p.add_argument("--poly")
    p.add_argument("--name")
    p.add_argument("--param", action="append")
    p.set_defaults(func=cmd_analysis)

    p = sub.add_parser("interp", parents=[common], help="triangle lattice interpolation and gondolas")
    p.add_argument("action", choices=("gondola", "biermann"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--c")
    p.add_argument("--emit")
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("ideal", parents=[common], help="vanishing ideals of point sets")
    p.add_argument("action", choices=("basis", "geometry", "forced"))
    p.add_argument("--points", required=True)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--order", type=int, default=1)
    p.set_defaults(func=cmd_ideal)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
