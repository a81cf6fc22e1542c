"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from typing import List, Optional, Tuple

from . import cohomology_rings as cr
from . import mirror_jacobian as mj
from .errors import ToricError
from .fanfile import FanDocument, load_fan_file
from .lattice_fan import Fan, nonnegative_relations
from .pl_support import PLFunction, kahler_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

Check = Tuple[str, str, str]  # (name, PASS | FAIL | NOTE, detail)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _cone(c) -> str:
    return "{" + ",".join(str(i + 1) for i in c) + "}"


def _emit(args, payload: dict, text: List[str]) -> None:
    if args.machine:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text))


def _load(path: str) -> Tuple[FanDocument, Fan]:
    doc = load_fan_file(path)
    return doc, doc.to_fan()


def _phi(doc: FanDocument, fan: Fan, name: Optional[str]):
    if name is None:
        if "ample" in doc.pl:
            name = "ample"
        elif doc.pl:
            name = next(iter(doc.pl))
        else:
            return "anticanonical", tuple([1] * fan.n)
    if name not in doc.pl:
        raise ToricError(f"no PL function named {name!r} in the fan file")
    return name, doc.pl[name]


# -- validate ------------------------------------------------------------------

def cmd_validate(args) -> int:
    doc, fan = _load(args.file)
    pcs = fan.primitive_collections
    word = "collection" if len(pcs) == 1 else "collections"
    text = [f"valid; n={fan.n} d={fan.dim}; {len(fan.max_cones)} maximal cones; "
            f"{len(pcs)} primitive {word} " + " ".join(_cone(p.indices) for p in pcs)]
    for p in pcs:
        rhs = " + ".join(f"{c}*v{j + 1}" if c != 1 else f"v{j + 1}"
                         for j, c in zip(p.sigma_p_indices, p.coeffs)) or "0"
        text.append(f"  {_cone(p.indices)}: sum = {rhs}")
    payload = {
        "valid": True, "n": fan.n, "d": fan.dim, "max_cones": len(fan.max_cones),
        "primitive_collections": [
            {"indices": [i + 1 for i in p.indices],
             "sigma": [j + 1 for j in p.sigma_p_indices], "coeffs": list(p.coeffs)}
            for p in pcs],
    }
    _emit(args, payload, text)
    return EXIT_OK


# -- cohomology ----------------------------------------------------------------

def _ring_text(p: cr.RingPresentation, header: str) -> List[str]:
    d = p.to_dict()
    out = [header, f"variables: {', '.join(d['variables'])}", f"order: {d['order']}",
           "generators:"]
    out += [f"  {g}" for g in d["generators"]]
    out.append("groebner basis:")
    out += [f"  {g}" for g in d["groebner_basis"]]
    if d["standard_monomials"] is not None:
        out.append("standard monomials: " + ", ".join(d["standard_monomials"]))
    out.append(f"dimension: {d['dimension']}")
    if "graded_dimensions" in d:
        out.append("graded dimensions: " + " ".join(map(str, d["graded_dimensions"])))
    for k, v in p.extra.items():
        if k != "sdelta_generators":
            out.append(f"{k.replace('_', ' ')}: {v}")
    return out


def cmd_cohomology(args) -> int:
    doc, fan = _load(args.file)
    if args.quantum is None:
        if args.z0 != "none":
            raise ToricError("--z0 needs --quantum")
        pres = cr.ordinary_ring(fan)
        header = "ordinary cohomology ring over Q"
    else:
        name, vals = _phi(doc, fan, args.quantum)
        ctx = cr.make_context(fan, vals)
        if args.z0 == "none":
            pres = cr.quantum_ring(ctx)
        elif args.z0 == "laurent":
            pres = cr.quantum_ring_z0_laurent(ctx)
        else:
            pres = cr.quantum_ring_z0_polynomial(ctx)
        header = (f"quantum cohomology ring for phi={name} "
                  f"({' '.join(_fmt(v) for v in ctx.phi.values)}), u = exp(-1/{ctx.D})"
                  + ("" if args.z0 == "none" else f", z0 mode {args.z0}"))
    payload = {"kind": "ordinary" if args.quantum is None else "quantum"}
    if args.quantum is not None:
        payload.update(phi=name, phi_values=[_fmt(v) for v in ctx.phi.values],
                       u=f"exp(-1/{ctx.D})", z0=args.z0)
    payload.update(pres.to_dict())
    _emit(args, payload, _ring_text(pres, header))
    return EXIT_OK


# -- verify --------------------------------------------------------------------

def _guard(name: str, fn) -> List[Check]:
    try:
        return fn()
    except ToricError as e:
        return [(name, "FAIL", f"{type(e).__name__}: {e}")]


def _pf(ok) -> str:
    return "PASS" if ok else "FAIL"


def check_limit(ctx) -> List[Check]:
    def run():
        r = cr.limit_check(ctx)
        return [("limit", _pf(r), f"initial ideal = SR: {r.initial_is_sr}; "
                                  f"u->0 fibre = ordinary ring: {r.limit_is_ordinary}")]
    return _guard("limit", run)


def check_basis(ctx) -> List[Check]:
    ok = cr.quantum_basis_check(ctx)
    return [("groebner-basis", _pf(ok), "the quantum binomials are a reduced basis")]


def check_dimension(ctx) -> List[Check]:
    h = cr.ordinary_ring(ctx.fan).dimension
    q = cr.quantum_ring(ctx).dimension
    k = len(ctx.fan.max_cones)
    return [("dimension", _pf(h == q == k), f"dim H* = {h}, dim QH* = {q}, #max cones = {k}")]


def check_grading(ctx) -> List[Check]:
    r, ok = cr.zr_grading_check(ctx)
    return [("grading", _pf(ok), f"r = {r}")]


def check_relations(ctx, bound: int) -> List[Check]:
    def run():
        gb = cr.quantum_ring(ctx).gb
        lams = nonnegative_relations(ctx.fan, bound)
        bad = [l for l in lams if not cr.quantum_relation_check(ctx, l, gb)]
        out = [("relations", _pf(not bad),
                f"{len(lams) - len(bad)}/{len(lams)} relations with entries <= {bound} hold"
                + (f"; first failure {bad[0]}" if bad else ""))]
        ok = cr.a_ring_equality_check(ctx, bound)
        out.append(("relation-ideal", _pf(ok), f"bound {bound}"))
        return out
    return _guard("relations", run)


def check_mirror(ctx) -> List[Check]:
    r = mj.mirror_map_check(ctx)
    out = [("mirror", _pf(r),
            f"kernel identity {r.kernel_identity}, linear image {r.linear_image}, "
            f"c1 image {r.c1_image}, dims {r.quantum_dimension} = {r.jacobian_dimension}")]
    out += _guard("mirror-limit", lambda: [
        ("mirror-limit", _pf(mj.mirror_limit_check(ctx)), "R_f/Ann(X0) -> H*/Ann(c1)")])
    return out


def check_flop(ctx, other: Fan) -> List[Check]:
    def run():
        fan = ctx.fan
        perm = sorted(range(fan.n), key=lambda i: fan.rays[i])
        vals = [ctx.phi.values[i] for i in perm]
        r = cr.flop_compare(fan, other, vals)
        return [("flop", _pf(r.quantum_equal), "quantum ideals equal" if r.quantum_equal
                 else "quantum ideals differ"),
                ("flop", "NOTE", "ordinary Groebner bases "
                 + ("agree" if r.ordinary_equal else "differ"))]
    return _guard("flop", run)


def run_checks(ctx, which: List[str], bound: int = 2, other: Optional[Fan] = None) -> List[Check]:
    out: List[Check] = []
    for w in which:
        if w == "limit":
            out += check_limit(ctx)
        elif w == "basis":
            out += check_basis(ctx)
        elif w == "dimension":
            out += check_dimension(ctx)
        elif w == "grading":
            out += check_grading(ctx)
        elif w == "relations":
            out += check_relations(ctx, bound)
        elif w == "mirror":
            out += check_mirror(ctx)
        elif w == "flop":
            out += check_flop(ctx, other)
    return out


def _report_checks(args, checks: List[Check], extra: dict) -> int:
    ok = all(s != "FAIL" for _, s, _ in checks)
    text = [f"{s} {n}: {d}" for n, s, d in checks]
    payload = {**extra, "ok": ok,
               "checks": [{"name": n, "status": s, "detail": d} for n, s, d in checks]}
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    doc, fan = _load(args.file)
    name, vals = _phi(doc, fan, args.phi)
    ctx = cr.make_context(fan, vals)
    which = []
    if args.all:
        which = ["limit", "basis", "dimension", "grading", "relations", "mirror"]
    else:
        if args.limit:
            which.append("limit")
        if args.grading:
            which.append("grading")
        if args.relations is not None:
            which.append("relations")
        if args.mirror:
            which.append("mirror")
    other = None
    if args.flop:
        other = _load(args.flop)[1]
        which.append("flop")
    if not which:
        raise ToricError("nothing to verify; pass --all or a specific check")
    bound = 2 if args.relations is None else args.relations
    return _report_checks(args, run_checks(ctx, which, bound, other), {"phi": name})


# -- kahler --------------------------------------------------------------------

def cmd_kahler(args) -> int:
    doc, fan = _load(args.file)
    name, vals = _phi(doc, fan, args.phi)
    lines, verdict = kahler_report(PLFunction(fan, vals))
    label = {"interior": "interior of K(Sigma)", "boundary": "boundary of K(Sigma)",
             "outside": "outside K(Sigma)"}[verdict]
    text = [f"phi={name}: " + " ".join(_fmt(v) for v in PLFunction(fan, vals).values)]
    for l in lines:
        text.append(f"  {_cone(l.collection.indices)}: {_fmt(l.lhs)} vs {_fmt(l.rhs)} "
                    f"-> {l.status}")
    text.append(label)
    payload = {"phi": name, "verdict": verdict, "collections": [
        {"indices": [i + 1 for i in l.collection.indices], "sum": _fmt(l.lhs),
         "value_at_sum": _fmt(l.rhs), "status": l.status} for l in lines]}
    _emit(args, payload, text)
    return EXIT_OK


# -- suite ---------------------------------------------------------------------

SUITE = {
    "p1": ["limit", "basis", "dimension", "grading", "relations", "mirror"],
    "p2": ["limit", "basis", "dimension", "grading", "relations", "mirror"],
    "p3": ["limit", "basis", "dimension", "grading", "relations", "mirror"],
    "p4": ["limit", "basis", "dimension", "grading", "relations"],
    "p1xp1": ["limit", "basis", "dimension", "grading", "relations", "mirror"],
    "f1": ["limit", "basis", "dimension", "grading", "relations", "mirror"],
    "f2": ["limit", "basis", "dimension", "grading", "relations"],
    "flop1": ["limit", "basis", "dimension", "grading", "relations", "flop"],
    "flop2": ["limit", "basis", "dimension", "grading", "relations"],
}


def data_path(name: str):
    return resources.files("toricqh") / "data" / f"{name}.fan"


def cmd_suite(args) -> int:
    results = {}
    all_checks: List[Check] = []
    for name, which in SUITE.items():
        with resources.as_file(data_path(name)) as p:
            doc, fan = _load(str(p))
        ctx = cr.make_context(fan, doc.pl["ample"])
        other = None
        if "flop" in which:
            with resources.as_file(data_path("flop2")) as p:
                other = _load(str(p))[1]
        checks = run_checks(ctx, which, 2, other)
        results[name] = checks
        all_checks += [(f"{name}:{n}", s, d) for n, s, d in checks]
    return _report_checks(args, all_checks, {"fixtures": list(SUITE)})


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="toricqh",
                                 description="Cohomology and quantum cohomology of toric manifolds.")
    ap.add_argument("--machine", action="store_true", help="emit JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--machine", action="store_true", default=argparse.SUPPRESS,
                       help="emit JSON")
        return p

    p = add("validate", "check a fan file and list primitive collections")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = add("cohomology", "ordinary or quantum cohomology ring presentation")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--ordinary", action="store_true")
    g.add_argument("--quantum", metavar="PHI", help="name of a pl line in the file")
    p.add_argument("--z0", choices=["none", "laurent", "poly"], default="none")
    p.set_defaults(fn=cmd_cohomology)

    p = add("verify", "run theorem checks")
    p.add_argument("file")
    p.add_argument("--phi", help="PL function name (default: 'ample' or the first one)")
    p.add_argument("--all", action="store_true")
    p.add_argument("--limit", action="store_true")
    p.add_argument("--flop", metavar="OTHER")
    p.add_argument("--mirror", action="store_true")
    p.add_argument("--grading", action="store_true")
    p.add_argument("--relations", type=int, metavar="BOUND")
    p.set_defaults(fn=cmd_verify)

    p = add("kahler", "primitive-collection inequalities for a PL function")
    p.add_argument("file")
    p.add_argument("phi", nargs="?")
    p.set_defaults(fn=cmd_kahler)

    p = add("suite", "run the checks on the bundled fixtures")
    p.set_defaults(fn=cmd_suite)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ToricError, OSError) as e:
        msg = f"error: {type(e).__name__}: {e}"
        if args.machine:
            print(json.dumps({"ok": False, "error": type(e).__name__, "message": str(e)}))
        else:
            print(msg, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
