"""Command-line front end.

Subcommands: classify, verify, centralizer, pyramids, diagram, selftest.
Output is JSON (rationals as "a/b" strings) or, with --pretty, text tables
and ASCII pyramids.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classification import (brute_force_shifts, good_gradings_gl,
                             good_gradings_osp)
from .gradings import (centralizer, dim_formula_gl, dim_formula_osp,
                       complete_sl2, grading_from, is_good, s_centralizer,
                       block_type_dim)
from .linalg import Matrix
from .partitions import (NotOrthosymplectic, SuperPartition,
                         enumerate_super_partitions, is_orthosymplectic)
from .pyramids import (dynkin_pyramid_gl, dynkin_pyramid_osp, enumerate_pyr,
                       realize_osp_pyramid, realize_pyramid, render)
from .roots import find_nonnegative_base
from .superalgebra import build_gl, build_osp


class UsageError(Exception):
    pass


def _parse_orbit(text):
    try:
        obj = json.loads(text)
        return SuperPartition.from_json(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError("bad --orbit value: %s" % exc)


def _algebra(args):
    if args.kind == "gl":
        return build_gl(args.m, args.n)
    if args.kind == "osp":
        if args.n % 2:
            raise UsageError("osp odd dimension must be even (osp(m|2n))")
        return build_osp(args.m, args.n // 2)
    raise UsageError("unknown algebra kind %r" % args.kind)


def _check_orbit_size(sp, args):
    if sp.m != args.m or sp.n != args.n:
        raise UsageError("orbit (%d|%d) does not match algebra (%d|%d)"
                         % (sp.m, sp.n, args.m, args.n))


def _emit(obj, args):
    if getattr(args, "pretty", False) and isinstance(obj, dict):
        print(json.dumps(obj, indent=2))
    else:
        print(json.dumps(obj))


def cmd_classify(args):
    sp = _parse_orbit(args.orbit)
    _check_orbit_size(sp, args)
    if args.kind == "gl":
        out = good_gradings_gl(sp)
        if args.bound:
            oracle = brute_force_shifts(build_gl(sp.m, sp.n), sp, args.bound)
            out.notes["oracleAgrees"] = out.keys() == oracle.keys()
    else:
        out = good_gradings_osp(sp)
        if args.bound:
            oracle = brute_force_shifts(build_osp(sp.m, sp.n // 2), sp,
                                        args.bound)
            out.notes["oracleAgrees"] = out.keys() == oracle.keys()
    _emit(out.to_json(), args)
    return 0


def _parse_rationals(text):
    obj = json.loads(text)
    return [Fraction(str(x)) for x in obj]


def _parse_e(text, R):
    text = text.strip()
    if text.startswith("E"):
        body = text[1:]
        if "," in body:
            i, j = (int(x) for x in body.split(","))
        elif len(body) == 2:
            i, j = int(body[0]), int(body[1])
        else:
            raise UsageError("cannot parse element spec %r" % text)
        mat = Matrix.zero(R.size, R.size)
        mat[i - 1, j - 1] = Fraction(1)
        return R.element(mat)
    rows = json.loads(text)
    mat = Matrix.from_rows([[Fraction(str(x)) for x in row] for row in rows])
    return R.element(mat)


def cmd_verify(args):
    R = _algebra(args)
    diag = _parse_rationals(args.H)
    if len(diag) != R.size:
        raise UsageError("need %d diagonal entries" % R.size)
    H = R.element(Matrix.from_rows(
        [[diag[i] if i == j else Fraction(0) for j in range(R.size)]
         for i in range(R.size)]))
    e = _parse_e(args.e, R)
    g = grading_from(R, H)
    good = is_good(g, e)
    _emit({"good": good, "degrees": g.to_json()["degrees"]}, args)
    return 0 if good else 1


def cmd_centralizer(args):
    sp = _parse_orbit(args.orbit)
    _check_orbit_size(sp, args)
    R = _algebra(args)
    if args.kind == "gl":
        P = dynkin_pyramid_gl(sp)
        e, h = realize_pyramid(P, R)
        formula = dim_formula_gl(sp)
    else:
        P = dynkin_pyramid_osp(sp)
        e, h = realize_osp_pyramid(P, R)
        formula = dim_formula_osp(sp)
    rep = centralizer(R, e)
    triple = complete_sl2(R, e, h)
    srep = s_centralizer(R, triple, sp)
    out = {"orbit": sp.to_json(),
           "evenDim": rep.evenDim, "oddDim": rep.oddDim,
           "formulaEvenDim": formula[0], "formulaOddDim": formula[1],
           "sCentralizerDim": srep.evenDim + srep.oddDim,
           "blockTypes": [list(t) for t in srep.blockTypes],
           "predictedBlockDim": sum(block_type_dim(t)
                                    for t in srep.blockTypes)}
    _emit(out, args)
    return 0 if (rep.evenDim, rep.oddDim) == formula else 1


def cmd_pyramids(args):
    sp = _parse_orbit(args.orbit)
    _check_orbit_size(sp, args)
    if args.kind == "gl":
        pyrs = enumerate_pyr(sp)
        if args.pretty:
            for P in pyrs:
                print(render(P))
                print()
        else:
            _emit({"orbit": sp.to_json(), "count": len(pyrs),
                   "pyramids": [P.to_json() for P in pyrs]}, args)
    else:
        P = dynkin_pyramid_osp(sp)
        if args.pretty:
            print(render(P))
        else:
            _emit({"orbit": sp.to_json(), "pyramid": P.to_json()}, args)
    return 0


def cmd_diagram(args):
    sp = _parse_orbit(args.orbit)
    _check_orbit_size(sp, args)
    R = _algebra(args)
    if args.kind == "gl":
        e, h = realize_pyramid(dynkin_pyramid_gl(sp), R)
    else:
        e, h = realize_osp_pyramid(dynkin_pyramid_osp(sp), R)
    g = grading_from(R, h)
    base = find_nonnegative_base(g)
    _emit(dict(base.to_json(), orbit=sp.to_json()), args)
    return 0


def cmd_selftest(args):
    failures = []
    limit = args.max_size
    for m in range(1, limit):
        for n in range(1, limit - m + 1):
            for sp in enumerate_super_partitions(m, n):
                R = build_gl(m, n)
                e, h = realize_pyramid(dynkin_pyramid_gl(sp), R)
                rep = centralizer(R, e)
                if (rep.evenDim, rep.oddDim) != dim_formula_gl(sp):
                    failures.append("gl dims %s" % (sp,))
                g = grading_from(R, h)
                if not is_good(g, e):
                    failures.append("gl dynkin not good %s" % (sp,))
    for m in range(1, limit + 1):
        for n2 in range(2, limit - m + 1, 2):
            for sp in enumerate_super_partitions(m, n2):
                if not is_orthosymplectic(sp):
                    continue
                R = build_osp(m, n2 // 2)
                e, h = realize_osp_pyramid(dynkin_pyramid_osp(sp), R)
                rep = centralizer(R, e)
                if (rep.evenDim, rep.oddDim) != dim_formula_osp(sp):
                    failures.append("osp dims %s" % (sp,))
                g = grading_from(R, h)
                if not is_good(g, e):
                    failures.append("osp dynkin not good %s" % (sp,))
    _emit({"checked": "all orbits with m+n <= %d" % args.max_size,
           "failures": failures}, args)
    return 0 if not failures else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="goodgradings",
        description="Classify and verify good Z-gradings of gl(m|n) "
                    "and osp(m|2n).")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, orbit=True):
        p.add_argument("kind", choices=["gl", "osp"])
        p.add_argument("m", type=int)
        p.add_argument("n", type=int,
                       help="odd dimension (2n for osp(m|2n))")
        if orbit:
            p.add_argument("--orbit", required=True,
                           help='JSON, e.g. {"p":[3,1],"q":[4,2]}')
        p.add_argument("--pretty", action="store_true")
        p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("classify", help="all good gradings for an orbit")
    common(p)
    p.add_argument("--bound", type=int, default=0,
                   help="also run the brute-force oracle up to this bound")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check a user-supplied grading")
    common(p, orbit=False)
    p.add_argument("--H", required=True, help="JSON diagonal, e.g. [1,-1]")
    p.add_argument("--e", required=True,
                   help="element: E12, E1,2 or JSON matrix")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("centralizer", help="centralizer dims and blocks")
    common(p)
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("pyramids", help="enumerate or render pyramids")
    common(p)
    p.set_defaults(func=cmd_pyramids)

    p = sub.add_parser("diagram", help="characteristic of the Dynkin grading")
    common(p)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("selftest", help="run the built-in checks")
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_selftest)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except NotOrthosymplectic as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
