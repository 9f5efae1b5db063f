"""
Command-line front end.

    superweyl roots gl:1,2 --json
    superweyl check-system gl:1,2 --system distinguished
    superweyl weyl sl:2 --psi "0:1" --json

Exit codes: 0 success, 2 invalid input, 3 unsupported or dimension limit,
4 invariant violation.  Errors are printed as one JSON line {"error": reason}.
"""

import argparse
import json
import logging
import sys
from itertools import product

from .algebra_base import fstr, parse_polynomial, scalar
from .errors import InvalidInput, InvariantViolation, SuperWeylError
from .liesuper import chevalley_data, realize
from .rootdata import (check_condition, default_good_system, parse_family, reflect_sequence,
                       root_system, weight_from_coefficients)
from .serialize import CharacterReport, condition_report, dumps, root_json, roots_report
from .weylmod.checks import garland_residual
from .weylmod.engine import kac_module, local_weyl
from .weylmod.mapweight import TruncationPlan, default_plan, garland_product_form, garland_scalars, psi_make
from .weylmod.tensor import verify_tensor_theorem

EXIT_OK, EXIT_INVALID, EXIT_UNSUPPORTED, EXIT_INVARIANT = 0, 2, 3, 4

WEIGHT_HELP = """\
weight coordinates:
  A weight is a comma-separated list of rationals: its values on the even
  simple coroots of the chosen base (in decreasing root order), followed by
  extra Cartan coordinates where the family needs them:
    gl:m,n      + 2 values: on the identity of each block
    sl:m,n      + 1 value on E_mm + E_{m+1,m+1} (the lift has last coordinate 0)
    osp:2,2n    + 1 value on the first epsilon coordinate
    sl:n, osp:M,2n (M != 2)   no extra values
  A map weight is "point:coeffs;point:coeffs;...", e.g. "0:1;1:1".
  An empty string is the zero map weight.
"""


class UsageError(InvalidInput):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_coeffs(text):
    text = text.strip()
    if not text:
        return []
    return [scalar(c.strip()) for c in text.split(",")]


def parse_psi(text, family, system):
    entries = []
    for part in text.split(";"):
        if not part.strip():
            continue
        point, sep, coeffs = part.partition(":")
        if not sep:
            raise InvalidInput("map weight entry %r is not point:coeffs" % part)
        entries.append((scalar(point.strip()), weight_from_coefficients(family, system, parse_coeffs(coeffs))))
    return psi_make(entries, system)


def select_system(family, selector):
    rs, dist = root_system(family)
    if selector == "distinguished":
        return dist
    if selector == "good":
        return default_good_system(family)
    if selector.startswith("reflect:"):
        try:
            idx = [int(x) for x in selector[len("reflect:"):].split(",") if x.strip()]
        except ValueError as e:
            raise InvalidInput("bad reflection list %r" % selector) from e
        return reflect_sequence(dist, rs, idx)
    raise InvalidInput("unknown system selector %r" % selector)


def _plan(args, psi, system):
    adaptive = args.adaptive
    if args.trunc is not None:
        return TruncationPlan(args.trunc, adaptive)
    return default_plan(psi, system, adaptive)


def cmd_roots(args):
    fam = parse_family(args.family)
    return roots_report(fam, select_system(fam, args.system or "distinguished")), EXIT_OK


def cmd_reflect(args):
    fam = parse_family(args.family)
    rs, dist = root_system(fam)
    steps = [[root_json(b) for b in dist.roots]]
    s = dist
    for i in parse_coeffs(args.indices):
        if i.denominator != 1:
            raise InvalidInput("reflection index must be an integer")
        s = reflect_sequence(s, rs, [int(i)])
        steps.append([root_json(b) for b in s.roots])
    out = roots_report(fam, s)
    out["steps"] = steps
    return out, EXIT_OK


def cmd_check_system(args):
    fam = parse_family(args.family)
    s = select_system(fam, args.system or "good")
    return condition_report(fam, s, check_condition(s, s.rs)), EXIT_OK


def cmd_kac(args):
    fam = parse_family(args.family)
    s = select_system(fam, args.system or "distinguished")
    g = realize(fam)
    lam = weight_from_coefficients(fam, s, parse_coeffs(args.weight))
    mod = kac_module(g, s, lam)
    return CharacterReport.of_module(fam, mod).to_json(), EXIT_OK


def cmd_weyl(args):
    fam = parse_family(args.family)
    s = select_system(fam, args.system or "good")
    g = realize(fam)
    psi = parse_psi(args.psi, fam, s)
    mod = local_weyl(g, s, psi, _plan(args, psi, s))
    out = CharacterReport.of_module(fam, mod).to_json()
    out["seed"] = mod.seed
    return out, EXIT_OK


def cmd_tensor_check(args):
    fam = parse_family(args.family)
    s = select_system(fam, args.system or "good")
    g = realize(fam)
    psi1, psi2 = parse_psi(args.psi1, fam, s), parse_psi(args.psi2, fam, s)
    rep = verify_tensor_theorem(g, s, psi1, psi2, _plan(args, psi1 + psi2, s) if args.trunc else None)
    mods = rep["modules"]
    out = {
        "algebra": fam.descriptor,
        "system": [root_json(b) for b in s.roots],
        "factors": [CharacterReport.of_module(fam, m).to_json() for m in mods[:2]],
        "sum": CharacterReport.of_module(fam, mods[2]).to_json(),
        "dimensions": list(rep["dimensions"]),
        "holds": rep["holds"],
    }
    return out, EXIT_OK if rep["holds"] else EXIT_INVARIANT


def cmd_garland(args):
    fam = parse_family(args.family)
    s = select_system(fam, args.system or "good")
    g = realize(fam)
    psi = parse_psi(args.psi, fam, s)
    mod = local_weyl(g, s, psi, _plan(args, psi, s))
    polys = [parse_polynomial(a) for a in args.a]
    cd = chevalley_data(g, s)
    rows = []
    ok = True
    for m, a, alpha in product(range(args.m + 1), polys, s.positive_even):
        res = garland_residual(mod, m, a, alpha, cdata=cd)
        ok = ok and not res
        rows.append({"m": m, "a": a.to_json(), "root": root_json(alpha),
                     "residual": {str(k): fstr(v) for k, v in sorted(res.items())}})
    series = []
    for a, alpha in product(polys, s.positive_even):
        c = garland_scalars(psi, a, alpha, s, 6)
        same = c == garland_product_form(psi, a, alpha, s, 6)
        ok = ok and same
        series.append({"a": a.to_json(), "root": root_json(alpha),
                       "scalars": [fstr(x) for x in c], "product_form": same})
    out = {
        "algebra": fam.descriptor,
        "system": [root_json(b) for b in s.roots],
        "psi": psi.to_json(),
        "truncation": mod.plan.M,
        "dimension": mod.dim,
        "residuals": rows,
        "series": series,
        "holds": ok,
    }
    return out, EXIT_OK if ok else EXIT_INVARIANT


def cmd_selftest(args):
    from .selftest import run_all
    res = run_all()
    ok = all(r[1] for r in res)
    out = {"suites": [{"name": n, "ok": o, "detail": str(d)} for n, o, d in res], "holds": ok}
    return out, EXIT_OK if ok else EXIT_INVARIANT


def build_parser():
    p = _Parser(prog="superweyl", description="Lie superalgebras, Kac modules and local Weyl modules.",
                epilog=WEIGHT_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, helptext, family=True):
        sp = sub.add_parser(name, help=helptext, epilog=WEIGHT_HELP,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        if family:
            sp.add_argument("family", help='family descriptor, e.g. "gl:2,2", "osp:1,2", "D21a:alpha=2/3"')
            sp.add_argument("--system", default=None,
                            help="distinguished | good | reflect:i1,i2,... (reflections from distinguished)")
        mode = sp.add_mutually_exclusive_group()
        mode.add_argument("--json", dest="mode", action="store_const", const="json")
        mode.add_argument("--table", dest="mode", action="store_const", const="table")
        sp.add_argument("-v", "--verbose", action="count", default=0)
        sp.set_defaults(func=fn, mode="table")
        return sp

    def trunc(sp):
        sp.add_argument("--trunc", type=int, default=None, help="truncation exponent M")
        sp.add_argument("--adaptive", action=argparse.BooleanOptionalAction, default=True,
                        help="raise M until W_M and W_{M+1} agree")

    add("roots", cmd_roots, "roots, base, parities and Cartan matrix")
    sp = add("reflect", cmd_reflect, "apply odd reflections in sequence")
    sp.add_argument("indices", help="comma-separated simple root indices, applied left to right")
    add("check-system", cmd_check_system, "odd-partner condition report with witnesses")
    sp = add("kac", cmd_kac, "generalized Kac module character")
    sp.add_argument("--weight", required=True, help="weight coordinates")
    sp = add("weyl", cmd_weyl, "local Weyl module character and truncation trace")
    sp.add_argument("--psi", required=True, help='map weight, e.g. "0:1;1:1"')
    trunc(sp)
    sp = add("tensor-check", cmd_tensor_check, "tensor factorization for disjoint supports")
    sp.add_argument("--psi1", required=True)
    sp.add_argument("--psi2", required=True)
    trunc(sp)
    sp = add("garland", cmd_garland, "Garland identity residuals on the cyclic vector")
    sp.add_argument("--psi", required=True)
    sp.add_argument("--m", type=int, default=3)
    sp.add_argument("--a", action="append", default=None, help="polynomial in t (repeatable)")
    trunc(sp)
    add("selftest", cmd_selftest, "run the invariant suites", family=False)
    return p


def render(report, mode):
    if mode == "json":
        return dumps(report)
    return _table(report)


def _cell(v):
    if isinstance(v, list):
        return "[" + ", ".join(_cell(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join("%s: %s" % (k, _cell(x)) for k, x in v.items()) + "}"
    return str(v)


def _table(report, indent=""):
    lines = []
    for k, v in report.items():
        if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append("%s%s:" % (indent, k))
            cols = list(v[0])
            rows = [[_cell(x.get(c, "")) for c in cols] for x in v]
            widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
            lines.append(indent + "  " + "  ".join(c.ljust(w) for c, w in zip(cols, widths)))
            for r in rows:
                lines.append(indent + "  " + "  ".join(x.ljust(w) for x, w in zip(r, widths)))
        elif isinstance(v, dict):
            lines.append("%s%s:" % (indent, k))
            lines.append(_table(v, indent + "  ").rstrip("\n"))
        else:
            lines.append("%s%s: %s" % (indent, k, _cell(v)))
    return "\n".join(lines) + "\n"


def _exit_code(err):
    if isinstance(err, InvariantViolation):
        return EXIT_INVARIANT
    if isinstance(err, InvalidInput):
        return EXIT_INVALID
    return EXIT_UNSUPPORTED


def run(argv, out=None):
    """Run one invocation; returns the exit code and writes the report to ``out``."""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), stream=sys.stderr)
        if getattr(args, "a", False) is None:
            args.a = ["t", "t-1", "t^2"]
        report, code = args.func(args)
    except SuperWeylError as e:
        out.write(json.dumps({"error": e.reason, "message": str(e)}) + "\n")
        return _exit_code(e)
    except AssertionError as e:
        out.write(json.dumps({"error": "invariant-violation", "message": str(e)}) + "\n")
        return EXIT_INVARIANT
    out.write(render(report, args.mode))
    return code


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
