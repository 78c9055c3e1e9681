"""Command-line front end: ``moebius <command> ...``.

Exit codes: 0 success, 1 usage error, 2 a mathematical negative (invalid
siteswap, failed verification), 3 domain or budget error.  Exact integers
are written to JSON as decimal strings.
"""
import argparse
import io
import json
import os
import sys
from dataclasses import dataclass

from . import bracelet, circle, ffpoly, mobiuspoly, numtheory, selftest, siteswap, totient
from .errors import ConsistencyError, MoebiusError

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE, EXIT_DOMAIN = 0, 1, 2, 3


@dataclass
class CommandOutcome:
    exit_code: int
    payload: str = ""
    diagnostics: str = ""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or "")
        raise _HelpExit(message or "")


class _HelpExit(Exception):
    pass


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# --- handlers: each returns (exit_code, text, json_obj)

def _factor(args):
    f = numtheory.factorize(args.n)
    obj = {"n": str(f.n), "factors": [[str(p), str(e)] for p, e in f.factors]}
    return EXIT_OK, f"{f.n} = {f}", obj


def _mu(args):
    v = numtheory.moebius(args.n)
    return EXIT_OK, str(v), {"n": str(args.n), "mu": str(v)}


def _phi(args):
    v = numtheory.euler_phi(args.n)
    return EXIT_OK, str(v), {"n": str(args.n), "phi": str(v)}


def _poly_print(args):
    P = mobiuspoly.build(args.n)
    text = mobiuspoly.render(P)
    obj = {
        "n": str(P.n),
        "text": text,
        "terms": [[str(d), str(c)] for d, c in P.terms.items()],
        "root_multiplicity_at_zero": str(mobiuspoly.root_multiplicity_at_zero(P)),
    }
    return EXIT_OK, text, obj


def _poly_eval(args):
    P = mobiuspoly.build(args.n)
    if args.mod is not None:
        v = mobiuspoly.eval_mod(P, args.x, args.mod)
    else:
        v = mobiuspoly.eval_int(P, args.x)
    obj = {"n": str(args.n), "x": str(args.x), "value": str(v)}
    if args.mod is not None:
        obj["mod"] = str(args.mod)
    return EXIT_OK, str(v), obj


def _bracelets_count(args):
    n, x = args.length, args.alphabet
    aperiodic = bracelet.count_aperiodic(n, x)
    total = bracelet.count_total_necklaces(n, x)
    obj = {"length": str(n), "alphabet": str(x), "aperiodic_words": str(aperiodic),
           "aperiodic_classes": str(aperiodic // n), "necklaces": str(total)}
    text = f"aperiodic words: {aperiodic}\naperiodic classes: {aperiodic // n}\nnecklaces: {total}"
    return EXIT_OK, text, obj


def _bracelets_classes(args):
    classes = bracelet.rotation_classes(args.length, args.alphabet)
    lines = [" ".join(str(w) for w in c) for c in classes]
    obj = {"length": str(args.length), "alphabet": str(args.alphabet), "count": str(len(classes)),
           "classes": [[list(map(str, w.letters)) if args.alphabet > 2 else w.to_xo() for w in c]
                       for c in classes]}
    return EXIT_OK, "\n".join(lines), obj


def _bracelets_verify(args):
    n, x = args.length, args.alphabet
    checks = {
        "aperiodic": (bracelet.count_aperiodic(n, x), bracelet.count_aperiodic_bruteforce(n, x)),
        "necklaces": (bracelet.count_total_necklaces(n, x), bracelet.count_necklaces_bruteforce(n, x)),
    }
    ok = all(a == b for a, b in checks.values())
    lines = [f"{k}: formula {a}, enumeration {b} {'ok' if a == b else 'MISMATCH'}" for k, (a, b) in checks.items()]
    obj = {"length": str(n), "alphabet": str(x), "ok": ok,
           "checks": {k: {"formula": str(a), "enumeration": str(b)} for k, (a, b) in checks.items()}}
    return (EXIT_OK if ok else EXIT_NEGATIVE), "\n".join(lines), obj


def _siteswap_validate(args):
    p = siteswap.parse(args.pattern)
    if siteswap.is_valid(p):
        b = siteswap.ball_count(p)
        obj = {"pattern": args.pattern, "valid": True, "balls": str(b),
               "fundamental_period": str(siteswap.fundamental_period(p)),
               "canonical": str(siteswap.canonical_rotation(p))}
        return EXIT_OK, f"{args.pattern}: valid, {b} balls", obj
    n = len(p)
    clashes = siteswap.collisions(p)
    why = "; ".join(f"throws {i} and {j} both land on beat {(i + p.throws[i - 1]) % n} (mod {n})"
                    for i, j in clashes)
    obj = {"pattern": args.pattern, "valid": False,
           "collisions": [[str(i), str(j)] for i, j in clashes]}
    return EXIT_NEGATIVE, f"{args.pattern}: invalid: {why}", obj


def _ball_mode(args):
    if args.fewer_than is not None:
        b = args.balls if args.fewer_than == -1 else args.fewer_than
        mode = "fewer-than"
    else:
        b = args.balls if args.exact in (None, -1) else args.exact
        mode = "exact"
    if b is None:
        raise UsageError("a ball count is required (--balls, --exact B or --fewer-than B)\n")
    return mode, b


def _siteswap_count(args):
    mode, b = _ball_mode(args)
    n = args.period
    v = siteswap.count_patterns_lt(n, b) if mode == "fewer-than" else siteswap.count_patterns_exact(n, b)
    return EXIT_OK, str(v), {"period": str(n), "balls": str(b), "mode": mode, "count": str(v)}


def _siteswap_list(args):
    mode, b = _ball_mode(args)
    n = args.period
    pats = siteswap.enumerate_patterns_lt(n, b) if mode == "fewer-than" else siteswap.enumerate_patterns_exact(n, b)
    names = [str(p) for p in pats]
    return EXIT_OK, "\n".join(names), {"period": str(n), "balls": str(b), "mode": mode,
                                       "count": str(len(names)), "patterns": names}


def _siteswap_verify(args):
    n, b = args.period, args.balls
    identity = siteswap.verify_bn_identity(n, b)
    formula = siteswap.count_patterns_exact(n, b)
    listed = len(siteswap.enumerate_patterns_exact(n, b))
    ok = identity and formula == listed
    text = (f"sum of d*f(d,{b}) over d | {n} equals {b}^{n}: {identity}\n"
            f"exactly {b} balls: formula {formula}, enumeration {listed}")
    obj = {"period": str(n), "balls": str(b), "bn_identity": identity,
           "exact_formula": str(formula), "exact_enumeration": str(listed), "ok": ok}
    return (EXIT_OK if ok else EXIT_NEGATIVE), text, obj


def _irreducible_count(args):
    v = ffpoly.count_irreducible_ext(args.prime, args.ext_degree, args.degree)
    obj = {"prime": str(args.prime), "ext_degree": str(args.ext_degree), "degree": str(args.degree),
           "count": str(v)}
    return EXIT_OK, str(v), obj


def _irreducible_list(args):
    if args.ext_degree != 1:
        raise UsageError("listing is only available over prime fields (--ext-degree 1)\n")
    polys = ffpoly.enumerate_monic_irreducible(args.prime, args.degree)
    names = [ffpoly.render(f) for f in polys]
    return EXIT_OK, "\n".join(names), {"prime": str(args.prime), "degree": str(args.degree),
                                       "count": str(len(names)), "polynomials": names}


def _irreducible_verify(args):
    p, n = args.prime, args.degree
    identity = ffpoly.verify_pn_identity(p, n)
    formula = ffpoly.count_irreducible(p, n)
    listed = len(ffpoly.enumerate_monic_irreducible(p, n))
    ok = identity and formula == listed
    text = (f"sum of d*f(d) over d | {n} equals {p}^{n}: {identity}\n"
            f"degree {n} over F_{p}: formula {formula}, enumeration {listed}")
    obj = {"prime": str(p), "degree": str(n), "pn_identity": identity, "formula": str(formula),
           "enumeration": str(listed), "ok": ok}
    return (EXIT_OK if ok else EXIT_NEGATIVE), text, obj


def _plot(args):
    samples = circle.sample_circle(args.n, args.samples)
    buf = io.StringIO()
    if args.format == "csv":
        circle.export_csv(samples, buf)
    else:
        circle.export_svg(samples, buf)
    if args.out == "-":
        return EXIT_OK, buf.getvalue().rstrip("\n"), None
    with open(args.out, "w", newline="") as fh:
        fh.write(buf.getvalue())
    obj = {"n": str(args.n), "samples": str(len(samples)), "format": args.format, "out": args.out}
    return EXIT_OK, f"wrote {len(samples)} samples to {args.out}", obj


def _euler_fermat(args):
    ok = totient.verify_fermat(args.prime, args.base)
    obj = {"prime": str(args.prime), "base": str(args.base), "holds": ok}
    return (EXIT_OK if ok else EXIT_NEGATIVE), f"{args.base}^{args.prime} = {args.base} mod {args.prime}: {ok}", obj


def _euler_special(args):
    p, e, a = args.prime, args.exp, args.base
    ok = totient.verify_euler_special(p, e, a)
    r = totient.special_residue(p, e, a)
    obj = {"prime": str(p), "exp": str(e), "base": str(a), "modulus": str(p**e), "residue": str(r), "holds": ok}
    text = f"{a}^({p}^{e}) - {a}^({p}^{e - 1}) mod {p**e} = {r}: {ok}"
    return (EXIT_OK if ok else EXIT_NEGATIVE), text, obj


def _euler_general(args):
    cert = totient.verify_euler_general(args.base, args.modulus)
    lines = [f"phi({cert.n}) = {cert.phi}"]
    for s in cert.steps:
        lines.append(f"  {s.p}^{s.e}: special {s.special}, a^phi(p^e)-1 {s.phi_residue}, "
                     f"a^phi(n)-1 {s.lifted_residue} (mod {s.modulus})")
    lines.append(f"{cert.a}^{cert.phi} mod {cert.n} = {cert.final}")
    return (EXIT_OK if cert.ok() else EXIT_NEGATIVE), "\n".join(lines), cert.to_dict()


def _selftest(args):
    budget = args.budget
    if budget is None:
        budget = float(os.environ.get("MOEBIUS_SELFTEST_BUDGET", selftest.DEFAULT_BUDGET))
    if budget < 1:
        raise UsageError("--budget must be at least 1 second\n")
    results = selftest.run_selftest(budget)
    ok = all(r.status != "fail" for r in results)
    lines = []
    for r in results:
        line = f"{r.status.upper():4}  {r.name}  ({r.seconds:.2f}s)"
        if r.detail:
            line += f": {r.detail}"
        lines.append(line)
    failed = [r for r in results if r.status == "fail"]
    if failed:
        lines.append(f"first failure: {failed[0].name}")
    obj = {"budget": budget, "ok": ok,
           "suites": [{"name": r.name, "status": r.status, "seconds": round(r.seconds, 3), "detail": r.detail}
                      for r in results]}
    return (EXIT_OK if ok else EXIT_NEGATIVE), "\n".join(lines), obj


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")

    parser = _Parser(prog="moebius", description="Moebius polynomials and their counting applications.")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(group, name, handler, **kw):
        p = group.add_parser(name, parents=[common], **kw)
        p.set_defaults(handler=handler)
        return p

    for name, handler in (("factor", _factor), ("mu", _mu), ("phi", _phi)):
        leaf(sub, name, handler).add_argument("n", type=int)

    poly = sub.add_parser("poly", help="print or evaluate M_n").add_subparsers(dest="action", required=True,
                                                                               parser_class=_Parser)
    leaf(poly, "print", _poly_print).add_argument("--n", type=int, required=True)
    p = leaf(poly, "eval", _poly_eval)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--mod", type=int)

    br = sub.add_parser("bracelets", help="aperiodic bracelets").add_subparsers(dest="action", required=True,
                                                                                parser_class=_Parser)
    for name, handler in (("count", _bracelets_count), ("classes", _bracelets_classes),
                          ("verify", _bracelets_verify)):
        p = leaf(br, name, handler)
        p.add_argument("--length", type=int, required=True)
        p.add_argument("--alphabet", type=int, required=True)

    ss = sub.add_parser("siteswap", help="juggling patterns").add_subparsers(dest="action", required=True,
                                                                             parser_class=_Parser)
    leaf(ss, "validate", _siteswap_validate).add_argument("pattern")
    for name, handler in (("count", _siteswap_count), ("list", _siteswap_list)):
        p = leaf(ss, name, handler)
        p.add_argument("--period", type=int, required=True)
        p.add_argument("--balls", type=int)
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--exact", type=int, nargs="?", const=-1, metavar="B")
        mode.add_argument("--fewer-than", type=int, nargs="?", const=-1, metavar="B")
    p = leaf(ss, "verify", _siteswap_verify)
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--balls", type=int, required=True)

    ir = sub.add_parser("irreducible", help="irreducible polynomials over finite fields").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    for name, handler in (("count", _irreducible_count), ("list", _irreducible_list),
                          ("verify", _irreducible_verify)):
        p = leaf(ir, name, handler)
        p.add_argument("--prime", type=int, required=True)
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--ext-degree", type=int, default=1)

    p = leaf(sub, "plot", _plot)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--out", default="-")

    eu = sub.add_parser("euler", help="Fermat and Euler congruences").add_subparsers(dest="action", required=True,
                                                                                     parser_class=_Parser)
    p = leaf(eu, "fermat", _euler_fermat)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--base", type=int, required=True)
    p = leaf(eu, "special", _euler_special)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--exp", type=int, required=True)
    p.add_argument("--base", type=int, required=True)
    p = leaf(eu, "general", _euler_general)
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--modulus", type=int, required=True)

    leaf(sub, "selftest", _selftest).add_argument("--budget", type=float)
    return parser


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, text, obj = args.handler(args)
    except _HelpExit as exc:
        return CommandOutcome(EXIT_OK, str(exc) or parser.format_help())
    except UsageError as exc:
        return CommandOutcome(EXIT_USAGE, diagnostics=str(exc) or parser.format_usage())
    except ConsistencyError as exc:
        return CommandOutcome(EXIT_NEGATIVE, diagnostics=f"moebius: consistency failure: {exc}\n")
    except (MoebiusError, ZeroDivisionError) as exc:
        return CommandOutcome(EXIT_DOMAIN, diagnostics=f"moebius: {exc}\n")
    except OSError as exc:
        return CommandOutcome(EXIT_DOMAIN, diagnostics=f"moebius: {exc}\n")
    if args.json and obj is not None:
        return CommandOutcome(code, _dump(obj))
    return CommandOutcome(code, text + "\n" if text else "")


def main(argv=None):
    outcome = run(sys.argv[1:] if argv is None else argv)
    if outcome.payload:
        sys.stdout.write(outcome.payload)
    if outcome.diagnostics:
        sys.stderr.write(outcome.diagnostics)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
