"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import brauer, gorenstein, koszul, series, steenrod
from .monomial_algebra import AlgebraElement, AlgebraSpec, enumerate_basis, integer_degree

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# built-in defaults for options a config file may override
DEFAULTS = {
    "cap": 40,
    "max_m": 18,
    "max_d": 18,
    "tol": 1e-12,
    "max_degree": 16,
    "seed": 0,
    "format": "table",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def read_config(path: str) -> dict:
    """key=value lines; '#' starts a comment."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key = key.strip().replace("-", "_")
        value = value.strip()
        try:
            out[key] = int(value)
        except ValueError:
            try:
                out[key] = float(value)
            except ValueError:
                out[key] = value
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["table", "csv", "json"], default=None)
    common.add_argument("--config", default=None, help="key=value file of default options")

    parser = _Parser(prog="vercoh", parents=[common],
                     description="Computations with the algebras E_n(p).")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def pn(p, need_n=True):
        p.add_argument("--p", type=int, default=None)
        p.add_argument("--n", type=int, default=None)

    b = sub.add_parser("basis", parents=[common], help="monomial basis of E_n(p) in a degree")
    pn(b)
    b.add_argument("--degree", type=int, default=None)
    b.add_argument("--quotient", action="store_true", help="Frobenius quotient basis instead")

    s = sub.add_parser("series", parents=[common], help="Hilbert series")
    s.add_argument("which", choices=["en"])
    pn(s)
    s.add_argument("--cap", type=int, default=None)
    s.add_argument("--rational", action="store_true")
    s.add_argument("--two-var", dest="two_var", action="store_true")

    t = sub.add_parser("table", parents=[common], help="N_p(m,d) tables")
    t.add_argument("which", choices=["nmd"])
    t.add_argument("--p", type=int, default=None)
    t.add_argument("--max-m", dest="max_m", type=int, default=None)
    t.add_argument("--max-d", dest="max_d", type=int, default=None)
    t.add_argument("--reciprocal", action="store_true")

    m = sub.add_parser("minc", parents=[common], help="Minc's sequence N(0..cap)")
    m.add_argument("--cap", type=int, default=None)

    g = sub.add_parser("growth", parents=[common], help="growth constants lambda and C")
    g.add_argument("--tol", type=float, default=None)

    v = sub.add_parser("verify", parents=[common], help="structural verifications")
    v.add_argument("which", choices=["gorenstein", "steenrod"])
    pn(v)
    v.add_argument("--cap", type=int, default=None)
    v.add_argument("--max-degree", dest="max_degree", type=int, default=None)
    v.add_argument("--uniqueness", action="store_true")
    v.add_argument("--seed", type=int, default=None)

    k = sub.add_parser("koszul", parents=[common], help="cyclotomic numerics")
    k.add_argument("which", choices=["fpdim", "mult", "rank", "bound"])
    pn(k)
    k.add_argument("--m", type=int, default=None)
    k.add_argument("--cap", type=int, default=None)

    br = sub.add_parser("brauer", parents=[common], help="chain Brauer tree Ext series")
    br.add_argument("--N", type=int, required=True)
    br.add_argument("--i", type=int, required=True)
    br.add_argument("--j", type=int, required=True)
    br.add_argument("--cap", type=int, default=None)

    r = sub.add_parser("reference", parents=[common], help="tabulated Ext series")
    r.add_argument("--cat", required=True)
    r.add_argument("--label", required=True)
    r.add_argument("--cap", type=int, default=None)

    c = sub.add_parser("crosscheck", parents=[common], help="E_n(p) against reference data")
    pn(c)
    c.add_argument("--cap", type=int, default=None)
    return parser


def _resolve(args, config: dict):
    for key, value in {**DEFAULTS, **config}.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)
    for key in ("p", "n"):
        if hasattr(args, key) and getattr(args, key) is None:
            if key in config:
                setattr(args, key, config[key])


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")


def _spec(args) -> AlgebraSpec:
    _need(args, "p", "n")
    try:
        return AlgebraSpec(args.p, args.n)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _poly_map(poly: dict) -> dict:
    return {f"{a},{b}": c for (a, b), c in sorted(poly.items())}


def _frac(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# Each handler returns (result, text, exit_code).  ``result`` is JSON-ready.


def cmd_basis(args):
    spec = _spec(args)
    if args.quotient:
        fd = gorenstein.build_frobenius(spec)
        monos = [m for m, d in zip(fd.quotient_basis, fd.basis_degrees)
                 if args.degree is None or d == args.degree]
    else:
        _need(args, "degree")
        monos = enumerate_basis(spec, args.degree)
    result = {"degree": args.degree, "count": len(monos),
              "monomials": [m.to_json() for m in monos], "strings": [str(m) for m in monos]}
    lines = [f"{str(m)}\t{integer_degree(m, spec)}" if args.degree is None else str(m)
             for m in monos]
    return result, "\n".join(lines + [f"# {len(monos)} monomials"]), EXIT_OK


def cmd_series(args):
    spec = _spec(args)
    cap = args.cap
    if args.rational:
        rs = series.poincare_rational(spec)
        ok = rs.expand(cap) == series.poincare(spec, cap)
        result = {"rational": str(rs), "data": rs.to_json(), "expansion_matches": ok,
                  "palindromic": series.palindromy_check(rs, spec.n)}
        text = f"{rs}\nexpansion matches to q^{cap}: {ok}\nf(1/q) = (-q)^{spec.n} f(q): {result['palindromic']}"
        return result, text, EXIT_OK if ok else EXIT_FAIL
    if args.two_var:
        mu = series.two_variable(spec.p, spec.n, cap)
        total = mu.coefficient_series("t", 0)
        for m in range(1, spec.n + 1):
            total = total + mu.coefficient_series("t", m)
        poly = total.to_dict()
        result = {"mu": _poly_map(poly)}
        lines = ["mu(t,q,v), summed over m <= n:"]
        lines += [f"  q^{a} v^{b}: {c}" for (a, b), c in sorted(poly.items())]
        if (spec.p, spec.n) == (2, 3):
            h = brauer.reference_series("Ver_2^4", "h", cap).to_dict()
            result["reference_h"] = _poly_map(h)
            lines.append("h(z,v) for comparison (not asserted):")
            lines += [f"  z^{a} v^{b}: {c}" for (a, b), c in sorted(h.items())]
        return result, "\n".join(lines), EXIT_OK
    coeffs = series.poincare(spec, cap).to_list()
    return {"coefficients": coeffs}, " ".join(map(str, coeffs)), EXIT_OK


def cmd_table(args):
    _need(args, "p")
    if args.reciprocal:
        tab = series.reciprocal_table(args.p, args.max_m, args.max_d)
        kind = "reciprocal"
    else:
        tab = series.n_table(args.p, args.max_m, args.max_d)
        kind = "nmd"
    result = series.table_json(args.p, kind, tab)
    if args.format == "csv":
        header = "m\\d," + ",".join(str(d) for d in range(tab.shape[1]))
        rows = [f"{m}," + ",".join(str(int(v)) for v in row) for m, row in enumerate(tab)]
        return result, "\n".join([header] + rows), EXIT_OK
    width = max(len(str(int(v))) for v in tab.flat) + 1
    head = "m\\d".ljust(4) + "".join(str(d).rjust(width) for d in range(tab.shape[1]))
    lines = [head]
    for m, row in enumerate(tab):
        cells = "".join((str(int(v)) if v else "").rjust(width) for v in row)
        lines.append(str(m).ljust(4) + cells)
    return result, "\n".join(lines), EXIT_OK


def cmd_minc(args):
    seq = series.minc(args.cap)
    return {"sequence": seq}, " ".join(map(str, seq)), EXIT_OK


def cmd_growth(args):
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    lam, C = series.growth_constants(args.tol)
    return ({"lambda": lam, "C": C, "tol": args.tol},
            f"lambda = {lam:.17g}\nC      = {C:.17g}", EXIT_OK)


def _verify_gorenstein(args):
    spec = _spec(args)
    fd = gorenstein.build_frobenius(spec)
    mat = gorenstein.pairing_matrix(fd)
    perfect = gorenstein.is_signed_permutation(mat)
    try:
        regular, product = gorenstein.verify_regular_sequence(spec, args.cap)
    except ValueError as e:
        raise UsageError(str(e)) from e
    quotient = fd.quotient_poincare()
    dim_ok = len(fd.quotient_basis) == gorenstein.expected_quotient_dimension(spec)
    socle_ok = fd.socle_degree == gorenstein.expected_socle_degree(spec)
    ok = perfect and regular and dim_ok and socle_ok
    poly = series._poly_str({(d,): c for d, c in enumerate(quotient) if c}, ("q",))
    result = {
        "quotient_poincare": quotient,
        "quotient_dimension": len(fd.quotient_basis),
        "socle_degree": fd.socle_degree,
        "dualising": str(fd.dualising),
        "pairing_perfect": perfect,
        "poincare_identity": regular,
        "pairing_matrix": mat.tolist(),
        "passed": ok,
    }
    text = "\n".join([
        f"quotient Poincare polynomial: {poly}",
        f"dimension {len(fd.quotient_basis)}, socle degree {fd.socle_degree}, alpha = {fd.dualising}",
        f"pairing perfect: {perfect}",
        f"Hilbert series * prod(1 - q^deg y_i) = quotient polynomial: {regular}",
        "PASS" if ok else "FAIL",
    ])
    return result, text, EXIT_OK if ok else EXIT_FAIL


def _verify_steenrod(args):
    spec = _spec(args)
    rng = random.Random(args.seed)
    xi_free = spec.p != 2
    if spec.p == 2:
        forced = steenrod.forced_action_check(spec, args.max_degree)
    else:
        forced = steenrod.odd_forced_check(spec, args.max_degree)
    # random spot check of the Cartan formula on homogeneous elements
    spot = True
    for _ in range(50):
        du, dv = rng.randrange(0, args.max_degree + 1), rng.randrange(0, args.max_degree + 1)
        if du + dv > args.max_degree:
            continue
        u = steenrod.random_homogeneous(spec, du, rng, xi_free)
        v = steenrod.random_homogeneous(spec, dv, rng, xi_free)
        if u and v and not steenrod.cartan_holds(u, v):
            spot = False
            break
    result = {"forced_action": forced, "random_cartan": spot, "seed": args.seed}
    lines = [f"forced action T(x) = x^{spec.p} satisfies Cartan up to degree {args.max_degree}: {forced}",
             f"random homogeneous Cartan checks (seed {args.seed}): {spot}"]
    ok = forced and spot
    if args.uniqueness:
        try:
            report = steenrod.uniqueness_solve(spec, args.max_degree, full=True)
        except ValueError as e:
            result["uniqueness"] = {"error": str(e)}
            lines.append(f"uniqueness: not certified ({e})")
            return result, "\n".join(lines + ["FAIL"]), EXIT_FAIL
        result["uniqueness"] = report.to_json()
        lines.append(f"uniqueness: {report.unknowns} unknowns, {report.constraints} constraints, "
                     f"solution dimension {report.solution_dim}")
        lines += [f"  {k} = {v}" for k, v in report.forced_values.items()]
        ok = ok and report.solution_dim == 0
    lines.append("PASS" if ok else "FAIL")
    return result, "\n".join(lines), EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args):
    return _verify_gorenstein(args) if args.which == "gorenstein" else _verify_steenrod(args)


def cmd_koszul(args):
    which = args.which
    if which == "fpdim":
        _need(args, "p", "n", "m")
        x = koszul.quantum_integer(args.p, args.n, args.m + 1)
        coeffs = [_frac(Fraction(c)) for c in x.coeffs]
        val = x.to_complex().real
        result = {"m": args.m, "coefficients": coeffs, "value": val}
        text = f"FPdim(S^{args.m} V) = [{args.m + 1}]_q = {x}  (~ {val:.12g})"
        return result, text, EXIT_OK
    if args.p is not None and args.p != 2:
        raise UsageError(f"koszul {which} is implemented for p = 2 only")
    _need(args, "n")
    if which == "mult":
        seq = koszul.unit_multiplicity_series(args.n, args.cap if args.cap != DEFAULTS["cap"] else None)
        return {"multiplicities": seq, "total": sum(seq)}, " ".join(map(str, seq)), EXIT_OK
    if which == "rank":
        r, rv = koszul.rank_poly(args.n)
        poly = series._poly_str({(k,): c for k, c in enumerate(rv) if c}, ("v",))
        return {"r": r, "r_v": rv}, f"r_{args.n} = {r}\nr_{args.n}(v) = {poly}", EXIT_OK
    poly = koszul.generator_bound(args.n)
    text = series._poly_str({k: c for k, c in poly.items()}, ("z", "v"))
    return {"bound": _poly_map(poly)}, text, EXIT_OK


def cmd_brauer(args):
    try:
        coeffs = brauer.brauer_ext_series(args.i, args.j, args.N, args.cap).to_list()
    except ValueError as e:
        raise UsageError(str(e)) from e
    return {"coefficients": coeffs}, " ".join(map(str, coeffs)), EXIT_OK


def cmd_reference(args):
    try:
        rs = brauer.reference_rational(args.cat, args.label)
    except KeyError as e:
        raise UsageError(e.args[0]) from e
    ts = rs.expand(args.cap)
    if len(rs.variables) == 1:
        coeffs = ts.to_list()
        return ({"rational": str(rs), "coefficients": coeffs}, " ".join(map(str, coeffs)), EXIT_OK)
    poly = ts.to_dict()
    lines = [str(rs)] + [f"z^{a} v^{b}: {c}" for (a, b), c in sorted(poly.items())]
    return {"rational": str(rs), "coefficients": _poly_map(poly)}, "\n".join(lines), EXIT_OK


def cmd_crosscheck(args):
    _need(args, "p", "n")
    try:
        rep = brauer.conjecture_crosscheck(args.p, args.n, args.cap)
    except KeyError as e:
        raise UsageError(e.args[0]) from e
    result = {k: rep[k] for k in ("pair", "cap", "first_mismatch")}
    ok = rep["first_mismatch"] is None
    text = (f"{rep['pair'][0]} vs {rep['pair'][1]} to degree {rep['cap']}: "
            + ("match" if ok else f"first mismatch in degree {rep['first_mismatch']}"))
    return result, text, EXIT_OK if ok else EXIT_FAIL


HANDLERS = {
    "basis": cmd_basis,
    "series": cmd_series,
    "table": cmd_table,
    "minc": cmd_minc,
    "growth": cmd_growth,
    "verify": cmd_verify,
    "koszul": cmd_koszul,
    "brauer": cmd_brauer,
    "reference": cmd_reference,
    "crosscheck": cmd_crosscheck,
}


def _params(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items())
            if k not in ("command", "format", "config")}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    old_err = sys.stderr
    sys.stderr = err
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return int(e.code) if e.code is not None else EXIT_OK
    finally:
        sys.stderr = old_err
    try:
        config = read_config(args.config) if args.config else {}
        _resolve(args, config)
        result, text, code = HANDLERS[args.command](args)
    except (UsageError, OSError) as e:
        print(f"vercoh: error: {e}", file=err)
        return EXIT_USAGE
    if args.format == "json":
        payload = {"command": args.command, "params": _params(args), "result": result}
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(text, file=out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
