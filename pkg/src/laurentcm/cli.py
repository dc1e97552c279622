"""Command-line interface: ``laurentcm expand|rvz|lift|oracle|validate``.

Every command prints one JSON document on stdout.  Exit status is 0 on
success, 2 when a coverage, precision or validation diagnostic fires and 1
on usage errors.
"""
import argparse
import json
import sys
from fractions import Fraction

from .errors import (ContourUnreliable, InsufficientCoverage, LaurentError, PrecisionLoss,
                     WeightBookkeeping)
from .exact import ScaledScalar
from .forms.parser import parse_form_expr
from .numeric import NumericConfig, chowla_selberg, contour_laurent, cross_validate, eval_form, point_z
from .recursion import expand, intro_delta_sequence, load_spec, p0_of, rvz_sequence
from .theta import (BS, BZ, CoefficientTable, bs_laurent_level1, bs_lift_q_expansion, ct_laurent_general,
                    ct_laurent_level1, leading_singular_coeff, unary_theta)

EXIT_OK, EXIT_USAGE, EXIT_DIAGNOSTIC = 0, 1, 2
DIAGNOSTICS = (InsufficientCoverage, PrecisionLoss, ContourUnreliable, WeightBookkeeping)

__all__ = ["main", "build_parser", "run", "parse_form_expr"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _frac(s):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from exc


def _add_numeric(p):
    p.add_argument("--q-terms", type=int, default=300)
    p.add_argument("--radius", type=float, default=0.1)
    p.add_argument("--nodes", type=int, default=256)
    p.add_argument("--tolerance", type=float, default=1e-8)


def _cfg(args):
    try:
        return NumericConfig(args.q_terms, args.radius, args.nodes, args.tolerance)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _point_args(p):
    p.add_argument("--point", choices=("i", "zeta"), default="zeta")
    p.add_argument("--spec", help="JSON recursion table for a user-defined point")


def build_parser():
    parser = _Parser(prog="laurentcm", description="Laurent expansions of modular forms at CM points")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", help="Laurent expansion by one of the recursions")
    _point_args(p)
    p.add_argument("--form", required=True)
    p.add_argument("--weight", type=int)
    p.add_argument("--pole-order", type=int, default=0)
    p.add_argument("--terms", type=int, default=6)
    p.add_argument("--method", choices=("rvz", "rec1", "rec2"))
    p.add_argument("--normalization", choices=("plain", "constant"), default="plain")
    p.add_argument("--symbolic", action="store_true", help="also print q_m(t) before evaluation")
    p.add_argument("--verify", action="store_true", help="compare with contour integration")
    _add_numeric(p)

    p = sub.add_parser("rvz", help="polynomials of the quasi-recursion")
    _point_args(p)
    p.add_argument("--k", type=int)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--form", help="holomorphic form whose p_0 starts the recursion")
    src.add_argument("--p0", help="comma separated ascending coefficients of p_0(t)")
    src.add_argument("--intro-delta", action="store_true", help="the integer recursion attached to Delta")
    p.add_argument("--terms", type=int, default=6)
    p.add_argument("--mod", type=int, help="print p_m(t0) modulo this integer")

    p = sub.add_parser("lift", help="Laurent coefficients of theta lifts")
    p.add_argument("kind", choices=("bs-level1", "ct-level1", "ct-general", "bs-fourier", "singular"))
    p.add_argument("--f", help="weakly holomorphic input table (JSON)")
    p.add_argument("--maass", help="holomorphic part of the harmonic Maass form (JSON)")
    p.add_argument("--D", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--mode", choices=(BS, BZ), default=BS)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--theta-D", type=int, default=1, help="ct-general: Theta_P for Z*beta with Q(beta) = D")
    p.add_argument("--y-u", type=_frac, default=Fraction(1), help="ct-general: y_U squared")
    p.add_argument("--c", type=_frac, help="singular: principal-part coefficient")
    p.add_argument("--m-neg", type=_frac, help="singular: negative exponent")

    p = sub.add_parser("oracle", help="floating-point oracles")
    p.add_argument("kind", choices=("contour", "chowla", "eval"))
    p.add_argument("--form")
    p.add_argument("--point", default="zeta")
    p.add_argument("--weight", type=int)
    p.add_argument("--m-min", type=int, default=0)
    p.add_argument("--m-max", type=int, default=4)
    p.add_argument("--D", type=int, default=4)
    p.add_argument("--z", type=complex)
    _add_numeric(p)

    p = sub.add_parser("validate", help="run the built-in cross-validation suite")
    _add_numeric(p)
    return parser


def _spec(args):
    return load_spec(args.point, args.spec)


def _cmd_expand(args):
    spec = _spec(args)
    form = parse_form_expr(args.form)
    method = args.method or ("rvz" if args.pole_order == 0 else "rec2")
    exp = expand(spec, form, args.weight, args.pole_order, args.terms, method, args.normalization, args.symbolic)
    out = exp.to_json()
    out["method"] = method
    status = EXIT_OK
    if args.verify:
        report = cross_validate(exp, _cfg(args))
        for m, c in exp.coeffs.items():
            out["coeffs"][str(m)]["numeric"] = c.numeric(chowla_selberg(spec.point.D))
        out["verify"] = report.to_json()
        if not report.ok:
            status = EXIT_DIAGNOSTIC
    return out, status


def _cmd_rvz(args):
    spec = _spec(args)
    t0 = spec.point.t0
    if args.intro_delta:
        seq = intro_delta_sequence(args.terms)
        values = [p(0) for p in seq]
        out = {"recursion": "intro-delta", "values": [str(v) for v in values]}
    else:
        if args.form:
            form = parse_form_expr(args.form)
            k = args.k if args.k is not None else int(form.weight)
            p0 = p0_of(form, spec)
        else:
            if args.k is None:
                raise UsageError("--p0 needs --k")
            k = args.k
            from .exact import Poly
            p0 = Poly([Fraction(c) for c in args.p0.split(",")])
        seq = rvz_sequence(spec, k, p0, args.terms)
        values = [p(t0) for p in seq]
        out = {"recursion": "rvz", "point": spec.point.name, "k": k,
               "polynomials": [str(p) for p in seq], "values": [str(v) for v in values]}
    if args.mod:
        res = [int(Fraction(v).numerator * pow(Fraction(v).denominator, -1, args.mod)) % args.mod
               for v in values]
        out["mod"] = args.mod
        out["residues"] = res
        if args.intro_delta and args.mod == 5:
            out["pattern_holds"] = all(res[m] == (1 if m % 4 == 0 else 3) for m in range(0, len(res), 2))
    return out, EXIT_OK


def _need(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise UsageError(f"lift {args.kind} needs " + ", ".join("--" + n for n in missing))


def _cmd_lift(args):
    if args.kind in ("bs-level1", "ct-level1"):
        _need(args, "f", "maass", "D", "k")
        f, maass = CoefficientTable.load(args.f), CoefficientTable.load(args.maass)
        if args.kind == "bs-level1":
            val = bs_laurent_level1(f, maass, args.D, args.k, args.m)
        else:
            val = ct_laurent_level1(f, maass, args.D, args.k, args.m, args.mode)
        return {"kind": args.kind, "m": args.m, "value": val.to_json()}, EXIT_OK
    if args.kind == "ct-general":
        _need(args, "f", "maass", "k")
        f, maass = CoefficientTable.load(args.f), CoefficientTable.load(args.maass)
        l = args.m % 2 if args.mode == BS else 1 - args.m % 2
        tp = unary_theta(args.theta_D, l, args.order, modulus=2)
        val = ct_laurent_general(f, maass, tp, args.k, args.m, _sqrt(args.y_u), args.mode, _tensor_label)
        return {"kind": args.kind, "m": args.m, "value": val.to_json()}, EXIT_OK
    if args.kind == "bs-fourier":
        _need(args, "f", "k")
        qs = bs_lift_q_expansion(CoefficientTable.load(args.f), args.k, args.order)
        coeffs = {str(n): str(c) for (_, n), c in sorted(qs.terms.items(), key=lambda kv: kv[0][1])}
        return {"kind": args.kind, "coeffs": coeffs}, EXIT_OK
    _need(args, "c", "m-neg", "k")
    val = leading_singular_coeff(args.c, args.m_neg, args.k, _sqrt(args.y_u), args.mode)
    return {"kind": args.kind, "value": val.to_json()}, EXIT_OK


def _sqrt(x):
    from .exact import sqrt_rational
    return sqrt_rational(x)


def _tensor_label(lab):
    # ((a, c), b) from [Theta~, Theta_P] -> (a, c, b)
    (a, c), b = lab
    return (a, c, b)


def _cx(z):
    return [z.real, z.imag]


def _cmd_oracle(args):
    cfg = _cfg(args)
    if args.kind == "chowla":
        return {"D": args.D, "omega": chowla_selberg(args.D)}, EXIT_OK
    if args.form is None:
        raise UsageError(f"oracle {args.kind} needs --form")
    form = parse_form_expr(args.form)
    if args.kind == "eval":
        z = args.z if args.z is not None else point_z(args.point)
        return {"z": _cx(z), "value": _cx(eval_form(form, z, cfg))}, EXIT_OK
    k = args.weight if args.weight is not None else int(form.weight)
    coeffs = contour_laurent(form, k, args.point, range(args.m_min, args.m_max + 1), cfg)
    return {"point": args.point, "coeffs": {str(m): _cx(v) for m, v in coeffs.items()}}, EXIT_OK


def _cmd_validate(args):
    cfg = _cfg(args)
    checks = []
    spec = load_spec("zeta")
    exp = expand(spec, "-256*Delta/E4^2", 4, 2, 6, "rec2")
    rep = cross_validate(exp, cfg)
    checks.append({"name": "rec2 vs contour at zeta", "ok": rep.ok, "max_rel_err": rep.max_rel_err})
    exp1 = expand(spec, "-256*Delta/E4^2", 4, 2, 6, "rec1")
    checks.append({"name": "rec1 equals rec2 at zeta", "ok": exp1.coeffs == exp.coeffs})
    spec_i = load_spec("i")
    rep_i = cross_validate(expand(spec_i, "E4", 4, 0, 6, "rvz"), cfg)
    checks.append({"name": "rvz vs contour for E4 at i", "ok": rep_i.ok, "max_rel_err": rep_i.max_rel_err})
    om4 = chowla_selberg(4)
    checks.append({"name": "Omega_-4", "ok": abs(om4 - 0.590170) < 5e-6, "value": om4})
    f, t3 = CoefficientTable.load("f_sc.json"), CoefficientTable.load("theta3_plus.json")
    a1 = bs_laurent_level1(f, t3, 3, 2, 1)
    checks.append({"name": "theta lift a_1 vs recursion", "ok": a1 == exp.coeffs[1]})
    ok = all(c["ok"] for c in checks)
    return {"ok": ok, "checks": checks}, EXIT_OK if ok else EXIT_DIAGNOSTIC


COMMANDS = {"expand": _cmd_expand, "rvz": _cmd_rvz, "lift": _cmd_lift,
            "oracle": _cmd_oracle, "validate": _cmd_validate}


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, ScaledScalar):
        return o.to_json()
    if isinstance(o, complex):
        return _cx(o)
    raise TypeError(type(o).__name__)


VALUE_OPTIONS = ("--form", "--p0", "--c", "--m-neg", "--z", "--y-u")


def _glue_values(argv):
    """Let values such as "-256*Delta/E4^2" follow their option without '='."""
    out, it = [], iter(argv)
    for tok in it:
        if tok in VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv=None):
    """Parse ``argv`` and execute; returns (exit code, JSON-ready payload)."""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_glue_values(argv))
        return_value = COMMANDS[args.command](args)
        payload, code = return_value
    except UsageError as exc:
        return EXIT_USAGE, {"error": "usage", "message": str(exc)}
    except DIAGNOSTICS as exc:
        return EXIT_DIAGNOSTIC, {"error": type(exc).__name__, "message": str(exc)}
    except (LaurentError, OSError) as exc:
        return EXIT_USAGE, {"error": type(exc).__name__, "message": str(exc)}
    return code, payload


def main(argv=None):
    code, payload = run(argv)
    stream = sys.stdout if code != EXIT_USAGE else sys.stderr
    stream.write(json.dumps(payload, indent=2, sort_keys=True, default=_default) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
