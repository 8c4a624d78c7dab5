"""Command-line interface: every operation with uniform exact-rational I/O.

JSON is the machine format (rationals are strings, never floats; key order
is canonical so output is byte-deterministic).  ``--format pretty`` renders
unicode math; ``chartable`` defaults to CSV.  Exit codes: 0 success
(including conjecture counterexamples), 1 domain error, 2 usage.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import verify as verify_mod
from .content import OrdinaryPSumExpr, hat_F, hat_p, phi_series_check, psi, psi_direct
from .explorer import deg1_conjecture_scan, p2_experiment, structure_constants
from .expr import parse_and_eval
from .factorial import p_star, p_star_eval
from .frakp import deg1, expand_gamma_in_frak, expand_p_in_frak, frak_p_eval
from .partitions import (
    OddPartition,
    StrictPartition,
    enumerate_odd,
    enumerate_strict,
    g,
    g_skew,
)
from .plancherel import (
    average_bruteforce,
    average_mu_bruteforce,
    average_mu_symbolic,
    average_symbolic,
    prob,
    prob_mu,
)
from .rational import rat_str
from .schurq import character_table, q


def _emit_json(obj):
    print(json.dumps(obj, ensure_ascii=False))


def _pretty_terms(element_json, symbol):
    chunks = []
    for record in element_json:
        part = record["partition"]
        coeff = record["coeff"]
        name = f"{symbol}[{part}]" if part else "1"
        if coeff.startswith("-"):
            sign, mag = "-", coeff[1:]
        else:
            sign, mag = "+", coeff
        body = name if (mag == "1" and part) else (f"{mag}·{name}" if part else mag)
        if not chunks:
            chunks.append(body if sign == "+" else f"-{body}")
        else:
            chunks.append(f"{sign} {body}")
    print(" ".join(chunks) if chunks else "0")


def _emit_element(args, element, symbol="p"):
    obj = element.to_json_obj()
    if args.format == "pretty":
        _pretty_terms(obj, symbol)
    else:
        _emit_json(obj)


def _pretty_poly(poly):
    falling = poly.falling_coeffs()
    if not falling:
        return "0"
    chunks = []
    for j in sorted(falling, reverse=True):
        c = falling[j]
        base = f"n^↓{j}" if j > 1 else ("n" if j == 1 else "")
        mag = rat_str(abs(c))
        body = base if (mag == "1" and base) else (f"{mag}·{base}" if base else mag)
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def _emit_poly(args, poly):
    if args.format == "pretty":
        print(_pretty_poly(poly))
    else:
        _emit_json(poly.to_json_obj())


# --- subcommand handlers ---------------------------------------------------------


def cmd_enum(args):
    strict = [str(p) for p in enumerate_strict(args.n)]
    odd = [str(p) for p in enumerate_odd(args.n)]
    _emit_json({"n": args.n, "strict": strict, "odd": odd})


def cmd_g(args):
    print(g(StrictPartition.from_text(args.partition)))


def cmd_gskew(args):
    lam = StrictPartition.from_text(args.lam)
    mu = StrictPartition.from_text(args.mu)
    print(g_skew(lam, mu))


def cmd_prob(args):
    lam = StrictPartition.from_text(args.partition)
    if args.mu is not None:
        mu = StrictPartition.from_text(args.mu)
        value = prob_mu(mu, args.n, lam)
        _emit_json({"n": args.n, "mu": str(mu), "lambda": str(lam),
                    "prob": rat_str(value)})
    else:
        value = prob(args.n, lam)
        _emit_json({"n": args.n, "lambda": str(lam), "prob": rat_str(value)})


def cmd_qfunc(args):
    _emit_element(args, q(StrictPartition.from_text(args.partition)))


def cmd_chartable(args):
    table = character_table(args.k)
    if args.format == "json":
        _emit_json({
            "k": args.k,
            "rows": [
                {
                    "lambda": str(lam),
                    "values": {str(rho): rat_str(x) for rho, x in row},
                }
                for lam, row in table.rows()
            ],
        })
        return
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["lambda/rho"] + [str(rho) for rho in table.odd])
    for lam, row in table.rows():
        writer.writerow([str(lam)] + [rat_str(x) for _, x in row])


def cmd_pstar(args):
    _emit_element(args, p_star(StrictPartition.from_text(args.partition)))


def cmd_pstar_eval(args):
    mu = StrictPartition.from_text(args.mu)
    lam = StrictPartition.from_text(args.lam)
    print(rat_str(p_star_eval(mu, lam)))


def cmd_frak_expand_p(args):
    expansion = expand_p_in_frak(OddPartition.from_text(args.rho))
    obj = expansion.to_json_obj()
    if args.format == "pretty":
        _pretty_terms(obj, "𝔭")
    else:
        _emit_json(obj)


def cmd_frak_eval(args):
    rho = OddPartition.from_text(args.rho)
    lam = StrictPartition.from_text(args.lam)
    print(rat_str(frak_p_eval(rho, lam)))


def cmd_frak_deg1(args):
    element = parse_and_eval(args.expr)
    print(deg1(expand_gamma_in_frak(element)))


def cmd_avg(args):
    element = parse_and_eval(args.f)
    mu = StrictPartition.from_text(args.mu) if args.mu is not None else None
    if args.symbolic:
        poly = (average_symbolic(element) if mu is None
                else average_mu_symbolic(element, mu))
        _emit_poly(args, poly)
    else:
        value = (average_bruteforce(element, args.n) if mu is None
                 else average_mu_bruteforce(element, mu, args.n))
        _emit_json({"n": args.n, "mu": str(mu) if mu is not None else None,
                    "f": args.f, "value": rat_str(value)})


def cmd_content_hatp(args):
    _emit_element(args, hat_p(args.k))


def cmd_content_hatf(args):
    expr = OrdinaryPSumExpr.from_json_obj(json.loads(args.psum))
    _emit_element(args, hat_F(expr))


def cmd_psi(args):
    if args.lam is not None:
        lam = StrictPartition.from_text(args.lam)
        value = psi_direct(args.k, lam)
        _emit_json({"k": args.k, "lambda": str(lam), "value": rat_str(value)})
    else:
        _emit_element(args, psi(args.k))


def cmd_phi_check(args):
    lam = StrictPartition.from_text(args.lam)
    ok = phi_series_check(lam, args.order)
    _emit_json({"lambda": str(lam), "order": args.order, "identity_holds": ok})


def cmd_lab_scan(args):
    report = deg1_conjecture_scan(args.max)
    _emit_json(report.to_json_obj())


def cmd_lab_p2(args):
    report = p2_experiment(args.max_n, cap=args.cap)
    _emit_json(report.to_json_obj())


def cmd_lab_fstruct(args):
    sigma = OddPartition.from_text(args.sigma)
    tau = OddPartition.from_text(args.tau)
    records = structure_constants(sigma, tau)
    _emit_json({
        "sigma": str(sigma),
        "tau": str(tau),
        "records": [rec.to_json_obj() for rec in records],
    })


def cmd_verify(args):
    results = verify_mod.run_all()
    if args.format == "json":
        _emit_json([
            {"key": r.key, "description": r.description, "ok": r.ok,
             "detail": r.detail}
            for r in results
        ])
    else:
        width = max(len(r.key) for r in results)
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            print(f"[{status}] {r.key:<{width}}  {r.detail}")
    return 0 if all(r.ok for r in results) else 1


# --- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superq",
        description="Exact computations with supersymmetric functions on "
                    "strict partitions.",
    )
    parser.add_argument(
        "--threads", type=int, default=0, metavar="N",
        help="reserved concurrency hint (0 = auto); results are identical "
             "for any value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, *, fmt_default="json"):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=handler)
        p.add_argument("--format", choices=("json", "csv", "pretty"),
                       default=fmt_default)
        return p

    p = add("enum", cmd_enum, "list strict and odd partitions of n")
    p.add_argument("n", type=int)

    p = add("g", cmd_g, "number of standard shifted tableaux of a shape")
    p.add_argument("partition")

    p = add("gskew", cmd_gskew, "number of standard tableaux of a skew shape")
    p.add_argument("lam", metavar="lambda")
    p.add_argument("mu")

    p = add("prob", cmd_prob, "shifted Plancherel probability of a shape")
    p.add_argument("n", type=int)
    p.add_argument("partition")
    p.add_argument("--mu", default=None)

    p = add("qfunc", cmd_qfunc, "Schur Q-function in the power-sum basis")
    p.add_argument("partition")

    p = add("chartable", cmd_chartable, "projective character table of degree k",
            fmt_default="csv")
    p.add_argument("k", type=int)

    p = add("pstar", cmd_pstar, "factorial Schur P*-function in the p-basis")
    p.add_argument("partition")

    p = add("pstar-eval", cmd_pstar_eval, "closed-form value P*_mu(lambda)")
    p.add_argument("mu")
    p.add_argument("lam", metavar="lambda")

    frak = sub.add_parser("frak", help="the deformed power-sum basis")
    frak_sub = frak.add_subparsers(dest="frak_command", required=True)
    p = frak_sub.add_parser("expand-p", help="expand p_rho in the frak-p basis")
    p.set_defaults(func=cmd_frak_expand_p)
    p.add_argument("rho")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p = frak_sub.add_parser("eval", help="closed-form value frak_p(rho)(lambda)")
    p.set_defaults(func=cmd_frak_eval)
    p.add_argument("rho")
    p.add_argument("lam", metavar="lambda")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p = frak_sub.add_parser("deg1", help="deg1 filtration degree of an expression")
    p.set_defaults(func=cmd_frak_deg1)
    p.add_argument("expr")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")

    p = add("avg", cmd_avg, "shifted Plancherel average of an expression")
    p.add_argument("--f", required=True, metavar="EXPR")
    p.add_argument("--mu", default=None)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--symbolic", action="store_true",
                      help="polynomial in n, all three bases")
    mode.add_argument("--n", type=int, help="exact value at this n")

    content = sub.add_parser("content", help="content evaluations")
    content_sub = content.add_subparsers(dest="content_command", required=True)
    p = content_sub.add_parser("hatp", help="the supersymmetric function hat-p_k")
    p.set_defaults(func=cmd_content_hatp)
    p.add_argument("k", type=int)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p = content_sub.add_parser("hatF", help="hat-F for a power-sum expansion")
    p.set_defaults(func=cmd_content_hatf)
    p.add_argument("--psum", required=True,
                   help='JSON list like [{"partition": "2", "coeff": "1"}]')
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")

    p = add("psi", cmd_psi, "Han-Xiong corner function")
    p.add_argument("k", type=int)
    p.add_argument("--lambda", dest="lam", default=None)

    p = add("phi-check", cmd_phi_check, "corner generating-series identity check")
    p.add_argument("lam", metavar="lambda")
    p.add_argument("order", type=int)

    lab = sub.add_parser("lab", help="conjecture laboratory")
    lab_sub = lab.add_subparsers(dest="lab_command", required=True)
    p = lab_sub.add_parser("deg1-scan", help="scan deg1 filtration conjecture")
    p.set_defaults(func=cmd_lab_scan)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p = lab_sub.add_parser("p2", help="E_n[p2] table and quadratic-fit failure")
    p.set_defaults(func=cmd_lab_p2)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--cap", type=int, default=14)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p = lab_sub.add_parser("fstruct", help="structure constants of a product")
    p.set_defaults(func=cmd_lab_fstruct)
    p.add_argument("sigma")
    p.add_argument("tau")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")

    add("verify", cmd_verify, "run the full paper-identity golden suite",
        fmt_default="pretty")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 0:
        parser.error("--threads must be nonnegative")
    try:
        result = args.func(args)
    except (ValueError, TypeError) as exc:
        print(json.dumps({"error": {"kind": "domain", "message": str(exc)}}),
              file=sys.stderr)
        return 1
    return result or 0


if __name__ == "__main__":
    sys.exit(main())
