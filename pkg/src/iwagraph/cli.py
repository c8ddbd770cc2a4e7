"""Command-line front end.

Subcommands: construct, invariants, verify, derive, phi, sample.  Exit
codes: 0 for success or a PASS verdict, 1 for a FAIL verdict, 2 for usage
errors, 3 for computation errors (disconnected tower, singular Laplacian,
repair failure, bad input files).
"""
from __future__ import annotations

import argparse
import json
import sys

from .constructor import construct_ramified, construct_unramified, construct_with_mu_l
from .errors import IwagraphError
from .graphio import load_graph_spec, save_graph_spec, save_multigraph_spec
from .graphs import derived_graph
from .groupring import parse_element, parse_poly, render_element, render_poly
from .laplacian import predicted_invariants
from .phi import phi_forward, phi_inverse, sample_lambda_distribution
from .treecount import verify


def _parse_mu_l_pair(text: str) -> tuple:
    try:
        l, e = text.split("=")
        return int(l), int(e)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected l=e with integers, got {text!r}"
        ) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iwagraph",
        description="Coverings of graphs with prescribed tree-number growth.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a graph with prescribed invariants")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--lambda", dest="lambda_", type=int, required=True)
    c.add_argument("--mu", type=int, required=True)
    c.add_argument("--ramified", action="store_true")
    c.add_argument(
        "--mu-l",
        dest="mu_l",
        type=_parse_mu_l_pair,
        action="append",
        default=[],
        metavar="l=e",
    )
    c.add_argument("--minimize", action="store_true")
    c.add_argument("-o", "--output", required=True)

    i = sub.add_parser("invariants", help="predicted invariants of a graph file")
    i.add_argument("file")
    i.add_argument(
        "--mu-l", dest="mu_l", type=int, action="append", default=[], metavar="l"
    )

    v = sub.add_parser("verify", help="count trees level by level and fit the growth")
    v.add_argument("file")
    v.add_argument("--levels", type=int, required=True)
    v.add_argument("--json", action="store_true", dest="as_json")
    v.add_argument("--short", action="store_true")

    d = sub.add_parser("derive", help="write the level-n derived graph")
    d.add_argument("file")
    d.add_argument("--level", type=int, required=True)
    d.add_argument("-o", "--output", required=True)

    ph = sub.add_parser("phi", help="apply the S-transform or its inverse")
    ph_sub = ph.add_subparsers(dest="direction", required=True)
    ph_sub.add_parser("forward").add_argument("expr")
    ph_sub.add_parser("inverse").add_argument("expr")

    s = sub.add_parser("sample", help="sampled distribution of the lambda invariant")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--lambda-prime-max", dest="lambda_prime_max", type=int, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--precision", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)

    return parser


def _format_invariants(inv) -> str:
    parts = [f"λ={inv.lambda_}", f"μ={inv.mu}"]
    for l in sorted(inv.mu_l):
        parts.append(f"μ_{l}={inv.mu_l[l]}")
    return " ".join(parts)


def _cmd_construct(args) -> int:
    targets = dict(args.mu_l)
    if targets and args.ramified:
        print("--mu-l targets are only supported for unramified graphs", file=sys.stderr)
        return 2
    if targets:
        vg = construct_with_mu_l(args.p, args.lambda_, args.mu, targets)
    elif args.ramified:
        vg = construct_ramified(args.p, args.lambda_, args.mu)
    else:
        vg = construct_unramified(args.p, args.lambda_, args.mu, minimize=args.minimize)
    inv = predicted_invariants(vg, mu_l_primes=tuple(sorted(targets)))
    save_graph_spec(vg, args.output)
    print(f"predicted {_format_invariants(inv)}")
    print("certification PASS")
    print(f"wrote {args.output}")
    return 0


def _cmd_invariants(args) -> int:
    vg = load_graph_spec(args.file)
    inv = predicted_invariants(vg, mu_l_primes=tuple(sorted(set(args.mu_l))))
    print(_format_invariants(inv))
    return 0


def _cmd_verify(args) -> int:
    vg = load_graph_spec(args.file)
    report = verify(vg, args.levels)
    rows = report.sequence.rows
    fitted = report.fitted
    predicted = report.predicted
    verdict = "PASS" if report.passed else "FAIL"
    if args.as_json:
        payload = {
            "rows": [{"n": n, "kappa": k, "ord_p": o} for n, k, o in rows],
            "predicted": {"lambda": predicted.lambda_, "mu": predicted.mu},
            "fitted": {
                "lambda": fitted.lambda_,
                "mu": fitted.mu,
                "nu": fitted.nu,
                "n0": fitted.stable_from,
            },
            "pass": report.passed,
        }
        print(json.dumps(payload))
    else:
        if args.short:
            headers = ["n", "ord_p"]
            cells = [[str(n), str(o)] for n, _, o in rows]
        else:
            headers = ["n", "kappa", "ord_p"]
            cells = [[str(n), str(k), str(o)] for n, k, o in rows]
        widths = [
            max(len(h), max(len(row[j]) for row in cells))
            for j, h in enumerate(headers)
        ]
        print(" | ".join(h.rjust(w) for h, w in zip(headers, widths)))
        for row in cells:
            print(" | ".join(c.rjust(w) for c, w in zip(row, widths)))
        print(
            f"predicted λ={predicted.lambda_} μ={predicted.mu} | "
            f"fitted λ={fitted.lambda_} μ={fitted.mu} "
            f"ν={fitted.nu} n0={fitted.stable_from} | {verdict}"
        )
    return 0 if report.passed else 1


def _cmd_derive(args) -> int:
    vg = load_graph_spec(args.file)
    derived = derived_graph(vg, args.level)
    save_multigraph_spec(derived.graph, vg.p, args.output)
    print(f"wrote {args.output}")
    return 0


def _cmd_phi(args) -> int:
    if args.direction == "forward":
        print(render_poly(phi_forward(parse_element(args.expr, "g"))))
    else:
        print(render_element(phi_inverse(parse_poly(args.expr, "S"))))
    return 0


def _cmd_sample(args) -> int:
    freqs = sample_lambda_distribution(
        args.p,
        args.lambda_prime_max,
        args.trials,
        args.degree,
        args.precision,
        seed=args.seed,
    )
    for lam in range(1, args.lambda_prime_max + 1):
        print(f"lambda'={lam}: {freqs[lam]:.6f}")
    print(f"overflow: {freqs['overflow']:.6f}")
    print(f"mu_positive: {freqs['mu_positive']:.6f}")
    return 0


_DISPATCH = {
    "construct": _cmd_construct,
    "invariants": _cmd_invariants,
    "verify": _cmd_verify,
    "derive": _cmd_derive,
    "phi": _cmd_phi,
    "sample": _cmd_sample,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except (IwagraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
