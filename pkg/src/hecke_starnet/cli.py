"""
Command-line front end.

    hecke-starnet expand   --n 4 --intervals 2-4,1-3
    hecke-starnet eval     --n 4 --lambda 2,1,1 --intervals 1-2,2-4,1-2 --method tableaux
    hecke-starnet families --n 4 --intervals 1-2,2-4,1-2 [--lambda 2,1,1]
    hecke-starnet klcheck  --w 3421 --g "1+q" --intervals 2-4,1-3 [--lambda 1,1,1,1]
    hecke-starnet verify   [--suite defect ...] --max-n 4 --max-stars 3 --seed 7

Exit status: 0 on success, 1 when a verification or factorization check fails,
2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import FactorizationInvalid, HeckeStarnetError, InputError
from .evalchar import METHODS, EvalRequest, eval_epsilon, eval_epsilon_kl
from .hecke import product_of_reversals, verify_kl_factorization
from .laurent import LaurentPoly
from .perm import Partition, Perm
from .starnet import StarNetwork, covering_families, cross_stat, dfct_stat, parse_intervals
from .tableaux import enumerate_column_strict_type_e, incross_stat
from .verify import SUITES, VerifyParams, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _lam(args) -> Partition | None:
    if args.lam is None:
        return None
    try:
        return Partition(args.lam)
    except ValueError as exc:
        raise InputError(f"--lambda {args.lam!r}: {exc}") from exc


def _emit(args, text_lines: Sequence[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _network(args) -> StarNetwork:
    return parse_intervals(args.intervals, args.n)


def cmd_expand(args) -> int:
    h = product_of_reversals(_network(args))
    lines = [f"{'T_e' if w.is_identity() else f'T_{w}'}: {h.coeff(w)}" for w in h.support()]
    _emit(args, lines or ["0"], h.to_json())
    return EXIT_OK


def cmd_eval(args) -> int:
    net = _network(args)
    req = EvalRequest(args.n, _lam(args), net, args.method)
    value = eval_epsilon(req)
    payload = {
        "n": args.n,
        "lambda": list(req.lam),
        "intervals": str(net),
        "method": args.method,
        "value": value.to_json(),
    }
    _emit(args, [str(value)], payload)
    return EXIT_OK


def cmd_families(args) -> int:
    net = _network(args)
    lines, rows = [], []
    lam = _lam(args)
    if lam is None:
        for pf in covering_families(net):
            row = {
                "windows": pf.windows(),
                "type": list(pf.type),
                "cross": cross_stat(pf),
                "dfct": dfct_stat(pf),
            }
            rows.append(row)
            lines.append(f"{row['windows']} type={pf.type} cross={row['cross']} dfct={row['dfct']}")
    else:
        if lam.n != net.n:
            raise InputError(f"{lam} is not a partition of {net.n}")
        for pf, W in enumerate_column_strict_type_e(net, lam):
            e = cross_stat(pf) + 2 * incross_stat(W)
            term = LaurentPoly.monomial(e)
            rows.append({"windows": pf.windows(), "tableau": [list(c) for c in W.columns],
                         "cross": cross_stat(pf), "incross": incross_stat(W), "term": term.to_json()})
            lines.append(f"{pf.windows()} {W} {term}")
    _emit(args, lines, {"intervals": str(net), "n": net.n, "rows": rows})
    return EXIT_OK


def cmd_klcheck(args) -> int:
    w = Perm(args.w)
    g = LaurentPoly.parse(args.g)
    net = parse_intervals(args.intervals, len(w))
    ok = verify_kl_factorization(w, g, net)
    payload: dict = {"w": list(w), "g": g.to_json(), "intervals": str(net), "valid": ok}
    lines = [f"({g}) C_{w} = product over {net or '(empty)'}: {'yes' if ok else 'no'}"]
    lam = _lam(args)
    if ok and lam is not None:
        value = eval_epsilon_kl(w, g, net, lam)
        payload["lambda"] = list(lam)
        payload["value"] = value.to_json()
        lines.append(str(value))
    _emit(args, lines, payload)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.max_n < 1 or args.max_stars < 0 or args.samples < 0 or args.functionals < 0:
        raise InputError("--max-n must be >= 1 and --max-stars, --samples, --functionals >= 0")
    suites = args.suite or list(SUITES)
    params = VerifyParams(
        max_n=args.max_n, max_stars=args.max_stars, seed=args.seed,
        samples=args.samples, functionals=args.functionals,
    )
    reports = [run_suite(s, params) for s in suites]
    lines = [line for r in reports for line in r.lines()]
    ok = all(r.ok for r in reports)
    lines.append("ALL PASS" if ok else "FAILURES")
    _emit(args, lines, {"ok": ok, "suites": [r.to_json() for r in reports]})
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hecke-starnet", description="Hecke algebra products over star networks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, needs_n=True):
        if needs_n:
            sp.add_argument("--n", type=int, required=True, help="number of wires")
        sp.add_argument("--intervals", default="", help='stars as "a-b,a-b,..."; empty means no stars')
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")

    sp = sub.add_parser("expand", help="expand the product of reversal elements in the T_w basis")
    common(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("eval", help="evaluate the induced sign character at the product")
    common(sp)
    sp.add_argument("--lambda", dest="lam", required=True, help='partition "p1,p2,..."')
    sp.add_argument("--method", choices=METHODS, default="tableaux")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("families", help="list covering families, or tableaux when --lambda is given")
    common(sp)
    sp.add_argument("--lambda", dest="lam", default=None, help='partition "p1,p2,..."')
    sp.set_defaults(func=cmd_families)

    sp = sub.add_parser("klcheck", help="check g(q) C_w against the product and optionally evaluate")
    common(sp, needs_n=False)
    sp.add_argument("--w", required=True, help='permutation in one-line notation, e.g. "3421"')
    sp.add_argument("--g", required=True, help='scalar such as "1+q"')
    sp.add_argument("--lambda", dest="lam", default=None, help='partition "p1,p2,..."')
    sp.set_defaults(func=cmd_klcheck)

    suite_help = "; ".join(f"{k}: {v[2]}" for k, v in SUITES.items())
    sp = sub.add_parser("verify", help="run verification suites", description=f"Suites. {suite_help}.")
    sp.add_argument("--suite", action="append", choices=list(SUITES),
                    help="suite to run (repeatable; default all)")
    sp.add_argument("--max-n", type=int, default=4)
    sp.add_argument("--max-stars", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=20,
                    help="random cases at n = max-n + 1 per suite")
    sp.add_argument("--functionals", type=int, default=50,
                    help="random functionals per sampled network (qstem)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FactorizationInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (HeckeStarnetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
