"""Command-line front end.

Exit codes: 0 success, 1 hypothesis violation (parameters outside the range
of the theorem, no value emitted), 2 malformed input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from baerinv import __version__, hall, verify
from baerinv import multipliers as mf
from baerinv.errors import HypothesisViolation, InvalidInput

EXIT_OK = 0
EXIT_HYPOTHESIS = 1
EXIT_INVALID = 2
EXIT_VERIFY = 3


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {v}")
    return v


def _nonnegative(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be a nonnegative integer, got {v}")
    return v


def _int_list(text):
    if not text.strip():
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def serialize(envelope: dict) -> str:
    return json.dumps(envelope, sort_keys=True, indent=2, ensure_ascii=False)


def envelope(command, params, result, hypotheses=None) -> dict:
    return {
        "command": command,
        "params": params,
        "hypotheses": hypotheses,
        "result": result,
        "version": __version__,
    }


def _emit(args, env, tsv_lines=None):
    if args.format == "tsv" and tsv_lines is not None:
        for line in tsv_lines:
            print(line)
    else:
        print(serialize(env))


def _vparams(args):
    return mf.VParams(args.gens, args.n, args.c1, args.c2)


def _vparams_dict(p):
    return {"gens": p.m, "n": p.n, "c1": p.c1, "c2": p.c2}


def cmd_witt(args):
    value = hall.witt(args.weight, args.gens)
    env = envelope("witt", {"weight": args.weight, "gens": args.gens}, value)
    _emit(args, env, [str(value)])
    return EXIT_OK


def cmd_basis(args):
    if args.min_weight > args.max_weight:
        raise InvalidInput(f"--min {args.min_weight} exceeds --max {args.max_weight}")
    params = {"gens": args.gens, "min": args.min_weight, "max": args.max_weight}
    if args.format == "tsv":
        # one weight slice at a time
        for w in range(args.min_weight, args.max_weight + 1):
            for c in hall.basis_of_weight(args.gens, w):
                print(f"{c}\t{w}")
        return EXIT_OK
    basis = hall.generate_basis(args.gens, args.min_weight, args.max_weight)
    _emit(args, envelope("basis", params, [str(c) for c in basis]))
    return EXIT_OK


_FORMULAS = {"A": "card_A", "A&C": "card_A_cap_C", "A-C": "card_A_minus_C"}


def cmd_sets(args):
    p = _vparams(args)
    report = mf.check_hypotheses(p)
    s = mf.enumerate_set(p, args.which)
    formula = None
    if args.which in _FORMULAS and p.h1:
        formula = getattr(mf, _FORMULAS[args.which])(p)
    elements = [f"[{b},{a}]" for b, a in s]
    result = {"kind": s.kind, "count": len(s), "formula": formula, "elements": elements}
    params = dict(_vparams_dict(p), which=args.which)
    _emit(
        args,
        envelope("sets", params, result, report.as_dict()),
        (f"{e}\t{b.weight + a.weight}" for e, (b, a) in zip(elements, s)),
    )
    return EXIT_OK


def _violation(args, command, params, hypotheses, exc):
    _emit(args, envelope(command, params, None, hypotheses), [])
    for v in exc.violations:
        print(f"hypothesis violation: {v}", file=sys.stderr)
    return EXIT_HYPOTHESIS


def cmd_rank_v(args):
    p = _vparams(args)
    report = mf.check_hypotheses(p)
    params = _vparams_dict(p)
    try:
        value = mf.v_multiplier_rank(p)
    except HypothesisViolation as exc:
        return _violation(args, "rank v", params, report.as_dict(), exc)
    _emit(args, envelope("rank v", params, value, report.as_dict()), [str(value)])
    return EXIT_OK


def cmd_rank_poly(args):
    p = mf.PolyParams(args.gens, args.n, args.classes)
    params = {"gens": p.m, "n": p.n, "classes": list(p.class_row)}
    violations = p.violations()
    hypotheses = {"c1 >= n": not violations, "violations": violations}
    try:
        value = mf.polynilpotent_rank(p)
    except HypothesisViolation as exc:
        return _violation(args, "rank poly", params, hypotheses, exc)
    _emit(args, envelope("rank poly", params, value, hypotheses), [str(value)])
    return EXIT_OK


def cmd_abelian(args):
    g = mf.AbelianGroupSpec(args.rank, args.torsion)
    dec = mf.abelian_multiplier(g, args.cls)
    params = {"rank": g.free_rank, "torsion": list(g.torsion), "class": args.cls}
    result = {
        "free_rank": dec.free_rank,
        "cyclic_factors": [list(f) for f in dec.cyclic_factors],
        "text": str(dec),
    }
    lines = [f"Z\t{dec.free_rank}"] + [f"Z_{mod}\t{mult}" for mod, mult in dec.cyclic_factors]
    _emit(args, envelope("multiplier abelian", params, result), lines)
    return EXIT_OK


def cmd_verify(args):
    cfg = verify.GridConfig(
        max_gens=args.max_gens,
        max_n=args.max_n,
        max_class=args.max_class,
        max_weight=args.max_weight,
        lie_triples=args.lie_triples,
        seed=args.seed,
        cap=args.cap,
        suites=tuple(args.suite) if args.suite else verify.SUITES,
    )
    results = verify.run(cfg)
    ok = all(r.passed for r in results)
    params = {
        "max_gens": cfg.max_gens,
        "max_n": cfg.max_n,
        "max_class": cfg.max_class,
        "max_weight": cfg.max_weight,
        "lie_triples": cfg.lie_triples,
        "seed": cfg.seed,
        "cap": cfg.cap,
        "suites": list(cfg.suites),
    }
    summary = {
        "passed": ok,
        "suites": [
            {
                "name": r.name,
                "checks": r.checks,
                "passed": r.passed,
                "failures": [str(f) for f in r.failures],
            }
            for r in results
        ],
    }
    lines = []
    for r in results:
        lines.append(f"{r.name}\t{'PASS' if r.passed else 'FAIL'}\t{r.checks}")
        lines.extend(f"\t{f}" for f in r.failures)
    _emit(args, envelope("verify", params, summary), lines)
    for r in results:
        for f in r.failures:
            print(f"FAIL {f}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VERIFY


def _add_format(p):
    p.add_argument("--format", choices=("json", "tsv"), default="json")


def _add_vparams(p):
    p.add_argument("--n", type=_positive, required=True, help="nilpotency class of G")
    p.add_argument("--c1", type=_positive, required=True)
    p.add_argument("--c2", type=_positive, required=True)
    p.add_argument("--gens", type=_positive, required=True, help="number of generators m")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="baerinv", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("witt", help="number of basic commutators of a weight")
    p.add_argument("--weight", type=_positive, required=True)
    p.add_argument("--gens", type=_nonnegative, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("basis", help="list basic commutators in a weight range")
    p.add_argument("--gens", type=_positive, required=True)
    p.add_argument("--min", dest="min_weight", type=_positive, required=True)
    p.add_argument("--max", dest="max_weight", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("sets", help="enumerate the pair sets A, B, C, A&C, A-C")
    _add_vparams(p)
    p.add_argument("--which", choices=mf.SET_KINDS, default="A-C")
    _add_format(p)
    p.set_defaults(func=cmd_sets)

    rank = sub.add_parser("rank", help="multiplier ranks")
    rank_sub = rank.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = rank_sub.add_parser("v", help="rank of the outer-commutator multiplier")
    _add_vparams(p)
    _add_format(p)
    p.set_defaults(func=cmd_rank_v)
    p = rank_sub.add_parser("poly", help="rank of the polynilpotent multiplier")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--classes", type=_int_list, required=True, help="class row, e.g. 2,1")
    p.add_argument("--gens", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_rank_poly)

    mult = sub.add_parser("multiplier", help="multipliers of abelian groups")
    mult_sub = mult.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = mult_sub.add_parser("abelian", help="c-nilpotent multiplier of Z^r + Z_n1 + ...")
    p.add_argument("--rank", type=_nonnegative, required=True)
    p.add_argument("--torsion", type=_int_list, default=(), help="moduli n1,n2,... with n_{i+1} | n_i")
    p.add_argument("--class", dest="cls", type=_positive, default=1)
    _add_format(p)
    p.set_defaults(func=cmd_abelian)

    p = sub.add_parser("verify", help="run the formula-versus-oracle suites")
    p.add_argument("--max-gens", type=_positive, default=3)
    p.add_argument("--max-n", type=_positive, default=2)
    p.add_argument("--max-class", type=_positive, default=5)
    p.add_argument("--max-weight", type=_positive, default=10)
    p.add_argument("--lie-triples", type=_nonnegative, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=_positive, default=5_000_000, help="max enumerated pairs per grid point")
    p.add_argument("--suite", action="append", choices=verify.SUITES, help="repeatable; default all")
    _add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        command = " ".join(filter(None, (args.command, getattr(args, "kind", None))))
        print(f"baerinv {command}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
