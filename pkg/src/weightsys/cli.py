"""Command-line front end.

Exit codes: 0 success or pass, 1 verification failure, 2 usage or parse error.
Progress goes to stderr; results go to stdout.
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import random
import sys
import time
from typing import List, Optional, Sequence

from .casimir_series import FamilySpec, PPData, solve_odd_casimirs, verify_pp
from .engine import GL, SO, WeightSystem
from .fourterm import h_check, kernel_report
from .generators import expected_h_values
from .pbw import AlgebraSpec, SizeGuardExceeded, centrality_check, oracle_check, w_envelope
from .perm import (
    MalformedDiagram,
    MalformedPermutation,
    Permutation,
    chord_to_permutation,
    parse_diagram,
    parse_permutation,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("weightsys")

DEFAULT_PP_FAMILIES = [
    FamilySpec("so", 3),
    FamilySpec("so", 4),
    FamilySpec("so", 5),
    FamilySpec("sp", 0, 1),
    FamilySpec("sp", 0, 2),
    FamilySpec("osp", 3, 1),
]


class UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _read_input(args) -> tuple:
    """``(text, is_diagram)`` from the positional, ``--diagram`` or ``--file``."""
    given = [x is not None for x in (args.input, args.diagram, args.file)]
    if sum(given) != 1:
        raise UsageError("give exactly one of a permutation, --diagram or --file")
    if args.file:
        with open(args.file) as fh:
            return fh.read().strip(), args.diagram_file
    if args.diagram is not None:
        return args.diagram, True
    return args.input, False


# -- eval ---------------------------------------------------------------------


def cmd_eval(args) -> int:
    text, is_diagram = _read_input(args)
    if is_diagram:
        perm = chord_to_permutation(parse_diagram(text))
    else:
        perm = parse_permutation(text)
    family = GL if args.kind == "gl" else SO
    ws = WeightSystem(
        family,
        canonical_rotation=args.canonical,
        canonical_reversal=args.canonical and family == SO,
    )
    value = ws(perm)
    _emit(
        args,
        str(value),
        {"kind": args.kind, "permutation": list(perm.images), "value": value.to_json(), "text": str(value)},
    )
    return EXIT_OK


# -- dims / kernels ---------------------------------------------------------------


def _kernel_lines(reports) -> str:
    head = f"{'n':>2} {'diagrams':>8} {'rank_4T':>7} {'dim_A':>5} {'ker_gl':>6} {'ker_joint':>9}"
    rows = [
        f"{r.n:>2} {r.num_diagrams:>8} {r.rank_4T:>7} {r.dim_A:>5} {r.ker_gl:>6} {r.ker_joint:>9}"
        for r in reports
    ]
    return "\n".join([head] + rows)


def _check_n(n: int) -> None:
    if not 1 <= n <= 7:
        raise UsageError(f"n must be in 1..7, got {n}")


def cmd_dims(args) -> int:
    _check_n(args.max_n)
    reports = []
    for n in range(1, args.max_n + 1):
        log.info("computing n=%d", n)
        reports.append(kernel_report(n, args.workers))
    _emit(args, _kernel_lines(reports), [r.as_dict() for r in reports])
    return EXIT_OK


def cmd_kernels(args) -> int:
    _check_n(args.n)
    rep = kernel_report(args.n, args.workers)
    _emit(args, _kernel_lines([rep]), rep.as_dict())
    return EXIT_OK


# -- verifications ----------------------------------------------------------------


def verify_h(args):
    log.info("evaluating the generators under w_gl and w_so")
    gl, so = h_check()
    want_gl, want_so = expected_h_values()
    ok = gl == want_gl and so == want_so
    text = f"w_gl(h) = {gl}\nw_so(h) = {so}"
    return ok, text, {"w_gl": gl.to_json(), "w_so": so.to_json(), "w_gl_text": str(gl), "w_so_text": str(so)}


def verify_odd(args):
    max_m = args.max
    if max_m < 1 or max_m % 2 == 0:
        raise UsageError(f"--max must be odd and >= 1, got {max_m}")
    solved = solve_odd_casimirs(max_m)
    ws = WeightSystem(SO)
    lines, records, ok = [], [], True
    for m in sorted(solved):
        agree = ws.odd_cycle_value(m) == solved[m]
        ok &= agree
        lines.append(f"C{m} = {solved[m]}  [{'agree' if agree else 'DISAGREE'}]")
        records.append({"m": m, "value": solved[m].to_json(), "text": str(solved[m]), "agrees": agree})
    return ok, "\n".join(lines), records


def _pp_families(args) -> List[FamilySpec]:
    if args.family is None:
        return list(DEFAULT_PP_FAMILIES)
    try:
        return [FamilySpec(args.family, args.N or 0, args.M or 0)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def verify_pp_cmd(args):
    reports = [verify_pp(PPData(f), args.order) for f in _pp_families(args)]
    lines = []
    for f, r in zip(_pp_families(args), reports):
        status = "pass" if r.passed else f"FAIL ({r.first_failure})"
        lines.append(f"{f}: order {r.order}: {status}")
    return all(r.passed for r in reports), "\n".join(lines), [r.as_dict() for r in reports]


def _algebra(args) -> AlgebraSpec:
    fam = args.family or "so"
    if fam == "so":
        if not args.N:
            raise UsageError("--N is required for so")
        return AlgebraSpec.so(args.N)
    if fam == "sp":
        if not args.M:
            raise UsageError("--M is required for sp")
        return AlgebraSpec.sp(2 * args.M)
    raise UsageError(f"oracle supports so and sp, not {fam!r}")


def verify_oracle(args):
    spec = _algebra(args)
    ws = WeightSystem(SO)
    rng = random.Random(args.seed)
    results, ok = [], True
    for m in range(1, args.max_size + 1):
        perms = list(itertools.permutations(range(1, m + 1)))
        if args.sample and len(perms) > args.sample:
            perms = rng.sample(perms, args.sample)
        for p in perms:
            s = Permutation(p)
            match = oracle_check(spec, s, ws)
            central = centrality_check(spec, w_envelope(spec, s))
            ok &= match and central
            results.append({"permutation": list(p), "match": match, "central": central})
        log.info("%s: size %d done", spec, m)
    bad = [r for r in results if not (r["match"] and r["central"])]
    text = f"{spec}: {len(results)} permutations up to size {args.max_size}, {len(bad)} failures"
    for r in bad[:10]:
        text += f"\n  failed: {' '.join(map(str, r['permutation']))} match={r['match']} central={r['central']}"
    return ok, text, {"algebra": str(spec), "checked": len(results), "results": results}


VERIFIERS = {"h": verify_h, "odd-casimirs": verify_odd, "pp": verify_pp_cmd, "oracle": verify_oracle}


def _run_verifier(args, which: str) -> int:
    t0 = time.perf_counter()
    ok, text, payload = VERIFIERS[which](args)
    log.info("%s finished in %.1fs", which, time.perf_counter() - t0)
    status = "PASS" if ok else "FAIL"
    _emit(args, f"{text}\n{which}: {status}", {"check": which, "pass": ok, "details": payload})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    return _run_verifier(args, args.which)


def cmd_odd_casimirs(args) -> int:
    return _run_verifier(args, "odd-casimirs")


def cmd_pp_verify(args) -> int:
    return _run_verifier(args, "pp")


def cmd_oracle(args) -> int:
    return _run_verifier(args, "oracle")


# -- parser -----------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def _verify_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max", type=int, default=7, help="largest odd Casimir index")
    p.add_argument("--family", choices=("so", "sp", "osp"))
    p.add_argument("--N", type=int)
    p.add_argument("--M", type=int)
    p.add_argument("--order", type=int, default=10, help="series truncation order")
    p.add_argument("--max-size", type=int, default=3, help="largest permutation size for the oracle")
    p.add_argument("--sample", type=int, default=0, help="random permutations per size (0 = all)")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weightsys", description="Universal gl/so weight systems on permutations.")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate w_gl or w_so")
    p.add_argument("kind", choices=("gl", "so"))
    p.add_argument("input", nargs="?", help='permutation images, e.g. "3 5 2 1 4"')
    p.add_argument("--diagram", metavar="TEXT", help='chord diagram: "1 2 1 2" or "(1,3)(2,4)"')
    p.add_argument("--file", help="read a permutation (or, with --diagram-file, a diagram) from a file")
    p.add_argument("--diagram-file", action="store_true", help="treat --file contents as a chord diagram")
    p.add_argument("--canonical", action="store_true", help="canonicalize memo keys")
    _common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("dims", help="dim A(n) and kernel dimensions for n = 1..max-n")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--workers", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("kernels", help="kernel report for a single n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_kernels)

    p = sub.add_parser("verify", help="run a named verification")
    p.add_argument("which", choices=sorted(VERIFIERS))
    _verify_flags(p)
    _common(p)
    p.set_defaults(func=cmd_verify)

    for name, func, helptext in (
        ("odd-casimirs", cmd_odd_casimirs, "solve and cross-check odd Casimirs"),
        ("pp-verify", cmd_pp_verify, "check the Perelomov-Popov series"),
        ("oracle", cmd_oracle, "compare against PBW normal ordering"),
    ):
        p = sub.add_parser(name, help=helptext)
        _verify_flags(p)
        _common(p)
        p.set_defaults(func=func)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (MalformedPermutation, MalformedDiagram, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeGuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
