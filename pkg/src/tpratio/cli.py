"""Command-line front end.

Ratios are written in bracket notation, ``[1,4][2,3]/[1,3][2,4]``, or minor
notation, ``(1|1)(2|2)/(1|2)(2|1)`` (rows|columns; requires ``--n``).  Minor
terms are converted to brackets on input, so one pipeline serves both.
Every subcommand takes ``--json``; rationals are serialized as "num/den"
strings so nothing is ever rounded.

Exit codes: 0 for any decided verdict (including "unbounded" and screen
failures), 2 for an inconclusive falsification, 1 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import combinatorics as comb
from .combinatorics import IndexSet, RatioExpr
from .conelab import InCone, cone_membership, ratio_to_vector, verify_certificate
from .errors import (
    ConditionMViolation,
    DuplicateIndex,
    RankMismatch,
    RatioSyntaxError,
    St0Violation,
    TpratioError,
)
from .factorizer import basic_ratios_all, factor_to_basics
from .polycheck import is_subtraction_free, ratio_difference_poly
from .tpcore import (
    DEFAULT_T_LADDER,
    DEFAULT_THRESHOLD,
    Evidence,
    TPMatrix,
    eval_ratio,
    falsify,
    random_tp,
    reverse_matrix,
    shift_matrix,
    verify_tp,
)

SCHEMA = "tpratio.report/1"


# ---------------------------------------------------------------------------
# ratio grammar


def parse_ratio(text: str, rank: int | None = None) -> RatioExpr:
    """Parse ``term+ "/" term+`` where a term is ``[i,j,...]`` or ``(rows|cols)``.

    In bracket notation the rank is the (common) term size; minor notation
    needs an explicit rank to perform the conversion.  Syntax errors carry
    the 0-based offset of the offending character.
    """
    num_terms, den_terms, minor_seen = _scan_terms(text)
    if minor_seen and rank is None:
        raise RankMismatch("minor notation needs an explicit rank (--n)")

    sizes = {len(t) for kind, t in num_terms + den_terms if kind == "bracket"}
    if len(sizes) > 1:
        raise RankMismatch(f"bracket terms of different sizes: {sorted(sizes)}")
    inferred = sizes.pop() if sizes else None
    if rank is not None and inferred is not None and rank != inferred:
        raise RankMismatch(f"--n {rank} but bracket terms have size {inferred}")
    n = rank if rank is not None else inferred
    if n is None:
        raise RankMismatch("cannot infer the rank from the input")

    def to_set(kind, payload) -> IndexSet:
        if kind == "bracket":
            if max(payload) > 2 * n:
                raise RankMismatch(
                    f"element {max(payload)} exceeds 2n = {2 * n} in {payload}"
                )
            return IndexSet.of(n, payload)
        rows, cols = payload
        return comb.minor_to_plucker(comb.MinorSpec.of(n, rows, cols))

    return RatioExpr.of(
        n,
        [to_set(k, p) for k, p in num_terms],
        [to_set(k, p) for k, p in den_terms],
    )


def _scan_terms(text: str):
    num_terms: list = []
    den_terms: list = []
    current = num_terms
    seen_slash = False
    minor_seen = False
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch == "/":
            if seen_slash:
                raise RatioSyntaxError("unexpected second '/'", pos)
            seen_slash = True
            current = den_terms
            pos += 1
        elif ch == "[":
            elems, pos = _parse_ints(text, pos + 1, "]")
            if not elems:
                raise RatioSyntaxError("empty bracket term", pos)
            _check_duplicates(elems, pos)
            current.append(("bracket", tuple(elems)))
        elif ch == "(":
            rows, pos = _parse_ints(text, pos + 1, "|")
            cols, pos = _parse_ints(text, pos, ")")
            _check_duplicates(rows, pos)
            _check_duplicates(cols, pos)
            current.append(("minor", (tuple(rows), tuple(cols))))
            minor_seen = True
        else:
            raise RatioSyntaxError(f"expected '[' or '(', found {ch!r}", pos)
    if not seen_slash:
        raise RatioSyntaxError("missing '/' between numerator and denominator", len(text))
    if not num_terms or not den_terms:
        raise RatioSyntaxError("each side of the ratio needs at least one term", len(text))
    return num_terms, den_terms, minor_seen


def _parse_ints(text: str, pos: int, closer: str) -> tuple[list[int], int]:
    elems: list[int] = []
    current = ""
    while pos < len(text):
        ch = text[pos]
        if ch.isdigit():
            current += ch
            pos += 1
        elif ch == ",":
            if not current:
                raise RatioSyntaxError("expected a number before ','", pos)
            elems.append(int(current))
            current = ""
            pos += 1
        elif ch == closer:
            if current:
                elems.append(int(current))
            elif elems:
                raise RatioSyntaxError(f"expected a number before {closer!r}", pos)
            return elems, pos + 1
        elif ch.isspace():
            pos += 1
        else:
            raise RatioSyntaxError(f"unexpected character {ch!r}", pos)
    raise RatioSyntaxError(f"unterminated term, expected {closer!r}", pos)


def _check_duplicates(elems, pos):
    if len(set(elems)) != len(elems):
        raise DuplicateIndex(f"repeated index in {elems!r} (near offset {pos})")


# ---------------------------------------------------------------------------
# helpers


def _fr(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(
        value.numerator
    )


def _load_matrix(path: str) -> TPMatrix:
    with open(path) as fh:
        rows = json.load(fh)
    return TPMatrix.from_strings(rows)


def _ratio_argument(args) -> RatioExpr:
    if args.file:
        with open(args.file) as fh:
            text = fh.read().strip()
    else:
        if not args.ratio:
            raise RatioSyntaxError("no ratio given (argument or --file)", 0)
        text = args.ratio
    return parse_ratio(text, args.n)


def _report(args, payload: dict, exit_code: int = 0) -> int:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2))
    else:
        for line in payload.get("lines", []):
            print(line)
    return exit_code


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check(args) -> int:
    ratio = _ratio_argument(args)
    st0 = comb.check_st0(ratio)
    cm = comb.check_condition_m(ratio)
    lines = [f"ratio: {ratio.canonical()}"]
    verdict: dict = {
        "command": "check",
        "input": str(ratio.canonical()),
        "n": ratio.rank,
        "st0": {"holds": st0.holds},
        "condition_m": {"holds": cm.holds},
    }
    if st0.holds:
        lines.append("ST0: holds")
    else:
        lines.append(
            f"ST0: fails at index {st0.witness} "
            f"({st0.numerator_count} vs {st0.denominator_count})"
        )
        verdict["st0"].update(
            witness=st0.witness,
            numerator_count=st0.numerator_count,
            denominator_count=st0.denominator_count,
        )
    if cm.holds:
        lines.append("(M): holds")
    else:
        lines.append(
            f"(M): fails, witness L={cm.witness} "
            f"with m(num)={list(cm.m_numerator)}, m(den)={list(cm.m_denominator)}"
        )
        verdict["condition_m"].update(
            witness=list(cm.witness.members),
            m_numerator=list(cm.m_numerator),
            m_denominator=list(cm.m_denominator),
        )
    verdict["lines"] = lines
    return _report(args, verdict)


def _cmd_factor(args) -> int:
    ratio = _ratio_argument(args)
    try:
        result = factor_to_basics(ratio)
    except (St0Violation, ConditionMViolation) as exc:
        return _report(
            args,
            {
                "command": "factor",
                "input": str(ratio.canonical()),
                "n": ratio.rank,
                "verdict": "not-factorable",
                "reason": str(exc),
                "lines": [f"ratio: {ratio.canonical()}", f"not factorable: {exc}"],
            },
        )
    lines = [f"ratio: {ratio.canonical()}", f"basics ({len(result.basics)}):"]
    lines += [f"  {b}" for b in result.basics]
    lines.append(f"trace: {len(result.trace)} steps")
    for step in result.trace:
        lines.append(
            f"  {step.rule}: {step.ratio} "
            + " ".join(f"{k}={v}" for k, v in step.measures)
        )
    return _report(
        args,
        {
            "command": "factor",
            "input": str(ratio.canonical()),
            "n": ratio.rank,
            "verdict": "factored",
            "basics": [str(b) for b in result.basics],
            "trace": [
                {
                    "rule": step.rule,
                    "ratio": str(step.ratio),
                    "measures": dict(step.measures),
                    "factors": [str(f) for f in step.factors],
                }
                for step in result.trace
            ],
            "lines": lines,
        },
    )


def _cmd_eval(args) -> int:
    ratio = _ratio_argument(args)
    if args.matrix:
        matrix = _load_matrix(args.matrix)
        source = args.matrix
    else:
        matrix = random_tp(ratio.rank, args.seed, args.magnitude)
        source = f"random_tp(n={ratio.rank}, seed={args.seed}, magnitude={args.magnitude})"
    if matrix.rank != ratio.rank:
        raise RankMismatch(
            f"matrix rank {matrix.rank} does not match ratio rank {ratio.rank}"
        )
    value = eval_ratio(matrix, ratio)
    return _report(
        args,
        {
            "command": "eval",
            "input": str(ratio.canonical()),
            "n": ratio.rank,
            "matrix": source,
            "matrix_entries": matrix.to_strings(),
            "value": _fr(value),
            "value_float": float(value),
            "lines": [
                f"ratio: {ratio.canonical()}",
                f"matrix: {source}",
                f"value: {_fr(value)} (~{float(value):.6g})",
            ],
        },
    )


def _cmd_cone(args) -> int:
    ratio = _ratio_argument(args)
    vector = ratio_to_vector(ratio)
    verdict = cone_membership(vector, ratio.rank, allow_large=args.allow_large)
    checked = verify_certificate(vector, verdict, ratio.rank)
    if isinstance(verdict, InCone):
        lines = [f"ratio: {ratio.canonical()}", "in cone; coefficients:"]
        lines += [f"  {_fr(c)} * {b}" for b, c in verdict.coefficients]
        payload = {
            "verdict": "in-cone",
            "coefficients": [[str(b), _fr(c)] for b, c in verdict.coefficients],
        }
    else:
        lines = [f"ratio: {ratio.canonical()}", "outside cone; separating functional:"]
        lines += [f"  y[{s}] = {_fr(c)}" for s, c in verdict.certificate]
        payload = {
            "verdict": "outside-cone",
            "certificate": [[str(s), _fr(c)] for s, c in verdict.certificate],
        }
    lines.append(f"certificate re-check: {'ok' if checked else 'FAILED'}")
    return _report(
        args,
        {
            "command": "cone",
            "input": str(ratio.canonical()),
            "n": ratio.rank,
            "certificate_verified": checked,
            "lines": lines,
            **payload,
        },
    )


def _cmd_subfree(args) -> int:
    ratio = _ratio_argument(args)
    poly = ratio_difference_poly(ratio)
    verdict = is_subtraction_free(poly)
    lines = [
        f"ratio: {ratio.canonical()}",
        f"difference polynomial: {len(poly.terms)} terms",
    ]
    payload = {
        "command": "subfree",
        "input": str(ratio.canonical()),
        "n": ratio.rank,
        "terms": len(poly.terms),
        "subtraction_free": verdict.subtraction_free,
    }
    if verdict.subtraction_free:
        lines.append("subtraction free: yes")
    else:
        witness = verdict.witness.format(ratio.rank)
        lines.append(
            f"subtraction free: no; witness {witness} "
            f"with coefficient {verdict.witness_coefficient}"
        )
        payload["witness"] = witness
        payload["witness_coefficient"] = verdict.witness_coefficient
    payload["lines"] = lines
    return _report(args, payload)


def _cmd_falsify(args) -> int:
    ratio = _ratio_argument(args)
    ladder = (
        tuple(Fraction(t) for t in args.t_ladder.split(","))
        if args.t_ladder
        else DEFAULT_T_LADDER
    )
    threshold = Fraction(args.threshold) if args.threshold else DEFAULT_THRESHOLD
    outcome = falsify(
        ratio,
        t_ladder=ladder,
        threshold=threshold,
        ladder_extensions=args.budget,
        random_trials=args.trials,
        random_seed=args.seed,
    )
    if isinstance(outcome, Evidence):
        lines = [
            f"ratio: {ratio.canonical()}",
            f"numerical witness via {outcome.family} "
            + " ".join(f"{k}={v}" for k, v in outcome.detail),
            f"threshold: {_fr(outcome.threshold)}",
        ]
        lines += [
            f"  t={_fr(t)}: value {_fr(v)} (~{float(v):.6g})" for t, v in outcome.trace
        ]
        return _report(
            args,
            {
                "command": "falsify",
                "input": str(ratio.canonical()),
                "n": ratio.rank,
                "verdict": "unbounded-evidence",
                "family": outcome.family,
                "detail": dict(outcome.detail),
                "threshold": _fr(outcome.threshold),
                "trace": [[_fr(t), _fr(v)] for t, v in outcome.trace],
                "lines": lines,
            },
        )
    lines = [f"ratio: {ratio.canonical()}", "inconclusive:"]
    lines += [f"  {a}" for a in outcome.attempts]
    return _report(
        args,
        {
            "command": "falsify",
            "input": str(ratio.canonical()),
            "n": ratio.rank,
            "verdict": "inconclusive",
            "attempts": list(outcome.attempts),
            "lines": lines,
        },
        exit_code=2,
    )


def _cmd_basics(args) -> int:
    basics = basic_ratios_all(args.n)
    if args.count:
        lines = [str(len(basics))]
    else:
        lines = [str(b) for b in basics]
    return _report(
        args,
        {
            "command": "basics",
            "n": args.n,
            "count": len(basics),
            "basics": None if args.count else [str(b) for b in basics],
            "lines": lines,
        },
    )


def _transform_command(name, ratio_op, matrix_op):
    def run(args) -> int:
        payload: dict = {"command": name, "lines": []}
        if args.ratio or args.file:
            ratio = _ratio_argument(args)
            moved = ratio_op(ratio)
            payload.update(input=str(ratio.canonical()), n=ratio.rank, ratio=str(moved))
            payload["lines"].append(f"ratio: {moved}")
        if args.matrix:
            matrix = _load_matrix(args.matrix)
            moved_matrix = matrix_op(matrix)
            payload["matrix"] = moved_matrix.to_strings()
            payload["matrix_tp"] = verify_tp(moved_matrix)
            payload["lines"] += [
                "matrix rows:",
                *("  " + " ".join(row) for row in moved_matrix.to_strings()),
            ]
        if not payload["lines"]:
            raise RatioSyntaxError("nothing to transform: give a ratio or --matrix", 0)
        return _report(args, payload)

    return run


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tpratio",
        description=(
            "Decide, certify, and falsify boundedness of ratios of products "
            "of minors over totally positive matrices."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *, ratio=True, needs_n=False):
        p = sub.add_parser(name, help=help_text)
        if ratio:
            p.add_argument("ratio", nargs="?", help="ratio text; see --file")
            p.add_argument("--file", help="read the ratio text from FILE")
        p.add_argument(
            "--n",
            type=int,
            required=needs_n,
            help="rank (required for minor notation, inferred for brackets)",
        )
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.set_defaults(func=func)
        return p

    add("check", _cmd_check, "run the counting and majorization screens")
    add("factor", _cmd_factor, "factor a two-over-two ratio into basic ratios")

    p = add("eval", _cmd_eval, "evaluate the ratio exactly on a matrix")
    p.add_argument("--matrix", help="JSON file: rows of 'num/den' strings")
    p.add_argument("--seed", type=int, default=0, help="seed for a random TP matrix")
    p.add_argument("--magnitude", type=int, default=3, help="weight spread 2^[-m, m]")

    p = add("cone", _cmd_cone, "membership in the cone of basic ratios")
    p.add_argument(
        "--allow-large", action="store_true", help="lift the rank <= 4 budget"
    )

    add("subfree", _cmd_subfree, "test the weight polynomial q - p for negative coefficients")

    p = add("falsify", _cmd_falsify, "search for numerical unboundedness evidence")
    p.add_argument("--threshold", help="evidence threshold, a rational like 1000")
    p.add_argument("--t-ladder", help="comma-separated t values, e.g. 10,100,1000")
    p.add_argument("--budget", type=int, default=4, help="extra ladder extensions")
    p.add_argument("--trials", type=int, default=20, help="random-search trials")
    p.add_argument("--seed", type=int, default=0, help="random-search base seed")

    p = sub.add_parser("basics", help="list the basic-ratio generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print only the count")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_basics)

    for name, rop, mop in (
        ("shift", comb.cyclic_shift_ratio, shift_matrix),
        ("reverse", comb.reversal_ratio, reverse_matrix),
    ):
        p = add(
            name,
            _transform_command(name, rop, mop),
            f"apply the {name} operator to a ratio and/or matrix",
        )
        p.add_argument("--matrix", help="JSON matrix file to transform as well")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TpratioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
