"""Command-line entry point: ``octobelt <command> ...``.

Data goes to standard output (or ``--out``), diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from . import apparatus, cdtower, suites
from .algebra import BASIS_NAMES, format_linear
from .apparatus import GENERATOR_NAMES, SignConvention
from .expr import ExprError, evaluate
from .loop16 import build_loop_table

DEFAULT_SEED = 20241016
SEDENION_NAMES = BASIS_NAMES + tuple("M" if n == "1" else "M" + n for n in BASIS_NAMES)


class CommandError(Exception):
    """Raised by a command to exit nonzero with a message on standard error."""


def basis_names(dim: int) -> Sequence[str]:
    return SEDENION_NAMES[:dim]


def table_grid(dim: int) -> List[List[str]]:
    """Signed-name grid, rows times columns, in basis order."""
    if dim == 8:
        return build_loop_table().names()
    if dim == 4:
        table = cdtower.reference_table(4)
    elif dim == 16:
        table = cdtower.build_table(16)
    else:
        raise CommandError(f"unsupported dimension {dim}; choose 4, 8 or 16")
    names = basis_names(dim)
    return [[("-" if s < 0 else "") + names[n] for s, n in row] for row in table]


def render_table(dim: int, fmt: str) -> str:
    names = list(basis_names(dim))
    grid = table_grid(dim)
    if fmt == "json":
        return json.dumps({"dim": dim, "basis": names, "table": grid}) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + names)
        for name, row in zip(names, grid):
            writer.writerow([name] + row)
        return buf.getvalue()
    if fmt == "text":
        width = max(len(cell) for row in grid for cell in row + names) + 1
        lines = ["".rjust(width) + " |" + "".join(n.rjust(width) for n in names)]
        lines.append("-" * len(lines[0]))
        for name, row in zip(names, grid):
            lines.append(name.rjust(width) + " |" + "".join(c.rjust(width) for c in row))
        return "\n".join(lines) + "\n"
    raise CommandError(f"unsupported format {fmt!r}; choose text, csv or json")


def cmd_table(args) -> str:
    return render_table(args.dim, args.format)


def cmd_eval(args) -> str:
    try:
        value = evaluate(args.expr, strict_parens=args.strict_parens)
    except ExprError as exc:
        raise CommandError(f"cannot evaluate {args.expr!r}: {exc}") from exc
    return f"{value}\n"


def _load_convention(path: Optional[str]) -> Optional[SignConvention]:
    if path is None:
        return None
    try:
        return SignConvention.load(path)
    except (OSError, ValueError, KeyError) as exc:
        raise CommandError(f"cannot read convention file {path}: {exc}") from exc


def cmd_word(args) -> str:
    for g in args.generators:
        if g not in GENERATOR_NAMES:
            raise CommandError(
                f"unknown generator {g!r}; expected one of {' '.join(GENERATOR_NAMES)}"
            )
    convention = _load_convention(args.convention)
    run = apparatus.run_word(args.generators, trace=args.trace, convention=convention)
    lines = []
    if args.trace:
        lines.extend(apparatus.trace_lines(args.generators, run.trace))
    lines.append(run.final.name)
    return "\n".join(lines) + "\n"


def verify_report(max_word_len: int, seed: int, convention=None, n_random: int = 1000):
    """Run every suite; returns (all_ok, report lines)."""
    results = []

    model = apparatus.check_model(convention, max_word_len=max_word_len)
    results.append(
        suites.SuiteResult(
            "state-generator pairs",
            model.pairs_checked,
            model.pairs_passed,
            model.counterexample if model.pairs_passed != model.pairs_checked else None,
        )
    )
    expected_words = sum(7**n for n in range(1, max_word_len + 1))
    word_fail = model.counterexample if model.pairs_passed == model.pairs_checked else None
    results.append(
        suites.SuiteResult(
            f"apparatus words (lengths 1..{max_word_len})",
            expected_words,
            model.words_checked if model.passed else max(model.words_checked - 1, 0),
            word_fail if not model.passed else None,
        )
    )

    for dim in (4, 8):
        bad = cdtower.compare_tables(dim)
        first = None
        if bad:
            r, c, got, want = bad[0]
            first = f"row {basis_names(dim)[r]}, column {basis_names(dim)[c]}: {got} vs {want}"
        results.append(
            suites.SuiteResult(f"dim-{dim} doubling table entries", dim * dim, dim * dim - len(bad), first)
        )

    results.append(suites.moufang_loop())
    results.append(suites.alternative_loop())
    results.append(suites.flexible_loop())
    pairs = suites.random_pairs(n_random, seed)
    results.append(suites.norm_multiplicative(pairs))
    results.append(suites.alternative_random(pairs[:500]))
    results.append(suites.conj_antiautomorphism(pairs[:500]))

    lines = [f"seed {seed}"] + [r.line() for r in results]
    ok = all(r.ok for r in results)
    lines.append("all suites passed" if ok else "verification FAILED")
    return ok, lines, results


def cmd_verify(args) -> str:
    if args.max_word_len < 1:
        raise CommandError("--max-word-len must be >= 1")
    convention = _load_convention(args.convention)
    ok, lines, results = verify_report(args.max_word_len, args.seed, convention)
    text = "\n".join(lines) + "\n"
    if not ok:
        first = next(r for r in results if not r.ok)
        raise CommandError(
            f"{first.name} failed: {first.counterexample or 'count mismatch'}", text
        )
    return text


def _dense_text(coeffs, dim) -> str:
    return format_linear(coeffs, basis_names(dim))


def cmd_witness(args) -> str:
    if args.kind == "associator":
        found = suites.associator_witnesses()
        lines = [f"({x.name}, {y.name}, {z.name}) -> {a}" for x, y, z, a in found]
        lines.append(f"total: {len(found)} of 343 ordered triples have a nonzero associator")
        return "\n".join(lines) + "\n"
    pair = cdtower.find_zero_divisor(16, 1)
    if pair is None:
        raise CommandError("no dimension-16 zero divisor found")
    x, y = pair
    return (
        f"x = {_dense_text(x.coeffs, 16)}\n"
        f"y = {_dense_text(y.coeffs, 16)}\n"
        f"x*y = {_dense_text(cdtower.cd_mul(x, y).coeffs, 16)}\n"
    )


def _parse_overrides(items: Sequence[str]):
    overrides = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise CommandError(f"bad --predicate-override {item!r}; expected GEN=always|never")
        overrides[key] = value
    try:
        return apparatus.reversals_with(overrides)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc


def cmd_solve_encoding(args) -> str:
    reversals = _parse_overrides(args.predicate_override)
    found = apparatus.solve_signs(reversals)
    if not found:
        raise CommandError("no consistent sign convention: the rule transcription is inconsistent")
    shipped = apparatus.default_convention()
    lines = [
        "reversal predicates:",
        *(
            f"  {g}: {apparatus.REVERSAL_TEXT[g]}"
            + (" (overridden)" if reversals[g] is not apparatus.DEFAULT_REVERSALS[g] else "")
            for g in GENERATOR_NAMES
        ),
        f"consistent conventions: {len(found)}",
        "base-sign bits per class " + " ".join(BASIS_NAMES),
    ]
    for n, conv in enumerate(found):
        marks = []
        if n == 0:
            marks.append("default")
        if conv == shipped:
            marks.append("shipped")
        tag = f" [{', '.join(marks)}]" if marks else ""
        lines.append(f"convention {n}{tag}")
        lines.extend(f"  {g:>2}: {bits}" for g, bits in conv.bitstrings().items())
    if shipped not in found:
        lines.append("shipped convention is NOT consistent with these predicates")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octobelt",
        description="Exact octonions and the hoop-and-ribbon model of the octonion loop.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--out", metavar="PATH", help="write the document here instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("table", cmd_table, "print a signed basis multiplication table")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--dim", type=int, choices=(4, 8, 16), default=8)

    p = add("eval", cmd_eval, "evaluate an octonion expression")
    p.add_argument("expr")
    p.add_argument("--strict-parens", action="store_true", help="reject unbracketed chained products")

    p = add("word", cmd_word, "run generators through the apparatus, left to right")
    p.add_argument("generators", nargs="*")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--convention", metavar="PATH", help="sign convention JSON (default: shipped)")

    p = add("verify", cmd_verify, "run the full verification suite")
    p.add_argument("--max-word-len", type=int, default=6)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--convention", metavar="PATH", help="sign convention JSON (default: shipped)")

    p = add("witness", cmd_witness, "list non-associativity or zero-divisor witnesses")
    p.add_argument("kind", choices=("associator", "zero-divisor"))

    p = add("solve-encoding", cmd_solve_encoding, "search all consistent twist sign conventions")
    p.add_argument(
        "--predicate-override",
        action="append",
        default=[],
        metavar="GEN=always|never",
        help="replace one generator's reversal predicate (negative control)",
    )
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except CommandError as exc:
        message = exc.args[0]
        if len(exc.args) > 1:
            _emit(exc.args[1], args.out)
        print(f"octobelt {args.command}: {message}", file=sys.stderr)
        return 1
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
