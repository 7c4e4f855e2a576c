"""
Command-line interface

Subcommands:
    lascoux       print a Lascoux (or key) polynomial
    expand        expand a Lascoux polynomial times a truncated stable
                  Grothendieck polynomial in the Lascoux basis
    grothendieck  expand a Grothendieck polynomial in the Lascoux basis
    insert        run one reverse row insertion from a tableau file
    psi           map a tableau pair to its compatible pair (or back)
    verify        run the property suites

Exit codes: 0 success, 2 usage, 3 identity check failed, 4 internal error.
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from lascoux.cli.formats import (
    expansion_to_json,
    format_expansion,
    format_pair,
    format_tableau,
    format_trace,
    parse_cell,
    parse_compatible_pair,
    parse_composition,
    parse_pair,
    parse_permutation,
    parse_tableau,
)
from lascoux.cli.models import (
    CommandArgs,
    ExpandArgs,
    GrothendieckArgs,
    InsertArgs,
    LascouxArgs,
    OutputFormat,
    PsiArgs,
    Request,
    Subcommand,
    VerifyArgs,
)
from lascoux.config import get_settings
from lascoux.errors import LascouxError, UsageError
from lascoux.expansion import expand_grothendieck, expand_key_product, expand_product
from lascoux.insertion import psi, psi_inverse, reverse_insert
from lascoux.polynomials import key_polynomial, lascoux
from lascoux.utils.logging import RunContext, get_logger, setup_logging
from lascoux.verify import Suite, SuiteReport, run_suite

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_IDENTITY = 3


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so usage errors share one path."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = _Parser(prog="lascoux", description="Lascoux, key and Grothendieck polynomial expansions")
    parser.add_argument("--log-level", default=None, help="Override LASCOUX_LOG_LEVEL")
    parser.add_argument("--log-format", choices=["json", "pretty"], default=None)
    parser.add_argument("--log-file", default=None, help="Also write log records to this file (LASCOUX_LOG_FILE)")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser(Subcommand.LASCOUX.value, help="Print the Lascoux polynomial of alpha")
    p.add_argument("--alpha", required=True, help="Weak composition, e.g. 0,2,1")
    p.add_argument("--n", type=int, default=None, help="Number of variables (defaults to len(alpha))")
    p.add_argument("--beta0", action="store_true", help="Print the key polynomial instead")

    p = sub.add_parser(Subcommand.EXPAND.value, help="Expand L_alpha * G_w(x_1..x_n)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--w", required=True, help="Permutation in one-line notation, e.g. 321 or 3,2,1")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--no-verify", action="store_true", help="Skip the polynomial identity check")
    p.add_argument("--key", action="store_true", help="Expand kappa_alpha * F_w in key polynomials")
    p.add_argument("--threshold", type=int, default=None, help="Split value N (default: smallest valid)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser(Subcommand.GROTHENDIECK.value, help="Expand the Grothendieck polynomial of w")
    p.add_argument("--w", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--no-verify", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser(Subcommand.INSERT.value, help="Reverse row insertion from an outer cell")
    p.add_argument("tableau_file", type=Path)
    p.add_argument("--cell", required=True, help="Outer cell as row,column")
    p.add_argument("--alpha", type=int, choices=[0, 1], default=0)

    p = sub.add_parser(Subcommand.PSI.value, help="Map a tableau pair file through psi")
    p.add_argument("pair_file", type=Path, help="P, a blank line, then Q; or '(a, i)' with --inverse")
    p.add_argument("--inverse", action="store_true", help="Read a compatible pair and print its preimage")

    p = sub.add_parser(Subcommand.VERIFY.value, help="Run property suites")
    p.add_argument("--suite", choices=[s.value for s in Suite], default=Suite.ALL.value)
    p.add_argument("--seed", type=int, default=settings.default_seed)
    p.add_argument("--trials", type=int, default=settings.default_trials)
    p.add_argument("--workers", type=int, default=settings.workers)
    p.add_argument("--json", action="store_true")
    return parser


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}", details={"path": str(path)}) from exc


def build_request(ns: argparse.Namespace) -> Request:
    """Validate parsed flags into a Request; any problem is a UsageError."""
    command = Subcommand(ns.command)
    output = OutputFormat.JSON if getattr(ns, "json", False) else OutputFormat.TEXT
    try:
        args: CommandArgs
        if command is Subcommand.LASCOUX:
            alpha = parse_composition(ns.alpha)
            args = LascouxArgs(alpha=alpha, n=alpha.n if ns.n is None else ns.n, beta_zero=ns.beta0)
        elif command is Subcommand.EXPAND:
            alpha = parse_composition(ns.alpha)
            args = ExpandArgs(
                alpha=alpha,
                w=parse_permutation(ns.w),
                n=alpha.n if ns.n is None else ns.n,
                verify=not ns.no_verify,
                key_only=ns.key,
                threshold=ns.threshold,
            )
        elif command is Subcommand.GROTHENDIECK:
            args = GrothendieckArgs(w=parse_permutation(ns.w), n=ns.n, verify=not ns.no_verify)
        elif command is Subcommand.INSERT:
            args = InsertArgs(tableau_file=ns.tableau_file, cell=parse_cell(ns.cell), alpha=ns.alpha)
        elif command is Subcommand.PSI:
            args = PsiArgs(pair_file=ns.pair_file, inverse=ns.inverse)
        else:
            args = VerifyArgs(suite=Suite(ns.suite), seed=ns.seed, trials=ns.trials, workers=ns.workers)
        return Request(subcommand=command, args=args, output=output)
    except ValidationError as exc:
        problems = "; ".join(err["msg"] for err in exc.errors())
        raise UsageError(problems, details={"command": command.value}) from exc


# ========== Subcommands ==========


def cmd_lascoux(args: LascouxArgs, output: OutputFormat, out: TextIO) -> int:
    poly = key_polynomial(args.alpha, args.n) if args.beta_zero else lascoux(args.alpha, args.n)
    print(poly, file=out)
    return EXIT_OK


def cmd_expand(args: ExpandArgs, output: OutputFormat, out: TextIO) -> int:
    if args.key_only:
        result = expand_key_product(args.alpha, args.w, args.n, verify=args.verify)
    else:
        result = expand_product(args.alpha, args.w, args.n, verify=args.verify, threshold=args.threshold)
    print(expansion_to_json(result) if output is OutputFormat.JSON else format_expansion(result), file=out)
    return EXIT_OK


def cmd_grothendieck(args: GrothendieckArgs, output: OutputFormat, out: TextIO) -> int:
    result = expand_grothendieck(args.w, args.n, verify=args.verify)
    print(expansion_to_json(result) if output is OutputFormat.JSON else format_expansion(result), file=out)
    return EXIT_OK


def cmd_insert(args: InsertArgs, output: OutputFormat, out: TextIO) -> int:
    p = parse_tableau(_read(args.tableau_file))
    try:
        result = reverse_insert(p, args.cell, args.alpha)
    except LascouxError as exc:
        raise UsageError(exc.message, details=exc.details) from exc
    print(f"trace: {format_trace(result.trace)}", file=out)
    print(f"m: {result.m}", file=out)
    print("P':", file=out)
    body = format_tableau(result.p_prime)
    if body:
        print(body, file=out)
    return EXIT_OK


def cmd_psi(args: PsiArgs, output: OutputFormat, out: TextIO) -> int:
    text = _read(args.pair_file)
    if args.inverse:
        print(format_pair(psi_inverse(parse_compatible_pair(text))), file=out)
    else:
        print(psi(parse_pair(text)), file=out)
    return EXIT_OK


def render_report(report: SuiteReport) -> List[str]:
    lines = []
    for outcome in report.outcomes:
        status = "PASS" if outcome.ok else "FAIL"
        line = f"{status} {outcome.suite.value}/{outcome.name} [{outcome.kind.value}] passed={outcome.passed} failed={outcome.failed} skipped={outcome.skipped}"
        if outcome.note:
            line += f" ({outcome.note})"
        lines.append(line)
        if outcome.counterexample and not outcome.ok:
            lines.append(f"    counterexample: {outcome.counterexample}")
    failed = len(report.failures)
    lines.append(f"{len(report.outcomes) - failed}/{len(report.outcomes)} checks passed (seed={report.seed}, trials={report.trials})")
    return lines


def cmd_verify(args: VerifyArgs, output: OutputFormat, out: TextIO) -> int:
    report = run_suite(args.suite, args.seed, args.trials, args.workers)
    if output is OutputFormat.JSON:
        print(report.model_dump_json(), file=out)
    else:
        for line in render_report(report):
            print(line, file=out)
    return EXIT_OK if report.ok else EXIT_IDENTITY


_DISPATCH: Dict[Subcommand, Callable[..., int]] = {
    Subcommand.LASCOUX: cmd_lascoux,
    Subcommand.EXPAND: cmd_expand,
    Subcommand.GROTHENDIECK: cmd_grothendieck,
    Subcommand.INSERT: cmd_insert,
    Subcommand.PSI: cmd_psi,
    Subcommand.VERIFY: cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    """Parse, validate and dispatch; returns the exit code."""
    try:
        try:
            settings = get_settings()
        except ValidationError as exc:
            problems = "; ".join(f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}" for e in exc.errors())
            raise UsageError(f"invalid LASCOUX_* settings: {problems}") from exc
        ns = build_parser().parse_args(argv)
        try:
            setup_logging(
                level=ns.log_level or settings.log_level,
                format_type=ns.log_format or settings.log_format,
                log_file=ns.log_file or settings.log_file,
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        request = build_request(ns)
        with RunContext():
            logger.bind(command=request.subcommand.value).debug("dispatching")
            return _DISPATCH[request.subcommand](request.args, request.output, out)
    except LascouxError as exc:
        logger.bind(code=exc.code, details=exc.details).debug("command failed")
        print(f"error[{exc.code}]: {exc.message}", file=err)
        for key, value in sorted(exc.details.items()):
            print(f"  {key}: {value}", file=err)
        return exc.exit_code


def main() -> None:
    sys.exit(run())
