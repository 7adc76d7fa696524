"""Main entry point for the distance-3 stabilizer code constructor."""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from bounds.bounds_lp import (
    check_lp_identities,
    classify_length,
    hamming_s,
    lp_certificate,
    weight_distribution,
)
from config.settings import settings
from constructor.code_builder import build
from pasting.generator_block import make_block
from utils.code_io import FORMATS, load_code_file, render_code
from utils.errors import CodeError
from verifier.code_verifier import verify_code

logger = logging.getLogger(__name__)


def configure_logging(level: str):
    """Log to stderr so stdout carries only command output."""
    settings.log_level = level
    logging.basicConfig(
        level=getattr(logging, settings.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


class CodeCommands:
    """Runs the CLI commands and writes their output to one stream."""

    def __init__(self, out: Optional[TextIO] = None):
        self.out = out or sys.stdout

    def _write_lines(self, lines: List[str]):
        self.out.write("\n".join(lines) + "\n")

    def run(self, args: argparse.Namespace) -> bool:
        """
        Dispatch parsed arguments to the matching command.

        Returns:
            True if every check of the command passed
        """
        if args.command == "gen":
            return self.cmd_gen(args.n, args.format, args.out, args.theorem2)
        if args.command == "verify":
            return self.cmd_verify(
                args.path, args.degenerate_ok, args.exact_distance, args.expect_optimal
            )
        if args.command == "bound":
            return self.cmd_bound(args.n)
        if args.command == "certificate":
            return self.cmd_certificate(args.n)
        if args.command == "table":
            return self.cmd_table(args.lo, args.hi)
        return self.cmd_weights(args.path)

    def cmd_gen(self, n: int, fmt: str = "pauli", out: Optional[str] = None, theorem2: bool = False) -> bool:
        """
        Build the code of length n and write it in the chosen format.

        Args:
            n: Code length
            fmt: "pauli", "check" or "records"
            out: Output path, the command stream when omitted
            theorem2: Use the general pasting chain even at perfect lengths

        Returns:
            True on success
        """
        code = build(n, prefer_theorem2=theorem2)
        text = render_code(code, fmt)
        if out:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
            logger.info(f"Wrote {code.parameters} to {out}")
        else:
            self.out.write(text)
        return True

    def cmd_verify(
        self,
        path: str,
        degenerate_ok: bool = False,
        exact_distance: bool = False,
        expect_optimal: bool = False,
    ) -> bool:
        rows, metadata = load_code_file(path)
        block = make_block(rows)
        report = verify_code(
            block,
            mode="degenerate" if degenerate_ok else "pure",
            exact_distance=exact_distance,
            expect_optimal=expect_optimal,
        )
        text = report.to_text()
        if "provenance" in metadata:
            text = text.replace("via file", f"via {metadata['provenance']}", 1)
        self.out.write(text)
        return report.green

    def _certificate_lines(self, n: int) -> List[str]:
        report = lp_certificate(n)
        lines = [f"s_H={report.hamming_bound} lp_family={report.family} bound={report.strengthened_bound}"]
        for check in report.checks:
            verdict = "ok" if check.satisfied else "failed"
            lines.append(f"  {check.name}: {check.left} vs {check.right} {verdict}")
        return lines

    def cmd_bound(self, n: int) -> bool:
        """Print the Hamming bound, the LP certificate and the length classification."""
        lines = self._certificate_lines(n)
        cls = classify_length(n)
        status = "proven" if cls.optimal_proven else "best-known"
        lines.append(f"family={cls.family} m={cls.m} s_best={cls.s_best} optimal={status} tag={cls.tag}")
        self._write_lines(lines)
        return True

    def cmd_certificate(self, n: int) -> bool:
        self._write_lines(self._certificate_lines(n))
        return True

    def cmd_table(self, lo: int, hi: int) -> bool:
        """One line per length: n, built n - k, Hamming bound and status tag."""
        if lo > hi:
            logger.warning(f"Empty range {lo}..{hi}")
        for n in range(lo, hi + 1):
            code = build(n)
            self.out.write(f"{n} {code.s} {hamming_s(n)} {classify_length(n).tag}\n")
        return True

    def cmd_weights(self, path: str) -> bool:
        rows, _ = load_code_file(path)
        block = make_block(rows)
        dist = weight_distribution(block)
        report = check_lp_identities(block, dist)
        lines = [str(dist)]
        for check in report.checks:
            lines.append(f"{check.name}: {check.lhs} vs {check.rhs} {'ok' if check.holds else 'failed'}")
        lines.append(f"identities: {'OK' if report.ok else 'FAILED'}")
        self._write_lines(lines)
        return report.ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Construct and verify optimal distance-3 stabilizer codes [[n,k,3]]"
    )
    parser.add_argument(
        "--log_level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        help="Logging level, written to stderr (default: WARNING)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Build the code of length n")
    gen.add_argument("n", type=int, help="Code length, at least 5")
    gen.add_argument("--format", choices=FORMATS, default="pauli", help="Output format (default: pauli)")
    gen.add_argument("--out", help="Output file (default: standard output)")
    gen.add_argument(
        "--theorem2",
        action="store_true",
        help="Use the general pasting chain at perfect lengths as well",
    )

    verify = sub.add_parser("verify", help="Verify a generator file")
    verify.add_argument("path", help="File in pauli, check or records format")
    verify.add_argument(
        "--degenerate-ok",
        action="store_true",
        help="Accept undetectable small errors that lie in the stabilizer",
    )
    verify.add_argument(
        "--exact-distance",
        action="store_true",
        help="Also search for a weight-3 logical operator",
    )
    verify.add_argument(
        "--expect-optimal",
        action="store_true",
        help="Also require n - k to equal the best known value for this length",
    )

    bound = sub.add_parser("bound", help="Lower bounds on n - k for length n")
    bound.add_argument("n", type=int)

    certificate = sub.add_parser("certificate", help="LP certificate checks for length n")
    certificate.add_argument("n", type=int)

    table = sub.add_parser("table", help="Best n - k for a range of lengths")
    table.add_argument("lo", type=int)
    table.add_argument("hi", type=int)

    weights = sub.add_parser("weights", help="Weight distribution and LP identities")
    weights.add_argument("path", help="File in pauli, check or records format")
    return parser


def main(argv: Optional[List[str]] = None):
    """Main entry point with command line argument parsing."""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)

    try:
        success = CodeCommands().run(args)
    except (CodeError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        sys.exit(1)

    sys.exit(0 if success else 1)


if __name__ == "__main__":
    main()
