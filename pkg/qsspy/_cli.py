"""Command-line front end ``qss``.

Exit codes: 0 when verification passed or a report was emitted, 1 when a verification failed,
2 for invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np
import pandas as pd
from lamin_utils import logger
from rich import box
from rich.console import Console
from rich.table import Table

from qsspy.data import dumps_report, load_code, load_msp, load_secret, load_structure, parse_threshold, write_report
from qsspy.tools import (
    SecretSpec,
    Tolerance,
    Verifier,
    discard_share,
    encode_ghz_direct,
    encode_msp,
    encode_stabilizer_qts,
    msp_structure,
    teleport_protocol,
)
from qsspy.tools._verifier._report import round_sig

if TYPE_CHECKING:
    from collections.abc import Sequence

    from qsspy.tools import MSP, AdversaryStructure, SchemeInstance

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

COMMANDS = ("stabilizer", "msp", "teleport", "verify", "audit")


@dataclass(frozen=True)
class RunConfig:
    """Validated command-line invocation."""

    command: str
    code: str | None
    msp: Path | None
    players: int | None
    secret: Path | None
    expect: str | None
    audit: bool
    tol: Tolerance
    out: Path | None
    format: str
    outcome: tuple[int, int] | None
    discard: tuple[str, ...]
    seed: int | None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        outcome = None
        if args.outcome is not None:
            if len(args.outcome) != 2 or set(args.outcome) - {"0", "1"}:
                raise ValueError(f"--outcome must be two bits such as '01', got {args.outcome!r}.")
            outcome = (int(args.outcome[0]), int(args.outcome[1]))
        for name in ("msp", "secret"):
            path = getattr(args, name)
            if path is not None and not Path(path).is_file():
                raise ValueError(f"--{name}: file {path} does not exist.")
        return cls(
            command=args.command,
            code=args.code,
            msp=Path(args.msp) if args.msp else None,
            players=args.players,
            secret=Path(args.secret) if args.secret else None,
            expect=args.expect,
            audit=args.audit,
            tol=Tolerance.resolve(args.tol),
            out=Path(args.out) if args.out else None,
            format=args.format,
            outcome=outcome,
            discard=tuple(args.discard or ()),
            seed=args.seed,
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qss", description="Build and verify quantum secret sharing schemes.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    helps = {
        "stabilizer": "((t,2t-1)) threshold scheme from a stabilizer code",
        "msp": "scheme from a monotone span program",
        "teleport": "((n,n)) scheme by teleporting the secret into a GHZ state",
        "verify": "report plus duality and erasure checks for any scheme",
        "audit": "closed-form entropy audit of a stabilizer or MSP scheme",
    }
    for command in COMMANDS:
        sub = subparsers.add_parser(command, help=helps[command])
        sub.add_argument("--code", help="built-in code name (trivial, five_qubit, repetition) or JSON file")
        sub.add_argument("--msp", help="MSP JSON file")
        sub.add_argument("--players", type=int, help="number of players of a GHZ scheme")
        sub.add_argument("--secret", help="secret JSON file; defaults to the uniform secret")
        sub.add_argument("--expect", help="threshold:t,n, a structure JSON file, or msp")
        sub.add_argument("--audit", action="store_true", help="also run the entropy audit")
        sub.add_argument("--tol", type=float, help="classification tolerance (overrides QSS_TOL)")
        sub.add_argument("--out", help="write the JSON report to this path")
        sub.add_argument("--format", choices=("table", "json"), default="table")
        sub.add_argument("--outcome", help="teleport: force the Bell outcome ab")
        sub.add_argument("--discard", action="append", help="discard a share (e.g. share_5) before verifying")
        sub.add_argument("--seed", type=int, help="teleport: seed of the outcome sampler")
    return parser


def _secret(config: RunConfig, dim: int) -> SecretSpec:
    secret = load_secret(config.secret) if config.secret else SecretSpec.uniform(dim)
    if secret.dim != dim:
        raise ValueError(f"{config.secret}: secret has dimension {secret.dim}, the scheme needs {dim}.")
    return secret


def _build(config: RunConfig) -> tuple[SchemeInstance, MSP | None]:
    command = config.command
    if command in ("verify", "audit"):
        given = [name for name in ("code", "msp", "players") if getattr(config, name) is not None]
        if len(given) != 1:
            raise ValueError(f"'{command}' needs exactly one of --code, --msp, --players.")
        command = {"code": "stabilizer", "msp": "msp", "players": "ghz"}[given[0]]
    if command == "stabilizer":
        code = load_code(config.code or "five_qubit")
        return encode_stabilizer_qts(code, _secret(config, 2)), None
    if command == "msp":
        if config.msp is None:
            raise ValueError("'msp' needs --msp.")
        msp = load_msp(config.msp)
        return encode_msp(msp, _secret(config, msp.q)), msp
    if config.players is None or config.players < 1:
        raise ValueError(f"--players must be a positive integer, got {config.players}.")
    if command == "teleport":
        scheme, outcome, probability = teleport_protocol(
            config.players, _secret(config, 2), forced_outcome=config.outcome, rng=config.seed
        )
        logger.info(f"Bell outcome {outcome[0]}{outcome[1]} with probability {probability:.6f}.")
        return scheme, None
    return encode_ghz_direct(config.players, _secret(config, 2)), None


def _expected(config: RunConfig, msp: MSP | None) -> AdversaryStructure | None:
    if config.expect is None:
        return None
    if config.expect.startswith("threshold:"):
        return parse_threshold(config.expect.removeprefix("threshold:"))
    if config.expect == "msp":
        if msp is None:
            raise ValueError("--expect msp needs an MSP scheme.")
        return msp_structure(msp)
    if not Path(config.expect).is_file():
        raise ValueError(f"--expect: {config.expect!r} is neither threshold:t,n, msp, nor an existing file.")
    return load_structure(config.expect)


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple | list):
        return [_jsonable(v) for v in value]
    if isinstance(value, bool | np.bool_):
        return bool(value)
    if isinstance(value, int | np.integer):
        return int(value)
    if isinstance(value, float | np.floating):
        return round_sig(float(value))
    return value


def _records(table: pd.DataFrame) -> list[dict[str, Any]]:
    return [{key: _jsonable(value) for key, value in row.items()} for row in table.to_dict("records")]


def _df_table(title: str, df: pd.DataFrame) -> Table:
    table = Table(title=title, box=box.SQUARE, highlight=True)
    for column in df.columns:
        table.add_column(str(column), justify="left" if df[column].dtype == object else "right")
    for row in df.itertuples(index=False):
        table.add_row(*(f"{v:.6f}" if isinstance(v, float | np.floating) else str(v) for v in row))
    return table



def run(argv: Sequence[str] | None = None) -> int:
    """Execute one ``qss`` command.

    Args:
        argv: Arguments without the program name; ``sys.argv[1:]`` when None.

    Returns:
        The process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    console = Console()
    err_console = Console(stderr=True)
    try:
        config = RunConfig.from_args(args)
        scheme, msp = _build(config)
        expected = _expected(config, msp)
        if config.discard and (config.audit or config.command in ("audit", "verify")):
            raise ValueError("Audits and duality checks need the pure scheme; drop --discard.")
        for label in config.discard:
            scheme = discard_share(scheme, label)
        verifier = Verifier(config.tol)
        audit = verifier.audit(scheme, msp) if config.audit or config.command == "audit" else None
    except (ValueError, TypeError, OSError) as e:
        logger.error(str(e))
        return EXIT_INPUT

    failures: list[str] = []
    extra: dict[str, Any] = {"command": config.command}
    report = None
    if config.command != "audit":
        report = verifier(scheme)
        if expected is not None:
            try:
                expectation = verifier.compare(report, expected)
            except ValueError as e:
                logger.error(str(e))
                return EXIT_INPUT
            extra["expectation"] = {"passed": expectation.passed, "message": expectation.message}
            if not expectation.passed:
                failures.append(expectation.message)
    if config.command == "verify":
        duality = verifier.check_duality(scheme)
        extra["duality"] = _records(duality.table)
        if not duality.passed:
            worst = duality.table.loc[duality.table["residual"].idxmax()]
            failures.append(f"duality fails for A={set(worst['A'])}: residual {worst['residual']:.3g}")
        bridge = verifier.erasure_bridge(scheme, report)
        for row in bridge[~bridge["passed"]].itertuples(index=False):
            players = "{" + ", ".join(map(str, row.players)) + "}"
            failures.append(f"{players}: erasure correctable is {row.correctable}, I=0 is {row.is_zero}")
    if audit is not None:
        extra["audit"] = _records(audit.table)
        if not audit.passed:
            failures.append(f"entropy audit fails:\n{audit.failures.iloc[:1].to_string(index=False)}")

    if config.format == "json":
        if report is not None:
            sys.stdout.write(dumps_report(report, extra))
        else:
            sys.stdout.write(json.dumps(extra, indent=2, sort_keys=True) + "\n")
    else:
        if report is not None:
            df = report.to_df()
            df["players"] = df["players"].map(lambda p: "{" + ", ".join(map(str, p)) + "}")
            console.print(_df_table(f"{scheme.kind} scheme, I(R:S) = {report.reference_mutual_bits:.6f} bits", df))
            console.print(f"Verdict: {report.verdict.kind}")
            for witness in report.verdict.witnesses[:1]:
                console.print(f"Witness: {witness.describe()}")
        if audit is not None:
            console.print(_df_table("Entropy audit", audit.table))
    if config.out is not None:
        if report is not None:
            write_report(report, config.out, extra)
        else:
            config.out.write_text(json.dumps(extra, indent=2, sort_keys=True) + "\n")

    if failures:
        err_console.print(f"FAILED: {failures[0]}", markup=False, highlight=False, soft_wrap=True)
        logger.error(failures[0])
        return EXIT_FAILED
    return EXIT_OK


def main() -> None:
    sys.exit(run())
