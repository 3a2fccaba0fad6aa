"""Command-line entry point.

    qswap <command> --config <path> [--out <path>] [--threads N]

Writes the CSV table to stdout (or --out), diagnostics to stderr.
Exit codes: 0 ok, 2 configuration error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import sys

from .config import COMMANDS, parse_config
from .errors import ConfigError, QswapError
from .sweeps import run

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qswap",
        description="Spectra, dynamics, entanglement, and gate design for two "
        "electrostatically coupled charge qubits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=f"run a '{name}' configuration")
        p.add_argument("--config", required=True, help="path to a key = value config file")
        p.add_argument("--out", default=None, help="output CSV path (default: stdout)")
        p.add_argument("--threads", type=int, default=1, help="sweep-point worker threads")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.config, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"qswap: cannot read config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        cfg = parse_config(text, command=args.command)
    except ConfigError as exc:
        print(f"qswap: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        table = run(cfg, threads=max(1, args.threads))
        csv_text = table.to_csv()
    except (QswapError, FloatingPointError, ArithmeticError, ValueError) as exc:
        print(f"qswap: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.out is None:
        sys.stdout.write(csv_text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(csv_text)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
