"""
kb_app/main.py — CLI entry point (orkestracija podkomandi).

Pokretanje iz root-a repozitorija:
    python -m kb_app.main equiv --left data/fixtures/mp.kbm --right data/fixtures/mq.kbm

Izlazni kodovi: 0 = tačno / ekvivalentno / sve prošlo, 1 = netačno /
neekvivalentno / neka provjera pala, 2 = greška u upotrebi ili ulazu.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from pydantic import ValidationError

from kb_app.commands import equivalence, evaluation, groups
from kb_app.commands.common import global_options
from kb_core.errors import DiagnosticError, KBError
from kb_core.utils.logger import get_logger

logger = get_logger(__name__)

EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parents = [global_options()]
    parser = argparse.ArgumentParser(prog="kb", description="Knowledge bases over finite multi-models.")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    # --- KOMANDE ---
    evaluation.register(subparsers, parents)
    groups.register(subparsers, parents)
    equivalence.register(subparsers, parents)
    return parser


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.handler(args, stdout)
    except DiagnosticError as err:
        for diagnostic in err.diagnostics:
            stderr.write(f"{diagnostic}\n")
    except ValidationError as err:
        first = err.errors()[0]
        stderr.write(f"kb: error: invalid configuration: {'.'.join(map(str, first['loc']))}: {first['msg']}\n")
    except KBError as err:
        stderr.write(f"kb: error: {err}\n")
    except OSError as err:
        stderr.write(f"kb: error: {err}\n")
    logger.debug("command %s failed", args.command)
    return EXIT_USAGE


def main() -> None:
    # Windows: cp1252 ne podržava sve simbole (δ, ∃), pa forsiramo UTF-8 na stdout/stderr
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8", errors="replace")
    if hasattr(sys.stderr, "reconfigure"):
        sys.stderr.reconfigure(encoding="utf-8", errors="replace")
    sys.exit(run())


if __name__ == "__main__":
    main()
