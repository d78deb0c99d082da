"""
kb_app/commands/common.py — Zajednički argumenti i učitavanje ulaznih fajlova.
"""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import TextIO

from kb_app.core import config
from kb_app.services.kbase import KnowledgeBase
from kb_core.algebra.signature import Signature
from kb_core.algebra.terms import Context
from kb_core.errors import ContractError
from kb_core.frontend.diagnostics import read_source
from kb_core.frontend.query_format import parse_query, parse_single_query
from kb_core.galois.description import Description
from kb_core.limits import EngineLimits


def global_options() -> argparse.ArgumentParser:
    """Flags every subcommand accepts (argparse parent parser)."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--machine", action="store_true", help="print CHECK <name> PASS|FAIL lines")
    parent.add_argument("--jobs", type=int, default=None, help="worker threads for independent checks")
    parent.add_argument("--max-points", type=int, default=None, help="cap on |G^X|")
    parent.add_argument("--max-elements", type=int, default=None, help="cap on materialised algebra size")
    return parent


def limits_from(args: argparse.Namespace) -> EngineLimits:
    return config.engine_limits(max_points=args.max_points, max_elements=args.max_elements, jobs=args.jobs)


def read_text(path: str | Path) -> str:
    return read_source(path)


def load_kb(path: str, args: argparse.Namespace) -> KnowledgeBase:
    return KnowledgeBase.from_file(path, limits_from(args))


def load_query(path: str, sig: Signature) -> Description:
    return parse_single_query(read_text(path), sig, path)


def load_probes(path: str | None, sig: Signature) -> list[Description]:
    if not path:
        return []
    return parse_query(read_text(path), sig, path)


def parse_vars(text: str, sig: Signature) -> Context:
    ctx = Context.parse(text)
    for name, sort in ctx.variables:
        if sort not in sig.sorts:
            raise ContractError(f"variable '{name}' has unknown sort '{sort}'")
    return ctx


def emit(out: TextIO, lines: list[str]) -> None:
    for line in lines:
        out.write(line + "\n")
