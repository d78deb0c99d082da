"""
kb_app/commands/groups.py — Grupe automorfizama i particije: aut, orbits, rf.
"""

from __future__ import annotations

import argparse
from typing import TextIO

from kb_app.commands.common import emit, load_kb, parse_vars
from kb_core.autgroup.group import automorphism_group
from kb_core.valuealg.definable import generate_definable_algebra
from kb_core.valuealg.orbits import orbit_partition


def cmd_aut(args: argparse.Namespace, out: TextIO) -> int:
    kb = load_kb(args.model, args)
    group = automorphism_group(kb.instance(args.instance))
    emit(out, [f"order: {group.order}", *group.format_lines()])
    return 0


def cmd_orbits(args: argparse.Namespace, out: TextIO) -> int:
    kb = load_kb(args.model, args)
    m = kb.instance(args.instance)
    X = parse_vars(args.vars, m.signature)
    emit(out, orbit_partition(automorphism_group(m), m.algebra, X, kb.limits).format_lines())
    return 0


def cmd_rf(args: argparse.Namespace, out: TextIO) -> int:
    kb = load_kb(args.model, args)
    m = kb.instance(args.instance)
    X = parse_vars(args.vars, m.signature)
    D = generate_definable_algebra(m, X, args.aux, kb.limits)
    emit(out, D.atoms.format_lines())
    return 0


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    for name, handler, help_text in (
        ("aut", cmd_aut, "automorphism group of an instance"),
        ("orbits", cmd_orbits, "orbits of Aut(f) on the points over --vars"),
        ("rf", cmd_rf, "atoms of the definable algebra over --vars"),
    ):
        p = subparsers.add_parser(name, parents=parents, help=help_text)
        p.add_argument("--model", required=True, help="model file (.kbm)")
        p.add_argument("--instance", required=True, help="instance name inside the model file")
        if name != "aut":
            p.add_argument("--vars", required=True, help="context, e.g. 'x:s, y:s'")
        if name == "rf":
            p.add_argument("--aux", type=int, default=None, help="fresh variables per sort (default: total carrier size)")
        p.set_defaults(handler=handler)
