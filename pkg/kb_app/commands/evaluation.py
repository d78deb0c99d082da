"""
kb_app/commands/evaluation.py — Komande nad jednom instancom: eval, entails, closure.
"""

from __future__ import annotations

import argparse
from typing import TextIO

from kb_app.commands.common import emit, load_kb, load_query, read_text
from kb_app.commands.schemas import VerdictReport
from kb_core.errors import ContextMismatchError
from kb_core.frontend.formula_parser import parse_formula
from kb_core.frontend.printer import format_formula
from kb_core.frontend.query_format import parse_single_query
from kb_core.semantics.evaluator import val


def _model_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", required=True, help="model file (.kbm)")
    p.add_argument("--instance", required=True, help="instance name inside the model file")
    p.add_argument("--query", required=True, help="query file (.kbq) with one 'vars' header")


def cmd_eval(args: argparse.Namespace, out: TextIO) -> int:
    kb = load_kb(args.model, args)
    d = load_query(args.query, kb.multimodel.signature)
    emit(out, kb.query(args.instance, d).format_lines())
    return 0


def cmd_entails(args: argparse.Namespace, out: TextIO) -> int:
    kb = load_kb(args.model, args)
    d = load_query(args.query, kb.multimodel.signature)
    v = parse_formula(args.formula, kb.multimodel.signature, d.context, "<formula>")
    A = kb.query(args.instance, d)
    gap = A - val(kb.instance(args.instance), d.context, v, kb.limits)
    first = gap.first()
    counterexample = None if first is None else A.space.format_point(first)
    report = VerdictReport.single("entails", first is None, counterexample)
    if args.machine:
        emit(out, report.machine_lines())
    elif first is None:
        emit(out, ["entailed"])
    else:
        emit(out, [f"not entailed: {counterexample}"])
    return report.exit_code


def cmd_closure(args: argparse.Namespace, out: TextIO) -> int:
    kb = load_kb(args.model, args)
    sig = kb.multimodel.signature
    d = load_query(args.query, sig)
    probes = parse_single_query(read_text(args.probes), sig, args.probes)
    if probes.context != d.context:
        raise ContextMismatchError(f"probe file declares ({probes.context}), the query declares ({d.context})")
    emit(out, [format_formula(v) for v in kb.closure(args.instance, d, list(probes.formulas))])
    return 0


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    p = subparsers.add_parser("eval", parents=parents, help="content of a query in one instance")
    _model_args(p)
    p.set_defaults(handler=cmd_eval)

    p = subparsers.add_parser("entails", parents=parents, help="does the query entail a formula (exit 0/1)")
    _model_args(p)
    p.add_argument("--formula", required=True, help="formula over the query's variables")
    p.set_defaults(handler=cmd_entails)

    p = subparsers.add_parser("closure", parents=parents, help="probe formulas entailed by the query")
    _model_args(p)
    p.add_argument("--probes", required=True, help="query file whose formulas are the probes")
    p.set_defaults(handler=cmd_closure)
