"""
kb_app/commands/equivalence.py — Ekvivalencija baza znanja: equiv, verify-witness.
"""

from __future__ import annotations

import argparse
from dataclasses import replace
from pathlib import Path
from typing import TextIO

from kb_app.commands.common import emit, load_kb, load_probes, read_text
from kb_app.commands.schemas import VerdictReport
from kb_app.services.kbase import KnowledgeBase
from kb_core.autgroup.witness import EquivalenceWitness
from kb_core.frontend.witness_format import format_witness, parse_witness
from kb_core.translate.synthesis import synthesize_interpretation
from kb_core.utils.logger import get_logger

logger = get_logger(__name__)


def _with_translations(left: KnowledgeBase, right: KnowledgeBase, w: EquivalenceWitness,
                       depth: int) -> EquivalenceWitness:
    betas, betas_back = [], []
    for f, g in w.alpha:
        delta = w.delta(f)
        fm, gm = left.instance(f), right.instance(g)
        beta = synthesize_interpretation(fm, gm, delta, depth, left.limits)
        beta_back = synthesize_interpretation(gm, fm, delta.inverse(), depth, left.limits)
        if beta is None or beta_back is None:
            logger.warning("no interpretation pair found for %s -> %s up to depth %d", f, g, depth)
            continue
        betas.append((f, beta))
        betas_back.append((f, beta_back))
    return replace(w, betas=tuple(betas), betas_back=tuple(betas_back))


def cmd_equiv(args: argparse.Namespace, out: TextIO) -> int:
    left, right = load_kb(args.left, args), load_kb(args.right, args)
    verdict = left.equivalence(right, uniform_delta=args.uniform_delta)
    if not verdict.equivalent:
        report = VerdictReport.single("equiv", False, verdict.reason)
        emit(out, report.machine_lines() if args.machine else [f"inequivalent: {verdict.reason}"])
        return report.exit_code
    witness = verdict.witness
    if args.synthesize_beta:
        witness = _with_translations(left, right, witness, args.depth)
    text = format_witness(witness)
    if args.witness_out:
        Path(args.witness_out).write_text(text, encoding="utf-8")
    if args.machine:
        emit(out, VerdictReport.single("equiv", True).machine_lines())
    else:
        out.write("equivalent\n" + text)
    return 0


def cmd_verify_witness(args: argparse.Namespace, out: TextIO) -> int:
    left, right = load_kb(args.left, args), load_kb(args.right, args)
    witness = parse_witness(read_text(args.witness), left.multimodel, right.multimodel, args.witness)
    probes = load_probes(args.probes, left.multimodel.signature)
    right_probes = load_probes(args.right_probes, right.multimodel.signature)
    result = left.verify(right, witness, probes, right_probes)
    report = VerdictReport.from_witness_report(result)
    if args.machine:
        for warning in report.warnings:
            logger.warning(warning)
        emit(out, report.machine_lines())
    else:
        emit(out, result.human_lines())
    return report.exit_code


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    p = subparsers.add_parser("equiv", parents=parents, help="automorphic equivalence of two knowledge bases")
    p.add_argument("--left", required=True, help="left model file (.kbm)")
    p.add_argument("--right", required=True, help="right model file (.kbm)")
    p.add_argument("--witness-out", default=None, help="write the witness (.kbw) here")
    p.add_argument("--uniform-delta", action="store_true", help="require one delta for every matched pair")
    p.add_argument("--synthesize-beta", action="store_true", help="search for interpretations beta and beta'")
    p.add_argument("--depth", type=int, default=3, help="formula depth for --synthesize-beta")
    p.set_defaults(handler=cmd_equiv)

    p = subparsers.add_parser("verify-witness", parents=parents, help="check an equivalence witness on probes")
    p.add_argument("--left", required=True, help="left model file (.kbm)")
    p.add_argument("--right", required=True, help="right model file (.kbm)")
    p.add_argument("--witness", required=True, help="witness file (.kbw)")
    p.add_argument("--probes", default=None, help="query file of left-side probe descriptions")
    p.add_argument("--right-probes", default=None, help="query file of right-side probe descriptions")
    p.set_defaults(handler=cmd_verify_witness)
