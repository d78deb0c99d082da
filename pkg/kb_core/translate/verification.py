"""
kb_core/translate/verification.py — Provjera svjedoka ekvivalencije na bateriji probnih opisa.

Za svaku instancu f i probni opis (X, T) provjerava se:
  diagram-star      δ^*(T^f) = (β T)^{f^α}
  diagram-star-star (δ⁻¹)^*(T'^{f^α}) = (β' T')^f
  identity-left     Val_f(u) = Val_f(β'β u)
  identity-right    Val_{f^α}(u) = Val_{f^α}(ββ' u)
  conjugacy         Aut(f^α) = δ Aut(f) δ⁻¹
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from kb_core.algebra.signature import Signature
from kb_core.algebra.structures import MultiModel
from kb_core.algebra.formulas import Equal, RelAtom
from kb_core.algebra.terms import Context
from kb_core.autgroup.equivalence import ordered_map
from kb_core.autgroup.group import automorphism_group
from kb_core.autgroup.witness import EquivalenceWitness
from kb_core.errors import MalformedWitnessError
from kb_core.galois.correspondence import content
from kb_core.galois.description import Description
from kb_core.limits import DEFAULT_LIMITS, EngineLimits
from kb_core.semantics.evaluator import val
from kb_core.semantics.pointset import PointSet
from kb_core.semantics.transport import transport_hom
from kb_core.translate.translation import translate_description, translate_formula
from kb_core.utils.logger import get_logger

logger = get_logger(__name__)


def check_line(name: str, passed: bool, counterexample: str | None = None) -> str:
    """`CHECK <name> PASS|FAIL [counterexample]`, the one machine-output line format."""
    line = f"CHECK {name} {'PASS' if passed else 'FAIL'}"
    return f"{line} {counterexample}" if counterexample else line


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    counterexample: str | None = None

    def machine_line(self) -> str:
        return check_line(self.name, self.passed, self.counterexample)


@dataclass
class WitnessReport:
    checks: list[CheckOutcome] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckOutcome]:
        return [c for c in self.checks if not c.passed]

    def machine_lines(self) -> list[str]:
        return [c.machine_line() for c in self.checks]

    def human_lines(self) -> list[str]:
        lines = [f"warning: {w}" for w in self.warnings]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            extra = f"  (counterexample: {c.counterexample})" if c.counterexample else ""
            lines.append(f"{status}  {c.name}{extra}")
        lines.append(f"{len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed")
        return lines


def default_battery(sig: Signature) -> list[Description]:
    """Every single-atom description over contexts of at most two variables."""
    battery: list[Description] = []
    contexts = [Context.of(("x", s)) for s in sig.sorts]
    contexts += [Context.of(("x", s), ("y", t)) for s in sig.sorts for t in sig.sorts]
    for ctx in contexts:
        names = set(ctx.names)
        atoms = []
        for rel in sig.rels:
            pools = [[v for v in ctx if v.sort == s] for s in rel.arg_sorts]
            for args in itertools.product(*pools):
                if {a.name for a in args} == names:
                    atoms.append(RelAtom(rel.name, tuple(args)))
        if len(ctx) == 2 and ctx.sorts[0] == ctx.sorts[1]:
            atoms.append(Equal(ctx.var("x"), ctx.var("y")))
        battery.extend(Description(ctx, (a,)) for a in atoms)
    return battery


def first_difference(a: PointSet, b: PointSet) -> str | None:
    diff = (a ^ b).first()
    return None if diff is None else a.space.format_point(diff)


def _check_structure(KB1: MultiModel, KB2: MultiModel, w: EquivalenceWitness) -> None:
    lefts = [a for a, _ in w.alpha]
    rights = [b for _, b in w.alpha]
    if sorted(lefts) != sorted(KB1.names) or len(set(lefts)) != len(lefts):
        raise MalformedWitnessError("alpha is not total and injective on the left instances")
    if sorted(rights) != sorted(KB2.names) or len(set(rights)) != len(rights):
        raise MalformedWitnessError("alpha is not a bijection onto the right instances")
    for f in lefts:
        delta = w.delta(f)
        if delta.source != KB1.algebra or delta.target != KB2.algebra:
            raise MalformedWitnessError(f"delta for {f} is not a map between the two algebras")
    for f, beta in w.betas:
        if f not in lefts:
            raise MalformedWitnessError(f"beta given for unknown instance '{f}'")
        if beta.source != KB1.signature or beta.target != KB2.signature:
            raise MalformedWitnessError(f"beta for {f} does not translate the left signature into the right one")
        if not beta.is_complete():
            raise MalformedWitnessError(f"beta for {f} has no definition for '{beta.missing()[0]}'")
    for f, beta in w.betas_back:
        if f not in lefts:
            raise MalformedWitnessError(f"beta' given for unknown instance '{f}'")
        if beta.source != KB2.signature or beta.target != KB1.signature:
            raise MalformedWitnessError(f"beta' for {f} does not translate the right signature into the left one")
        if not beta.is_complete():
            raise MalformedWitnessError(f"beta' for {f} has no definition for '{beta.missing()[0]}'")


def verify_witness(KB1: MultiModel, KB2: MultiModel, w: EquivalenceWitness, probes: list[Description],
                   right_probes: list[Description] | None = None, jobs: int = 1,
                   limits: EngineLimits = DEFAULT_LIMITS) -> WitnessReport:
    """Runs every check; structural problems raise MalformedWitnessError before any probe."""
    _check_structure(KB1, KB2, w)
    right_probes = list(right_probes or [])
    report = WitnessReport()
    if not probes and not right_probes:
        report.warnings.append("no probes: diagram and identity checks pass vacuously")

    tasks: list[tuple[str, Callable[[], str | None]]] = []
    for f_name, g_name in w.alpha:
        f, g = KB1.instance(f_name), KB2.instance(g_name)
        delta = w.delta(f_name)
        beta, beta_back = w.beta(f_name), w.beta_back(f_name)

        def conjugacy(f=f, g=g, delta=delta):
            conj = automorphism_group(f).conjugate_keys(delta)
            return None if conj == automorphism_group(g).keys else "not-conjugate"

        tasks.append((f"conjugacy/{f_name}", conjugacy))

        for k, d in enumerate(probes, start=1):
            if beta is not None:
                def star(f=f, g=g, d=d, delta=delta, beta=beta):
                    lhs = transport_hom(delta, content(f, d, limits), "image", limits)
                    return first_difference(lhs, content(g, translate_description(beta, d), limits))
                tasks.append((f"diagram-star/{f_name}/probe-{k}", star))
            if beta is not None and beta_back is not None:
                for i, u in enumerate(d.formulas, start=1):
                    def ident_left(f=f, d=d, u=u, beta=beta, beta_back=beta_back):
                        back = translate_formula(beta_back, translate_formula(beta, u, set(d.context.names)),
                                                 set(d.context.names))
                        return first_difference(val(f, d.context, u, limits), val(f, d.context, back, limits))
                    tasks.append((f"identity-left/{f_name}/probe-{k}/{i}", ident_left))

        for k, e in enumerate(right_probes, start=1):
            if beta_back is not None:
                def star_star(f=f, g=g, e=e, delta=delta, beta_back=beta_back):
                    lhs = transport_hom(delta.inverse(), content(g, e, limits), "image", limits)
                    return first_difference(lhs, content(f, translate_description(beta_back, e), limits))
                tasks.append((f"diagram-star-star/{f_name}/probe-{k}", star_star))
            if beta is not None and beta_back is not None:
                for i, u in enumerate(e.formulas, start=1):
                    def ident_right(g=g, e=e, u=u, beta=beta, beta_back=beta_back):
                        back = translate_formula(beta, translate_formula(beta_back, u, set(e.context.names)),
                                                 set(e.context.names))
                        return first_difference(val(g, e.context, u, limits), val(g, e.context, back, limits))
                    tasks.append((f"identity-right/{g_name}/probe-{k}/{i}", ident_right))

    if not w.has_translations:
        report.warnings.append("witness has no translations: only delta-side checks ran")
    results = ordered_map(lambda task: task[1](), tasks, jobs)
    for (name, _), cex in zip(tasks, results):
        report.checks.append(CheckOutcome(name, cex is None, cex))
    logger.info("witness verification: %d checks, %d failed", len(report.checks), len(report.failures))
    return report
