"""
kb_core/valuealg/halmos.py — Izomorfizam γ: R_f -> R_{f^α}, A ↦ δ^*A, u jednom kontekstu.

δ^* je indukovan preslikavanjem tačaka π(ν) = δ∘ν; ako je π bijekcija,
δ^* komutira sa presjekom i komplementom na svim skupovima, pa se ∩ i
komplement provjeravaju jednom, na π, a ∃x po atomima.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from kb_core.algebra.morphisms import SortedBijection
from kb_core.algebra.points import PointSpace
from kb_core.algebra.structures import Model
from kb_core.algebra.terms import Context
from kb_core.limits import DEFAULT_LIMITS, EngineLimits
from kb_core.semantics.evaluator import exists_quant
from kb_core.semantics.transport import hom_indices, transport_hom
from kb_core.utils.logger import get_logger
from kb_core.valuealg.definable import generate_definable_algebra

logger = get_logger(__name__)


@dataclass
class HalmosIsomorphismReport:
    context: Context
    atoms_left: int
    atoms_right: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def halmos_isomorphism(m1: Model, m2: Model, delta: SortedBijection, X: Context, aux: int | None = None,
                       limits: EngineLimits = DEFAULT_LIMITS) -> HalmosIsomorphismReport:
    """Checks that δ^* is an atom bijection R_f -> R_{f^α} commuting with ∩, complement and ∃x."""
    left = generate_definable_algebra(m1, X, aux, limits)
    right = generate_definable_algebra(m2, X, aux, limits)
    report = HalmosIsomorphismReport(X, len(left.atoms), len(right.atoms))

    point_map = hom_indices(delta, left.space, PointSpace(delta.target, X))
    if np.unique(point_map).size != point_map.size:
        report.failures.append("δ does not act bijectively on points, so ∩ and complement are not preserved")

    right_atoms = set(right.atoms.blocks)
    images = []
    for k, atom in enumerate(left.atoms.blocks):
        moved = transport_hom(delta, atom, "image", limits)
        images.append(moved)
        if moved not in right_atoms:
            report.failures.append(f"atom {k} ({atom.format_inline()}) is not sent to an atom")
        for x in X.names:
            if transport_hom(delta, exists_quant(atom, x), "image", limits) != exists_quant(moved, x):
                report.failures.append(f"exists {x} of atom {k} is not preserved")
    if len(set(images)) != len(images) or len(images) != len(right_atoms):
        report.failures.append("atom map is not a bijection")
    logger.info("gamma over (%s): %d atoms, %d failures", X, report.atoms_left, len(report.failures))
    return report
