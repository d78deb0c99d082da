"""
kb_core/galois/correspondence.py — Galoisova korespondencija opis <-> sadržaj.

T^f = ⋂ Val_f(u) za u ∈ T. Teorija skupa A^f je beskonačna, pa se predstavlja
intenzionalno: pripadnost formule se provjerava upitom (entails, theory).
"""

from __future__ import annotations

from typing import Iterable

from kb_core.algebra.formulas import Formula
from kb_core.algebra.points import Assignment, PointSpace
from kb_core.algebra.structures import Model
from kb_core.galois.description import Description
from kb_core.limits import DEFAULT_LIMITS, EngineLimits
from kb_core.semantics.evaluator import val
from kb_core.semantics.pointset import PointSet


def content(m: Model, d: Description, limits: EngineLimits = DEFAULT_LIMITS) -> PointSet:
    """T^f; the empty description gives the whole point space."""
    result = PointSet.full(PointSpace(m.algebra, d.context).check_size(limits))
    for u in d.formulas:
        result = result & val(m, d.context, u, limits)
        if result.is_empty():
            break
    return result


def entails(m: Model, d: Description, v: Formula, limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    """v ∈ T^{ff}: every point of the content satisfies v."""
    return content(m, d, limits).issubset(val(m, d.context, v, limits))


def log_kernel_contains(m: Model, mu: Assignment, u: Formula, limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    return mu in val(m, mu.context, u, limits)


def holds_on(m: Model, A: PointSet, v: Formula, limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    """v ∈ A^f."""
    return A.issubset(val(m, A.context, v, limits))


def theory(m: Model, A: PointSet, probes: Iterable[Formula], limits: EngineLimits = DEFAULT_LIMITS) -> list[Formula]:
    """The probe formulas valid on A, in probe order (A^f restricted to the probes)."""
    return [v for v in probes if holds_on(m, A, v, limits)]


def description_closure(m: Model, d: Description, probes: Iterable[Formula],
                        limits: EngineLimits = DEFAULT_LIMITS) -> list[Formula]:
    """The probe formulas in T^{ff}."""
    return theory(m, content(m, d, limits), probes, limits)

