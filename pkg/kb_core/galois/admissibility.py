"""
kb_core/galois/admissibility.py — Dopustivost supstitucije s i para (s, δ).

s: W(Y) -> W(X) je dopustiva za A (nad X) i B (nad Y) ako νs ∈ B za svako ν ∈ A.
"""

from __future__ import annotations

from kb_core.algebra.morphisms import SortedMap
from kb_core.algebra.terms import Substitution
from kb_core.errors import ContextMismatchError
from kb_core.limits import DEFAULT_LIMITS, EngineLimits
from kb_core.semantics.pointset import PointSet
from kb_core.semantics.transport import transport_hom, transport_subst


def _check(s: Substitution, A: PointSet, B: PointSet) -> None:
    if A.context != s.codomain:
        raise ContextMismatchError(f"A must live over ({s.codomain}), got ({A.context})")
    if B.context != s.domain:
        raise ContextMismatchError(f"B must live over ({s.domain}), got ({B.context})")


def find_inadmissible_point(s: Substitution, A: PointSet, B: PointSet,
                            limits: EngineLimits = DEFAULT_LIMITS) -> int | None:
    """Index (in A's space) of the first ν ∈ A with νs ∉ B, or None."""
    _check(s, A, B)
    if A.algebra != B.algebra:
        raise ContextMismatchError("A and B live over different algebras")
    return (A - transport_subst(s, B, "preimage", limits)).first()


def check_admissible(s: Substitution, A: PointSet, B: PointSet, limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    return find_inadmissible_point(s, A, B, limits) is None


def check_admissible_pair(s: Substitution, delta: SortedMap, A: PointSet, B: PointSet,
                          limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    """δνs ∈ B for every ν ∈ A, with A over (X, G1) and B over (Y, G2)."""
    _check(s, A, B)
    moved = transport_hom(delta, A, "image", limits)
    return moved.issubset(transport_subst(s, B, "preimage", limits))
