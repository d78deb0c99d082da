"""
kb_core/galois/coordinate.py — Algebarski skupovi, zatvaranje A^{ff} i koordinatne algebre.

Koordinatna algebra skupa A realizuje se semantički: elementi su B ∩ A za B
iz definabilne algebre, pa je dovoljno čuvati atome presječene sa A.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Literal

from kb_core.algebra.formulas import Formula
from kb_core.algebra.structures import Model
from kb_core.algebra.terms import Substitution
from kb_core.autgroup.group import automorphism_group
from kb_core.errors import ContractError, SizeLimitError
from kb_core.galois.admissibility import find_inadmissible_point
from kb_core.galois.correspondence import content
from kb_core.galois.description import Description
from kb_core.limits import DEFAULT_LIMITS, EngineLimits
from kb_core.semantics.evaluator import val
from kb_core.semantics.pointset import PointSet
from kb_core.semantics.transport import transport_subst
from kb_core.valuealg.definable import generate_definable_algebra
from kb_core.valuealg.orbits import orbit_partition


@dataclass(frozen=True)
class CoordinateAlgebra:
    model: Model
    carrier_set: PointSet                # the algebraic set A
    atoms: tuple[PointSet, ...]          # nonempty (atom ∩ A), canonical order

    @property
    def size(self) -> int:
        return 2 ** len(self.atoms)

    @property
    def zero(self) -> PointSet:
        return PointSet.empty(self.carrier_set.space)

    @property
    def unit(self) -> PointSet:
        return self.carrier_set

    def restrict(self, B: PointSet) -> PointSet:
        return B & self.carrier_set

    def element_of(self, u: Formula, limits: EngineLimits = DEFAULT_LIMITS) -> PointSet:
        """Class of a formula: its value intersected with A."""
        return self.restrict(val(self.model, self.carrier_set.context, u, limits))

    def same_element(self, u: Formula, v: Formula, limits: EngineLimits = DEFAULT_LIMITS) -> bool:
        return self.element_of(u, limits) == self.element_of(v, limits)

    def contains(self, C: PointSet) -> bool:
        if not C.issubset(self.carrier_set):
            return False
        return all(atom.issubset(C) or (atom & C).is_empty() for atom in self.atoms)

    def meet(self, a: PointSet, b: PointSet) -> PointSet:
        return a & b

    def join(self, a: PointSet, b: PointSet) -> PointSet:
        return a | b

    def complement(self, a: PointSet) -> PointSet:
        return self.carrier_set - a

    def elements(self) -> Iterator[PointSet]:
        for code in range(self.size):
            bits = 0
            for k, atom in enumerate(self.atoms):
                if code >> k & 1:
                    bits |= atom.bits
            yield PointSet(self.carrier_set.space, bits)


def is_algebraic_set(m: Model, A: PointSet, method: Literal["generated", "invariant"] = "invariant",
                     aux: int | None = None, limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    if A.algebra != m.algebra:
        raise ContractError("point set lives over another algebra")
    if method == "invariant":
        orbits = orbit_partition(automorphism_group(m), m.algebra, A.context, limits)
        return orbits.is_union_of_blocks(A)
    if method == "generated":
        return generate_definable_algebra(m, A.context, aux, limits).contains(A)
    raise ContractError(f"unknown method '{method}' (use 'generated' or 'invariant')")


def set_closure(m: Model, A: PointSet, aux: int | None = None, limits: EngineLimits = DEFAULT_LIMITS) -> PointSet:
    """A^{ff}: the least algebraic set containing A."""
    return generate_definable_algebra(m, A.context, aux, limits).closure_of(A)


def coordinate_algebra(m: Model, d: Description, aux: int | None = None,
                       limits: EngineLimits = DEFAULT_LIMITS) -> CoordinateAlgebra:
    A = content(m, d, limits)
    definable = generate_definable_algebra(m, d.context, aux, limits)
    restricted = tuple(r for r in (atom & A for atom in definable.atoms.blocks) if not r.is_empty())
    if 2 ** len(restricted) > limits.max_elements:
        raise SizeLimitError(f"coordinate algebra over ({d.context})", 2 ** len(restricted), limits.max_elements)
    return CoordinateAlgebra(m, A, restricted)


def coordinate_morphism(m: Model, s: Substitution, A: PointSet, B: PointSet,
                        limits: EngineLimits = DEFAULT_LIMITS) -> Callable[[PointSet], PointSet]:
    """For s admissible for A (over X) and B (over Y): C ⊆ B is sent to s_*C ∩ A."""
    bad = find_inadmissible_point(s, A, B, limits)
    if bad is not None:
        raise ContractError(f"substitution is not admissible: {A.space.format_point(bad)} is sent outside B")

    def induced(C: PointSet) -> PointSet:
        if not C.issubset(B):
            raise ContractError("coordinate element must lie inside B")
        return transport_subst(s, C, "preimage", limits) & A

    return induced
