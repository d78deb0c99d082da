"""
kb_core/valuealg/orbits.py — Orbite grupe automorfizama na G^X (dijagonalno djelovanje).
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from kb_core.algebra.morphisms import SortedBijection
from kb_core.algebra.points import PointSpace
from kb_core.algebra.structures import FiniteAlgebra
from kb_core.algebra.terms import Context
from kb_core.autgroup.group import PermutationGroup
from kb_core.errors import ContractError
from kb_core.limits import DEFAULT_LIMITS, EngineLimits
from kb_core.semantics.transport import hom_indices
from kb_core.valuealg.partition import Partition


def orbit_partition(group: PermutationGroup | Iterable[SortedBijection], G: FiniteAlgebra, X: Context,
                    limits: EngineLimits = DEFAULT_LIMITS) -> Partition:
    """Orbits of (g·μ)(x) = g(μ(x)); the family is verified to be a group first."""
    if not isinstance(group, PermutationGroup):
        group = PermutationGroup(G, tuple(group))
    if group.algebra != G:
        raise ContractError("group acts on another algebra")
    group.verify()
    space = PointSpace(G, X).check_size(limits)
    label = np.arange(space.size, dtype=np.int64)
    for g in group:
        np.minimum(label, hom_indices(g, space, space), out=label)
    return Partition.from_labels(space, label)


def is_invariant(group: PermutationGroup, A) -> bool:
    """g·A = A for every member g."""
    mask = A.mask()
    for g in group:
        image = np.zeros_like(mask)
        image[hom_indices(g, A.space, A.space)[mask]] = True
        if not np.array_equal(image, mask):
            return False
    return True
