"""
kb_core/semantics/transport.py — Transporti s_*, s^* (supstitucije) i δ_*, δ^* (homomorfizmi).

Preimage je Booleov homomorfizam; image čuva unije i prazan skup, ali ne i
komplemente.
"""

from __future__ import annotations

from typing import Literal

import numpy as np

from kb_core.algebra.morphisms import SortedMap
from kb_core.algebra.points import PointSpace, pull_indices
from kb_core.algebra.terms import Substitution
from kb_core.errors import ContextMismatchError, ContractError
from kb_core.limits import DEFAULT_LIMITS, EngineLimits
from kb_core.semantics.pointset import PointSet

Mode = Literal["preimage", "image"]


def _check_mode(mode: str) -> None:
    if mode not in ("preimage", "image"):
        raise ContractError(f"transport mode must be 'preimage' or 'image', got '{mode}'")


def transport_subst(s: Substitution, A: PointSet, mode: Mode, limits: EngineLimits = DEFAULT_LIMITS) -> PointSet:
    """preimage: A over X gives s_*A over Y; image: A over Y gives s^*A over X."""
    _check_mode(mode)
    if mode == "preimage":
        if A.context != s.domain:
            raise ContextMismatchError(f"preimage needs a set over ({s.domain}), got ({A.context})")
        space_y = PointSpace(A.algebra, s.codomain).check_size(limits)
        index = pull_indices(s, A.space, space_y)
        return PointSet.from_mask(space_y, A.mask()[index])
    if A.context != s.codomain:
        raise ContextMismatchError(f"image needs a set over ({s.codomain}), got ({A.context})")
    space_x = PointSpace(A.algebra, s.domain).check_size(limits)
    index = pull_indices(s, space_x, A.space)
    out = np.zeros(space_x.size, dtype=bool)
    out[index[A.mask()]] = True
    return PointSet.from_mask(space_x, out)


def hom_indices(delta: SortedMap, source_space: PointSpace, target_space: PointSpace) -> np.ndarray:
    """Target index of δ∘ν for every point ν of the source space."""
    index = np.zeros(source_space.size, dtype=np.int64)
    for pos, (sort, stride) in enumerate(zip(source_space.context.sorts, target_space.strides)):
        index += delta.array(sort)[source_space.coordinate(pos)] * stride
    return index


def transport_hom(delta: SortedMap, A: PointSet, mode: Mode, limits: EngineLimits = DEFAULT_LIMITS) -> PointSet:
    """preimage: A over (X, G2) gives δ_*A over (X, G1); image: A over (X, G1) gives δ^*A over (X, G2)."""
    _check_mode(mode)
    if mode == "preimage":
        if A.algebra != delta.target:
            raise ContextMismatchError("δ_* needs a set over the target algebra of δ")
        source_space = PointSpace(delta.source, A.context).check_size(limits)
        index = hom_indices(delta, source_space, A.space)
        return PointSet.from_mask(source_space, A.mask()[index])
    if A.algebra != delta.source:
        raise ContextMismatchError("δ^* needs a set over the source algebra of δ")
    target_space = PointSpace(delta.target, A.context).check_size(limits)
    index = hom_indices(delta, A.space, target_space)
    out = np.zeros(target_space.size, dtype=bool)
    out[index[A.mask()]] = True
    return PointSet.from_mask(target_space, out)
