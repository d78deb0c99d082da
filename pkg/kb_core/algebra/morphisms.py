"""
kb_core/algebra/morphisms.py — Sortno-indeksirana preslikavanja između algebri.

SortedMap je homomorfizam (provjerava se pri konstrukciji), SortedBijection
dodatno traži bijektivnost svake komponente. Koriste ih transporti δ_*, δ^*,
grupe automorfizama i svjedoci ekvivalencije.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

import numpy as np

from kb_core.algebra.points import Assignment
from kb_core.algebra.structures import FiniteAlgebra
from kb_core.errors import ContractError, NonHomomorphismError, SignatureMismatchError


def require_comparable(source: FiniteAlgebra, target: FiniteAlgebra) -> None:
    if not source.signature.same_algebra_type(target.signature):
        raise SignatureMismatchError("algebras differ in sorts or operation symbols")


def find_homomorphism_violation(source: FiniteAlgebra, target: FiniteAlgebra, components: Mapping[str, np.ndarray]):
    """First (op, args, expected, found) where the component maps break a table, else None."""
    for op in source.signature.ops:
        src = source.table(op.name)
        dst = target.table(op.name)
        mapped_result = components[op.result_sort][src]
        if op.arity:
            image_rows = dst[np.ix_(*(components[s] for s in op.arg_sorts))]
        else:
            image_rows = dst[()]
        bad = np.argwhere(np.asarray(mapped_result != image_rows).reshape(src.shape))
        if bad.size or (not op.arity and mapped_result != image_rows):
            args = tuple(int(a) for a in bad[0]) if op.arity else ()
            arg_names = tuple(source.element(s, a) for s, a in zip(op.arg_sorts, args))
            expected = target.element(op.result_sort, int(np.asarray(image_rows)[args]))
            found = target.element(op.result_sort, int(np.asarray(mapped_result)[args]))
            return op.name, arg_names, expected, found
    return None


@dataclass(frozen=True)
class SortedMap:
    """δ = (δ_i: G1_i -> G2_i); `components[k]` maps element indices of the k-th sort."""

    source: FiniteAlgebra
    target: FiniteAlgebra
    components: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        require_comparable(self.source, self.target)
        if len(self.components) != len(self.source.sorts):
            raise ContractError("sorted map needs one component per sort")
        for sort, comp in zip(self.source.sorts, self.components):
            if len(comp) != self.source.size(sort):
                raise ContractError(f"component for sort '{sort}' is not total")
            if any(not 0 <= v < self.target.size(sort) for v in comp):
                raise ContractError(f"component for sort '{sort}' leaves the target carrier")
        violation = find_homomorphism_violation(self.source, self.target, self._arrays)
        if violation is not None:
            raise NonHomomorphismError(*violation)

    @classmethod
    def from_names(cls, source: FiniteAlgebra, target: FiniteAlgebra, mapping: Mapping[str, Mapping[str, str]]):
        comps = []
        for sort in source.sorts:
            part = mapping.get(sort)
            if part is None:
                raise ContractError(f"no component given for sort '{sort}'")
            missing = [e for e in source.carrier(sort) if e not in part]
            if missing:
                raise ContractError(f"component for sort '{sort}' has no image for '{missing[0]}'")
            comps.append(tuple(target.index_of(sort, part[e]) for e in source.carrier(sort)))
        return cls(source, target, tuple(comps))

    @classmethod
    def identity(cls, algebra: FiniteAlgebra):
        return cls(algebra, algebra, tuple(tuple(range(algebra.size(s))) for s in algebra.sorts))

    @cached_property
    def _arrays(self) -> dict[str, np.ndarray]:
        return {s: np.asarray(c, dtype=np.int64) for s, c in zip(self.source.sorts, self.components)}

    def array(self, sort: str) -> np.ndarray:
        return self._arrays[sort]

    def component(self, sort: str) -> tuple[int, ...]:
        return self.components[self.source.sorts.index(sort)]

    def apply(self, sort: str, element: int) -> int:
        return self.component(sort)[element]

    def apply_assignment(self, mu: Assignment) -> Assignment:
        return Assignment(mu.context, tuple(self.apply(s, v) for s, v in zip(mu.context.sorts, mu.values)))

    def is_identity(self) -> bool:
        return all(c == tuple(range(len(c))) for c in self.components)

    def format(self) -> str:
        parts = []
        for sort, comp in zip(self.source.sorts, self.components):
            pairs = " ".join(f"{self.source.element(sort, i)}->{self.target.element(sort, v)}" for i, v in enumerate(comp))
            parts.append(f"{sort}: {pairs}")
        return " ; ".join(parts)

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class SortedBijection(SortedMap):
    """A sorted map whose every component is a bijection, i.e. an algebra isomorphism."""

    def __post_init__(self):
        super().__post_init__()
        for sort, comp in zip(self.source.sorts, self.components):
            if self.source.size(sort) != self.target.size(sort) or len(set(comp)) != len(comp):
                raise ContractError(f"component for sort '{sort}' is not a bijection")

    @classmethod
    def identity(cls, algebra: FiniteAlgebra) -> "SortedBijection":
        return cls(algebra, algebra, tuple(tuple(range(algebra.size(s))) for s in algebra.sorts))

    def inverse(self) -> "SortedBijection":
        comps = []
        for comp in self.components:
            inv = [0] * len(comp)
            for i, v in enumerate(comp):
                inv[v] = i
            comps.append(tuple(inv))
        return SortedBijection(self.target, self.source, tuple(comps))

    def then(self, other: "SortedBijection") -> "SortedBijection":
        """other ∘ self: first self, then other."""
        if other.source != self.target:
            raise ContractError("bijections are not composable")
        comps = tuple(tuple(o[v] for v in c) for c, o in zip(self.components, other.components))
        return SortedBijection(self.source, other.target, comps)

    def conjugate(self, g: "SortedBijection") -> "SortedBijection":
        """δ g δ⁻¹, an automorphism of the target when g is one of the source."""
        return self.inverse().then(g).then(self)
