"""
kb_core/autgroup/group.py — Grupe permutacija (Aut(f)) nad jednom algebrom.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from kb_core.algebra.morphisms import SortedBijection
from kb_core.algebra.structures import FiniteAlgebra, Model
from kb_core.autgroup.search import IsomorphismSearch, naive_isomorphisms, relation_pairs
from kb_core.errors import ContractError, NotAGroupError
from kb_core.utils.logger import get_logger

logger = get_logger(__name__)

Key = tuple[tuple[int, ...], ...]


def compose_keys(first: Key, second: Key) -> Key:
    """second ∘ first on raw component tuples."""
    return tuple(tuple(b[v] for v in a) for a, b in zip(first, second))


def invert_key(key: Key) -> Key:
    out = []
    for comp in key:
        inv = [0] * len(comp)
        for i, v in enumerate(comp):
            inv[v] = i
        out.append(tuple(inv))
    return tuple(out)


@dataclass(frozen=True)
class PermutationGroup:
    algebra: FiniteAlgebra
    members: tuple[SortedBijection, ...]

    def __post_init__(self):
        for g in self.members:
            if g.source != self.algebra or g.target != self.algebra:
                raise ContractError("group members must be automorphisms of the group's algebra")
        unique = {g.components: g for g in self.members}
        object.__setattr__(self, "members", tuple(unique[k] for k in sorted(unique)))

    @classmethod
    def of(cls, algebra: FiniteAlgebra, members: Iterable[SortedBijection], verify: bool = True) -> "PermutationGroup":
        group = cls(algebra, tuple(members))
        if verify:
            group.verify()
        return group

    @cached_property
    def keys(self) -> frozenset[Key]:
        return frozenset(g.components for g in self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def identity(self) -> SortedBijection:
        return SortedBijection.identity(self.algebra)

    def __iter__(self) -> Iterator[SortedBijection]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: SortedBijection) -> bool:
        return g.components in self.keys

    def verify(self) -> None:
        """Raises NotAGroupError unless the members contain the identity and are closed."""
        identity = self.identity.components
        if identity not in self.keys:
            raise NotAGroupError("permutation family does not contain the identity", (identity, identity))
        for a in self.members:
            if invert_key(a.components) not in self.keys:
                raise NotAGroupError(f"inverse of [{a}] is missing", (a.components, a.components))
            for b in self.members:
                if compose_keys(a.components, b.components) not in self.keys:
                    raise NotAGroupError(f"composition of [{a}] and [{b}] is missing", (a.components, b.components))

    def conjugate_keys(self, delta: SortedBijection) -> frozenset[Key]:
        """Raw members of δ G δ⁻¹ (automorphisms of δ's target)."""
        d = delta.components
        d_inv = invert_key(d)
        return frozenset(compose_keys(compose_keys(d_inv, g), d) for g in self.keys)

    def conjugate(self, delta: SortedBijection) -> "PermutationGroup":
        if delta.source != self.algebra:
            raise ContractError("conjugating map must start at the group's algebra")
        members = (SortedBijection(delta.target, delta.target, k) for k in self.conjugate_keys(delta))
        return PermutationGroup(delta.target, tuple(members))

    def format_lines(self) -> list[str]:
        return [g.format() for g in self.members]


def automorphism_group(m: Model) -> PermutationGroup:
    """Aut(f): bijections preserving every operation table and every relation of the model."""
    search = IsomorphismSearch(m.algebra, m.algebra, relation_pairs(m, m))
    group = PermutationGroup(m.algebra, tuple(search))
    logger.info("Aut(%s) has order %d (%d search nodes)", m.name, group.order, search.nodes)
    return group


def algebra_automorphism_group(G: FiniteAlgebra) -> PermutationGroup:
    return PermutationGroup(G, tuple(IsomorphismSearch(G, G)))


def naive_automorphism_group(m: Model) -> PermutationGroup:
    """Same group by brute force over all permutations; the test oracle."""
    return PermutationGroup(m.algebra, tuple(naive_isomorphisms(m.algebra, m.algebra, relation_pairs(m, m))))
