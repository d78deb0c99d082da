"""
kb_core/autgroup/search.py — Backtracking pretraga izomorfizama i automorfizama.

Elementi se dodjeljuju redom deklaracije (sort po sort), kandidati idu redom
ciljnog nosioca, pa rezultati izlaze u kanonskom (leksikografskom) redu.
Red tablice (ili torka relacije) provjerava se čim je dodijeljen njen
posljednji element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from kb_core.algebra.morphisms import SortedBijection, require_comparable
from kb_core.algebra.structures import FiniteAlgebra, Model
from kb_core.errors import SignatureMismatchError
from kb_core.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class RelationPair:
    """A relation of the source that must map onto a relation of the target."""

    arg_sorts: tuple[str, ...]
    source: frozenset[tuple[int, ...]]
    target: frozenset[tuple[int, ...]]


def relation_pairs(m1: Model, m2: Model) -> list[RelationPair]:
    if m1.rels != m2.rels:
        raise SignatureMismatchError("models do not share relation symbols")
    return [RelationPair(r.arg_sorts, m1.relation(r.name), m2.relation(r.name)) for r in m1.rels]


@dataclass
class _Check:
    op: str | None
    slots: tuple[int, ...]          # argument slots (op) or tuple slots (relation)
    result: int = -1                # result slot for op rows
    relation: int = -1              # index into relation pairs


@dataclass
class IsomorphismSearch:
    source: FiniteAlgebra
    target: FiniteAlgebra
    relations: Sequence[RelationPair] = ()
    nodes: int = field(default=0, init=False)

    def __post_init__(self):
        require_comparable(self.source, self.target)
        self.slots = [(s, i) for s in self.source.sorts for i in range(self.source.size(s))]
        self.slot_of = {slot: p for p, slot in enumerate(self.slots)}
        self.checks: list[list[_Check]] = [[] for _ in self.slots]
        for op in self.source.signature.ops:
            for args, result in self.source.rows(op.name):
                arg_slots = tuple(self.slot_of[(s, a)] for s, a in zip(op.arg_sorts, args))
                res_slot = self.slot_of[(op.result_sort, result)]
                last = max(arg_slots + (res_slot,))
                self.checks[last].append(_Check(op.name, arg_slots, res_slot))
        for k, pair in enumerate(self.relations):
            for tup in pair.source:
                tup_slots = tuple(self.slot_of[(s, a)] for s, a in zip(pair.arg_sorts, tup))
                self.checks[max(tup_slots)].append(_Check(None, tup_slots, relation=k))

    def feasible(self) -> bool:
        if any(self.source.size(s) != self.target.size(s) for s in self.source.sorts):
            return False
        return all(len(p.source) == len(p.target) for p in self.relations)

    def _consistent(self, position: int, image: list[int]) -> bool:
        for check in self.checks[position]:
            mapped = tuple(image[p] for p in check.slots)
            if check.op is not None:
                if self.target.apply(check.op, mapped) != image[check.result]:
                    return False
            elif mapped not in self.relations[check.relation].target:
                return False
        return True

    def __iter__(self) -> Iterator[SortedBijection]:
        if not self.feasible():
            return
        image = [-1] * len(self.slots)
        used = {s: set() for s in self.source.sorts}

        def extend(position: int) -> Iterator[None]:
            if position == len(self.slots):
                yield None
                return
            sort, _ = self.slots[position]
            for candidate in range(self.target.size(sort)):
                if candidate in used[sort]:
                    continue
                self.nodes += 1
                image[position] = candidate
                if self._consistent(position, image):
                    used[sort].add(candidate)
                    yield from extend(position + 1)
                    used[sort].discard(candidate)
                image[position] = -1

        for _ in extend(0):
            yield self._bijection(image)
        logger.debug("isomorphism search visited %d nodes", self.nodes)

    def _bijection(self, image: list[int]) -> SortedBijection:
        comps, p = [], 0
        for s in self.source.sorts:
            n = self.source.size(s)
            comps.append(tuple(image[p:p + n]))
            p += n
        return SortedBijection(self.source, self.target, tuple(comps))


def algebra_isomorphisms(G1: FiniteAlgebra, G2: FiniteAlgebra) -> Iterator[SortedBijection]:
    """Every operation-preserving sorted bijection G1 -> G2, canonical order."""
    return iter(IsomorphismSearch(G1, G2))


def model_isomorphisms(m1: Model, m2: Model) -> Iterator[SortedBijection]:
    """Algebra isomorphisms that also carry every relation of m1 onto the same relation of m2."""
    return iter(IsomorphismSearch(m1.algebra, m2.algebra, relation_pairs(m1, m2)))


def naive_isomorphisms(G1: FiniteAlgebra, G2: FiniteAlgebra,
                       relations: Sequence[RelationPair] = ()) -> Iterator[SortedBijection]:
    """Reference enumeration: every tuple of per-sort permutations, filtered afterwards."""
    require_comparable(G1, G2)
    if any(G1.size(s) != G2.size(s) for s in G1.sorts):
        return
    per_sort = [itertools.permutations(range(G1.size(s))) for s in G1.sorts]
    for comps in itertools.product(*per_sort):
        if not _preserves_tables(G1, G2, comps):
            continue
        if all({tuple(comps[G1.sorts.index(s)][a] for s, a in zip(p.arg_sorts, t)) for t in p.source} == set(p.target)
               for p in relations):
            yield SortedBijection(G1, G2, tuple(comps))


def _preserves_tables(G1: FiniteAlgebra, G2: FiniteAlgebra, comps) -> bool:
    index = {s: k for k, s in enumerate(G1.sorts)}
    for op in G1.signature.ops:
        for args, result in G1.rows(op.name):
            mapped = tuple(comps[index[s]][a] for s, a in zip(op.arg_sorts, args))
            if G2.apply(op.name, mapped) != comps[index[op.result_sort]][result]:
                return False
    return True
