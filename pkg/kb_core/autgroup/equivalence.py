"""
kb_core/autgroup/equivalence.py — Automorfna ekvivalencija modela i multi-modela.

Modeli f1, f2 su automorfno ekvivalentni ako postoji izomorfizam algebri δ
sa Aut(f2) = δ Aut(f1) δ⁻¹. Za multi-modele tražimo savršeno sparivanje u
grafu kompatibilnosti instanci; δ smije biti različit po paru.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TypeVar

from kb_core.algebra.morphisms import SortedBijection, require_comparable
from kb_core.algebra.structures import Model, MultiModel
from kb_core.autgroup.group import PermutationGroup, automorphism_group
from kb_core.autgroup.matching import perfect_matching
from kb_core.autgroup.search import algebra_isomorphisms, model_isomorphisms
from kb_core.autgroup.witness import EquivalenceWitness
from kb_core.utils.logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> list[R]:
    """map() over a thread pool; results keep input order for any job count."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def conjugating_map(group1: PermutationGroup, group2: PermutationGroup,
                    isomorphisms: Iterable[SortedBijection]) -> SortedBijection | None:
    """First δ (canonical order) with δ group1 δ⁻¹ = group2."""
    if group1.order != group2.order:
        return None
    for delta in isomorphisms:
        if group1.conjugate_keys(delta) == group2.keys:
            return delta
    return None


def automorphic_equivalent(m1: Model, m2: Model) -> SortedBijection | None:
    require_comparable(m1.algebra, m2.algebra)
    return conjugating_map(automorphism_group(m1), automorphism_group(m2), algebra_isomorphisms(m1.algebra, m2.algebra))


@dataclass(frozen=True)
class EquivalenceVerdict:
    witness: EquivalenceWitness | None
    reason: str = ""
    left_orders: tuple[int, ...] = ()
    right_orders: tuple[int, ...] = ()

    @property
    def equivalent(self) -> bool:
        return self.witness is not None


def _orders_reason(prefix: str, left: Sequence[int], right: Sequence[int]) -> str:
    return f"{prefix}: group orders {', '.join(map(str, left))} vs {', '.join(map(str, right))}"


def decide_equivalence(M1: MultiModel, M2: MultiModel, jobs: int = 1, uniform_delta: bool = False) -> EquivalenceVerdict:
    """Automorphic equivalence of multi-models with a witness (α, δ_f) when it holds."""
    if len(M1) != len(M2):
        return EquivalenceVerdict(None, f"instance counts differ: {len(M1)} vs {len(M2)}")
    require_comparable(M1.algebra, M2.algebra)
    groups1 = ordered_map(automorphism_group, list(M1.instances), jobs)
    groups2 = ordered_map(automorphism_group, list(M2.instances), jobs)
    orders1 = tuple(g.order for g in groups1)
    orders2 = tuple(g.order for g in groups2)
    isomorphisms = list(algebra_isomorphisms(M1.algebra, M2.algebra))
    names1, names2 = list(M1.names), list(M2.names)

    if uniform_delta:
        return _uniform(names1, names2, groups1, groups2, isomorphisms, orders1, orders2)

    pairs = [(i, j) for i in range(len(names1)) for j in range(len(names2))]
    deltas = ordered_map(lambda p: conjugating_map(groups1[p[0]], groups2[p[1]], isomorphisms), pairs, jobs)
    edge_delta = {(names1[i], names2[j]): d for (i, j), d in zip(pairs, deltas) if d is not None}
    logger.info("compatibility graph: %d edges over %d x %d instances", len(edge_delta), len(names1), len(names2))
    alpha = perfect_matching(names1, names2, set(edge_delta))
    if alpha is None:
        return EquivalenceVerdict(None, _orders_reason("no perfect matching", orders1, orders2), orders1, orders2)
    witness = EquivalenceWitness(
        alpha=tuple((f, alpha[f]) for f in names1),
        deltas=tuple((f, edge_delta[(f, alpha[f])]) for f in names1),
    )
    return EquivalenceVerdict(witness, "", orders1, orders2)


def _uniform(names1, names2, groups1, groups2, isomorphisms, orders1, orders2) -> EquivalenceVerdict:
    for delta in isomorphisms:
        conj = [g.conjugate_keys(delta) for g in groups1]
        edges = {(names1[i], names2[j]) for i in range(len(names1)) for j in range(len(names2))
                 if conj[i] == groups2[j].keys}
        alpha = perfect_matching(names1, names2, edges)
        if alpha is not None:
            witness = EquivalenceWitness(
                alpha=tuple((f, alpha[f]) for f in names1),
                deltas=tuple((f, delta) for f in names1),
            )
            return EquivalenceVerdict(witness, "", orders1, orders2)
    return EquivalenceVerdict(None, _orders_reason("no uniform delta", orders1, orders2), orders1, orders2)


def multimodel_equivalent(M1: MultiModel, M2: MultiModel, jobs: int = 1,
                          uniform_delta: bool = False) -> EquivalenceWitness | None:
    return decide_equivalence(M1, M2, jobs, uniform_delta).witness


def multimodel_isomorphic(M1: MultiModel, M2: MultiModel) -> EquivalenceWitness | None:
    """α with a relation-preserving isomorphism per matched pair (same relation symbols required)."""
    if len(M1) != len(M2):
        return None
    edges: dict[tuple[str, str], SortedBijection] = {}
    for f in M1:
        for g in M2:
            iso = next(model_isomorphisms(f, g), None)
            if iso is not None:
                edges[(f.name, g.name)] = iso
    alpha = perfect_matching(list(M1.names), list(M2.names), set(edges))
    if alpha is None:
        return None
    return EquivalenceWitness(
        alpha=tuple((f, alpha[f]) for f in M1.names),
        deltas=tuple((f, edges[(f, alpha[f])]) for f in M1.names),
    )

