"""
kb_app/services/kbase.py — Servisni sloj: baza znanja nad multi-modelom.

KnowledgeBase spaja multi-model sa operacijama engine-a: upit (sadržaj opisa),
inducirano preslikavanje sadržaja duž dopustive supstitucije i ekvivalencija
sa drugom bazom. Keš sadržaja je ključan po (instanca, opis) i zaštićen lockom;
rezultat je isti sa i bez keša.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from pathlib import Path

from kb_app.core import config
from kb_core.algebra.formulas import Formula
from kb_core.algebra.points import Assignment, pull_indices
from kb_core.algebra.structures import Model, MultiModel
from kb_core.algebra.terms import Substitution
from kb_core.autgroup.equivalence import EquivalenceVerdict, decide_equivalence
from kb_core.autgroup.witness import EquivalenceWitness
from kb_core.errors import ContextMismatchError
from kb_core.frontend.diagnostics import read_source
from kb_core.frontend.model_format import parse_model
from kb_core.galois.admissibility import find_inadmissible_point
from kb_core.galois.correspondence import content, description_closure, entails
from kb_core.galois.description import Description
from kb_core.limits import EngineLimits
from kb_core.semantics.pointset import PointSet
from kb_core.translate.verification import WitnessReport, default_battery, verify_witness
from kb_core.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ContentMap:
    """The map ν ↦ νs from content A (over X) to content B (over Y), or the point that blocks it."""

    substitution: Substitution
    source: PointSet
    target: PointSet
    pairs: tuple[tuple[int, int], ...] = ()
    violation: int | None = None

    @property
    def admissible(self) -> bool:
        return self.violation is None

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def apply(self, nu: Assignment) -> Assignment:
        index = self.as_dict()[self.source.space.index(nu)]
        return self.target.space.assignment(index)

    def then(self, other: "ContentMap") -> "ContentMap":
        """Map A -> C obtained by following self and then other."""
        if other.source.context != self.target.context:
            raise ContextMismatchError("content maps are not composable")
        step = other.as_dict()
        return ContentMap(self.substitution, self.source, other.target,
                          tuple((a, step[b]) for a, b in self.pairs))

    def format_lines(self) -> list[str]:
        if self.violation is not None:
            return [f"not admissible: {self.source.space.format_point(self.violation)}"]
        return [f"{self.source.space.format_point(a)} |-> {self.target.space.format_point(b)}" for a, b in self.pairs]


@dataclass
class KnowledgeBase:
    multimodel: MultiModel
    limits: EngineLimits = field(default_factory=config.engine_limits)
    probes: list[Description] = field(default_factory=list)
    cache_enabled: bool = config.CONTENT_CACHE
    _cache: dict[tuple[str, Description], PointSet] = field(default_factory=dict, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    @classmethod
    def from_file(cls, path: str | Path, limits: EngineLimits | None = None) -> "KnowledgeBase":
        path = Path(path)
        mm = parse_model(read_source(path), str(path))
        logger.info("loaded %s: %d instance(s)", path.name, len(mm))
        return cls(mm, limits or config.engine_limits())

    @property
    def names(self) -> tuple[str, ...]:
        return self.multimodel.names

    def instance(self, name: str) -> Model:
        return self.multimodel.instance(name)

    def query(self, instance: str, d: Description) -> PointSet:
        """Content of d in the named instance (the reply to the query d)."""
        m = self.instance(instance)
        if not self.cache_enabled:
            return content(m, d, self.limits)
        key = (instance, d)
        with self._lock:
            cached = self._cache.get(key)
        if cached is not None:
            return cached
        reply = content(m, d, self.limits)
        with self._lock:
            self._cache.setdefault(key, reply)
        return reply

    def entails(self, instance: str, d: Description, v: Formula) -> bool:
        return entails(self.instance(instance), d, v, self.limits)

    def closure(self, instance: str, d: Description, probes: list[Formula]) -> list[Formula]:
        return description_closure(self.instance(instance), d, probes, self.limits)

    def induced_content_map(self, instance: str, s: Substitution, d1: Description, d2: Description) -> ContentMap:
        """s: Y -> X with d1 over X and d2 over Y; admissible s gives the map content(d1) -> content(d2)."""
        if d1.context != s.codomain or d2.context != s.domain:
            raise ContextMismatchError(
                f"substitution ({s.domain}) -> ({s.codomain}) does not match descriptions over ({d2.context}) and ({d1.context})"
            )
        A, B = self.query(instance, d1), self.query(instance, d2)
        bad = find_inadmissible_point(s, A, B, self.limits)
        if bad is not None:
            return ContentMap(s, A, B, violation=bad)
        pulled = pull_indices(s, B.space, A.space)
        pairs = tuple((int(i), int(pulled[i])) for i in A.indices())
        return ContentMap(s, A, B, pairs)

    def equivalence(self, other: "KnowledgeBase", uniform_delta: bool = False) -> EquivalenceVerdict:
        return decide_equivalence(self.multimodel, other.multimodel, self.limits.jobs, uniform_delta)

    def verify(self, other: "KnowledgeBase", witness: EquivalenceWitness, probes: list[Description] | None = None,
               right_probes: list[Description] | None = None) -> WitnessReport:
        """Witness check against user probes plus the default single-atom batteries."""
        left = list(self.probes if probes is None else probes) + default_battery(self.multimodel.signature)
        right = list(right_probes or []) + default_battery(other.multimodel.signature)
        return verify_witness(self.multimodel, other.multimodel, witness, left, right, self.limits.jobs, self.limits)

    def clear_cache(self) -> None:
        with self._lock:
            self._cache.clear()
