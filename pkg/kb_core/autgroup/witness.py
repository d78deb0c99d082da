"""
kb_core/autgroup/witness.py — Svjedok ekvivalencije (α, δ_f, β_f, β'_f).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from kb_core.algebra.morphisms import SortedBijection
from kb_core.errors import MalformedWitnessError

if TYPE_CHECKING:
    from kb_core.translate.interpretation import Interpretation


@dataclass(frozen=True)
class EquivalenceWitness:
    """α as ordered (left, right) pairs; δ and the interpretations keyed by left instance."""

    alpha: tuple[tuple[str, str], ...]
    deltas: tuple[tuple[str, SortedBijection], ...]
    betas: tuple[tuple[str, "Interpretation"], ...] = field(default=())
    betas_back: tuple[tuple[str, "Interpretation"], ...] = field(default=())

    def image(self, left: str) -> str:
        for a, b in self.alpha:
            if a == left:
                return b
        raise MalformedWitnessError(f"alpha has no image for instance '{left}'")

    def delta(self, left: str) -> SortedBijection:
        for name, d in self.deltas:
            if name == left:
                return d
        raise MalformedWitnessError(f"no delta given for instance '{left}'")

    def beta(self, left: str) -> "Interpretation | None":
        return dict(self.betas).get(left)

    def beta_back(self, left: str) -> "Interpretation | None":
        return dict(self.betas_back).get(left)

    @property
    def has_translations(self) -> bool:
        return bool(self.betas or self.betas_back)
