"""
kb_core/translate/interpretation.py — Interpretacija β: relacije izvorne
signature definisane formulama nad ciljnom signaturom.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from kb_core.algebra.formulas import Formula, free_variables, relations_used
from kb_core.algebra.signature import RelSymbol, Signature
from kb_core.algebra.terms import Context
from kb_core.errors import ContractError, TranslationError
from kb_core.frontend.printer import format_formula


@dataclass(frozen=True)
class Definition:
    """rel(params) := body; `bound` declares the variables the body quantifies over."""

    rel: RelSymbol
    params: Context
    body: Formula
    bound: Context = field(default_factory=Context)

    def __post_init__(self):
        if self.params.sorts != self.rel.arg_sorts:
            raise ContractError(f"parameters ({self.params}) do not match the type of {self.rel}")
        stray = [n for n in free_variables(self.body) if n not in self.params]
        if stray:
            raise ContractError(f"definition of {self.rel.name} has free variable '{stray[0]}' outside its parameters")

    def head(self) -> str:
        return f"{self.rel.name}({', '.join(self.params.names)})"

    def format(self) -> str:
        text = f"{self.head()} := {format_formula(self.body)}"
        if len(self.bound):
            text += f" ; bound {self.bound}"
        return text


@dataclass(frozen=True)
class Interpretation:
    source: Signature
    target: Signature
    definitions: tuple[Definition, ...]

    def __post_init__(self):
        if not self.source.same_algebra_type(self.target):
            raise ContractError("interpretation must stay inside one algebra signature")
        seen = set()
        for d in self.definitions:
            if self.source.rel(d.rel.name) != d.rel:
                raise ContractError(f"'{d.rel.name}' is not a relation of the source signature")
            if d.rel.name in seen:
                raise ContractError(f"relation '{d.rel.name}' defined twice")
            seen.add(d.rel.name)
            for used in relations_used(d.body):
                if self.target.rel(used) is None:
                    raise ContractError(f"definition of {d.rel.name} uses '{used}', which the target signature lacks")
        order = {r.name: i for i, r in enumerate(self.source.rels)}
        object.__setattr__(self, "definitions", tuple(sorted(self.definitions, key=lambda d: order[d.rel.name])))

    def definition(self, rel: str) -> Definition:
        for d in self.definitions:
            if d.rel.name == rel:
                return d
        raise TranslationError(f"missing definition for relation '{rel}'")

    def missing(self) -> list[str]:
        defined = {d.rel.name for d in self.definitions}
        return [r.name for r in self.source.rels if r.name not in defined]

    def is_complete(self) -> bool:
        return not self.missing()
