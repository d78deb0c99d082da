"""
kb_core/algebra/signature.py — Signatura: sortovi, operacije, relacije, identiteti.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from kb_core.algebra.terms import Context, Term, term_variables
from kb_core.errors import ContractError


@dataclass(frozen=True)
class OpSymbol:
    name: str
    arg_sorts: tuple[str, ...]
    result_sort: str

    @property
    def arity(self) -> int:
        return len(self.arg_sorts)

    def __str__(self) -> str:
        return f"{self.name}({','.join(self.arg_sorts)}) -> {self.result_sort}"


@dataclass(frozen=True)
class RelSymbol:
    name: str
    arg_sorts: tuple[str, ...]

    @property
    def arity(self) -> int:
        return len(self.arg_sorts)

    def __str__(self) -> str:
        return f"{self.name}({','.join(self.arg_sorts)})"


@dataclass(frozen=True)
class Identity:
    """Equation lhs == rhs required to hold under every assignment of `context`."""

    context: Context
    lhs: Term
    rhs: Term

    def __str__(self) -> str:
        return f"{self.context}; {self.lhs} == {self.rhs}"


@dataclass(frozen=True)
class Signature:
    sorts: tuple[str, ...]
    ops: tuple[OpSymbol, ...] = ()
    rels: tuple[RelSymbol, ...] = ()
    identities: tuple[Identity, ...] = field(default=())

    def __post_init__(self):
        _unique("sort", self.sorts)
        _unique("operation", [o.name for o in self.ops])
        _unique("relation", [r.name for r in self.rels])
        declared = set(self.sorts)
        for o in self.ops:
            for s in (*o.arg_sorts, o.result_sort):
                if s not in declared:
                    raise ContractError(f"operation {o.name} uses undeclared sort '{s}'")
        for r in self.rels:
            if r.arity < 1:
                raise ContractError(f"relation {r.name} must have arity >= 1")
            for s in r.arg_sorts:
                if s not in declared:
                    raise ContractError(f"relation {r.name} uses undeclared sort '{s}'")
        for ident in self.identities:
            for _, s in ident.context.variables:
                if s not in declared:
                    raise ContractError(f"identity '{ident}' uses undeclared sort '{s}'")
            if ident.lhs.sort != ident.rhs.sort:
                raise ContractError(f"identity '{ident}' compares terms of different sorts")
            for t in (ident.lhs, ident.rhs):
                for v in term_variables(t):
                    if v.name not in ident.context:
                        raise ContractError(f"identity '{ident}' uses undeclared variable '{v.name}'")

    def op(self, name: str) -> OpSymbol | None:
        return next((o for o in self.ops if o.name == name), None)

    def rel(self, name: str) -> RelSymbol | None:
        return next((r for r in self.rels if r.name == name), None)

    def constants(self) -> tuple[OpSymbol, ...]:
        return tuple(o for o in self.ops if o.arity == 0)

    def algebra_part(self) -> "Signature":
        """The same signature without relation symbols."""
        return replace(self, rels=())

    def with_rels(self, rels: tuple[RelSymbol, ...]) -> "Signature":
        return replace(self, rels=tuple(rels))

    def same_algebra_type(self, other: "Signature") -> bool:
        return set(self.sorts) == set(other.sorts) and set(self.ops) == set(other.ops)


def _unique(kind: str, names) -> None:
    seen = set()
    for n in names:
        if n in seen:
            raise ContractError(f"{kind} '{n}' declared twice")
        seen.add(n)
