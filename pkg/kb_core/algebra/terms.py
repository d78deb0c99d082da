"""
kb_core/algebra/terms.py — Termi slobodne algebre W(X), konteksti i supstitucije.

Term je ili varijabla konteksta ili simbol operacije primijenjen na argumente
(konstante su 0-arne operacije). Sve vrijednosti su nepromjenjive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from kb_core.errors import ContractError, ContextMismatchError


@dataclass(frozen=True)
class Var:
    name: str
    sort: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class App:
    """Operation symbol applied to argument terms; `args == ()` for constants."""

    op: str
    args: tuple["Term", ...]
    sort: str

    def __str__(self) -> str:
        if not self.args:
            return self.op
        return f"{self.op}({', '.join(str(a) for a in self.args)})"


Term = Union[Var, App]


def term_variables(term: Term) -> list[Var]:
    """Variables of a term, first occurrence order, no duplicates."""
    seen: dict[str, Var] = {}
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            seen.setdefault(t.name, t)
        else:
            stack.extend(reversed(t.args))
    return list(seen.values())


def term_depth(term: Term) -> int:
    # variables and constants have depth 1
    if isinstance(term, Var) or not term.args:
        return 1
    return 1 + max(term_depth(a) for a in term.args)


def substitute_term(term: Term, mapping: Mapping[str, Term]) -> Term:
    if isinstance(term, Var):
        return mapping.get(term.name, term)
    if not term.args:
        return term
    return App(term.op, tuple(substitute_term(a, mapping) for a in term.args), term.sort)


@dataclass(frozen=True)
class Context:
    """Ordered, duplicate-free list of (variable name, sort) pairs."""

    variables: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        names = [name for name, _ in self.variables]
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise ContractError(f"variable '{dup}' declared twice in context")

    @classmethod
    def of(cls, *pairs: tuple[str, str]) -> "Context":
        return cls(tuple((str(n), str(s)) for n, s in pairs))

    @classmethod
    def parse(cls, text: str) -> "Context":
        """Builds a context from `x:s, y:s` (the form used in file headers)."""
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            name, _, sort = chunk.partition(":")
            if not sort.strip():
                raise ContractError(f"variable '{name.strip()}' has no sort")
            pairs.append((name.strip(), sort.strip()))
        return cls(tuple(pairs))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.variables)

    @property
    def sorts(self) -> tuple[str, ...]:
        return tuple(sort for _, sort in self.variables)

    def __len__(self) -> int:
        return len(self.variables)

    def __iter__(self) -> Iterator[Var]:
        return (Var(n, s) for n, s in self.variables)

    def __contains__(self, name: object) -> bool:
        return any(n == name for n, _ in self.variables)

    def index(self, name: str) -> int:
        for i, (n, _) in enumerate(self.variables):
            if n == name:
                return i
        raise ContractError(f"variable '{name}' is not in context ({self})")

    def sort_of(self, name: str) -> str:
        return self.variables[self.index(name)][1]

    def var(self, name: str) -> Var:
        return Var(name, self.sort_of(name))

    def extend(self, extra: Iterable[tuple[str, str]]) -> "Context":
        return Context(self.variables + tuple(extra))

    def fresh_name(self, base: str, taken: Iterable[str] = ()) -> str:
        used = set(self.names) | set(taken)
        k = 1
        while f"{base}_{k}" in used:
            k += 1
        return f"{base}_{k}"

    def __str__(self) -> str:
        return ", ".join(f"{n}:{s}" for n, s in self.variables)


@dataclass(frozen=True)
class Substitution:
    """s: W(X) -> W(Y); `terms[i]` is the image of the i-th variable of the domain."""

    domain: Context
    codomain: Context
    terms: tuple[Term, ...]

    def __post_init__(self):
        if len(self.terms) != len(self.domain):
            raise ContractError("substitution must give one term per domain variable")
        for (name, sort), term in zip(self.domain.variables, self.terms):
            if term.sort != sort:
                raise ContractError(f"substitution sends {name}:{sort} to a term of sort {term.sort}")
            for v in term_variables(term):
                if v.name not in self.codomain or self.codomain.sort_of(v.name) != v.sort:
                    raise ContractError(f"term {term} uses '{v.name}', which is not in ({self.codomain})")

    @classmethod
    def identity(cls, ctx: Context) -> "Substitution":
        return cls(ctx, ctx, tuple(ctx))

    @classmethod
    def from_mapping(cls, domain: Context, codomain: Context, mapping: Mapping[str, Term | str]) -> "Substitution":
        """Variables missing from `mapping` go to the codomain variable of the same name."""
        terms = []
        for v in domain:
            image = mapping.get(v.name, v.name)
            if isinstance(image, str):
                image = codomain.var(image)
            terms.append(image)
        return cls(domain, codomain, tuple(terms))

    def __getitem__(self, name: str) -> Term:
        return self.terms[self.domain.index(name)]

    def as_mapping(self) -> dict[str, Term]:
        return dict(zip(self.domain.names, self.terms))

    def apply_term(self, term: Term) -> Term:
        return substitute_term(term, self.as_mapping())

    def is_renaming(self) -> bool:
        return all(isinstance(t, Var) for t in self.terms)

    def __str__(self) -> str:
        return ", ".join(f"{n} := {t}" for n, t in zip(self.domain.names, self.terms))


def compose(s2: Substitution, s1: Substitution) -> Substitution:
    """(s2 s1)(x) = s2(s1(x)) for s1: X -> Y and s2: Y -> Z."""
    if s1.codomain != s2.domain:
        raise ContextMismatchError(f"cannot compose: ({s1.codomain}) is not ({s2.domain})")
    return Substitution(s1.domain, s2.codomain, tuple(s2.apply_term(t) for t in s1.terms))
