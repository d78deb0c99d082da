"""
kb_core/algebra/points.py — Tačke prostora Hom(W(X), G) ≅ G^X.

Tačka je indeks u mješovitoj bazi: prva varijabla konteksta se mijenja
najsporije, elementi idu redom nosioca. Taj indeks je ujedno bit u PointSet.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping

import numpy as np

from kb_core.algebra.signature import Identity
from kb_core.algebra.structures import FiniteAlgebra
from kb_core.algebra.terms import App, Context, Substitution, Term, Var
from kb_core.errors import ContextMismatchError, ContractError, SizeLimitError
from kb_core.limits import DEFAULT_LIMITS, EngineLimits


@dataclass(frozen=True)
class Assignment:
    """μ: X -> G as element indices aligned with the context."""

    context: Context
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.context):
            raise ContractError("assignment must give one element per context variable")

    @classmethod
    def from_names(cls, algebra: FiniteAlgebra, context: Context, mapping: Mapping[str, str]) -> "Assignment":
        missing = [n for n in context.names if n not in mapping]
        if missing:
            raise ContractError(f"assignment has no value for '{missing[0]}'")
        return cls(context, tuple(algebra.index_of(s, mapping[n]) for n, s in context.variables))

    def __getitem__(self, name: str) -> int:
        return self.values[self.context.index(name)]

    def names(self, algebra: FiniteAlgebra) -> dict[str, str]:
        return {n: algebra.element(s, v) for (n, s), v in zip(self.context.variables, self.values)}

    def format(self, algebra: FiniteAlgebra) -> str:
        if not self.context:
            return "()"
        return " ".join(f"{n}={e}" for n, e in self.names(algebra).items())


@dataclass(frozen=True)
class PointSpace:
    algebra: FiniteAlgebra
    context: Context

    def __post_init__(self):
        for name, sort in self.context.variables:
            if sort not in self.algebra.sorts:
                raise ContractError(f"variable '{name}' has unknown sort '{sort}'")

    @cached_property
    def radices(self) -> tuple[int, ...]:
        return tuple(self.algebra.size(s) for s in self.context.sorts)

    @cached_property
    def strides(self) -> tuple[int, ...]:
        out, acc = [], 1
        for r in reversed(self.radices):
            out.append(acc)
            acc *= r
        return tuple(reversed(out))

    @cached_property
    def size(self) -> int:
        n = 1
        for r in self.radices:
            n *= r
        return n

    def check_size(self, limits: EngineLimits = DEFAULT_LIMITS) -> "PointSpace":
        if self.size > limits.max_points:
            raise SizeLimitError(f"point space over ({self.context})", self.size, limits.max_points)
        return self

    def encode(self, values: tuple[int, ...]) -> int:
        return sum(v * s for v, s in zip(values, self.strides))

    def decode(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.size:
            raise ContractError(f"point index {index} outside a space of {self.size} points")
        return tuple((index // s) % r for s, r in zip(self.strides, self.radices))

    def assignment(self, index: int) -> Assignment:
        return Assignment(self.context, self.decode(index))

    def index(self, mu: Assignment) -> int:
        if mu.context != self.context:
            raise ContextMismatchError(f"assignment over ({mu.context}) used in space over ({self.context})")
        return self.encode(mu.values)

    def coordinate(self, position: int) -> np.ndarray:
        """Value of the `position`-th variable at every point, in point order."""
        return self._coordinates[position]

    @cached_property
    def _coordinates(self) -> np.ndarray:
        if not self.radices:
            return np.zeros((0, 1), dtype=np.int64)
        grid = np.indices(self.radices, dtype=np.int64).reshape(len(self.radices), -1)
        grid.setflags(write=False)
        return grid

    def format_point(self, index: int) -> str:
        return self.assignment(index).format(self.algebra)


def enumerate_points(algebra: FiniteAlgebra, context: Context, limits: EngineLimits = DEFAULT_LIMITS) -> list[Assignment]:
    space = PointSpace(algebra, context).check_size(limits)
    return [space.assignment(i) for i in range(space.size)]


def iter_points(space: PointSpace) -> Iterator[Assignment]:
    for i in range(space.size):
        yield space.assignment(i)


def eval_term(term: Term, mu: Assignment, algebra: FiniteAlgebra) -> int:
    """Value (element index) of the homomorphic extension of μ at `term`."""
    if isinstance(term, Var):
        if term.name not in mu.context:
            raise ContractError(f"term variable '{term.name}' is not in ({mu.context})")
        return mu[term.name]
    return algebra.apply(term.op, tuple(eval_term(a, mu, algebra) for a in term.args))


def eval_term_array(term: Term, space: PointSpace) -> np.ndarray:
    """Vectorised eval_term over every point of the space."""
    if isinstance(term, Var):
        return space.coordinate(space.context.index(term.name))
    table = space.algebra.table(term.op)
    if not term.args:
        return np.full(space.size, int(table[()]), dtype=np.int64)
    return table[tuple(eval_term_array(a, space) for a in term.args)]


def pull_point(s: Substitution, nu: Assignment, algebra: FiniteAlgebra) -> Assignment:
    """s̃(ν) = νs: the point over s.domain with μ(x) = ν(s(x))."""
    if nu.context != s.codomain:
        raise ContextMismatchError(f"point over ({nu.context}) cannot be pulled along a substitution into ({s.codomain})")
    return Assignment(s.domain, tuple(eval_term(t, nu, algebra) for t in s.terms))


def pull_indices(s: Substitution, domain_space: PointSpace, codomain_space: PointSpace) -> np.ndarray:
    """For every point ν of the codomain space, the domain index of s̃(ν)."""
    if domain_space.context != s.domain or codomain_space.context != s.codomain:
        raise ContextMismatchError("point spaces do not match the substitution's contexts")
    index = np.zeros(codomain_space.size, dtype=np.int64)
    for term, stride in zip(s.terms, domain_space.strides):
        index += eval_term_array(term, codomain_space) * stride
    return index


def find_identity_violation(algebra: FiniteAlgebra, limits: EngineLimits = DEFAULT_LIMITS) -> tuple[Identity, Assignment] | None:
    """First identity and assignment where the algebra breaks a declared identity."""
    for ident in algebra.signature.identities:
        space = PointSpace(algebra, ident.context).check_size(limits)
        differs = eval_term_array(ident.lhs, space) != eval_term_array(ident.rhs, space)
        hits = np.flatnonzero(differs)
        if hits.size:
            return ident, space.assignment(int(hits[0]))
    return None


def constant_term(algebra: FiniteAlgebra, op: str) -> App:
    symbol = algebra.signature.op(op)
    if symbol is None or symbol.arity:
        raise ContractError(f"'{op}' is not a constant")
    return App(op, (), symbol.result_sort)
