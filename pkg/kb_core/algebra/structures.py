"""
kb_core/algebra/structures.py — Konačne algebre, modeli (G, Φ, f) i multi-modeli (G, Φ, F).

Elementi se interno predstavljaju indeksima u nosiocu svog sorta; tablice
operacija su ravne (row-major) torke indeksa rezultata, prvi argument se
mijenja najsporije.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

import numpy as np

from kb_core.algebra.signature import RelSymbol, Signature
from kb_core.errors import ContractError, UnknownInstanceError


@dataclass(frozen=True)
class FiniteAlgebra:
    signature: Signature
    carriers: tuple[tuple[str, tuple[str, ...]], ...]
    tables: tuple[tuple[str, tuple[int, ...]], ...]

    def __post_init__(self):
        if self.signature.rels:
            object.__setattr__(self, "signature", self.signature.algebra_part())
        by_sort = dict(self.carriers)
        if set(by_sort) != set(self.signature.sorts) or len(by_sort) != len(self.carriers):
            raise ContractError("every declared sort needs exactly one carrier")
        for sort, elems in self.carriers:
            if not elems:
                raise ContractError(f"carrier of sort '{sort}' is empty")
            if len(set(elems)) != len(elems):
                raise ContractError(f"carrier of sort '{sort}' lists an element twice")
        tables = dict(self.tables)
        if set(tables) != {o.name for o in self.signature.ops}:
            raise ContractError("every operation needs exactly one table")
        for op in self.signature.ops:
            rows = tables[op.name]
            expected = 1
            for s in op.arg_sorts:
                expected *= len(by_sort[s])
            if len(rows) != expected:
                raise ContractError(f"operation table of {op.name} is not total")
            bound = len(by_sort[op.result_sort])
            if any(not 0 <= r < bound for r in rows):
                raise ContractError(f"operation table of {op.name} leaves the carrier of {op.result_sort}")

    @classmethod
    def from_rows(
        cls,
        signature: Signature,
        carriers: Mapping[str, Iterable[str]],
        rows: Mapping[str, Mapping[tuple[str, ...], str]] | None = None,
    ) -> "FiniteAlgebra":
        """Builds an algebra from element names; `rows[op][(a1, ..., an)] = result`."""
        rows = rows or {}
        carrier_tuples = {s: tuple(carriers[s]) for s in signature.sorts}
        tables = []
        for op in signature.ops:
            op_rows = rows.get(op.name, {})
            result = carrier_tuples[op.result_sort]
            flat = []
            for args in itertools.product(*(carrier_tuples[s] for s in op.arg_sorts)):
                if args not in op_rows:
                    raise ContractError(f"operation table of {op.name} is not total: missing {op.name}({', '.join(args)})")
                value = op_rows[args]
                if value not in result:
                    raise ContractError(f"{op.name}({', '.join(args)}) = {value} is not in the carrier of {op.result_sort}")
                flat.append(result.index(value))
            tables.append((op.name, tuple(flat)))
        return cls(signature, tuple(carrier_tuples.items()), tuple(tables))

    @cached_property
    def _carrier_map(self) -> dict[str, tuple[str, ...]]:
        return dict(self.carriers)

    @cached_property
    def _element_index(self) -> dict[str, dict[str, int]]:
        return {s: {e: i for i, e in enumerate(elems)} for s, elems in self.carriers}

    @cached_property
    def _table_arrays(self) -> dict[str, np.ndarray]:
        out = {}
        for op in self.signature.ops:
            shape = tuple(len(self._carrier_map[s]) for s in op.arg_sorts)
            arr = np.asarray(dict(self.tables)[op.name], dtype=np.int64).reshape(shape)
            arr.setflags(write=False)
            out[op.name] = arr
        return out

    @property
    def sorts(self) -> tuple[str, ...]:
        return self.signature.sorts

    def carrier(self, sort: str) -> tuple[str, ...]:
        try:
            return self._carrier_map[sort]
        except KeyError:
            raise ContractError(f"unknown sort '{sort}'") from None

    def size(self, sort: str) -> int:
        return len(self.carrier(sort))

    @property
    def total_size(self) -> int:
        return sum(len(e) for _, e in self.carriers)

    def element(self, sort: str, index: int) -> str:
        return self.carrier(sort)[index]

    def index_of(self, sort: str, name: str) -> int:
        try:
            return self._element_index[sort][name]
        except KeyError:
            raise ContractError(f"'{name}' is not an element of sort '{sort}'") from None

    def table(self, op: str) -> np.ndarray:
        """Read-only array indexed by argument element indices."""
        return self._table_arrays[op]

    def apply(self, op: str, args: tuple[int, ...]) -> int:
        return int(self._table_arrays[op][tuple(args)])

    def rows(self, op: str) -> Iterator[tuple[tuple[int, ...], int]]:
        """Table rows in lexicographic argument order."""
        symbol = self.signature.op(op)
        flat = dict(self.tables)[op]
        ranges = [range(self.size(s)) for s in symbol.arg_sorts]
        return zip(itertools.product(*ranges), flat)


@dataclass(frozen=True)
class Model:
    """An algebra together with one interpretation f of the relation symbols."""

    name: str
    algebra: FiniteAlgebra
    rels: tuple[RelSymbol, ...]
    relations: tuple[tuple[str, frozenset[tuple[int, ...]]], ...]

    def __post_init__(self):
        Signature(self.algebra.sorts, self.algebra.signature.ops, self.rels)
        given = dict(self.relations)
        unknown = set(given) - {r.name for r in self.rels}
        if unknown:
            raise ContractError(f"instance {self.name} interprets undeclared relation '{sorted(unknown)[0]}'")
        for r in self.rels:
            for tup in given.get(r.name, frozenset()):
                if len(tup) != r.arity:
                    raise ContractError(f"tuple {tup} does not match the arity of {r.name}")
                for s, i in zip(r.arg_sorts, tup):
                    if not 0 <= i < self.algebra.size(s):
                        raise ContractError(f"tuple of {r.name} leaves the carrier of sort '{s}'")
        # normalise: every relation present, declaration order
        object.__setattr__(self, "relations", tuple((r.name, frozenset(given.get(r.name, ()))) for r in self.rels))

    @classmethod
    def build(
        cls,
        name: str,
        algebra: FiniteAlgebra,
        rels: Iterable[RelSymbol],
        tuples: Mapping[str, Iterable[tuple[str, ...]]] | None = None,
    ) -> "Model":
        """Same as the constructor, but relation tuples are given by element names."""
        rels = tuple(rels)
        tuples = tuples or {}
        by_name = {r.name: r for r in rels}
        relations = []
        for rel_name, rows in tuples.items():
            symbol = by_name.get(rel_name)
            if symbol is None:
                raise ContractError(f"instance {name} interprets undeclared relation '{rel_name}'")
            encoded = set()
            for row in rows:
                if len(row) != symbol.arity:
                    raise ContractError(f"tuple {row} does not match the arity of {rel_name}")
                encoded.add(tuple(algebra.index_of(s, e) for s, e in zip(symbol.arg_sorts, row)))
            relations.append((rel_name, frozenset(encoded)))
        return cls(name, algebra, rels, tuple(relations))

    @cached_property
    def signature(self) -> Signature:
        return self.algebra.signature.with_rels(self.rels)

    @cached_property
    def _relation_arrays(self) -> dict[str, np.ndarray]:
        out = {}
        for r in self.rels:
            arr = np.zeros(tuple(self.algebra.size(s) for s in r.arg_sorts), dtype=bool)
            for tup in dict(self.relations)[r.name]:
                arr[tup] = True
            arr.setflags(write=False)
            out[r.name] = arr
        return out

    def rel_symbol(self, name: str) -> RelSymbol:
        symbol = self.signature.rel(name)
        if symbol is None:
            raise ContractError(f"unknown relation '{name}'")
        return symbol

    def relation(self, name: str) -> frozenset[tuple[int, ...]]:
        self.rel_symbol(name)
        return dict(self.relations)[name]

    def relation_array(self, name: str) -> np.ndarray:
        self.rel_symbol(name)
        return self._relation_arrays[name]

    def sorted_tuples(self, name: str) -> list[tuple[int, ...]]:
        return sorted(self.relation(name))

    def with_name(self, name: str) -> "Model":
        return Model(name, self.algebra, self.rels, self.relations)


@dataclass(frozen=True)
class MultiModel:
    """One algebra, one relation vocabulary, many named instances."""

    algebra: FiniteAlgebra
    rels: tuple[RelSymbol, ...]
    instances: tuple[Model, ...]

    def __post_init__(self):
        names = [m.name for m in self.instances]
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise ContractError(f"instance '{dup}' declared twice")
        for m in self.instances:
            if m.algebra != self.algebra or m.rels != self.rels:
                raise ContractError(f"instance {m.name} does not share the multi-model's algebra and relations")

    @cached_property
    def signature(self) -> Signature:
        return self.algebra.signature.with_rels(self.rels)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(m.name for m in self.instances)

    def instance(self, name: str) -> Model:
        for m in self.instances:
            if m.name == name:
                return m
        raise UnknownInstanceError(f"unknown instance '{name}' (known: {', '.join(self.names) or 'none'})")

    def __iter__(self) -> Iterator[Model]:
        return iter(self.instances)

    def __len__(self) -> int:
        return len(self.instances)
