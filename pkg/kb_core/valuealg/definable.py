"""
kb_core/valuealg/definable.py — Algebra definabilnih skupova R_f u kontekstu X.

Algebra se ne nabraja element po element: drži se njena particija na atome,
a |D| = 2^(broj atoma). Postupak:
  1. X⁺ = X proširen sa `aux` svježih varijabli svakog sorta;
  2. sjeme: svi atomi (relacije i jednakosti) nad termima dubine ≤ term_depth;
  3. stabilno profinjenje po svim osama X⁺ (komplement, presjek, ∃x);
  4. spuštanje na X duž retrakcije X⁺ -> X;
  5. ponovno profinjenje po osama X.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from kb_core.algebra.points import PointSpace, eval_term_array
from kb_core.algebra.signature import OpSymbol
from kb_core.algebra.structures import Model
from kb_core.algebra.terms import App, Context, Term, Var
from kb_core.errors import ContractError, SizeLimitError
from kb_core.limits import DEFAULT_LIMITS, EngineLimits
from kb_core.semantics.pointset import PointSet
from kb_core.utils.logger import get_logger
from kb_core.valuealg.partition import Partition
from kb_core.valuealg.refinement import combine, row_set_ids, stable_refinement

logger = get_logger(__name__)

_CHUNK = 62


@dataclass(frozen=True)
class DefinableAlgebra:
    model_name: str
    context: Context
    atoms: Partition
    aux: int

    @property
    def space(self) -> PointSpace:
        return self.atoms.space

    @property
    def size(self) -> int:
        return 2 ** len(self.atoms)

    def contains(self, A: PointSet) -> bool:
        """A is an element iff it is a union of atoms."""
        if A.space != self.space:
            raise ContractError("point set lives in another point space")
        return self.atoms.is_union_of_blocks(A)

    __contains__ = contains

    def elements(self, limits: EngineLimits = DEFAULT_LIMITS) -> Iterator[PointSet]:
        """Every element, as unions of atoms selected by the bits of 0 .. 2^k - 1."""
        if self.size > limits.max_elements:
            raise SizeLimitError(f"definable algebra over ({self.context})", self.size, limits.max_elements)
        blocks = [b.bits for b in self.atoms.blocks]
        for code in range(self.size):
            bits = 0
            for k, b in enumerate(blocks):
                if code >> k & 1:
                    bits |= b
            yield PointSet(self.space, bits)

    @cached_property
    def zero(self) -> PointSet:
        return PointSet.empty(self.space)

    @cached_property
    def unit(self) -> PointSet:
        return PointSet.full(self.space)

    def closure_of(self, A: PointSet) -> PointSet:
        """Least element containing A (union of atoms meeting A)."""
        labels = self.atoms.label_array
        hit = np.isin(labels, np.unique(labels[A.mask()]))
        return PointSet.from_mask(self.space, hit)


def default_aux(m: Model) -> int:
    return m.algebra.total_size


def extended_context(X: Context, sorts: tuple[str, ...], aux: int) -> tuple[Context, list[tuple[str, str]]]:
    extra = []
    taken = set(X.names)
    for sort in sorts:
        for k in range(1, aux + 1):
            name = f"_{sort}{k}"
            while name in taken:
                name = "_" + name
            taken.add(name)
            extra.append((name, sort))
    return X.extend(extra), extra


def seed_terms(ctx: Context, ops: tuple[OpSymbol, ...], depth: int) -> dict[str, list[Term]]:
    """All terms of depth ≤ depth over ctx, grouped by sort."""
    levels: dict[str, list[Term]] = {}
    for v in ctx:
        levels.setdefault(v.sort, []).append(v)
    for op in ops:
        if not op.arity:
            levels.setdefault(op.result_sort, []).append(App(op.name, (), op.result_sort))
    current = {s: list(ts) for s, ts in levels.items()}
    for _ in range(depth - 1):
        grown = {s: list(ts) for s, ts in current.items()}
        for op in ops:
            if not op.arity:
                continue
            pools = [current.get(s, []) for s in op.arg_sorts]
            for args in itertools.product(*pools):
                grown.setdefault(op.result_sort, []).append(App(op.name, tuple(args), op.result_sort))
        current = grown
    return current


def _distinct_values(terms: list[Term], space: PointSpace) -> np.ndarray:
    seen: dict[bytes, np.ndarray] = {}
    for t in terms:
        arr = np.ascontiguousarray(eval_term_array(t, space))
        seen.setdefault(arr.tobytes(), arr)
    if not seen:
        return np.zeros((0, space.size), dtype=np.int64)
    return np.stack(list(seen.values()))


def equality_pattern(values: np.ndarray) -> list[np.ndarray]:
    """Columns whose joint value at p encodes which of the term values coincide at p."""
    columns = []
    for j in range(1, values.shape[0]):
        same = values[:j] == values[j]
        first = np.where(same.any(axis=0), same.argmax(axis=0), j)
        columns.append(first)
    return columns


def seed_colours(m: Model, space: PointSpace, depth: int) -> np.ndarray:
    terms = seed_terms(space.context, m.algebra.signature.ops, depth)
    values = {s: _distinct_values(ts, space) for s, ts in terms.items()}
    colours = np.zeros(space.size, dtype=np.int64)
    for sort in sorted(values):
        for column in equality_pattern(values[sort]):
            colours = combine(colours, column)
    masks: list[np.ndarray] = []
    for rel in m.rels:
        table = m.relation_array(rel.name)
        pools = [range(values.get(s, np.zeros((0, 0))).shape[0]) for s in rel.arg_sorts]
        for choice in itertools.product(*pools):
            args = tuple(values[s][i] for s, i in zip(rel.arg_sorts, choice))
            masks.append(table[args])
            if len(masks) == _CHUNK:
                colours = combine(colours, _pack(masks))
                masks = []
    if masks:
        colours = combine(colours, _pack(masks))
    return colours


def _pack(masks: list[np.ndarray]) -> np.ndarray:
    code = np.zeros(masks[0].shape[0], dtype=np.int64)
    for k, mask in enumerate(masks):
        code |= mask.astype(np.int64) << k
    return code


def _retract(colours: np.ndarray, big: PointSpace, X: Context, extra: list[tuple[str, str]],
             limits: EngineLimits) -> np.ndarray:
    """Labels over X after mapping down along X⁺ -> X (fibre colour sets for eliminated sorts)."""
    small = PointSpace(big.algebra, X)
    first_of_sort = {}
    for i, (_, sort) in enumerate(X.variables):
        first_of_sort.setdefault(sort, i)
    eliminated = [len(X) + k for k, (_, sort) in enumerate(extra) if sort not in first_of_sort]
    fibre = PointSpace(big.algebra, Context(tuple(extra[a - len(X)] for a in eliminated)))
    n_small, n_fibre = small.size, fibre.size
    if n_small * n_fibre > limits.max_points:
        raise SizeLimitError("retraction fibres", n_small * n_fibre, limits.max_points)
    index = np.zeros((n_small, n_fibre), dtype=np.int64)
    for axis, stride in enumerate(big.strides):
        if axis < len(X):
            coord = small.coordinate(axis)[:, None]
        elif axis in eliminated:
            coord = fibre.coordinate(eliminated.index(axis))[None, :]
        else:
            coord = small.coordinate(first_of_sort[extra[axis - len(X)][1]])[:, None]
        index += coord * stride
    rows = colours[index]
    if n_fibre == 1:
        return rows[:, 0]
    return row_set_ids(rows)


def generate_definable_algebra(m: Model, X: Context, aux: int | None = None,
                               limits: EngineLimits = DEFAULT_LIMITS) -> DefinableAlgebra:
    """R_f at X: seed atoms over X⁺, close to a fixpoint, map down to X and close again."""
    if aux is None:
        aux = limits.aux_budget if limits.aux_budget is not None else default_aux(m)
    if aux < 0:
        raise ContractError("auxiliary budget must be nonnegative")
    small = PointSpace(m.algebra, X).check_size(limits)
    big_ctx, extra = extended_context(X, m.algebra.sorts, aux)
    big = PointSpace(m.algebra, big_ctx).check_size(limits)
    colours = seed_colours(m, big, limits.term_depth)
    colours = stable_refinement(colours, big.radices, max_classes=limits.max_iterations)
    logger.debug("R_%s over (%s)+%d aux: %d classes before retraction", m.name, X, aux, int(colours.max()) + 1)
    if extra:
        colours = _retract(colours, big, X, extra, limits)
        colours = stable_refinement(colours, small.radices, max_classes=limits.max_iterations)
    atoms = Partition.from_labels(small, colours)
    logger.info("R_%s over (%s) with aux=%d: %d atoms", m.name, X, aux, len(atoms))
    return DefinableAlgebra(m.name, X, atoms, aux)


def atoms(D: DefinableAlgebra) -> Partition:
    """Minimal nonzero elements of the algebra."""
    return D.atoms
