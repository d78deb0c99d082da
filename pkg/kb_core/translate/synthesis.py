"""
kb_core/translate/synthesis.py — Ograničena pretraga definicija za β.

Za relaciju R izvornog modela traži se formula nad ciljnom signaturom čija je
vrijednost δ^*(Val(R)). Pretraga ide po dubini (do max_depth), formule se
deduplikuju po vrijednosti nad kontekstom parametara + jedna pomoćna
varijabla po sortu; slobodne pomoćne varijable se na kraju kvantifikuju.
"""

from __future__ import annotations

import itertools

import numpy as np

from kb_core.algebra.formulas import TRUE, And, Equal, Exists, Formula, Not, Or, RelAtom, bound_variables, free_variables
from kb_core.algebra.morphisms import SortedBijection
from kb_core.algebra.points import PointSpace
from kb_core.algebra.structures import Model
from kb_core.algebra.terms import Context
from kb_core.limits import DEFAULT_LIMITS, EngineLimits
from kb_core.semantics.evaluator import cylindrify, val, val_mask
from kb_core.semantics.transport import transport_hom
from kb_core.translate.interpretation import Definition, Interpretation
from kb_core.utils.logger import get_logger

logger = get_logger(__name__)

MAX_CANDIDATES = 4096


def _base_atoms(target: Model, ctx: Context) -> list[Formula]:
    atoms: list[Formula] = [TRUE]
    variables = list(ctx)
    for a, b in itertools.combinations(variables, 2):
        if a.sort == b.sort:
            atoms.append(Equal(a, b))
    for rel in target.rels:
        pools = [[v for v in variables if v.sort == s] for s in rel.arg_sorts]
        atoms.extend(RelAtom(rel.name, tuple(args)) for args in itertools.product(*pools))
    return atoms


def synthesize_definition(source: Model, target: Model, delta: SortedBijection, rel: str,
                          max_depth: int = 3, limits: EngineLimits = DEFAULT_LIMITS) -> Definition | None:
    symbol = source.rel_symbol(rel)
    params = Context(tuple((f"x{i}", s) for i, s in enumerate(symbol.arg_sorts, start=1)))
    aux = Context(tuple((f"a_{s}", s) for s in target.algebra.sorts))
    ext = params.extend(aux.variables)
    space = PointSpace(target.algebra, ext).check_size(limits)
    wanted_small = transport_hom(delta, val(source, params, RelAtom(rel, tuple(params))), "image", limits).mask()
    wanted = np.broadcast_to(
        wanted_small.reshape(space.radices[:len(params)] + (1,) * len(aux)), space.radices
    ).reshape(-1)

    found: dict[bytes, tuple[Formula, np.ndarray]] = {}
    frontier: list[tuple[Formula, np.ndarray]] = []

    def offer(formula: Formula, mask: np.ndarray) -> Formula | None:
        key = np.packbits(mask).tobytes()
        if key in found or len(found) >= MAX_CANDIDATES:
            return None
        found[key] = (formula, mask)
        frontier.append((formula, mask))
        return formula if np.array_equal(mask, wanted) else None

    def finish(formula: Formula) -> Definition:
        body = formula
        for v in reversed(list(aux)):
            if v.name in free_variables(body):
                body = Exists(v, body)
        used = bound_variables(body)
        return Definition(symbol, params, body, Context(tuple(p for p in aux.variables if p[0] in used)))

    for atom in _base_atoms(target, ext):
        if (hit := offer(atom, val_mask(target, ext, atom, limits))) is not None:
            return finish(hit)
    for depth in range(2, max_depth + 1):
        previous = list(frontier)
        frontier.clear()
        pool = list(found.values())
        for formula, mask in previous:
            if len(found) >= MAX_CANDIDATES:
                break
            candidates = [(Not(formula), ~mask)]
            for v in aux:
                axis = ext.index(v.name)
                candidates.append((Exists(v, formula), cylindrify(mask, space, axis)))
            for other, other_mask in pool:
                candidates.append((And(other, formula), other_mask & mask))
                candidates.append((Or(other, formula), other_mask | mask))
            for cand, cand_mask in candidates:
                if (hit := offer(cand, cand_mask)) is not None:
                    logger.debug("definition of %s found at depth %d", rel, depth)
                    return finish(hit)
    logger.info("no definition of %s up to depth %d", rel, max_depth)
    return None


def synthesize_interpretation(source: Model, target: Model, delta: SortedBijection, max_depth: int = 3,
                              limits: EngineLimits = DEFAULT_LIMITS) -> Interpretation | None:
    """β with one synthesized definition per relation of the source, or None if one is missing."""
    definitions = []
    for rel in source.rels:
        d = synthesize_definition(source, target, delta, rel.name, max_depth, limits)
        if d is None:
            return None
        definitions.append(d)
    return Interpretation(source.signature, target.signature, tuple(definitions))
