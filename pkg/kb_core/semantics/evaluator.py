"""
kb_core/semantics/evaluator.py — Val_f: formula -> skup tačaka.

Atomi se računaju vektorski nad cijelim prostorom G^X (numpy), veznici su
skupovne operacije nad maskama, ∃x je cilindrifikacija duž ose x.
"""

from __future__ import annotations

import numpy as np

from kb_core.algebra.formulas import And, Equal, Exists, Formula, Not, Or, RelAtom, Truth, bound_variables, free_variables
from kb_core.algebra.points import PointSpace, eval_term_array
from kb_core.algebra.structures import Model, MultiModel
from kb_core.algebra.terms import Context, Var
from kb_core.errors import ContractError
from kb_core.limits import DEFAULT_LIMITS, EngineLimits
from kb_core.semantics.pointset import PointSet
from kb_core.utils.logger import get_logger

logger = get_logger(__name__)


def cylindrify(mask: np.ndarray, space: PointSpace, axis: int) -> np.ndarray:
    """∃ along one axis of the point cube."""
    cube = mask.reshape(space.radices)
    spread = np.broadcast_to(cube.any(axis=axis, keepdims=True), space.radices)
    return spread.reshape(-1)


def exists_quant(A: PointSet, x: str | Var) -> PointSet:
    name = x.name if isinstance(x, Var) else x
    if name not in A.context:
        raise ContractError(f"cannot quantify over '{name}': not in ({A.context})")
    axis = A.context.index(name)
    return PointSet.from_mask(A.space, cylindrify(A.mask(), A.space, axis))


def evaluation_context(X: Context, formula: Formula) -> Context:
    """X extended by bound variables of the formula that X does not declare."""
    for name, sort in free_variables(formula).items():
        if name not in X:
            raise ContractError(f"free variable '{name}' is not in context ({X})")
        if X.sort_of(name) != sort:
            raise ContractError(f"variable '{name}' has sort {X.sort_of(name)} in the context, {sort} in the formula")
    extra = []
    for name, sort in bound_variables(formula).items():
        if name in X:
            if X.sort_of(name) != sort:
                raise ContractError(f"bound variable '{name}' has sort {sort}, context says {X.sort_of(name)}")
        else:
            extra.append((name, sort))
    return X.extend(extra)


def _mask(formula: Formula, space: PointSpace, model: Model) -> np.ndarray:
    if isinstance(formula, Truth):
        return np.full(space.size, formula.value, dtype=bool)
    if isinstance(formula, Equal):
        return eval_term_array(formula.left, space) == eval_term_array(formula.right, space)
    if isinstance(formula, RelAtom):
        symbol = model.rel_symbol(formula.rel)
        if symbol.arg_sorts != tuple(t.sort for t in formula.args):
            raise ContractError(f"relation atom {formula.rel} does not match its type {symbol}")
        table = model.relation_array(formula.rel)
        return np.asarray(table[tuple(eval_term_array(t, space) for t in formula.args)], dtype=bool)
    if isinstance(formula, Not):
        return ~_mask(formula.body, space, model)
    if isinstance(formula, And):
        return _mask(formula.left, space, model) & _mask(formula.right, space, model)
    if isinstance(formula, Or):
        return _mask(formula.left, space, model) | _mask(formula.right, space, model)
    if isinstance(formula, Exists):
        return cylindrify(_mask(formula.body, space, model), space, space.context.index(formula.var.name))
    raise ContractError(f"not a formula: {formula!r}")


def val_mask(m: Model, X: Context, formula: Formula, limits: EngineLimits = DEFAULT_LIMITS) -> np.ndarray:
    ext = evaluation_context(X, formula)
    space = PointSpace(m.algebra, ext).check_size(limits)
    mask = _mask(formula, space, m)
    if len(ext) == len(X):
        return mask
    # bound-only variables: the result is a cylinder along them, keep one slice
    cube = mask.reshape(space.radices)
    pick = (slice(None),) * len(X) + (0,) * (len(ext) - len(X))
    return np.ascontiguousarray(cube[pick]).reshape(-1)


def val(m: Model, X: Context, formula: Formula, limits: EngineLimits = DEFAULT_LIMITS) -> PointSet:
    """{μ ∈ G^X : μ satisfies the formula in m}."""
    space = PointSpace(m.algebra, X).check_size(limits)
    return PointSet.from_mask(space, val_mask(m, X, formula, limits))


def semantically_equivalent(u: Formula, v: Formula, M: MultiModel, X: Context,
                            limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    """u and v have the same value in every instance of the multi-model."""
    for f in M:
        if val(f, X, u, limits) != val(f, X, v, limits):
            logger.debug("formulas differ on instance %s", f.name)
            return False
    return True
