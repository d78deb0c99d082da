"""
kb_core/translate/translation.py — Prevod formula preko interpretacije β.

Svaki relacijski atom zamjenjuje se definicijom; vezane varijable definicije
dobijaju svježa imena po pojavi, pa supstitucija parametara ne može uhvatiti
varijable argumenata.
"""

from __future__ import annotations

from kb_core.algebra.formulas import (
    And, Equal, Exists, Formula, Not, Or, RelAtom, Truth,
    bound_variables, rename_bound, substitute_free, variable_names,
)
from kb_core.galois.description import Description
from kb_core.translate.interpretation import Interpretation


class _FreshNames:
    def __init__(self, taken: set[str]):
        self.taken = set(taken)

    def __call__(self, base: str) -> str:
        k = 1
        while f"{base}_{k}" in self.taken:
            k += 1
        name = f"{base}_{k}"
        self.taken.add(name)
        return name


def _expand(beta: Interpretation, atom: RelAtom, fresh: _FreshNames) -> Formula:
    definition = beta.definition(atom.rel)
    body = definition.body
    for name in bound_variables(body):
        body = rename_bound(body, name, fresh(name))
    return substitute_free(body, dict(zip(definition.params.names, atom.args)))


def _walk(beta: Interpretation, formula: Formula, fresh: _FreshNames) -> Formula:
    if isinstance(formula, (Truth, Equal)):
        return formula
    if isinstance(formula, RelAtom):
        return _expand(beta, formula, fresh)
    if isinstance(formula, Not):
        return Not(_walk(beta, formula.body, fresh))
    if isinstance(formula, And):
        return And(_walk(beta, formula.left, fresh), _walk(beta, formula.right, fresh))
    if isinstance(formula, Or):
        return Or(_walk(beta, formula.left, fresh), _walk(beta, formula.right, fresh))
    return Exists(formula.var, _walk(beta, formula.body, fresh))


def translate_formula(beta: Interpretation, formula: Formula, reserved: set[str] = frozenset()) -> Formula:
    """β applied atom by atom; raises TranslationError for a relation without definition."""
    taken = set(reserved) | variable_names(formula)
    for d in beta.definitions:
        taken |= set(d.params.names) | set(bound_variables(d.body))
    return _walk(beta, formula, _FreshNames(taken))


def translate_description(beta: Interpretation, d: Description) -> Description:
    reserved = set(d.context.names)
    return Description(d.context, tuple(translate_formula(beta, u, reserved) for u in d.formulas))

