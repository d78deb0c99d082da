"""
kb_core/algebra/formulas.py — Formule jezika L_X.

Univerzalni kvantifikator nije primitivan: forall x. φ se gradi kao
not exists x. not φ (vidi `forall`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from kb_core.algebra.terms import Substitution, Term, Var, substitute_term, term_variables
from kb_core.errors import TranslationError


@dataclass(frozen=True)
class Truth:
    value: bool


@dataclass(frozen=True)
class Equal:
    left: Term
    right: Term


@dataclass(frozen=True)
class RelAtom:
    rel: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: Var
    body: "Formula"


Formula = Union[Truth, Equal, RelAtom, Not, And, Or, Exists]

TRUE = Truth(True)
FALSE = Truth(False)


def forall(var: Var, body: Formula) -> Formula:
    return Not(Exists(var, Not(body)))


def conjunction(formulas) -> Formula:
    result = None
    for f in formulas:
        result = f if result is None else And(result, f)
    return TRUE if result is None else result


def subformulas(formula: Formula) -> Iterator[Formula]:
    """Pre-order walk."""
    stack = [formula]
    while stack:
        f = stack.pop()
        yield f
        if isinstance(f, Not):
            stack.append(f.body)
        elif isinstance(f, (And, Or)):
            stack.append(f.right)
            stack.append(f.left)
        elif isinstance(f, Exists):
            stack.append(f.body)


def atom_terms(formula: Formula) -> tuple[Term, ...]:
    if isinstance(formula, Equal):
        return (formula.left, formula.right)
    if isinstance(formula, RelAtom):
        return formula.args
    return ()


def free_variables(formula: Formula) -> dict[str, str]:
    """Free variable name -> sort, in first occurrence order."""
    out: dict[str, str] = {}

    def walk(f: Formula, bound: frozenset[str]) -> None:
        if isinstance(f, (Equal, RelAtom)):
            for t in atom_terms(f):
                for v in term_variables(t):
                    if v.name not in bound:
                        out.setdefault(v.name, v.sort)
        elif isinstance(f, Not):
            walk(f.body, bound)
        elif isinstance(f, (And, Or)):
            walk(f.left, bound)
            walk(f.right, bound)
        elif isinstance(f, Exists):
            walk(f.body, bound | {f.var.name})

    walk(formula, frozenset())
    return out


def bound_variables(formula: Formula) -> dict[str, str]:
    out: dict[str, str] = {}
    for f in subformulas(formula):
        if isinstance(f, Exists):
            out.setdefault(f.var.name, f.var.sort)
    return out


def variable_names(formula: Formula) -> set[str]:
    names = set(bound_variables(formula))
    for f in subformulas(formula):
        for t in atom_terms(f):
            names.update(v.name for v in term_variables(t))
    return names


def relations_used(formula: Formula) -> list[str]:
    seen: dict[str, None] = {}
    for f in subformulas(formula):
        if isinstance(f, RelAtom):
            seen.setdefault(f.rel)
    return list(seen)


def rename_bound(formula: Formula, old: str, new: str) -> Formula:
    """Renames every binder named `old` (and the occurrences it binds) to `new`."""
    if isinstance(formula, Not):
        return Not(rename_bound(formula.body, old, new))
    if isinstance(formula, And):
        return And(rename_bound(formula.left, old, new), rename_bound(formula.right, old, new))
    if isinstance(formula, Or):
        return Or(rename_bound(formula.left, old, new), rename_bound(formula.right, old, new))
    if isinstance(formula, Exists):
        if formula.var.name == old:
            fresh = Var(new, formula.var.sort)
            body = substitute_free(rename_bound(formula.body, old, new), {old: fresh}, check_capture=False)
            return Exists(fresh, body)
        return Exists(formula.var, rename_bound(formula.body, old, new))
    return formula


def substitute_free(formula: Formula, mapping: Mapping[str, Term], check_capture: bool = True) -> Formula:
    """Replaces free variables by terms.

    Raises TranslationError when a substituted term would be captured by a
    binder of the formula.
    """
    if isinstance(formula, Truth):
        return formula
    if isinstance(formula, Equal):
        return Equal(substitute_term(formula.left, mapping), substitute_term(formula.right, mapping))
    if isinstance(formula, RelAtom):
        return RelAtom(formula.rel, tuple(substitute_term(t, mapping) for t in formula.args))
    if isinstance(formula, Not):
        return Not(substitute_free(formula.body, mapping, check_capture))
    if isinstance(formula, And):
        return And(substitute_free(formula.left, mapping, check_capture),
                   substitute_free(formula.right, mapping, check_capture))
    if isinstance(formula, Or):
        return Or(substitute_free(formula.left, mapping, check_capture),
                  substitute_free(formula.right, mapping, check_capture))
    # Exists
    inner = {k: t for k, t in mapping.items() if k != formula.var.name}
    if check_capture:
        free_below = free_variables(formula.body)
        for name, term in inner.items():
            if name in free_below and any(v.name == formula.var.name for v in term_variables(term)):
                raise TranslationError(
                    f"substituting {term} for {name} would be captured by 'exists {formula.var.name}'"
                )
    return Exists(formula.var, substitute_free(formula.body, inner, check_capture))


def apply_substitution(s: Substitution, formula: Formula) -> Formula:
    """Syntactic s_* on a formula over s.domain; only capture-free cases are accepted."""
    mapping = s.as_mapping()
    bound = bound_variables(formula)
    for name in free_variables(formula):
        image = mapping.get(name)
        if image is None:
            continue
        clash = [v.name for v in term_variables(image) if v.name in bound]
        if clash:
            raise TranslationError(
                f"substitution {name} := {image} is not capture-free (bound variable '{clash[0]}')"
            )
    return substitute_free(formula, mapping)
