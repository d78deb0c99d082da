"""
kb_core/frontend/printer.py — Kanonski ispis terma i formula.

Ispis je minimalno zagrađen i ponovo se parsira u istu formulu.
"""

from kb_core.algebra.formulas import And, Equal, Exists, Formula, Not, Or, RelAtom, Truth
from kb_core.algebra.terms import Term

_LEVEL = {Exists: 0, Or: 1, And: 2, Not: 3}
_ATOM = 4


def format_term(term: Term) -> str:
    return str(term)


def _level(formula: Formula) -> int:
    return _LEVEL.get(type(formula), _ATOM)


def _fmt(formula: Formula, need: int) -> str:
    if isinstance(formula, Truth):
        text = "true" if formula.value else "false"
    elif isinstance(formula, Equal):
        text = f"{formula.left} == {formula.right}"
    elif isinstance(formula, RelAtom):
        text = f"{formula.rel}({', '.join(str(a) for a in formula.args)})"
    elif isinstance(formula, Not):
        text = f"not {_fmt(formula.body, 3)}"
    elif isinstance(formula, And):
        text = f"{_fmt(formula.left, 2)} and {_fmt(formula.right, 3)}"
    elif isinstance(formula, Or):
        text = f"{_fmt(formula.left, 1)} or {_fmt(formula.right, 2)}"
    else:
        text = f"exists {formula.var.name}. {_fmt(formula.body, 0)}"
    if _level(formula) < need or (isinstance(formula, Exists) and need > 0):
        return f"({text})"
    return text


def format_formula(formula: Formula) -> str:
    return _fmt(formula, 0)
