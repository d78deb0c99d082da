"""
kb_core.algebra — Konačne multi-sortne algebre, termi, formule, tačke i supstitucije.
"""

from kb_core.algebra.formulas import (
    FALSE, TRUE, And, Equal, Exists, Formula, Not, Or, RelAtom, Truth,
    apply_substitution, bound_variables, conjunction, forall, free_variables,
    relations_used, substitute_free,
)
from kb_core.algebra.morphisms import SortedBijection, SortedMap, require_comparable
from kb_core.algebra.points import (
    Assignment, PointSpace, enumerate_points, eval_term, eval_term_array,
    find_identity_violation, pull_indices, pull_point,
)
from kb_core.algebra.signature import Identity, OpSymbol, RelSymbol, Signature
from kb_core.algebra.structures import FiniteAlgebra, Model, MultiModel
from kb_core.algebra.terms import App, Context, Substitution, Term, Var, compose

__all__ = [
    "And", "App", "Assignment", "Context", "Equal", "Exists", "FALSE", "FiniteAlgebra",
    "Formula", "Identity", "Model", "MultiModel", "Not", "OpSymbol", "Or", "PointSpace",
    "RelAtom", "RelSymbol", "Signature", "SortedBijection", "SortedMap", "Substitution",
    "TRUE", "Term", "Truth", "Var", "apply_substitution", "bound_variables", "compose",
    "conjunction", "enumerate_points", "eval_term", "eval_term_array",
    "find_identity_violation", "forall", "free_variables", "pull_indices", "pull_point",
    "relations_used", "require_comparable", "substitute_free",
]
