"""
kb_core.frontend — Parseri i printeri tekstualnih formata (formule, modeli, upiti).

Fajlovi svjedoka se čitaju preko kb_core.frontend.witness_format; taj modul
zavisi od translate sloja pa se ovdje ne uvozi.
"""

from kb_core.frontend.diagnostics import DiagnosticError, SourceDiagnostic, fail, read_source
from kb_core.frontend.formula_parser import parse_formula
from kb_core.frontend.model_format import parse_model, serialize_model
from kb_core.frontend.normalizer import Normalizer, SourceLine
from kb_core.frontend.printer import format_formula, format_term
from kb_core.frontend.query_format import format_description, parse_query, parse_single_query

__all__ = [
    "DiagnosticError", "Normalizer", "SourceDiagnostic", "SourceLine", "fail", "format_description",
    "format_formula", "format_term", "parse_formula", "parse_model", "parse_query",
    "parse_single_query", "read_source", "serialize_model",
]
