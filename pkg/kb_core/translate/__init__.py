"""
kb_core.translate — Interpretacije β, prevod opisa i provjera svjedoka ekvivalencije.
"""

from kb_core.translate.interpretation import Definition, Interpretation
from kb_core.translate.synthesis import synthesize_definition, synthesize_interpretation
from kb_core.translate.translation import translate_description, translate_formula
from kb_core.translate.verification import (
    CheckOutcome, WitnessReport, check_line, default_battery, first_difference, verify_witness,
)

__all__ = [
    "CheckOutcome", "Definition", "Interpretation", "WitnessReport", "check_line", "default_battery",
    "first_difference", "synthesize_definition", "synthesize_interpretation",
    "translate_description", "translate_formula", "verify_witness",
]
