"""
kb_core/limits.py — Ograničenja engine-a (kapaciteti i budžeti).

Vrijednosti se ne čitaju iz okruženja ovdje: aplikacijski sloj
(kb_app/core/config.py) gradi EngineLimits iz env varijabli i prosljeđuje ih.
"""

from pydantic import BaseModel, Field

DEFAULT_MAX_POINTS = 2 ** 24
DEFAULT_MAX_ELEMENTS = 2 ** 20
DEFAULT_MAX_ITERATIONS = 10 ** 6
DEFAULT_TERM_DEPTH = 2


class EngineLimits(BaseModel):
    """Caps and budgets shared by every engine operation."""

    model_config = {"frozen": True}

    max_points: int = Field(default=DEFAULT_MAX_POINTS, gt=0, description="Largest point space |G^X|")
    max_elements: int = Field(default=DEFAULT_MAX_ELEMENTS, gt=0, description="Largest materialised Boolean algebra")
    max_iterations: int = Field(default=DEFAULT_MAX_ITERATIONS, gt=0, description="New classes allowed during refinement")
    term_depth: int = Field(default=DEFAULT_TERM_DEPTH, gt=0, description="Seed term depth (variables have depth 1)")
    aux_budget: int | None = Field(default=None, ge=0, description="Fresh variables per sort; None = sum of carrier sizes")
    jobs: int = Field(default=1, gt=0, description="Worker threads for independent checks")


DEFAULT_LIMITS = EngineLimits()
