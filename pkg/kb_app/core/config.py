"""
kb_app/core/config.py — Centralna konfiguracija aplikacije.

Sve environment varijable žive ovdje. CLI flagovi (--max-points,
--max-elements, --jobs) nadjačavaju vrijednosti preko engine_limits(**override).
"""

import os
from pathlib import Path

from dotenv import load_dotenv

from kb_core.limits import (
    DEFAULT_MAX_ELEMENTS, DEFAULT_MAX_ITERATIONS, DEFAULT_MAX_POINTS, DEFAULT_TERM_DEPTH, EngineLimits,
)

load_dotenv()

# Repo root: kb_app/core/config.py → parents[2]
ROOT_DIR = Path(__file__).resolve().parents[2]
FIXTURES_DIR = ROOT_DIR / "data" / "fixtures"

# --- Kapaciteti engine-a ---
MAX_POINTS = int(os.getenv("KB_MAX_POINTS", str(DEFAULT_MAX_POINTS)))
MAX_ELEMENTS = int(os.getenv("KB_MAX_ELEMENTS", str(DEFAULT_MAX_ELEMENTS)))
MAX_ITERATIONS = int(os.getenv("KB_MAX_ITERATIONS", str(DEFAULT_MAX_ITERATIONS)))
TERM_DEPTH = int(os.getenv("KB_TERM_DEPTH", str(DEFAULT_TERM_DEPTH)))
# prazno = zbir veličina nosilaca
AUX_BUDGET = int(os.environ["KB_AUX_BUDGET"]) if os.getenv("KB_AUX_BUDGET") else None
JOBS = int(os.getenv("KB_JOBS", "1"))

# --- Keš sadržaja u KnowledgeBase servisu ---
CONTENT_CACHE = os.getenv("KB_CONTENT_CACHE", "on").strip().lower() not in ("off", "0", "false", "no")


def engine_limits(**override) -> EngineLimits:
    """EngineLimits from the environment; None overrides are ignored. Raises pydantic ValidationError."""
    base = EngineLimits(
        max_points=MAX_POINTS,
        max_elements=MAX_ELEMENTS,
        max_iterations=MAX_ITERATIONS,
        term_depth=TERM_DEPTH,
        aux_budget=AUX_BUDGET,
        jobs=JOBS,
    )
    update = {k: v for k, v in override.items() if v is not None}
    if not update:
        return base
    # model_copy skips validation, so re-validate the merged values
    return EngineLimits.model_validate(base.model_copy(update=update).model_dump())
