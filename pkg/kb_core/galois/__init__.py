"""
kb_core.galois — Galoisova korespondencija, zatvaranja, dopustivost i koordinatne algebre.
"""

from kb_core.galois.admissibility import check_admissible, check_admissible_pair, find_inadmissible_point
from kb_core.galois.coordinate import (
    CoordinateAlgebra, coordinate_algebra, coordinate_morphism, is_algebraic_set, set_closure,
)
from kb_core.galois.correspondence import content, description_closure, entails, holds_on, log_kernel_contains, theory
from kb_core.galois.description import Description

__all__ = [
    "CoordinateAlgebra", "Description", "check_admissible", "check_admissible_pair", "content",
    "coordinate_algebra", "coordinate_morphism", "description_closure", "entails",
    "find_inadmissible_point", "holds_on", "is_algebraic_set", "log_kernel_contains", "set_closure",
    "theory",
]
