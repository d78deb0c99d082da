"""
kb_core.valuealg — Algebra definabilnih skupova R_f, njeni atomi i orbitne particije.
"""

from kb_core.valuealg.definable import DefinableAlgebra, atoms, default_aux, generate_definable_algebra
from kb_core.valuealg.halmos import HalmosIsomorphismReport, halmos_isomorphism
from kb_core.valuealg.orbits import is_invariant, orbit_partition
from kb_core.valuealg.partition import Partition

__all__ = [
    "DefinableAlgebra", "HalmosIsomorphismReport", "Partition", "atoms", "default_aux",
    "generate_definable_algebra", "halmos_isomorphism", "is_invariant", "orbit_partition",
]
