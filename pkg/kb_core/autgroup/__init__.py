"""
kb_core.autgroup — Grupe automorfizama, izomorfizmi algebri i automorfna ekvivalencija.
"""

from kb_core.algebra.morphisms import SortedBijection
from kb_core.autgroup.equivalence import (
    EquivalenceVerdict, automorphic_equivalent, decide_equivalence,
    multimodel_equivalent, multimodel_isomorphic, ordered_map,
)
from kb_core.autgroup.group import PermutationGroup, algebra_automorphism_group, automorphism_group, naive_automorphism_group
from kb_core.autgroup.matching import max_bipartite_matching, perfect_matching
from kb_core.autgroup.search import algebra_isomorphisms, model_isomorphisms, naive_isomorphisms
from kb_core.autgroup.witness import EquivalenceWitness

__all__ = [
    "EquivalenceVerdict", "EquivalenceWitness", "PermutationGroup", "SortedBijection",
    "algebra_automorphism_group", "algebra_isomorphisms", "automorphic_equivalent",
    "automorphism_group", "decide_equivalence", "max_bipartite_matching", "model_isomorphisms",
    "multimodel_equivalent", "multimodel_isomorphic", "naive_automorphism_group",
    "naive_isomorphisms", "ordered_map", "perfect_matching",
]
