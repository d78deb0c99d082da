"""
kb_core.semantics — Konkretna Halmos kategorija: skupovi tačaka, Val_f, kvantifikatori, transporti.
"""

from kb_core.semantics.evaluator import exists_quant, semantically_equivalent, val, val_mask
from kb_core.semantics.pointset import PointSet
from kb_core.semantics.transport import transport_hom, transport_subst

__all__ = ["PointSet", "exists_quant", "semantically_equivalent", "transport_hom", "transport_subst", "val", "val_mask"]
