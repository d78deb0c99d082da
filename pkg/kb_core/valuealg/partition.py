"""
kb_core/valuealg/partition.py — Particije prostora tačaka.

Blokovi su poredani po najmanjem indeksu tačke; dvije particije su jednake
ako i samo ako su im kanonske labele jednake.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from kb_core.algebra.points import PointSpace
from kb_core.errors import ContractError
from kb_core.semantics.pointset import PointSet


def canonical_labels(labels: np.ndarray) -> np.ndarray:
    """Relabels classes 0, 1, ... in order of their first point."""
    labels = np.asarray(labels).reshape(-1)
    if labels.size == 0:
        return labels.astype(np.int64)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(first.size)
    return rank[inverse.reshape(-1)]


@dataclass(frozen=True)
class Partition:
    space: PointSpace
    labels: tuple[int, ...]

    @classmethod
    def from_labels(cls, space: PointSpace, labels: np.ndarray) -> "Partition":
        labels = np.asarray(labels).reshape(-1)
        if labels.size != space.size:
            raise ContractError(f"{labels.size} labels for a space of {space.size} points")
        return cls(space, tuple(int(v) for v in canonical_labels(labels)))

    @classmethod
    def from_blocks(cls, space: PointSpace, blocks: list[PointSet]) -> "Partition":
        """Checks that the blocks are nonempty, pairwise disjoint and cover the space."""
        labels = np.full(space.size, -1, dtype=np.int64)
        for k, block in enumerate(blocks):
            if block.space != space:
                raise ContractError("block lives in another point space")
            mask = block.mask()
            if not mask.any():
                raise ContractError("partition block is empty")
            if (labels[mask] >= 0).any():
                raise ContractError("partition blocks overlap")
            labels[mask] = k
        if (labels < 0).any():
            raise ContractError("partition blocks do not cover the space")
        return cls.from_labels(space, labels)

    @cached_property
    def label_array(self) -> np.ndarray:
        arr = np.asarray(self.labels, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def blocks(self) -> tuple[PointSet, ...]:
        arr = self.label_array
        return tuple(PointSet.from_mask(self.space, arr == k) for k in range(len(self)))

    def __len__(self) -> int:
        return (max(self.labels) + 1) if self.labels else 0

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.blocks)

    def block_of(self, index: int) -> PointSet:
        return self.blocks[self.labels[index]]

    def is_union_of_blocks(self, A: PointSet) -> bool:
        mask = A.mask()
        inside = np.unique(self.label_array[mask])
        outside = np.unique(self.label_array[~mask])
        return np.intersect1d(inside, outside).size == 0

    def refines(self, other: "Partition") -> bool:
        """Every block of self lies inside a block of other."""
        if other.space != self.space:
            raise ContractError("partitions of different point spaces")
        pairs = np.unique(np.stack([self.label_array, other.label_array], axis=1), axis=0)
        return pairs.shape[0] == len(self)

    def format_lines(self) -> list[str]:
        return [block.format_inline() for block in self.blocks]

    def format(self) -> str:
        return "\n".join(self.format_lines())
