"""
kb_core/semantics/pointset.py — Skup tačaka kao gusti bit-vektor nad G^X.

Bit i pripada i-toj tački u redoslijedu enumerate_points. Python int drži
bitove, numpy maska se koristi za vektorske operacije.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from kb_core.algebra.points import Assignment, PointSpace
from kb_core.errors import ContextMismatchError, ContractError


@dataclass(frozen=True)
class PointSet:
    space: PointSpace
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.space.size:
            raise ContractError("point set has bits outside its point space")

    # --- konstrukcija ---

    @classmethod
    def empty(cls, space: PointSpace) -> "PointSet":
        return cls(space, 0)

    @classmethod
    def full(cls, space: PointSpace) -> "PointSet":
        return cls(space, (1 << space.size) - 1)

    @classmethod
    def from_mask(cls, space: PointSpace, mask: np.ndarray) -> "PointSet":
        mask = np.asarray(mask, dtype=bool).reshape(-1)
        if mask.size != space.size:
            raise ContractError(f"mask of length {mask.size} for a space of {space.size} points")
        packed = np.packbits(mask, bitorder="little").tobytes()
        return cls(space, int.from_bytes(packed, "little"))

    @classmethod
    def from_indices(cls, space: PointSpace, indices: Iterable[int]) -> "PointSet":
        bits = 0
        for i in indices:
            if not 0 <= i < space.size:
                raise ContractError(f"point index {i} outside a space of {space.size} points")
            bits |= 1 << i
        return cls(space, bits)

    @classmethod
    def from_assignments(cls, space: PointSpace, points: Iterable[Assignment]) -> "PointSet":
        return cls.from_indices(space, (space.index(p) for p in points))

    # --- pristup ---

    @property
    def context(self):
        return self.space.context

    @property
    def algebra(self):
        return self.space.algebra

    def mask(self) -> np.ndarray:
        n = self.space.size
        raw = self.bits.to_bytes((n + 7) // 8, "little")
        return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n].astype(bool)

    def indices(self) -> Iterator[int]:
        for i in np.flatnonzero(self.mask()):
            yield int(i)

    def points(self) -> Iterator[Assignment]:
        return (self.space.assignment(i) for i in self.indices())

    def first(self) -> int | None:
        if not self.bits:
            return None
        return (self.bits & -self.bits).bit_length() - 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, point: int | Assignment) -> bool:
        if isinstance(point, Assignment):
            point = self.space.index(point)
        return bool(self.bits >> point & 1)

    def is_empty(self) -> bool:
        return self.bits == 0

    def is_full(self) -> bool:
        return self.bits == (1 << self.space.size) - 1

    # --- Booleove operacije ---

    def _check(self, other: "PointSet") -> None:
        if not isinstance(other, PointSet):
            raise ContractError(f"expected a PointSet, got {type(other).__name__}")
        if other.space != self.space:
            raise ContextMismatchError(
                f"point sets over ({self.context}) and ({other.context}) or different algebras cannot be combined"
            )

    def __and__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.space, self.bits & other.bits)

    def __or__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.space, self.bits | other.bits)

    def __xor__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.space, self.bits ^ other.bits)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.space, self.bits & ~other.bits)

    def __invert__(self) -> "PointSet":
        return PointSet(self.space, ((1 << self.space.size) - 1) ^ self.bits)

    def issubset(self, other: "PointSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    __le__ = issubset

    # --- ispis ---

    def format_lines(self) -> list[str]:
        return [self.space.format_point(i) for i in self.indices()]

    def format(self) -> str:
        return "\n".join(self.format_lines())

    def format_inline(self) -> str:
        return " | ".join(self.format_lines())

    def __repr__(self) -> str:
        return f"PointSet(({self.context}), {{{self.format_inline()}}})"
