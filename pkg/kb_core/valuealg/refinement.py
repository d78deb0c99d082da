"""
kb_core/valuealg/refinement.py — Stabilno bojenje prostora tačaka.

Boja tačke se profinjuje skupom boja na svakoj osi kroz tu tačku. Stabilna
particija je tačno skup atoma Booleove algebre zatvorene na komplement,
presjek i ∃x za sve ose.
"""

from __future__ import annotations

import numpy as np

from kb_core.errors import FixpointCapError
from kb_core.utils.logger import get_logger

logger = get_logger(__name__)


def combine(*columns: np.ndarray) -> np.ndarray:
    """Dense class ids of the tuple (c1[p], c2[p], ...) for every point p."""
    stacked = np.stack([np.asarray(c, dtype=np.int64).reshape(-1) for c in columns], axis=1)
    if stacked.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    _, inverse = np.unique(stacked, axis=0, return_inverse=True)
    return inverse.reshape(-1).astype(np.int64)


def row_set_ids(rows: np.ndarray) -> np.ndarray:
    """Id per row such that two rows get the same id iff they hold the same set of values."""
    if rows.shape[1] == 0:
        return np.zeros(rows.shape[0], dtype=np.int64)
    ordered = np.sort(rows, axis=1)
    repeated = np.zeros_like(ordered, dtype=bool)
    repeated[:, 1:] = ordered[:, 1:] == ordered[:, :-1]
    # a repeat is replaced by the row maximum, which is already present
    canon = np.where(repeated, ordered[:, -1:], ordered)
    canon = np.sort(canon, axis=1)
    _, inverse = np.unique(canon, axis=0, return_inverse=True)
    return inverse.reshape(-1).astype(np.int64)


def line_signature(colours: np.ndarray, radices: tuple[int, ...], axis: int) -> np.ndarray:
    """For every point, an id of the set of colours on its line along `axis`."""
    cube = colours.reshape(radices)
    moved = np.moveaxis(cube, axis, -1)
    rows = moved.reshape(-1, radices[axis])
    ids = row_set_ids(rows)
    spread = np.repeat(ids[:, None], radices[axis], axis=1).reshape(moved.shape)
    return np.moveaxis(spread, -1, axis).reshape(-1)


def stable_refinement(colours: np.ndarray, radices: tuple[int, ...], axes: list[int] | None = None,
                      max_classes: int = 10 ** 6) -> np.ndarray:
    """Refines until the number of classes stops growing."""
    axes = list(range(len(radices))) if axes is None else axes
    colours = combine(colours)
    count = int(colours.max()) + 1 if colours.size else 0
    rounds = 0
    while True:
        if count > max_classes:
            raise FixpointCapError("refinement classes", count, max_classes)
        signatures = [line_signature(colours, radices, a) for a in axes]
        refined = combine(colours, *signatures) if signatures else colours
        new_count = int(refined.max()) + 1 if refined.size else 0
        rounds += 1
        if new_count == count:
            logger.debug("refinement stable after %d rounds with %d classes", rounds, count)
            return refined
        colours, count = refined, new_count
