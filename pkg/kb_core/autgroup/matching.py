from typing import Optional, Sequence, TypeVar

X = TypeVar("X")
Y = TypeVar("Y")


def max_bipartite_matching(xs: Sequence[X], ys: Sequence[Y], edges: set[tuple[X, Y]]) -> dict[X, Y]:
    """Augmenting-path matching; deterministic for fixed input order."""

    # matching[j] = x if (x, ys[j]) is matched
    matching: list[Optional[X]] = [None] * len(ys)

    def search(x: X, seen: list[bool]) -> bool:
        for j, y in enumerate(ys):
            if (x, y) in edges and not seen[j]:
                seen[j] = True
                if matching[j] is None or search(matching[j], seen):
                    matching[j] = x
                    return True
        return False

    for x in xs:
        search(x, [False] * len(ys))

    pairs = {x: ys[j] for j, x in enumerate(matching) if x is not None}
    return {x: pairs[x] for x in xs if x in pairs}


def perfect_matching(xs: Sequence[X], ys: Sequence[Y], edges: set[tuple[X, Y]]) -> dict[X, Y] | None:
    if len(xs) != len(ys):
        return None
    matched = max_bipartite_matching(xs, ys, edges)
    return matched if len(matched) == len(xs) else None
