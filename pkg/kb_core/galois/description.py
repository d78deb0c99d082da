from dataclasses import dataclass

from kb_core.algebra.formulas import Formula
from kb_core.algebra.terms import Context


@dataclass(frozen=True)
class Description:
    """(X, T): a finite, ordered set of formulas over one context."""

    context: Context
    formulas: tuple[Formula, ...] = ()

    def __post_init__(self):
        # keep user order, drop repeats
        object.__setattr__(self, "formulas", tuple(dict.fromkeys(self.formulas)))

    def __len__(self) -> int:
        return len(self.formulas)

    def __iter__(self):
        return iter(self.formulas)

    def extended(self, *formulas: Formula) -> "Description":
        return Description(self.context, self.formulas + tuple(formulas))
