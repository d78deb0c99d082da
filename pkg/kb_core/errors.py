"""
kb_core/errors.py — Hijerarhija grešaka engine sloja.

Sve greške nasljeđuju KBError; CLI ih hvata na jednom mjestu i pretvara u
izlazni kod 2.
"""

from kb_core.diagnostics import SourceDiagnostic


class KBError(Exception):
    """Base class for every engine error."""


class DiagnosticError(KBError):
    """Input text is malformed; carries located diagnostics."""

    def __init__(self, diagnostics: list[SourceDiagnostic] | SourceDiagnostic):
        if isinstance(diagnostics, SourceDiagnostic):
            diagnostics = [diagnostics]
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))

    @property
    def first(self) -> SourceDiagnostic:
        return self.diagnostics[0]


class ContractError(KBError):
    """A documented precondition does not hold."""


class ContextMismatchError(ContractError):
    """Operands live over different contexts or algebras."""


class SizeLimitError(KBError):
    """A configured cap (points, elements, iterations) would be exceeded."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of size {size} exceeds the configured cap {cap}")


class FixpointCapError(SizeLimitError):
    """Fixpoint refinement created more classes than allowed."""


class SignatureMismatchError(KBError):
    """Two algebras do not share sorts and operation symbols."""


class NonHomomorphismError(KBError):
    """A sorted map breaks an operation table; the violated row is reported."""

    def __init__(self, op: str, args: tuple[str, ...], expected: str, found: str):
        self.op = op
        self.args = args
        self.expected = expected
        self.found = found
        row = f"{op}({', '.join(args)})"
        super().__init__(f"map is not a homomorphism: image of {row} should be {expected}, got {found}")


class NotAGroupError(KBError):
    """A permutation family is not closed; reports the offending pair."""

    def __init__(self, message: str, witness: tuple):
        self.witness = witness
        super().__init__(message)


class UnknownInstanceError(KBError):
    """An instance name does not exist in the multi-model."""


class MalformedWitnessError(KBError):
    """An equivalence witness is structurally invalid."""


class TranslationError(KBError):
    """A formula cannot be translated or substituted."""
