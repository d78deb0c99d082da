"""
kb_core/diagnostics.py — Lokacijski dijagnostički zapisi (file:line:col).

Pydantic ugovor kao i ostali vanjski ugovori projekta: parseri ih proizvode,
CLI ih ispisuje na stderr.
"""

from typing import Literal

from pydantic import BaseModel, Field


class SourceDiagnostic(BaseModel):
    """One located message about an input file or string."""

    model_config = {"frozen": True}

    file: str = "<string>"
    line: int = Field(default=1, ge=1)
    column: int = Field(default=1, ge=1)
    message: str
    severity: Literal["error", "warning"] = "error"

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}: {self.severity}: {self.message}"

    def shifted(self, file: str, line_offset: int = 0, column_offset: int = 0) -> "SourceDiagnostic":
        """Re-anchor a diagnostic produced for an embedded snippet into its host file."""
        return self.model_copy(update={
            "file": file,
            "line": self.line + line_offset,
            "column": self.column + (column_offset if self.line == 1 else 0),
        })
