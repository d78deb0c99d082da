"""Located diagnostics for the text formats (re-exported from kb_core.diagnostics)."""

from pathlib import Path

from kb_core.diagnostics import SourceDiagnostic
from kb_core.errors import DiagnosticError


def fail(message: str, file: str = "<string>", line: int = 1, column: int = 1) -> DiagnosticError:
    return DiagnosticError(SourceDiagnostic(file=file, line=max(1, line), column=max(1, column), message=message))


def read_source(path: str | Path) -> str:
    """UTF-8 text of an input file; undecodable bytes become a located diagnostic (column counts bytes)."""
    raw = Path(path).read_bytes()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as err:
        line_start = raw.rfind(b"\n", 0, err.start) + 1
        raise fail(f"file is not valid UTF-8: {err.reason} (byte 0x{raw[err.start]:02x})", str(path),
                   raw.count(b"\n", 0, err.start) + 1, err.start - line_start + 1) from err


__all__ = ["SourceDiagnostic", "DiagnosticError", "fail", "read_source"]
