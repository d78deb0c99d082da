"""
kb_core/frontend/normalizer.py — Predobrada linija: komentari, razmaci, uvlačenje.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class SourceLine:
    number: int        # 1-based
    text: str          # comment stripped, trailing whitespace removed
    indent: int        # column of the first non-blank character, 1-based
    indented: bool


class Normalizer:
    """Cleans line-oriented input files before parsing."""

    @staticmethod
    def strip_comment(line: str) -> str:
        return line.split("#", 1)[0].rstrip()

    @staticmethod
    def split_lines(text: str) -> list[SourceLine]:
        """Non-empty lines with comments removed, keeping their original numbers."""
        out = []
        for number, raw in enumerate(text.splitlines(), start=1):
            body = Normalizer.strip_comment(raw.replace("\t", "    "))
            if not body.strip():
                continue
            indent = len(body) - len(body.lstrip())
            out.append(SourceLine(number, body.strip(), indent + 1, indent > 0))
        return out
