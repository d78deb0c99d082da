"""
kb_core/frontend/query_format.py — Query fajlovi (.kbq).

Zaglavlje `vars x:s, y:s;` otvara novi opis (X, T); svaka sljedeća linija je
jedna formula skupa T. Fajl može imati više zaglavlja.
"""

from __future__ import annotations

import re

from kb_core.algebra.signature import Signature
from kb_core.algebra.terms import Context
from kb_core.errors import ContractError
from kb_core.frontend.diagnostics import fail
from kb_core.frontend.formula_parser import parse_formula
from kb_core.frontend.normalizer import Normalizer
from kb_core.frontend.printer import format_formula
from kb_core.galois.description import Description

_VARS = re.compile(r"^vars\b([^;]*);(.*)$")


def parse_query(text: str, sig: Signature, file: str = "<string>") -> list[Description]:
    descriptions: list[Description] = []
    ctx: Context | None = None
    formulas = []
    raw_lines = text.splitlines()
    for line in Normalizer.split_lines(text):
        raw = raw_lines[line.number - 1]
        m = _VARS.match(line.text)
        if m:
            if ctx is not None:
                descriptions.append(Description(ctx, tuple(formulas)))
            try:
                ctx = Context.parse(m.group(1))
            except ContractError as err:
                raise fail(str(err), file, line.number, line.indent) from None
            for name, sort in ctx.variables:
                if sort not in sig.sorts:
                    raise fail(f"unknown sort '{sort}'", file, line.number, raw.find(sort) + 1)
            formulas = []
            rest = m.group(2)
            if rest.strip():
                offset = raw.find(";") + 1
                formulas.append(parse_formula(rest, sig, ctx, file, line.number - 1, offset))
            continue
        if line.text.startswith("vars"):
            raise fail("a 'vars' header must end with ';'", file, line.number, line.indent)
        if ctx is None:
            raise fail("formula before any 'vars' header", file, line.number, line.indent)
        body = Normalizer.strip_comment(raw)
        formulas.append(parse_formula(body, sig, ctx, file, line.number - 1, 0))
    if ctx is None:
        raise fail("query file has no 'vars' header", file, 1, 1)
    descriptions.append(Description(ctx, tuple(formulas)))
    return descriptions


def parse_single_query(text: str, sig: Signature, file: str = "<string>") -> Description:
    descriptions = parse_query(text, sig, file)
    if len(descriptions) != 1:
        raise fail(f"expected exactly one 'vars' header, found {len(descriptions)}", file, 1, 1)
    return descriptions[0]


def format_description(d: Description) -> str:
    lines = [f"vars {d.context};"]
    lines.extend(format_formula(f) for f in d.formulas)
    return "\n".join(lines) + "\n"
