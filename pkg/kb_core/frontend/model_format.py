"""
kb_core/frontend/model_format.py — Čitanje i kanonski ispis model fajlova (.kbm).

Format je linijski; uvučene linije pripadaju prethodnom `op` ili `instance`
bloku. Kanonski redoslijed ispisa: sorts, carriers, ops, rels, identities,
instances; redovi tablica i torke leksikografski po indeksima elemenata.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from kb_core.algebra.formulas import Equal
from kb_core.algebra.points import find_identity_violation
from kb_core.algebra.signature import Identity, OpSymbol, RelSymbol, Signature
from kb_core.algebra.structures import FiniteAlgebra, Model, MultiModel
from kb_core.algebra.terms import Context
from kb_core.errors import ContractError
from kb_core.frontend.diagnostics import fail
from kb_core.frontend.formula_parser import parse_formula
from kb_core.frontend.normalizer import Normalizer, SourceLine
from kb_core.utils.logger import get_logger

logger = get_logger(__name__)

NAME = r"[A-Za-z0-9][A-Za-z0-9_']*"
_SORTS = re.compile(r"^sorts\s*:\s*(.*)$")
_CARRIER = re.compile(rf"^carrier\s+({NAME})\s*:\s*(.*)$")
_OP = re.compile(rf"^op\s+({NAME})\s*(?:\(([^)]*)\))?\s*->\s*({NAME})\s*:$")
_REL = re.compile(rf"^rel\s+({NAME})\s*\(([^)]*)\)$")
_IDENTITY = re.compile(r"^identity\s+([^;]*);(.*)$")
_INSTANCE = re.compile(rf"^instance\s+({NAME})\s*:$")
_ROW = re.compile(r"^(.*?)=\s*(\S+)$")
_REL_LINE = re.compile(rf"^({NAME})\s*:(.*)$")
_TUPLE = re.compile(r"\(([^()]*)\)")


@dataclass
class _OpBlock:
    symbol: OpSymbol
    line: SourceLine
    rows: dict[tuple[str, ...], str] = field(default_factory=dict)
    row_lines: dict[tuple[str, ...], SourceLine] = field(default_factory=dict)


@dataclass
class _InstanceBlock:
    name: str
    line: SourceLine
    tuples: dict[str, list[tuple[str, ...]]] = field(default_factory=dict)


def _split_names(text: str) -> list[str]:
    return [p for p in re.split(r"[\s,]+", text.strip()) if p]


class ModelFileParser:
    """One-shot parser; use `parse_model`."""

    def __init__(self, text: str, file: str):
        self.text = text
        self.file = file
        self.sorts: list[str] = []
        self.carriers: dict[str, tuple[str, ...]] = {}
        self.ops: list[_OpBlock] = []
        self.rels: list[RelSymbol] = []
        self.identity_lines: list[tuple[SourceLine, str, str]] = []
        self.instances: list[_InstanceBlock] = []
        self._block: _OpBlock | _InstanceBlock | None = None

    def error(self, message: str, line: SourceLine, column: int | None = None):
        return fail(message, self.file, line.number, column or line.indent)

    def col(self, line: SourceLine, fragment: str) -> int:
        raw = self.text.splitlines()[line.number - 1]
        pos = raw.find(fragment)
        return pos + 1 if pos >= 0 else line.indent

    def check_sorts(self, sorts: list[str], line: SourceLine) -> tuple[str, ...]:
        for s in sorts:
            if s not in self.sorts:
                raise self.error(f"unknown sort '{s}'", line, self.col(line, s))
        return tuple(sorts)

    # --- linije ---

    def parse(self) -> MultiModel:
        for line in Normalizer.split_lines(self.text):
            if line.indented and self._block is not None:
                self.block_line(line)
            else:
                self._block = None
                self.header_line(line)
        return self.build()

    def header_line(self, line: SourceLine) -> None:
        text = line.text
        if m := _SORTS.match(text):
            if self.sorts:
                raise self.error("sorts declared twice", line)
            names = _split_names(m.group(1))
            if not names:
                raise self.error("no sorts declared", line)
            for s in names:
                if s in self.sorts:
                    raise self.error(f"duplicate name: sort '{s}'", line, self.col(line, s))
                self.sorts.append(s)
        elif m := _CARRIER.match(text):
            sort = m.group(1)
            self.check_sorts([sort], line)
            if sort in self.carriers:
                raise self.error(f"duplicate name: carrier for sort '{sort}'", line)
            elems = _split_names(m.group(2))
            if not elems:
                raise self.error(f"carrier of sort '{sort}' is empty", line)
            for i, e in enumerate(elems):
                if e in elems[:i]:
                    raise self.error(f"duplicate name: element '{e}'", line, self.col(line, e))
            self.carriers[sort] = tuple(elems)
        elif m := _OP.match(text):
            name, args, result = m.group(1), m.group(2) or "", m.group(3)
            if any(o.symbol.name == name for o in self.ops):
                raise self.error(f"duplicate name: operation '{name}'", line, self.col(line, name))
            symbol = OpSymbol(name, self.check_sorts(_split_names(args), line), self.check_sorts([result], line)[0])
            block = _OpBlock(symbol, line)
            self.ops.append(block)
            self._block = block
        elif m := _REL.match(text):
            name = m.group(1)
            if any(r.name == name for r in self.rels):
                raise self.error(f"duplicate name: relation '{name}'", line, self.col(line, name))
            sorts = _split_names(m.group(2))
            if not sorts:
                raise self.error(f"relation '{name}' needs at least one argument sort", line)
            self.rels.append(RelSymbol(name, self.check_sorts(sorts, line)))
        elif m := _IDENTITY.match(text):
            self.identity_lines.append((line, m.group(1), m.group(2)))
        elif m := _INSTANCE.match(text):
            name = m.group(1)
            if any(i.name == name for i in self.instances):
                raise self.error(f"duplicate name: instance '{name}'", line, self.col(line, name))
            block = _InstanceBlock(name, line)
            self.instances.append(block)
            self._block = block
        elif line.indented:
            raise self.error("indented line outside an op or instance block", line)
        else:
            raise self.error(f"unrecognised declaration '{text.split()[0]}'", line)

    def block_line(self, line: SourceLine) -> None:
        block = self._block
        if isinstance(block, _OpBlock):
            m = _ROW.match(line.text)
            if not m:
                raise self.error(f"expected a table row 'a1 ... an = r' for {block.symbol.name}", line)
            args = tuple(_split_names(m.group(1)))
            result = m.group(2)
            symbol = block.symbol
            if len(args) != symbol.arity:
                raise self.error(f"type-mismatched row: {symbol.name} takes {symbol.arity} arguments, got {len(args)}", line)
            for a, s in zip(args + (result,), symbol.arg_sorts + (symbol.result_sort,)):
                if s in self.carriers and a not in self.carriers[s]:
                    raise self.error(f"'{a}' is not in the carrier of sort {s}", line, self.col(line, a))
            if args in block.rows:
                raise self.error(f"duplicate row {symbol.name}({', '.join(args)})", line)
            block.rows[args] = result
            block.row_lines[args] = line
            return
        m = _REL_LINE.match(line.text)
        if not m:
            raise self.error("expected '<rel>: (e1,...) ...' in instance block", line)
        rel = next((r for r in self.rels if r.name == m.group(1)), None)
        if rel is None:
            raise self.error(f"unknown relation '{m.group(1)}'", line)
        if rel.name in block.tuples:
            raise self.error(f"duplicate name: relation '{rel.name}' listed twice in instance {block.name}", line)
        rest = m.group(2)
        if _TUPLE.sub("", rest).strip():
            raise self.error("tuples must be written as (e1,...,en)", line, self.col(line, rest.strip()))
        rows = []
        for tm in _TUPLE.finditer(rest):
            elems = tuple(_split_names(tm.group(1)))
            column = self.col(line, tm.group(0))
            if len(elems) != rel.arity:
                raise self.error(f"type-mismatched tuple for {rel.name}: expected {rel.arity} elements", line, column)
            for e, s in zip(elems, rel.arg_sorts):
                if e not in self.carriers.get(s, ()):
                    raise self.error(f"type-mismatched tuple: '{e}' is not in the carrier of sort {s}", line, column)
            rows.append(elems)
        block.tuples[rel.name] = rows

    # --- izgradnja ---

    def build(self) -> MultiModel:
        if not self.sorts:
            raise fail("no 'sorts:' declaration", self.file, 1, 1)
        for s in self.sorts:
            if s not in self.carriers:
                raise fail(f"sort '{s}' has no carrier", self.file, 1, 1)
        # redovi pročitani prije deklaracije nosača
        for block in self.ops:
            symbol = block.symbol
            for args, result in block.rows.items():
                line = block.row_lines[args]
                for a, s in zip(args + (result,), symbol.arg_sorts + (symbol.result_sort,)):
                    if a not in self.carriers[s]:
                        raise self.error(f"'{a}' is not in the carrier of sort {s}", line, self.col(line, a))
        for block in self.ops:
            for args in itertools.product(*(self.carriers[s] for s in block.symbol.arg_sorts)):
                if args not in block.rows:
                    row = f"{block.symbol.name}({', '.join(args)})"
                    raise self.error(f"operation table not total: missing row {row}", block.line, self.col(block.line, block.symbol.name))
        base = Signature(tuple(self.sorts), tuple(b.symbol for b in self.ops))
        identities = []
        for line, ctx_text, equation in self.identity_lines:
            try:
                ctx = Context.parse(ctx_text)
            except ContractError as err:
                raise self.error(str(err), line) from None
            raw = self.text.splitlines()[line.number - 1]
            offset = raw.find(";") + 1
            eq = parse_formula(equation, base, ctx, self.file, line.number - 1, offset)
            if not isinstance(eq, Equal):
                raise self.error("an identity must be a single equation 'lhs == rhs'", line)
            identities.append((line, Identity(ctx, eq.left, eq.right)))
        try:
            sig = Signature(base.sorts, base.ops, (), tuple(i for _, i in identities))
        except ContractError as err:
            raise fail(str(err), self.file, identities[0][0].number if identities else 1, 1) from None
        algebra = FiniteAlgebra.from_rows(sig, self.carriers, {b.symbol.name: b.rows for b in self.ops})
        violation = find_identity_violation(algebra)
        if violation is not None:
            ident, point = violation
            line = next(l for l, i in identities if i == ident)
            raise self.error(f"identity {ident.lhs} == {ident.rhs} fails at {point.format(algebra)}", line)
        rels = tuple(self.rels)
        instances = tuple(Model.build(b.name, algebra, rels, b.tuples) for b in self.instances)
        logger.debug("parsed %s: %d sorts, %d ops, %d rels, %d instances",
                     self.file, len(self.sorts), len(self.ops), len(rels), len(instances))
        return MultiModel(algebra, rels, instances)


def parse_model(text: str, file: str = "<string>") -> MultiModel:
    """Parses a model file into a MultiModel; malformed input raises DiagnosticError."""
    return ModelFileParser(text, file).parse()


def serialize_model(mm: MultiModel) -> str:
    """Canonical text; parse_model(serialize_model(m)) == m."""
    alg = mm.algebra
    sig = alg.signature
    out = [f"sorts: {', '.join(alg.sorts)}"]
    for sort in alg.sorts:
        out.append(f"carrier {sort}: {' '.join(alg.carrier(sort))}")
    for op in sig.ops:
        out.append(f"op {op.name}({','.join(op.arg_sorts)}) -> {op.result_sort}:")
        for args, result in alg.rows(op.name):
            names = " ".join(alg.element(s, a) for s, a in zip(op.arg_sorts, args))
            lhs = f"{names} " if names else ""
            out.append(f"  {lhs}= {alg.element(op.result_sort, result)}")
    for rel in mm.rels:
        out.append(f"rel {rel.name}({','.join(rel.arg_sorts)})")
    for ident in sig.identities:
        out.append(f"identity {ident.context}; {ident.lhs} == {ident.rhs}")
    for inst in mm.instances:
        out.append(f"instance {inst.name}:")
        for rel in mm.rels:
            tuples = " ".join(
                "(" + ",".join(alg.element(s, i) for s, i in zip(rel.arg_sorts, tup)) + ")"
                for tup in inst.sorted_tuples(rel.name)
            )
            out.append(f"  {rel.name}: {tuples}".rstrip())
    return "\n".join(out) + "\n"
