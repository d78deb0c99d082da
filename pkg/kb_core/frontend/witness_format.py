"""
kb_core/frontend/witness_format.py — Fajlovi svjedoka ekvivalencije (.kbw).

    alpha: f1 -> g1
    delta f1 -> g1: sort s: e1->e1 e2->e2 e3->e3
    beta f1: P(x) := not Q(x)
    beta' f1: Q(x) := not P(x) ; bound z:s

`beta` definiše relacije lijeve signature formulama nad desnom, `beta'` obrnuto.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from kb_core.algebra.morphisms import SortedBijection
from kb_core.algebra.signature import Signature
from kb_core.algebra.structures import MultiModel
from kb_core.algebra.terms import Context
from kb_core.autgroup.witness import EquivalenceWitness
from kb_core.errors import ContractError, KBError
from kb_core.frontend.diagnostics import fail
from kb_core.frontend.formula_parser import parse_formula
from kb_core.frontend.normalizer import Normalizer, SourceLine
from kb_core.translate.interpretation import Definition, Interpretation

NAME = r"[A-Za-z0-9][A-Za-z0-9_']*"
_ALPHA = re.compile(rf"^alpha\s*:\s*({NAME})\s*->\s*({NAME})$")
_DELTA = re.compile(rf"^delta\s+({NAME})\s*->\s*({NAME})\s*:\s*sort\s+({NAME})\s*:(.*)$")
_BETA = re.compile(rf"^(beta'?)\s+({NAME})\s*:\s*({NAME})\s*\(([^)]*)\)\s*:=(.*)$")
_BOUND = re.compile(r"^(.*?);\s*bound\b(.*)$")


@dataclass
class _Pair:
    left: str
    right: str
    line: SourceLine
    components: dict[str, dict[str, str]] = field(default_factory=dict)
    component_lines: dict[str, SourceLine] = field(default_factory=dict)
    betas: list[Definition] = field(default_factory=list)
    betas_back: list[Definition] = field(default_factory=list)
    beta_line: SourceLine | None = None
    beta_back_line: SourceLine | None = None


class WitnessFileParser:
    """One-shot parser; use `parse_witness`."""

    def __init__(self, text: str, left: MultiModel, right: MultiModel, file: str):
        self.text = text
        self.left = left
        self.right = right
        self.file = file
        self.pairs: dict[str, _Pair] = {}

    def error(self, message: str, line: SourceLine, column: int | None = None):
        return fail(message, self.file, line.number, column if column is not None else line.indent)

    def parse(self) -> EquivalenceWitness:
        for line in Normalizer.split_lines(self.text):
            if m := _ALPHA.match(line.text):
                self._alpha(line, m)
            elif m := _DELTA.match(line.text):
                self._delta(line, m)
            elif m := _BETA.match(line.text):
                self._beta(line, m)
            else:
                raise self.error("expected an 'alpha', 'delta', 'beta' or \"beta'\" line", line)
        if not self.pairs:
            raise fail("witness file has no 'alpha' line", self.file, 1, 1)
        return self._build()

    def _column(self, line: SourceLine, m: re.Match, group: int) -> int:
        return line.indent + m.start(group)

    def _alpha(self, line: SourceLine, m: re.Match) -> None:
        left, right = m.group(1), m.group(2)
        if left not in self.left.names:
            raise self.error(f"unknown left instance '{left}'", line, self._column(line, m, 1))
        if right not in self.right.names:
            raise self.error(f"unknown right instance '{right}'", line, self._column(line, m, 2))
        if left in self.pairs:
            raise self.error(f"instance '{left}' already has an alpha image", line)
        self.pairs[left] = _Pair(left, right, line)

    def _delta(self, line: SourceLine, m: re.Match) -> None:
        left, right, sort = m.group(1), m.group(2), m.group(3)
        pair = self.pairs.get(left)
        if pair is None:
            raise self.error(f"no alpha line for instance '{left}' before this line", line, self._column(line, m, 1))
        if pair.right != right:
            raise self.error(f"delta {left} -> {right} does not match alpha {left} -> {pair.right}", line,
                             self._column(line, m, 2))
        if sort not in self.left.algebra.sorts:
            raise self.error(f"unknown sort '{sort}'", line, self._column(line, m, 3))
        if sort in pair.components:
            raise self.error(f"sort '{sort}' of delta {left} -> {right} given twice", line)
        mapping: dict[str, str] = {}
        for token in m.group(4).split():
            source, arrow, target = token.partition("->")
            if not arrow or not source or not target:
                raise self.error(f"expected 'element->element', got '{token}'", line)
            if source in mapping:
                raise self.error(f"element '{source}' mapped twice", line)
            mapping[source] = target
        pair.components[sort] = mapping
        pair.component_lines[sort] = line

    def _beta(self, line: SourceLine, m: re.Match) -> None:
        kind, left, rel = m.group(1), m.group(2), m.group(3)
        pair = self.pairs.get(left)
        if pair is None:
            raise self.error(f"no alpha line for instance '{left}' before this line", line, self._column(line, m, 2))
        back = kind == "beta'"
        source = self.right.signature if back else self.left.signature
        target = self.left.signature if back else self.right.signature
        symbol = source.rel(rel)
        if symbol is None:
            raise self.error(f"'{rel}' is not a relation of the {'right' if back else 'left'} signature", line,
                             self._column(line, m, 3))
        names = [p.strip() for p in m.group(4).split(",") if p.strip()]
        if len(names) != symbol.arity:
            raise self.error(f"arity mismatch: {rel} expects {symbol.arity} parameters, got {len(names)}", line,
                             self._column(line, m, 4))
        rest = m.group(5)
        body_text, bound_text = rest, ""
        if b := _BOUND.match(rest):
            body_text, bound_text = b.group(1), b.group(2)
        try:
            params = Context(tuple(zip(names, symbol.arg_sorts)))
            bound = Context.parse(bound_text) if bound_text.strip() else Context()
            for name, sort in bound.variables:
                if sort not in target.sorts:
                    raise ContractError(f"unknown sort '{sort}'")
            scope = params.extend(bound.variables)
        except ContractError as err:
            raise self.error(str(err), line) from None
        body = parse_formula(body_text, target, scope, self.file, line.number - 1, self._column(line, m, 5) - 1)
        try:
            definition = Definition(symbol, params, body, bound)
        except ContractError as err:
            raise self.error(str(err), line) from None
        if back:
            pair.betas_back.append(definition)
            pair.beta_back_line = pair.beta_back_line or line
        else:
            pair.betas.append(definition)
            pair.beta_line = pair.beta_line or line

    def _interpretation(self, source: Signature, target: Signature, defs: list[Definition],
                        line: SourceLine) -> Interpretation:
        try:
            return Interpretation(source, target, tuple(defs))
        except ContractError as err:
            raise self.error(str(err), line) from None

    def _build(self) -> EquivalenceWitness:
        alpha, deltas, betas, betas_back = [], [], [], []
        order = {name: i for i, name in enumerate(self.left.names)}
        for pair in sorted(self.pairs.values(), key=lambda p: order[p.left]):
            alpha.append((pair.left, pair.right))
            where = next(iter(pair.component_lines.values()), pair.line)
            missing = [s for s in self.left.algebra.sorts if s not in pair.components]
            if missing:
                raise self.error(f"delta {pair.left} -> {pair.right} has no component for sort '{missing[0]}'", where)
            try:
                delta = SortedBijection.from_names(self.left.algebra, self.right.algebra, pair.components)
            except KBError as err:
                raise self.error(f"delta {pair.left} -> {pair.right}: {err}", where) from None
            deltas.append((pair.left, delta))
            if pair.betas:
                betas.append((pair.left, self._interpretation(
                    self.left.signature, self.right.signature, pair.betas, pair.beta_line)))
            if pair.betas_back:
                betas_back.append((pair.left, self._interpretation(
                    self.right.signature, self.left.signature, pair.betas_back, pair.beta_back_line)))
        return EquivalenceWitness(tuple(alpha), tuple(deltas), tuple(betas), tuple(betas_back))


def parse_witness(text: str, left: MultiModel, right: MultiModel, file: str = "<string>") -> EquivalenceWitness:
    return WitnessFileParser(text, left, right, file).parse()


def format_witness(w: EquivalenceWitness) -> str:
    """Canonical witness text: alpha lines, then per pair its delta, beta and beta' lines."""
    lines = [f"alpha: {f} -> {g}" for f, g in w.alpha]
    for f, g in w.alpha:
        delta = w.delta(f)
        for sort, comp in zip(delta.source.sorts, delta.components):
            pairs = " ".join(f"{delta.source.element(sort, i)}->{delta.target.element(sort, v)}"
                             for i, v in enumerate(comp))
            lines.append(f"delta {f} -> {g}: sort {sort}: {pairs}")
        beta, beta_back = w.beta(f), w.beta_back(f)
        if beta is not None:
            lines.extend(f"beta {f}: {d.format()}" for d in beta.definitions)
        if beta_back is not None:
            lines.extend(f"beta' {f}: {d.format()}" for d in beta_back.definitions)
    return "\n".join(lines) + "\n"
