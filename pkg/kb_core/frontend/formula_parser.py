"""
kb_core/frontend/formula_parser.py — Parser formula (lark, Earley).

Gramatika je stratificirana tako da tijelo kvantifikatora ide maksimalno
udesno, a prioritet je not > and > or. Provjera sortova radi se pri
obilasku stabla; greške nose tačnu poziciju tokena.
"""

from __future__ import annotations

from lark import Lark, Token, Tree
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from kb_core.algebra.formulas import FALSE, TRUE, And, Equal, Exists, Formula, Not, Or, RelAtom, forall
from kb_core.algebra.signature import Signature
from kb_core.algebra.terms import App, Context, Term, Var
from kb_core.frontend.diagnostics import SourceDiagnostic, fail
from kb_core.errors import DiagnosticError

FORMULA_GRAMMAR = r"""
    ?formula: disj_q

    ?disj_q: conj_q
           | disj "or" conj_q                  -> disjunction
    ?disj: conj
         | disj "or" conj                      -> disjunction

    ?conj_q: neg_q
           | conj "and" neg_q                  -> conjunction
    ?conj: neg
         | conj "and" neg                      -> conjunction

    ?neg_q: neg | qneg
    ?qneg: quantified
         | "not" qneg                          -> negation
    ?neg: "not" neg                            -> negation
        | primary

    ?primary: "true"                           -> truth
            | "false"                          -> falsity
            | term "==" term                   -> equality
            | NAME "(" term ("," term)* ")"    -> relation
            | "(" formula ")"

    quantified: "exists" NAME "." formula      -> exists_
              | "forall" NAME "." formula      -> forall_

    ?term: NAME                                -> name_term
         | NAME "(" [term ("," term)*] ")"     -> application

    NAME: /[A-Za-z][A-Za-z0-9_']*/

    %import common.WS
    %ignore WS
"""

_parser = Lark(FORMULA_GRAMMAR, start="formula", parser="earley", lexer="basic", propagate_positions=True)


class FormulaBuilder:
    """Walks a lark tree into a well-sorted Formula over (signature, context)."""

    def __init__(self, sig: Signature, ctx: Context, file: str, line_offset: int, column_offset: int):
        self.sig = sig
        self.ctx = ctx
        self.file = file
        self.line_offset = line_offset
        self.column_offset = column_offset

    def error(self, message: str, where: Token | Tree) -> DiagnosticError:
        if isinstance(where, Token):
            line, column = where.line, where.column
        else:
            line, column = getattr(where.meta, "line", 1), getattr(where.meta, "column", 1)
        line = line or 1
        column = column or 1
        if line == 1:
            column += self.column_offset
        return fail(message, self.file, line + self.line_offset, column)

    # --- termi ---

    def term(self, node: Tree) -> Term:
        if node.data == "name_term":
            token = node.children[0]
            name = str(token)
            constant = self.sig.op(name)
            if name in self.ctx:
                if constant is not None:
                    raise self.error(f"variable '{name}' shadows the constant of the same name", token)
                return self.ctx.var(name)
            if constant is None:
                raise self.error(f"unknown symbol '{name}'", token)
            if constant.arity:
                raise self.error(f"arity mismatch: {name} expects {constant.arity} arguments, got 0", token)
            return App(name, (), constant.result_sort)
        # application
        token = node.children[0]
        args = [self.term(c) for c in node.children[1:] if c is not None]
        symbol = self.sig.op(str(token))
        if symbol is None:
            raise self.error(f"unknown operation '{token}'", token)
        if len(args) != symbol.arity:
            raise self.error(f"arity mismatch: {symbol.name} expects {symbol.arity} arguments, got {len(args)}", token)
        for i, (arg, sort) in enumerate(zip(args, symbol.arg_sorts), start=1):
            if arg.sort != sort:
                raise self.error(f"sort mismatch: argument {i} of {symbol.name} must be {sort}, got {arg.sort}", token)
        return App(symbol.name, tuple(args), symbol.result_sort)

    # --- formule ---

    def formula(self, node: Tree) -> Formula:
        kind = node.data
        if kind == "truth":
            return TRUE
        if kind == "falsity":
            return FALSE
        if kind == "negation":
            return Not(self.formula(node.children[0]))
        if kind == "conjunction":
            return And(self.formula(node.children[0]), self.formula(node.children[1]))
        if kind == "disjunction":
            return Or(self.formula(node.children[0]), self.formula(node.children[1]))
        if kind == "equality":
            left, right = self.term(node.children[0]), self.term(node.children[1])
            if left.sort != right.sort:
                raise self.error(f"sort mismatch: '{left}' has sort {left.sort}, '{right}' has sort {right.sort}", node)
            return Equal(left, right)
        if kind == "relation":
            token = node.children[0]
            symbol = self.sig.rel(str(token))
            if symbol is None:
                raise self.error(f"unknown relation '{token}'", token)
            args = [self.term(c) for c in node.children[1:]]
            if len(args) != symbol.arity:
                raise self.error(f"arity mismatch: {symbol.name} expects {symbol.arity} arguments, got {len(args)}", token)
            for i, (arg, sort) in enumerate(zip(args, symbol.arg_sorts), start=1):
                if arg.sort != sort:
                    raise self.error(f"sort mismatch: argument {i} of {symbol.name} must be {sort}, got {arg.sort}", token)
            return RelAtom(symbol.name, tuple(args))
        if kind in ("exists_", "forall_"):
            token, body = node.children
            name = str(token)
            if name not in self.ctx:
                raise self.error(f"bound variable '{name}' is not declared in the context", token)
            if self.sig.op(name) is not None:
                raise self.error(f"variable '{name}' shadows the constant of the same name", token)
            var = self.ctx.var(name)
            inner = self.formula(body)
            return Exists(var, inner) if kind == "exists_" else forall(var, inner)
        raise self.error(f"unexpected construct '{kind}'", node)


def _syntax_error(err: UnexpectedInput, text: str, file: str, line_offset: int, column_offset: int) -> DiagnosticError:
    line = getattr(err, "line", -1)
    column = getattr(err, "column", -1)
    if line is None or line < 1 or column is None or column < 1:
        # end of input: point just past the last character
        lines = text.split("\n") or [""]
        line, column = len(lines), len(lines[-1]) + 1
    if isinstance(err, UnexpectedEOF):
        message = "unexpected end of formula"
    elif isinstance(err, UnexpectedToken):
        message = f"unexpected token '{err.token}'"
    elif isinstance(err, UnexpectedCharacters):
        message = f"unexpected character '{text.split(chr(10))[line - 1][column - 1:column]}'"
    else:
        message = "syntax error"
    if line == 1:
        column += column_offset
    return DiagnosticError(SourceDiagnostic(file=file, line=line + line_offset, column=column, message=message))


def parse_formula(text: str, sig: Signature, ctx: Context, file: str = "<string>",
                  line_offset: int = 0, column_offset: int = 0) -> Formula:
    """Parses and sort-checks a formula; every bound variable must be declared in ctx."""
    if not text.strip():
        raise fail("empty formula", file, 1 + line_offset, 1 + column_offset)
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as err:
        raise _syntax_error(err, text, file, line_offset, column_offset) from None
    return FormulaBuilder(sig, ctx, file, line_offset, column_offset).formula(tree)
