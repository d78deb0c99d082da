"""
tests/app_tests/test_kbase.py
=============================
Testovi za servisni sloj KnowledgeBase:
  - upiti i keš sadržaja
  - inducirano preslikavanje sadržaja (dopustivost, identitet, kompozicija)
  - ekvivalencija i provjera svjedoka
"""

import pytest

from kb_app.services.kbase import KnowledgeBase
from kb_core.algebra import Context, Not, RelAtom, Substitution, Var
from kb_core.algebra.terms import compose
from kb_core.errors import ContextMismatchError
from kb_core.frontend import parse_single_query
from kb_core.frontend.witness_format import parse_witness
from kb_core.galois import Description
from kb_core.limits import EngineLimits

XY = Context.of(("x", "s"), ("y", "s"))
Z = Context.of(("z", "s"))
W = Context.of(("w", "s"))
P = lambda t: RelAtom("P", (t,))  # noqa: E731
COLLAPSE = Substitution.from_mapping(XY, Z, {"x": "z", "y": "z"})
PICK_X = Substitution.from_mapping(W, XY, {"w": "x"})


@pytest.fixture
def kb(fixtures_dir):
    return KnowledgeBase.from_file(fixtures_dir / "mp.kbm", EngineLimits())


@pytest.fixture
def pp(kb, fixtures_dir):
    return parse_single_query((fixtures_dir / "pp.kbq").read_text(encoding="utf-8"), kb.multimodel.signature)


# ---------------------------------------------------------------------------
# Upiti i keš
# ---------------------------------------------------------------------------

def test_query_returns_content(kb, pp):
    assert kb.names == ("f1",)
    assert kb.query("f1", pp).format_lines() == ["x=e1 y=e1"]


def test_query_examples_on_complement_and_empty_description(fixtures_dir):
    mq = KnowledgeBase.from_file(fixtures_dir / "mq.kbm", EngineLimits())
    X1 = Context.of(("x", "s"))
    x = Var("x", "s")
    assert mq.query("g1", Description(X1, (Not(RelAtom("Q", (x,))),))).format_lines() == ["x=e1"]
    assert mq.query("g1", Description(X1)).is_full()


def test_cache_does_not_change_replies(kb, pp, fixtures_dir):
    plain = KnowledgeBase.from_file(fixtures_dir / "mp.kbm", EngineLimits())
    plain.cache_enabled = False
    first = kb.query("f1", pp)
    # drugi upit dolazi iz keša i vraća isti objekat
    assert kb.query("f1", pp) is first
    assert plain.query("f1", pp) == first


def test_clear_cache(kb, pp):
    first = kb.query("f1", pp)
    kb.clear_cache()
    again = kb.query("f1", pp)
    assert again == first
    assert again is not first


def test_entails_and_closure(kb, pp):
    x, y = Var("x", "s"), Var("y", "s")
    assert kb.entails("f1", pp, P(x))
    assert not kb.entails("f1", pp, Not(P(y)))
    assert kb.closure("f1", pp, [P(x), P(y)]) == [P(x), P(y)]


# ---------------------------------------------------------------------------
# Inducirano preslikavanje sadržaja
# ---------------------------------------------------------------------------

def test_admissible_substitution_gives_content_map(kb, pp):
    m = kb.induced_content_map("f1", COLLAPSE, Description(Z, (P(Var("z", "s")),)), pp)
    assert m.admissible
    assert m.format_lines() == ["z=e1 |-> x=e1 y=e1"]
    nu = m.source.space.assignment(0)
    assert m.target.space.index(m.apply(nu)) == 0


def test_inadmissible_substitution_names_the_point(kb, pp):
    m = kb.induced_content_map("f1", COLLAPSE, Description(Z), pp)
    assert not m.admissible
    assert m.format_lines() == ["not admissible: z=e2"]


def test_projection_onto_first_variable(kb, pp):
    z = Var("z", "s")
    s = Substitution.from_mapping(Z, XY, {"z": "x"})
    m = kb.induced_content_map("f1", s, pp, Description(Z, (P(z),)))
    assert m.format_lines() == ["x=e1 y=e1 |-> z=e1"]
    rejected = kb.induced_content_map("f1", s, pp, Description(Z, (Not(P(z)),)))
    assert rejected.format_lines() == ["not admissible: x=e1 y=e1"]


def test_identity_substitution_gives_identity_map(kb, pp):
    m = kb.induced_content_map("f1", Substitution.identity(XY), pp, pp)
    assert all(a == b for a, b in m.pairs)
    assert len(m.pairs) == len(kb.query("f1", pp))


def test_content_maps_compose_along_composite_substitution(kb, pp):
    over_z = Description(Z, (P(Var("z", "s")),))
    over_w = Description(W, (P(Var("w", "s")),))
    first = kb.induced_content_map("f1", COLLAPSE, over_z, pp)
    second = kb.induced_content_map("f1", PICK_X, pp, over_w)
    direct = kb.induced_content_map("f1", compose(COLLAPSE, PICK_X), over_z, over_w)
    assert first.then(second).pairs == direct.pairs
    assert direct.format_lines() == ["z=e1 |-> w=e1"]


def test_content_maps_must_be_composable(kb, pp):
    over_z = Description(Z, (P(Var("z", "s")),))
    m = kb.induced_content_map("f1", COLLAPSE, over_z, pp)
    with pytest.raises(ContextMismatchError):
        m.then(m)


def test_descriptions_must_match_substitution(kb, pp):
    with pytest.raises(ContextMismatchError):
        kb.induced_content_map("f1", COLLAPSE, pp, pp)


# ---------------------------------------------------------------------------
# Ekvivalencija
# ---------------------------------------------------------------------------

def test_equivalence_with_witness(kb, fixtures_dir):
    other = KnowledgeBase.from_file(fixtures_dir / "mq.kbm", EngineLimits())
    verdict = kb.equivalence(other)
    assert verdict.equivalent
    assert verdict.witness.alpha == (("f1", "g1"),)


def test_verify_uses_default_batteries(kb, fixtures_dir):
    other = KnowledgeBase.from_file(fixtures_dir / "mq.kbm", EngineLimits())
    path = fixtures_dir / "pq.kbw"
    witness = parse_witness(path.read_text(encoding="utf-8"), kb.multimodel, other.multimodel, str(path))
    report = kb.verify(other, witness)
    assert report.passed, report.human_lines()
    assert len(report.checks) == 9
    assert report.human_lines()[-1] == "9/9 checks passed"
