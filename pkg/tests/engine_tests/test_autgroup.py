"""
tests/engine_tests/test_autgroup.py
===================================
Grupe automorfizama, izomorfizmi algebri, sparivanje i automorfna
ekvivalencija (multi-)modela.
"""

import random

import pytest

from kb_core.algebra import Context
from kb_core.algebra.morphisms import SortedBijection
from kb_core.autgroup import (
    EquivalenceWitness, PermutationGroup, algebra_automorphism_group, algebra_isomorphisms,
    automorphic_equivalent, automorphism_group, decide_equivalence, max_bipartite_matching,
    model_isomorphisms, multimodel_equivalent, multimodel_isomorphic, naive_automorphism_group, naive_isomorphisms,
    ordered_map, perfect_matching,
)
from kb_core.errors import MalformedWitnessError, NotAGroupError, SignatureMismatchError
from kb_core.frontend import parse_model
from kb_core.valuealg import orbit_partition

SEED = 20240611
FIXTURE_INSTANCES = [
    ("mp", "f1", 2), ("mq", "g1", 2), ("m0", "f0", 6), ("mp_co", "c1", 2), ("mp_relabel", "r1", 2),
    ("z3", "z", 2), ("z4", "z", 2), ("z4", "half", 2), ("path", "p4", 2), ("two_sorted", "h", 2),
    ("constant", "k", 1),
]

SPLIT_LEFT = """
sorts: s
carrier s: e1 e2 e3
rel P(s)
instance f1:
  P: (e1)
instance f2:
  P: (e2) (e3)
"""

SPLIT_RIGHT = """
sorts: s
carrier s: e1 e2 e3
rel P(s)
instance g1:
  P: (e1)
instance g2:
  P: (e2)
"""


# ---------------------------------------------------------------------------
# Grupe
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("fixture,instance,order", FIXTURE_INSTANCES)
def test_group_orders(load_fixture, fixture, instance, order):
    assert automorphism_group(load_fixture(fixture).instance(instance)).order == order


@pytest.mark.parametrize("fixture,instance,order", FIXTURE_INSTANCES)
def test_search_matches_brute_force(load_fixture, fixture, instance, order):
    m = load_fixture(fixture).instance(instance)
    assert automorphism_group(m).keys == naive_automorphism_group(m).keys


def test_search_matches_brute_force_on_random_models(model_factory):
    rng = random.Random(SEED)
    for _ in range(60):
        m = model_factory(rng)
        group = automorphism_group(m)
        assert group.keys == naive_automorphism_group(m).keys
        group.verify()


def test_members_are_listed_canonically(load_fixture):
    group = automorphism_group(load_fixture("mp").instance("f1"))
    assert group.format_lines() == ["s: e1->e1 e2->e2 e3->e3", "s: e1->e1 e2->e3 e3->e2"]


def test_two_sorted_automorphism_moves_both_sorts(load_fixture):
    group = automorphism_group(load_fixture("two_sorted").instance("h"))
    assert group.format_lines()[1] == "p: a1->a2 a2->a1 ; q: b1->b1 b2->b3 b3->b2"


def test_cyclic_group_has_negation_only(load_fixture):
    alg = load_fixture("z3").algebra
    isos = list(algebra_isomorphisms(alg, alg))
    assert [g.format() for g in isos] == ["s: e0->e0 e1->e1 e2->e2", "s: e0->e0 e1->e2 e2->e1"]
    assert [g.components for g in naive_isomorphisms(alg, alg)] == [g.components for g in isos]
    assert algebra_automorphism_group(alg).order == 2


def test_family_without_identity_is_not_a_group(load_fixture):
    alg = load_fixture("mp").algebra
    with pytest.raises(NotAGroupError, match="identity"):
        PermutationGroup.of(alg, [SortedBijection(alg, alg, ((0, 2, 1),))])


def test_family_missing_an_inverse(load_fixture):
    alg = load_fixture("mp").algebra
    family = [SortedBijection.identity(alg), SortedBijection(alg, alg, ((1, 2, 0),))]
    with pytest.raises(NotAGroupError) as exc:
        PermutationGroup.of(alg, family)
    assert exc.value.witness == (((1, 2, 0),), ((1, 2, 0),))


def test_orbits_reject_non_groups(load_fixture):
    alg = load_fixture("mp").algebra
    family = [SortedBijection.identity(alg), SortedBijection(alg, alg, ((1, 2, 0),))]
    with pytest.raises(NotAGroupError):
        orbit_partition(family, alg, Context.of(("x", "s")))


def test_conjugation_moves_the_stabiliser(load_fixture):
    f1 = load_fixture("mp").instance("f1")
    r1 = load_fixture("mp_relabel").instance("r1")
    delta = SortedBijection.from_names(f1.algebra, r1.algebra, {"s": {"e1": "c", "e2": "a", "e3": "b"}})
    conjugated = automorphism_group(f1).conjugate(delta)
    assert conjugated.keys == automorphism_group(r1).keys


def test_isomorphisms_need_shared_relations(load_fixture):
    with pytest.raises(SignatureMismatchError):
        next(model_isomorphisms(load_fixture("mp").instance("f1"), load_fixture("mq").instance("g1")))


# ---------------------------------------------------------------------------
# Sparivanje
# ---------------------------------------------------------------------------

def test_perfect_matching_uses_augmenting_paths():
    edges = {("a", "x"), ("a", "y"), ("b", "x")}
    assert perfect_matching(["a", "b"], ["x", "y"], edges) == {"a": "y", "b": "x"}


def test_no_perfect_matching():
    edges = {("a", "x"), ("b", "x")}
    assert perfect_matching(["a", "b"], ["x", "y"], edges) is None
    assert len(max_bipartite_matching(["a", "b"], ["x", "y"], edges)) == 1
    assert perfect_matching(["a"], ["x", "y"], {("a", "x")}) is None


def test_ordered_map_keeps_order_for_any_job_count():
    items = list(range(40))
    assert ordered_map(lambda v: v * v, items, jobs=4) == ordered_map(lambda v: v * v, items, jobs=1)


# ---------------------------------------------------------------------------
# Automorfna ekvivalencija
# ---------------------------------------------------------------------------

def test_complement_is_automorphic_equivalent_not_isomorphic(load_fixture):
    f1 = load_fixture("mp").instance("f1")
    c1 = load_fixture("mp_co").instance("c1")
    delta = automorphic_equivalent(f1, c1)
    assert delta is not None and delta.is_identity()
    assert next(model_isomorphisms(f1, c1), None) is None
    assert multimodel_isomorphic(load_fixture("mp"), load_fixture("mp_co")) is None


def test_equivalent_across_signatures(load_fixture):
    verdict = decide_equivalence(load_fixture("mp"), load_fixture("mq"))
    assert verdict.equivalent
    assert verdict.witness.alpha == (("f1", "g1"),)
    assert verdict.witness.delta("f1").format() == "s: e1->e1 e2->e2 e3->e3"


def test_inequivalent_group_orders(load_fixture):
    verdict = decide_equivalence(load_fixture("mp"), load_fixture("m0"))
    assert not verdict.equivalent
    assert verdict.reason == "no perfect matching: group orders 2 vs 6"
    assert (verdict.left_orders, verdict.right_orders) == ((2,), (6,))


def test_relabelled_copy_needs_a_proper_delta(load_fixture):
    verdict = decide_equivalence(load_fixture("mp"), load_fixture("mp_relabel"))
    assert verdict.witness.delta("f1").format() == "s: e1->c e2->a e3->b"
    iso = multimodel_isomorphic(load_fixture("mp"), load_fixture("mp_relabel"))
    assert iso.delta("f1").format() == "s: e1->c e2->a e3->b"


def test_matching_is_forced_by_group_orders(load_fixture):
    verdict = decide_equivalence(load_fixture("mp2"), load_fixture("mq2"))
    assert verdict.witness.alpha == (("f1", "g2"), ("f2", "g1"))
    assert all(verdict.witness.delta(f).is_identity() for f in ("f1", "f2"))
    assert (verdict.left_orders, verdict.right_orders) == ((2, 6), (6, 2))


def test_instance_counts_differ(load_fixture):
    verdict = decide_equivalence(load_fixture("mp"), load_fixture("mp2"))
    assert verdict.reason == "instance counts differ: 1 vs 2"


def test_multimodel_equivalent_returns_only_the_witness(load_fixture):
    w = multimodel_equivalent(load_fixture("mp2"), load_fixture("mq2"))
    assert w.alpha == (("f1", "g2"), ("f2", "g1"))
    assert multimodel_equivalent(load_fixture("mp2"), load_fixture("mp")) is None


# jedan sort sa tri elementa, bez operacija: svi parovi su uporedivi
COMPARABLE = [("mp", "f1"), ("mq", "g1"), ("m0", "f0"), ("mp_co", "c1"), ("mp_relabel", "r1")]


def test_automorphic_equivalence_is_an_equivalence_relation(load_fixture):
    models = [load_fixture(name).instance(inst) for name, inst in COMPARABLE]
    related = {}
    for i, a in enumerate(models):
        for j, b in enumerate(models):
            delta = automorphic_equivalent(a, b)
            related[i, j] = delta is not None
            if i == j:
                assert delta.is_identity()
            elif delta is not None:
                assert automorphism_group(b).conjugate_keys(delta.inverse()) == automorphism_group(a).keys
    n = len(models)
    for i in range(n):
        for j in range(n):
            assert related[i, j] == related[j, i]
            for k in range(n):
                if related[i, j] and related[j, k]:
                    assert related[i, k]
    # f0 (prazna relacija) je sam u svojoj klasi
    assert [related[2, j] for j in range(n)] == [False, False, True, False, False]


def test_per_pair_deltas_versus_uniform_delta():
    left, right = parse_model(SPLIT_LEFT), parse_model(SPLIT_RIGHT)
    verdict = decide_equivalence(left, right)
    assert verdict.equivalent
    for f, g in verdict.witness.alpha:
        conjugated = automorphism_group(left.instance(f)).conjugate_keys(verdict.witness.delta(f))
        assert conjugated == automorphism_group(right.instance(g)).keys
    uniform = decide_equivalence(left, right, uniform_delta=True)
    assert not uniform.equivalent
    assert uniform.reason == "no uniform delta: group orders 2, 2 vs 2, 2"


def test_uniform_delta_when_one_map_suffices(load_fixture):
    verdict = decide_equivalence(load_fixture("mp2"), load_fixture("mq2"), uniform_delta=True)
    assert verdict.equivalent
    assert len({d.components for _, d in verdict.witness.deltas}) == 1


def test_verdict_does_not_depend_on_job_count(load_fixture):
    one = decide_equivalence(load_fixture("mp2"), load_fixture("mq2"), jobs=1)
    four = decide_equivalence(load_fixture("mp2"), load_fixture("mq2"), jobs=4)
    assert one == four


def test_witness_lookup_errors(load_fixture):
    w = EquivalenceWitness(alpha=(("f1", "g1"),), deltas=())
    assert w.image("f1") == "g1"
    with pytest.raises(MalformedWitnessError):
        w.image("f2")
    with pytest.raises(MalformedWitnessError):
        w.delta("f1")
    assert w.beta("f1") is None
    assert not w.has_translations
