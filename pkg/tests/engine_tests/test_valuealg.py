"""
tests/engine_tests/test_valuealg.py
===================================
Algebra definabilnih skupova R_f:
  - atomi nad malim fixture modelima
  - atomi = orbite Aut(f) (Galois-Krasner provjera); puni prolaz (svi fixture-i,
    svi konteksti sa |G^X| <= 512) je `slow`
  - monotonost po budžetu pomoćnih varijabli
  - izomorfizam γ: R_f -> R_{f^α}
"""

import itertools
import math
from pathlib import Path

import pytest

from kb_core.algebra import Context
from kb_core.algebra.morphisms import SortedBijection
from kb_core.algebra.points import PointSpace
from kb_core.autgroup import automorphism_group, decide_equivalence
from kb_core.errors import ContractError, SizeLimitError
from kb_core.limits import EngineLimits
from kb_core.semantics import PointSet
from kb_core.valuealg import Partition, atoms, generate_definable_algebra, halmos_isomorphism, orbit_partition

FIXTURE_NAMES = sorted(p.stem for p in (Path(__file__).resolve().parents[2] / "data" / "fixtures").glob("*.kbm"))
SWEEP_BOUND = 512
X1 = Context.of(("x", "s"))
XY = Context.of(("x", "s"), ("y", "s"))

MP_PAIRS = [
    "x=e1 y=e1",
    "x=e1 y=e2 | x=e1 y=e3",
    "x=e2 y=e1 | x=e3 y=e1",
    "x=e2 y=e2 | x=e3 y=e3",
    "x=e2 y=e3 | x=e3 y=e2",
]


def _contexts_within(algebra, bound=SWEEP_BOUND):
    """Svaki multiskup sorti dužine 1..9 sa |G^X| <= bound, varijable x1, x2, ..."""
    contexts = []
    for n in range(1, 10):
        for combo in itertools.combinations_with_replacement(algebra.sorts, n):
            if math.prod(algebra.size(s) for s in combo) <= bound:
                contexts.append(Context(tuple((f"x{i}", s) for i, s in enumerate(combo, start=1))))
    return contexts


def _single_sort_context(model, arity):
    sort = model.algebra.sorts[0]
    return Context(tuple((name, sort) for name in ("x", "y")[:arity]))


# ---------------------------------------------------------------------------
# Atomi
# ---------------------------------------------------------------------------

def test_atoms_of_single_point_relation(load_fixture):
    f1 = load_fixture("mp").instance("f1")
    D = generate_definable_algebra(f1, X1)
    assert atoms(D).format_lines() == ["x=e1", "x=e2 | x=e3"]
    assert D.size == 4


def test_atoms_over_pairs(load_fixture):
    f1 = load_fixture("mp").instance("f1")
    D = generate_definable_algebra(f1, XY)
    assert D.atoms.format_lines() == MP_PAIRS
    assert D.size == 32


def test_elements_and_closure(load_fixture):
    f1 = load_fixture("mp").instance("f1")
    D = generate_definable_algebra(f1, X1)
    elements = [e.format_inline() for e in D.elements()]
    assert elements == ["", "x=e1", "x=e2 | x=e3", "x=e1 | x=e2 | x=e3"]
    lone = PointSet.from_indices(D.space, [2])
    assert lone not in D
    assert D.closure_of(lone).format_inline() == "x=e2 | x=e3"


def test_element_enumeration_respects_cap(load_fixture):
    D = generate_definable_algebra(load_fixture("mp").instance("f1"), XY)
    with pytest.raises(SizeLimitError):
        list(D.elements(EngineLimits(max_elements=16)))


def test_constant_separates_every_element(load_fixture):
    k = load_fixture("constant").instance("k")
    D = generate_definable_algebra(k, X1)
    assert D.atoms.format_lines() == ["x=e1", "x=e2", "x=e3"]


def test_two_sorted_atoms_without_aux(load_fixture):
    h = load_fixture("two_sorted").instance("h")
    ctx = Context.of(("a", "p"), ("b", "q"))
    D = generate_definable_algebra(h, ctx, aux=0)
    # b = f(a) izdvaja b1; R(a, b) razdvaja preostale parove
    assert D.atoms.format_lines() == [
        "a=a1 b=b1 | a=a2 b=b1",
        "a=a1 b=b2 | a=a2 b=b3",
        "a=a1 b=b3 | a=a2 b=b2",
    ]


def test_negative_aux_is_rejected(load_fixture):
    with pytest.raises(ContractError):
        generate_definable_algebra(load_fixture("mp").instance("f1"), X1, aux=-1)


def test_point_cap_applies_to_extended_context(load_fixture):
    with pytest.raises(SizeLimitError):
        generate_definable_algebra(load_fixture("mp").instance("f1"), XY, limits=EngineLimits(max_points=100))


# ---------------------------------------------------------------------------
# Atomi su orbite Aut(f)
# ---------------------------------------------------------------------------

SMALL_CASES = [
    ("mp", "f1", 2), ("mq", "g1", 2), ("m0", "f0", 2), ("mp_co", "c1", 2), ("mp2", "f2", 2),
    ("z3", "z", 2), ("constant", "k", 2), ("path", "p4", 1), ("z4", "z", 1), ("z4", "half", 1),
]


@pytest.mark.parametrize("fixture,instance,arity", SMALL_CASES)
def test_atoms_are_orbits(load_fixture, fixture, instance, arity):
    m = load_fixture(fixture).instance(instance)
    X = _single_sort_context(m, arity)
    D = generate_definable_algebra(m, X)
    assert D.atoms == orbit_partition(automorphism_group(m), m.algebra, X)


@pytest.mark.slow
@pytest.mark.parametrize("fixture", FIXTURE_NAMES)
def test_atoms_are_orbits_full_sweep(load_fixture, fixture):
    for m in load_fixture(fixture):
        group = automorphism_group(m)
        for X in _contexts_within(m.algebra):
            D = generate_definable_algebra(m, X)
            assert D.atoms == orbit_partition(group, m.algebra, X), (m.name, str(X))


def test_orbits_of_path_pairs(load_fixture):
    p4 = load_fixture("path").instance("p4")
    X = Context.of(("u", "v"))
    assert orbit_partition(automorphism_group(p4), p4.algebra, X).format_lines() == ["u=v1 | u=v4", "u=v2 | u=v3"]


# ---------------------------------------------------------------------------
# Budžet pomoćnih varijabli
# ---------------------------------------------------------------------------

def test_more_aux_never_coarsens(load_fixture):
    p4 = load_fixture("path").instance("p4")
    X = Context.of(("u", "v"))
    partitions = [generate_definable_algebra(p4, X, aux=k).atoms for k in range(4)]
    for coarser, finer in zip(partitions, partitions[1:]):
        assert finer.refines(coarser)
    assert len(partitions[0]) == 1
    assert partitions[-1].format_lines() == ["u=v1 | u=v4", "u=v2 | u=v3"]


def test_configured_aux_budget_is_used(load_fixture):
    p4 = load_fixture("path").instance("p4")
    D = generate_definable_algebra(p4, Context.of(("u", "v")), limits=EngineLimits(aux_budget=0))
    assert D.aux == 0
    assert len(D.atoms) == 1


# ---------------------------------------------------------------------------
# Particije
# ---------------------------------------------------------------------------

def test_partition_from_blocks_is_canonical(load_fixture):
    space = PointSpace(load_fixture("mp").algebra, X1)
    blocks = [PointSet.from_indices(space, [1, 2]), PointSet.from_indices(space, [0])]
    part = Partition.from_blocks(space, blocks)
    assert part.labels == (0, 1, 1)
    assert part.block_of(2).format_inline() == "x=e2 | x=e3"


@pytest.mark.parametrize("indices,message", [
    ([[0, 1], [1, 2]], "overlap"),
    ([[0], [1]], "do not cover"),
    ([[0, 1, 2], []], "empty"),
])
def test_partition_rejects_bad_blocks(load_fixture, indices, message):
    space = PointSpace(load_fixture("mp").algebra, X1)
    with pytest.raises(ContractError, match=message):
        Partition.from_blocks(space, [PointSet.from_indices(space, i) for i in indices])


def test_refinement_order(load_fixture):
    space = PointSpace(load_fixture("mp").algebra, X1)
    discrete = Partition.from_labels(space, [0, 1, 2])
    orbits = Partition.from_labels(space, [0, 1, 1])
    assert discrete.refines(orbits)
    assert not orbits.refines(discrete)


# ---------------------------------------------------------------------------
# γ: R_f -> R_{f^α}
# ---------------------------------------------------------------------------

def test_relabelling_is_a_halmos_isomorphism(load_fixture):
    f1 = load_fixture("mp").instance("f1")
    r1 = load_fixture("mp_relabel").instance("r1")
    delta = SortedBijection.from_names(f1.algebra, r1.algebra, {"s": {"e1": "c", "e2": "a", "e3": "b"}})
    report = halmos_isomorphism(f1, r1, delta, XY)
    assert report.ok, report.failures
    assert report.atoms_left == report.atoms_right == 5


def test_automorphic_equivalence_without_isomorphism(load_fixture):
    f1 = load_fixture("mp").instance("f1")
    c1 = load_fixture("mp_co").instance("c1")
    report = halmos_isomorphism(f1, c1, SortedBijection.identity(f1.algebra), X1)
    assert report.ok


def test_different_groups_break_the_atom_map(load_fixture):
    f1 = load_fixture("mp").instance("f1")
    f0 = load_fixture("m0").instance("f0")
    report = halmos_isomorphism(f1, f0, SortedBijection.identity(f1.algebra), X1)
    assert not report.ok
    assert (report.atoms_left, report.atoms_right) == (2, 1)
    assert "atom map is not a bijection" in report.failures


@pytest.mark.parametrize("arity", [1, 2, 3])
@pytest.mark.parametrize("right", ["mq", "mp_relabel"])
def test_equivalence_witness_gives_halmos_isomorphism(load_fixture, right, arity):
    left, other = load_fixture("mp"), load_fixture(right)
    witness = decide_equivalence(left, other).witness
    f, g = witness.alpha[0]
    X = Context(tuple((f"x{i}", "s") for i in range(1, arity + 1)))
    report = halmos_isomorphism(left.instance(f), other.instance(g), witness.delta(f), X)
    assert report.ok, report.failures


@pytest.mark.slow
@pytest.mark.parametrize("left_name,right_name", [("mp", "mq"), ("mp", "mp_relabel"), ("mp", "mp_co"), ("mp2", "mq2")])
def test_equivalence_witness_gives_halmos_isomorphism_full_sweep(load_fixture, left_name, right_name):
    left, right = load_fixture(left_name), load_fixture(right_name)
    verdict = decide_equivalence(left, right)
    assert verdict.equivalent
    for f, g in verdict.witness.alpha:
        for X in _contexts_within(left.algebra):
            report = halmos_isomorphism(left.instance(f), right.instance(g), verdict.witness.delta(f), X)
            assert report.ok, (f, str(X), report.failures)
