"""
tests/conftest.py — Zajednički fixture-i.

Osigurava da je root repozitorija na sys.path, registruje marker `slow` i
daje učitavanje fixture korpusa te determinističke generatore slučajnih
modela i formula za testove zakona.
"""

import random
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from kb_core.algebra.formulas import TRUE, And, Equal, Exists, Not, Or, RelAtom  # noqa: E402
from kb_core.algebra.terms import App, Var  # noqa: E402
from kb_core.frontend.model_format import parse_model  # noqa: E402

FIXTURES_DIR = ROOT / "data" / "fixtures"
GOLDEN_DIR = ROOT / "tests" / "golden"
SEED = 20240611


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweeps over the whole fixture corpus")


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture(scope="session")
def load_fixture():
    """load_fixture('mp') -> MultiModel parsed from data/fixtures/mp.kbm (cached)."""
    cache = {}

    def load(name: str):
        if name not in cache:
            path = FIXTURES_DIR / f"{name}.kbm"
            cache[name] = parse_model(path.read_text(encoding="utf-8"), str(path))
        return cache[name]

    return load


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


# ---------------------------------------------------------------------------
# Generatori slučajnih modela i formula
# ---------------------------------------------------------------------------

def _subset(rng: random.Random, items: list) -> list:
    return [x for x in items if rng.random() < 0.4]


def random_model_text(rng: random.Random, max_total: int = 6) -> str:
    """Model file text with one instance 'f': one or two sorts, a few ops and two relations."""
    if rng.random() < 0.65:
        sizes = {"s": rng.randint(2, 4)}
    else:
        a = rng.randint(1, 3)
        sizes = {"s": a, "t": rng.randint(1, min(3, max_total - a))}
    sorts = list(sizes)
    carriers = {s: [f"{s}{i}" for i in range(1, n + 1)] for s, n in sizes.items()}
    lines = [f"sorts: {', '.join(sorts)}"]
    lines += [f"carrier {s}: {' '.join(carriers[s])}" for s in sorts]
    first, last = sorts[0], sorts[-1]
    if rng.random() < 0.5:
        lines.append(f"op u({first}) -> {first}:")
        lines += [f"  {e} = {rng.choice(carriers[first])}" for e in carriers[first]]
    if sizes[first] <= 3 and rng.random() < 0.4:
        lines.append(f"op m({first},{first}) -> {first}:")
        lines += [f"  {a} {b} = {rng.choice(carriers[first])}" for a in carriers[first] for b in carriers[first]]
    if len(sorts) == 2 and rng.random() < 0.5:
        lines.append(f"op g({first}) -> {last}:")
        lines += [f"  {e} = {rng.choice(carriers[last])}" for e in carriers[first]]
    lines.append(f"rel P({first})")
    lines.append(f"rel R({first},{last})")
    lines.append("instance f:")
    lines.append("  P: " + " ".join(f"({e})" for e in _subset(rng, carriers[first])))
    pairs = [(a, b) for a in carriers[first] for b in carriers[last]]
    lines.append("  R: " + " ".join(f"({a},{b})" for a, b in _subset(rng, pairs)))
    return "\n".join(lines) + "\n"


def random_terms(sig, variables: list[Var]) -> dict[str, list]:
    """Variables plus one layer of unary applications, grouped by sort."""
    by_sort: dict[str, list] = {}
    for v in variables:
        by_sort.setdefault(v.sort, []).append(v)
    for op in sig.ops:
        if op.arity == 1:
            for v in list(by_sort.get(op.arg_sorts[0], [])):
                if isinstance(v, Var):
                    by_sort.setdefault(op.result_sort, []).append(App(op.name, (v,), op.result_sort))
    return by_sort


def random_formula(rng: random.Random, sig, variables: list[Var], depth: int = 3):
    """Well-sorted formula over the given variables; quantifiers bind variables from the same list."""
    terms = random_terms(sig, variables)
    if depth <= 0 or rng.random() < 0.3:
        choice = rng.random()
        if choice < 0.35:
            sort = rng.choice(sorted(terms))
            return Equal(rng.choice(terms[sort]), rng.choice(terms[sort]))
        if choice < 0.95:
            rel = rng.choice(sig.rels)
            if all(s in terms for s in rel.arg_sorts):
                return RelAtom(rel.name, tuple(rng.choice(terms[s]) for s in rel.arg_sorts))
        return TRUE
    kind = rng.choice(["not", "and", "or", "exists"])
    if kind == "not":
        return Not(random_formula(rng, sig, variables, depth - 1))
    if kind == "exists":
        return Exists(rng.choice(variables), random_formula(rng, sig, variables, depth - 1))
    left = random_formula(rng, sig, variables, depth - 1)
    right = random_formula(rng, sig, variables, depth - 1)
    return And(left, right) if kind == "and" else Or(left, right)


@pytest.fixture
def model_factory():
    def make(rng: random.Random, max_total: int = 6):
        return parse_model(random_model_text(rng, max_total), "<random>").instances[0]
    return make


@pytest.fixture
def formula_factory():
    return random_formula
