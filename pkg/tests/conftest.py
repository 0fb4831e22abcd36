"""Shared generators and brute-force oracles.

The oracles re-derive the interesting relations straight from their
definitions in slow pure Python, without touching the library internals, so
the fast implementations have something independent to be checked against.
"""

import itertools

import numpy as np
import pytest

from orderctx import FinitePoset, philox_generator

_ODDS_TOL = 1e-12

# one line per acceptance criterion, echoed after the run so the verdicts
# stay visible under output capture
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


def oracle_directed(p: FinitePoset, labels) -> bool:
    """Nonempty, and every pair has an upper bound inside the subset."""
    members = list(labels)
    if not members:
        return False
    for a in members:
        for b in members:
            if not any(p.holds(a, z) and p.holds(b, z) for z in members):
                return False
    return True


def oracle_supremum(p: FinitePoset, labels):
    """Least upper bound by scanning all elements."""
    members = list(labels)
    uppers = [z for z in p.elements if all(p.holds(m, z) for m in members)]
    for z in uppers:
        if all(p.holds(z, u) for u in uppers):
            return z
    return None


def oracle_way_below(p: FinitePoset, x: str, y: str) -> bool:
    """Approximation from the definition, enumerating subsets with itertools."""
    for size in range(1, len(p.elements) + 1):
        for combo in itertools.combinations(p.elements, size):
            if not oracle_directed(p, combo):
                continue
            sup = oracle_supremum(p, combo)
            if sup is None or not p.holds(y, sup):
                continue
            if not any(p.holds(x, t) for t in combo):
                return False
    return True


def oracle_state_leq(xp, yp) -> bool:
    """Information order on states by scanning every permutation."""
    xp = np.asarray(xp, dtype=float)
    yp = np.asarray(yp, dtype=float)
    n = xp.size
    for perm in itertools.permutations(range(n)):
        xs = xp[list(perm)]
        ys = yp[list(perm)]
        if (xs[:-1] < xs[1:]).any() or (ys[:-1] < ys[1:]).any():
            continue
        if (xs[:-1] * ys[1:] <= xs[1:] * ys[:-1] + _ODDS_TOL).all():
            return True
    return False


def random_poset(rng: np.random.Generator, max_elements: int = 10) -> FinitePoset:
    """Random finite poset: edges oriented by index, then transitively closed."""
    n = int(rng.integers(1, max_elements + 1))
    labels = [f"e{i}" for i in range(n)]
    density = rng.random()
    covers = [
        [labels[i], labels[j]]
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    return FinitePoset.from_cover_relations(labels, covers)


def random_sphere_axis(rng: np.random.Generator):
    from orderctx import BlochAxis

    theta = float(np.arccos(1.0 - 2.0 * rng.random()))
    phi = float(2.0 * np.pi * rng.random())
    return BlochAxis(theta, phi)


@pytest.fixture
def rng():
    return philox_generator(20260815)
