"""Shared fixtures: session-scoped caches for contexts and suite runs.

The larger algebras (dimension 8, Clifford dimension 256) are expensive
enough that reconstructing them per test would dominate the run; the caches
hand out the same immutable objects everywhere.
"""

from fractions import Fraction

import pytest

from cubicdirac import DiracContext, catalog_entry
from cubicdirac.suite import run_suite


def unit_vector(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(s == i)) for s in range(n))


@pytest.fixture(scope="session")
def contexts():
    cache: dict = {}

    def get(name: str, with_subalgebra: bool = False, variant: int = 0) -> DiracContext:
        key = (name, with_subalgebra, variant)
        if key not in cache:
            entry = catalog_entry(name)
            sub = entry.subalgebra if with_subalgebra else ()
            cache[key] = DiracContext(entry.algebra, sub, p_variant=variant)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def suite_reports():
    cache: dict = {}

    def get(name: str):
        if name not in cache:
            entry = catalog_entry(name)
            cache[name] = run_suite(entry.algebra, entry.subalgebra)
        return cache[name]

    return get


@pytest.fixture(scope="session")
def sl3_triple_context():
    """sl(3) split along an sl(2) triple: the non-symmetric relative case."""
    entry = catalog_entry("sl3-killing")
    sub = (unit_vector(8, 0), unit_vector(8, 3), unit_vector(8, 5))
    return DiracContext(entry.algebra, sub)
