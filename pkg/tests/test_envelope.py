"""Universal enveloping algebra in PBW normal form, plus Casimir elements."""

import random
from fractions import Fraction

import pytest

from conftest import unit_vector
from cubicdirac.catalog import catalog_entry
from cubicdirac.envelope import PBWElement, casimir_element
from cubicdirac.errors import ContractViolation
from cubicdirac.lie import QuadraticLieAlgebra, orthogonal_split
from cubicdirac.linalg import Matrix


@pytest.fixture(scope="module")
def sl2():
    return catalog_entry("sl2-killing").algebra


@pytest.fixture(scope="module")
def abelian2():
    return catalog_entry("abelian2").algebra


def gen(algebra, i):
    return PBWElement.generator(algebra, i)


def test_reordering_a_single_pair(sl2):
    """f e rewrites to e f - h in the basis (e, h, f)."""
    e, h, f = gen(sl2, 0), gen(sl2, 1), gen(sl2, 2)
    assert f * e == e * f - h
    assert (f * e).terms == {(0, 2): Fraction(1), (1,): Fraction(-1)}


def test_already_ordered_product_is_untouched(sl2):
    e, f = gen(sl2, 0), gen(sl2, 2)
    assert (e * f).terms == {(0, 2): Fraction(1)}


def test_unit_and_scalars(sl2):
    one = PBWElement.one(sl2)
    x = gen(sl2, 1)
    assert one * x == x
    assert x * one == x
    assert Fraction(3, 2) * one * x == Fraction(3, 2) * x


def test_abelian_generators_commute(abelian2):
    x, y = gen(abelian2, 0), gen(abelian2, 1)
    assert x * y == y * x
    assert (y * x).terms == {(0, 1): Fraction(1)}


def test_normalization_is_associative(sl2):
    rng = random.Random(19)
    gens = [gen(sl2, i) for i in range(3)]

    def random_element():
        out = PBWElement.zero(sl2)
        for _ in range(3):
            factors = [rng.choice(gens) for _ in range(rng.randint(1, 2))]
            term = PBWElement.one(sl2)
            for factor in factors:
                term = term * factor
            out = out + Fraction(rng.randint(-4, 4)) * term
        return out

    for _ in range(40):
        a, b, c = random_element(), random_element(), random_element()
        assert (a * b) * c == a * (b * c)


def test_degree_four_products_normalize(sl2):
    e, h, f = gen(sl2, 0), gen(sl2, 1), gen(sl2, 2)
    left = (f * f) * (e * e)
    right = f * (f * (e * e))
    assert left == right
    indices = [idx for mono in left.terms for idx in mono]
    assert all(0 <= i < 3 for i in indices)
    for mono in left.terms:
        assert list(mono) == sorted(mono)


def test_commutator_of_generators_matches_bracket(sl2):
    e, h, f = gen(sl2, 0), gen(sl2, 1), gen(sl2, 2)
    assert e.commutator(f) == h
    assert h.commutator(e) == 2 * e
    assert h.commutator(f) == -2 * f


def test_casimir_of_abelian_identity_form(abelian2):
    omega = casimir_element(abelian2)
    x, y = gen(abelian2, 0), gen(abelian2, 1)
    assert omega == x * x + y * y


def test_casimir_needs_an_orthogonal_basis(sl2):
    with pytest.raises(ContractViolation):
        casimir_element(sl2)


def test_casimir_is_basis_independent(sl2):
    basis_a = orthogonal_split(sl2).p_vectors
    basis_b = orthogonal_split(sl2, (), p_variant=1).p_vectors
    assert basis_a != basis_b
    omega_a = casimir_element(sl2, basis_a)
    omega_b = casimir_element(sl2, basis_b)
    assert omega_a == omega_b


def test_casimir_is_central(sl2):
    omega = casimir_element(sl2, orthogonal_split(sl2).p_vectors)
    for i in range(3):
        x = gen(sl2, i)
        assert omega * x == x * omega


def test_casimir_halves_when_form_doubles(sl2):
    doubled = QuadraticLieAlgebra(
        "sl2-doubled",
        sl2.labels,
        {pair: coeffs for pair, coeffs in sl2.bracket_table().items()},
        sl2.form.scaled(Fraction(2)),
    )
    basis = orthogonal_split(sl2).p_vectors
    omega = casimir_element(sl2, basis)
    omega_doubled = casimir_element(doubled, basis)
    assert omega_doubled.terms == {m: c / 2 for m, c in omega.terms.items()}


def test_elements_of_different_algebras_do_not_mix(sl2, abelian2):
    with pytest.raises(ContractViolation):
        gen(sl2, 0) + gen(abelian2, 0)


def test_from_vector(sl2):
    x = PBWElement.from_vector(sl2, unit_vector(3, 0))
    assert x == gen(sl2, 0)
    combo = PBWElement.from_vector(sl2, (Fraction(2), Fraction(0), Fraction(-1)))
    assert combo == 2 * gen(sl2, 0) - gen(sl2, 2)
