"""Chevalley-Eilenberg operators d, theta, iota and the bracket coproduct."""

import random
from fractions import Fraction

import pytest

from conftest import unit_vector
from cubicdirac.catalog import catalog_entry
from cubicdirac.clifford import pairing
from cubicdirac.dirac import DiracContext
from cubicdirac.errors import ContractViolation, UnsupportedArityError
from cubicdirac.forms import (
    MultilinearMap,
    bracket_coproduct,
    ce_differential,
    form_of_trivector,
    insert_first,
    lie_action,
)


@pytest.fixture(scope="module")
def sl2():
    return catalog_entry("sl2-killing").algebra


@pytest.fixture(scope="module")
def sl2_ctx(sl2):
    return DiracContext(sl2)


def basis(n):
    return [unit_vector(n, i) for i in range(n)]


def all_keys(n, arity):
    if arity == 0:
        return [()]
    keys = [()]
    for _ in range(arity):
        keys = [k + (i,) for k in keys for i in range(n)]
    return keys


def test_covector_values(sl2):
    e_star = MultilinearMap.covector(sl2, unit_vector(3, 0))
    assert e_star.value((0,)) == 0
    assert e_star.value((1,)) == 0
    assert e_star.value((2,)) == 4


def test_from_matrix_roundtrip(sl2):
    b = MultilinearMap.from_matrix(sl2, sl2.form)
    for i in range(3):
        for j in range(3):
            assert b.value((i, j)) == sl2.form.entry(i, j)


def test_differential_of_invariant_form(sl2):
    """dB(x,y,z) collapses to -B(x,[y,z]) when B is invariant."""
    b = MultilinearMap.from_matrix(sl2, sl2.form)
    db = ce_differential(b)
    assert db.arity == 3
    es = basis(3)
    for i in range(3):
        for j in range(3):
            for k in range(3):
                expected = -sl2.b(es[i], sl2.bracket(es[j], es[k]))
                assert db.value((i, j, k)) == expected
    assert db.is_alternating()


def test_differential_matches_fundamental_trivector(sl2_ctx):
    g = sl2_ctx.adapted
    b = MultilinearMap.from_matrix(g, g.form)
    assert ce_differential(b) == 2 * form_of_trivector(g, sl2_ctx.v)


def test_invariant_form_is_killed_by_every_lie_action(sl2):
    b = MultilinearMap.from_matrix(sl2, sl2.form)
    for x in basis(3):
        assert lie_action(x, b).is_zero()


def test_lie_action_on_a_covector(sl2):
    """theta_h e* = -2 e* because e* pairs only against f and [h,f] = -2f."""
    e_star = MultilinearMap.covector(sl2, unit_vector(3, 0))
    acted = lie_action(unit_vector(3, 1), e_star)
    assert acted == Fraction(-2) * e_star


def test_lie_action_on_abelian_algebra_vanishes():
    g = catalog_entry("abelian3").algebra
    w = MultilinearMap(g, 2, {(0, 1): Fraction(5), (1, 0): Fraction(-5)})
    for x in basis(3):
        assert lie_action(x, w).is_zero()


def test_insert_first_on_covector_gives_form_value(sl2):
    es = basis(3)
    for x in es:
        x_star = MultilinearMap.covector(sl2, x)
        for y in es:
            contracted = insert_first(y, x_star)
            assert contracted.arity == 0
            assert contracted.value(()) == sl2.b(x, y)


def test_insert_first_on_form_gives_covector(sl2):
    b = MultilinearMap.from_matrix(sl2, sl2.form)
    for i in range(3):
        assert insert_first(unit_vector(3, i), b) == MultilinearMap.covector(sl2, unit_vector(3, i))


def test_insert_first_rejects_arity_zero(sl2):
    w = MultilinearMap(sl2, 0, {(): Fraction(1)})
    with pytest.raises(ContractViolation):
        insert_first(unit_vector(3, 0), w)


def test_cartan_formula_on_point_masses(sl2):
    """iota_X d + d iota_X = theta_X, spot-checked over random point masses."""
    rng = random.Random(43)
    for arity in (1, 2, 3):
        for _ in range(8):
            key = tuple(rng.randrange(3) for _ in range(arity))
            w = MultilinearMap(sl2, arity, {key: Fraction(rng.randint(1, 5))})
            x = basis(3)[rng.randrange(3)]
            lhs = insert_first(x, ce_differential(w)) + ce_differential(insert_first(x, w))
            assert lhs == lie_action(x, w)


def test_differential_squares_to_zero(sl2):
    for i in range(3):
        w = MultilinearMap(sl2, 1, {(i,): Fraction(1)})
        assert ce_differential(ce_differential(w)).is_zero()
    pair = MultilinearMap(sl2, 2, {(0, 2): Fraction(3), (2, 0): Fraction(-3)})
    assert ce_differential(ce_differential(pair)).is_zero()


def test_differential_preserves_alternating_maps(sl2):
    w = MultilinearMap(sl2, 2, {(0, 1): Fraction(1), (1, 0): Fraction(-1)})
    assert w.is_alternating()
    assert ce_differential(w).is_alternating()


def test_arity_cap_is_enforced(sl2):
    top = MultilinearMap(sl2, 4, {(0, 1, 2, 0): Fraction(1)})
    with pytest.raises(UnsupportedArityError):
        ce_differential(top)
    with pytest.raises(UnsupportedArityError):
        MultilinearMap(sl2, 5, {})


def test_is_alternating_detects_symmetry(sl2):
    b = MultilinearMap.from_matrix(sl2, sl2.form)
    assert not b.is_alternating()
    w = MultilinearMap(sl2, 2, {(0, 1): Fraction(2), (1, 0): Fraction(-2)})
    assert w.is_alternating()
    diag = MultilinearMap(sl2, 2, {(1, 1): Fraction(1)})
    assert not diag.is_alternating()


def test_bracket_coproduct_defining_property(sl2_ctx):
    """pairing(delta(x), e_i ^ e_j) recovers B(x, [e_i, e_j]) exhaustively."""
    g = sl2_ctx.adapted
    space = sl2_ctx.space
    es = basis(3)
    for x in es:
        delta = bracket_coproduct(space, g, x)
        assert delta.degrees() <= {2}
        for i in range(3):
            for j in range(i + 1, 3):
                wedge = space.blade((i, j))
                assert pairing(delta, wedge) == g.b(x, g.bracket(es[i], es[j]))


def test_bracket_coproduct_is_linear(sl2_ctx):
    g = sl2_ctx.adapted
    space = sl2_ctx.space
    x = (Fraction(2), Fraction(-1), Fraction(3))
    combo = bracket_coproduct(space, g, x)
    parts = [bracket_coproduct(space, g, unit_vector(3, i)) for i in range(3)]
    assert combo == 2 * parts[0] + (-1) * parts[1] + 3 * parts[2]


def test_form_of_trivector_is_alternating(sl2_ctx):
    w = form_of_trivector(sl2_ctx.adapted, sl2_ctx.v)
    assert w.arity == 3
    assert w.is_alternating()
