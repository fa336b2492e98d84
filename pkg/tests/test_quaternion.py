"""Tests for quaternion arithmetic, conjugates, involutions and literals."""
import numpy as np
import pytest
from hypothesis import given

from src.quaternion import (
    ALL_AXES,
    Axis,
    I,
    J,
    K,
    ONE,
    ZERO,
    Quaternion,
    add,
    anti_involution,
    basis,
    component,
    conjugate,
    format_quaternion,
    format_real,
    generalized_conjugate,
    inverse,
    isclose,
    multiply,
    parse_quaternion,
    scale,
    unit_product,
)
from tests.support import axes, int_quaternions, random_quaternion, real_quaternions


# Independent oracle: expand both factors over the basis and look up unit products in a written-out table.
_CAYLEY = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _cayley_multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    out = dict.fromkeys("1ijk", 0.0)
    for a, pa in zip("1ijk", p):
        for b, qb in zip("1ijk", q):
            sign, unit = _CAYLEY[(a, b)]
            out[unit] += sign * pa * qb
    return Quaternion(*(out[u] for u in "1ijk"))


def test_multiply_unit_rules():
    assert multiply(I, J) == K
    assert multiply(J, K) == I
    assert multiply(K, I) == J
    assert multiply(J, I) == -K
    for e in (I, J, K):
        assert multiply(e, e) == -ONE


def test_multiply_examples():
    assert multiply(Quaternion(1, 1, 0, 0), Quaternion(1, 0, 1, 0)) == Quaternion(1, 1, 1, 1)
    assert multiply(Quaternion(1, 2, 3, 4), Quaternion(5, 6, 7, 8)) == Quaternion(-60, 12, 30, 24)


def test_multiply_matches_cayley_table_oracle():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        p = random_quaternion(rng, integer=False, bound=10)
        q = random_quaternion(rng, integer=False, bound=10)
        assert isclose(multiply(p, q), _cayley_multiply(p, q), 1e-12)


def test_add_and_scale():
    assert add(Quaternion(1, 2, 3, 4), Quaternion(4, 3, 2, 1)) == Quaternion(5, 5, 5, 5)
    assert scale(0, Quaternion(1, 2, 3, 4)) == ZERO
    assert scale(2, Quaternion(1, 0, 0, 1)) == Quaternion(2, 0, 0, 2)
    assert 2 * Quaternion(1, 0, 0, 1) == Quaternion(2, 0, 0, 2)


@given(int_quaternions, int_quaternions, int_quaternions)
def test_ring_laws_exact_on_integers(p, q, r):
    assert multiply(multiply(p, q), r) == multiply(p, multiply(q, r))
    assert multiply(p, add(q, r)) == add(multiply(p, q), multiply(p, r))
    assert multiply(add(p, q), r) == add(multiply(p, r), multiply(q, r))


def test_conjugate_examples():
    assert conjugate(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4)
    assert conjugate(Quaternion(5, 0, 0, 0)) == Quaternion(5, 0, 0, 0)


@given(int_quaternions, int_quaternions)
def test_conjugate_is_an_involution(p, q):
    assert conjugate(conjugate(p)) == p
    assert conjugate(add(p, q)) == add(conjugate(p), conjugate(q))
    assert conjugate(multiply(p, q)) == multiply(conjugate(q), conjugate(p))


def test_generalized_conjugate_examples():
    assert generalized_conjugate(Quaternion(1, 2, 3, 4), Axis.I) == Quaternion(1, -2, 3, 4)
    assert generalized_conjugate(Quaternion(1, 2, 3, 4), Axis.J) == Quaternion(1, 2, -3, 4)
    assert generalized_conjugate(Quaternion(1, 2, 3, 4), Axis.K) == Quaternion(1, 2, 3, -4)
    assert generalized_conjugate(Quaternion(5, 0, 0, 0), Axis.K) == Quaternion(5, 0, 0, 0)


def test_generalized_conjugate_rejects_scalar_unit():
    with pytest.raises(ValueError):
        generalized_conjugate(Quaternion(1, 2, 3, 4), Axis.ONE)
    with pytest.raises(ValueError):
        anti_involution(Quaternion(1, 2, 3, 4), Axis.ONE)


@given(int_quaternions, int_quaternions, axes)
def test_generalized_conjugate_involution_laws(p, q, axis):
    f = lambda x: generalized_conjugate(x, axis)  # noqa: E731
    assert f(f(p)) == p
    assert f(add(p, q)) == add(f(p), f(q))
    assert f(multiply(p, q)) == multiply(f(q), f(p))


def test_anti_involution_examples():
    assert anti_involution(Quaternion(1, 2, 3, 4), Axis.I) == Quaternion(1, 2, -3, -4)
    assert anti_involution(Quaternion(1, 2, 3, 4), Axis.K) == Quaternion(1, -2, -3, 4)
    assert anti_involution(Quaternion(7, 0, 0, 0), Axis.J) == Quaternion(7, 0, 0, 0)


@given(int_quaternions, int_quaternions, axes)
def test_anti_involution_laws(p, q, axis):
    f = lambda x: anti_involution(x, axis)  # noqa: E731
    assert f(f(p)) == p
    assert f(add(p, q)) == add(f(p), f(q))
    assert f(multiply(p, q)) == multiply(f(p), f(q))


@given(int_quaternions, axes)
def test_anti_involution_is_conjugate_of_generalized_conjugate(q, axis):
    assert anti_involution(q, axis) == conjugate(generalized_conjugate(q, axis))


def test_component_examples():
    assert component(Quaternion(1, 2, 3, 4), Axis.ONE) == 1
    assert component(Quaternion(1, 2, 3, 4), Axis.I) == 2
    assert component(Quaternion(1, 2, 3, 4), Axis.J) == 3
    assert component(Quaternion(0, 0, 0, 9), Axis.K) == 9


@given(int_quaternions)
def test_components_reconstruct_quaternion(q):
    rebuilt = ZERO
    for axis in ALL_AXES:
        rebuilt = add(rebuilt, scale(component(q, axis), basis(axis)))
    assert rebuilt == q


@given(real_quaternions)
def test_component_matches_stored_field(q):
    assert [component(q, a) for a in ALL_AXES] == list(q)


def test_sum_of_conjugates_identity_is_off_by_the_scalar_part():
    # (gconj(q, i) + conj(q)) i / 2 gives q1 + q0 i, not the real q1
    q = Quaternion(1, 2, 3, 4)
    summed = multiply(scale(0.5, add(generalized_conjugate(q, Axis.I), conjugate(q))), I)
    assert summed == Quaternion(2, 1, 0, 0)
    assert summed != Quaternion(component(q, Axis.I), 0, 0, 0)


def test_unit_product_table():
    assert unit_product(Axis.I, Axis.J) == (1, Axis.K)
    assert unit_product(Axis.J, Axis.I) == (-1, Axis.K)
    assert unit_product(Axis.K, Axis.K) == (-1, Axis.ONE)
    assert unit_product(Axis.ONE, Axis.J) == (1, Axis.J)


def test_inverse():
    q = Quaternion(1, 2, 3, 4)
    assert isclose(multiply(q, inverse(q)), ONE)
    with pytest.raises(ZeroDivisionError):
        inverse(ZERO)


def test_isclose_tolerance_is_a_parameter():
    assert isclose(Quaternion(1, 0, 0, 0), Quaternion(1 + 1e-13, 0, 0, 0))
    assert not isclose(Quaternion(1, 0, 0, 0), Quaternion(1.001, 0, 0, 0))
    assert isclose(Quaternion(1, 0, 0, 0), Quaternion(1.001, 0, 0, 0), tol=1e-2)


def test_parse_tuple_literal():
    assert parse_quaternion("(1,2,3,4)") == Quaternion(1, 2, 3, 4)
    assert parse_quaternion(" ( -1 , 0.5, 1e2, -.25 ) ") == Quaternion(-1, 0.5, 100, -0.25)


def test_parse_cartesian_literal():
    assert parse_quaternion("1+2i+3j+4k") == Quaternion(1, 2, 3, 4)
    assert parse_quaternion("-k") == Quaternion(0, 0, 0, -1)
    assert parse_quaternion("2.5") == Quaternion(2.5, 0, 0, 0)
    assert parse_quaternion("i - 0.5j") == Quaternion(0, 1, -0.5, 0)
    assert parse_quaternion("3j+1") == Quaternion(1, 0, 3, 0)


@pytest.mark.parametrize("text", ["", "1+2i+3i", "1i2", "x", "+", "(1,2,3)", "2ii"])
def test_parse_rejects_malformed_literals(text):
    with pytest.raises(ValueError):
        parse_quaternion(text)


def test_format_quaternion():
    assert format_quaternion(Quaternion(1, -0.0, 0.5, 2)) == "(1,0,0.5,2)"
    assert format_quaternion(Quaternion(-1, 0, 0, 0)) == "(-1,0,0,0)"
    assert format_real(1 / 3) == "0.333333333333"
    assert parse_quaternion(format_quaternion(Quaternion(1, -2, 3, -4))) == Quaternion(1, -2, 3, -4)


@pytest.mark.parametrize("text", ["1e400", "(1,2,3,1e999)", "1-1e999i", "-1e309k"])
def test_parse_rejects_non_finite_literals(text):
    with pytest.raises(ValueError):
        parse_quaternion(text)
