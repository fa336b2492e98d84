"""Seeded random corpora run through the whole pipeline: reducers, matrices, composition, right forms."""
import time

import numpy as np

from src.linfunc import (
    compose,
    compose_right,
    conjugation_form,
    evaluate,
    evaluate_general,
    evaluate_right,
    expand_composition,
    from_right_form,
    reduce_involution_method,
    reduce_matrix_method,
    to_right_form,
)
from src.forms import CanonicalForm, RightForm
from src.matrix_rep import BarOp, bar_operator_matrix, decode, encode_standard, encode_transmuted, operator_matrix, vec
from src.quaternion import (
    IMAGINARY_AXES,
    I,
    J,
    K,
    ONE,
    Axis,
    Quaternion,
    add,
    anti_involution,
    conjugate,
    generalized_conjugate,
    multiply,
)
from tests.support import BASIS_POINTS, close, forms_close, random_form, random_quaternion, random_terms, sample_points


def test_methods_bit_identical_on_integer_corpus():
    rng = np.random.default_rng(1)
    corpus = [random_terms(rng) for _ in range(1000)]
    started = time.perf_counter()
    for terms in corpus:
        assert reduce_matrix_method(terms) == reduce_involution_method(terms)
    assert time.perf_counter() - started < 5


def test_methods_agree_on_real_corpus():
    rng = np.random.default_rng(2)
    for _ in range(1000):
        terms = random_terms(rng, integer=False)
        assert forms_close(reduce_matrix_method(terms), reduce_involution_method(terms))


def test_reduced_form_matches_term_list():
    rng = np.random.default_rng(1)
    corpus = [random_terms(rng) for _ in range(1000)]
    for terms in corpus:
        f = reduce_matrix_method(terms)
        for q in sample_points(rng, count=20):
            assert close(evaluate(f, q), evaluate_general(terms, q), abs_=1e-8)


def test_k_i_bar_operator_fixture():
    expected = np.array([
        [0, 0, 1, 0],
        [0, 0, 0, -1],
        [1, 0, 0, 0],
        [0, -1, 0, 0],
    ], dtype=float)
    r = bar_operator_matrix(BarOp(Axis.K, Axis.I))
    assert np.array_equal(r, expected)
    assert decode(expected) == CanonicalForm(B=K)


def test_combined_matrix_entries():
    rng = np.random.default_rng(4)
    for _ in range(100):
        f = random_form(rng, integer=False)
        (a0, a1, _, _), (b0, b1, _, _), (_, _, c2, c3), (_, _, d2, d3) = f
        r = operator_matrix(f)
        assert np.isclose(r[0, 0], a0 - b1 - c2 - d3, rtol=1e-12, atol=1e-12)
        assert np.isclose(r[1, 0], a1 + b0 - c3 + d2, rtol=1e-12, atol=1e-12)
    for _ in range(100):
        f = random_form(rng)
        assert decode(operator_matrix(f)) == f


def test_composition_corpus():
    rng = np.random.default_rng(5)
    started = time.perf_counter()
    for n in range(500):
        integer = n % 2 == 0
        f2, f1 = random_form(rng, integer), random_form(rng, integer)
        f3 = compose(f2, f1)
        for q in sample_points(rng, count=20):
            assert close(evaluate(f3, q), evaluate(f2, evaluate(f1, q)), rel=1e-12, abs_=1e-7)
        expanded = reduce_matrix_method(expand_composition(f2, f1))
        if integer:
            assert expanded == f3
        else:
            assert forms_close(expanded, f3, abs_=1e-8)
        assert np.allclose(operator_matrix(f3), operator_matrix(f2) @ operator_matrix(f1), rtol=1e-12, atol=1e-8)
    assert time.perf_counter() - started < 5


def test_involution_law_corpus():
    rng = np.random.default_rng(6)
    for axis in IMAGINARY_AXES:
        for _ in range(500):
            p, q = random_quaternion(rng), random_quaternion(rng)
            assert generalized_conjugate(generalized_conjugate(p, axis), axis) == p
            assert generalized_conjugate(add(p, q), axis) == add(generalized_conjugate(p, axis), generalized_conjugate(q, axis))
            assert generalized_conjugate(multiply(p, q), axis) == multiply(
                generalized_conjugate(q, axis), generalized_conjugate(p, axis)
            )
            assert anti_involution(anti_involution(p, axis), axis) == p
            assert anti_involution(add(p, q), axis) == add(anti_involution(p, axis), anti_involution(q, axis))
            assert anti_involution(multiply(p, q), axis) == multiply(anti_involution(p, axis), anti_involution(q, axis))


def test_conjugation_form_and_flipped_signs():
    flipped = CanonicalForm(Quaternion(-0.5), Quaternion(0, 0.5), Quaternion(0, 0, 0.5), Quaternion(0, 0, 0, 0.5))
    assert evaluate(flipped, ONE) == Quaternion(-2)
    rng = np.random.default_rng(7)
    points = BASIS_POINTS + [random_quaternion(rng) for _ in range(100)]
    for q in points:
        assert evaluate(conjugation_form(), q) == conjugate(q)


def test_homomorphism_corpus():
    rng = np.random.default_rng(8)
    for _ in range(500):
        p = random_quaternion(rng, integer=False)
        q = random_quaternion(rng, integer=False)
        pq = multiply(p, q)
        assert np.allclose(encode_standard(pq), encode_standard(p) @ encode_standard(q), rtol=1e-12, atol=1e-12)
        assert np.allclose(encode_transmuted(pq), encode_transmuted(q) @ encode_transmuted(p), rtol=1e-12, atol=1e-12)
        assert np.allclose(
            encode_standard(p) @ encode_transmuted(q), encode_transmuted(q) @ encode_standard(p), rtol=1e-12, atol=1e-12
        )
        assert np.allclose(encode_standard(p) @ vec(q), vec(pq), rtol=1e-12, atol=1e-12)


def test_right_form_corpus():
    rng = np.random.default_rng(9)
    for _ in range(200):
        f = random_form(rng)
        assert from_right_form(to_right_form(f)) == f
        g = RightForm(*f)
        assert to_right_form(from_right_form(g)) == g
    for _ in range(200):
        g2 = RightForm(*random_form(rng, integer=False))
        g1 = RightForm(*random_form(rng, integer=False))
        oracle = to_right_form(compose(from_right_form(g2), from_right_form(g1)))
        assert forms_close(compose_right(g2, g1), oracle, abs_=1e-8)
        for q in BASIS_POINTS:
            assert close(evaluate_right(compose_right(g2, g1), q), evaluate_right(g2, evaluate_right(g1, q)), abs_=1e-8)


def test_unit_products_as_bar_operators():
    # e q e' for units lands on one signed unit coefficient in exactly one slot
    for m in (ONE, I, J, K):
        for n in (ONE, I, J, K):
            f = reduce_matrix_method([(m, n)])
            nonzero = [c for slot in f for c in slot if c != 0]
            assert nonzero in ([1.0], [-1.0])
