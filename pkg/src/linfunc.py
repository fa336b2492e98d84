"""Composition calculus and special forms of linear quaternion functions.

Series (composition) and parallel (weighted sum) combinations of canonical forms stay in
canonical form without expanding back into term lists.
"""
import logging
from collections.abc import Sequence

from .forms import (
    IDENTITY,
    RIGHT_IDENTITY,
    SLOT_UNITS,
    ZERO_FORM,
    AnyForm,
    CanonicalForm,
    RightForm,
    Term,
    TermList,
    add_forms,
    equivalent,
    evaluate,
    evaluate_general,
    evaluate_right,
    form_to_json,
    format_tuple,
    scale_form,
    subtract_forms,
    weighted_sum,
)
from .quaternion import (
    IMAGINARY_AXES,
    ONE,
    Axis,
    Quaternion,
    add,
    basis,
    multiply,
    negate,
    subtract,
)
from .reducers import InvolutionMethod, MatrixMethod, reduce_partitioned

logger = logging.getLogger(__name__)


# Both honour LQF_REDUCE_WORKERS and LQF_PARTITION_SIZE.
def reduce_matrix_method(terms: TermList) -> CanonicalForm:
    return reduce_partitioned(terms, MatrixMethod.name)


def reduce_involution_method(terms: TermList) -> CanonicalForm:
    return reduce_partitioned(terms, InvolutionMethod.name)


def compose(f2: CanonicalForm, f1: CanonicalForm) -> CanonicalForm:
    """f2 after f1, collected straight from the two tuples."""
    a2, b2, c2, d2 = f2
    a1, b1, c1, d1 = f1
    a3 = subtract(subtract(subtract(multiply(a2, a1), multiply(b2, b1)), multiply(c2, c1)), multiply(d2, d1))
    b3 = add(subtract(add(multiply(a2, b1), multiply(b2, a1)), multiply(c2, d1)), multiply(d2, c1))
    c3 = subtract(add(add(multiply(a2, c1), multiply(b2, d1)), multiply(c2, a1)), multiply(d2, b1))
    d3 = add(add(subtract(multiply(a2, d1), multiply(b2, c1)), multiply(c2, b1)), multiply(d2, a1))
    return CanonicalForm(a3, b3, c3, d3)


def compose_all(forms: Sequence[CanonicalForm]) -> CanonicalForm:
    """Cascade in application order: compose_all([f1, f2, f3]) = f3 o f2 o f1."""
    result = IDENTITY
    for f in forms:
        result = compose(f, result)
    logger.debug("Composed a cascade of %s forms.", len(forms))
    return result


def expand_composition(f2: CanonicalForm, f1: CanonicalForm) -> list[Term]:
    """The sixteen unreduced terms of f2 o f1: (X2 X1) q (u1 u2) per pair of slots."""
    terms = []
    for x2, u2 in zip(f2, SLOT_UNITS):
        for x1, u1 in zip(f1, SLOT_UNITS):
            terms.append((multiply(x2, x1), multiply(u1, u2)))
    return terms


def conjugation_form() -> CanonicalForm:
    """conj(q) = -(q + i q i + j q j + k q k) / 2."""
    return CanonicalForm(
        Quaternion(-0.5, 0, 0, 0),
        Quaternion(0, -0.5, 0, 0),
        Quaternion(0, 0, -0.5, 0),
        Quaternion(0, 0, 0, -0.5),
    )


def anti_involution_form(axis: Axis) -> CanonicalForm:
    """q -> -e q e."""
    if axis not in IMAGINARY_AXES:
        raise ValueError(f"expected one of i, j, k; got {axis.symbol}")
    e = basis(axis)
    return reduce_matrix_method([(negate(e), e)])


def generalized_conjugate_form(axis: Axis) -> CanonicalForm:
    """q -> -e conj(q) e."""
    return compose(anti_involution_form(axis), conjugation_form())


def component_form(which: Axis) -> CanonicalForm:
    """q -> the selected real component of q, as a real-valued quaternion."""
    if which is Axis.ONE:
        return scale_form(0.5, add_forms(IDENTITY, conjugation_form()))
    half_difference = scale_form(0.5, subtract_forms(generalized_conjugate_form(which), IDENTITY))
    return compose(reduce_matrix_method([(ONE, basis(which))]), half_difference)


def _right_basis_table() -> dict:
    """(right slot, component) -> (left slot, component, sign), from reducing e_t q e_b."""
    table = {}
    for t, unit in enumerate(SLOT_UNITS):
        for b, component in enumerate(SLOT_UNITS):
            left = reduce_matrix_method([(unit, component)])
            hits = [
                (s, a, value)
                for s, coefficient in enumerate(left)
                for a, value in enumerate(coefficient)
                if value != 0
            ]
            if len(hits) != 1 or abs(hits[0][2]) != 1:
                raise ArithmeticError(f"bar operator ({t}|{b}) did not reduce to a single unit term")
            s, a, value = hits[0]
            table[(t, b)] = (s, a, 1 if value > 0 else -1)
    return table


# Each right-form basis term lands on exactly one signed left-form basis term.
_RIGHT_TO_LEFT = _right_basis_table()


def to_right_form(f: CanonicalForm) -> RightForm:
    left = [list(c) for c in f]
    right = [[0.0] * 4 for _ in range(4)]
    for (t, b), (s, a, sign) in _RIGHT_TO_LEFT.items():
        right[t][b] = sign * left[s][a]
    return RightForm(*(Quaternion(*row) for row in right))


def from_right_form(g: RightForm) -> CanonicalForm:
    return reduce_matrix_method(list(zip(SLOT_UNITS, g)))


def compose_right(g2: RightForm, g1: RightForm) -> RightForm:
    """g2 after g1 for right forms; the quaternion product pattern with g2's slots as the
    left factor and every coefficient product ordered g1 first:

        A3 = A1 A2 - B1 B2 - C1 C2 - D1 D2
        B3 = A1 B2 + B1 A2 - C1 D2 + D1 C2
        C3 = A1 C2 + C1 A2 + B1 D2 - D1 B2
        D3 = A1 D2 + D1 A2 - B1 C2 + C1 B2
    """
    a2, b2, c2, d2 = g2
    a1, b1, c1, d1 = g1
    a3 = subtract(subtract(subtract(multiply(a1, a2), multiply(b1, b2)), multiply(c1, c2)), multiply(d1, d2))
    b3 = add(subtract(add(multiply(a1, b2), multiply(b1, a2)), multiply(c1, d2)), multiply(d1, c2))
    c3 = subtract(add(add(multiply(a1, c2), multiply(c1, a2)), multiply(b1, d2)), multiply(d1, b2))
    d3 = add(subtract(add(multiply(a1, d2), multiply(d1, a2)), multiply(b1, c2)), multiply(c1, b2))
    return RightForm(a3, b3, c3, d3)


__all__ = [
    "IDENTITY",
    "RIGHT_IDENTITY",
    "ZERO_FORM",
    "AnyForm",
    "CanonicalForm",
    "RightForm",
    "TermList",
    "add_forms",
    "anti_involution_form",
    "component_form",
    "compose",
    "compose_all",
    "compose_right",
    "conjugation_form",
    "equivalent",
    "evaluate",
    "evaluate_general",
    "evaluate_right",
    "expand_composition",
    "form_to_json",
    "format_tuple",
    "from_right_form",
    "generalized_conjugate_form",
    "reduce_involution_method",
    "reduce_matrix_method",
    "reduce_partitioned",
    "scale_form",
    "subtract_forms",
    "to_right_form",
    "weighted_sum",
]
