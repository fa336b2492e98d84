"""Canonical forms of linear quaternion functions.

A CanonicalForm {A, B, C, D} is the function q -> A q + B q i + C q j + D q k.
A RightForm {A', B', C', D'} is q -> q A' + i q B' + j q C' + k q D'.
A TermList [(m, n), ...] is the unreduced sum of m q n.
"""
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Union

from . import config
from .quaternion import (
    I,
    J,
    K,
    ONE,
    ZERO,
    Quaternion,
    add,
    format_quaternion,
    isclose,
    multiply,
    quaternion_to_json,
    scale,
)

Term = tuple[Quaternion, Quaternion]
TermList = Sequence[Term]

SLOT_NAMES = ("A", "B", "C", "D")
# Right-hand unit of each left slot (and left-hand unit of each right slot)
SLOT_UNITS = (ONE, I, J, K)


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    A: Quaternion = ZERO
    B: Quaternion = ZERO
    C: Quaternion = ZERO
    D: Quaternion = ZERO

    def coefficients(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return (self.A, self.B, self.C, self.D)

    def __iter__(self):
        return iter(self.coefficients())

    def __call__(self, q: Quaternion) -> Quaternion:
        return evaluate(self, q)


@dataclass(frozen=True, slots=True)
class RightForm:
    A: Quaternion = ZERO
    B: Quaternion = ZERO
    C: Quaternion = ZERO
    D: Quaternion = ZERO

    def coefficients(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return (self.A, self.B, self.C, self.D)

    def __iter__(self):
        return iter(self.coefficients())

    def __call__(self, q: Quaternion) -> Quaternion:
        return evaluate_right(self, q)


AnyForm = Union[CanonicalForm, RightForm]

IDENTITY = CanonicalForm(A=ONE)
ZERO_FORM = CanonicalForm()
RIGHT_IDENTITY = RightForm(A=ONE)


def evaluate(f: CanonicalForm, q: Quaternion) -> Quaternion:
    """A q + B q i + C q j + D q k, term by term."""
    total = multiply(f.A, q)
    total = add(total, multiply(multiply(f.B, q), I))
    total = add(total, multiply(multiply(f.C, q), J))
    return add(total, multiply(multiply(f.D, q), K))


def evaluate_right(g: RightForm, q: Quaternion) -> Quaternion:
    """q A' + i q B' + j q C' + k q D'."""
    total = multiply(q, g.A)
    total = add(total, multiply(multiply(I, q), g.B))
    total = add(total, multiply(multiply(J, q), g.C))
    return add(total, multiply(multiply(K, q), g.D))


def evaluate_general(terms: TermList, q: Quaternion) -> Quaternion:
    """Sum of m q n over the term list; the empty list is the zero function."""
    total = ZERO
    for m, n in terms:
        total = add(total, multiply(multiply(m, q), n))
    return total


def add_forms(f1: CanonicalForm, f2: CanonicalForm) -> CanonicalForm:
    return CanonicalForm(*(add(a, b) for a, b in zip(f1, f2)))


def scale_form(factor: float, f: CanonicalForm) -> CanonicalForm:
    return CanonicalForm(*(scale(factor, c) for c in f))


def subtract_forms(f1: CanonicalForm, f2: CanonicalForm) -> CanonicalForm:
    return add_forms(f1, scale_form(-1.0, f2))


def weighted_sum(weights: Sequence[float], forms: Sequence[CanonicalForm]) -> CanonicalForm:
    """Parallel combination sum(w * f); both sequences must have the same length."""
    if len(weights) != len(forms):
        raise ValueError(f"{len(weights)} weights for {len(forms)} forms")
    total = ZERO_FORM
    for w, f in zip(weights, forms):
        total = add_forms(total, scale_form(w, f))
    return total


def equivalent(f: AnyForm, g: AnyForm, tol: float | None = None) -> bool:
    """True iff all four coefficients agree within tol.

    Coefficients are unique per function, so this is also functional equality.
    """
    if tol is None:
        tol = config.TOLERANCE
    if tol < 0 or math.isnan(tol):
        raise ValueError(f"tolerance must be >= 0, got {tol}")
    if type(f) is not type(g):
        raise TypeError("cannot compare a left form with a right form")
    return all(isclose(a, b, tol) for a, b in zip(f, g))


def format_tuple(f: AnyForm, digits: int | None = None) -> str:
    """Text rendering "{ (..); (..); (..); (..) }"."""
    return "{ " + "; ".join(format_quaternion(c, digits) for c in f) + " }"


def form_to_json(f: AnyForm) -> dict:
    return {name: quaternion_to_json(c) for name, c in zip(SLOT_NAMES, f)}
