"""Quaternion <-> 4x4 real matrix homomorphism.

[p] (standard) encodes left multiplication p*q, [q]+ (transmuted) encodes right
multiplication p*q acting on p. A bar operator e1|e2 is q -> e1 q e2 with matrix
[e1][e2]+. Any 4x4 real matrix is the operator matrix of exactly one canonical form.

Matrices are float64 numpy arrays of shape (4, 4), row-major; r_ij in docs is 1-based.
"""
import logging
from collections import deque
from dataclasses import dataclass

import numpy as np

from .forms import CanonicalForm
from .quaternion import (
    ALL_AXES,
    Axis,
    Quaternion,
    basis,
    format_real,
    json_number,
    unit_product,
)

logger = logging.getLogger(__name__)

Matrix4 = np.ndarray


@dataclass(frozen=True, slots=True)
class BarOp:
    """Signed bar operator sign * (left|right): q -> sign * left q right."""

    left: Axis
    right: Axis
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"bar operator sign must be +1 or -1, got {self.sign}")

    def __str__(self):
        return ("-" if self.sign < 0 else "+") + f"({self.left.symbol}|{self.right.symbol})"


def vec(q: Quaternion) -> np.ndarray:
    return np.array(q.as_tuple(), dtype=float)


def identity() -> Matrix4:
    return np.eye(4)


def zero() -> Matrix4:
    return np.zeros((4, 4))


def encode_standard(p: Quaternion) -> Matrix4:
    """[p] with [p] vec(q) = vec(p q)."""
    p0, p1, p2, p3 = p
    return np.array([
        [p0, -p1, -p2, -p3],
        [p1, p0, -p3, p2],
        [p2, p3, p0, -p1],
        [p3, -p2, p1, p0],
    ], dtype=float)


def encode_transmuted(q: Quaternion) -> Matrix4:
    """[q]+ with [q]+ vec(p) = vec(p q); [q] with its lower-right 3x3 block transposed."""
    q0, q1, q2, q3 = q
    return np.array([
        [q0, -q1, -q2, -q3],
        [q1, q0, q3, -q2],
        [q2, -q3, q0, q1],
        [q3, q2, -q1, q0],
    ], dtype=float)


def mat_multiply(a: Matrix4, b: Matrix4) -> Matrix4:
    return a @ b


def mat_add(a: Matrix4, b: Matrix4) -> Matrix4:
    return a + b


def mat_vec(r: Matrix4, q: Quaternion) -> Quaternion:
    return Quaternion(*(r @ vec(q)))


def bar_operator_matrix(op: BarOp) -> Matrix4:
    return op.sign * (encode_standard(basis(op.left)) @ encode_transmuted(basis(op.right)))


def compose_bar(a: BarOp, b: BarOp) -> BarOp:
    """a after b: (e1|e2)(f1|f2) = (e1 f1 | f2 e2)."""
    s1, left = unit_product(a.left, b.left)
    s2, right = unit_product(b.right, a.right)
    return BarOp(left, right, a.sign * b.sign * s1 * s2)


def bar_operator_form(op: BarOp) -> CanonicalForm:
    """(e1|e2) as a canonical form: coefficient sign*e1 in the e2 slot."""
    coeffs = [Quaternion()] * 4
    coeffs[op.right.value] = op.sign * basis(op.left)
    return CanonicalForm(*coeffs)


def listed_operator_set() -> frozenset:
    """The fourteen signed operators +-(1|1), +-(1|e), +-(e|1) for e in {i, j, k}."""
    ops = set()
    for sign in (1, -1):
        for axis in ALL_AXES:
            ops.add(BarOp(Axis.ONE, axis, sign))
            ops.add(BarOp(axis, Axis.ONE, sign))
    return frozenset(ops)


def operator_group(generators) -> frozenset:
    """Closure of a set of signed bar operators under composition."""
    group = set(generators)
    pending = deque(group)
    while pending:
        a = pending.popleft()
        for b in list(group):
            for c in (compose_bar(a, b), compose_bar(b, a)):
                if c not in group:
                    group.add(c)
                    pending.append(c)
    logger.debug("Operator closure: %s generators -> %s elements.", len(set(generators)), len(group))
    return frozenset(group)


def operator_matrix(f: CanonicalForm) -> Matrix4:
    """Matrix of (A|1) + (B|i) + (C|j) + (D|k)."""
    r = encode_standard(f.A)
    r = r + encode_standard(f.B) @ encode_transmuted(basis(Axis.I))
    r = r + encode_standard(f.C) @ encode_transmuted(basis(Axis.J))
    r = r + encode_standard(f.D) @ encode_transmuted(basis(Axis.K))
    return r


def decode(r: Matrix4) -> CanonicalForm:
    """Split any 4x4 real matrix into (A|1) + (B|i) + (C|j) + (D|k).

    Four independent systems of four unknowns, each solved by averaging; e.g.
    {a0, b1, c2, d3} only uses the diagonal. beta0 takes +r34 (the combined matrix
    has r34 = -a1 + b0 - c3 - d2).
    """
    r = np.asarray(r, dtype=float)
    if r.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {r.shape}")
    (r11, r12, r13, r14), (r21, r22, r23, r24), (r31, r32, r33, r34), (r41, r42, r43, r44) = r.tolist()
    a = Quaternion(
        (r11 + r22 + r33 + r44) / 4,
        (r21 - r12 + r43 - r34) / 4,
        (r31 - r13 - r42 + r24) / 4,
        (r41 - r14 + r32 - r23) / 4,
    )
    b = Quaternion(
        (r21 - r12 - r43 + r34) / 4,
        (-r11 - r22 + r33 + r44) / 4,
        (-r41 - r14 - r32 - r23) / 4,
        (r31 + r13 - r42 - r24) / 4,
    )
    c = Quaternion(
        (r31 - r13 + r42 - r24) / 4,
        (r41 + r14 - r32 - r23) / 4,
        (-r11 + r22 - r33 + r44) / 4,
        (-r21 - r12 - r43 - r34) / 4,
    )
    d = Quaternion(
        (r41 - r14 - r32 + r23) / 4,
        (-r31 - r13 - r42 - r24) / 4,
        (r21 + r12 - r43 - r34) / 4,
        (-r11 + r22 + r33 - r44) / 4,
    )
    return CanonicalForm(a, b, c, d)


def format_matrix(r: Matrix4, digits: int | None = None) -> str:
    """Four bracketed rows, one per line."""
    return "\n".join("[" + ",".join(format_real(x, digits) for x in row) + "]" for row in np.asarray(r).tolist())


def matrix_to_json(r: Matrix4) -> list:
    """Row-major list of 16 numbers."""
    return [json_number(x) for x in np.asarray(r, dtype=float).ravel().tolist()]
