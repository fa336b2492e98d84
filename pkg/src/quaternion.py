"""Quaternion arithmetic: product, conjugates, involutions and component extraction.

Quaternions are immutable 4-tuples (q0, q1, q2, q3) meaning q0 + q1 i + q2 j + q3 k.
Reduction arithmetic only uses +, -, * and halving, so integer-valued inputs stay exact.
"""
import math
import re
from dataclasses import dataclass
from enum import Enum

from . import config


class Axis(Enum):
    """Basis units. ONE only participates where the scalar unit is allowed."""

    ONE = 0
    I = 1
    J = 2
    K = 3

    @property
    def symbol(self) -> str:
        return "1ijk"[self.value]

    @classmethod
    def from_symbol(cls, symbol: str) -> "Axis":
        if len(symbol) != 1 or symbol not in "1ijk":
            raise ValueError(f"unknown basis unit {symbol!r}")
        return cls("1ijk".index(symbol))


IMAGINARY_AXES = (Axis.I, Axis.J, Axis.K)
ALL_AXES = (Axis.ONE, Axis.I, Axis.J, Axis.K)


@dataclass(frozen=True, slots=True)
class Quaternion:
    q0: float = 0.0
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    def __post_init__(self):
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_sequence(cls, values) -> "Quaternion":
        values = list(values)
        if len(values) != 4:
            raise ValueError(f"quaternion needs 4 components, got {len(values)}")
        return cls(*values)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.q0, self.q1, self.q2, self.q3)

    def __iter__(self):
        return iter(self.as_tuple())

    def __getitem__(self, index: int) -> float:
        return self.as_tuple()[index]

    def is_real(self) -> bool:
        return self.q1 == 0 and self.q2 == 0 and self.q3 == 0

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return subtract(self, other)

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return multiply(self, other)
        if isinstance(other, (int, float)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return scale(other, self)
        return NotImplemented

    def __str__(self):
        return format_quaternion(self)


ZERO = Quaternion(0, 0, 0, 0)
ONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)

_BASIS = {Axis.ONE: ONE, Axis.I: I, Axis.J: J, Axis.K: K}


def basis(axis: Axis) -> Quaternion:
    return _BASIS[axis]


def _require_imaginary(axis: Axis) -> None:
    if axis not in IMAGINARY_AXES:
        raise ValueError(f"expected one of i, j, k; got {axis.symbol}")


def multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product pq."""
    p0, p1, p2, p3 = p.q0, p.q1, p.q2, p.q3
    q0, q1, q2, q3 = q.q0, q.q1, q.q2, q.q3
    return Quaternion(
        p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
        p1 * q0 + p0 * q1 - p3 * q2 + p2 * q3,
        p2 * q0 + p0 * q2 + p3 * q1 - p1 * q3,
        p3 * q0 + p0 * q3 - p2 * q1 + p1 * q2,
    )


def add(p: Quaternion, q: Quaternion) -> Quaternion:
    return Quaternion(p.q0 + q.q0, p.q1 + q.q1, p.q2 + q.q2, p.q3 + q.q3)


def subtract(p: Quaternion, q: Quaternion) -> Quaternion:
    return Quaternion(p.q0 - q.q0, p.q1 - q.q1, p.q2 - q.q2, p.q3 - q.q3)


def negate(q: Quaternion) -> Quaternion:
    return Quaternion(-q.q0, -q.q1, -q.q2, -q.q3)


def scale(factor: float, q: Quaternion) -> Quaternion:
    return Quaternion(factor * q.q0, factor * q.q1, factor * q.q2, factor * q.q3)


def conjugate(q: Quaternion) -> Quaternion:
    return Quaternion(q.q0, -q.q1, -q.q2, -q.q3)


def norm_squared(q: Quaternion) -> float:
    return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3


def inverse(q: Quaternion) -> Quaternion:
    n = norm_squared(q)
    if n == 0:
        raise ZeroDivisionError("zero quaternion has no inverse")
    return scale(1.0 / n, conjugate(q))


def generalized_conjugate(q: Quaternion, axis: Axis) -> Quaternion:
    """-e conj(q) e for e in {i, j, k}; negates exactly the e-component of q."""
    _require_imaginary(axis)
    e = basis(axis)
    return negate(multiply(multiply(e, conjugate(q)), e))


def anti_involution(q: Quaternion, axis: Axis) -> Quaternion:
    """-e q e for e in {i, j, k}; keeps q0 and the e-component, negates the other two."""
    _require_imaginary(axis)
    e = basis(axis)
    return negate(multiply(multiply(e, q), e))


def component(q: Quaternion, which: Axis) -> float:
    """Real component of q selected by `which`, via the involution identities.

    q0 = (q + conj(q)) / 2 and q_e = (gconj(q, e) - q) e / 2 for e in {i, j, k}.
    """
    if which is Axis.ONE:
        part = scale(0.5, add(q, conjugate(q)))
    else:
        part = multiply(scale(0.5, subtract(generalized_conjugate(q, which), q)), basis(which))
    if not isclose(Quaternion(0, part.q1, part.q2, part.q3), ZERO):
        raise ArithmeticError(f"component extraction left a non-real residue: {part}")
    return part.q0


def unit_product(a: Axis, b: Axis) -> tuple[int, Axis]:
    """Product of two basis units as (sign, unit), e.g. (J, I) -> (-1, K)."""
    r = multiply(basis(a), basis(b))
    for axis, value in zip(ALL_AXES, r):
        if value != 0:
            return (1 if value > 0 else -1), axis
    raise ArithmeticError("product of basis units vanished")


def isclose(p: Quaternion, q: Quaternion, tol: float | None = None) -> bool:
    """Componentwise equality within an absolute-or-relative tolerance."""
    if tol is None:
        tol = config.TOLERANCE
    return all(math.isclose(a, b, rel_tol=tol, abs_tol=tol) for a, b in zip(p, q))


# Literal syntax: tuple "(a,b,c,d)" or Cartesian "a+bi+cj+dk" with optional parts.
NUMBER_PATTERN = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_SIGNED = rf"[+-]?{NUMBER_PATTERN}"
TUPLE_PATTERN = re.compile(
    rf"\(\s*({_SIGNED})\s*,\s*({_SIGNED})\s*,\s*({_SIGNED})\s*,\s*({_SIGNED})\s*\)"
)
_CARTESIAN_TERM = re.compile(rf"([+-]?)({NUMBER_PATTERN})?([ijk]?)")


def _finite(q: Quaternion, text: str) -> Quaternion:
    if not all(math.isfinite(c) for c in q):
        raise ValueError(f"quaternion literal {text!r} is out of range")
    return q


def parse_quaternion(text: str) -> Quaternion:
    """Parse a quaternion literal in tuple or Cartesian form."""
    src = text.strip()
    m = TUPLE_PATTERN.fullmatch(src)
    if m:
        return _finite(Quaternion(*(float(g) for g in m.groups())), text)
    compact = re.sub(r"\s+", "", src)
    if not compact:
        raise ValueError(f"empty quaternion literal {text!r}")
    parts = [0.0, 0.0, 0.0, 0.0]
    seen = set()
    pos = 0
    while pos < len(compact):
        m = _CARTESIAN_TERM.match(compact, pos)
        sign, number, unit = m.groups()
        if number is None and not unit:
            raise ValueError(f"bad quaternion literal {text!r} at offset {pos}")
        if pos > 0 and not sign:
            raise ValueError(f"missing sign between terms in {text!r}")
        axis = Axis.from_symbol(unit or "1")
        if axis in seen:
            raise ValueError(f"repeated {axis.symbol} part in {text!r}")
        seen.add(axis)
        value = float(number) if number is not None else 1.0
        parts[axis.value] = -value if sign == "-" else value
        pos = m.end()
    return _finite(Quaternion(*parts), text)


def format_real(x: float, digits: int | None = None) -> str:
    """Up to `digits` significant digits; integral values print without a decimal point."""
    if digits is None:
        digits = config.SIGNIFICANT_DIGITS
    if x == 0:
        return "0"
    return f"{x:.{digits}g}"


def format_quaternion(q: Quaternion, digits: int | None = None) -> str:
    return "(" + ",".join(format_real(c, digits) for c in q) + ")"


def json_number(x: float) -> int | float:
    """Integral values as JSON integers so golden output stays free of ".0"."""
    if math.isfinite(x) and x.is_integer() and abs(x) < 2 ** 53:
        return int(x)
    return x


def quaternion_to_json(q: Quaternion) -> list:
    return [json_number(c) for c in q]
