"""Shared hypothesis strategies, random corpora and comparison helpers."""
import math

import numpy as np
from hypothesis import strategies as st

from src.forms import CanonicalForm, RightForm
from src.quaternion import IMAGINARY_AXES, Quaternion

BASIS_POINTS = [Quaternion(1, 0, 0, 0), Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)]

small_ints = st.integers(min_value=-9, max_value=9)
reals = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)

int_quaternions = st.builds(Quaternion, small_ints, small_ints, small_ints, small_ints)
real_quaternions = st.builds(Quaternion, reals, reals, reals, reals)
int_forms = st.builds(CanonicalForm, int_quaternions, int_quaternions, int_quaternions, int_quaternions)
real_forms = st.builds(CanonicalForm, real_quaternions, real_quaternions, real_quaternions, real_quaternions)
int_right_forms = st.builds(RightForm, int_quaternions, int_quaternions, int_quaternions, int_quaternions)
axes = st.sampled_from(IMAGINARY_AXES)


def term_lists(quaternions, max_size: int = 16):
    return st.lists(st.tuples(quaternions, quaternions), max_size=max_size)


def close(p, q, rel: float = 1e-12, abs_: float = 1e-9) -> bool:
    """Componentwise closeness for quaternions (or any equal-length iterables of reals)."""
    return all(math.isclose(a, b, rel_tol=rel, abs_tol=abs_) for a, b in zip(p, q))


def forms_close(f, g, rel: float = 1e-12, abs_: float = 1e-9) -> bool:
    return all(close(a, b, rel, abs_) for a, b in zip(f, g))


def random_quaternion(rng: np.random.Generator, integer: bool = True, bound: int = 9) -> Quaternion:
    if integer:
        return Quaternion(*rng.integers(-bound, bound + 1, size=4).tolist())
    return Quaternion(*rng.uniform(-bound, bound, size=4).tolist())


def random_form(rng: np.random.Generator, integer: bool = True) -> CanonicalForm:
    return CanonicalForm(*(random_quaternion(rng, integer) for _ in range(4)))


def random_terms(rng: np.random.Generator, integer: bool = True) -> list:
    size = int(rng.integers(1, 17))
    return [(random_quaternion(rng, integer), random_quaternion(rng, integer)) for _ in range(size)]


def sample_points(rng: np.random.Generator, count: int = 20, integer: bool = False) -> list:
    return BASIS_POINTS + [random_quaternion(rng, integer, bound=10) for _ in range(count)]
