import random

import pytest
import sympy

from skewpencil import QQ, SkewMatrix


@pytest.fixture
def rng():
    return random.Random(20240601)


def sympy_det(A):
    """Independent determinant oracle: sympy over the integers/rationals."""
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in A.rows]).det()


def int_skew(n, rng, lo=-10, hi=10):
    return [rng.randint(lo, hi) for _ in range(n * (n - 1) // 2)]


def skew(field, n, rng):
    return SkewMatrix.from_upper(field, n, int_skew(n, rng))


def mat(rows, field=QQ):
    return SkewMatrix(field, rows)
