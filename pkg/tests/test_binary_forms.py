import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewpencil import QQ, BinaryForm, PointP1, PrimeField, bf_eval, bf_gcd, bf_mul, bf_roots
from skewpencil import coeff_matrix_rank, pencil_subpf, standard_Nk
from skewpencil.binary_forms import random_form

y0 = BinaryForm.linear(QQ, 1, 0)
y1 = BinaryForm.linear(QQ, 0, 1)
one = BinaryForm.constant(QQ, 1)


def form(*coeffs, field=QQ):
    return BinaryForm(field, coeffs)


def reassemble(roots, remainder):
    out = remainder
    for pt, mult in roots:
        for _ in range(mult):
            out = out * pt.linear_factor()
    return out


def test_mul():
    assert bf_mul(y0, y1) == form(0, 1, 0)
    assert (y0 + y1) * (y0 + y1) == form(1, 2, 1)
    z = BinaryForm.zero(QQ, 0)
    assert (y0 * z).is_zero and (y0 * z).degree == 1


def test_add_requires_equal_degree():
    with pytest.raises(ValueError):
        y0 + one


def test_eval():
    assert bf_eval(y0 * y1, PointP1(QQ, 1, 0)) == 0
    assert bf_eval(form(1, 0, 1), PointP1(QQ, 1, 1)) == 2
    assert bf_eval(y0 * y0 * y1, (2, 3)) == 12
    assert (y0 * y0 * y1)(2, 3) == 12
    # a PointP1 evaluates at its canonical representative [1 : 3/2]
    assert bf_eval(y0 * y0 * y1, PointP1(QQ, 2, 3)) == Fraction(3, 2)


def test_point_canonical():
    assert PointP1(QQ, 2, 4) == PointP1(QQ, 1, 2)
    assert PointP1(QQ, 0, 5) == PointP1(QQ, 0, 1)
    with pytest.raises(ValueError):
        PointP1(QQ, 0, 0)


def test_roots_examples():
    roots, rem = bf_roots(y0 * y1)
    assert set(roots) == {(PointP1(QQ, 0, 1), 1), (PointP1(QQ, 1, 0), 1)}
    assert rem.degree == 0

    sq = (y0 - y1 * 2) * (y0 - y1 * 2)
    roots, rem = bf_roots(sq)
    assert roots == [(PointP1(QQ, 2, 1), 2)]
    assert rem.degree == 0

    roots, rem = bf_roots(form(1, 0, 1))
    assert roots == []
    assert rem == form(1, 0, 1)


def test_roots_zero_form():
    with pytest.raises(ValueError, match="zero form has no root set"):
        bf_roots(BinaryForm.zero(QQ, 3))


def test_roots_reassemble_over_q(rng):
    for _ in range(100):
        f = BinaryForm.constant(QQ, rng.randint(1, 9))
        for _ in range(rng.randint(1, 5)):
            f = f * BinaryForm.linear(QQ, rng.randint(-6, 6) or 1, rng.randint(-6, 6))
        roots, rem = bf_roots(f)
        assert reassemble(roots, rem).is_proportional(f)


@pytest.mark.parametrize("p", [101, 2**31 - 1])
def test_roots_reassemble_over_fp(p, rng):
    F = PrimeField(p)
    for _ in range(30):
        f = BinaryForm.constant(F, 1)
        for _ in range(rng.randint(1, 4)):
            f = f * BinaryForm.linear(F, rng.randrange(p), rng.randrange(p))
        if f.is_zero:
            continue
        f = f * BinaryForm(F, [1, 0, 1]) if p % 4 == 3 else f
        roots, rem = bf_roots(f)
        assert reassemble(roots, rem).is_proportional(f)
        # every reported root is a root, and the remainder has none left over
        for pt, _ in roots:
            assert bf_eval(f, pt) == 0


def test_gcd_examples():
    assert bf_gcd(y0 * y1, y0 * y0) == y0
    assert bf_gcd(y0 + y1, y0 - y1) == one
    f = form(2, 4, 6)
    assert bf_gcd(f, BinaryForm.zero(QQ, 1)) == form(1, 2, 3)


def test_gcd_of_product(rng):
    for _ in range(50):
        f = random_form(QQ, rng.randint(1, 3), rng)
        g = random_form(QQ, rng.randint(1, 3), rng)
        if f.is_zero or g.is_zero:
            continue
        assert (f * g).degree == f.degree + g.degree
        assert bf_gcd(f * g, f).is_proportional(f)


def test_coeff_matrix_rank():
    assert coeff_matrix_rank([y0 * y0, y0 * y1, y1 * y1], 2) == 3
    assert coeff_matrix_rank([y0 * y0, y0 * y0 * 2], 2) == 1
    assert coeff_matrix_rank(pencil_subpf(standard_Nk(5)), 2) == 3
    with pytest.raises(ValueError):
        coeff_matrix_rank([y0, one], 1)


def test_json_roundtrip():
    f = form(Fraction(1, 2), -3, 0)
    assert f.to_json() == {"degree": 2, "coeffs": ["1/2", "-3", "0"]}
    assert BinaryForm.from_json(QQ, f.to_json()) == f


small = st.integers(-20, 20)


@settings(max_examples=200)
@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=5), small, small)
def test_eval_multiplicative(fc, gc, b0, b1):
    if b0 == 0 and b1 == 0:
        b0 = 1
    f, g = BinaryForm(QQ, fc), BinaryForm(QQ, gc)
    p = PointP1(QQ, b0, b1)
    assert bf_eval(f * g, p) == bf_eval(f, p) * bf_eval(g, p)


@pytest.mark.parametrize("p", [101, 4999])
def test_cantor_zassenhaus_matches_exhaustive(p):
    from skewpencil.binary_forms import _cantor_zassenhaus_roots

    F = PrimeField(p)
    rng = random.Random(p)
    for _ in range(30):
        g = [F(rng.randrange(p)) for _ in range(rng.randint(2, 7))] + [F.one]
        if g[0] == 0:
            g[0] = F.one
        exhaustive = {t for t in F.elements() if sum((c * t**e for e, c in enumerate(g)), F.zero) == 0}
        assert set(_cantor_zassenhaus_roots(g, F)) == exhaustive
    planted = {F(rng.randrange(1, p)) for _ in range(5)}
    g = [F.one]
    for r in planted:
        g = [F.zero] + g
        for e in range(len(g) - 1):
            g[e] = g[e] - r * g[e + 1]
    assert set(_cantor_zassenhaus_roots(g, F)) == planted
