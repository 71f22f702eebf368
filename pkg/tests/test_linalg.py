from fractions import Fraction

import pytest
import sympy
from conftest import int_skew, skew, sympy_det

from skewpencil import (
    QQ,
    BinaryForm,
    ExactMatrix,
    PrimeField,
    SkewMatrix,
    congruence,
    det,
    nullspace,
    pfaffian,
    rank,
    rref,
    solve_linear,
    subpfaffian_vector,
)
from skewpencil.linalg import inverse

F101 = PrimeField(101)
F10007 = PrimeField(10007)


def M(rows, field=QQ):
    return ExactMatrix(field, rows)


def test_rref_examples():
    R, rk, piv = rref(ExactMatrix.identity(QQ, 3))
    assert R == ExactMatrix.identity(QQ, 3) and rk == 3 and piv == [0, 1, 2]
    Z = ExactMatrix.zeros(QQ, 2, 4)
    assert rref(Z)[:2] == (Z, 0)
    R, rk, _ = rref(M([[1, 2], [2, 4]]))
    assert R == M([[1, 2], [0, 0]]) and rk == 1


def test_nullspace_examples():
    assert nullspace(ExactMatrix.identity(QQ, 4)) == []
    assert len(nullspace(M([[0, 0, 0]]))) == 3
    assert nullspace(M([[0, 1], [0, 0]])) == [[1, 0]]


def test_solve_examples():
    x, ker = solve_linear(ExactMatrix.identity(QQ, 3), [1, 2, 3])
    assert x == [1, 2, 3] and ker == []
    x, ker = solve_linear(M([[1, 1]]), [2])
    assert x == [2, 0] and ker == [[-1, 1]]
    assert solve_linear(M([[1], [1]]), [1, 2]) is None


def test_nullspace_and_rank_nullity(rng):
    for _ in range(30):
        r, c = rng.randint(1, 6), rng.randint(1, 7)
        A = M([[rng.randint(-2, 2) for _ in range(c)] for _ in range(r)])
        ker = nullspace(A)
        assert rank(A) + len(ker) == c
        for v in ker:
            assert all(x == 0 for x in A @ v)


def test_det_matches_sympy(rng):
    for n in range(1, 7):
        A = M([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
        assert det(A) == sympy_det(A)


def test_inverse(rng):
    A = M([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    assert A @ inverse(A) == ExactMatrix.identity(QQ, 3)
    with pytest.raises(ValueError):
        inverse(M([[1, 2], [2, 4]]))


def test_skew_validation():
    with pytest.raises(ValueError, match=r"not skew-symmetric at \(1,1\)"):
        SkewMatrix(QQ, [[1, 0], [0, 0]])
    with pytest.raises(ValueError, match=r"at \(1,2\)"):
        SkewMatrix(QQ, [[0, 1], [1, 0]])


def test_pfaffian_examples():
    assert pfaffian(SkewMatrix(QQ, [[0, 3], [-3, 0]])) == 3
    A = SkewMatrix.from_upper(QQ, 4, [1, 0, 0, 0, 0, 1])
    assert pfaffian(A) == 1
    assert pfaffian(SkewMatrix.from_upper(QQ, 3, [1, 2, 3])) == 0


def test_pfaffian_6x6_against_independent_det(rng):
    for _ in range(10):
        A = skew(QQ, 6, rng)
        assert pfaffian(A) ** 2 == sympy_det(A)


@pytest.mark.parametrize("field", [QQ, F10007], ids=["Q", "F10007"])
@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_pfaffian_squared_is_det(field, n, rng):
    for _ in range(20):
        A = skew(field, n, rng)
        pf = pfaffian(A)
        assert pf * pf == det(A)
        assert pf == pfaffian(A, "elimination")


def test_pfaffian_of_rational_entries(rng):
    for _ in range(10):
        A = SkewMatrix.from_upper(QQ, 6, [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(15)])
        assert pfaffian(A) == pfaffian(A, "elimination")
        assert pfaffian(A) ** 2 == sympy_det(A)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_pfaffian_congruence(n, rng):
    for _ in range(15):
        A = skew(QQ, n, rng)
        T = M([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        if det(T) == 0:
            continue
        assert pfaffian(congruence(T, A)) == det(T) * pfaffian(A)


def test_subpfaffian_3x3():
    a, b, c = 2, 3, 5
    A = SkewMatrix.from_upper(QQ, 3, [a, b, c])
    assert subpfaffian_vector(A) == [c, -b, a]


@pytest.mark.parametrize("field", [QQ, F101], ids=["Q", "F101"])
@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_kernel_identity_scalar(field, n, rng):
    for _ in range(10):
        A = skew(field, n, rng)
        p = subpfaffian_vector(A)
        assert all(x == 0 for x in A @ p)
        if rank(A) == n - 1:
            ker = nullspace(A)
            assert len(ker) == 1
            assert rank(M([ker[0], p], field)) == 1


def test_kernel_identity_linear_forms(rng):
    for n in (3, 5, 7):
        for _ in range(5):
            entries = [BinaryForm.linear(QQ, rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(n * (n - 1) // 2)]
            A = SkewMatrix.from_upper(QQ, n, entries, zero=BinaryForm.zero(QQ, 1))
            p = subpfaffian_vector(A)
            assert all(f.degree == (n - 1) // 2 for f in p)
            assert all(x.is_zero for x in A @ p)


def test_pfaffian_of_linear_forms_matches_pointwise(rng):
    n = 4
    entries = [BinaryForm.linear(QQ, rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(6)]
    A = SkewMatrix.from_upper(QQ, n, entries, zero=BinaryForm.zero(QQ, 1))
    pf = pfaffian(A)
    assert pf.degree == 2
    for b0, b1 in [(1, 0), (0, 1), (2, 3), (-1, 4)]:
        At = SkewMatrix(QQ, [[x(b0, b1) for x in r] for r in A.rows])
        assert pf(b0, b1) == pfaffian(At)


def test_congruence_examples(rng):
    A = skew(QQ, 5, rng)
    assert congruence(ExactMatrix.identity(QQ, 5), A) == A
    D = M([[2 if i == j == 0 else int(i == j) for j in range(5)] for i in range(5)])
    C = congruence(D, A)
    for j in range(1, 5):
        assert C[0, j] == 2 * A[0, j]
    assert C.upper()[4:] == A.upper()[4:]
    with pytest.raises(ValueError):
        congruence(ExactMatrix.zeros(QQ, 5, 5), A)


def test_congruence_preserves_rank_and_moves_kernel(rng):
    for _ in range(10):
        A = skew(QQ, 5, rng)
        T = M([[rng.randint(-3, 3) for _ in range(5)] for _ in range(5)])
        if det(T) == 0:
            continue
        C = congruence(T, A)
        assert rank(C) == rank(A)
        moved = inverse(T).T @ subpfaffian_vector(A)
        assert all(x == 0 for x in C @ moved)
