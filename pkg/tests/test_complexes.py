import random

import pytest
from conftest import skew

from skewpencil import (
    QQ,
    Complex,
    ComplexSpace,
    NonGenericError,
    PrimeField,
    ProjSubspace,
    SkewMatrix,
    build_sigma,
    center,
    center_complex,
    classify,
    deg_locus_even,
    even_fiber_sample,
    gauss_fiber,
    normalizing_projectivity,
    pencil_span,
    rank,
    sigma_coordinates,
    sigma_line_valid,
    standard_lines,
)
from skewpencil.complexes import (
    _kernel_conditions,
    grassmannian_of_lines_dim,
    random_line,
    random_spanning_lines,
    transport_complex,
)
from skewpencil.linalg import ExactMatrix, inverse, nullspace


def e(i, n):
    return [int(k == i) for k in range(n)]


def span(n, *idx):
    return ProjSubspace(QQ, [e(i, n) for i in idx])


def only(n, i, j):
    rows = [[0] * n for _ in range(n)]
    rows[i][j], rows[j][i] = 1, -1
    return SkewMatrix(QQ, rows)


def test_center_examples(rng):
    assert center(only(4, 0, 1)) == span(4, 2, 3)
    A = SkewMatrix.from_upper(QQ, 4, [1, 0, 0, 0, 0, 1])
    assert center(A).dim == -1
    assert center(skew(QQ, 5, rng)).dim == 0


def test_classify():
    inv6 = SkewMatrix.from_upper(QQ, 6, [1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1])
    assert classify(inv6) == "nonspecial"
    rank4 = SkewMatrix.from_upper(QQ, 6, [1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0])
    assert classify(rank4) == "special-first-type"
    cfg = build_sigma(standard_lines(6))
    assert classify(cfg.alpha_point([1, 0, 0])) == "special-second-type"
    assert classify(cfg.alpha_point([1, 0, 2])) == "special-first-type"
    assert classify(cfg.alpha_point([1, 3, 2])) == "nonspecial"
    assert classify(SkewMatrix.from_upper(QQ, 5, [1, 0, 0, 0, 0, 0, 0, 1, 0, 0])) == "general"
    assert classify(only(5, 0, 1)) == "special"


def test_complex_canonical_scaling():
    A = only(4, 2, 3).scale(-5)
    assert Complex(A) == Complex(only(4, 2, 3))
    with pytest.raises(ValueError):
        Complex(SkewMatrix.from_upper(QQ, 4, [0] * 6))


def test_gauss_fiber_examples(rng):
    fib = gauss_fiber(span(4, 0, 1))
    assert fib.dim == 0
    assert Complex(fib.basis[0]) == Complex(only(4, 2, 3))
    assert gauss_fiber(span(6, 0, 1)).dim == 5


def test_gauss_fiber_dim_oracle(rng):
    # independent count: nullity of the 2n constraints A u = A v = 0
    for n in (4, 6, 8, 10):
        for _ in range(3):
            line = random_line(n, rng)
            system = _kernel_conditions(QQ, n, line.rows)
            assert gauss_fiber(line).dim == len(nullspace(system)) - 1 == (n - 1) * (n - 4) // 2
            for B in gauss_fiber(line).basis:
                for v in line.rows:
                    assert all(x == 0 for x in B @ list(v))


def test_center_complex_examples(rng):
    assert center_complex(span(4, 2, 3)) == Complex(only(4, 0, 1))
    assert center_complex(span(6, 0, 1, 2, 3)) == Complex(only(6, 4, 5))
    for _ in range(5):
        S = ProjSubspace(QQ, [[rng.randint(-5, 5) for _ in range(6)] for _ in range(4)])
        if S.dim != 3:
            continue
        H = center_complex(S)
        assert rank(H.matrix) == 2
        assert center(H) == S


def test_center_complex_bad_dimension():
    with pytest.raises(ValueError):
        center_complex(span(6, 0, 1))


def test_center_roundtrips(rng):
    for n in (4, 6, 8):
        for _ in range(3):
            S = ProjSubspace(QQ, [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n - 2)])
            if S.dim != n - 3:
                continue
            assert center(center_complex(S)) == S
            H = center_complex(S)
            assert center_complex(center(H)) == H


def test_standard_lines():
    assert standard_lines(4) == [span(4, 0, 1), span(4, 2, 3)]
    six = standard_lines(6)
    assert six == [span(6, 0, 1), span(6, 2, 3), span(6, 4, 5)]
    for n in (4, 6, 8, 10):
        L = standard_lines(n)
        assert L[0].join(*L[1:]).dim == n - 1
    with pytest.raises(ValueError):
        standard_lines(5)


def test_build_sigma_standard():
    cfg = build_sigma(standard_lines(4))
    assert cfg.H == [Complex(only(4, 0, 1)), Complex(only(4, 2, 3))]
    assert cfg.sigma.dim == 1
    cfg = build_sigma(standard_lines(6))
    assert cfg.H == [Complex(only(6, 0, 1)), Complex(only(6, 2, 3)), Complex(only(6, 4, 5))]
    assert cfg.sigma.dim == 2


def test_build_sigma_random(rng):
    for _ in range(5):
        lines = random_spanning_lines(6, rng)
        cfg = build_sigma(lines)
        assert cfg.sigma.dim == 2
        assert [F.dim for F in cfg.F] == [1, 1, 1]
        # a point of F_i has at least line i in its center
        for i, F in enumerate(cfg.F):
            for B in F.basis:
                assert all(x == 0 for v in lines[i].rows for x in B @ list(v))


def test_build_sigma_degenerate():
    bad = [span(6, 0, 1), span(6, 2, 3), span(6, 0, 2)]
    with pytest.raises(NonGenericError, match="degenerate configuration"):
        build_sigma(bad)


def test_normalizing_projectivity(rng):
    g = normalizing_projectivity(standard_lines(6))
    assert g == ExactMatrix.identity(QQ, 6)
    perm = standard_lines(6)
    perm = [perm[1], perm[2], perm[0]]
    g = normalizing_projectivity(perm)
    assert sorted(tuple(r) for r in g.rows) == sorted(tuple(r) for r in ExactMatrix.identity(QQ, 6).rows)
    lines = random_spanning_lines(6, rng)
    g = normalizing_projectivity(lines)
    for i in range(3):
        H = transport_complex(g, only(6, 2 * i, 2 * i + 1))
        others = [l for j, l in enumerate(lines) if j != i]
        assert center(H) == others[0].join(*others[1:])


def test_transport_agrees_with_direct(rng):
    for n in (4, 6, 8):
        lines = random_spanning_lines(n, rng)
        a, b = build_sigma(lines, "direct"), build_sigma(lines, "transport")
        assert a.sigma == b.sigma
        assert a.H == b.H
        assert a.F == b.F


def test_sigma_line_valid():
    assert sigma_line_valid([1, 1, 1], [1, 2, 3])
    assert not sigma_line_valid([1, 0, 1], [0, 0, 1])
    assert sigma_line_valid([1, 0], [0, 1])
    with pytest.raises(ValueError, match="not a line"):
        sigma_line_valid([1, 2, 3], [2, 4, 6])


def test_n4_sigma_is_the_unique_pencil(rng):
    for _ in range(5):
        lines = random_spanning_lines(4, rng)
        cfg = build_sigma(lines)
        assert cfg.sigma.dim == 1
        assert pencil_span(even_fiber_sample(lines, 1)) == cfg.sigma
        assert pencil_span(even_fiber_sample(lines, 2, "transport")) == cfg.sigma
    N = even_fiber_sample(standard_lines(4), 0)
    assert pencil_span(N) == ComplexSpace(QQ, 4, [only(4, 0, 1), only(4, 2, 3)])


@pytest.mark.parametrize("n", [4, 6, 8])
def test_forward_implication(n, rng):
    """Valid lines of sigma realize the configuration with no second-type complex."""
    for _ in range(20):
        lines = random_spanning_lines(n, rng)
        N = even_fiber_sample(lines, rng.getrandbits(16))
        assert deg_locus_even(N).line_set == frozenset(lines)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_converse_fiber_pencils_lie_in_sigma(n, rng):
    for _ in range(5):
        lines = random_spanning_lines(n, rng)
        cfg = build_sigma(lines)
        N = even_fiber_sample(lines, rng.getrandbits(16), "transport")
        a1, a2 = sigma_coordinates(cfg, N.N0), sigma_coordinates(cfg, N.N1)
        assert a1 is not None and a2 is not None
        assert sigma_line_valid(a1, a2)


def test_pencil_outside_sigma_has_no_coordinates(rng):
    cfg = build_sigma(standard_lines(6))
    assert sigma_coordinates(cfg, skew(QQ, 6, rng)) is None


def test_fiber_dimension_formula():
    for n in (4, 6, 8, 10):
        cfg = build_sigma(standard_lines(n))
        assert grassmannian_of_lines_dim(cfg.sigma.dim) == n - 4


def test_even_fiber_over_fp(rng):
    F = PrimeField(10007)
    lines = random_spanning_lines(6, rng, F)
    assert deg_locus_even(even_fiber_sample(lines, 4)).line_set == frozenset(lines)


def test_even_fiber_small_field():
    # needs 4 pairwise independent columns in F_2^2, which has only 3 nonzero vectors
    F = PrimeField(2)
    with pytest.raises(NonGenericError, match="field too small"):
        even_fiber_sample(standard_lines(8, F), 0)
