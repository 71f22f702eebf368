"""Odd n: realizing binary forms as sub-Pfaffians and computing all such pencils.

For odd ``n`` the degeneracy locus of a general pencil is the rational curve
``[f_1 : ... : f_n]`` with ``f`` its signed sub-Pfaffian vector, forms of
degree ``(n-1)/2``.  Conversely any spanning ``f`` is realized by a
congruence transform of the tridiagonal pencil :func:`standard_Nk`, and the
whole set of realizing pencils is cut out by the linear identity
``(y0*N0 + y1*N1) f(y) = 0``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .binary_forms import BinaryForm, coeff_matrix_rank
from .fields import QQ
from .linalg import ExactMatrix, SkewMatrix, congruence, inverse, nullspace, rank
from .pencils import NonGenericError, SkewPencil, forms_gcd, forms_proportional, pencil_subpf

__all__ = [
    "FormVector",
    "PencilSolutionSpace",
    "expected_fiber_system_dim",
    "fiber_sample",
    "fiber_system",
    "realize_pfaffians",
    "standard_Nk",
]

MAX_TRIES = 64


@dataclass(frozen=True)
class FormVector:
    """``n`` binary forms of common degree ``(n-1)/2``."""

    forms: tuple

    def __init__(self, forms):
        forms = tuple(forms)
        if not forms:
            raise ValueError("empty form vector")
        n = len(forms)
        if n % 2 == 0:
            raise ValueError(f"need an odd number of forms, got {n}")
        d = (n - 1) // 2
        for f in forms:
            if f.degree != d:
                raise ValueError(f"forms must have degree {d} for n={n}, got {f.degree}")
        object.__setattr__(self, "forms", forms)

    @property
    def n(self) -> int:
        return len(self.forms)

    @property
    def degree(self) -> int:
        return (self.n - 1) // 2

    @property
    def field(self):
        return self.forms[0].field

    @property
    def rank(self) -> int:
        return coeff_matrix_rank(self.forms, self.degree)

    @property
    def spanning(self) -> bool:
        return self.rank == self.degree + 1

    @property
    def base_point_free(self) -> bool:
        if all(f.is_zero for f in self.forms):
            return False
        return forms_gcd(self.forms).degree == 0

    def __iter__(self):
        return iter(self.forms)

    def __len__(self):
        return len(self.forms)

    def to_json(self):
        return {"forms": [f.to_json() for f in self.forms]}

    @classmethod
    def from_json(cls, field, obj):
        items = obj["forms"] if isinstance(obj, dict) else obj
        return cls(BinaryForm.from_json(field, f) for f in items)


def _as_form_vector(f) -> FormVector:
    return f if isinstance(f, FormVector) else FormVector(f)


def standard_Nk(k: int, field=QQ) -> SkewPencil:
    """Tridiagonal ``k x k`` pencil with super-diagonal ``y0, y1, y0, y1, ...``."""
    if k % 2 == 0 or k < 3:
        raise ValueError("standard_Nk needs odd k >= 3")
    r0 = [[field.zero] * k for _ in range(k)]
    r1 = [[field.zero] * k for _ in range(k)]
    for i in range(k - 1):
        rows = r0 if i % 2 == 0 else r1
        rows[i][i + 1] = field.one
        rows[i + 1][i] = -field.one
    return SkewPencil(SkewMatrix(field, r0), SkewMatrix(field, r1))


def realize_pfaffians(f) -> SkewPencil:
    """A pencil whose signed sub-Pfaffian vector is proportional to ``f``.

    Writes ``f = beta @ p`` with ``p`` the (signed monomial) sub-Pfaffians of
    :func:`standard_Nk`, completes ``beta`` to an invertible matrix and
    applies the congruence by ``beta^{-T}``, which moves kernels by ``beta``.
    """
    f = _as_form_vector(f)
    if not f.spanning:
        raise NonGenericError("forms do not span")
    field, n = f.field, f.n
    Nk = standard_Nk(n, field)
    p = pencil_subpf(Nk)
    beta = [[field.zero] * n for _ in range(n)]
    free = []
    for b, pb in enumerate(p):
        support = [j for j, c in enumerate(pb.coeffs) if c]
        if not support:
            free.append(b)
            continue
        (j,) = support
        s = pb.coeffs[j]
        for a in range(n):
            beta[a][b] = f.forms[a].coeffs[j] / s
    # complete the zero-Pfaffian columns greedily by standard basis vectors
    current = rank(ExactMatrix(field, [list(col) for col in zip(*beta)]))
    candidates = iter(range(n))
    for b in free:
        for c in candidates:
            for a in range(n):
                beta[a][b] = field.one if a == c else field.zero
            cols = [[beta[a][bb] for a in range(n)] for bb in range(n)]
            new = rank(ExactMatrix(field, cols))
            if new > current:
                current = new
                break
    if current != n:
        raise NonGenericError("forms do not span")
    M = inverse(ExactMatrix(field, beta)).T
    N = SkewPencil(congruence(M, Nk.N0), congruence(M, Nk.N1))
    if not forms_proportional(pencil_subpf(N), f.forms):
        raise RuntimeError("realization certificate failed: sub-Pfaffians not proportional to f")
    return N


@dataclass(frozen=True)
class PencilSolutionSpace:
    """Basis of the pencils ``(N0, N1)`` with ``(y0*N0 + y1*N1) f = 0``."""

    basis: tuple
    n: int
    forms: FormVector

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coeffs) -> SkewPencil:
        field = self.forms.field
        n = self.n
        u = n * (n - 1) // 2
        v = [field.zero] * (2 * u)
        for c, N in zip(coeffs, self.basis):
            c = field(c)
            if c:
                w = N.N0.upper() + N.N1.upper()
                v = [x + c * y for x, y in zip(v, w)]
        return _pencil_from_coords(field, n, v)

    def contains(self, N: SkewPencil) -> bool:
        """Exact membership test against the basis."""
        from .linalg import solve_linear

        cols = [b.N0.upper() + b.N1.upper() for b in self.basis]
        target = N.N0.upper() + N.N1.upper()
        if not cols:
            return not any(target)
        M = ExactMatrix(self.forms.field, [list(r) for r in zip(*cols)], ncols=len(cols))
        return solve_linear(M, target) is not None


def _pencil_from_coords(field, n, v) -> SkewPencil:
    u = n * (n - 1) // 2
    return SkewPencil(SkewMatrix.from_upper(field, n, v[:u]), SkewMatrix.from_upper(field, n, v[u:]))


def annihilation_system(f) -> ExactMatrix:
    """Coefficient matrix of ``(y0*N0 + y1*N1) f(y) = 0`` in the upper-triangle entries of N0, N1."""
    f = _as_form_vector(f)
    field, n, r = f.field, f.n, f.degree
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    u = len(pairs)
    rows = []
    for row in range(n):
        # the row-th entry of N(y) f(y) has degree r + 1: coefficients k = 0..r+1
        for k in range(r + 2):
            eq = [field.zero] * (2 * u)
            for col, (i, j) in enumerate(pairs):
                if row == i:
                    c, sign = j, 1
                elif row == j:
                    c, sign = i, -1
                else:
                    continue
                fc = f.forms[c].coeffs
                if k <= r:
                    eq[col] = fc[k] if sign > 0 else -fc[k]
                if k >= 1:
                    eq[u + col] = fc[k - 1] if sign > 0 else -fc[k - 1]
            rows.append(eq)
    return ExactMatrix(field, rows, ncols=2 * u)


def fiber_system(f) -> PencilSolutionSpace:
    """All pencils annihilating ``f``, as a linear space of pairs ``(N0, N1)``."""
    f = _as_form_vector(f)
    basis = nullspace(annihilation_system(f))
    return PencilSolutionSpace(
        tuple(_pencil_from_coords(f.field, f.n, v) for v in basis), f.n, f
    )


def expected_fiber_system_dim(n: int) -> int:
    """Fiber dimension ``(n^2 - 3n)/2`` plus one for the overall scalar."""
    return (n * n - 3 * n) // 2 + 1


@dataclass(frozen=True)
class FiberSampleReport:
    pencil: SkewPencil
    attempts: int
    rejected: int
    dim: int


def fiber_sample_report(f, seed: int = 0, lo: int = -10, hi: int = 10) -> FiberSampleReport:
    """Like :func:`fiber_sample`, also reporting how many draws were rejected."""
    f = _as_form_vector(f)
    space = fiber_system(f)
    if not space.basis:
        raise NonGenericError("no generic element found (solution space is zero)")
    field = f.field
    rng = random.Random(seed)
    for attempt in range(1, MAX_TRIES + 1):
        coeffs = [field.random_element(rng, lo, hi) for _ in space.basis]
        N = space.combine(coeffs)
        if forms_proportional(pencil_subpf(N), f.forms):
            return FiberSampleReport(N, attempt, attempt - 1, space.dim)
    raise NonGenericError(
        f"no generic element found after {MAX_TRIES} draws (solution space dimension {space.dim})"
    )


def fiber_sample(f, seed: int = 0) -> SkewPencil:
    """A random pencil with sub-Pfaffians proportional to ``f``."""
    return fiber_sample_report(f, seed).pencil
