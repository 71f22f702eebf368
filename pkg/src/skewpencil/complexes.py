"""Linear line complexes in P(V) and the even-dimensional fiber construction.

A complex is a nonzero skew form on ``V = k^n`` up to scale; its center is
``P(ker A)``.  Given ``n/2`` lines spanning P(V), the pencils whose
degeneracy locus is exactly those lines are the lines in the span ``sigma``
of the complexes ``H_j`` (``H_j`` = the unique complex centered on the span of
all lines but the j-th) that avoid every ``F_i \\cap F_j``.

Subspaces are canonical (RREF) so equality is structural.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fields import QQ
from .linalg import (
    ExactMatrix,
    SkewMatrix,
    congruence,
    inverse,
    nullspace,
    rank,
    rref,
    solve_linear,
)
from .pencils import NonGenericError, SkewPencil

__all__ = [
    "Complex",
    "ComplexSpace",
    "ProjSubspace",
    "SigmaConfiguration",
    "build_sigma",
    "center",
    "center_complex",
    "classify",
    "even_fiber_sample",
    "gauss_fiber",
    "normalizing_projectivity",
    "pencil_span",
    "random_spanning_lines",
    "sigma_coordinates",
    "sigma_line_valid",
    "standard_lines",
    "transport_complex",
]

MAX_TRIES = 32


class ProjSubspace:
    """A projective subspace of P(V), stored as the nonzero rows of an RREF matrix."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field, vectors, n: int | None = None):
        vectors = [list(v) for v in vectors]
        if n is None:
            if not vectors:
                raise ValueError("ambient dimension needed for an empty subspace")
            n = len(vectors[0])
        self.field = field
        self.n = n
        if vectors:
            R, rk, _ = rref(ExactMatrix(field, vectors, ncols=n))
            self.rows = tuple(tuple(r) for r in R.rows[:rk])
        else:
            self.rows = ()

    @property
    def dim(self) -> int:
        """Projective dimension (-1 for the empty subspace)."""
        return len(self.rows) - 1

    def contains(self, v) -> bool:
        return ProjSubspace(self.field, list(self.rows) + [list(v)], self.n).dim == self.dim

    def join(self, *others) -> ProjSubspace:
        vecs = list(self.rows)
        for o in others:
            vecs.extend(o.rows)
        return ProjSubspace(self.field, vecs, self.n)

    def sort_key(self):
        return tuple(tuple(str(x) for x in r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, ProjSubspace):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def to_json(self):
        return [[self.field.format(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, field, rows, n: int | None = None):
        return cls(field, [[field.parse(str(x)) for x in r] for r in rows], n)

    def __repr__(self):
        return f"ProjSubspace(dim={self.dim}, rows={[[str(x) for x in r] for r in self.rows]})"


class Complex:
    """A linear line complex: a nonzero skew matrix scaled so its first upper entry is 1."""

    __slots__ = ("matrix",)

    def __init__(self, A: SkewMatrix):
        lead = next((x for x in A.upper() if x), None)
        if lead is None:
            raise ValueError("the zero matrix is not a complex")
        self.matrix = A.scale(A.field.one / lead)

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def field(self):
        return self.matrix.field

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Complex({self.matrix!r})"


class ComplexSpace:
    """A linear subspace of the space of skew forms, i.e. of P(Lambda^2 V*)."""

    def __init__(self, field, n: int, matrices):
        self.field = field
        self.n = n
        mats = [m.matrix if isinstance(m, Complex) else m for m in matrices]
        coords = [m.upper() for m in mats]
        dim = n * (n - 1) // 2
        if coords:
            R, rk, _ = rref(ExactMatrix(field, coords, ncols=dim))
            self.canonical = tuple(tuple(r) for r in R.rows[:rk])
        else:
            self.canonical = ()
        # keep the given generators when they are independent
        if len(mats) == len(self.canonical):
            self.basis = mats
        else:
            self.basis = [SkewMatrix.from_upper(field, n, r) for r in self.canonical]

    @property
    def dim(self) -> int:
        """Projective dimension."""
        return len(self.canonical) - 1

    def coordinates(self, A: SkewMatrix):
        """Coefficients of ``A`` in ``self.basis``, or ``None`` if ``A`` is not in the span."""
        M = ExactMatrix(self.field, [list(col) for col in zip(*(b.upper() for b in self.basis))])
        sol = solve_linear(M, A.upper())
        return None if sol is None else sol[0]

    def contains(self, A: SkewMatrix) -> bool:
        return self.coordinates(A) is not None

    def __eq__(self, other):
        if not isinstance(other, ComplexSpace):
            return NotImplemented
        return self.n == other.n and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"ComplexSpace(n={self.n}, dim={self.dim})"


def center(A) -> ProjSubspace:
    """The singular space ``P(ker A)`` of a complex."""
    A = A.matrix if isinstance(A, Complex) else A
    return ProjSubspace(A.field, nullspace(A), A.n)


def classify(A) -> str:
    """Type of a complex from its corank.

    Even n: ``nonspecial`` (corank 0), ``special-first-type`` (corank 2),
    ``special-second-type`` (corank >= 4).  Odd n: ``general`` (corank 1),
    ``special`` (corank >= 3).
    """
    A = A.matrix if isinstance(A, Complex) else A
    c = A.n - rank(A)
    if A.n % 2 == 0:
        return {0: "nonspecial", 2: "special-first-type"}.get(c, "special-second-type")
    return "general" if c == 1 else "special"


def _kernel_conditions(field, n: int, vectors):
    """Rows of the linear system ``A v = 0`` in the upper-triangle coordinates of A."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rows = []
    for v in vectors:
        for r in range(n):
            row = [field.zero] * len(pairs)
            for col, (i, j) in enumerate(pairs):
                # (A v)_r gets a_ij v_j when r = i and -a_ij v_i when r = j
                if r == i:
                    row[col] = v[j]
                elif r == j:
                    row[col] = -v[i]
            rows.append(row)
    return ExactMatrix(field, rows, ncols=len(pairs))


def gauss_fiber(line: ProjSubspace) -> ComplexSpace:
    """All complexes whose center contains ``line``."""
    if line.dim != 1:
        raise ValueError(f"expected a line, got a subspace of dimension {line.dim}")
    if line.n % 2:
        raise ValueError("gauss_fiber is defined for even n")
    field, n = line.field, line.n
    basis = nullspace(_kernel_conditions(field, n, line.rows))
    return ComplexSpace(field, n, [SkewMatrix.from_upper(field, n, v) for v in basis])


def center_complex(S: ProjSubspace) -> Complex:
    """The unique complex, up to scale, whose center is the (n-3)-dimensional space ``S``."""
    field, n = S.field, S.n
    if S.dim != n - 3:
        raise ValueError(f"center_complex needs a subspace of dimension {n - 3}, got {S.dim}")
    basis = nullspace(_kernel_conditions(field, n, S.rows))
    if len(basis) != 1:
        raise RuntimeError(f"expected a unique complex, found a {len(basis)}-dimensional family")
    return Complex(SkewMatrix.from_upper(field, n, basis[0]))


def standard_lines(n: int, field=QQ) -> list[ProjSubspace]:
    """The coordinate lines ``span(e_{2i-1}, e_{2i})``, i = 1..n/2."""
    if n % 2 or n < 4:
        raise ValueError("standard_lines needs even n >= 4")
    lines = []
    for i in range(n // 2):
        u = [field.zero] * n
        v = [field.zero] * n
        u[2 * i] = field.one
        v[2 * i + 1] = field.one
        lines.append(ProjSubspace(field, [u, v]))
    return lines


def _check_configuration(lines):
    if not lines:
        raise ValueError("no lines given")
    n = lines[0].n
    if n % 2 or len(lines) != n // 2:
        raise ValueError(f"need n/2 lines in P^{n - 1} with n even, got {len(lines)} for n={n}")
    for line in lines:
        if line.dim != 1 or line.n != n:
            raise ValueError("every element of the configuration must be a line in P(V)")
    if lines[0].join(*lines[1:]).dim != n - 1:
        raise NonGenericError("degenerate configuration: lines do not span P(V)")
    return n


def normalizing_projectivity(lines) -> ExactMatrix:
    """Invertible ``g`` sending ``e_{2i-1}, e_{2i}`` to the canonical spanning pair of line i."""
    n = _check_configuration(lines)
    cols = [list(r) for line in lines for r in line.rows]
    g = ExactMatrix(lines[0].field, cols).T
    if rank(g) != n:
        raise NonGenericError("degenerate configuration: lines do not span P(V)")
    return g


def transport_complex(g: ExactMatrix, A: SkewMatrix) -> SkewMatrix:
    """Push a complex forward along the projectivity ``g``: ``g^{-T} A g^{-1}``."""
    return congruence(inverse(g).T, A)


@dataclass
class SigmaConfiguration:
    lines: list
    H: list
    sigma: ComplexSpace
    F: list

    @property
    def n(self) -> int:
        return self.lines[0].n

    def alpha_point(self, alpha) -> SkewMatrix:
        """The point ``sum(alpha_i * H_i)`` of sigma."""
        field = self.sigma.field
        n = self.n
        acc = [field.zero] * (n * (n - 1) // 2)
        for a, h in zip(alpha, self.H):
            a = field(a)
            acc = [x + a * y for x, y in zip(acc, h.matrix.upper())]
        return SkewMatrix.from_upper(field, n, acc)


def build_sigma(lines, method: str = "direct") -> SigmaConfiguration:
    """Complexes ``H_j``, their span sigma, and the spans ``F_i`` omitting ``H_i``.

    ``method="direct"`` solves for each ``H_j`` in the given coordinates;
    ``"transport"`` moves the block-diagonal standard complexes through
    :func:`normalizing_projectivity`.  Both give the same spaces.
    """
    lines = list(lines)
    n = _check_configuration(lines)
    field = lines[0].field
    if method == "direct":
        H = []
        for j in range(len(lines)):
            others = lines[:j] + lines[j + 1 :]
            H.append(center_complex(others[0].join(*others[1:])))
    elif method == "transport":
        g = normalizing_projectivity(lines)
        H = [Complex(transport_complex(g, _standard_H(field, n, j))) for j in range(n // 2)]
    else:
        raise ValueError(f"unknown method {method!r}")
    sigma = ComplexSpace(field, n, H)
    F = [ComplexSpace(field, n, H[:i] + H[i + 1 :]) for i in range(len(H))]
    return SigmaConfiguration(list(lines), H, sigma, F)


def _standard_H(field, n: int, j: int) -> SkewMatrix:
    rows = [[field.zero] * n for _ in range(n)]
    rows[2 * j][2 * j + 1] = field.one
    rows[2 * j + 1][2 * j] = -field.one
    return SkewMatrix(field, rows)


def sigma_line_valid(alpha1, alpha2) -> bool:
    """Whether the line through two points of sigma (in H-coordinates) misses every F_i ∩ F_j."""
    alpha1, alpha2 = list(alpha1), list(alpha2)
    m = len(alpha1)
    minors = [
        alpha1[i] * alpha2[j] - alpha1[j] * alpha2[i] for i in range(m) for j in range(i + 1, m)
    ]
    if not any(minors):
        raise ValueError("not a line: the two points are dependent")
    return all(minors)


def sigma_coordinates(config: SigmaConfiguration, A: SkewMatrix):
    """H-coordinates of ``A``, or ``None`` when ``A`` is not in sigma."""
    M = ExactMatrix(
        config.sigma.field, [list(col) for col in zip(*(h.matrix.upper() for h in config.H))]
    )
    sol = solve_linear(M, A.upper())
    return None if sol is None else sol[0]


def even_fiber_sample(lines, seed: int = 0, method: str = "direct", lo: int = -10, hi: int = 10):
    """A random pencil whose degeneracy locus is exactly ``lines``.

    The generators are random integer combinations of the ``H_j``; draws that
    meet some ``F_i ∩ F_j`` are rejected.
    """
    config = build_sigma(lines, method)
    field = config.sigma.field
    rng = random.Random(seed)
    m = len(config.H)
    for _ in range(MAX_TRIES):
        a1 = [field.random_element(rng, lo, hi) for _ in range(m)]
        a2 = [field.random_element(rng, lo, hi) for _ in range(m)]
        try:
            ok = sigma_line_valid(a1, a2)
        except ValueError:
            continue
        if ok:
            return SkewPencil(config.alpha_point(a1), config.alpha_point(a2))
    if getattr(field, "p", None) is not None:
        raise NonGenericError(f"no valid line in sigma after {MAX_TRIES} draws: field too small")
    raise NonGenericError(f"no valid line in sigma after {MAX_TRIES} draws")


def pencil_span(N: SkewPencil) -> ComplexSpace:
    """The pencil as a subspace of skew forms (independent of the chosen generators)."""
    return ComplexSpace(N.field, N.n, [N.N0, N.N1])


def grassmannian_of_lines_dim(projective_dim: int) -> int:
    """Dimension of the Grassmannian of lines in a projective space of the given dimension."""
    return 2 * (projective_dim - 1)


def random_line(n: int, rng, field=QQ, lo: int = -10, hi: int = 10) -> ProjSubspace:
    while True:
        vecs = [[field.random_element(rng, lo, hi) for _ in range(n)] for _ in range(2)]
        line = ProjSubspace(field, vecs, n)
        if line.dim == 1:
            return line


def random_spanning_lines(n: int, rng, field=QQ, lo: int = -10, hi: int = 10):
    """``n/2`` random lines jointly spanning P^{n-1}."""
    for _ in range(MAX_TRIES):
        lines = [random_line(n, rng, field, lo, hi) for _ in range(n // 2)]
        if lines[0].join(*lines[1:]).dim == n - 1:
            return lines
    raise NonGenericError("could not draw a spanning configuration")
