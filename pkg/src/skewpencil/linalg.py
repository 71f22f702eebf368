"""Dense exact linear algebra over a field, and over binary forms where it makes sense.

Matrices are small (n <= 12 or so) and entries are exact, so everything is
plain Python lists; no attempt at blocking or sparsity.  Indices are 0-based
in code, 1-based in error messages.
"""

from __future__ import annotations

from .binary_forms import BinaryForm

__all__ = [
    "ExactMatrix",
    "SkewMatrix",
    "congruence",
    "det",
    "inverse",
    "nullspace",
    "pfaffian",
    "rank",
    "rref",
    "solve_linear",
    "subpfaffian_vector",
]


def _coerce(field, x):
    if isinstance(x, BinaryForm):
        return x
    return field(x)


def _dot(xs, ys):
    """Sum of products; ``None`` when every product is skipped for being zero."""
    acc = None
    for x, y in zip(xs, ys):
        if not x or not y:
            continue
        t = x * y
        acc = t if acc is None else acc + t
    return acc


class ExactMatrix:
    """An ``r x c`` matrix with entries in a field or in binary forms of one degree."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field, rows, ncols: int | None = None):
        self.field = field
        self.rows = [[_coerce(field, x) for x in row] for row in rows]
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def identity(cls, field, n: int):
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, r: int, c: int):
        return cls(field, [[field.zero] * c for _ in range(r)], ncols=c)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def entry_degree(self):
        """Degree of the form entries, or ``None`` for scalar entries."""
        for row in self.rows:
            for x in row:
                return x.degree if isinstance(x, BinaryForm) else None
        return None

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    @property
    def T(self):
        return ExactMatrix(self.field, [list(col) for col in zip(*self.rows)], ncols=self.nrows)

    def _zero_entry(self, degree_scale: int = 1):
        d = self.entry_degree
        if d is None:
            return self.field.zero
        return BinaryForm.zero(self.field, d * degree_scale)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = list(zip(*other.rows))
            out = []
            for row in self.rows:
                out_row = []
                for col in cols:
                    v = _dot(row, col)
                    out_row.append(v if v is not None else _product_zero(self, other))
                out.append(out_row)
            return ExactMatrix(self.field, out, ncols=other.ncols)
        vec = list(other)
        if len(vec) != self.ncols:
            raise ValueError("shape mismatch in matrix-vector product")
        zero = _product_zero_vec(self, vec)
        return [v if (v := _dot(row, vec)) is not None else zero for row in self.rows]

    def __add__(self, other):
        return ExactMatrix(
            self.field,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __sub__(self, other):
        return ExactMatrix(
            self.field,
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def scale(self, c):
        c = self.field(c)
        return type(self)._from_rows(self.field, [[c * x for x in r] for r in self.rows])

    @classmethod
    def _from_rows(cls, field, rows):
        return cls(field, rows)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def to_json(self):
        return [[_entry_json(self.field, x) for x in r] for r in self.rows]

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"{type(self).__name__}([{body}])"


def _entry_json(field, x):
    if isinstance(x, BinaryForm):
        return x.to_json()
    return field.format(x)


def _product_zero(a: ExactMatrix, b: ExactMatrix):
    da, db = a.entry_degree, b.entry_degree
    if da is None and db is None:
        return a.field.zero
    return BinaryForm.zero(a.field, (da or 0) + (db or 0))


def _product_zero_vec(a: ExactMatrix, vec):
    da = a.entry_degree
    dv = next((x.degree for x in vec if isinstance(x, BinaryForm)), None)
    if da is None and dv is None:
        return a.field.zero
    return BinaryForm.zero(a.field, (da or 0) + (dv or 0))


class SkewMatrix(ExactMatrix):
    """A square matrix with ``A.T == -A`` and zero diagonal, checked on construction."""

    __slots__ = ()

    def __init__(self, field, rows, ncols: int | None = None):
        super().__init__(field, rows, ncols)
        n = self.nrows
        if self.ncols != n:
            raise ValueError(f"skew-symmetric matrix must be square, got {self.shape}")
        for i in range(n):
            for j in range(i, n):
                a, b = self.rows[i][j], self.rows[j][i]
                if a != -b or (i == j and a):
                    raise ValueError(f"matrix not skew-symmetric at ({i + 1},{j + 1})")

    @classmethod
    def from_upper(cls, field, n: int, upper, zero=None):
        """Build from the strict upper triangle listed row by row."""
        if zero is None:
            zero = field.zero
        rows = [[zero] * n for _ in range(n)]
        it = iter(upper)
        for i in range(n):
            for j in range(i + 1, n):
                x = _coerce(field, next(it))
                rows[i][j] = x
                rows[j][i] = -x
        return cls(field, rows)

    @property
    def n(self) -> int:
        return self.nrows

    def upper(self):
        """Strict upper triangle, row-major: coordinates on Lambda^2."""
        n = self.n
        return [self.rows[i][j] for i in range(n) for j in range(i + 1, n)]


# -- elimination over a field -------------------------------------------------


def rref(M: ExactMatrix):
    """Reduced row echelon form. Returns ``(R, rank, pivot_columns)``."""
    rows = [list(r) for r in M.rows]
    nr, nc = M.nrows, M.ncols
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c] ** -1
        rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return ExactMatrix(M.field, rows, ncols=nc), r, pivots


def rank(M: ExactMatrix) -> int:
    return rref(M)[1]


def nullspace(M: ExactMatrix):
    """Basis of the right kernel, one vector per free column."""
    R, rk, pivots = rref(M)
    field = M.field
    free = [c for c in range(M.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * M.ncols
        v[f] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -R.rows[i][f]
        basis.append(v)
    return basis


def solve_linear(M: ExactMatrix, b):
    """Solve ``M x = b``.

    Returns ``(x, kernel_basis)`` so that the solution set is ``x + span(kernel_basis)``,
    or ``None`` when the system is inconsistent.
    """
    b = [M.field(x) for x in b]
    if len(b) != M.nrows:
        raise ValueError("right-hand side has the wrong length")
    aug = ExactMatrix(M.field, [list(r) + [bi] for r, bi in zip(M.rows, b)], ncols=M.ncols + 1)
    R, rk, pivots = rref(aug)
    if pivots and pivots[-1] == M.ncols:
        return None
    x = [M.field.zero] * M.ncols
    for i, pc in enumerate(pivots):
        x[pc] = R.rows[i][M.ncols]
    return x, nullspace(M)


def det(M: ExactMatrix):
    """Determinant by fraction-free (Bareiss) elimination."""
    n = M.nrows
    if n != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    field = M.field
    if n == 0:
        return field.one
    a = [list(r) for r in M.rows]
    sign = field.one
    prev = field.one
    for k in range(n - 1):
        if not a[k][k]:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return field.zero
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(M: ExactMatrix) -> ExactMatrix:
    n = M.nrows
    if n != M.ncols:
        raise ValueError("inverse of a non-square matrix")
    field = M.field
    aug = ExactMatrix(
        field,
        [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(M.rows)],
    )
    R, rk, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return ExactMatrix(field, [r[n:] for r in R.rows], ncols=n)


# -- Pfaffians ------------------------------------------------------------------


class _PfaffianExpander:
    """Division-free first-row expansion with memoization on index subsets.

    Works over any commutative entry ring; the memo is shared across calls on
    the same matrix so that all sub-Pfaffians of one matrix reuse each other.
    """

    def __init__(self, A: SkewMatrix):
        self.a = A.rows
        field = A.field
        d = A.entry_degree
        if d is None:
            self.one = field.one
            self.zero = lambda m: field.zero
        else:
            self.one = BinaryForm.constant(field, 1)
            self.zero = lambda m: BinaryForm.zero(field, d * m)
        self.memo = {}

    def __call__(self, idx: tuple):
        m = len(idx)
        if m % 2:
            return self.zero((m - 1) // 2)
        if m == 0:
            return self.one
        hit = self.memo.get(idx)
        if hit is not None:
            return hit
        i0 = idx[0]
        row = self.a[i0]
        acc = None
        for k in range(1, m):
            x = row[idx[k]]
            if not x:
                continue
            sub = self(idx[1:k] + idx[k + 1 :])
            if not sub:
                continue
            t = x * sub
            if k % 2 == 0:
                t = -t
            acc = t if acc is None else acc + t
        if acc is None:
            acc = self.zero(m // 2)
        self.memo[idx] = acc
        return acc


def _pfaffian_elimination(A: SkewMatrix):
    """Pfaffian over a field via skew-symmetric Schur complements (O(n^3))."""
    field = A.field
    n = A.n
    if n % 2:
        return field.zero
    a = [list(r) for r in A.rows]
    result = field.one
    for k in range(0, n, 2):
        piv = next((j for j in range(k + 1, n) if a[k][j]), None)
        if piv is None:
            return field.zero
        if piv != k + 1:
            # swap index piv with k+1 in rows and columns; Pf changes sign
            a[k + 1], a[piv] = a[piv], a[k + 1]
            for r in a:
                r[k + 1], r[piv] = r[piv], r[k + 1]
            result = -result
        b = a[k][k + 1]
        result = result * b
        binv = b ** -1
        r0, r1 = a[k], a[k + 1]
        for i in range(k + 2, n):
            for j in range(k + 2, n):
                corr = (r1[i] * r0[j] - r0[i] * r1[j]) * binv
                if corr:
                    a[i][j] = a[i][j] + corr
    return result


def pfaffian(A: SkewMatrix, method: str = "expansion"):
    """Pfaffian of a skew matrix; zero for odd size.

    ``method="expansion"`` works over fields and over binary-form entries;
    ``"elimination"`` is a field-only O(n^3) alternative.
    """
    if method == "elimination":
        if A.entry_degree is not None:
            raise ValueError("elimination Pfaffian needs field entries")
        return _pfaffian_elimination(A)
    if method != "expansion":
        raise ValueError(f"unknown Pfaffian method {method!r}")
    return _PfaffianExpander(A)(tuple(range(A.n)))


def subpfaffian_vector(A: SkewMatrix):
    """Signed order ``n-1`` Pfaffians ``p_i = (-1)**(i+1) Pf(A minus row/col i)``, i 1-based.

    With this sign choice ``A @ p == 0`` identically, and ``p`` spans the
    kernel whenever ``A`` has rank ``n - 1``.
    """
    n = A.n
    if n % 2 == 0:
        raise ValueError("sub-Pfaffian vector needs odd size")
    pf = _PfaffianExpander(A)
    full = tuple(range(n))
    out = []
    for i in range(n):
        v = pf(full[:i] + full[i + 1 :])
        out.append(-v if i % 2 else v)
    return out


def congruence(M: ExactMatrix, A: SkewMatrix) -> SkewMatrix:
    """``M @ A @ M.T`` for invertible ``M``; kernels move by ``M^{-T}``."""
    if M.nrows != M.ncols or M.nrows != A.n:
        raise ValueError("congruence needs a square matrix matching A")
    if not det(M):
        raise ValueError("congruence by a singular matrix")
    P = M @ A @ M.T
    return SkewMatrix(A.field, P.rows)
