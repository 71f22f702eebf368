"""Pencils ``y0*N0 + y1*N1`` of skew-symmetric matrices and their degeneracy loci.

A pencil is stored as the pair ``(N0, N1)``; as a geometric object it is the
2-dimensional subspace of skew forms they span (a line of linear line
complexes).  For even ``n`` the degeneracy locus is the set of kernel lines
at the roots of the Pfaffian; for odd ``n`` it is the rational curve
parameterized by the signed sub-Pfaffians.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binary_forms import BinaryForm, PointP1, bf_gcd, bf_roots, coeff_matrix_rank
from .linalg import SkewMatrix, nullspace, pfaffian, rank, subpfaffian_vector

__all__ = [
    "DegLocusEven",
    "DegLocusOdd",
    "NonGenericError",
    "RootCorank",
    "SkewPencil",
    "corank_profile",
    "deg_locus_even",
    "deg_locus_odd",
    "pencil_eval",
    "pencil_pf",
    "pencil_subpf",
]


class NonGenericError(ValueError):
    """The input violates a genericity condition the construction relies on."""


@dataclass(frozen=True)
class SkewPencil:
    N0: SkewMatrix
    N1: SkewMatrix

    def __post_init__(self):
        if self.N0.n != self.N1.n:
            raise ValueError("pencil matrices have different sizes")
        if self.N0.field != self.N1.field:
            raise ValueError("pencil matrices over different fields")

    @property
    def n(self) -> int:
        return self.N0.n

    @property
    def field(self):
        return self.N0.field

    def form_matrix(self) -> SkewMatrix:
        """The matrix of linear forms ``y0*N0 + y1*N1``."""
        field = self.field
        n = self.n
        rows = [
            [BinaryForm._raw(field, (self.N0.rows[i][j], self.N1.rows[i][j])) for j in range(n)]
            for i in range(n)
        ]
        return SkewMatrix(field, rows)

    def rebase(self, a, b, c, d) -> SkewPencil:
        """The same pencil with generators ``(a*N0 + b*N1, c*N0 + d*N1)``."""
        return SkewPencil(_combine(self.N0, self.N1, a, b), _combine(self.N0, self.N1, c, d))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field": self.field.name,
            "N0": self.N0.to_json(),
            "N1": self.N1.to_json(),
        }

    @classmethod
    def from_json(cls, obj, field=None) -> SkewPencil:
        from .fields import field_from_spec

        if field is None:
            field = field_from_spec(obj.get("field", "Q"))
        n0 = SkewMatrix(field, [[field.parse(str(x)) for x in r] for r in obj["N0"]])
        n1 = SkewMatrix(field, [[field.parse(str(x)) for x in r] for r in obj["N1"]])
        if "n" in obj and int(obj["n"]) != n0.n:
            raise ValueError(f"pencil declares n={obj['n']} but N0 is {n0.n}x{n0.n}")
        return cls(n0, n1)


def _combine(A: SkewMatrix, B: SkewMatrix, a, b) -> SkewMatrix:
    field = A.field
    a, b = field(a), field(b)
    return SkewMatrix(
        field,
        [[a * x + b * y for x, y in zip(r, s)] for r, s in zip(A.rows, B.rows)],
    )


def pencil_eval(N: SkewPencil, p: PointP1) -> SkewMatrix:
    """``b0*N0 + b1*N1`` at the point ``[b0:b1]``."""
    return _combine(N.N0, N.N1, p.b0, p.b1)


def pencil_pf(N: SkewPencil) -> BinaryForm:
    """Pfaffian of ``y0*N0 + y1*N1`` (the zero form of degree ``(n-1)/2`` when n is odd)."""
    if N.n % 2:
        return BinaryForm.zero(N.field, (N.n - 1) // 2)
    return pfaffian(N.form_matrix())


def pencil_subpf(N: SkewPencil) -> list[BinaryForm]:
    """Signed sub-Pfaffian vector of the pencil, forms of degree ``(n-1)/2``."""
    if N.n % 2 == 0:
        raise ValueError("sub-Pfaffian vector of a pencil needs odd n")
    return subpfaffian_vector(N.form_matrix())


@dataclass(frozen=True)
class RootCorank:
    point: PointP1
    multiplicity: int
    corank: int


@dataclass(frozen=True)
class CorankProfile:
    roots: tuple
    remainder: BinaryForm

    @property
    def remainder_degree(self) -> int:
        return self.remainder.degree


def corank_profile(N: SkewPencil) -> CorankProfile:
    """Corank of the pencil at each field-rational root of its Pfaffian."""
    if N.n % 2:
        raise ValueError("corank profile is defined for even n")
    pf = pencil_pf(N)
    if pf.is_zero:
        raise NonGenericError("degenerate pencil")
    roots, remainder = bf_roots(pf)
    out = []
    for pt, mult in roots:
        out.append(RootCorank(pt, mult, N.n - rank(pencil_eval(N, pt))))
    return CorankProfile(tuple(out), remainder)


@dataclass(frozen=True)
class DegLocusEven:
    """Kernel lines of an even pencil at the roots of its Pfaffian.

    Equality compares the set of lines only; roots depend on the choice of
    generators of the pencil.
    """

    components: tuple
    remainder: BinaryForm

    @property
    def lines(self):
        return tuple(line for _, line in self.components)

    @property
    def line_set(self) -> frozenset:
        return frozenset(self.lines)

    def __eq__(self, other):
        if not isinstance(other, DegLocusEven):
            return NotImplemented
        return self.line_set == other.line_set

    def __hash__(self):
        return hash(self.line_set)

    def to_json(self):
        return {
            "components": [
                {"root": pt.to_json(), "line": line.to_json()} for pt, line in self.components
            ],
            "remainder": self.remainder.to_json(),
        }


def deg_locus_even(N: SkewPencil) -> DegLocusEven:
    from .complexes import ProjSubspace

    if N.n % 2:
        raise ValueError("deg_locus_even needs even n")
    prof = corank_profile(N)
    if prof.remainder.degree > 0:
        raise NonGenericError("roots outside field")
    comps = []
    for rc in prof.roots:
        if rc.multiplicity > 1:
            raise NonGenericError(f"non-generic pencil (repeated root {rc.point})")
        if rc.corank > 2:
            raise NonGenericError(
                f"special complex of the second type on pencil (at {rc.point})"
            )
        kernel = nullspace(pencil_eval(N, rc.point))
        comps.append((rc.point, ProjSubspace(N.field, kernel)))
    return DegLocusEven(tuple(comps), prof.remainder)


@dataclass(frozen=True)
class DegLocusOdd:
    """Parameterization ``[f_1 : ... : f_n]`` scaled so its first nonzero coefficient is 1."""

    forms: tuple

    def to_json(self):
        return {"forms": [f.to_json() for f in self.forms]}


def normalize_forms(forms) -> tuple:
    forms = list(forms)
    lead = next((f.leading_nonzero() for f in forms if not f.is_zero), None)
    if lead is None:
        raise ValueError("all forms are zero")
    inv = forms[0].field.one / lead
    return tuple(f * inv for f in forms)


def forms_gcd(forms) -> BinaryForm:
    forms = [f for f in forms if not f.is_zero]
    g = forms[0].normalized()
    for f in forms[1:]:
        g = bf_gcd(g, f)
        if g.degree == 0:
            break
    return g


def deg_locus_odd(N: SkewPencil) -> DegLocusOdd:
    if N.n % 2 == 0:
        raise ValueError("deg_locus_odd needs odd n")
    p = pencil_subpf(N)
    if all(f.is_zero for f in p):
        raise NonGenericError("pencil of sub-maximal rank")
    g = forms_gcd(p)
    if g.degree > 0:
        raise NonGenericError(f"non-generic pencil (base points: gcd {g})")
    return DegLocusOdd(normalize_forms(p))


def forms_proportional(f, g) -> bool:
    """True if the form vectors agree up to one nonzero scalar (all cross products vanish)."""
    f, g = list(f), list(g)
    if len(f) != len(g):
        return False
    if all(x.is_zero for x in f) or all(x.is_zero for x in g):
        return False
    for i in range(len(f)):
        for j in range(i + 1, len(f)):
            if not (f[i] * g[j] - f[j] * g[i]).is_zero:
                return False
    return True


def span_rank(forms) -> int:
    return coeff_matrix_rank(forms)
