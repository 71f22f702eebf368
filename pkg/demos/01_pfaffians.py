"""Pfaffians and sub-Pfaffians, over Q and over a prime field.

For an even skew matrix, Pf(A)^2 = det(A).  For an odd one, the signed
sub-Pfaffians form a vector p(A) with A p(A) = 0.  The same code runs on
pencils y0*N0 + y1*N1, whose entries are binary linear forms.
"""

import random

from skewpencil import QQ, PrimeField, SkewMatrix, SkewPencil, det, pencil_pf, pencil_subpf, pfaffian, subpfaffian_vector

rng = random.Random(1)


def random_skew(field, n):
    upper = [field(rng.randint(-9, 9)) for _ in range(n * (n - 1) // 2)]
    return SkewMatrix.from_upper(field, n, upper)


# An even matrix over Q: both Pfaffian algorithms agree and square to det.
A = random_skew(QQ, 6)
pf = pfaffian(A)
print("Pf(A) =", pf, "  via elimination:", pfaffian(A, method="elimination"))
print("Pf(A)^2 == det(A):", pf * pf == det(A))

# The same over F_10007.
F = PrimeField(10007)
B = random_skew(F, 6)
print("over", F.name, "Pf(B)^2 == det(B):", pfaffian(B) ** 2 == det(B))

# An odd matrix: the sub-Pfaffian vector spans the kernel.
C = random_skew(QQ, 5)
p = subpfaffian_vector(C)
print("p(C) =", [str(x) for x in p], "  C p(C) =", [str(x) for x in C @ p])

# A 4x4 pencil: Pf is a binary quadratic form.
N = SkewPencil(random_skew(QQ, 4), random_skew(QQ, 4))
print("Pf(y0 N0 + y1 N1) coefficients (y0^2, y0 y1, y1^2):", pencil_pf(N).to_json()["coeffs"])

# A 5x5 pencil: five binary quadratics, annihilated by the pencil.
M = SkewPencil(random_skew(QQ, 5), random_skew(QQ, 5))
q = pencil_subpf(M)
print("sub-Pfaffian degrees:", [f.degree for f in q])
print("N(y) p(y) == 0:", all(x.is_zero for x in M.form_matrix() @ q))
