"""Odd n: a pencil yields a map P^1 -> P^{n-1} given by its sub-Pfaffians.

Backward, any n spanning binary forms of degree (n-1)/2 arise this way, and
the pencils realizing them form a linear space of dimension (n^2-3n)/2 + 1.
For n = 5 that space has more than one pencil, so the map is not injective.
"""

import random

from skewpencil import QQ, FormVector, deg_locus_odd, fiber_sample, fiber_system, pencil_subpf, realize_pfaffians, standard_Nk
from skewpencil.binary_forms import random_form
from skewpencil.pencils import forms_proportional
from skewpencil.complexes import pencil_span

rng = random.Random(11)
n = 5

# The tridiagonal model pencil has monomial sub-Pfaffians.
print("sub-Pfaffians of N_5:", [f.to_json()["coeffs"] for f in pencil_subpf(standard_Nk(5))])

# Prescribe five random quadratics and realize them.
while True:
    f = FormVector(random_form(QQ, 2, rng) for _ in range(n))
    if f.spanning:
        break
print("prescribed forms:", [g.to_json()["coeffs"] for g in f.forms])

N = realize_pfaffians(f)
print("realized pencil's sub-Pfaffians are proportional to the input:", forms_proportional(pencil_subpf(N), f.forms))

space = fiber_system(f)
print(f"dimension of the solution space: {space.dim} (expected {(n * n - 3 * n) // 2 + 1})")

M = fiber_sample(f.forms, seed=5)
print("another pencil with the same parameterization:", deg_locus_odd(M) == deg_locus_odd(N))
print("and it is a different pencil:", pencil_span(M) != pencil_span(N))
