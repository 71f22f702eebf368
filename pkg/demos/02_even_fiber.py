"""Even n: a pencil is determined (up to a choice in a linear space) by its n/2 lines.

A generic pencil of n x n skew matrices, n even, degenerates at n/2 points
of P^1, each time to a complex whose kernel is a line of P^{n-1}.  Going
backward, we prescribe n/2 spanning lines and sample a pencil that degenerates
exactly along them.
"""

import random

from skewpencil import build_sigma, corank_profile, deg_locus_even, even_fiber_sample, gauss_fiber
from skewpencil.complexes import random_line, random_spanning_lines

rng = random.Random(7)
n = 6

# Complexes whose kernel contains a given line form a space of dim (n-1)(n-4)/2.
print("complexes centered on a random line in P^5:", gauss_fiber(random_line(n, rng)).dim, "dimensional")

lines = random_spanning_lines(n, rng)
for k, line in enumerate(lines, 1):
    print(f"prescribed line {k}:", line.to_json())

cfg = build_sigma(lines)
print("the candidate pencils live in a P^%d" % cfg.sigma.dim)

N = even_fiber_sample(lines, seed=3)
profile = corank_profile(N)
print("roots of Pf and coranks:", [(str(rc.point), rc.corank) for rc in profile.roots])

locus = deg_locus_even(N)
print("recovered lines equal the prescribed ones:", locus.line_set == frozenset(lines))
