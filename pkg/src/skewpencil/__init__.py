"""Exact computations with pencils of skew-symmetric matrices (pencils of linear line complexes).

Forward: Pfaffians, sub-Pfaffians and degeneracy loci of ``y0*N0 + y1*N1``.
Backward: all pencils whose degeneracy locus is a prescribed set of ``n/2``
spanning lines (even n) or a prescribed parameterization by spanning binary
forms (odd n).
"""

from .binary_forms import BinaryForm, PointP1, bf_eval, bf_gcd, bf_mul, bf_roots, coeff_matrix_rank
from .complexes import (
    Complex,
    ComplexSpace,
    ProjSubspace,
    build_sigma,
    center,
    center_complex,
    classify,
    even_fiber_sample,
    gauss_fiber,
    normalizing_projectivity,
    pencil_span,
    sigma_coordinates,
    sigma_line_valid,
    standard_lines,
)
from .fields import QQ, FpElement, PrimeField, field_from_spec, fp_embed, rat_normalize
from .linalg import (
    ExactMatrix,
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
from .odd_fibers import FormVector, fiber_sample, fiber_system, realize_pfaffians, standard_Nk
from .pencils import (
    DegLocusEven,
    DegLocusOdd,
    NonGenericError,
    SkewPencil,
    corank_profile,
    deg_locus_even,
    deg_locus_odd,
    pencil_eval,
    pencil_pf,
    pencil_subpf,
)

__version__ = "0.1.0"
