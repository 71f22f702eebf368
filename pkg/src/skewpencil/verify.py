"""Seeded self-verification suites.

Each suite draws random instances, runs the forward and inverse
constructions, and records one :class:`Check` per property.  All randomness
comes from :func:`trial_rng`, a stdlib Mersenne Twister seeded with the
string ``"<seed>/<suite>/<n>/<trial>"``, so any single trial can be
replayed without running the others.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .binary_forms import BinaryForm, coeff_matrix_rank, random_form
from .complexes import (
    build_sigma,
    classify,
    even_fiber_sample,
    gauss_fiber,
    grassmannian_of_lines_dim,
    pencil_span,
    random_line,
    random_spanning_lines,
    sigma_coordinates,
)
from .fields import QQ, PrimeField
from .linalg import SkewMatrix, det, pfaffian, subpfaffian_vector
from .odd_fibers import (
    FormVector,
    expected_fiber_system_dim,
    fiber_sample_report,
    fiber_system,
    realize_pfaffians,
    standard_Nk,
)
from .pencils import (
    NonGenericError,
    SkewPencil,
    corank_profile,
    deg_locus_even,
    deg_locus_odd,
    forms_proportional,
    pencil_eval,
    pencil_subpf,
)

SUITES = ("algebra", "even", "odd", "all")
TEST_PRIME = 10007


def trial_rng(seed: int, suite: str, n, trial: int) -> random.Random:
    return random.Random(f"{seed}/{suite}/{n}/{trial}")


@dataclass
class Check:
    name: str
    anchor: str
    passed: bool
    witness: dict = dc_field(default_factory=dict)

    def to_json(self):
        return {"name": self.name, "anchor": self.anchor, "passed": self.passed, "witness": self.witness}


class _Tally:
    """Aggregates repeated trials of one property into a single check."""

    def __init__(self, name, anchor):
        self.name, self.anchor = name, anchor
        self.trials = 0
        self.failures = []
        self.extra = {}

    def record(self, ok: bool, instance=None):
        self.trials += 1
        if not ok:
            self.failures.append(instance)

    def check(self) -> Check:
        w = {"trials": self.trials, "failures": len(self.failures)}
        w.update(self.extra)
        if self.failures:
            w["failed_instances"] = self.failures[:5]
        return Check(self.name, self.anchor, not self.failures and self.trials > 0, w)


def random_skew(field, n, rng, lo=-10, hi=10) -> SkewMatrix:
    return SkewMatrix.from_upper(field, n, [rng.randint(lo, hi) for _ in range(n * (n - 1) // 2)])


def random_pencil(field, n, rng) -> SkewPencil:
    return SkewPencil(random_skew(field, n, rng), random_skew(field, n, rng))


def _mat_json(A):
    return A.to_json()


def _lines_json(lines):
    return [line.to_json() for line in lines]


def lemma_nk_matches(k: int, field=QQ) -> bool:
    """Sub-Pfaffians of the tridiagonal pencil are the monomials y0^i y1^(r-i) at odd positions."""
    p = pencil_subpf(standard_Nk(k, field))
    r = (k - 1) // 2
    expected = []
    for pos in range(k):
        if pos % 2 == 0:
            i = pos // 2
            expected.append(BinaryForm.monomial(field, i, r - i))
        else:
            expected.append(BinaryForm.zero(field, r))
    return p == expected or p == [-e for e in expected]


def suite_algebra(seed: int, trials: int) -> list[Check]:
    checks = []
    for field in (QQ, PrimeField(TEST_PRIME)):
        t = _Tally(f"pfaffian_squared_equals_det[{field.name}]", "Pf(A)^2 = det(A)")
        agree = _Tally(f"pfaffian_methods_agree[{field.name}]", "expansion = elimination")
        for n in (2, 4, 6, 8, 10):
            for trial in range(trials):
                rng = trial_rng(seed, f"pf-{field.name}", n, trial)
                A = random_skew(field, n, rng)
                pf = pfaffian(A)
                t.record(pf * pf == det(A), {"A": _mat_json(A)})
                agree.record(pf == pfaffian(A, "elimination"), {"A": _mat_json(A)})
        checks += [t.check(), agree.check()]

        t = _Tally(f"kernel_identity[{field.name}]", "A p(A) = 0 for odd skew A")
        for n in (3, 5, 7, 9):
            for trial in range(trials):
                rng = trial_rng(seed, f"ker-{field.name}", n, trial)
                A = random_skew(field, n, rng)
                t.record(all(not x for x in A @ subpfaffian_vector(A)), {"A": _mat_json(A)})
        checks.append(t.check())

    t = _Tally("pencil_kernel_identity[Q]", "N(y) p(y) = 0 coefficient-wise")
    for n in (5, 7):
        for trial in range(max(1, trials // 2)):
            rng = trial_rng(seed, "pencil-ker", n, trial)
            N = random_pencil(QQ, n, rng)
            prod = N.form_matrix() @ pencil_subpf(N)
            t.record(all(x.is_zero for x in prod), N.to_json())
    checks.append(t.check())

    t = _Tally("tridiagonal_subpfaffians", "Pf_{2i+1}(N_k) = y0^i y1^((k-1)/2-i), Pf_{2i}(N_k) = 0")
    for k in (3, 5, 7, 9, 11):
        p = pencil_subpf(standard_Nk(k))
        t.record(lemma_nk_matches(k) and coeff_matrix_rank(p) == (k + 1) // 2, {"k": k})
    checks.append(t.check())
    return checks


def suite_even(seed: int, trials: int, ns=(4, 6, 8)) -> list[Check]:
    checks = []
    for n in ns:
        t = _Tally(f"gauss_fiber_dim[n={n}]", "dim of complexes centered on a line = (n-1)(n-4)/2")
        expected = (n - 1) * (n - 4) // 2
        t.extra["expected"] = expected
        for trial in range(trials):
            rng = trial_rng(seed, "gauss", n, trial)
            line = random_line(n, rng)
            d = gauss_fiber(line).dim
            t.record(d == expected, {"line": line.to_json(), "dim": d})
        checks.append(t.check())

        rt = _Tally(f"even_fiber_roundtrip[n={n}]", "Deg(N) = the prescribed lines for N in sigma")
        cor = _Tally(f"even_fiber_coranks[n={n}]", "n/2 corank-2 points, none of corank >= 4")
        conv = _Tally(f"even_fiber_in_sigma[n={n}]", "fiber pencils lie in sigma")
        dims = _Tally(f"sigma_dims[n={n}]", "dim sigma = (n-2)/2, dim Gr(1, sigma) = n-4")
        paths = _Tally(f"sigma_paths_agree[n={n}]", "direct sigma = transported standard sigma")
        for trial in range(trials):
            rng = trial_rng(seed, "even", n, trial)
            lines = random_spanning_lines(n, rng)
            inst = {"lines": _lines_json(lines)}
            cfg = build_sigma(lines)
            dims.record(
                cfg.sigma.dim == (n - 2) // 2
                and grassmannian_of_lines_dim(cfg.sigma.dim) == n - 4
                and all(F.dim == (n - 4) // 2 for F in cfg.F),
                inst,
            )
            paths.record(cfg.sigma == build_sigma(lines, "transport").sigma, inst)
            N = even_fiber_sample(lines, rng.getrandbits(32))
            inst["pencil"] = N.to_json()
            try:
                locus = deg_locus_even(N)
                rt.record(len(locus.lines) == n // 2 and locus.line_set == frozenset(lines), inst)
            except NonGenericError as exc:
                inst["error"] = str(exc)
                rt.record(False, inst)
            prof = corank_profile(N)
            types = [classify(pencil_eval(N, rc.point)) for rc in prof.roots]
            cor.record(
                [rc.corank for rc in prof.roots] == [2] * (n // 2)
                and types == ["special-first-type"] * (n // 2),
                inst,
            )
            conv.record(
                sigma_coordinates(cfg, N.N0) is not None and sigma_coordinates(cfg, N.N1) is not None,
                inst,
            )
        checks += [rt.check(), cor.check(), conv.check(), dims.check(), paths.check()]

    if 4 in ns:
        t = _Tally("n4_unique_pencil", "for n = 4 sigma is the unique preimage")
        for trial in range(trials):
            rng = trial_rng(seed, "n4", 4, trial)
            lines = random_spanning_lines(4, rng)
            direct = build_sigma(lines)
            transported = build_sigma(lines, "transport")
            a = pencil_span(even_fiber_sample(lines, trial, "direct"))
            b = pencil_span(even_fiber_sample(lines, trial + 1, "transport"))
            t.record(direct.sigma.dim == 1 and a == b == direct.sigma == transported.sigma,
                     {"lines": _lines_json(lines)})
        checks.append(t.check())
    checks.append(bookkeeping_check("even"))
    return checks


def suite_odd(seed: int, trials: int, ns=(5, 7)) -> list[Check]:
    checks = []
    for n in ns:
        real = _Tally(f"odd_realization[n={n}]", "spanning forms are sub-Pfaffians of some pencil")
        dimt = _Tally(f"odd_fiber_system_dim[n={n}]", "fiber dimension (n^2-3n)/2, plus one scalar")
        samp = _Tally(f"odd_fiber_sample[n={n}]", "fiber sample shares the parameterization")
        expected = expected_fiber_system_dim(n)
        dimt.extra["expected"] = expected
        rejected = 0
        for trial in range(trials):
            rng = trial_rng(seed, "odd", n, trial)
            raw = FormVector(random_form(QQ, (n - 1) // 2, rng) for _ in range(n))
            if not raw.spanning:
                continue
            N = realize_pfaffians(raw)
            real.record(forms_proportional(pencil_subpf(N), raw.forms), raw.to_json())
            d = fiber_system(raw).dim
            dimt.record(d == expected, {**raw.to_json(), "dim": d, "origin": "raw"})

            origin = random_pencil(QQ, n, rng)
            try:
                f = FormVector(deg_locus_odd(origin).forms)
            except NonGenericError:
                continue
            space = fiber_system(f)
            dimt.record(
                space.dim == expected and space.contains(origin),
                {"pencil": origin.to_json(), "dim": space.dim, "origin": "pencil"},
            )
            rep = fiber_sample_report(f, rng.getrandbits(32))
            rejected += rep.rejected
            samp.record(
                deg_locus_odd(rep.pencil) == deg_locus_odd(origin)
                and pencil_span(rep.pencil) != pencil_span(origin),
                {"pencil": origin.to_json(), "sample": rep.pencil.to_json()},
            )
        samp.extra["rejected_draws"] = rejected
        checks += [real.check(), dimt.check(), samp.check()]
    checks.append(bookkeeping_check("odd"))
    return checks


def grassmannian_dim(k: int, m: int) -> int:
    """Dimension of the Grassmannian of k-planes in an m-dimensional vector space."""
    return k * (m - k)


def bookkeeping_check(parity: str) -> Check:
    rows = []
    ok = True
    for n in range(4, 13):
        g = grassmannian_dim(2, n * (n - 1) // 2)
        if parity == "even" and n % 2 == 0:
            good = g - (n - 4) == n * n - 2 * n
        elif parity == "odd" and n % 2 == 1:
            good = g - (n * n - 3 * n) // 2 == (n * n + n - 8) // 2 and (n * n + n - 8) % 2 == 0
        else:
            continue
        rows.append({"n": n, "ok": good})
        ok = ok and good
    anchor = (
        "dim Gr(2, L2V) - (n-4) = n^2-2n"
        if parity == "even"
        else "dim Gr(2, L2V) - (n^2-3n)/2 = (n^2+n-8)/2"
    )
    return Check(f"dimension_bookkeeping[{parity}]", anchor, ok, {"cases": rows})


def run_suite(suite: str, seed: int, trials: int, n: int | None = None) -> list[Check]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    checks = []
    if suite in ("algebra", "all"):
        checks += suite_algebra(seed, trials)
    if suite == "even" or (suite == "all" and (n is None or n % 2 == 0)):
        if n is not None and n % 2:
            raise ValueError("the even suite needs even n")
        checks += suite_even(seed, trials, (n,) if n else (4, 6, 8))
    if suite == "odd" or (suite == "all" and (n is None or n % 2)):
        if n is not None and n % 2 == 0:
            raise ValueError("the odd suite needs odd n")
        checks += suite_odd(seed, trials, (n,) if n else (5, 7))
    return checks
