"""Command-line front end emitting JSON certificates.

Every command prints a certificate: the command echo, a digest of the
inputs, the outputs, and the list of checks that were run on them.  The exit
status is 0 iff every check passed, 1 if some check failed, and 2 on a
usage or input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys

from . import __version__
from .binary_forms import PointP1, coeff_matrix_rank
from .complexes import (
    ProjSubspace,
    build_sigma,
    classify,
    even_fiber_sample,
    gauss_fiber,
    grassmannian_of_lines_dim,
    random_line,
    sigma_coordinates,
)
from .fields import field_from_spec
from .linalg import SkewMatrix, det, pfaffian, subpfaffian_vector
from .odd_fibers import (
    FormVector,
    expected_fiber_system_dim,
    fiber_sample_report,
    fiber_system,
    realize_pfaffians,
)
from .pencils import (
    NonGenericError,
    SkewPencil,
    corank_profile,
    deg_locus_even,
    deg_locus_odd,
    forms_gcd,
    forms_proportional,
    pencil_eval,
    pencil_pf,
    pencil_subpf,
)
from .verify import Check, run_suite


class UsageError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _field(args, obj=None):
    spec_file = obj.get("field") if isinstance(obj, dict) else None
    if args.field and spec_file and field_from_spec(args.field) != field_from_spec(spec_file):
        raise UsageError(f"--field {args.field} conflicts with input field {spec_file}")
    try:
        return field_from_spec(args.field or spec_file or "Q")
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _require(obj, key, path):
    if not isinstance(obj, dict) or key not in obj:
        raise UsageError(f"{path}: missing field {key!r}")
    return obj[key]


def _parse_matrix(field, rows, where):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise UsageError(f"{where}: expected an array of rows")
    out = []
    for i, r in enumerate(rows):
        row = []
        for j, x in enumerate(r):
            try:
                row.append(field.parse(str(x)))
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"{where}: bad entry at ({i + 1},{j + 1}): {exc}") from None
        out.append(row)
    try:
        return SkewMatrix(field, out)
    except ValueError as exc:
        raise UsageError(f"{where}: {exc}") from None


def _load_pencil(args):
    obj = _load_json(args.input)
    field = _field(args, obj)
    N0 = _parse_matrix(field, _require(obj, "N0", args.input), f"{args.input}: N0")
    N1 = _parse_matrix(field, _require(obj, "N1", args.input), f"{args.input}: N1")
    if N0.n != N1.n:
        raise UsageError(f"{args.input}: N0 and N1 have different sizes")
    if "n" in obj and int(obj["n"]) != N0.n:
        raise UsageError(f"{args.input}: n={obj['n']} but matrices are {N0.n}x{N0.n}")
    return obj, SkewPencil(N0, N1)


def _load_forms(args, path):
    obj = _load_json(path)
    field = _field(args, obj)
    try:
        f = FormVector.from_json(field, obj)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"{path}: malformed form vector ({exc})") from None
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if args.n is not None and args.n != f.n:
        raise UsageError(f"--n {args.n} but {path} holds {f.n} forms")
    return obj, f


def _load_lines(args, path):
    obj = _load_json(path)
    field = _field(args, obj)
    items = obj["lines"] if isinstance(obj, dict) and "lines" in obj else obj
    if not isinstance(items, list):
        raise UsageError(f"{path}: expected a list of lines")
    lines = []
    for k, rows in enumerate(items):
        try:
            line = ProjSubspace.from_json(field, rows)
        except (ValueError, ZeroDivisionError, TypeError, IndexError) as exc:
            raise UsageError(f"{path}: line {k + 1}: {exc}") from None
        if line.dim != 1:
            raise UsageError(f"{path}: line {k + 1} spans a subspace of dimension {line.dim}")
        lines.append(line)
    if args.n is not None and any(line.n != args.n for line in lines):
        raise UsageError(f"{path}: lines do not live in P^{args.n - 1}")
    return obj, lines


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()


def _certificate(args, inputs, outputs, checks):
    echo = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "output")}
    return {
        "command": args.command,
        "args": echo,
        "version": __version__,
        "inputs_digest": _digest(inputs),
        "inputs": inputs,
        "outputs": outputs,
        "checks": [c.to_json() for c in checks],
        "passed": all(c.passed for c in checks),
    }


# -- commands -----------------------------------------------------------------


def cmd_pfaffian(args):
    obj = _load_json(args.input)
    if isinstance(obj, dict) and "N0" in obj:
        _, N = _load_pencil(args)
        if N.n % 2 == 0:
            pf = pencil_pf(N)
            checks = []
            for b in range(N.n // 2 + 1):
                pt = PointP1(N.field, 1, b)
                v = pf(pt.b0, pt.b1)
                checks.append(Check(f"pf_squared_equals_det_at[1:{b}]", "Pf(A)^2 = det(A)",
                                    v * v == det(pencil_eval(N, pt))))
            return obj, {"pfaffian": pf.to_json()}, checks
        p = pencil_subpf(N)
        ok = all(x.is_zero for x in N.form_matrix() @ p)
        return obj, {"subpfaffians": [f.to_json() for f in p]}, [
            Check("kernel_identity", "N(y) p(y) = 0", ok)
        ]
    field = _field(args, obj if isinstance(obj, dict) else None)
    rows = _require(obj, "matrix", args.input) if isinstance(obj, dict) else obj
    A = _parse_matrix(field, rows, args.input)
    if A.n % 2 == 0:
        pf = pfaffian(A)
        d = det(A)
        return obj, {"pfaffian": field.format(pf), "det": field.format(d)}, [
            Check("pf_squared_equals_det", "Pf(A)^2 = det(A)", pf * pf == d)
        ]
    p = subpfaffian_vector(A)
    ok = all(not x for x in A @ p)
    return obj, {"subpfaffians": [field.format(x) for x in p]}, [
        Check("kernel_identity", "A p(A) = 0", ok)
    ]


def cmd_deglocus(args):
    obj, N = _load_pencil(args)
    n = N.n
    if n % 2 == 0:
        try:
            prof = corank_profile(N)
        except NonGenericError as exc:
            return obj, {"error": str(exc)}, [Check("generic_pencil", "Pf(N) is not identically zero", False)]
        roots = [
            {"root": rc.point.to_json(), "multiplicity": rc.multiplicity, "corank": rc.corank}
            for rc in prof.roots
        ]
        out = {"pfaffian": pencil_pf(N).to_json(), "roots": roots,
               "remainder_degree": prof.remainder_degree}
        try:
            locus = deg_locus_even(N)
        except NonGenericError as exc:
            out["error"] = str(exc)
            return obj, out, [Check("generic_pencil", "n/2 simple split roots of corank 2", False,
                                    {"reason": str(exc)})]
        span = locus.lines[0].join(*locus.lines[1:]).dim
        out["lines"] = [line.to_json() for line in sorted(locus.lines, key=lambda l: l.sort_key())]
        out["span_dim"] = span
        checks = [
            Check("line_count", "Deg(N) is n/2 lines", len(locus.lines) == n // 2),
            Check("lines_span", f"span = P^{n - 1}", span == n - 1, {"span_dim": span}),
        ]
        return obj, out, checks
    try:
        locus = deg_locus_odd(N)
    except NonGenericError as exc:
        return obj, {"error": str(exc)}, [Check("generic_pencil", "base-point-free sub-Pfaffians", False,
                                                {"reason": str(exc)})]
    r = coeff_matrix_rank(locus.forms)
    out = {"forms": [f.to_json() for f in locus.forms], "gcd_degree": forms_gcd(locus.forms).degree,
           "span_rank": r}
    checks = [
        Check("base_point_free", "gcd of the sub-Pfaffians is constant", out["gcd_degree"] == 0),
        Check("forms_span", "sub-Pfaffians span k[y0,y1]_((n-1)/2)", r == (n + 1) // 2, {"rank": r}),
    ]
    return obj, out, checks


def cmd_even_fiber(args):
    obj, lines = _load_lines(args, args.lines)
    n = lines[0].n
    if n % 2:
        raise UsageError("even-fiber needs even n")
    try:
        N = even_fiber_sample(lines, args.seed)
    except NonGenericError as exc:
        return obj, {"error": str(exc)}, [Check("spanning_configuration", "lines span P(V)", False)]
    cfg = build_sigma(lines)
    prof = corank_profile(N)
    out = {
        "pencil": N.to_json(),
        "roots": [{"root": rc.point.to_json(), "corank": rc.corank} for rc in prof.roots],
        "sigma_dim": cfg.sigma.dim,
        "fiber_dim": grassmannian_of_lines_dim(cfg.sigma.dim),
    }
    checks = []
    try:
        locus = deg_locus_even(N)
        recovered = sorted(locus.lines, key=lambda l: l.sort_key())
        out["recovered_lines"] = [line.to_json() for line in recovered]
        checks.append(Check("roundtrip", "Deg(N) = the prescribed lines", locus.line_set == frozenset(lines)))
    except NonGenericError as exc:
        checks.append(Check("roundtrip", "Deg(N) = the prescribed lines", False, {"reason": str(exc)}))
    types = [classify(pencil_eval(N, rc.point)) for rc in prof.roots]
    checks += [
        Check("coranks", "n/2 special complexes of the first type, none of the second",
              types == ["special-first-type"] * (n // 2), {"types": types}),
        Check("in_sigma", "the pencil lies in sigma",
              sigma_coordinates(cfg, N.N0) is not None and sigma_coordinates(cfg, N.N1) is not None),
        Check("sigma_dim", "dim sigma = (n-2)/2", cfg.sigma.dim == (n - 2) // 2),
        Check("fiber_dim", "dim Gr(1, sigma) = n-4", out["fiber_dim"] == n - 4),
        Check("paths_agree", "direct sigma = transported sigma", cfg.sigma == build_sigma(lines, "transport").sigma),
    ]
    return obj, out, checks


def cmd_gauss_dim(args):
    if args.n is None or args.n % 2 or args.n < 4:
        raise UsageError("gauss-dim needs an even --n >= 4")
    n = args.n
    field = _field(args)
    if args.input:
        obj, lines = _load_lines(args, args.input)
    else:
        rng = random.Random(f"{args.seed}/gauss-dim/{n}")
        lines = [random_line(n, rng, field) for _ in range(args.trials)]
        obj = {"lines": [line.to_json() for line in lines]}
    expected = (n - 1) * (n - 4) // 2
    dims = [gauss_fiber(line).dim for line in lines]
    return obj, {"dims": dims, "expected": expected}, [
        Check("gauss_fiber_dim", "dim = (n-1)(n-4)/2", all(d == expected for d in dims))
    ]


def cmd_odd_realize(args):
    obj, f = _load_forms(args, args.forms)
    try:
        N = realize_pfaffians(f)
    except NonGenericError as exc:
        return obj, {"error": str(exc)}, [Check("forms_span", "forms span k[y0,y1]_((n-1)/2)", False)]
    p = pencil_subpf(N)
    return obj, {"pencil": N.to_json(), "subpfaffians": [x.to_json() for x in p]}, [
        Check("proportional", "sub-Pfaffians of N proportional to f", forms_proportional(p, f.forms)),
        Check("kernel_identity", "N(y) f(y) = 0", all(x.is_zero for x in N.form_matrix() @ list(f.forms))),
    ]


def cmd_odd_fiber(args):
    obj, f = _load_forms(args, args.forms)
    space = fiber_system(f)
    expected = expected_fiber_system_dim(f.n)
    out = {
        "dim": space.dim,
        "expected_dim": expected,
        "basis": [N.to_json() for N in space.basis],
    }
    checks = [
        Check("solution_dim", "fiber dimension (n^2-3n)/2, plus one scalar", space.dim == expected,
              {"dim": space.dim}),
        Check("basis_annihilates", "N(y) f(y) = 0 for every basis element",
              all(all(x.is_zero for x in N.form_matrix() @ list(f.forms)) for N in space.basis)),
    ]
    try:
        rep = fiber_sample_report(f, args.seed)
        out["sample"] = rep.pencil.to_json()
        out["rejected_draws"] = rep.rejected
        checks.append(Check("sample_in_fiber", "sample sub-Pfaffians proportional to f",
                            forms_proportional(pencil_subpf(rep.pencil), f.forms)))
    except NonGenericError as exc:
        out["error"] = str(exc)
        checks.append(Check("sample_in_fiber", "sample sub-Pfaffians proportional to f", False))
    return obj, out, checks


def cmd_verify(args):
    try:
        checks = run_suite(args.suite, args.seed, args.trials, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    inputs = {"suite": args.suite, "seed": args.seed, "trials": args.trials, "n": args.n}
    return inputs, {"checks_run": len(checks)}, checks


# -- plumbing -------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="Q or Fp:<p> (default: from input, else Q)")
    common.add_argument("--n", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", default=None, help="write the certificate here instead of stdout")

    parser = argparse.ArgumentParser(prog="skewpencil", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pfaffian", parents=[common], help="Pfaffian or sub-Pfaffians of a matrix or pencil")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_pfaffian)

    p = sub.add_parser("deglocus", parents=[common], help="degeneracy locus of a pencil")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_deglocus)

    p = sub.add_parser("even-fiber", parents=[common], help="sample a pencil with prescribed lines")
    p.add_argument("--lines", "--input", dest="lines", required=True)
    p.set_defaults(func=cmd_even_fiber)

    p = sub.add_parser("gauss-dim", parents=[common], help="dimension of complexes centered on a line")
    p.add_argument("--input", default=None)
    p.add_argument("--trials", type=int, default=10)
    p.set_defaults(func=cmd_gauss_dim)

    p = sub.add_parser("odd-realize", parents=[common], help="a pencil with prescribed sub-Pfaffians")
    p.add_argument("--forms", "--input", dest="forms", required=True)
    p.set_defaults(func=cmd_odd_realize)

    p = sub.add_parser("odd-fiber", parents=[common], help="all pencils with prescribed sub-Pfaffians")
    p.add_argument("--forms", "--input", dest="forms", required=True)
    p.set_defaults(func=cmd_odd_fiber)

    p = sub.add_parser("verify", parents=[common], help="run the seeded verification suites")
    p.add_argument("suite", choices=("algebra", "even", "odd", "all"))
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_verify)
    return parser


def _text_report(cert) -> str:
    lines = [f"{cert['command']} (skewpencil {cert['version']})"]
    for key, value in cert["outputs"].items():
        if key in ("basis",):
            lines.append(f"  {key}: {len(value)} elements")
        else:
            lines.append(f"  {key}: {json.dumps(value)}")
    for c in cert["checks"]:
        mark = "PASS" if c["passed"] else "FAIL"
        lines.append(f"[{mark}] {c['name']}: {c['anchor']}")
    lines.append("all checks passed" if cert["passed"] else "SOME CHECKS FAILED")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.field:
        try:
            field_from_spec(args.field)
        except ValueError as exc:
            parser.error(str(exc))
    try:
        inputs, outputs, checks = args.func(args)
    except UsageError as exc:
        print(f"skewpencil {args.command}: error: {exc}", file=sys.stderr)
        return 2
    cert = _certificate(args, inputs, outputs, checks)
    if args.format == "json":
        text = json.dumps(cert, indent=2, sort_keys=True) + "\n"
    else:
        text = _text_report(cert)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if cert["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
