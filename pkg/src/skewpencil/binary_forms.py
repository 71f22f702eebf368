"""Binary forms: homogeneous polynomials in ``y0, y1`` over an exact field.

A form of degree ``d`` stores ``d + 1`` coefficients with
``coeffs[i]`` the coefficient of ``y0**(d - i) * y1**i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from sympy import divisors

from .fields import QQ, PrimeField

__all__ = [
    "BinaryForm",
    "PointP1",
    "bf_eval",
    "bf_gcd",
    "bf_mul",
    "bf_roots",
    "coeff_matrix_rank",
]

# below this size, roots over F_p are found by trying every point of P^1
EXHAUSTIVE_ROOT_BOUND = 5000


class BinaryForm:
    """Homogeneous polynomial ``sum(coeffs[i] * y0**(d-i) * y1**i)``."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        if len(coeffs) == 0:
            raise ValueError("a binary form needs at least one coefficient")
        self.field = field
        self.coeffs = tuple(field(c) for c in coeffs)

    @classmethod
    def _raw(cls, field, coeffs):
        # trusted constructor: coefficients are already field elements
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def zero(cls, field, degree: int) -> BinaryForm:
        return cls._raw(field, (field.zero,) * (degree + 1))

    @classmethod
    def constant(cls, field, c=1) -> BinaryForm:
        return cls._raw(field, (field(c),))

    @classmethod
    def monomial(cls, field, a: int, b: int, c=1) -> BinaryForm:
        """``c * y0**a * y1**b``."""
        coeffs = [field.zero] * (a + b + 1)
        coeffs[b] = field(c)
        return cls._raw(field, coeffs)

    @classmethod
    def linear(cls, field, a, b) -> BinaryForm:
        """``a*y0 + b*y1``."""
        return cls._raw(field, (field(a), field(b)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def _check(self, other: BinaryForm):
        if other.field != self.field:
            raise ValueError("binary forms over different fields")
        if other.degree != self.degree:
            raise ValueError(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        self._check(other)
        return BinaryForm._raw(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        self._check(other)
        return BinaryForm._raw(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm._raw(self.field, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return bf_mul(self, other)
        c = self.field(other)
        return BinaryForm._raw(self.field, [c * a for a in self.coeffs])

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, b0, b1):
        return bf_eval(self, (b0, b1))

    def leading_nonzero(self):
        """The first nonzero coefficient (``None`` for the zero form)."""
        for c in self.coeffs:
            if c:
                return c
        return None

    def normalized(self) -> BinaryForm:
        """Scale so that the first nonzero coefficient is 1."""
        lead = self.leading_nonzero()
        if lead is None:
            return self
        inv = self.field.one / lead
        return BinaryForm._raw(self.field, [inv * c for c in self.coeffs])

    def is_proportional(self, other: BinaryForm) -> bool:
        """True if ``self`` and ``other`` differ by a nonzero scalar."""
        if self.degree != other.degree or self.is_zero or other.is_zero:
            return False
        return self.normalized() == other.normalized()

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [self.field.format(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, field, obj) -> BinaryForm:
        coeffs = [field.parse(str(c)) for c in obj["coeffs"]]
        if "degree" in obj and int(obj["degree"]) != len(coeffs) - 1:
            raise ValueError(
                f"form declares degree {obj['degree']} but has {len(coeffs)} coefficients"
            )
        return cls._raw(field, coeffs)

    def __str__(self):
        d = self.degree
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(
                s for s in (_power("y0", d - i), _power("y1", i)) if s
            )
            cs = str(c)
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"({cs})*{mono}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"BinaryForm({self})"


def _power(var, e):
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


@dataclass(frozen=True)
class PointP1:
    """A point ``[b0 : b1]`` of the projective line, first nonzero coordinate 1."""

    field: object
    b0: object
    b1: object

    def __init__(self, field, b0, b1):
        b0, b1 = field(b0), field(b1)
        if not b0 and not b1:
            raise ValueError("[0:0] is not a point of P^1")
        if b0:
            b0, b1 = field.one, b1 / b0
        else:
            b1 = field.one
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "b0", b0)
        object.__setattr__(self, "b1", b1)

    def linear_factor(self) -> BinaryForm:
        """The linear form ``b1*y0 - b0*y1`` vanishing exactly at this point."""
        return BinaryForm._raw(self.field, (self.b1, -self.b0))

    def to_json(self):
        return [self.field.format(self.b0), self.field.format(self.b1)]

    def __str__(self):
        return f"[{self.b0}:{self.b1}]"


def bf_mul(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    if f.field != g.field:
        raise ValueError("binary forms over different fields")
    zero = f.field.zero
    out = [zero] * (f.degree + g.degree + 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = out[i + j] + a * b
    return BinaryForm._raw(f.field, out)


def bf_eval(f: BinaryForm, p):
    """Value of ``f`` at ``p``: a :class:`PointP1` (its canonical representative) or a raw pair."""
    if isinstance(p, PointP1):
        b0, b1 = p.b0, p.b1
    else:
        b0, b1 = (f.field(x) for x in p)
    d = f.degree
    total = f.field.zero
    for i, c in enumerate(f.coeffs):
        if c:
            total = total + c * b0 ** (d - i) * b1 ** i
    return total


# -- univariate helpers, coefficient lists low-to-high -------------------------


def _trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _divmod(a, b):
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = b[-1] ** -1
    q = [b[-1] * 0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = a[shift + i] - c * bi
        a = _trim(a)
    return _trim(q), a


def _monic(a):
    a = _trim(a)
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _ugcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _mulmod(a, b, m, zero):
    out = [zero] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return _divmod(out, m)[1]


def _powmod(base, e, m, one):
    zero = one * 0
    result = [one]
    base = _divmod(base, m)[1]
    while e:
        if e & 1:
            result = _mulmod(result, base, m, zero)
        base = _mulmod(base, base, m, zero)
        e >>= 1
    return result


def _univariate_roots(g, field):
    """Distinct roots in ``field`` of the univariate polynomial ``g`` (g[0] != 0)."""
    if len(g) <= 1:
        return []
    if field == QQ:
        return _rational_roots(g)
    p = field.p
    if p <= EXHAUSTIVE_ROOT_BOUND:
        return [t for t in field.elements() if _horner(g, t) == 0]
    return _cantor_zassenhaus_roots(g, field)


def _horner(g, t):
    acc = g[-1] * 0
    for c in reversed(g):
        acc = acc * t + c
    return acc


def _rational_roots(g):
    from fractions import Fraction
    from math import gcd, lcm

    den = 1
    for c in g:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in g]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    roots = []
    for num in divisors(abs(ints[0])):
        for q in divisors(abs(ints[-1])):
            if gcd(num, q) != 1:
                continue
            for t in (Fraction(num, q), Fraction(-num, q)):
                if _horner(g, t) == 0:
                    roots.append(t)
    return roots


def _cantor_zassenhaus_roots(g, field):
    one, zero = field.one, field.zero
    p = field.p
    g = _monic(g)
    t = [zero, one]
    tp = _powmod(t, p, g, one)
    diff = list(tp) + [zero] * max(0, 2 - len(tp))
    diff[1] = diff[1] - one
    h = _ugcd(g, diff)
    rng = random.Random(p)
    roots = []
    stack = [h]
    while stack:
        h = stack.pop()
        if len(h) <= 1:
            continue
        if len(h) == 2:
            roots.append(-h[0] / h[1])
            continue
        while True:
            a = field(rng.randrange(p))
            w = _powmod([a, one], (p - 1) // 2, h, one)
            w = list(w) + [zero] * max(0, 1 - len(w))
            w[0] = w[0] - one
            d = _ugcd(h, w)
            if 1 < len(d) < len(h):
                stack.append(d)
                stack.append(_monic(_divmod(h, d)[0]))
                break
    return roots


# ------------------------------------------------------------------------------


def _strip(f: BinaryForm):
    """Split ``f = y1**a * y0**b * h`` with h nonvanishing at [1:0] and [0:1]."""
    c = f.coeffs
    a = 0
    while not c[a]:
        a += 1
    b = 0
    while not c[len(c) - 1 - b]:
        b += 1
    return a, b, list(c[a : len(c) - b])


def bf_roots(f: BinaryForm):
    """Roots of ``f`` on P^1 over its coefficient field.

    Returns ``(roots, remainder)`` where ``roots`` is a list of
    ``(PointP1, multiplicity)`` and ``remainder`` is the factor of ``f`` with
    no root in the field, so that ``f`` equals the product of the linear
    factors (to their multiplicities) times ``remainder``.
    """
    if f.is_zero:
        raise ValueError("zero form has no root set")
    field = f.field
    a, b, h = _strip(f)
    roots = []
    if a:
        roots.append((PointP1(field, 1, 0), a))
    if b:
        roots.append((PointP1(field, 0, 1), b))
    # dehomogenize at y1 = 1: t = y0, so g[k] is the coefficient of y0^k
    g = list(reversed(h))
    for r in _univariate_roots(g, field):
        mult = 0
        while True:
            q, rem = _divmod(g, [-r, field.one])
            if rem:
                break
            g = q
            mult += 1
        roots.append((PointP1(field, r, 1), mult))
    remainder = BinaryForm._raw(field, list(reversed(g)))
    return roots, remainder


def bf_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Greatest common divisor, scaled so its first nonzero coefficient is 1."""
    if f.field != g.field:
        raise ValueError("binary forms over different fields")
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero forms is undefined")
    if g.is_zero:
        return f.normalized()
    if f.is_zero:
        return g.normalized()
    af, bf, hf = _strip(f)
    ag, bg, hg = _strip(g)
    u = _ugcd(list(reversed(hf)), list(reversed(hg)))
    zero = f.field.zero
    coeffs = [zero] * min(af, ag) + list(reversed(u)) + [zero] * min(bf, bg)
    return BinaryForm._raw(f.field, coeffs)


def coeff_matrix_rank(forms, degree: int | None = None) -> int:
    """Rank of the coefficient matrix of ``forms``; they span ``k[y0,y1]_d`` iff it is d+1."""
    from .linalg import ExactMatrix, rank

    forms = list(forms)
    if not forms:
        return 0
    if degree is None:
        degree = forms[0].degree
    for f in forms:
        if f.degree != degree:
            raise ValueError(f"form of degree {f.degree} in a family of degree {degree}")
    return rank(ExactMatrix(forms[0].field, [list(f.coeffs) for f in forms]))


def random_form(field, degree: int, rng, lo: int = -10, hi: int = 10) -> BinaryForm:
    return BinaryForm._raw(field, [field.random_element(rng, lo, hi) for _ in range(degree + 1)])
