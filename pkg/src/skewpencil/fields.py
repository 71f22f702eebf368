"""Exact scalar fields: the rationals and prime fields F_p.

Every other module is generic over a field object exposing ``zero``, ``one``,
``__call__`` (embedding of integers / strings), ``parse`` / ``format`` for
serialization and ``random_element`` for seeded sampling.  Rationals are
:class:`fractions.Fraction`; prime-field elements are :class:`FpElement`.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import isprime

__all__ = [
    "FpElement",
    "PrimeField",
    "QQ",
    "RationalField",
    "field_from_spec",
    "fp_embed",
    "rat_normalize",
]


def rat_normalize(num: int, den: int) -> Fraction:
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(int(num), int(den))


class FpElement:
    """An element of the prime field Z/pZ, stored as a canonical residue."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> FpElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FpElement(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o, self.p) * self.inverse()

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpElement(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.value == o

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return f"{self.value} mod {self.p}"

    def __repr__(self):
        return f"FpElement({self.value}, {self.p})"


def fp_embed(x: int, p: int) -> FpElement:
    if not isprime(p):
        raise ValueError(f"modulus {p} is not prime")
    return FpElement(x, p)


class RationalField:
    """The field Q of rational numbers (exact, arbitrary precision)."""

    name = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, FpElement):
            raise TypeError("cannot embed an F_p element into Q")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def parse(self, s: str) -> Fraction:
        s = s.strip().replace("−", "-")
        if "/" in s:
            num, den = s.split("/")
            return rat_normalize(int(num), int(den))
        return Fraction(int(s))

    def format(self, x: Fraction) -> str:
        return str(x)

    def random_element(self, rng, lo: int = -10, hi: int = 10) -> Fraction:
        return Fraction(rng.randint(lo, hi))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """The prime field F_p."""

    characteristic: int

    def __init__(self, p: int):
        p = int(p)
        if not isprime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    @property
    def name(self) -> str:
        return f"Fp:{self.p}"

    def __call__(self, x) -> FpElement:
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{x.p}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return FpElement(x.numerator, self.p) / FpElement(x.denominator, self.p)
        return FpElement(int(x), self.p)

    def parse(self, s: str) -> FpElement:
        s = s.strip().replace("−", "-")
        if "mod" in s:
            v, p = s.split("mod")
            if int(p) != self.p:
                raise ValueError(f"element {s!r} is not in F_{self.p}")
            return FpElement(int(v), self.p)
        return self(Fraction(s))

    def format(self, x: FpElement) -> str:
        return str(x)

    def random_element(self, rng, lo: int | None = None, hi: int | None = None) -> FpElement:
        if lo is None:
            return FpElement(rng.randrange(self.p), self.p)
        return FpElement(rng.randint(lo, hi), self.p)

    def elements(self):
        return (FpElement(v, self.p) for v in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def field_from_spec(spec: str):
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    spec = spec.strip()
    if spec in ("Q", "QQ"):
        return QQ
    if spec.startswith("Fp:"):
        return PrimeField(int(spec[3:]))
    raise ValueError(f"unknown field {spec!r} (expected 'Q' or 'Fp:<p>')")


def field_of(x):
    """The field an exact scalar belongs to."""
    if isinstance(x, FpElement):
        return PrimeField(x.p)
    return QQ
