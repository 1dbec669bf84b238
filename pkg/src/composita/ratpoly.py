"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored constant term first and trailing zeros are
stripped, so the zero polynomial has an empty coefficient tuple and
``degree == -1``.  Everything is a pure function of immutable values; no
floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class RatPoly:
    """An immutable polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "RatPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "RatPoly":
        return cls((0,) * degree + (c,))

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "RatPoly") -> "RatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self[i] - other[i] for i in range(n))

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        if self.is_zero() or other.is_zero():
            return RatPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    def scale(self, c) -> "RatPoly":
        c = _coerce(c)
        return RatPoly(a * c for a in self.coeffs)

    def __divmod__(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return RatPoly.zero(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPoly(quot), RatPoly(rem[: other.degree if other.degree > 0 else 0])

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[1]

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative power")
        out, base = RatPoly.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.coeffs[-1])

    def derivative(self) -> "RatPoly":
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def eval(self, x) -> Fraction:
        acc = Fraction(0)
        x = _coerce(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "RatPoly") -> "RatPoly":
        acc = RatPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * other + RatPoly.constant(c)
        return acc

    def compose_mod(self, other: "RatPoly", modulus: "RatPoly") -> "RatPoly":
        acc = RatPoly.zero()
        for c in reversed(self.coeffs):
            acc = (acc * other + RatPoly.constant(c)) % modulus
        return acc

    # -- integer views ------------------------------------------------------------

    def clear_denominators(self) -> tuple[int, list[int]]:
        """Return (d, ints) with d > 0 minimal and d * self having integer
        coefficients ``ints``."""
        if self.is_zero():
            return 1, []
        d = lcm(*[c.denominator for c in self.coeffs])
        return d, [int(c * d) for c in self.coeffs]

    def int_coeffs(self) -> list[int]:
        d, ints = self.clear_denominators()
        if d != 1:
            raise ValueError("polynomial has non-integer coefficients")
        return ints

    @classmethod
    def from_int_coeffs(cls, ints: Sequence[int]) -> "RatPoly":
        return cls(ints)

    # -- presentation -----------------------------------------------------------

    def to_json(self) -> list:
        """Exact coefficient array, constant term first; non-integers as
        'p/q' strings."""
        out = []
        for c in self.coeffs:
            out.append(int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
        return out

    @classmethod
    def from_json(cls, data: Sequence) -> "RatPoly":
        return cls(data)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                term = xpow if mag == 1 else f"{mag}*{xpow}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"RatPoly({[str(c) for c in self.coeffs]})"


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic greatest common divisor over the rationals."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_gcdex(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """Extended Euclid: (g, s, t) with g monic, s*a + t*b == g."""
    r0, r1 = a, b
    s0, s1 = RatPoly.one(), RatPoly.zero()
    t0, t1 = RatPoly.zero(), RatPoly.one()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.leading()
    return r0.monic(), s0.scale(1 / lead), t0.scale(1 / lead)


def int_content(ints: Sequence[int]) -> int:
    """Positive gcd of integer coefficients (0 for the zero polynomial)."""
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return g


def int_primitive(ints: Sequence[int]) -> tuple[int, list[int]]:
    """(content with sign of the leading coefficient, primitive part)."""
    ints = list(ints)
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return 0, []
    g = int_content(ints)
    if ints[-1] < 0:
        g = -g
    return g, [c // g for c in ints]
