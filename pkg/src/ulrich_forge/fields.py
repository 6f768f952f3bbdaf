"""Exact coefficient fields: the rationals and prime fields F_p.

Every coefficient in the system is either a ``fractions.Fraction`` (over Q)
or a Python int in ``[0, p)`` (over F_p).  No floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction


class RationalField:
    """The rational numbers, backed by fractions.Fraction."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a) -> bool:
        return a == 0

    def split_sign(self, a):
        """(sign, magnitude) used by the printer; sign is +1 or -1."""
        return (-1, -a) if a < 0 else (1, a)

    def coeff_str(self, a) -> str:
        return str(a)

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """F_p for a prime p; elements are ints in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    @property
    def name(self) -> str:
        return f"F_{self.p}"

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def split_sign(self, a):
        return (1, a)

    def coeff_str(self, a) -> str:
        return str(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


def field_from_name(spec: str):
    """Parse a field spec: "q" for the rationals, "fp:P" for F_P."""
    s = spec.strip().lower()
    if s in ("q", "qq"):
        return QQ
    if s.startswith("fp:"):
        return PrimeField(int(s[3:]))
    raise ValueError(f"unknown field spec {spec!r} (expected q or fp:P)")
