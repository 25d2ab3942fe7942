"""Exact half-integer arithmetic.

Every quantity in this package that could be a half-integer (weight
coordinates, character powers, chain shifts) is a HalfInt.  A HalfInt
stores twice its value as a plain python int, so all arithmetic is exact
and there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class HalfInt:
    """An element of (1/2)Z, stored as the doubled integer value."""

    twice: int

    # -- constructors ------------------------------------------------

    @staticmethod
    def of(n: int) -> "HalfInt":
        return HalfInt(2 * n)

    @staticmethod
    def half(n: int) -> "HalfInt":
        """n/2 for an integer n."""
        return HalfInt(n)

    @staticmethod
    def parse(s: str) -> "HalfInt":
        """Parse "n", "-n", "m/2" or "-m/2"."""
        s = s.strip()
        if s.endswith("/2"):
            return HalfInt(int(s[:-2]))
        return HalfInt(2 * int(s))

    # -- queries -----------------------------------------------------

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_int(self) -> int:
        if self.twice % 2 != 0:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def sign(self) -> int:
        return (self.twice > 0) - (self.twice < 0)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + other.twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - other.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def scale(self, n: int) -> "HalfInt":
        return HalfInt(n * self.twice)

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


ZERO = HalfInt(0)
HALF = HalfInt(1)
ONE = HalfInt(2)


def hi(x) -> HalfInt:
    """Coerce an int, Fraction-with-denominator-(1|2), string or HalfInt."""
    if isinstance(x, HalfInt):
        return x
    if isinstance(x, int):
        return HalfInt.of(x)
    if isinstance(x, str):
        return HalfInt.parse(x)
    if isinstance(x, Fraction):
        if x.denominator not in (1, 2):
            raise ValueError(f"{x} is not a half-integer")
        return HalfInt(int(2 * x))
    raise TypeError(f"cannot coerce {x!r} to HalfInt")
