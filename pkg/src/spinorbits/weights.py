"""Weight vectors for the classical types A/B/D, K-types, outer automorphisms.

A Weight is an ordered tuple of HalfInt coordinates together with an
ambient type ("A", "B" or "D") and rank.  Dominance is a predicate, not a
construction invariant: rho-shifted and reflected weights pass through the
same type.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .halfint import HalfInt, hi


class EtaOnUnequalRanks(ValueError):
    """eta swaps the two factors, so they must have equal rank."""


@dataclass(frozen=True, order=True)
class Weight:
    coords: tuple[HalfInt, ...]
    ambient: str = "D"  # "A" (gl), "B" (so(2n+1)) or "D" (so(2n))

    def __post_init__(self):
        if self.ambient not in ("A", "B", "D"):
            raise ValueError(f"unknown ambient type {self.ambient!r}")

    @staticmethod
    def make(vals: Iterable, ambient: str = "D") -> "Weight":
        return Weight(tuple(hi(v) for v in vals), ambient)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def doubled(self) -> tuple[int, ...]:
        return tuple(c.twice for c in self.coords)

    @staticmethod
    def from_doubled(tw: Iterable[int], ambient: str = "D") -> "Weight":
        return Weight(tuple(HalfInt(t) for t in tw), ambient)

    def coord_sum(self) -> HalfInt:
        return HalfInt(sum(c.twice for c in self.coords))

    def all_integral(self) -> bool:
        return all(c.is_integer() for c in self.coords)

    def all_strictly_half(self) -> bool:
        return all(not c.is_integer() for c in self.coords)

    def sup_doubled(self) -> int:
        """L-infinity norm of the doubled coordinates (enumeration bound)."""
        return max((abs(c.twice) for c in self.coords), default=0)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    @staticmethod
    def from_json(vals: Iterable[str], ambient: str = "D") -> "Weight":
        return Weight(tuple(HalfInt.parse(v) for v in vals), ambient)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def is_dominant(w: Weight) -> bool:
    """Chain of inequalities for the ambient type.

    A: c1 >= ... >= cn;  B: c1 >= ... >= cn >= 0;
    D: c1 >= ... >= c_{n-1} >= |c_n|.
    """
    c = w.coords
    n = len(c)
    if n == 0:
        return True
    for i in range(n - 2):
        if c[i] < c[i + 1]:
            return False
    if n >= 2 and w.ambient != "D" and c[n - 2] < c[n - 1]:
        return False
    if n >= 2 and w.ambient == "D" and c[n - 2] < abs(c[n - 1]):
        return False
    if w.ambient == "B" and c[n - 1] < hi(0):
        return False
    return True


def in_root_lattice_D(w: Weight) -> bool:
    """Integer coordinates with even sum (root lattice of D_n)."""
    return w.all_integral() and w.coord_sum().as_int() % 2 == 0


class Parity(enum.Enum):
    EVEN = "Even"
    ODD = "Odd"
    NON_INTEGRAL = "NonIntegral"


class OuterAut(enum.Enum):
    IDENTITY = "Identity"
    ZETA = "Zeta"
    ETA = "Eta"
    ZETA_ETA = "ZetaEta"

    def __mul__(self, other: "OuterAut") -> "OuterAut":
        # group law of (Z_2)^2 generated by zeta and eta
        z = (self in (OuterAut.ZETA, OuterAut.ZETA_ETA)) ^ (
            other in (OuterAut.ZETA, OuterAut.ZETA_ETA)
        )
        e = (self in (OuterAut.ETA, OuterAut.ZETA_ETA)) ^ (
            other in (OuterAut.ETA, OuterAut.ZETA_ETA)
        )
        return {
            (False, False): OuterAut.IDENTITY,
            (True, False): OuterAut.ZETA,
            (False, True): OuterAut.ETA,
            (True, True): OuterAut.ZETA_ETA,
        }[(z, e)]


@dataclass(frozen=True, order=True)
class KType:
    """Pair of highest weights for Spin(a,C) x Spin(b,C)."""

    left: Weight
    right: Weight

    @staticmethod
    def make(left, right, left_ambient="D", right_ambient="D") -> "KType":
        return KType(Weight.make(left, left_ambient), Weight.make(right, right_ambient))

    def is_dominant(self) -> bool:
        return is_dominant(self.left) and is_dominant(self.right)

    def genuine(self) -> bool:
        """Genuine iff the two factors lie in opposite integrality classes."""
        li, lh = self.left.all_integral(), self.left.all_strictly_half()
        ri, rh = self.right.all_integral(), self.right.all_strictly_half()
        return (li and rh) or (lh and ri)

    def sup_doubled(self) -> int:
        return max(self.left.sup_doubled(), self.right.sup_doubled())

    def coord_sum(self) -> HalfInt:
        return self.left.coord_sum() + self.right.coord_sum()

    def to_json(self) -> dict:
        return {"left": self.left.to_json(), "right": self.right.to_json()}

    def __str__(self) -> str:
        ls = ",".join(str(c) for c in self.left.coords)
        rs = ",".join(str(c) for c in self.right.coords)
        return f"({ls} | {rs})"


def parity_class(kt: KType) -> Parity:
    """Parity of the total coordinate sum over both factors.

    NonIntegral when the sum is not an integer.  (Half-integral total sums
    are classified by their root lattice coset instead; see
    spectra.sum_parity for the convention used by the spectra formulas.)
    """
    s = kt.coord_sum()
    if not s.is_integer():
        return Parity.NON_INTEGRAL
    return Parity.EVEN if s.as_int() % 2 == 0 else Parity.ODD


def apply_outer_weight(aut: OuterAut, kt: KType) -> KType:
    """zeta negates the last coordinate of each factor, eta swaps factors."""
    if aut is OuterAut.IDENTITY:
        return kt
    if aut is OuterAut.ZETA_ETA:
        return apply_outer_weight(OuterAut.ETA, apply_outer_weight(OuterAut.ZETA, kt))
    if aut is OuterAut.ZETA:
        def flip(w: Weight) -> Weight:
            if w.rank == 0:
                return w
            c = list(w.coords)
            c[-1] = -c[-1]
            return Weight(tuple(c), w.ambient)
        return KType(flip(kt.left), flip(kt.right))
    # eta
    if kt.left.rank != kt.right.rank:
        raise EtaOnUnequalRanks(
            f"eta needs equal factor ranks, got {kt.left.rank} and {kt.right.rank}"
        )
    return KType(kt.right, kt.left)


def dual_weight(w: Weight) -> Weight:
    """Highest weight of the dual representation.

    Negate and sort back into the dominant chamber; for type D the last
    coordinate keeps its sign when the rank is odd (-w0 acts by the flip).
    """
    if w.ambient == "A":
        return Weight(tuple(sorted((-c for c in w.coords), reverse=True)), "A")
    if w.ambient == "B":
        return Weight(tuple(sorted((abs(c) for c in w.coords), reverse=True)), "B")
    mags = sorted((abs(c) for c in w.coords), reverse=True)
    # dominant representative of the W(D)-orbit of -w: sign flips come in
    # pairs, so the parity of negative entries of -w survives unless a
    # coordinate vanishes
    zero = hi(0)
    neg_of_minus = sum(1 for c in w.coords if c > zero)
    if neg_of_minus % 2 == 1 and w.rank >= 1 and mags[-1] != zero:
        mags[-1] = -mags[-1]
    return Weight(tuple(mags), "D")
