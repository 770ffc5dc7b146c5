"""Homological data of double branched covers.

Betti number and torsion order from the Alexander polynomial at -1, the
mod-2 cup form and grading-shift parity from the linking number, and the
first-homology order of Seifert-fibered covers from unnormalized Seifert
pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .arith import LaurentPoly


@dataclass(frozen=True)
class SeifertData:
    """Unnormalized Seifert pairs (a_i, b_i) with a_i >= 1 and gcd(a_i, b_i) = 1."""

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("SeifertData needs at least one pair")
        normalized = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", normalized)
        for a, b in normalized:
            if a < 1:
                raise ValueError(f"fiber multiplicity must be >= 1, got {a}")
            if math.gcd(a, b) != 1:
                raise ValueError(f"pair ({a}, {b}) is not coprime")

    @classmethod
    def of(cls, *pairs: Tuple[int, int] | Iterable[int]) -> "SeifertData":
        return cls(tuple((a, b) for a, b in pairs))

    def euler_number(self) -> Fraction:
        return sum((Fraction(b, a) for a, b in self.pairs), Fraction(0))


@dataclass(frozen=True)
class CoverHomology:
    """b1 and |H1| of a double branched cover; h1_order None means infinite."""

    b1: int
    h1_order: Optional[int]
    cup_form_entry: Optional[int] = None

    def __post_init__(self):
        if (self.b1 == 1) != (self.h1_order is None):
            raise ValueError("b1 = 1 exactly when the order marker is infinite")
        if self.cup_form_entry not in (None, 0, 1):
            raise ValueError("cup form entry must be 0 or 1")


def branched_cover_h1(delta: LaurentPoly) -> CoverHomology:
    """Betti number and torsion of the double cover from the branch set's Alexander polynomial.

    The cover has b1 = 1 when delta(-1) = 0 and otherwise has finite first
    homology of order |delta(-1)| (the determinant of the branch set).
    """
    value = delta(-1)
    if value == 0:
        return CoverHomology(b1=1, h1_order=None)
    return CoverHomology(b1=0, h1_order=abs(int(value)))


def cup_form(lk: int) -> int:
    """Value of the H^1 x H^1 -> H^2 mod-2 pairing on generators: lk mod 2."""
    return lk % 2


def grading_shift_delta(lk: int) -> int:
    """Parity delta of the mod-4 grading shift 2*delta: 0 for odd lk, 1 for even."""
    return 0 if lk % 2 else 1


def seifert_h1_order(s: SeifertData) -> int:
    """|H1| of the Seifert-fibered space with the given pairs; 0 encodes b1 > 0.

    Equals |e * a_1 * ... * a_n| with e = sum(b_i / a_i).  A zero Euler
    number means the space is a homology S^1 x S^2.
    """
    total = s.euler_number()
    for a, _ in s.pairs:
        total *= a
    assert total.denominator == 1
    return abs(int(total))
