"""Lens-space representation classes and their mod-8 index data.

A nontrivial SO(3) representation of Z/p (p odd) is the adjoint of
exp(2*pi*i*ell/p) for a unique ell in 1 .. (p-1)/2; ell and p - ell are
conjugate.  The index of the odd-dimensional ASD operator between such a
representation and the trivial one, plus one, is a lattice count

    2*N1(k1, k2) + N2(k1, k2)  (mod 8)

over the congruence line i + q*j = 0 (mod p) intersected with the rectangle
|i| <= k1, |j| <= k2, where k1 = ell and k2 = -r*ell mod p with q*r = 1
(mod p).  N1 counts interior points, N2 boundary points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List

from .arith import mod_inverse
from .errors import OddSignatureError


@dataclass(frozen=True)
class LensRep:
    """Representation class on L(p, q): p odd > 1, q normalized into (0, p)."""

    p: int
    q: int
    ell: int

    def __post_init__(self):
        if self.p <= 1 or self.p % 2 == 0:
            raise ValueError(f"p must be odd and > 1, got {self.p}")
        q = self.q % self.p
        if q == 0 or math.gcd(self.p, q) != 1:
            raise ValueError(f"q = {self.q} is not invertible mod {self.p}")
        object.__setattr__(self, "q", q)
        if not 1 <= self.ell <= (self.p - 1) // 2:
            raise ValueError(f"ell = {self.ell} outside 1 .. (p-1)/2 for p = {self.p}")


@dataclass(frozen=True)
class LatticeCounts:
    """Window sizes and interior/boundary point counts on the congruence line."""

    k1: int
    k2: int
    n1: int
    n2: int


def lens_reps(p: int, q: int) -> List[LensRep]:
    """All nontrivial representation classes of L(p, q), one per ell."""
    return [LensRep(p, q, ell) for ell in range(1, (p - 1) // 2 + 1)]


def lattice_counts(rep: LensRep) -> LatticeCounts:
    """Count congruence-line points in and on the rectangle |i| <= k1, |j| <= k2.

    The enumeration runs over the full j-range of the rectangle; since
    k1 <= (p-1)/2, each j admits at most one i with |i| <= k1 in its
    congruence class, namely the symmetric representative of -q*j mod p.
    """
    p, q, ell = rep.p, rep.q, rep.ell
    r = mod_inverse(q, p)
    k1 = ell
    k2 = (-r * ell) % p
    half = (p - 1) // 2
    n1 = n2 = 0
    for j in range(-k2, k2 + 1):
        i = (-q * j) % p
        if i > half:
            i -= p
        ai, aj = abs(i), abs(j)
        if ai < k1 and aj < k2:
            n1 += 1
        elif (ai == k1 and aj < k2) or (ai < k1 and aj == k2):
            n2 += 1
    return LatticeCounts(k1=k1, k2=k2, n1=n1, n2=n2)


def index_plus_one(rep: LensRep) -> int:
    """ASD index of (rep, trivial) plus one, as an even residue mod 8."""
    counts = lattice_counts(rep)
    total = 2 * counts.n1 + counts.n2
    if total % 2:
        raise ArithmeticError(f"odd index datum {total} for {rep}")
    return total % 8


def morse_bott_index(rep: LensRep, sign_k: int) -> int:
    """Mod-4 Morse-Bott index of the circle attached to rep.

    Half of the mod-8 index datum, shifted by the (even) knot signature.
    """
    if sign_k % 2:
        raise OddSignatureError(f"knot signature must be even, got {sign_k}")
    counts = lattice_counts(rep)
    total = 2 * counts.n1 + counts.n2
    return (total // 2 + sign_k) % 4
