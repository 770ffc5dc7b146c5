"""Representation classes of Seifert-fibered double branched covers.

The fundamental group of the Seifert space with unnormalized pairs
(a_1, b_1), ..., (a_n, b_n) is

    < x_1, ..., x_n, h | h central, x_i^(a_i) = h^(-b_i), x_1 ... x_n = 1 >.

An irreducible SU(2) representation sends h to a central sign (-1)^m and
each x_i to a rotation by angle pi * ell_i / a_i, subject to the parity
constraint ell_i = m * b_i (mod 2) forced by the torsion relation, and to
the strict spherical triangle condition on the three angles, which is
exactly the existence-and-rigidity criterion for an irreducible triple
with prescribed conjugacy classes.  Twisting a relator by a sign flips the
corresponding parity and enumerates projective classes instead.

All angle comparisons are exact rational comparisons of ell_i / a_i.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .arith import mod_inverse, smith_normal_form
from .covers import SeifertData, seifert_h1_order
from .errors import (
    BadTwistMaskError,
    EvenOrderError,
    FlatCobordismError,
    InfiniteH1Error,
    NotCoprimeError,
    NotHomologyS1xS2Error,
    UnsupportedFiberCountError,
)

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible-nontrivial"
TRIVIAL = "trivial"


@dataclass(frozen=True)
class RotationRep:
    """A representation class recorded by central sign and rotation numbers."""

    m: int
    ells: Tuple[int, ...]
    kind: str = IRREDUCIBLE


@dataclass(frozen=True)
class TwistMask:
    """Signs +-1, one per torsion relator x_i^(a_i) = sign * h^(-b_i)."""

    signs: Tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"twist signs must be +-1, got {self.signs}")


def absorb_trivial_fibers(s: SeifertData) -> SeifertData:
    """Fold every (1, b) pair into an exceptional fiber, preserving the manifold.

    Moving b from a (1, b) pair onto (a, c) yields (a, c + a*b); a bare
    (1, 0) pair is then dropped.  With no exceptional fiber at all the sum
    is kept as a single (1, b) pair.
    """
    shift = sum(b for a, b in s.pairs if a == 1)
    rest = [(a, b) for a, b in s.pairs if a > 1]
    if not rest:
        return SeifertData(((1, shift),))
    a0, b0 = rest[0]
    rest[0] = (a0, b0 + a0 * shift)
    return SeifertData(tuple(rest))


def _exceptional_triple(s: SeifertData) -> SeifertData:
    reduced = absorb_trivial_fibers(s)
    if len(reduced.pairs) != 3 or any(a == 1 for a, _ in reduced.pairs):
        raise UnsupportedFiberCountError(
            f"need exactly 3 exceptional fibers, got {reduced.pairs}"
        )
    return reduced


def _triangle_strict(f1: Fraction, f2: Fraction, f3: Fraction) -> bool:
    """Strict spherical triangle condition on angles pi*f1, pi*f2, pi*f3."""
    return abs(f1 - f2) < f3 < min(f1 + f2, 2 - f1 - f2)


def _rotation_sweep(pairs, m: int, parity_shift: Sequence[int]) -> List[Tuple[int, ...]]:
    """Rotation-number tuples for central sign (-1)^m and given relator parities."""
    ranges = []
    for (a, b), t in zip(pairs, parity_shift):
        want = (m * b + t) % 2
        ranges.append([ell for ell in range(1, a) if ell % 2 == want])
    out = []
    for ells in itertools.product(*ranges):
        fractions = [Fraction(ell, a) for ell, (a, _) in zip(ells, pairs)]
        if _triangle_strict(*fractions):
            out.append(ells)
    return out


def enumerate_irreducibles(s: SeifertData) -> List[RotationRep]:
    """Conjugacy classes of irreducible SU(2) representations, for 3 fibers.

    Sweeps both central signs; the fiberwise parity constraint prunes each
    branch.  For covers of knots (odd |H1|) these classes coincide with the
    irreducible SO(3) classes with trivial w2.
    """
    reduced = _exceptional_triple(s)
    reps = []
    for m in (0, 1):
        for ells in _rotation_sweep(reduced.pairs, m, (0, 0, 0)):
            reps.append(RotationRep(m=m, ells=ells, kind=IRREDUCIBLE))
    return reps


def casson(p: int, q: int, r: int) -> int:
    """Casson invariant of the Brieskorn sphere with the given multiplicities.

    Builds Seifert data with Euler number -1/(p*q*r) and counts irreducible
    classes; the invariant is minus half the count.  Inputs must be
    pairwise coprime positive integers.
    """
    values = (p, q, r)
    if any(v < 1 for v in values):
        raise ValueError(f"multiplicities must be positive, got {values}")
    for x, y in itertools.combinations(values, 2):
        if math.gcd(x, y) != 1:
            raise NotCoprimeError(f"{x} and {y} are not coprime")
    if min(values) == 1:
        # a trivial multiplicity makes the sphere a union of at most two
        # fibered solid tori, i.e. S^3 or a lens space: no irreducibles
        return 0
    data = brieskorn_seifert_data(p, q, r)
    count = len(enumerate_irreducibles(data))
    assert count % 2 == 0
    return -count // 2


def brieskorn_seifert_data(p: int, q: int, r: int) -> SeifertData:
    """Seifert pairs for the Brieskorn sphere: e = -1/(p*q*r)."""
    qr, pr, pq = q * r, p * r, p * q
    b1 = (-mod_inverse(qr % p, p)) % p if p > 1 else 0
    b2 = (-mod_inverse(pr % q, q)) % q if q > 1 else 0
    rem = -1 - b1 * qr - b2 * pr
    assert rem % pq == 0
    return SeifertData(((p, b1), (q, b2), (r, rem // pq)))


def _h1_presentation(pairs) -> List[List[int]]:
    """Relation matrix on generators (x_1, ..., x_n, h)."""
    n = len(pairs)
    rows = []
    for i, (a, b) in enumerate(pairs):
        row = [0] * (n + 1)
        row[i] = a
        row[n] = b
        rows.append(row)
    rows.append([1] * n + [0])
    return rows


@dataclass(frozen=True)
class ReducibleClass:
    """A nontrivial character class with its induced per-fiber rotation numbers."""

    ells: Tuple[int, ...]
    values: Tuple[Fraction, ...]


def reducible_characters(s: SeifertData) -> List[ReducibleClass]:
    """Nontrivial characters of H1 into SO(2), up to inversion.

    Characters are computed from the Smith normal form of the relation
    matrix.  The induced rotation number on fiber i is the folded numerator
    of the character value on x_i, a representation of Z/a_i.
    """
    reduced = absorb_trivial_fibers(s)
    pairs = reduced.pairs
    order = seifert_h1_order(reduced)
    if order == 0:
        raise InfiniteH1Error("first homology is infinite")
    if order % 2 == 0:
        raise EvenOrderError(f"|H1| = {order} is even")

    n = len(pairs)
    _, d, v = smith_normal_form(_h1_presentation(pairs))
    diag = [d[j][j] for j in range(n + 1)]
    assert math.prod(diag) == order
    if any(v[n][j] % diag[j] for j in range(n + 1)):
        raise FlatCobordismError(
            "central fiber class survives in H1; characters do not extend flatly"
        )

    seen: Dict[Tuple[Fraction, ...], None] = {}
    classes: List[ReducibleClass] = []
    for combo in itertools.product(*(range(dj) for dj in diag)):
        if not any(combo):
            continue
        values = []
        for i in range(n + 1):
            val = sum(
                Fraction(v[i][j] * combo[j], diag[j]) for j in range(n + 1)
            )
            values.append(val - math.floor(val))
        values = tuple(values)
        assert values[n] == 0
        inverse = tuple((-w) % 1 if w else Fraction(0) for w in values)
        key = min(values, inverse)
        if key in seen:
            continue
        seen[key] = None
        ells = []
        for (a, _), w in zip(pairs, values[:n]):
            scaled = w * a
            assert scaled.denominator == 1
            k = int(scaled) % a
            ells.append(min(k, a - k))
        classes.append(ReducibleClass(ells=tuple(ells), values=values[:n]))
    assert len(classes) == (order - 1) // 2
    return classes


def enumerate_reducibles(s: SeifertData) -> int:
    """Number of nontrivial reducible SO(3) classes: (|H1| - 1) / 2."""
    order = seifert_h1_order(s)
    if order == 0:
        raise InfiniteH1Error("first homology is infinite")
    if order % 2 == 0:
        raise EvenOrderError(f"|H1| = {order} is even")
    return (order - 1) // 2


def _mod2_solutions(pairs, target: Sequence[int]) -> List[Tuple[int, ...]]:
    """Sign characters chi on (x_1, .., x_n, h) with a_i*chi_i + b_i*chi_h = t_i
    and sum chi_i = 0, all mod 2."""
    n = len(pairs)
    sols = []
    for bits in itertools.product((0, 1), repeat=n + 1):
        chi_h = bits[n]
        if any(
            (a * bits[i] + b * chi_h - t) % 2
            for i, ((a, b), t) in enumerate(zip(pairs, target))
        ):
            continue
        if sum(bits[:n]) % 2:
            continue
        sols.append(bits)
    return sols


def projective_su2_classes(
    s: SeifertData, twist: TwistMask
) -> List[Tuple[int, Tuple[int, ...]]]:
    """SU(2) classes of sign-twisted representations, as (m, rotation numbers).

    The twisted relators read x_i^(a_i) = t_i * h^(-b_i); the twist must
    have exactly one -1 and must represent the nontrivial w2 class, that
    is, it must not be the coboundary of a sign character.
    """
    reduced = _exceptional_triple(s)
    pairs = reduced.pairs
    if len(twist.signs) != len(s.pairs):
        raise BadTwistMaskError(
            f"twist has {len(twist.signs)} signs for {len(s.pairs)} fibers"
        )
    if any(t == -1 and a == 1 for (a, _), t in zip(s.pairs, twist.signs)):
        raise BadTwistMaskError("cannot twist a trivial (1, b) fiber")
    kept = tuple(t for (a, _), t in zip(s.pairs, twist.signs) if a > 1)
    if sum(1 for t in kept if t == -1) != 1:
        raise BadTwistMaskError(f"twist must contain exactly one -1, got {twist.signs}")
    if seifert_h1_order(reduced) != 0:
        raise NotHomologyS1xS2Error(
            f"|H1| = {seifert_h1_order(reduced)}, expected a homology S^1 x S^2"
        )
    shifts = tuple(1 if t == -1 else 0 for t in kept)
    if _mod2_solutions(pairs, shifts):
        raise BadTwistMaskError("twist mask is a coboundary; it represents w2 = 0")

    classes = []
    for m in (0, 1):
        for ells in _rotation_sweep(pairs, m, shifts):
            classes.append((m, ells))
    return classes


def enumerate_projective(s: SeifertData, twist: TwistMask) -> List[RotationRep]:
    """SO(3) classes with nontrivial w2, one per orbit of the free sign action.

    The nontrivial character of H1(.; Z/2) acts on SU(2) classes by
    ell_i -> a_i - ell_i on the fibers it hits (and flips the central sign
    when it is nonzero on h); orbits have size two.
    """
    su2 = projective_su2_classes(s, twist)
    pairs = _exceptional_triple(s).pairs
    characters = [chi for chi in _mod2_solutions(pairs, (0, 0, 0)) if any(chi)]
    if len(characters) != 1:
        raise NotHomologyS1xS2Error(
            "H1(.; Z/2) is not Z/2; not a two-component link cover"
        )
    chi = characters[0]
    n = len(pairs)

    def partner(cls):
        m, ells = cls
        flipped = tuple(
            pairs[i][0] - ell if chi[i] else ell for i, ell in enumerate(ells)
        )
        return ((m + chi[n]) % 2, flipped)

    remaining = set(su2)
    orbits = []
    while remaining:
        cls = min(remaining)
        other = partner(cls)
        if other == cls or other not in remaining:
            raise ArithmeticError(f"sign action is not free at {cls}")
        remaining.remove(cls)
        remaining.discard(other)
        orbits.append(RotationRep(m=cls[0], ells=cls[1], kind=IRREDUCIBLE))
    return sorted(orbits, key=lambda rep: (rep.m, rep.ells))


def canonical_twist(s: SeifertData) -> TwistMask:
    """Deterministic valid twist mask: the largest fiber that carries w2.

    Fibers are tried in decreasing order of multiplicity; the first single
    twist that is not a coboundary wins.
    """
    order = sorted(
        (i for i, (a, _) in enumerate(s.pairs) if a > 1),
        key=lambda i: (-s.pairs[i][0], i),
    )
    reduced = _exceptional_triple(s)
    for i in order:
        signs = tuple(-1 if j == i else 1 for j in range(len(s.pairs)))
        kept = tuple(t for (a, _), t in zip(s.pairs, signs) if a > 1)
        shifts = tuple(1 if t == -1 else 0 for t in kept)
        if not _mod2_solutions(reduced.pairs, shifts):
            return TwistMask(signs)
    raise BadTwistMaskError("no single-fiber twist represents the nontrivial w2")
