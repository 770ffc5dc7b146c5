"""Assembly of the chain data: graded generator multisets and rank vectors.

Multiplicity rules are fixed by the orbit structure of the generators: the
trivial class contributes the single special generator, graded by the knot
signature mod 4; every nontrivial reducible class contributes a circle
that perturbs into two generators at consecutive gradings mu, mu + 1; and
every irreducible class contributes two circles, hence four generators,
two at mu and two at mu + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .arith import LaurentPoly, mod_inverse, second_derivative_at_one
from .covers import SeifertData, seifert_h1_order
from .errors import (
    FlatCobordismError,
    InconsistentLkError,
    NonIntegralAError,
    NotCoprimeError,
    NotHomologyS1xS2Error,
    UnsupportedFiberCountError,
)
from .lens import LensRep, lens_reps, index_plus_one
from .seifert import (
    absorb_trivial_fibers,
    canonical_twist,
    casson,
    enumerate_irreducibles,
    enumerate_projective,
    projective_su2_classes,
    reducible_characters,
)
from .signatures import two_bridge_signature, torus_signature

ABSOLUTE = "absolute"
CYCLIC = "cyclic"

SPECIAL = "special"
REDUCIBLE = "reducible"
IRREDUCIBLE = "irreducible"


@dataclass(frozen=True)
class ChainRanks:
    """Rank 4-vector in grading order 0, 1, 2, 3 with its anchoring mode."""

    r: Tuple[int, int, int, int]
    anchoring: str = ABSOLUTE
    conjectural: bool = False

    def __post_init__(self):
        if len(self.r) != 4 or any(x < 0 for x in self.r):
            raise ValueError(f"ranks must be four non-negative integers, got {self.r}")
        if self.anchoring not in (ABSOLUTE, CYCLIC):
            raise ValueError(f"unknown anchoring {self.anchoring!r}")

    @property
    def total(self) -> int:
        return sum(self.r)


@dataclass(frozen=True)
class EulerCharacteristic:
    value: int
    up_to_sign: bool


@dataclass(frozen=True)
class GeneratorEntry:
    """A block of generators at one grading; grading None means unknown."""

    grading: Optional[int]
    multiplicity: int
    origin: str
    class_id: Optional[int] = None


@dataclass(frozen=True)
class GradedGenerators:
    """Multiset of generator blocks, possibly with unknown gradings."""

    entries: Tuple[GeneratorEntry, ...]
    warnings: Tuple[str, ...] = ()

    @property
    def total(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    @property
    def unknown(self) -> int:
        return sum(e.multiplicity for e in self.entries if e.grading is None)

    def ranks(self) -> Optional[ChainRanks]:
        """Rank vector when every grading is known, else None."""
        if self.unknown:
            return None
        vec = [0, 0, 0, 0]
        for e in self.entries:
            vec[e.grading % 4] += e.multiplicity
        return ChainRanks(tuple(vec), ABSOLUTE)


def euler_characteristic(c: ChainRanks) -> EulerCharacteristic:
    """Alternating sum of the ranks; defined only up to sign for cyclic anchoring."""
    r = c.r
    return EulerCharacteristic(
        value=r[0] - r[1] + r[2] - r[3],
        up_to_sign=c.anchoring == CYCLIC,
    )


def _canonical_rotation(vec: Sequence[int]) -> Tuple[int, int, int, int]:
    rotations = [tuple(vec[i:]) + tuple(vec[:i]) for i in range(4)]
    return min(rotations)


def two_bridge_generators(p: int, q: int) -> GradedGenerators:
    """Generator blocks of the two-bridge chain complex for the pair (p, q).

    The special generator sits at the signature mod 4.  Each ell labels a
    circle on the lens-space cover; its Morse-Bott index comes from the
    mod-8 lattice-count datum of L(p, q') with q' the inverse of q, the
    parameterization pinned by the figure-eight vector (ell 1 -> 2,
    ell 2 -> 4).
    """
    if p == 1:
        return GradedGenerators((GeneratorEntry(0, 1, SPECIAL),))
    sign = two_bridge_signature(p, q)
    entries = [GeneratorEntry(sign % 4, 1, SPECIAL)]
    q_param = mod_inverse(q % p, p)
    for rep in lens_reps(p, q_param):
        mu = (index_plus_one(rep) // 2 + sign) % 4
        entries.append(GeneratorEntry(mu, 1, REDUCIBLE, rep.ell))
        entries.append(GeneratorEntry((mu + 1) % 4, 1, REDUCIBLE, rep.ell))
    return GradedGenerators(tuple(entries))


def two_bridge_complex(p: int, q: int) -> ChainRanks:
    """Chain ranks of the two-bridge complex; total rank p, Euler number +1."""
    ranks = two_bridge_generators(p, q).ranks()
    assert ranks is not None
    return ranks


def special_montesinos_complex(p: int, q: int, r: int) -> ChainRanks:
    """Chain ranks (1 + b, b, b, b) for a Montesinos knot over a Brieskorn sphere.

    b is minus twice the Casson invariant; the special generator sits in
    degree zero because these knots have signature divisible by 8.
    """
    b = -2 * casson(p, q, r)
    return ChainRanks((1 + b, b, b, b), ABSOLUTE)


def montesinos_knot_complex(
    s: SeifertData,
    sign_k: int,
    irreducible_block: Optional[Sequence[int]] = None,
) -> GradedGenerators:
    """Generator blocks for a Montesinos knot with three exceptional fibers.

    Requires the flat-cobordism divisibility condition
    a_1 * a_2 * a_3 = lcm(a_1, a_2, a_3) * |H1|.  Reducible classes are
    graded through the per-fiber lens indices whenever every fiber they
    touch has odd multiplicity, and are left unknown otherwise.
    Irreducible classes are graded by the given block 4-vector if one is
    supplied, by the pairing argument when the cover is a homology sphere,
    and are otherwise left unknown.
    """
    if sign_k % 2:
        raise ValueError(f"knot signatures are even, got {sign_k}")
    reduced = absorb_trivial_fibers(s)
    if len(reduced.pairs) != 3 or any(a == 1 for a, _ in reduced.pairs):
        raise UnsupportedFiberCountError(
            f"need exactly 3 exceptional fibers, got {reduced.pairs}"
        )
    order = seifert_h1_order(reduced)
    prod = math.prod(a for a, _ in reduced.pairs)
    lcm = math.lcm(*(a for a, _ in reduced.pairs))
    if prod != lcm * order:
        raise FlatCobordismError(
            f"product {prod} != lcm {lcm} * |H1| {order}; cobordism is not flat"
        )

    warnings: List[str] = []
    entries = [GeneratorEntry(sign_k % 4, 1, SPECIAL)]

    for idx, cls in enumerate(reducible_characters(reduced), start=1):
        active = [
            (a, b, ell)
            for (a, b), ell in zip(reduced.pairs, cls.ells)
            if ell != 0
        ]
        if any(a % 2 == 0 for a, _, _ in active):
            warnings.append(
                f"unknown gradings: reducible class {idx} restricts nontrivially "
                "to an even-multiplicity fiber"
            )
            entries.append(GeneratorEntry(None, 2, REDUCIBLE, idx))
            continue
        mu = sign_k - 1
        for a, b, ell in active:
            rep = LensRep(a, (-b) % a, ell)
            mu += index_plus_one(rep) // 2 + 1
        mu %= 4
        entries.append(GeneratorEntry(mu, 1, REDUCIBLE, idx))
        entries.append(GeneratorEntry((mu + 1) % 4, 1, REDUCIBLE, idx))

    irreducibles = enumerate_irreducibles(reduced)
    k = len(irreducibles)
    if irreducible_block is not None:
        block = tuple(int(x) for x in irreducible_block)
        if len(block) != 4 or any(x < 0 for x in block):
            raise ValueError(f"irreducible block must be four counts, got {block}")
        if sum(block) != 4 * k:
            raise ValueError(
                f"irreducible block sums to {sum(block)}, expected {4 * k}"
            )
        if any(x % 2 for x in block) or block[0] - block[1] + block[2] - block[3]:
            # each class places two generators at mu and two at mu + 1,
            # so entries are even and the alternating sum vanishes
            raise ValueError(f"block {block} is not a sum of consecutive-grading pairs")
    if k:
        if irreducible_block is not None:
            for g, count in enumerate(block):
                if count:
                    entries.append(GeneratorEntry(g, count, IRREDUCIBLE))
        elif order == 1:
            # homology sphere: the degree-4 pairing spreads the classes
            # uniformly, one generator per class in every grading
            for g in range(4):
                entries.append(GeneratorEntry(g, k, IRREDUCIBLE))
        else:
            warnings.append(
                f"unknown gradings: {k} irreducible class(es) contribute "
                f"{4 * k} generators at unresolved gradings"
            )
            for idx in range(1, k + 1):
                entries.append(GeneratorEntry(None, 4, IRREDUCIBLE, idx))

    return GradedGenerators(tuple(entries), tuple(warnings))


def torus_even_seifert_data(p: int, q: int) -> SeifertData:
    """Seifert pairs of the double cover of the torus knot with even q = 2r.

    The cover fibers over the sphere with multiplicities (1, p, p, r) and
    pairs solving b1*p*r + 2*b2*r + b3*p = 1.
    """
    if q % 2 or p % 2 == 0 or math.gcd(p, q) != 1:
        raise ValueError(f"need odd p and even q coprime, got ({p}, {q})")
    r = q // 2
    if r < 2:
        raise ValueError("q = 2 covers are lens spaces; use the two-bridge route")
    b2 = mod_inverse((2 * r) % p, p)
    rem = 1 - 2 * b2 * r
    assert rem % p == 0
    s = rem // p
    b3 = s % r
    b1 = (s - b3) // r
    return SeifertData(((1, b1), (p, b2), (p, b2), (r, b3)))


@dataclass(frozen=True)
class TorusComplex:
    """Certified total rank plus the conjectural rank vector for odd torus knots."""

    total_rank: int
    ranks: ChainRanks
    special_grading: int = 0


def torus_complex(p: int, q: int) -> TorusComplex:
    """Chain data of the torus knot on odd coprime p, q >= 3.

    The total rank 1 + 4a with a = -signature/4 is certified, and the
    special generator sits in degree zero since the signature is divisible
    by 8.  The even split (1 + a, a, a, a) is conjectural and flagged so.
    """
    if p % 2 == 0 or q % 2 == 0 or p < 3 or q < 3:
        raise ValueError(f"both parameters must be odd and >= 3, got ({p}, {q})")
    sign = torus_signature(p, q)
    if sign % 8:
        raise NonIntegralAError(f"torus signature {sign} is not divisible by 8")
    a = -sign // 4
    return TorusComplex(
        total_rank=1 + 4 * a,
        ranks=ChainRanks((1 + a, a, a, a), ABSOLUTE, conjectural=True),
    )


@dataclass(frozen=True)
class LinkComplex:
    """Rank data of a two-component Montesinos link complex.

    so3_classes is the number of SO(3) classes with nontrivial w2; each
    contributes four generators.  When the linking number determines the
    split (n1, n3), candidates holds the single cyclic-canonical vector
    (2n1, 2n3, 2n1, 2n3); without it, one candidate per admissible split.
    """

    so3_classes: int
    su2_classes: int
    candidates: Tuple[ChainRanks, ...]
    split: Optional[Tuple[int, int]]
    ambiguous: bool
    warnings: Tuple[str, ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def ranks(self) -> Optional[ChainRanks]:
        return self.candidates[0] if not self.ambiguous else None

    @property
    def total(self) -> int:
        return 4 * self.so3_classes


def montesinos_link_complex(s: SeifertData, lk: Optional[int] = None) -> LinkComplex:
    """Chain ranks of a two-component Montesinos link over a homology S^1 x S^2.

    The generator count is four per projective SO(3) class; the rank
    template is (2n1, 2n3, 2n1, 2n3) with n1 + n3 the class count.  The
    split is fixed by the Euler-characteristic constraint
    4*(n1 - n3) = +-lk; the sign ambiguity only rotates the vector, which
    is anchored up to cyclic permutation anyway.
    """
    if seifert_h1_order(s) != 0:
        raise NotHomologyS1xS2Error(
            f"|H1| = {seifert_h1_order(s)}, expected a homology S^1 x S^2"
        )
    twist = canonical_twist(s)
    so3 = enumerate_projective(s, twist)
    su2 = projective_su2_classes(s, twist)
    n = len(so3)
    notes = (
        "split fixed by the Euler-characteristic identity 4*(n1 - n3) = +-lk; "
        "the alternative identity n3 - n1 = +-lk conflicts with the worked "
        "rank vectors and is not used",
    )

    if lk is None:
        candidates = tuple(
            ChainRanks(
                _canonical_rotation((2 * n1, 2 * (n - n1), 2 * n1, 2 * (n - n1))),
                CYCLIC,
            )
            for n1 in range((n + 1) // 2, n + 1)
        )
        return LinkComplex(
            so3_classes=n,
            su2_classes=len(su2),
            candidates=candidates,
            split=None,
            ambiguous=True,
            warnings=("ambiguous split: no linking number supplied",),
            notes=notes,
        )

    quarter, rem = divmod(abs(lk), 4)
    if rem or quarter > n or (n + quarter) % 2:
        raise InconsistentLkError(
            f"|lk| = {abs(lk)} admits no split with n1 + n3 = {n}"
        )
    n1 = (n + quarter) // 2
    n3 = n - n1
    vec = _canonical_rotation((2 * n1, 2 * n3, 2 * n1, 2 * n3))
    warnings = ()
    if n1 != n3:
        warnings = ("split (n1, n3) is determined only up to interchange",)
    return LinkComplex(
        so3_classes=n,
        su2_classes=len(su2),
        candidates=(ChainRanks(vec, CYCLIC),),
        split=(n1, n3),
        ambiguous=False,
        warnings=warnings,
        notes=notes,
    )


def casson_from_alexander(delta: LaurentPoly) -> int:
    """Casson invariant of the zero-surgery from the surgery knot's Alexander polynomial.

    Equal to minus half the second derivative at 1 of the normalized
    symmetric polynomial.
    """
    second = second_derivative_at_one(delta)
    assert second % 2 == 0
    return -second // 2


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """Symmetrized Alexander polynomial of the torus knot on (p, q).

    Computed by exact polynomial division of
    (t^(pq) - 1)(t - 1) / ((t^p - 1)(t^q - 1)) and centered so that the
    result is symmetric with value 1 at t = 1.
    """
    if math.gcd(p, q) != 1:
        raise NotCoprimeError(f"gcd({p}, {q}) != 1")
    if p < 1 or q < 1:
        raise ValueError(f"parameters must be positive, got ({p}, {q})")
    if p == 1 or q == 1:
        return LaurentPoly.constant(1)

    def poly_mul(u, v):
        out = [0] * (len(u) + len(v) - 1)
        for i, a in enumerate(u):
            for j, b in enumerate(v):
                out[i + j] += a * b
        return out

    def cyclic(n):
        return [-1] + [0] * (n - 1) + [1]

    def poly_div(num, den):
        num = num[:]
        out = [0] * (len(num) - len(den) + 1)
        for k in range(len(out) - 1, -1, -1):
            c = num[k + len(den) - 1]
            assert c % den[-1] == 0
            f = c // den[-1]
            out[k] = f
            for i, d in enumerate(den):
                num[k + i] -= f * d
        assert all(x == 0 for x in num)
        return out

    numerator = poly_mul(cyclic(p * q), cyclic(1))
    quotient = poly_div(poly_div(numerator, cyclic(p)), cyclic(q))
    genus_shift = (p - 1) * (q - 1) // 2
    delta = LaurentPoly(enumerate(quotient)).shift(-genus_shift)
    assert delta(1) == 1 and delta.is_symmetric()
    return delta
