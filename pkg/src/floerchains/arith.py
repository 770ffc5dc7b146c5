"""Exact integer and rational primitives shared by all other modules.

Rationals are plain ``fractions.Fraction`` values throughout the package:
they already enforce gcd(|num|, den) = 1 and den > 0.  This module adds the
handful of exact routines the topology pipelines need: modular inverses,
even continued fractions, Laurent polynomials, signatures of symmetric
integer matrices, and Smith normal form.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import NotCoprimeError, NotNormalizedError


def mod_inverse(a: int, p: int) -> int:
    """Return r with a*r = 1 (mod p) and 0 < r < p."""
    if p <= 0:
        raise ValueError(f"modulus must be positive, got {p}")
    g = math.gcd(a, p)
    if g != 1:
        raise NotCoprimeError(f"gcd({a}, {p}) = {g}, no inverse mod {p}")
    return pow(a, -1, p)


def _nearest_even_quotient(num: int, den: int) -> int:
    """Even integer c minimizing |num/den - c|; unique for the parities used here."""
    c = 2 * round(Fraction(num, 2 * den))
    if abs(num - c * den) >= abs(den):
        raise ArithmeticError(f"ambiguous even quotient for {num}/{den}")
    return c


def even_continued_fraction(p: int, q: int) -> List[int]:
    """Even-entry continued fraction of even length attached to the pair (p, q).

    Convention (fixed once, used by the two-bridge signature routine): the
    list [c1, ..., c2n] denotes the minus-form fraction

        c1 - 1/(c2 - 1/( ... - 1/c2n )),

    and it is computed for p/q* where q* is an even representative of q or
    of q^(-1) mod p in (-p, p), falling back to (q mod p) - p when both are
    odd.  Every entry is even and nonzero.  Evaluating the list recovers
    p/q* exactly, so q* = q or q* * q = 1 (mod p).
    """
    if p <= 1 or p % 2 == 0:
        raise ValueError(f"p must be odd and > 1, got {p}")
    q0 = q % p
    if q0 == 0 or math.gcd(p, q0) != 1:
        raise NotCoprimeError(f"q = {q} is not invertible mod p = {p}")
    candidates = [q0, mod_inverse(q0, p), q0 - p]
    q_even = next(v for v in candidates if v % 2 == 0)

    out: List[int] = []
    num, den = p, q_even
    while True:
        c = _nearest_even_quotient(num, den)
        out.append(c)
        r = num - c * den
        if r == 0:
            break
        num, den = -den, r
    if len(out) % 2 != 0 or any(c == 0 or c % 2 for c in out):
        raise ArithmeticError(f"even expansion of {p}/{q_even} failed: {out}")
    return out


def evaluate_minus_fraction(entries: Sequence[int]) -> Fraction:
    """Value of [c1, ..., ck] under the minus convention used above."""
    if not entries:
        raise ValueError("empty continued fraction")
    value = Fraction(entries[-1])
    for c in reversed(entries[:-1]):
        value = c - 1 / value
    return value


def signature(matrix: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric integer matrix, computed exactly.

    Congruence diagonalization over the rationals (Sylvester's law of
    inertia): returns the number of positive minus the number of negative
    diagonal entries.  Zero eigenvalues contribute nothing; the matrix may
    be degenerate.  No floating point is used anywhere.
    """
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    sig = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                off = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if off is None:
                    continue
                # remaining diagonal is zero; a[k][off] != 0 makes the
                # pivot 2*a[k][off] after adding row and column `off`
                for m in range(n):
                    a[k][m] += a[off][m]
                for m in range(n):
                    a[m][k] += a[m][off]
        pivot = a[k][k]
        sig += 1 if pivot > 0 else -1
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f == 0:
                continue
            for m in range(n):
                a[i][m] -= f * a[k][m]
            for m in range(n):
                a[m][i] -= f * a[m][k]
    return sig


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients.

    Stored as a map from exponent to nonzero coefficient, so the widely
    spread-out Alexander polynomials of torus knots stay cheap.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: Dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._coeffs = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._coeffs)

    def __call__(self, x):
        """Exact evaluation; x may be an int or Fraction (nonzero for e < 0)."""
        total = Fraction(0)
        for e, c in self._coeffs.items():
            total += c * Fraction(x) ** e
        if total.denominator == 1:
            return int(total)
        return total

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def is_symmetric(self) -> bool:
        """True when p(t) = p(1/t)."""
        return all(self._coeffs.get(-e) == c for e, c in self._coeffs.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "LaurentPoly(0)"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            term = "t" if e == 1 else "1" if e == 0 else f"t^{e}"
            if e != 0 and abs(c) != 1:
                term = f"{abs(c)}*{term}"
            elif e == 0:
                term = str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + term)
        text = " ".join(parts)
        return "LaurentPoly(" + (text[2:] if text.startswith("+ ") else "-" + text[2:]) + ")"


def second_derivative_at_one(delta: LaurentPoly) -> int:
    """Second derivative at t = 1 of a normalized symmetric Laurent polynomial.

    Requires delta(1) = 1 and delta(t) = delta(1/t); equals
    sum_k c_k * k * (k - 1), which is even for every symmetric input.
    """
    if delta(1) != 1:
        raise NotNormalizedError(f"delta(1) = {delta(1)}, expected 1")
    if not delta.is_symmetric():
        raise NotNormalizedError("delta(t) != delta(1/t)")
    return sum(c * e * (e - 1) for e, c in delta.coeffs.items())


def _identity(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(
    matrix: Sequence[Sequence[int]],
) -> Tuple[List[List[int]], List[List[int]], List[List[int]]]:
    """Return unimodular U, V and diagonal D with U * A * V = D.

    Diagonal entries are non-negative and satisfy the divisibility chain
    d1 | d2 | ... .  Intended for the small relation matrices of Seifert
    presentations; the algorithm is the textbook pivot-and-reduce loop.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        for k in range(n):
            a[dst][k] += f * a[src][k]
        for k in range(m):
            u[dst][k] += f * u[src][k]

    def add_col(dst, src, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(m, n):
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        dirty = False
        for i in range(t + 1, m):
            f = a[i][t] // a[t][t]
            if f:
                add_row(i, t, -f)
            if a[i][t]:
                dirty = True
        for j in range(t + 1, n):
            f = a[t][j] // a[t][t]
            if f:
                add_col(j, t, -f)
            if a[t][j]:
                dirty = True
        if dirty:
            continue
        rem = next(
            (
                (i, j)
                for i in range(t + 1, m)
                for j in range(t + 1, n)
                if a[i][j] % a[t][t] != 0
            ),
            None,
        )
        if rem is not None:
            add_row(t, rem[0], 1)
            continue
        if a[t][t] < 0:
            for k in range(n):
                a[t][k] = -a[t][k]
            for k in range(m):
                u[t][k] = -u[t][k]
        t += 1

    return u, a, v
