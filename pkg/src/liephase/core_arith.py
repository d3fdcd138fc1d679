"""Exact scalars, Bernoulli numbers and multi-index combinatorics.

Everything downstream runs over exact rationals.  ``fractions.Fraction``
already keeps values in lowest terms with a positive denominator, which is
exactly the canonical form the rest of the package relies on for equality
tests, so it is used directly as the scalar type.

Multi-indices are plain tuples of non-negative ints of length n (the
dimension of the Lie algebra at hand); they index both the commuting
derivative monomials d1^k1*...*dn^kn and the ordered generator monomials
x1^k1*...*xn^kn.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from itertools import combinations

Rational = Fraction

MultiIndex = tuple  # tuple[int, ...]; kept as a plain tuple on purpose


def as_rational(x) -> Fraction:
    """Coerce ints, strings like '-3/7' and Fractions to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


# --------------------------------------------------------------------------
# Bernoulli numbers
# --------------------------------------------------------------------------

_bernoulli_lock = threading.Lock()
_bernoulli_table: list[Fraction] = []


def bernoulli(m: int) -> Fraction:
    """m-th Bernoulli number under the convention B_1 = -1/2.

    The sign convention matters for everything built on top: with
    B_1 = -1/2 the generating series sum_m (-1)^m B_m/m! z^m equals
    -z/(e^{-z} - 1) = 1 + z/2 + z^2/12 - z^4/720 + ..., which is the shape
    all the deformation matrices in this package assume.

    Computed by the Akiyama-Tanigawa triangle, which natively produces the
    B_1 = +1/2 variant; the two conventions differ only at m = 1.  The
    table is grown under a lock so concurrent callers are safe.
    """
    if m < 0:
        raise ValueError("bernoulli is defined for m >= 0")
    with _bernoulli_lock:
        while len(_bernoulli_table) <= m:
            k = len(_bernoulli_table)
            row = [Fraction(1, j + 1) for j in range(k + 1)]
            for i in range(1, k + 1):
                row = [(j + 1) * (row[j] - row[j + 1]) for j in range(k + 1 - i)]
            _bernoulli_table.append(row[0])
        b = _bernoulli_table[m]
    return -b if m == 1 else b


# --------------------------------------------------------------------------
# Multi-index helpers
# --------------------------------------------------------------------------

def mi_zero(n: int) -> MultiIndex:
    return (0,) * n


def mi_unit(n: int, i: int) -> MultiIndex:
    """The i-th unit multi-index e_i (0-based slot)."""
    return tuple(1 if j == i else 0 for j in range(n))


def mi_add(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def mi_sub(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    c = tuple(x - y for x, y in zip(a, b))
    if any(v < 0 for v in c):
        raise ValueError(f"{b} is not componentwise <= {a}")
    return c


def mi_total(a: MultiIndex) -> int:
    """Total degree |K| = sum of the entries."""
    return sum(a)


def mi_leq(a: MultiIndex, b: MultiIndex) -> bool:
    """Componentwise partial order a <= b."""
    return all(x <= y for x, y in zip(a, b))


def mi_factorial(a: MultiIndex) -> int:
    out = 1
    for k in a:
        out *= math.factorial(k)
    return out


def multiindex_binomial(k: MultiIndex, k1: MultiIndex) -> Fraction:
    """Product of componentwise binomials C(k_i, k1_i); requires k1 <= k."""
    if not mi_leq(k1, k):
        raise ValueError(f"binomial undefined: {k1} is not componentwise <= {k}")
    out = 1
    for a, b in zip(k, k1):
        out *= math.comb(a, b)
    return Fraction(out)


def mi_splittings(k: MultiIndex):
    """Yield (binom, k1, k2) over all k1 + k2 = k, with binom = C(k, k1).

    This is the coefficient pattern of the coproduct on an ordered monomial
    whose letters are all primitive.
    """
    n = len(k)

    def rec(i, k1):
        if i == n:
            t1 = tuple(k1)
            yield multiindex_binomial(k, t1), t1, mi_sub(k, t1)
            return
        for v in range(k[i] + 1):
            k1.append(v)
            yield from rec(i + 1, k1)
            k1.pop()

    yield from rec(0, [])


def grlex_key(k: MultiIndex):
    """Sort key for graded-lexicographic order (total degree, then lex)."""
    return (sum(k), k)


def monomials_of_degree(n: int, d: int) -> list[MultiIndex]:
    """All multi-indices of length n with |K| = d, in lex order."""
    # stars and bars: positions of n-1 separators among d + n - 1 slots
    out = []
    for cut in combinations(range(d + n - 1), n - 1):
        prev = -1
        k = []
        for c in cut:
            k.append(c - prev - 1)
            prev = c
        k.append(d + n - 1 - prev - 1)
        out.append(tuple(k))
    return out


def monomials_up_to(n: int, d: int) -> list[MultiIndex]:
    """All multi-indices with |K| <= d in graded-lex order."""
    out = []
    for deg in range(d + 1):
        out.extend(sorted(monomials_of_degree(n, deg)))
    return out


def word_of(k: MultiIndex) -> tuple:
    """Expand a multi-index into its non-decreasing letter word.

    (2,0,1) -> (0, 0, 2): the ordered monomial x1^2*x3 spelled letterwise.
    """
    w = []
    for i, v in enumerate(k):
        w.extend([i] * v)
    return tuple(w)


def mi_of_word(n: int, word) -> MultiIndex:
    k = [0] * n
    for a in word:
        k[a] += 1
    return tuple(k)
