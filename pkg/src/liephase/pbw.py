"""The enveloping algebra in ordered (PBW) normal form.

Elements are sparse maps multi-index -> coefficient, where the multi-index
J encodes the ordered monomial x1^j1 * ... * xn^jn.  Multiplication
straightens arbitrary words back into this basis using the bracket as the
rewriting rule; the (length, inversion count) measure makes the rewriting
terminate, and results are memoized per algebra since the same small words
recur constantly in the identity suites.
"""

from __future__ import annotations

from fractions import Fraction

from .core_arith import (as_rational, grlex_key, mi_of_word, mi_splittings,
                         mi_total, mi_zero, word_of)
from .lie import LieAlgebra


def _straighten(L: LieAlgebra, word: tuple) -> dict:
    """Normal form of the product of generators spelled by ``word``.

    Returns a sparse map multi-index -> coefficient.  A descent x_a x_b with
    a > b rewrites to x_b x_a + [x_a, x_b]; the swap lowers the inversion
    count, the bracket terms lower the length.
    """
    memo = L._straighten_cache
    hit = memo.get(word)
    if hit is not None:
        return hit
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            break
    else:
        out = {mi_of_word(L.n, word): Fraction(1)}
        memo[word] = out
        return out
    a, b = word[i], word[i + 1]
    swapped = word[:i] + (b, a) + word[i + 2:]
    out = dict(_straighten(L, swapped))
    for lam, c in L.bracket(a, b).items():
        for j, c2 in _straighten(L, word[:i] + (lam,) + word[i + 2:]).items():
            v = out.get(j, Fraction(0)) + c * c2
            if v:
                out[j] = v
            else:
                out.pop(j, None)
    memo[word] = out
    return out


class UEnvElement:
    """An enveloping-algebra element in PBW normal form."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: LieAlgebra, coeffs: dict | None = None):
        self.alg = alg
        self.coeffs = {tuple(k): as_rational(v) for k, v in (coeffs or {}).items()
                       if v != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def unit(cls, alg: LieAlgebra) -> "UEnvElement":
        return cls(alg, {mi_zero(alg.n): 1})

    @classmethod
    def generator(cls, alg: LieAlgebra, i: int) -> "UEnvElement":
        k = [0] * alg.n
        k[i] = 1
        return cls(alg, {tuple(k): 1})

    @classmethod
    def monomial(cls, alg: LieAlgebra, j, coeff=1) -> "UEnvElement":
        return cls(alg, {tuple(j): coeff})

    @classmethod
    def from_word(cls, alg: LieAlgebra, word) -> "UEnvElement":
        """Normal form of an arbitrary generator word (not necessarily sorted)."""
        return cls(alg, _straighten(alg, tuple(word)))

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return UEnvElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return UEnvElement(self.alg, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UEnvElement(self.alg, {k: v * other for k, v in self.coeffs.items()})
        return u_multiply(self, self._coerce(other))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return self._coerce(other) * self

    def _coerce(self, other) -> "UEnvElement":
        if isinstance(other, UEnvElement):
            if other.alg is not self.alg and other.alg != self.alg:
                raise ValueError("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction)):
            return UEnvElement(self.alg, {mi_zero(self.alg.n): other})
        raise TypeError(f"cannot combine with {other!r}")

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Filtered degree: the largest |J| with a nonzero coefficient."""
        return max((mi_total(k) for k in self.coeffs), default=0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, UEnvElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def render(self, symbol: str | None = None) -> str:
        if not self.coeffs:
            return "0"
        names = self.alg.labels if symbol is None else tuple(
            f"{symbol}{i+1}" for i in range(self.alg.n))
        parts = []
        for k in sorted(self.coeffs, key=grlex_key):
            c = self.coeffs[k]
            mono = " ".join(f"{names[i]}" + (f"^{e}" if e > 1 else "")
                            for i, e in enumerate(k) if e)
            if not mono:
                term = str(c)
            elif c == 1:
                term = mono
            elif c == -1:
                term = f"-{mono}"
            else:
                term = f"{c} {mono}"
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"<uenv {self.render()}>"


def u_multiply(a: UEnvElement, b: UEnvElement) -> UEnvElement:
    """Exact product in PBW normal form."""
    alg = a.alg
    out: dict = {}
    for j, cj in a.coeffs.items():
        wj = word_of(j)
        for k, ck in b.coeffs.items():
            c = cj * ck
            for m, cm in _straighten(alg, wj + word_of(k)).items():
                v = out.get(m, Fraction(0)) + c * cm
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
    return UEnvElement(alg, out)


def u_coproduct(a: UEnvElement):
    """Coproduct as a finite list of (left, right) element pairs.

    Every generator is primitive, so on an ordered monomial the coproduct is
    the componentwise binomial splitting
        x_J  |-->  sum_{J1+J2=J} C(J, J1) x_{J1} (x) x_{J2},
    each slot again an ordered monomial.  Extended linearly, with the
    numeric coefficient folded into the left slot.
    """
    out = []
    for j, cj in a.coeffs.items():
        for binom, j1, j2 in mi_splittings(j):
            out.append((UEnvElement.monomial(a.alg, j1, cj * binom),
                        UEnvElement.monomial(a.alg, j2)))
    return out


def u_counit(a: UEnvElement) -> Fraction:
    """The counit: coefficient of the empty monomial."""
    return a.coeffs.get(mi_zero(a.alg.n), Fraction(0))


def symmetrize(L: LieAlgebra, j) -> UEnvElement:
    """Image of the commutative monomial x_J under symmetric ordering.

    Averages the ordered products over all distinct rearrangements of the
    letter word of J, each weighted by its multiplicity J!/|J|!; the leading
    term is x_J with coefficient one, lower terms come from straightening.
    """
    from itertools import permutations
    from .core_arith import mi_factorial
    import math

    j = tuple(j)
    letters = word_of(j)
    r = len(letters)
    if r == 0:
        return UEnvElement.unit(L)
    weight = Fraction(mi_factorial(j), math.factorial(r))
    out: dict = {}
    for perm in set(permutations(letters)):
        for m, cm in _straighten(L, perm).items():
            v = out.get(m, Fraction(0)) + weight * cm
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return UEnvElement(L, out)


def pbw_basis(L: LieAlgebra, max_degree: int):
    """All PBW monomials of filtered degree <= max_degree, graded-lex order."""
    from .core_arith import monomials_up_to
    return [UEnvElement.monomial(L, j) for j in monomials_up_to(L.n, max_degree)]
