"""The pairing with the enveloping algebra, dual bases, and the coproduct
of the series algebra.

The pairing <u, P> evaluates the series P under the word action of u and
takes the constant term.  Against ordered monomials it is graded in the
sense that <x_J, d^M> vanishes for |J| < |M| and equals J! exactly on the
diagonal |J| = |M|, which makes the defining system of the dual family
{d^{K}} triangular: it is solved by forward substitution over the graded
blocks, no elimination needed.

The coproduct of a series P at order N is computed by duality,

    Delta(P) = sum_{|J|,|K| <= N} <P, x_J * x_K> / (J! K!)  d^{J} (x) d^{K},

and is validated elsewhere against its defining property with respect to
the left black action (which is the independent oracle, kept out of the
construction on purpose).
"""

from __future__ import annotations

from fractions import Fraction

from .core_arith import (grlex_key, mi_factorial, mi_total, mi_zero,
                         monomials_up_to, word_of)
from .errors import InsufficientPrecisionError
from .lie import LieAlgebra
from .pbw import UEnvElement, u_multiply
from .series import TruncatedSeries, eval_at_zero, hopf_action_on_series


def hopf_pairing(L: LieAlgebra, u: UEnvElement, p: TruncatedSeries) -> Fraction:
    """<u, P>: act on P by each ordered word of u, take constant terms.

    Needs prec(P) >= filtered degree of u.
    """
    if p.prec < u.degree():
        raise InsufficientPrecisionError(u.degree(), p.prec, "pairing",
                                         min_order=u.degree())
    out = Fraction(0)
    for j, c in u.coeffs.items():
        out += c * eval_at_zero(hopf_action_on_series(L, word_of(j), p))
    return out


class DualBasisTable:
    """The family {d^{K}} dual to the ordered monomials through a level.

    ``elements[K]`` is the series with <d^{K}, x_J> = K! delta_{K,J} for all
    |K|, |J| <= level, exact through degree ``level``.  ``d_coeffs[(K, J)]``
    gives the change of basis d^J = sum_{|K| >= |J|} d_{K,J} d^{K}.
    """

    def __init__(self, L: LieAlgebra, level: int, elements: dict, d_coeffs: dict):
        self.L = L
        self.level = level
        self.elements = elements
        self.d_coeffs = d_coeffs

    def element(self, k) -> TruncatedSeries:
        return self.elements[tuple(k)]

    def monomials(self):
        return sorted(self.elements, key=grlex_key)


def dual_basis(L: LieAlgebra, level: int) -> DualBasisTable:
    """Solve <d^{K}, x_J> = K! delta for all |K|, |J| <= level.

    The graded matrix gram[J][M] = <x_J, d^M> is lower triangular in total
    degree with diagonal entries J!, so the solve is forward substitution.
    A failure of that shape would mean corrupted structure constants and is
    raised as an internal error rather than reported.
    """
    cached = L._dual_cache.get(level)
    if cached is not None:
        return cached
    n = L.n
    monos = monomials_up_to(n, level)
    mono_series = {m: TruncatedSeries.monomial(n, m, 1, level) for m in monos}
    words = {j: word_of(j) for j in monos}

    gram: dict = {}
    for j in monos:
        for m in monos:
            if mi_total(m) > mi_total(j):
                continue  # graded vanishing; asserted below on a sample
            acted = hopf_action_on_series(L, words[j], mono_series[m])
            gram[(j, m)] = eval_at_zero(acted)
        if gram[(j, j)] != mi_factorial(j):
            raise AssertionError(f"gram diagonal at {j} is {gram[(j, j)]}, "
                                 f"expected {mi_factorial(j)}: structure data corrupt")

    elements = {}
    for k in monos:
        target_fact = Fraction(mi_factorial(k))
        a: dict = {}
        for j in monos:  # graded-lex ascending: all |M| < |J| already solved
            rhs = target_fact if j == k else Fraction(0)
            acc = Fraction(0)
            for m, am in a.items():
                if mi_total(m) < mi_total(j):
                    acc += am * gram[(j, m)]
            val = (rhs - acc) / mi_factorial(j)
            if val:
                a[j] = val
        elements[k] = TruncatedSeries(n, a, level)

    d_coeffs = {}
    for k in monos:
        kf = mi_factorial(k)
        for j in monos:
            g = gram.get((k, j), Fraction(0))
            if g:
                d_coeffs[(k, j)] = g / kf
    table = DualBasisTable(L, level, elements, d_coeffs)
    L._dual_cache[level] = table
    return table


class SeriesTensor:
    """A finite sum of two-slot series tensors, kept in dual-basis form.

    ``coeff_table`` maps (J, K) to the coefficient of d^{J} (x) d^{K}; the
    materialized ``pairs`` list carries the same data as plain series with
    the coefficient folded into the left slot.  The two slots may be exact
    through different degrees (order1 for the left, order2 for the right).
    """

    def __init__(self, L: LieAlgebra, order1: int, order2: int, coeff_table: dict):
        self.L = L
        self.order1 = order1
        self.order2 = order2
        self.coeff_table = {k: v for k, v in coeff_table.items() if v != 0}
        self._pairs = None

    def pairs(self):
        if self._pairs is None:
            t1 = dual_basis(self.L, self.order1)
            t2 = t1 if self.order2 == self.order1 else dual_basis(self.L, self.order2)
            self._pairs = [(t1.element(j) * c, t2.element(k))
                           for (j, k), c in sorted(self.coeff_table.items())]
        return self._pairs

    def __add__(self, other):
        out = dict(self.coeff_table)
        for key, v in other.coeff_table.items():
            out[key] = out.get(key, Fraction(0)) + v
        return SeriesTensor(self.L, min(self.order1, other.order1),
                            min(self.order2, other.order2), out)

    def __neg__(self):
        return SeriesTensor(self.L, self.order1, self.order2,
                            {k: -v for k, v in self.coeff_table.items()})

    def __sub__(self, other):
        return self + (-other)

    def swap(self) -> "SeriesTensor":
        return SeriesTensor(self.L, self.order2, self.order1,
                            {(k, j): v for (j, k), v in self.coeff_table.items()})

    def expand(self, deg1: int, deg2: int) -> dict:
        """Monomial-basis expansion restricted to bidegree (deg1, deg2)."""
        return expand_pairs(self.pairs(), deg1, deg2)

    def eq_at(self, other, deg1: int, deg2: int) -> bool:
        return self.expand(deg1, deg2) == other.expand(deg1, deg2)

    def product_pairs(self, other) -> list:
        """Slotwise product as a raw list of series pairs."""
        return [(a1 * a2, b1 * b2)
                for a1, b1 in self.pairs() for a2, b2 in other.pairs()]

    def render(self) -> str:
        if not self.coeff_table:
            return "0"
        bits = []
        for (j, k), c in sorted(self.coeff_table.items(),
                                key=lambda kv: (grlex_key(kv[0][0]), grlex_key(kv[0][1]))):
            bits.append(f"{c} * d{{{','.join(map(str, j))}}} (x) d{{{','.join(map(str, k))}}}")
        return "  +  ".join(bits)


def _pair_series(L: LieAlgebra, j, p: TruncatedSeries) -> Fraction:
    """<x_J, p>/J!, the coefficient of d^{J} in the dual expansion of p."""
    return eval_at_zero(hopf_action_on_series(L, word_of(j), p)) / mi_factorial(j)


def expand_pairs(pairs, deg1: int, deg2: int) -> dict:
    """Monomial expansion of a raw list of series pairs through a bidegree."""
    out: dict = {}
    for a, b in pairs:
        for m1, c1 in a.coeffs.items():
            if mi_total(m1) > deg1:
                continue
            for m2, c2 in b.coeffs.items():
                if mi_total(m2) > deg2:
                    continue
                key = (m1, m2)
                v = out.get(key, Fraction(0)) + c1 * c2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return out


def s_coproduct(L: LieAlgebra, order: int, p: TruncatedSeries,
                order2: int | None = None) -> SeriesTensor:
    """Coproduct of a series, left slot exact through ``order`` and right
    slot through ``order2`` (defaults to ``order``), computed by duality.

    Requires prec(p) >= order + order2: the construction pairs p against
    products of ordered monomials of that total degree.
    """
    if order2 is None:
        order2 = order
    if p.prec < order + order2:
        raise InsufficientPrecisionError(order + order2, p.prec, "series coproduct",
                                         min_order=order + order2)
    n = L.n
    monos1 = monomials_up_to(n, order)
    monos2 = monos1 if order2 == order else monomials_up_to(n, order2)
    basis = {m: UEnvElement.monomial(L, m) for m in set(monos1) | set(monos2)}
    table: dict = {}
    for j in monos1:
        jf = mi_factorial(j)
        for k in monos2:
            prod = u_multiply(basis[j], basis[k])
            c = hopf_pairing(L, prod, p) / (jf * mi_factorial(k))
            if c:
                table[(j, k)] = c
    return SeriesTensor(L, order, order2, table)
