"""The (semi)completed Weyl algebra and the differential-operator realizations.

A WeylElement is a normally ordered operator sum_J x_J * P_J(d) with the
commuting multiplication symbols x on the left and a truncated series in the
commuting derivative symbols d on the right; the only cross relation is
[d^a, x_b] = delta^a_b.

The x-generators of an enveloping algebra embed here through
x_mu -> sum_rho x_rho * phi[rho][mu] (and the opposite family through
phitilde).  The identity checks in this module validate that embedding at
the operator level: bracket compatibility, commutation of the two families,
and the degree-homogeneous matrix identity that powers both.
"""

from __future__ import annotations

from fractions import Fraction

from .core_arith import (as_rational, grlex_key, mi_add, mi_leq, mi_sub,
                         mi_total, mi_zero, word_of)
from .errors import InsufficientPrecisionError
from .lie import LieAlgebra, opposite
from .pbw import UEnvElement
from .series import (MatrixSeries, TruncatedSeries, c_matrix, phi_matrix,
                     phi_tilde_matrix)


class WeylElement:
    """Normally ordered differential operator with truncated d-series parts."""

    __slots__ = ("n", "coeffs", "prec")

    def __init__(self, n: int, coeffs: dict, prec: int):
        self.n = n
        self.prec = max(prec, -1)
        self.coeffs = {}
        for j, s in coeffs.items():
            s = s.truncate(self.prec)
            if not s.is_zero():
                self.coeffs[tuple(j)] = s

    @classmethod
    def zero(cls, n: int, prec: int) -> "WeylElement":
        return cls(n, {}, prec)

    @classmethod
    def from_series(cls, s: TruncatedSeries) -> "WeylElement":
        return cls(s.n, {mi_zero(s.n): s}, s.prec)

    @classmethod
    def x_monomial(cls, n: int, j, prec: int) -> "WeylElement":
        return cls(n, {tuple(j): TruncatedSeries.constant(n, 1, prec)}, prec)

    def xdegree(self) -> int:
        return max((mi_total(j) for j in self.coeffs), default=0)

    def __add__(self, other):
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        out = {j: s for j, s in self.coeffs.items()}
        for j, s in other.coeffs.items():
            out[j] = out.get(j, TruncatedSeries.constant(self.n, 0, prec)) + s
        return WeylElement(self.n, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(self.n, {j: -s for j, s in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return WeylElement(self.n, {j: s * other for j, s in self.coeffs.items()},
                               self.prec)
        return weyl_multiply(self, self._coerce(other))

    __rmul__ = __mul__

    def _coerce(self, other) -> "WeylElement":
        if isinstance(other, WeylElement):
            if other.n != self.n:
                raise ValueError("operators over different variable counts")
            return other
        if isinstance(other, TruncatedSeries):
            return WeylElement.from_series(other)
        if isinstance(other, (int, Fraction)):
            return WeylElement.from_series(
                TruncatedSeries.constant(self.n, other, self.prec))
        raise TypeError(f"cannot combine with {other!r}")

    def eq_at(self, other, prec: int) -> bool:
        other = self._coerce(other)
        zero = TruncatedSeries.constant(self.n, 0, min(self.prec, other.prec))
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(j, zero).eq_at(other.coeffs.get(j, zero), prec)
                   for j in keys)

    def is_zero(self) -> bool:
        return not self.coeffs

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j in sorted(self.coeffs, key=grlex_key):
            xs = " ".join(f"x{i+1}" + (f"^{e}" if e > 1 else "")
                          for i, e in enumerate(j) if e)
            s = self.coeffs[j]
            if not xs:
                parts.append(s.render())
            elif s == TruncatedSeries.constant(self.n, 1, s.prec):
                parts.append(xs)
            else:
                parts.append(f"{xs} * ({s.render()})")
        return " + ".join(parts)

    def __repr__(self):
        return f"<weyl {self.render()} (prec {self.prec})>"


def _falling(k: int, b: int) -> int:
    out = 1
    for t in range(b):
        out *= k - t
    return out


def _commute_past(n: int, a, k, prec: int):
    """Rewrite d^A * x_K in normal order.

    Yields (coeff, K - B, A - B) over componentwise B <= min(A, K), with
    coeff = prod_i C(a_i, b_i) * (k_i)_(b_i); this is the multivariate
    iteration of d x = x d + 1.
    """
    import math

    def rec(i, b, coeff):
        if i == n:
            yield coeff, mi_sub(k, tuple(b)), mi_sub(a, tuple(b))
            return
        for v in range(min(a[i], k[i]) + 1):
            b.append(v)
            yield from rec(i + 1, b, coeff * math.comb(a[i], v) * _falling(k[i], v))
            b.pop()

    yield from rec(0, [], 1)


def weyl_multiply(p: WeylElement, q: WeylElement) -> WeylElement:
    """Normally ordered product.

    Precision: moving the left factor's d-series past the right factor's
    x-part can lower d-degree by up to the x-degree moved, so unknown tail
    terms of the left series contaminate that many degrees down; the right
    factor's series are never acted on.  The sound output precision is
    min(prec_p - xdegree(q), prec_q).
    """
    n = p.n
    prec = min(p.prec - q.xdegree(), q.prec)
    out: dict = {}
    for j, s in p.coeffs.items():
        for k, t in q.coeffs.items():
            for a, ca in s.coeffs.items():
                for coeff, krem, arem in _commute_past(n, a, k, prec):
                    mono = TruncatedSeries.monomial(n, arem, ca * coeff, prec)
                    piece = mono * t
                    if piece.is_zero():
                        continue
                    key = mi_add(j, krem)
                    cur = out.get(key)
                    out[key] = piece if cur is None else cur + piece
    return WeylElement(n, out, prec)


# --------------------------------------------------------------------------
# Realizations
# --------------------------------------------------------------------------

def _realize_generator(L: LieAlgebra, matrix: MatrixSeries, nu: int) -> WeylElement:
    n = L.n
    coeffs = {}
    for rho in range(n):
        s = matrix[rho, nu]
        if not s.is_zero():
            j = [0] * n
            j[rho] = 1
            coeffs[tuple(j)] = s
    return WeylElement(n, coeffs, matrix.prec)


def _realize(L: LieAlgebra, prec: int, a: UEnvElement, matrix: MatrixSeries) -> WeylElement:
    if prec < a.degree():
        raise InsufficientPrecisionError(a.degree(), prec, "realization budget",
                                         min_order=a.degree())
    gens = [_realize_generator(L, matrix, nu) for nu in range(L.n)]
    out = WeylElement.zero(L.n, prec - max(a.degree() - 1, 0))
    for j, c in a.coeffs.items():
        word = word_of(j)
        term = WeylElement.from_series(TruncatedSeries.constant(L.n, c, prec))
        for letter in word:
            term = weyl_multiply(term, gens[letter])
        out = out + term
    return out


def phi_realize(L: LieAlgebra, prec: int, a: UEnvElement) -> WeylElement:
    """Image of a under x_nu -> x_rho*phi[rho][nu], computed letterwise."""
    return _realize(L, prec, a, phi_matrix(L, prec))


def phi_tilde_realize(L: LieAlgebra, prec: int, a: UEnvElement) -> WeylElement:
    """Image of an opposite-family word under y_nu -> x_rho*phitilde[rho][nu]."""
    return _realize(L, prec, a, phi_tilde_matrix(L, prec))


# --------------------------------------------------------------------------
# Identity checks at the realization level
# --------------------------------------------------------------------------

def check_realization_bracket(L: LieAlgebra, prec: int):
    """[x^phi_mu, x^phi_nu] = C^lam_{mu,nu} x^phi_lam through degree prec-1.

    Returns (ok, failures) with failures a list of (mu, nu) pairs.
    """
    phi = phi_matrix(L, prec)
    gens = [_realize_generator(L, phi, nu) for nu in range(L.n)]
    failures = []
    for mu in range(L.n):
        for nu in range(mu + 1, L.n):
            lhs = weyl_multiply(gens[mu], gens[nu]) - weyl_multiply(gens[nu], gens[mu])
            rhs = WeylElement.zero(L.n, prec)
            for lam, c in L.bracket(mu, nu).items():
                rhs = rhs + gens[lam] * c
            if not lhs.eq_at(rhs, prec - 1):
                failures.append((mu, nu))
    return (not failures), failures


def check_xy_commute(L: LieAlgebra, prec: int):
    """[x^phi_mu, x^phitilde_nu] = 0 through degree prec-1 for all mu, nu."""
    phi = phi_matrix(L, prec)
    phit = phi_tilde_matrix(L, prec)
    xg = [_realize_generator(L, phi, nu) for nu in range(L.n)]
    yg = [_realize_generator(L, phit, nu) for nu in range(L.n)]
    failures = []
    for mu in range(L.n):
        for nu in range(L.n):
            lhs = weyl_multiply(xg[mu], yg[nu]) - weyl_multiply(yg[nu], xg[mu])
            if not lhs.eq_at(WeylElement.zero(L.n, prec), prec - 1):
                failures.append((mu, nu))
    return (not failures), failures


def check_ccn_identity(L: LieAlgebra, max_power: int):
    """Degree-homogeneous matrix identity behind the two-family commutation.

    For each N <= max_power, verifies exactly (both sides are homogeneous
    polynomials of degree N, so slack precision N+2 makes every step exact):

        [del_rho (C^N)^g_mu] C^rho_nu - (del_rho C^g_nu)(C^N)^rho_mu
            = C^s_{mu,nu} (C^N)^g_s

    where del_rho is the formal derivative with respect to d^rho.  At N = 0
    this reduces to antisymmetry of the bracket, at N = 1 to the Jacobi
    identity.  Returns (ok, failures) with failures (N, (g, mu, nu)).
    """
    n = L.n
    prec = max_power + 2
    cm = c_matrix(L, prec)
    failures = []
    power = MatrixSeries.identity(n, prec)
    for big_n in range(0, max_power + 1):
        if big_n > 0:
            power = power * cm
        for g in range(n):
            for mu in range(n):
                for nu in range(n):
                    lhs = TruncatedSeries.constant(n, 0, prec - 1)
                    for rho in range(n):
                        lhs = lhs + power[g, mu].derivative(rho) * cm[rho, nu]
                        lhs = lhs - cm[g, nu].derivative(rho) * power[rho, mu]
                    rhs = TruncatedSeries.constant(n, 0, prec - 1)
                    for s in range(n):
                        c = L.c(mu, nu, s)
                        if c:
                            rhs = rhs + power[g, s] * c
                    if not lhs.eq_at(rhs, big_n):
                        failures.append((big_n, (g, mu, nu)))
    return (not failures), failures


# --------------------------------------------------------------------------
# Fock action: operators on polynomials in x
# --------------------------------------------------------------------------

def fock_apply(w: WeylElement, poly: dict) -> dict:
    """Apply a normally ordered operator to an exact polynomial in x.

    ``poly`` maps multi-index -> coefficient.  The d-symbols differentiate,
    the x-symbols multiply.  Series terms beyond the polynomial's degree act
    as zero, so the result is exact provided the tracked precision reaches
    the polynomial degree.
    """
    deg = max((mi_total(k) for k in poly), default=0)
    if w.prec < deg:
        raise InsufficientPrecisionError(deg, w.prec, "Fock action")
    out: dict = {}
    for j, s in w.coeffs.items():
        for a, ca in s.coeffs.items():
            for k, ck in poly.items():
                if not mi_leq(a, k):
                    continue
                coeff = ca * ck
                for i in range(w.n):
                    coeff *= _falling(k[i], a[i])
                key = mi_add(j, mi_sub(k, a))
                v = out.get(key, Fraction(0)) + coeff
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return out
