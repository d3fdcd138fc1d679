"""Truncated multivariate power series and the deformation matrices.

A TruncatedSeries models an element of the formal power series ring in the
commuting symbols d1..dn known exactly through a tracked total degree
``prec`` and unknown beyond it.  prec = -1 means "no information".  The
precision is a hard contract: every operation computes the precision of its
output from its inputs, and equality is only ever decided through a stated
degree.

The deformation data of a Lie algebra enters through the n x n matrix
C[a][b] = C^a_{b,g} d^g of degree-one series.  All matrices used downstream
are analytic functions of it:

    phi      = sum_m (-1)^m B_m/m! C^m        (realization of the x-generators)
    phitilde = sum_m        B_m/m! C^m        (same for the opposite algebra)
    O        = e^C,     O^{-1} = e^{-C}       (transition between the families)

The right Hopf action of the enveloping algebra on series is generated by
the derivations D_mu with D_mu(d^b) = phi[b][mu], applied in word order:
acting by the word (mu, nu) means D_mu first, then D_nu.  That order is the
one under which the commutator comes out as
(act by mu then nu) - (act by nu then mu) = C^lam_{mu,nu} (act by lam),
and it is pinned by a dedicated test.
"""

from __future__ import annotations

from fractions import Fraction

from .core_arith import (Rational, as_rational, bernoulli, grlex_key, mi_add,
                         mi_sub, mi_total, mi_unit, mi_zero)
from .errors import InsufficientPrecisionError
from .lie import LieAlgebra, opposite


class TruncatedSeries:
    """Sparse series in n commuting symbols, exact through total degree prec.

    Instances are immutable by convention; every operation returns a fresh
    object.  Stored coefficients are nonzero and of total degree <= prec.
    """

    __slots__ = ("n", "coeffs", "prec", "_hash")

    def __init__(self, n: int, coeffs: dict, prec: int):
        self.n = n
        self.prec = max(prec, -1)
        if self.prec < 0:
            self.coeffs = {}
        else:
            self.coeffs = {k: v for k, v in coeffs.items()
                           if v != 0 and mi_total(k) <= self.prec}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, n: int, value, prec: int) -> "TruncatedSeries":
        value = as_rational(value)
        return cls(n, {mi_zero(n): value} if value else {}, prec)

    @classmethod
    def generator(cls, n: int, i: int, prec: int) -> "TruncatedSeries":
        """The symbol d(i+1) (slot i, 0-based) as a series."""
        return cls(n, {mi_unit(n, i): Fraction(1)}, prec)

    @classmethod
    def monomial(cls, n: int, k, coeff, prec: int) -> "TruncatedSeries":
        return cls(n, {tuple(k): as_rational(coeff)}, prec)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return TruncatedSeries(self.n, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.n, {k: -v for k, v in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            return TruncatedSeries(self.n, {k: c * v for k, v in self.coeffs.items()}, self.prec)
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        out: dict = {}
        for k1, v1 in self.coeffs.items():
            d1 = mi_total(k1)
            for k2, v2 in other.coeffs.items():
                if d1 + mi_total(k2) > prec:
                    continue
                k = mi_add(k1, k2)
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return TruncatedSeries(self.n, out, prec)

    __rmul__ = __mul__

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.n != self.n:
                raise ValueError("series live over different variable counts")
            return other
        return TruncatedSeries.constant(self.n, other, self.prec)

    # -- structure ---------------------------------------------------------

    def truncate(self, prec: int) -> "TruncatedSeries":
        """Forget information beyond the given degree (prec can only shrink)."""
        return TruncatedSeries(self.n, self.coeffs, min(self.prec, prec))

    def is_zero(self) -> bool:
        """Zero through the tracked precision."""
        return not self.coeffs

    def degree_min(self) -> int:
        """Lowest total degree with a nonzero coefficient (-1 if none stored)."""
        return min((mi_total(k) for k in self.coeffs), default=-1)

    def homogeneous_part(self, d: int) -> "TruncatedSeries":
        return TruncatedSeries(self.n, {k: v for k, v in self.coeffs.items()
                                        if mi_total(k) == d}, self.prec)

    def coefficient(self, k) -> Fraction:
        return self.coeffs.get(tuple(k), Fraction(0))

    def derivative(self, i: int) -> "TruncatedSeries":
        """Formal derivative with respect to the i-th symbol.

        Exact through prec - 1 for a general series (exact outright for the
        degree-homogeneous polynomials the identity checks use, which are
        built with slack precision for that reason).
        """
        out = {}
        for k, v in self.coeffs.items():
            if k[i]:
                out[mi_sub(k, mi_unit(self.n, i))] = v * k[i]
        return TruncatedSeries(self.n, out, self.prec - 1)

    def substitute_negated(self) -> "TruncatedSeries":
        """The series with every symbol d replaced by -d."""
        return TruncatedSeries(
            self.n,
            {k: (v if mi_total(k) % 2 == 0 else -v) for k, v in self.coeffs.items()},
            self.prec)

    def eq_at(self, other, prec: int) -> bool:
        """Equality of coefficients through total degree prec."""
        other = self._coerce(other)
        if min(self.prec, other.prec) < prec:
            raise InsufficientPrecisionError(prec, min(self.prec, other.prec),
                                             "series comparison")
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(k, 0) == other.coeffs.get(k, 0)
                   for k in keys if mi_total(k) <= prec)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            if isinstance(other, (int, Fraction)):
                other = TruncatedSeries.constant(self.n, other, self.prec)
            else:
                return NotImplemented
        return (self.n, self.prec, self.coeffs) == (other.n, other.prec, other.coeffs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.prec, frozenset(self.coeffs.items())))
        return self._hash

    # -- rendering ---------------------------------------------------------

    def render(self, symbol: str = "d") -> str:
        """Canonical text form, terms in graded-lex order, e.g. '1 + 1/2*d2'."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, key=grlex_key):
            c = self.coeffs[k]
            mono = "*".join(f"{symbol}{i+1}" + (f"^{e}" if e > 1 else "")
                            for i, e in enumerate(k) if e)
            if not mono:
                term = str(c)
            elif c == 1:
                term = mono
            elif c == -1:
                term = f"-{mono}"
            else:
                term = f"{c}*{mono}"
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"<series {self.render()} (prec {self.prec})>"


class MatrixSeries:
    """An n x n matrix of TruncatedSeries sharing one precision."""

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        self.n = len(self.entries)
        precs = {s.prec for row in self.entries for s in row}
        if len(precs) != 1:
            raise ValueError("matrix entries must share a precision")
        self.prec = precs.pop()

    @classmethod
    def identity(cls, n: int, prec: int) -> "MatrixSeries":
        return cls([[TruncatedSeries.constant(n, 1 if i == j else 0, prec)
                     for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int, prec: int) -> "MatrixSeries":
        return cls([[TruncatedSeries.constant(n, 0, prec) for _ in range(n)]
                    for _ in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other):
        return MatrixSeries([[a + b for a, b in zip(r1, r2)]
                             for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return MatrixSeries([[a - b for a, b in zip(r1, r2)]
                             for r1, r2 in zip(self.entries, other.entries)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MatrixSeries([[s * other for s in row] for row in self.entries])
        n = self.n
        return MatrixSeries([[sum((self.entries[i][k] * other.entries[k][j]
                                   for k in range(n)),
                                  TruncatedSeries.constant(self.entries[0][0].n, 0,
                                                           min(self.prec, other.prec)))
                              for j in range(n)] for i in range(n)])

    __rmul__ = __mul__

    def scale(self, c) -> "MatrixSeries":
        return MatrixSeries([[s * c for s in row] for row in self.entries])

    def is_zero(self) -> bool:
        return all(s.is_zero() for row in self.entries for s in row)

    def eq_at(self, other, prec: int) -> bool:
        return all(a.eq_at(b, prec) for r1, r2 in zip(self.entries, other.entries)
                   for a, b in zip(r1, r2))

    def truncate(self, prec: int) -> "MatrixSeries":
        return MatrixSeries([[s.truncate(prec) for s in row] for row in self.entries])

    def __repr__(self):
        return f"<{self.n}x{self.n} matrix series (prec {self.prec})>"


# --------------------------------------------------------------------------
# Deformation matrices
# --------------------------------------------------------------------------

def c_matrix(L: LieAlgebra, prec: int) -> MatrixSeries:
    """Entry (a, b) is the degree-one series C^a_{b,g} d^g."""
    key = ("c", prec)
    cached = L._matrix_cache.get(key)
    if cached is not None:
        return cached
    n = L.n
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            coeffs = {}
            for g in range(n):
                c = L.c(b, g, a)
                if c:
                    coeffs[mi_unit(n, g)] = c
            row.append(TruncatedSeries(n, coeffs, prec))
        rows.append(row)
    out = MatrixSeries(rows)
    L._matrix_cache[key] = out
    return out


def _power_series_of_c(L: LieAlgebra, prec: int, coeff_of_power) -> MatrixSeries:
    """sum_m coeff_of_power(m) * C^m through the given precision.

    C is homogeneous of degree one, so powers beyond the precision cannot
    contribute; the loop also exits early once a power vanishes exactly
    (nilpotent case), which makes the closed forms for nilpotent algebras
    come out exactly.
    """
    cm = c_matrix(L, prec)
    acc = MatrixSeries.identity(L.n, prec).scale(coeff_of_power(0))
    power = MatrixSeries.identity(L.n, prec)
    for m in range(1, prec + 1):
        power = power * cm
        if power.is_zero():
            break
        c = coeff_of_power(m)
        if c:
            acc = acc + power.scale(c)
    return acc


def phi_matrix(L: LieAlgebra, prec: int) -> MatrixSeries:
    """phi = sum_m (-1)^m B_m/m! C^m = I + C/2 + C^2/12 - C^4/720 + ..."""
    key = ("phi", prec)
    out = L._matrix_cache.get(key)
    if out is None:
        import math
        out = _power_series_of_c(
            L, prec, lambda m: (-1) ** m * bernoulli(m) / math.factorial(m))
        L._matrix_cache[key] = out
    return out


def phi_tilde_matrix(L: LieAlgebra, prec: int) -> MatrixSeries:
    """The same construction run on the opposite algebra: sum_m B_m/m! C^m."""
    key = ("phitilde", prec)
    out = L._matrix_cache.get(key)
    if out is None:
        import math
        out = _power_series_of_c(
            L, prec, lambda m: bernoulli(m) / math.factorial(m))
        L._matrix_cache[key] = out
    return out


def exp_c(L: LieAlgebra, prec: int, sign: int = 1) -> MatrixSeries:
    """e^{sign*C}; sign +1 gives the transition matrix O, -1 its inverse."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    key = ("exp", prec, sign)
    out = L._matrix_cache.get(key)
    if out is None:
        import math
        out = _power_series_of_c(L, prec, lambda m: Fraction(sign ** m, math.factorial(m)))
        L._matrix_cache[key] = out
    return out


def matrix_identities_check(L: LieAlgebra, prec: int):
    """Verify O*O^{-1} = I, phitilde = phi*O^{-1} and phi - phitilde = C.

    Returns (ok, failures) where failures lists (identity, (i, j)) for the
    first entry at which each identity breaks through the stated precision.
    """
    n = L.n
    ident = MatrixSeries.identity(n, prec)
    o = exp_c(L, prec, 1)
    oinv = exp_c(L, prec, -1)
    phi = phi_matrix(L, prec)
    phit = phi_tilde_matrix(L, prec)
    cm = c_matrix(L, prec)
    failures = []
    for name, lhs, rhs in (("O*Oinv = I", o * oinv, ident),
                           ("phitilde = phi*Oinv", phit, phi * oinv),
                           ("phi - phitilde = C", phi - phit, cm)):
        done = False
        for i in range(n):
            for j in range(n):
                if not lhs[i, j].eq_at(rhs[i, j], prec):
                    failures.append((name, (i, j)))
                    done = True
                    break
            if done:
                break
    return (not failures), failures


# --------------------------------------------------------------------------
# The Hopf action on series
# --------------------------------------------------------------------------

def _derivation_apply(L: LieAlgebra, mu: int, p: TruncatedSeries,
                      matrix: MatrixSeries) -> TruncatedSeries:
    """Apply the derivation sending d^b to matrix[b][mu], by the Leibniz rule.

    Output is exact through p.prec - 1: the matrix has unit constant term on
    the diagonal, so unknown degree-(prec+1) terms of p contaminate degree
    prec of the result but nothing below.
    """
    n = p.n
    prec_out = p.prec - 1
    out: dict = {}
    for k, v in p.coeffs.items():
        kd = mi_total(k) - 1
        for i in range(n):
            if not k[i]:
                continue
            c = v * k[i]
            base = mi_sub(k, mi_unit(n, i))
            for km, vm in matrix[i, mu].coeffs.items():
                if kd + mi_total(km) > prec_out:
                    continue
                kk = mi_add(base, km)
                cur = out.get(kk)
                out[kk] = c * vm if cur is None else cur + c * vm
    return TruncatedSeries(n, out, prec_out)


def hopf_action_on_series(L: LieAlgebra, word, p: TruncatedSeries) -> TruncatedSeries:
    """Act on p by the ordered generator word, one derivation per letter.

    Letters are applied left to right: word (mu, nu) means D_mu first, then
    D_nu.  Each letter costs one degree of certainty, so the precondition is
    prec(p) >= len(word).

    Cached per (series, word) with prefix reuse: the ordered words of the
    basis monomials share long prefixes, so the per-letter results are
    computed once.
    """
    word = tuple(word)
    if p.prec < len(word):
        raise InsufficientPrecisionError(len(word), p.prec, "Hopf action on series")
    if not word:
        return p
    cache = L._action_cache
    key = (p, word)
    hit = cache.get(key)
    if hit is not None:
        return hit
    prefix = hopf_action_on_series(L, word[:-1], p)
    out = _derivation_apply(L, word[-1], prefix, phi_matrix(L, prefix.prec))
    cache[key] = out
    return out


def left_hopf_action_on_series(L: LieAlgebra, word, p: TruncatedSeries) -> TruncatedSeries:
    """The mirrored action used on the opposite-family side.

    Generated by the derivations d^b -> -phitilde[b][mu] and composed as a
    left action: the word (mu, nu) acts by D~_nu first, then D~_mu.  The
    minus sign is forced by the smash relation: commuting a y-generator
    leftwards past a series must produce [d, y] = +phitilde, and the
    negated derivations are exactly the ones forming a homomorphism of the
    opposite algebra under left composition.
    """
    word = tuple(word)
    if p.prec < len(word):
        raise InsufficientPrecisionError(len(word), p.prec, "Hopf action on series")
    if not word:
        return p
    cache = L._action_cache
    key = ("L", p, word)
    hit = cache.get(key)
    if hit is not None:
        return hit
    suffix = left_hopf_action_on_series(L, word[1:], p)
    mkey = ("phitilde_neg", suffix.prec)
    phit_neg = L._matrix_cache.get(mkey)
    if phit_neg is None:
        phit_neg = phi_tilde_matrix(L, suffix.prec).scale(-1)
        L._matrix_cache[mkey] = phit_neg
    out = _derivation_apply(L, word[0], suffix, phit_neg)
    cache[key] = out
    return out


def eval_at_zero(p: TruncatedSeries) -> Fraction:
    """Constant term of the series; requires at least degree-0 information."""
    if p.prec < 0:
        raise InsufficientPrecisionError(0, p.prec, "constant term")
    return p.coeffs.get(mi_zero(p.n), Fraction(0))
