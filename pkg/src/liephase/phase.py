"""The deformed phase space H in normal form, with both generator families.

A PhaseElement is a finite sum of ordered monomials in the noncommuting
generators x1..xn with a truncated series in the commuting deformed
derivatives d1..dn on the right of each.  Multiplication is the smash
product rule

    (u # P)(v # Q) = sum  u*v_(1) # (P <| v_(2)) * Q

over the binomial coproduct of the ordered monomial v, with <| the right
Hopf action realized by the phi-derivations on series.  The cost in tracked
precision of one multiplication is the x-degree of the right factor, charged
against the left factor's series (those are the ones the action hits).

The second generator family (the y's, spanning the opposite enveloping
algebra inside H) enters through the transition matrix O = e^C:

    y_mu = x_rho * Oinv[rho][mu]          (normal form in this module)
    x_nu = sum_s O[s][nu] # y_s  + corrections   (opposite normal form)

The opposite normal form, series to the LEFT of ordered y-monomials, is
RPhaseElement; it has its own smash kernel built on the mirrored
(phitilde) action, and the two conversion maps are checked against each
other by the test-suite.
"""

from __future__ import annotations

from fractions import Fraction

from .core_arith import (as_rational, grlex_key, mi_splittings, mi_total,
                         mi_zero, word_of)
from .errors import InsufficientPrecisionError
from .lie import LieAlgebra
from .pbw import UEnvElement, _straighten
from .series import (TruncatedSeries, eval_at_zero, exp_c,
                     hopf_action_on_series, left_hopf_action_on_series)


class PhaseElement:
    """Sum of x-ordered monomials with truncated series coefficients."""

    __slots__ = ("alg", "coeffs", "prec")

    def __init__(self, alg: LieAlgebra, coeffs: dict, prec: int):
        self.alg = alg
        self.prec = max(prec, -1)
        self.coeffs = {}
        for j, s in coeffs.items():
            s = s.truncate(self.prec)
            if not s.is_zero():
                self.coeffs[tuple(j)] = s

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, alg: LieAlgebra, prec: int) -> "PhaseElement":
        return cls(alg, {}, prec)

    @classmethod
    def unit(cls, alg: LieAlgebra, prec: int) -> "PhaseElement":
        return cls.scalar(alg, 1, prec)

    @classmethod
    def scalar(cls, alg: LieAlgebra, c, prec: int) -> "PhaseElement":
        return cls(alg, {mi_zero(alg.n): TruncatedSeries.constant(alg.n, c, prec)}, prec)

    @classmethod
    def from_series(cls, alg: LieAlgebra, s: TruncatedSeries) -> "PhaseElement":
        return cls(alg, {mi_zero(alg.n): s}, s.prec)

    # -- basic structure ----------------------------------------------------

    def xdegree(self) -> int:
        return max((mi_total(j) for j in self.coeffs), default=0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def series_part(self) -> TruncatedSeries:
        """The coefficient of the empty monomial."""
        return self.coeffs.get(mi_zero(self.alg.n),
                               TruncatedSeries.constant(self.alg.n, 0, self.prec))

    def is_pure_series(self) -> bool:
        return all(mi_total(j) == 0 for j in self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        out = dict(self.coeffs)
        for j, s in other.coeffs.items():
            cur = out.get(j)
            out[j] = s if cur is None else cur + s
        return PhaseElement(self.alg, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return PhaseElement(self.alg, {j: -s for j, s in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PhaseElement(self.alg, {j: s * other for j, s in self.coeffs.items()},
                                self.prec)
        return h_multiply(self, self._coerce(other))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return self._coerce(other) * self

    def _coerce(self, other) -> "PhaseElement":
        if isinstance(other, PhaseElement):
            if other.alg != self.alg:
                raise ValueError("elements of different phase spaces")
            return other
        if isinstance(other, TruncatedSeries):
            return PhaseElement.from_series(self.alg, other)
        if isinstance(other, (int, Fraction)):
            return PhaseElement.scalar(self.alg, other, self.prec)
        raise TypeError(f"cannot combine with {other!r}")

    def truncate(self, prec: int) -> "PhaseElement":
        return PhaseElement(self.alg, self.coeffs, min(self.prec, prec))

    def eq_at(self, other, prec: int) -> bool:
        """Coefficientwise series equality through total d-degree prec."""
        other = self._coerce(other)
        zero = TruncatedSeries.constant(self.alg.n, 0, min(self.prec, other.prec))
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(j, zero).eq_at(other.coeffs.get(j, zero), prec)
                   for j in keys)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, TruncatedSeries)):
            other = self._coerce(other)
        if not isinstance(other, PhaseElement):
            return NotImplemented
        return (self.alg == other.alg and self.prec == other.prec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.prec, frozenset(self.coeffs.items())))

    def render(self) -> str:
        """Canonical form like 'x1^2 x3 * (1/2*d2 + d1*d3)'."""
        if not self.coeffs:
            return "0"
        one = TruncatedSeries.constant(self.alg.n, 1, self.prec)
        parts = []
        for j in sorted(self.coeffs, key=grlex_key):
            xs = " ".join(f"x{i+1}" + (f"^{e}" if e > 1 else "")
                          for i, e in enumerate(j) if e)
            s = self.coeffs[j]
            if not xs:
                r = s.render()
                parts.append(f"({r})" if (" " in r and len(self.coeffs) > 1) else r)
            elif s.coeffs == one.coeffs:
                parts.append(xs)
            else:
                parts.append(f"{xs} * ({s.render()})")
        return " + ".join(parts)

    def __repr__(self):
        return f"<phase {self.render()} (prec {self.prec})>"


# --------------------------------------------------------------------------
# Smash multiplication
# --------------------------------------------------------------------------

def h_multiply(a: PhaseElement, b: PhaseElement) -> PhaseElement:
    """Product in x-normal form.

    Output precision: min(prec_a - xdegree(b), prec_b).  Only the left
    factor's series are acted on by the right factor's x-letters, so only
    they pay the precision toll.
    """
    alg = a.alg
    xb = b.xdegree()
    prec = min(a.prec - xb, b.prec)
    if a.prec < xb:
        raise InsufficientPrecisionError(xb, a.prec, "smash product",
                                         min_order=xb)
    out: dict = {}
    acted_cache: dict = {}
    for k, q in b.coeffs.items():
        for binom, k1, k2 in mi_splittings(k):
            w2 = word_of(k2)
            for j, p in a.coeffs.items():
                key = (id(p), w2)
                acted = acted_cache.get(key)
                if acted is None:
                    acted = hopf_action_on_series(alg, w2, p)
                    acted_cache[key] = acted
                piece = (acted * q).truncate(prec)
                if binom != 1:
                    piece = piece * binom
                if piece.is_zero():
                    continue
                for m, cm in _straighten(alg, word_of(j) + word_of(k1)).items():
                    term = piece * cm if cm != 1 else piece
                    cur = out.get(m)
                    out[m] = term if cur is None else cur + term
    return PhaseElement(alg, out, prec)


# --------------------------------------------------------------------------
# Generators and the structural maps
# --------------------------------------------------------------------------

def x_generator(L: LieAlgebra, mu: int, prec: int) -> PhaseElement:
    k = [0] * L.n
    k[mu] = 1
    return PhaseElement(L, {tuple(k): TruncatedSeries.constant(L.n, 1, prec)}, prec)


def d_generator(L: LieAlgebra, mu: int, prec: int) -> PhaseElement:
    return PhaseElement.from_series(L, TruncatedSeries.generator(L.n, mu, prec))


def y_generator(L: LieAlgebra, mu: int, prec: int) -> PhaseElement:
    """The opposite-family generator y_mu = x_rho * Oinv[rho][mu]."""
    key = ("ygen", mu, prec)
    hit = L._matrix_cache.get(key)
    if hit is not None:
        return hit
    oinv = exp_c(L, prec, -1)
    coeffs = {}
    for rho in range(L.n):
        s = oinv[rho, mu]
        if not s.is_zero():
            k = [0] * L.n
            k[rho] = 1
            coeffs[tuple(k)] = s
    out = PhaseElement(L, coeffs, prec)
    L._matrix_cache[key] = out
    return out


def y_word_phase(L: LieAlgebra, k, prec: int) -> PhaseElement:
    """The ordered y-monomial with multi-index k, as an x-form element."""
    k = tuple(k)
    key = ("yword", k, prec)
    hit = L._matrix_cache.get(key)
    if hit is not None:
        return hit
    out = _word_product([y_generator(L, a, prec) for a in word_of(k)],
                        PhaseElement.unit(L, prec))
    L._matrix_cache[key] = out
    return out


def o_entry(L: LieAlgebra, i: int, j: int, prec: int, inverse: bool = False) -> PhaseElement:
    m = exp_c(L, prec, -1 if inverse else 1)
    return PhaseElement.from_series(L, m[i, j])


def z_generator(L: LieAlgebra, mu: int, prec: int) -> PhaseElement:
    """z_mu = sum_rho O[rho][mu] * y_rho, the target-map image of y_mu."""
    o = exp_c(L, prec, 1)
    out = PhaseElement.zero(L, prec - 1)
    for rho in range(L.n):
        s = o[rho, mu]
        if not s.is_zero():
            out = out + h_multiply(PhaseElement.from_series(L, s),
                                   y_generator(L, rho, prec))
    return out


def alpha_l(L: LieAlgebra, f: UEnvElement, prec: int) -> PhaseElement:
    """Source map: the inclusion of the enveloping algebra, x-monomials as is."""
    return PhaseElement(L, {j: TruncatedSeries.constant(L.n, c, prec)
                            for j, c in f.coeffs.items()}, prec)


def _word_product(factors, unit):
    out = None
    for f in factors:
        out = f if out is None else h_multiply(out, f)
    return unit if out is None else out


def beta_l(L: LieAlgebra, f: UEnvElement, prec: int) -> PhaseElement:
    """Target map: the antihomomorphism sending x_mu to y_mu.

    Evaluated on each ordered monomial by mapping the reversed letter word
    through y_generator and multiplying in H.
    """
    ygens = [y_generator(L, mu, prec) for mu in range(L.n)]
    out = PhaseElement.zero(L, prec - max(f.degree() - 1, 0))
    for j, c in f.coeffs.items():
        word = word_of(j)[::-1]
        term = _word_product([ygens[a] for a in word], PhaseElement.unit(L, prec))
        out = out + term * c
    return out


def alpha_r(L: LieAlgebra, u: UEnvElement, prec: int) -> PhaseElement:
    """Inclusion of the opposite enveloping algebra: ordered y-words."""
    if u.alg != L.op():
        raise ValueError("alpha_r expects an element over the opposite algebra")
    out = PhaseElement.zero(L, prec - max(u.degree() - 1, 0))
    for k, c in u.coeffs.items():
        out = out + y_word_phase(L, k, prec) * c
    return out


def beta_r(L: LieAlgebra, u: UEnvElement, prec: int) -> PhaseElement:
    """Target map on the opposite side: the antihomomorphism y_mu -> z_mu."""
    if u.alg != L.op():
        raise ValueError("beta_r expects an element over the opposite algebra")
    zgens = [z_generator(L, mu, prec) for mu in range(L.n)]
    out = PhaseElement.zero(L, prec - max(2 * u.degree() - 1, 0))
    for k, c in u.coeffs.items():
        word = word_of(k)[::-1]
        term = _word_product([zgens[a] for a in word], PhaseElement.unit(L, prec))
        out = out + term * c
    return out


# --------------------------------------------------------------------------
# Black actions and counits
# --------------------------------------------------------------------------

def _project_uenv(L: LieAlgebra, h: PhaseElement) -> UEnvElement:
    """Apply id # (constant term): keep the d-degree-0 part of every series."""
    if h.prec < 0:
        raise InsufficientPrecisionError(0, h.prec, "constant-term projection")
    out = {}
    for j, s in h.coeffs.items():
        c = eval_at_zero(s)
        if c:
            out[j] = c
    return UEnvElement(L, out)


def black_left(h: PhaseElement, f: UEnvElement) -> UEnvElement:
    """h |> f: multiply h by the included f, then project the series to
    their constant terms.  Exact provided prec(h) >= degree(f).

    Linear in f; evaluated monomial by monomial through a per-algebra cache
    since the verification suites hit the same (element, monomial) pairs
    over and over.
    """
    L = h.alg
    if h.prec < f.degree():
        raise InsufficientPrecisionError(f.degree(), h.prec, "left black action",
                                         min_order=f.degree())
    out = UEnvElement(L, {})
    cache = L._action_cache
    for j, c in f.coeffs.items():
        key = ("bl", h, j)
        hit = cache.get(key)
        if hit is None:
            hit = _project_uenv(L, h_multiply(h, alpha_l(
                L, UEnvElement.monomial(L, j), h.prec)))
            cache[key] = hit
        out = out + hit * c
    return out


def counit_l(h: PhaseElement) -> UEnvElement:
    """eps_L(h) = h |> 1, the d-degree-0 part of h itself."""
    return _project_uenv(h.alg, h)


# --------------------------------------------------------------------------
# The opposite normal form
# --------------------------------------------------------------------------

class RPhaseElement:
    """Sum of terms (series) # y-ordered-monomial, the mirrored normal form."""

    __slots__ = ("alg", "coeffs", "prec")

    def __init__(self, alg: LieAlgebra, coeffs: dict, prec: int):
        self.alg = alg
        self.prec = max(prec, -1)
        self.coeffs = {}
        for k, s in coeffs.items():
            s = s.truncate(self.prec)
            if not s.is_zero():
                self.coeffs[tuple(k)] = s

    @classmethod
    def zero(cls, alg: LieAlgebra, prec: int) -> "RPhaseElement":
        return cls(alg, {}, prec)

    @classmethod
    def from_series(cls, alg: LieAlgebra, s: TruncatedSeries) -> "RPhaseElement":
        return cls(alg, {mi_zero(alg.n): s}, s.prec)

    def ydegree(self) -> int:
        return max((mi_total(k) for k in self.coeffs), default=0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        prec = min(self.prec, other.prec)
        out = dict(self.coeffs)
        for k, s in other.coeffs.items():
            cur = out.get(k)
            out[k] = s if cur is None else cur + s
        return RPhaseElement(self.alg, out, prec)

    def __neg__(self):
        return RPhaseElement(self.alg, {k: -s for k, s in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RPhaseElement(self.alg, {k: s * other for k, s in self.coeffs.items()},
                                 self.prec)
        return r_multiply(self, other)

    def eq_at(self, other, prec: int) -> bool:
        zero = TruncatedSeries.constant(self.alg.n, 0, min(self.prec, other.prec))
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(k, zero).eq_at(other.coeffs.get(k, zero), prec)
                   for k in keys)

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        one = TruncatedSeries.constant(self.alg.n, 1, self.prec)
        parts = []
        for k in sorted(self.coeffs, key=grlex_key):
            ys = " ".join(f"y{i+1}" + (f"^{e}" if e > 1 else "")
                          for i, e in enumerate(k) if e)
            s = self.coeffs[k]
            if not ys:
                parts.append(s.render())
            elif s.coeffs == one.coeffs:
                parts.append(ys)
            else:
                parts.append(f"({s.render()}) * {ys}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<rphase {self.render()} (prec {self.prec})>"


def r_multiply(a: RPhaseElement, b: RPhaseElement) -> RPhaseElement:
    """Product in the mirrored normal form.

    (Q # u)(Q' # v) = sum Q * (u_(1) |> Q') # u_(2) v over the binomial
    coproduct of the ordered y-monomial u, with |> the mirrored (phitilde)
    action and u_(2) v multiplied in the opposite enveloping algebra.
    Output precision: min(prec_a, prec_b - ydegree(a)).
    """
    L = a.alg
    op = L.op()
    ya = a.ydegree()
    prec = min(a.prec, b.prec - ya)
    if b.prec < ya:
        raise InsufficientPrecisionError(ya, b.prec, "mirrored smash product",
                                         min_order=ya)
    out: dict = {}
    acted_cache: dict = {}
    for k, q in a.coeffs.items():
        for binom, k1, k2 in mi_splittings(k):
            w1 = word_of(k1)
            for m, q2 in b.coeffs.items():
                key = (id(q2), w1)
                acted = acted_cache.get(key)
                if acted is None:
                    acted = left_hopf_action_on_series(L, w1, q2)
                    acted_cache[key] = acted
                piece = (q * acted).truncate(prec)
                if binom != 1:
                    piece = piece * binom
                if piece.is_zero():
                    continue
                for j, cj in _straighten(op, word_of(k2) + word_of(m)).items():
                    term = piece * cj if cj != 1 else piece
                    cur = out.get(j)
                    out[j] = term if cur is None else cur + term
    return RPhaseElement(L, out, prec)


def _r_generator_image(L: LieAlgebra, nu: int, prec: int) -> RPhaseElement:
    """x_nu in the mirrored normal form: sum_s O[s][nu] # y_s plus the
    series correction picked up by normal ordering (the mirrored action of
    y_s on the matrix entry)."""
    key = ("rgen", nu, prec)
    hit = L._matrix_cache.get(key)
    if hit is not None:
        return hit
    o = exp_c(L, prec, 1)
    n = L.n
    coeffs: dict = {}
    corr = TruncatedSeries.constant(n, 0, prec - 1)
    for s in range(n):
        entry = o[s, nu]
        if entry.is_zero():
            continue
        k = [0] * n
        k[s] = 1
        coeffs[tuple(k)] = entry
        corr = corr + left_hopf_action_on_series(L, (s,), entry)
    out = RPhaseElement(L, coeffs, prec - 1) + RPhaseElement.from_series(L, corr)
    L._matrix_cache[key] = out
    return out


def x_to_y(h: PhaseElement) -> RPhaseElement:
    """Rewrite from x-normal form to the mirrored normal form."""
    L = h.alg
    prec = h.prec
    gens = [_r_generator_image(L, nu, prec) for nu in range(L.n)]
    out = None
    for j, p in sorted(h.coeffs.items(), key=lambda kv: grlex_key(kv[0])):
        term = None
        for letter in word_of(j):
            term = gens[letter] if term is None else r_multiply(term, gens[letter])
        ps = RPhaseElement.from_series(L, p)
        term = ps if term is None else r_multiply(term, ps)
        out = term if out is None else out + term
    return RPhaseElement.zero(L, prec) if out is None else out


def y_to_x(rh: RPhaseElement) -> PhaseElement:
    """Rewrite from the mirrored normal form back to x-normal form."""
    L = rh.alg
    prec = rh.prec
    out = None
    ygens = [y_generator(L, mu, prec) for mu in range(L.n)]
    for k, q in sorted(rh.coeffs.items(), key=lambda kv: grlex_key(kv[0])):
        term = PhaseElement.from_series(L, q)
        for letter in word_of(k):
            term = h_multiply(term, ygens[letter])
        out = term if out is None else out + term
    return PhaseElement.zero(L, prec - rh.ydegree()) if out is None else out


def _project_uenv_r(L: LieAlgebra, rh: RPhaseElement) -> UEnvElement:
    """Apply (constant term) # id on the mirrored form; lands in U over the
    opposite algebra (y-monomials)."""
    if rh.prec < 0:
        raise InsufficientPrecisionError(0, rh.prec, "constant-term projection")
    out = {}
    for k, s in rh.coeffs.items():
        c = eval_at_zero(s)
        if c:
            out[k] = c
    return UEnvElement(L.op(), out)


def black_right(u: UEnvElement, h: PhaseElement) -> UEnvElement:
    """u <| h: include u as a y-word, multiply by h on the right, rewrite to
    the mirrored normal form and keep the constant series terms.

    Linear in u and cached per (y-monomial, element) like black_left.  The
    included y-words are built with slack precision so they never charge
    the element's own budget; the cost of the evaluation is then
    |word| + x-degree(h) against prec(h).
    """
    L = h.alg
    if u.is_zero():
        return UEnvElement(L.op(), {})
    if h.prec < u.degree():
        raise InsufficientPrecisionError(u.degree(), h.prec, "right black action",
                                         min_order=u.degree())
    out = UEnvElement(L.op(), {})
    cache = L._action_cache
    for k, c in u.coeffs.items():
        key = ("br", k, h)
        hit = cache.get(key)
        if hit is None:
            word = y_word_phase(L, k, h.prec + mi_total(k) + h.xdegree())
            p = h_multiply(word, h)
            hit = _project_uenv_r(L, x_to_y(p))
            cache[key] = hit
        out = out + hit * c
    return out


# --------------------------------------------------------------------------
# Mirrored-form counterparts (no conversion through the x-normal form)
# --------------------------------------------------------------------------

def alpha_r_mirror(L: LieAlgebra, u: UEnvElement, prec: int) -> RPhaseElement:
    """The inclusion of the opposite enveloping algebra in mirrored form:
    a y-word is already normally ordered there, so this is free."""
    if u.alg != L.op():
        raise ValueError("alpha_r_mirror expects an element over the opposite algebra")
    return RPhaseElement(L, {k: TruncatedSeries.constant(L.n, c, prec)
                             for k, c in u.coeffs.items()}, prec)


def z_generator_mirror(L: LieAlgebra, mu: int, prec: int) -> RPhaseElement:
    """z_mu = sum_b O[b][mu] # y_b: already in mirrored normal form."""
    o = exp_c(L, prec, 1)
    coeffs = {}
    for b in range(L.n):
        s = o[b, mu]
        if not s.is_zero():
            k = [0] * L.n
            k[b] = 1
            coeffs[tuple(k)] = s
    return RPhaseElement(L, coeffs, prec)


def beta_r_mirror(L: LieAlgebra, u: UEnvElement, prec: int) -> RPhaseElement:
    """Mirrored-form target map: the antihomomorphism y_mu -> z_mu."""
    if u.alg != L.op():
        raise ValueError("beta_r_mirror expects an element over the opposite algebra")
    zgens = [z_generator_mirror(L, mu, prec) for mu in range(L.n)]
    out = RPhaseElement.zero(L, prec - max(u.degree() - 1, 0))
    for k, c in u.coeffs.items():
        word = word_of(k)[::-1]
        term = None
        for a in word:
            term = zgens[a] if term is None else r_multiply(term, zgens[a])
        if term is None:
            term = RPhaseElement.from_series(L, TruncatedSeries.constant(L.n, 1, prec))
        out = out + term * c
    return out


def black_right_mirror(u: UEnvElement, rh: RPhaseElement) -> UEnvElement:
    """u <| rh computed entirely in the mirrored kernel.

    Costs only deg(u) of rh's precision: the included y-word multiplies a
    mirrored normal form from the left, no conversion happens.
    """
    L = rh.alg
    if u.is_zero():
        return UEnvElement(L.op(), {})
    if rh.prec < u.degree():
        raise InsufficientPrecisionError(u.degree(), rh.prec, "right black action",
                                         min_order=u.degree())
    out = UEnvElement(L.op(), {})
    cache = L._action_cache
    for k, c in u.coeffs.items():
        key = ("brm", k, rh)
        hit = cache.get(key)
        if hit is None:
            word = RPhaseElement(
                L, {k: TruncatedSeries.constant(L.n, 1, rh.prec + mi_total(k))},
                rh.prec + mi_total(k))
            hit = _project_uenv_r(L, r_multiply(word, rh))
            cache[key] = hit
        out = out + hit * c
    return out


def counit_r_mirror(rh: RPhaseElement) -> UEnvElement:
    """eps_R on a mirrored normal form: constant series terms, y-words kept."""
    return _project_uenv_r(rh.alg, rh)


def antipode_mirror(rh: RPhaseElement) -> PhaseElement:
    """The antipode evaluated on a mirrored normal form.

    S(Q # y-word) = (reversed x-word) * Q(-d): the y-letters map straight to
    x-letters, so no transition-matrix series enter and no precision is
    spent beyond the straightening of the reversed word.
    """
    L = rh.alg
    out = PhaseElement.zero(L, rh.prec)
    for k, q in rh.coeffs.items():
        word = UEnvElement.from_word(L, word_of(k)[::-1])
        out = out + h_multiply(alpha_l(L, word, rh.prec),
                               PhaseElement.from_series(L, q.substitute_negated()))
    return out


def counit_r(h: PhaseElement) -> UEnvElement:
    """eps_R(h) = 1 <| h, in the opposite enveloping algebra."""
    return _project_uenv_r(h.alg, x_to_y(h))
