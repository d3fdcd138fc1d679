"""Lie algebra input: structure constants, validation, opposites, built-ins.

A Lie algebra is given by its dimension n and the sparse table of structure
constants C^lam_{mu,nu} for the bracket [x_mu, x_nu] = C^lam_{mu,nu} x_lam.
Indices are 0-based internally; user-facing renderings are 1-based (x1..xn).

Definition files are JSON with fields ``dim``, optional ``basis`` (names) and
``brackets``, a list of entries [mu, nu, lam, "p/q"] meaning
C^lam_{mu,nu} = p/q.  Indices in files may be 0-based integers or basis
names.  Entries not listed are filled in by antisymmetry or are zero; a file
that states both (mu,nu,lam) and (nu,mu,lam) inconsistently is rejected.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .core_arith import as_rational

DEFAULT_DIM_BOUND = 6


class ValidationReport:
    """Outcome of structure-constant validation.

    ``failures`` holds (kind, indices, residual) triples where kind is
    "antisymmetry" or "jacobi", indices is the first violating index tuple
    (0-based) and residual the nonzero exact value found there.
    """

    def __init__(self, failures):
        self.failures = list(failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self):
        if self.ok:
            return "ValidationReport(ok)"
        kind, idx, res = self.failures[0]
        return f"ValidationReport({kind} fails at {idx}: residual {res})"


class LieAlgebra:
    """Immutable container for structure constants plus derived caches.

    The caches (straightening table, deformation matrices, dual bases) are
    owned by the instance and filled lazily; all public state is frozen after
    construction.
    """

    def __init__(self, n: int, structure=None, labels=None, dim_bound: int = DEFAULT_DIM_BOUND):
        if not 1 <= n <= dim_bound:
            raise ValueError(f"dimension {n} outside 1..{dim_bound} "
                             f"(raise dim_bound to go further)")
        self.n = n
        table = {}
        for (mu, nu, lam), c in (structure or {}).items():
            c = as_rational(c)
            if c == 0:
                continue
            for i in (mu, nu, lam):
                if not 0 <= i < n:
                    raise ValueError(f"index {i} out of range for dimension {n}")
            table[(mu, nu, lam)] = c
        self.structure = table
        self.labels = tuple(labels) if labels else tuple(f"x{i+1}" for i in range(n))
        if len(self.labels) != n:
            raise ValueError("label count does not match dimension")
        # per-instance memo tables; see the modules that fill them
        self._brackets: dict = {}
        self._straighten_cache: dict = {}
        self._matrix_cache: dict = {}
        self._dual_cache: dict = {}
        self._action_cache: dict = {}
        self._opposite: "LieAlgebra | None" = None

    def op(self) -> "LieAlgebra":
        """The opposite algebra, cached so its memo tables persist too."""
        if self._opposite is None:
            other = opposite(self)
            other._opposite = self
            self._opposite = other
        return self._opposite

    def c(self, mu: int, nu: int, lam: int) -> Fraction:
        return self.structure.get((mu, nu, lam), Fraction(0))

    def bracket(self, mu: int, nu: int) -> dict:
        """[x_mu, x_nu] as a sparse map lam -> coefficient."""
        key = (mu, nu)
        out = self._brackets.get(key)
        if out is None:
            out = {}
            for lam in range(self.n):
                c = self.c(mu, nu, lam)
                if c:
                    out[lam] = c
            self._brackets[key] = out
        return out

    def is_abelian(self) -> bool:
        return not self.structure

    def __eq__(self, other):
        return (isinstance(other, LieAlgebra)
                and self.n == other.n and self.structure == other.structure)

    def __repr__(self):
        return f"LieAlgebra(n={self.n}, {len(self.structure)} nonzero constants)"


def validate(L: LieAlgebra) -> ValidationReport:
    """Check antisymmetry and the Jacobi identity exactly.

    Returns a report rather than raising: rejecting bad input with a witness
    is part of the normal API surface.
    """
    failures = []
    n = L.n
    for mu in range(n):
        for nu in range(n):
            for lam in range(n):
                r = L.c(mu, nu, lam) + L.c(nu, mu, lam)
                if r != 0:
                    failures.append(("antisymmetry", (mu, nu, lam), r))
    if failures:
        return ValidationReport(failures[:1])
    for mu in range(n):
        for nu in range(n):
            for lam in range(n):
                for rho in range(n):
                    r = sum((L.c(mu, nu, s) * L.c(s, lam, rho)
                             + L.c(nu, lam, s) * L.c(s, mu, rho)
                             + L.c(lam, mu, s) * L.c(s, nu, rho))
                            for s in range(n))
                    if r != 0:
                        return ValidationReport([("jacobi", (mu, nu, lam, rho), r)])
    return ValidationReport([])


def opposite(L: LieAlgebra) -> LieAlgebra:
    """The opposite Lie algebra: same space, bracket negated."""
    return LieAlgebra(L.n, {k: -c for k, c in L.structure.items()},
                      labels=L.labels, dim_bound=max(L.n, DEFAULT_DIM_BOUND))


def trace_vector(L: LieAlgebra):
    """t_mu = sum_lam C^lam_{mu,lam}, the trace of the adjoint action of x_mu.

    This vector is exactly the shift appearing in the square of the
    antipode, and it annihilates the deformation matrix: t.C = 0 follows
    from the Jacobi identity (the bracket of two elements is traceless).
    """
    return tuple(sum((L.c(mu, lam, lam) for lam in range(L.n)), Fraction(0))
                 for mu in range(L.n))


# --------------------------------------------------------------------------
# Built-in examples
# --------------------------------------------------------------------------

def builtin(name: str) -> LieAlgebra:
    """Construct a named example algebra; accepts 'abelian:3' or 'abelian(3)'.

    Known names: abelian(n), heisenberg3, sl2, solvable2, kappa(n).
    kappa(n) has C^i_{0i} = 1 = -C^i_{i0} for i = 1..n-1 (so solvable2 is
    kappa(2)); sl2 uses the cyclic basis with C^3_{12} = C^1_{23} = C^2_{31} = 1.
    """
    m = re.fullmatch(r"([a-zA-Z][a-zA-Z0-9_]*?)(?:[:(](\d+)\)?)?", name.strip())
    if not m:
        raise ValueError(f"unknown builtin Lie algebra: {name!r}")
    base, arg = m.group(1), m.group(2)

    if base == "abelian":
        n = int(arg) if arg else 2
        L = LieAlgebra(n, {})
    elif base == "heisenberg3" or (base == "heisenberg" and (arg in (None, "3"))):
        L = LieAlgebra(3, {(0, 1, 2): 1, (1, 0, 2): -1})
    elif base == "sl2":
        L = LieAlgebra(3, {
            (0, 1, 2): 1, (1, 0, 2): -1,
            (1, 2, 0): 1, (2, 1, 0): -1,
            (2, 0, 1): 1, (0, 2, 1): -1,
        })
    elif base == "solvable2":
        L = builtin("kappa:2")
    elif base == "kappa":
        n = int(arg) if arg else 2
        structure = {}
        for i in range(1, n):
            structure[(0, i, i)] = 1
            structure[(i, 0, i)] = -1
        L = LieAlgebra(n, structure)
    else:
        raise ValueError(f"unknown builtin Lie algebra: {name!r}")

    report = validate(L)
    assert report.ok, f"builtin {name} failed validation: {report}"
    return L


BUILTIN_NAMES = ("abelian(n)", "heisenberg3", "sl2", "solvable2", "kappa(n)")


# --------------------------------------------------------------------------
# Definition files
# --------------------------------------------------------------------------

def parse_algebra(text: str) -> LieAlgebra:
    data = json.loads(text)
    if not isinstance(data, dict) or "dim" not in data:
        raise ValueError("algebra file must be a JSON object with a 'dim' field")
    n = int(data["dim"])
    labels = data.get("basis")
    if labels is not None and len(labels) != n:
        raise ValueError("'basis' length does not match 'dim'")

    def index_of(v):
        if isinstance(v, int):
            return v
        if isinstance(v, str) and labels and v in labels:
            return labels.index(v)
        raise ValueError(f"unknown basis reference {v!r}")

    structure: dict = {}
    for entry in data.get("brackets", []):
        if len(entry) != 4:
            raise ValueError(f"bracket entry must be [mu, nu, lam, coeff]: {entry!r}")
        mu, nu, lam = (index_of(v) for v in entry[:3])
        c = as_rational(entry[3] if not isinstance(entry[3], float) else None)
        for key, val in (((mu, nu, lam), c), ((nu, mu, lam), -c)):
            old = structure.get(key)
            if old is not None and old != val:
                raise ValueError(f"contradictory duplicate for C^{key[2]}_({key[0]},{key[1]}): "
                                 f"{old} vs {val}")
            structure[key] = val
    return LieAlgebra(n, structure, labels=labels)


def load_algebra(path: str) -> LieAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read())
