"""
Exact sparse linear algebra over the rationals.

Coefficients are ``fractions.Fraction`` (arbitrary-precision, always in
lowest terms with positive denominator), so ranks, nullspaces and solves are
exact.  No floating point is used anywhere in this module.

Subspaces are kept in reduced row echelon form, which is canonical: two
subspaces are equal exactly when their stored bases are equal, independent
of the order the spanning vectors arrived in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "Rational",
    "format_rational",
    "parse_rational",
    "NoSolutionError",
    "NonUniqueSolutionError",
    "SparseVector",
    "Subspace",
    "span",
    "rank",
    "contains",
    "nullspace",
    "solve_affine",
    "coordinates_in_span",
    "modular_rank",
    "is_probable_prime",
    "random_prime",
]

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def format_rational(x: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


class NoSolutionError(Exception):
    """The linear system is inconsistent."""


class NonUniqueSolutionError(Exception):
    """The solution set is positive-dimensional."""


@dataclass(frozen=True)
class SparseVector:
    """A vector with only its nonzero entries stored.

    Treated as immutable; all operations return new vectors.
    """

    dimension: int
    entries: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for j, c in self.entries.items():
            if not 0 <= j < self.dimension:
                raise ValueError(f"index {j} outside dimension {self.dimension}")
            c = Fraction(c)
            if c:
                clean[j] = c
        object.__setattr__(self, "entries", clean)

    def is_zero(self) -> bool:
        return not self.entries

    def get(self, j: int) -> Fraction:
        return self.entries.get(j, _ZERO)

    def __add__(self, other: "SparseVector") -> "SparseVector":
        self._check(other)
        out = dict(self.entries)
        _axpy(out, other.entries, Fraction(-1))
        return SparseVector(self.dimension, out)

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        self._check(other)
        out = dict(self.entries)
        _axpy(out, other.entries, _ONE)
        return SparseVector(self.dimension, out)

    def scaled(self, c) -> "SparseVector":
        c = Fraction(c)
        if not c:
            return SparseVector(self.dimension, {})
        return SparseVector(self.dimension, {j: c * v for j, v in self.entries.items()})

    def dot(self, other: "SparseVector") -> Fraction:
        self._check(other)
        small, big = self.entries, other.entries
        if len(big) < len(small):
            small, big = big, small
        return sum((c * big[j] for j, c in small.items() if j in big), _ZERO)

    def _check(self, other: "SparseVector") -> None:
        if self.dimension != other.dimension:
            raise ValueError(
                f"dimension mismatch: {self.dimension} vs {other.dimension}"
            )


def _axpy(v: dict, row: Mapping[int, Fraction], c: Fraction) -> None:
    # v -= c * row, dropping entries that cancel
    for j, r in row.items():
        nv = v.get(j, _ZERO) - c * r
        if nv:
            v[j] = nv
        else:
            v.pop(j, None)


class _Echelon:
    """Incremental reduced row echelon form over Fraction entries.

    Invariant: each stored row has leading coefficient 1 at its pivot and no
    entry at any other pivot, so reducing a vector is a single pass over its
    pivot-indexed entries.
    """

    def __init__(self, dimension: int):
        self.dimension = dimension
        self.rows: dict[int, dict[int, Fraction]] = {}

    def reduce(self, v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out = dict(v)
        for p in [j for j in out if j in self.rows]:
            c = out.pop(p)
            row = self.rows[p]
            for j, r in row.items():
                if j == p:
                    continue
                nv = out.get(j, _ZERO) - c * r
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
        return out

    def insert(self, v: Mapping[int, Fraction]) -> int | None:
        """Reduce ``v`` against the basis; absorb the remainder if nonzero.

        Returns the new pivot index, or None if ``v`` was dependent.
        """
        red = self.reduce(v)
        if not red:
            return None
        p = min(red)
        inv = _ONE / red[p]
        row = {j: c * inv for j, c in red.items()}
        for other in self.rows.values():
            if p in other:
                _axpy(other, row, other[p])
        self.rows[p] = row
        return p

    @property
    def dim(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Subspace:
    """A subspace held as a reduced row echelon basis (canonical form)."""

    ambient_dimension: int
    basis: tuple[SparseVector, ...]
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: SparseVector) -> bool:
        return contains(self, v)


def _subspace_from_echelon(ech: _Echelon) -> Subspace:
    pivots = tuple(sorted(ech.rows))
    basis = tuple(SparseVector(ech.dimension, ech.rows[p]) for p in pivots)
    return Subspace(ech.dimension, basis, pivots)


def _common_dimension(vectors: Iterable[SparseVector]) -> tuple[list[SparseVector], int]:
    vs = list(vectors)
    if not vs:
        raise ValueError("no vectors and no ambient dimension given")
    dim = vs[0].dimension
    for v in vs:
        if v.dimension != dim:
            raise ValueError(f"dimension mismatch: {v.dimension} vs {dim}")
    return vs, dim


def span(vectors: Iterable[SparseVector], dimension: int | None = None) -> Subspace:
    """Reduced row echelon basis of the span, computed exactly."""
    vs = list(vectors)
    if dimension is None:
        vs, dimension = _common_dimension(vs)
    ech = _Echelon(dimension)
    for v in vs:
        if v.dimension != dimension:
            raise ValueError(f"dimension mismatch: {v.dimension} vs {dimension}")
        ech.insert(v.entries)
    return _subspace_from_echelon(ech)


def rank(vectors: Iterable[SparseVector], dimension: int | None = None) -> int:
    return span(vectors, dimension).dim


def contains(space: Subspace, v: SparseVector) -> bool:
    """True iff ``v`` reduces to zero against the echelon basis."""
    if space.ambient_dimension != v.dimension:
        raise ValueError(
            f"dimension mismatch: {space.ambient_dimension} vs {v.dimension}"
        )
    ech = _Echelon(space.ambient_dimension)
    ech.rows = {p: dict(b.entries) for p, b in zip(space.pivots, space.basis)}
    return not ech.reduce(v.entries)


def nullspace(vectors: Iterable[SparseVector], dimension: int) -> Subspace:
    """The space of x with ``row . x = 0`` for every input row."""
    ech = _Echelon(dimension)
    for v in vectors:
        if v.dimension != dimension:
            raise ValueError(f"dimension mismatch: {v.dimension} vs {dimension}")
        ech.insert(v.entries)
    pivots = set(ech.rows)
    raw = []
    for f in range(dimension):
        if f in pivots:
            continue
        vec = {f: _ONE}
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                vec[p] = -c
        raw.append(SparseVector(dimension, vec))
    return span(raw, dimension)


def solve_affine(
    constraints: Iterable[tuple[SparseVector, Fraction]],
    unknowns_basis: list[SparseVector],
) -> SparseVector:
    """The unique x in the span of ``unknowns_basis`` with
    ``constraint . x = value`` for every pair.

    Raises NoSolutionError if the system is inconsistent and
    NonUniqueSolutionError if the solution set is positive-dimensional.
    """
    if not unknowns_basis:
        raise ValueError("empty unknowns basis")
    _, dim = _common_dimension(unknowns_basis)
    k = len(unknowns_basis)
    # Column k holds the negated right-hand side; a solution c is then a
    # nullvector of the augmented rows with last coordinate 1.
    ech = _Echelon(k + 1)
    for cvec, value in constraints:
        if cvec.dimension != dim:
            raise ValueError(f"dimension mismatch: {cvec.dimension} vs {dim}")
        row = {}
        for j, u in enumerate(unknowns_basis):
            c = cvec.dot(u)
            if c:
                row[j] = c
        value = Fraction(value)
        if value:
            row[k] = -value
        ech.insert(row)
    if k in ech.rows:
        raise NoSolutionError("inconsistent constraint system")
    if len(ech.rows) < k:
        raise NonUniqueSolutionError("solution set is positive-dimensional")
    out: dict[int, Fraction] = {}
    for p, row in ech.rows.items():
        c = -row.get(k, _ZERO)
        if c:
            _axpy(out, unknowns_basis[p].entries, -c)
    return SparseVector(dim, out)


def coordinates_in_span(
    basis: list[SparseVector], target: SparseVector
) -> list[Fraction]:
    """Coefficients c with ``sum(c_k * basis[k]) == target``.

    The basis must be linearly independent (NonUniqueSolutionError otherwise);
    NoSolutionError if the target is outside the span.
    """
    vs, dim = _common_dimension(basis)
    if target.dimension != dim:
        raise ValueError(f"dimension mismatch: {target.dimension} vs {dim}")
    # Track combinations through elimination with a tail of k extra columns.
    k = len(vs)
    ech = _Echelon(dim + k)
    for j, v in enumerate(vs):
        aug = dict(v.entries)
        aug[dim + j] = _ONE
        p = ech.insert(aug)
        if p is not None and p >= dim:
            raise NonUniqueSolutionError("basis vectors are linearly dependent")
    red = ech.reduce(target.entries)
    if any(j < dim for j in red):
        raise NoSolutionError("target is outside the span")
    return [-red.get(dim + j, _ZERO) for j in range(k)]


# ---------------------------------------------------------------------------
# Modular fast path.  Used only as a pre-check: the exact elimination above
# is always the final answer.

def modular_rank(vectors: Iterable[SparseVector], prime: int,
                 dimension: int | None = None) -> int:
    """Rank of the vectors reduced modulo ``prime``.

    A lower bound for the exact rank; equality can fail only when the prime
    divides a nonzero minor.
    """
    vs = list(vectors)
    if dimension is None:
        vs, dimension = _common_dimension(vs)
    # Same reduced-echelon invariant as _Echelon, over Z/prime.
    rows: dict[int, dict[int, int]] = {}
    for v in vs:
        out = {}
        for j, c in v.entries.items():
            if c.denominator % prime == 0:
                raise ValueError("denominator divisible by the chosen prime")
            r = c.numerator * pow(c.denominator, -1, prime) % prime
            if r:
                out[j] = r
        for p in [j for j in out if j in rows]:
            c = out.pop(p)
            for j, r in rows[p].items():
                if j == p:
                    continue
                nv = (out.get(j, 0) - c * r) % prime
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
        if not out:
            continue
        p = min(out)
        inv = pow(out[p], -1, prime)
        new = {j: c * inv % prime for j, c in out.items()}
        for other in rows.values():
            if p in other:
                c = other.pop(p)
                for j, r in new.items():
                    if j == p:
                        continue
                    nv = (other.get(j, 0) - c * r) % prime
                    if nv:
                        other[j] = nv
                    else:
                        other.pop(j, None)
        rows[p] = new
    return len(rows)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(m: int) -> bool:
    """Miller-Rabin; deterministic for m < 2**64 with the fixed base set."""
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def random_prime(bits: int = 62, seed: int = 0) -> int:
    """A prime with the given bit length, deterministic for a fixed seed."""
    import random

    rng = random.Random(seed)
    while True:
        candidate = rng.getrandbits(bits - 1) | (1 << (bits - 1)) | 1
        if is_probable_prime(candidate):
            return candidate
