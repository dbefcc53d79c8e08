"""Exact linear algebra over the rationals and prime fields.

Scalars are plain Python values: ``int`` residues in ``[0, p)`` for GF(p) and
``fractions.Fraction`` for Q. Vectors are tuples of scalars, matrices are
tuples of row vectors. Subspaces are stored by their reduced row-echelon
basis, which makes equality and hashing canonical.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence, Union

from .errors import CapExceededError, FieldMismatchError, PreconditionError

Scalar = Union[int, Fraction]
Vector = tuple
Matrix = tuple

DEFAULT_CAP = 7


def default_cap() -> int:
    """Enumeration dimension cap: ``NLIE_CAP`` if set, else 7."""
    env = os.environ.get("NLIE_CAP")
    return int(env) if env else DEFAULT_CAP


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % f for f in range(3, math.isqrt(n) + 1, 2))


@dataclass(frozen=True)
class Field:
    """Q when ``modulus`` is None, GF(p) otherwise."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and not _is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")

    @classmethod
    def rationals(cls) -> Field:
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> Field:
        return cls(p)

    @classmethod
    def from_spec(cls, spec: str) -> Field:
        """Parse ``q`` or ``gf:<p>`` (``gf <p>`` is accepted too)."""
        text = spec.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls.rationals()
        for sep in (":", " "):
            head, _, tail = text.partition(sep)
            if head == "gf" and tail.strip().isdigit():
                return cls.gf(int(tail))
        raise ValueError(f"unknown field spec {spec!r}")

    @property
    def is_finite(self) -> bool:
        return self.modulus is not None

    @property
    def characteristic(self) -> int:
        return self.modulus or 0

    @property
    def spec(self) -> str:
        return "q" if self.modulus is None else f"gf:{self.modulus}"

    def __str__(self) -> str:
        return "Q" if self.modulus is None else f"GF({self.modulus})"

    def __call__(self, x) -> Scalar:
        """Coerce ``x`` (int, Fraction or numeric string) into the field."""
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise TypeError("floating-point scalars are not supported")
        p = self.modulus
        if p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({p})")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def inv(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.modulus is None:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.modulus)

    def elements(self) -> range:
        if self.modulus is None:
            raise PreconditionError("enumeration requires a finite field")
        return range(self.modulus)

    def parse(self, text: str) -> Scalar:
        text = text.strip()
        try:
            value = Fraction(text)
        except ValueError:
            raise ValueError(f"bad scalar {text!r}") from None
        if "." in text or "e" in text.lower():
            raise ValueError(f"bad scalar {text!r}: use integers or a/b")
        return self(value)

    def render(self, x: Scalar) -> str:
        if self.modulus is not None:
            return str(int(x))
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def vector(self, values: Iterable) -> Vector:
        return tuple(self(v) for v in values)

    def zero_vector(self, d: int) -> Vector:
        return (self.zero,) * d

    def unit_vector(self, d: int, i: int) -> Vector:
        """Standard basis vector with a one at 0-based position ``i``."""
        v = [self.zero] * d
        v[i] = self.one
        return tuple(v)


# -- vector and matrix helpers -------------------------------------------------


def add_scaled(w: Sequence, x: Scalar, v: Sequence, field: Field) -> Vector:
    """Return ``w + x * v``."""
    p = field.modulus
    if p is None:
        return tuple(a + x * b for a, b in zip(w, v))
    return tuple((a + x * b) % p for a, b in zip(w, v))


def scale(x: Scalar, v: Sequence, field: Field) -> Vector:
    p = field.modulus
    if p is None:
        return tuple(x * a for a in v)
    return tuple(x * a % p for a in v)


def lin_comb(coeffs: Sequence, vectors: Sequence[Sequence], field: Field, d: int) -> Vector:
    acc = field.zero_vector(d)
    for c, v in zip(coeffs, vectors):
        if c:
            acc = add_scaled(acc, c, v, field)
    return acc


def is_zero(v: Sequence) -> bool:
    return not any(v)


def mat_vec(m: Sequence[Sequence], v: Sequence, field: Field) -> Vector:
    p = field.modulus
    if p is None:
        return tuple(sum(a * b for a, b in zip(row, v)) for row in m)
    return tuple(sum(a * b for a, b in zip(row, v)) % p for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence], field: Field) -> Matrix:
    cols = list(zip(*b))
    return tuple(mat_vec(cols, row, field) for row in a)


def transpose(m: Sequence[Sequence]) -> Matrix:
    return tuple(zip(*m))


def identity(d: int, field: Field) -> Matrix:
    return tuple(field.unit_vector(d, i) for i in range(d))


@lru_cache(maxsize=None)
def _signed_permutations(n: int) -> tuple:
    out = []
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        out.append((perm, -1 if inversions % 2 else 1))
    return tuple(out)


def det(m: Sequence[Sequence], field: Field) -> Scalar:
    """Leibniz determinant; adequate for the small arities seen in practice."""
    n = len(m)
    total = 0
    for perm, sign in _signed_permutations(n):
        term = sign
        for i, j in enumerate(perm):
            x = m[i][j]
            if not x:
                break
            term *= x
        else:
            total += term
    return field(total)


def rref_with_pivots(rows: Sequence[Sequence], field: Field, ncols: int | None = None):
    """Gauss-Jordan elimination. Returns ``(nonzero_rows, pivot_columns)``."""
    rows = [list(map(field, r)) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise FieldMismatchError("ragged matrix: rows of unequal length")
    p = field.modulus
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        if p is None:
            top = [x * inv for x in rows[r]]
        else:
            top = [x * inv % p for x in rows[r]]
        rows[r] = top
        for i in range(len(rows)):
            f = rows[i][c]
            if i != r and f:
                if p is None:
                    rows[i] = [a - f * b for a, b in zip(rows[i], top)]
                else:
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], top)]
        pivots.append(c)
        r += 1
    return tuple(tuple(x) for x in rows[:r]), tuple(pivots)


def rref(rows: Sequence[Sequence], field: Field, ncols: int | None = None) -> Matrix:
    """Unique reduced row-echelon form with zero rows dropped."""
    return rref_with_pivots(rows, field, ncols)[0]


def rank(rows: Sequence[Sequence], field: Field, ncols: int | None = None) -> int:
    return len(rref_with_pivots(rows, field, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, field: Field) -> list[Vector]:
    """Basis of ``{x : M x = 0}`` read off the RREF of ``M``, one vector per free column."""
    reduced, pivots = rref_with_pivots(rows, field, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [field.zero] * ncols
        x[f] = field.one
        for row, c in zip(reduced, pivots):
            x[c] = field(-row[f])
        basis.append(tuple(x))
    return basis


# -- subspaces -----------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field^ambient_dim`` held by its canonical RREF basis.

    Build with :meth:`span` unless the basis is already canonical.
    """

    field: Field
    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence] = ()) -> Subspace:
        vectors = list(vectors)
        if any(len(v) != ambient_dim for v in vectors):
            raise FieldMismatchError("vector length does not match ambient dimension")
        return cls(field, ambient_dim, rref(vectors, field, ambient_dim))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, identity(ambient_dim, field))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - len(self.basis)

    @cached_property
    def pivots(self) -> tuple:
        return tuple(next(i for i, x in enumerate(row) if x) for row in self.basis)

    @cached_property
    def free_columns(self) -> tuple:
        """Non-pivot coordinates; their unit vectors span a complement."""
        piv = set(self.pivots)
        return tuple(c for c in range(self.ambient_dim) if c not in piv)

    @property
    def sort_key(self):
        return (len(self.basis), self.basis)

    def _check(self, other: Subspace) -> None:
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise FieldMismatchError(
                f"subspaces of {self.field}^{self.ambient_dim} and {other.field}^{other.ambient_dim}"
            )

    def reduce(self, v: Sequence) -> Vector:
        """Residue of ``v`` modulo this subspace (zero iff ``v`` is a member)."""
        p = self.field.modulus
        w = tuple(v)
        for row, c in zip(self.basis, self.pivots):
            x = w[c]
            if x:
                if p is None:
                    w = tuple(a - x * b for a, b in zip(w, row))
                else:
                    w = tuple((a - x * b) % p for a, b in zip(w, row))
        return w

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the canonical basis."""
        if any(self.reduce(v)):
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def combine(self, coords: Sequence) -> Vector:
        return lin_comb(coords, self.basis, self.field, self.ambient_dim)

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return len(self.basis) <= len(other.basis) and all(b in other for b in self.basis)

    def __lt__(self, other: Subspace) -> bool:
        return len(self.basis) < len(other.basis) and self <= other

    def __ge__(self, other: Subspace) -> bool:
        return other <= self

    def __gt__(self, other: Subspace) -> bool:
        return other < self

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)

    def members(self) -> list[Vector]:
        """Every vector of the subspace (finite fields only)."""
        p = self.field.modulus
        if p is None:
            raise PreconditionError("enumeration requires a finite field")
        vecs = [(0,) * self.ambient_dim]
        for b in self.basis:
            vecs = [
                tuple((x + c * y) % p for x, y in zip(v, b)) for v in vecs for c in range(p)
            ]
        return vecs

    @cached_property
    def member_mask(self) -> int:
        """Bitmask over :func:`vector_index` of all members."""
        p = self.field.modulus
        mask = 0
        for v in self.members():
            mask |= 1 << vector_index(v, p)
        return mask

    def rows(self) -> list[list[str]]:
        return [[self.field.render(x) for x in row] for row in self.basis]

    def __repr__(self) -> str:
        return f"Subspace({self.field}, d={self.ambient_dim}, basis={self.rows()})"


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    u._check(v)
    if not v.basis:
        return u
    if not u.basis:
        return v
    return Subspace.span(u.field, u.ambient_dim, u.basis + v.basis)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Zassenhaus: reduce ``[u|u]`` stacked on ``[v|0]``; rows ``[0|w]`` span the intersection."""
    u._check(v)
    d = u.ambient_dim
    if not u.basis or not v.basis:
        return Subspace.zero(u.field, d)
    zero = u.field.zero_vector(d)
    stacked = [tuple(b) + tuple(b) for b in u.basis] + [tuple(b) + zero for b in v.basis]
    reduced, pivots = rref_with_pivots(stacked, u.field, 2 * d)
    tail = [row[d:] for row, c in zip(reduced, pivots) if c >= d]
    return Subspace.span(u.field, d, tail)


def vector_index(v: Sequence[int], p: int) -> int:
    """Integer code of a GF(p) vector (base-p digits, first coordinate lowest)."""
    idx = 0
    for x in reversed(v):
        idx = idx * p + x
    return idx


def index_vector(idx: int, p: int, d: int) -> Vector:
    out = []
    for _ in range(d):
        idx, r = divmod(idx, p)
        out.append(r)
    return tuple(out)


def all_vectors(field: Field, d: int) -> Iterator[Vector]:
    """Every vector of GF(p)^d in :func:`vector_index` order."""
    p = field.modulus
    if p is None:
        raise PreconditionError("enumeration requires a finite field")
    for idx in range(p**d):
        yield index_vector(idx, p, d)


# -- enumeration ---------------------------------------------------------------


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def galois_number(n: int, q: int) -> int:
    """Total number of subspaces of GF(q)^n."""
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def _rref_bases(d: int, k: int, p: int) -> Iterator[tuple]:
    for pivots in itertools.combinations(range(d), k):
        pivset = set(pivots)
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, d) if c not in pivset]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * d for _ in range(k)]
            for r, c in enumerate(pivots):
                rows[r][c] = 1
            for (r, c), x in zip(free, values):
                rows[r][c] = x
            yield tuple(tuple(row) for row in rows)


def enumerate_subspaces(
    ambient_dim: int, field: Field, cap: int | None = None, dims: Iterable[int] | None = None
) -> Iterator[Subspace]:
    """Every subspace of GF(p)^d exactly once.

    Order: dimension ascending, then lexicographic on the canonical basis.
    ``dims`` restricts to the listed dimensions (still in that order).
    """
    if not field.is_finite:
        raise PreconditionError("enumeration requires a finite field")
    cap = default_cap() if cap is None else cap
    if ambient_dim > cap:
        raise CapExceededError(f"ambient dimension {ambient_dim} exceeds enumeration cap {cap}")
    wanted = range(ambient_dim + 1) if dims is None else sorted(set(dims))
    for k in wanted:
        if 0 <= k <= ambient_dim:
            for basis in sorted(_rref_bases(ambient_dim, k, field.modulus)):
                yield Subspace(field, ambient_dim, basis)


def inverse(m: Sequence[Sequence], field: Field) -> Matrix:
    """Inverse of a square matrix via Gauss-Jordan on ``[m | I]``."""
    d = len(m)
    aug = [tuple(row) + e for row, e in zip(m, identity(d, field))]
    reduced, pivots = rref_with_pivots(aug, field, 2 * d)
    if pivots != tuple(range(d)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(row[d:] for row in reduced)
