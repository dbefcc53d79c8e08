"""n-Lie algebras given by structure constants.

The table stores ``[e_{i1}, ..., e_{in}]`` only for strictly increasing
0-based index tuples; every other ordering is recovered from the sign of the
sorting permutation, so total antisymmetry holds by construction and only
the fundamental identity needs checking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Mapping, NamedTuple, Sequence

from .errors import FieldMismatchError, PreconditionError
from .linalg import (
    Field,
    Subspace,
    Vector,
    add_scaled,
    det,
    inverse,
    is_zero,
    lin_comb,
    mat_vec,
    scale,
    transpose,
)


def sort_with_sign(indices: Sequence[int]) -> tuple[int, tuple]:
    """Sort ``indices``; return ``(sign, sorted)`` with sign 0 on a repeat."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, tuple(sorted(idx))
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


@dataclass(frozen=True)
class NLieAlgebra:
    """Finite-dimensional n-Lie algebra over Q or GF(p).

    ``table`` is a sorted tuple of ``(increasing 0-based tuple, vector)``
    pairs with nonzero vectors; use :meth:`from_products` for 1-based input.
    """

    arity: int
    dim: int
    field: Field
    table: tuple = ()

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError("arity must be at least 2")
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        normal = {}
        for key, vec in self.table:
            key = tuple(key)
            if len(key) != self.arity:
                raise ValueError(f"product {key} does not have {self.arity} indices")
            if any(i < 0 or i >= self.dim for i in key):
                raise ValueError(f"index out of range in {key}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise ValueError(f"indices must be strictly increasing: {key}")
            if len(vec) != self.dim:
                raise ValueError(f"product {key} has a vector of the wrong length")
            if key in normal:
                raise ValueError(f"duplicate product {key}")
            vec = self.field.vector(vec)
            if any(vec):
                normal[key] = vec
        object.__setattr__(self, "table", tuple(sorted(normal.items())))

    @classmethod
    def from_products(
        cls,
        arity: int,
        dim: int,
        field: Field,
        products: Mapping[Sequence[int], Sequence | Mapping[int, object]] = {},
        *,
        one_based: bool = True,
    ) -> NLieAlgebra:
        """Build from ``{(i1, ..., in): value}``.

        Keys may be in any order (the sign is absorbed). A value is either a
        full coordinate vector or a sparse ``{k: coefficient}`` mapping.
        """
        shift = 1 if one_based else 0
        acc: dict[tuple, Vector] = {}
        for key, value in products.items():
            sign, skey = sort_with_sign([i - shift for i in key])
            if sign == 0:
                raise ValueError(f"repeated index in {key}")
            if isinstance(value, Mapping):
                vec = [0] * dim
                for k, c in value.items():
                    vec[k - shift] = c
            else:
                vec = list(value)
            vec = field.vector(vec)
            if sign < 0:
                vec = scale(field(-1), vec, field)
            prev = acc.get(skey, field.zero_vector(dim))
            acc[skey] = add_scaled(prev, field.one, vec, field)
        return cls(arity, dim, field, tuple(acc.items()))

    @classmethod
    def abelian(cls, arity: int, dim: int, field: Field) -> NLieAlgebra:
        return cls(arity, dim, field, ())

    @cached_property
    def products(self) -> dict[tuple, Vector]:
        return dict(self.table)

    @property
    def is_abelian(self) -> bool:
        return not self.table

    def e(self, i: int) -> Vector:
        """1-based standard basis vector ``e_i``."""
        return self.field.unit_vector(self.dim, i - 1)

    def zero_vector(self) -> Vector:
        return self.field.zero_vector(self.dim)

    def basis_bracket(self, indices: Sequence[int]) -> Vector:
        """``[e_{i1}, ..., e_{in}]`` for 0-based indices in any order."""
        sign, key = sort_with_sign(indices)
        vec = self.products.get(key) if sign else None
        if vec is None:
            return self.zero_vector()
        return vec if sign > 0 else scale(self.field(-1), vec, self.field)

    @cached_property
    def ad(self) -> dict[tuple, tuple]:
        """``J -> (images of e_0..e_{d-1} under x -> [x, e_J])`` for increasing (n-1)-tuples."""
        out = {}
        for rest in itertools.combinations(range(self.dim), self.arity - 1):
            out[rest] = tuple(self.basis_bracket((i,) + rest) for i in range(self.dim))
        return out

    @cached_property
    def ad_matrices(self) -> dict[tuple, tuple]:
        """Same maps as :attr:`ad`, as row-major matrices acting on column vectors."""
        return {k: transpose(cols) for k, cols in self.ad.items()}

    def apply_ad(self, rest: tuple, v: Sequence) -> Vector:
        return lin_comb(v, self.ad[rest], self.field, self.dim)

    def restrict_field(self, field: Field) -> NLieAlgebra:
        """Same table read over another field (e.g. rational constants reduced mod p)."""
        if field == self.field:
            return self
        return NLieAlgebra(self.arity, self.dim, field, tuple((k, tuple(map(field, v))) for k, v in self.table))

    def __repr__(self) -> str:
        return f"NLieAlgebra(arity={self.arity}, dim={self.dim}, field={self.field}, products={len(self.table)})"


def _check_vector(a: NLieAlgebra, v: Sequence) -> Vector:
    if len(v) != a.dim:
        raise FieldMismatchError(f"vector of length {len(v)} in a {a.dim}-dimensional algebra")
    return a.field.vector(v)


def _check_subspace(a: NLieAlgebra, u: Subspace) -> None:
    if u.field != a.field or u.ambient_dim != a.dim:
        raise FieldMismatchError("subspace does not live in this algebra")


def bracket_eval(a: NLieAlgebra, args: Sequence[Sequence]) -> Vector:
    """Multilinear bracket of ``n`` coordinate vectors.

    Expanding every argument over the basis collapses to
    ``sum_T det(args restricted to columns T) * [e_T]`` over stored tuples T.
    """
    if len(args) != a.arity:
        raise ValueError(f"bracket takes {a.arity} arguments, got {len(args)}")
    args = [_check_vector(a, v) for v in args]
    f = a.field
    acc = a.zero_vector()
    for key, vec in a.table:
        minor = [[v[t] for t in key] for v in args]
        c = det(minor, f)
        if c:
            acc = add_scaled(acc, c, vec, f)
    return acc


# -- axiom validation ----------------------------------------------------------


class Violation(NamedTuple):
    xs: tuple  # 1-based indices of x_1..x_n
    ys: tuple  # 1-based indices of y_2..y_n
    residual: Vector


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple = ()


def fundamental_identity_residual(a: NLieAlgebra, xs: Sequence[Sequence], ys: Sequence[Sequence]) -> Vector:
    """``[[x1..xn], y2..yn] - sum_i [x1, .., [xi, y2..yn], .., xn]`` for arbitrary vectors."""
    ys = list(ys)
    lhs = bracket_eval(a, [bracket_eval(a, xs)] + ys)
    acc = lhs
    minus = a.field(-1)
    for i in range(a.arity):
        inner = bracket_eval(a, [xs[i]] + ys)
        term = bracket_eval(a, list(xs[:i]) + [inner] + list(xs[i + 1 :]))
        acc = add_scaled(acc, minus, term, a.field)
    return acc


def validate_algebra(a: NLieAlgebra, limit: int | None = None) -> ValidationReport:
    """Check the fundamental identity on basis tuples (enough by multilinearity).

    ``limit`` stops after that many violations have been collected.
    """
    n, d = a.arity, a.dim
    minus = a.field(-1)
    violations = []
    for xs in itertools.combinations(range(d), n):
        top = a.products.get(xs)
        for ys in itertools.combinations(range(d), n - 1):
            img = a.ad[ys]
            lhs = lin_comb(top, img, a.field, d) if top else a.zero_vector()
            acc = lhs
            for k in range(n):
                w = img[xs[k]]
                for m, c in enumerate(w):
                    if c:
                        term = a.basis_bracket(xs[:k] + (m,) + xs[k + 1 :])
                        acc = add_scaled(acc, minus * c, term, a.field)
            if any(acc):
                violations.append(
                    Violation(tuple(i + 1 for i in xs), tuple(i + 1 for i in ys), acc)
                )
                if limit is not None and len(violations) >= limit:
                    return ValidationReport(False, tuple(violations))
    return ValidationReport(not violations, tuple(violations))


# -- subspaces inside an algebra -----------------------------------------------


class BracketWitness(NamedTuple):
    args: tuple
    value: Vector


@dataclass(frozen=True)
class SubspaceRole:
    is_subalgebra: bool
    is_ideal: bool
    is_abelian_ideal: bool
    witness: BracketWitness | None = None


def subalgebra_witness(a: NLieAlgebra, u: Subspace) -> BracketWitness | None:
    """First basis bracket of ``u`` leaving ``u``, or None if ``u`` is closed."""
    if u.dim < a.arity or a.is_abelian:
        return None
    for combo in itertools.combinations(u.basis, a.arity):
        value = bracket_eval(a, combo)
        if value not in u:
            return BracketWitness(combo, value)
    return None


def ideal_witness(a: NLieAlgebra, u: Subspace) -> BracketWitness | None:
    """First ``[u_i, e_J]`` leaving ``u``, or None if ``u`` is an ideal."""
    if a.is_abelian:
        return None
    for rest, images in a.ad.items():
        for b in u.basis:
            value = lin_comb(b, images, a.field, a.dim)
            if value not in u:
                return BracketWitness((b,) + tuple(a.e(j + 1) for j in rest), value)
    return None


def abelian_witness(a: NLieAlgebra, u: Subspace) -> BracketWitness | None:
    """First nonzero ``[u_i, u_j, e_K]``, or None if ``[u, u, A, ..., A] = 0``."""
    if a.is_abelian:
        return None
    for bi, bj in itertools.combinations(u.basis, 2):
        for rest in itertools.combinations(range(a.dim), a.arity - 2):
            args = (bi, bj) + tuple(a.e(k + 1) for k in rest)
            value = bracket_eval(a, args)
            if any(value):
                return BracketWitness(args, value)
    return None


def is_subalgebra(a: NLieAlgebra, u: Subspace) -> bool:
    return subalgebra_witness(a, u) is None


def is_ideal(a: NLieAlgebra, u: Subspace) -> bool:
    return ideal_witness(a, u) is None


def classify_subspace(a: NLieAlgebra, u: Subspace) -> SubspaceRole:
    _check_subspace(a, u)
    w = subalgebra_witness(a, u)
    if w is not None:
        return SubspaceRole(False, False, False, w)
    w = ideal_witness(a, u)
    if w is not None:
        return SubspaceRole(True, False, False, w)
    w = abelian_witness(a, u)
    return SubspaceRole(True, True, w is None, w)


def span(a: NLieAlgebra, vectors: Sequence[Sequence] = ()) -> Subspace:
    return Subspace.span(a.field, a.dim, [_check_vector(a, v) for v in vectors])


def whole(a: NLieAlgebra) -> Subspace:
    return Subspace.full(a.field, a.dim)


def zero(a: NLieAlgebra) -> Subspace:
    return Subspace.zero(a.field, a.dim)


def generated_subalgebra(a: NLieAlgebra, gens: Sequence[Sequence] | Subspace) -> Subspace:
    """Least subalgebra containing ``gens``: extend by basis brackets until stable."""
    s = gens if isinstance(gens, Subspace) else span(a, gens)
    _check_subspace(a, s)
    while s.dim >= a.arity and not a.is_abelian:
        new = [bracket_eval(a, c) for c in itertools.combinations(s.basis, a.arity)]
        t = Subspace.span(a.field, a.dim, s.basis + tuple(new))
        if t.dim == s.dim:
            break
        s = t
    return s


def ideal_closure(a: NLieAlgebra, gens: Sequence[Sequence] | Subspace) -> Subspace:
    """Least ideal containing ``gens``."""
    s = gens if isinstance(gens, Subspace) else span(a, gens)
    _check_subspace(a, s)
    frontier = list(s.basis)
    while frontier and not a.is_abelian:
        fresh = []
        for v in frontier:
            for images in a.ad.values():
                w = s.reduce(lin_comb(v, images, a.field, a.dim))
                if any(w):
                    s = Subspace.span(a.field, a.dim, s.basis + (w,))
                    fresh.append(w)
        frontier = fresh
    return s


# -- derived algebras ----------------------------------------------------------


@dataclass(frozen=True)
class Projection:
    """Canonical map ``A -> A/I`` onto the coordinates of the non-pivot columns of ``I``."""

    source: NLieAlgebra
    ideal: Subspace
    target: NLieAlgebra

    def __call__(self, v: Sequence) -> Vector:
        r = self.ideal.reduce(v)
        return tuple(r[c] for c in self.ideal.free_columns)

    def lift(self, w: Sequence) -> Vector:
        v = list(self.source.zero_vector())
        for c, x in zip(self.ideal.free_columns, w):
            v[c] = x
        return tuple(v)

    def image(self, u: Subspace) -> Subspace:
        return span(self.target, [self(b) for b in u.basis])

    def preimage(self, w: Subspace) -> Subspace:
        return span(self.source, [self.lift(b) for b in w.basis]) + self.ideal


def quotient(a: NLieAlgebra, i: Subspace) -> tuple[NLieAlgebra, Projection]:
    _check_subspace(a, i)
    w = ideal_witness(a, i)
    if w is not None:
        raise PreconditionError("quotient requires an ideal")
    reps = i.free_columns
    table = []
    for combo in itertools.combinations(range(len(reps)), a.arity):
        v = i.reduce(a.basis_bracket([reps[t] for t in combo]))
        table.append((combo, tuple(v[c] for c in reps)))
    target = NLieAlgebra(a.arity, len(reps), a.field, tuple(table))
    return target, Projection(a, i, target)


@dataclass(frozen=True)
class Inclusion:
    """Embedding of a subalgebra, given in its canonical basis, into the ambient algebra."""

    source: NLieAlgebra
    ambient: NLieAlgebra
    image_space: Subspace

    def __call__(self, coords: Sequence) -> Vector:
        return self.image_space.combine(coords)

    def image(self, u: Subspace) -> Subspace:
        return span(self.ambient, [self(b) for b in u.basis])

    def pullback(self, u: Subspace) -> Subspace:
        """Coordinates (in the subalgebra) of a subspace contained in it."""
        return span(self.source, [self.image_space.coordinates(b) for b in u.basis])


def subalgebra_as_algebra(a: NLieAlgebra, c: Subspace) -> tuple[NLieAlgebra, Inclusion]:
    """Structure constants of the subalgebra ``c`` in its canonical basis."""
    _check_subspace(a, c)
    if subalgebra_witness(a, c) is not None:
        raise PreconditionError("not a subalgebra")
    table = []
    if not a.is_abelian:
        for combo in itertools.combinations(range(c.dim), a.arity):
            v = bracket_eval(a, [c.basis[t] for t in combo])
            table.append((combo, c.coordinates(v)))
    sub = NLieAlgebra(a.arity, c.dim, a.field, tuple(table))
    return sub, Inclusion(sub, a, c)


def direct_sum(*algebras: NLieAlgebra) -> NLieAlgebra:
    """Block-diagonal sum; brackets mixing summands vanish."""
    if not algebras:
        raise ValueError("direct_sum needs at least one algebra")
    first = algebras[0]
    for b in algebras[1:]:
        if b.arity != first.arity or b.field != first.field:
            raise FieldMismatchError("direct sum needs equal arity and field")
    total = sum(b.dim for b in algebras)
    table = []
    offset = 0
    f = first.field
    for b in algebras:
        for key, vec in b.table:
            full = [f.zero] * total
            full[offset : offset + b.dim] = vec
            table.append((tuple(k + offset for k in key), tuple(full)))
        offset += b.dim
    return NLieAlgebra(first.arity, total, f, tuple(table))


def summand_subspaces(*algebras: NLieAlgebra) -> list[Subspace]:
    """The copies of each summand inside ``direct_sum(*algebras)``."""
    total = sum(b.dim for b in algebras)
    f = algebras[0].field
    out, offset = [], 0
    for b in algebras:
        out.append(Subspace.span(f, total, [f.unit_vector(total, offset + i) for i in range(b.dim)]))
        offset += b.dim
    return out


def change_basis(a: NLieAlgebra, p: Sequence[Sequence]) -> NLieAlgebra:
    """Isomorphic copy in the basis ``f_j = sum_i p[i][j] e_i`` (columns of ``p``)."""
    f = a.field
    pinv = inverse(p, f)
    cols = transpose(p)
    table = []
    for combo in itertools.combinations(range(a.dim), a.arity):
        v = bracket_eval(a, [cols[j] for j in combo])
        table.append((combo, mat_vec(pinv, v, f)))
    return NLieAlgebra(a.arity, a.dim, f, tuple(table))
