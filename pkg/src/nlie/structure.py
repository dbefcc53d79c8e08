"""Structural invariants that make sense over any supported field."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    NLieAlgebra,
    bracket_eval,
    ideal_closure,
    ideal_witness,
    span,
    subalgebra_witness,
    whole,
    zero,
)
from .errors import PreconditionError
from .linalg import Field, Subspace, add_scaled, identity, lin_comb, mat_mul, nullspace

# Exhaustive projective-point scans stop being desk-scale beyond this.
POINT_BUDGET = 200_000


@dataclass(frozen=True)
class SeriesResult:
    terms: tuple
    nilpotent: bool
    index: int | None

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]


def derived_subalgebra(a: NLieAlgebra) -> Subspace:
    """``A^1 = [A, ..., A]``, the span of all basis brackets."""
    return span(a, [v for _, v in a.table])


def ideal_series(a: NLieAlgebra, i: Subspace | None = None) -> SeriesResult:
    """``I^0 = I``, ``I^{s+1} = [I^s, I, A, ..., A]`` until the dimension stops dropping."""
    i = whole(a) if i is None else i
    if ideal_witness(a, i) is not None:
        raise PreconditionError("ideal_series requires an ideal")
    terms = [i]
    rests = [tuple(a.e(k + 1) for k in r) for r in itertools.combinations(range(a.dim), a.arity - 2)]
    while terms[-1].dim:
        last = terms[-1]
        vals = [
            bracket_eval(a, (x, y) + rest) for x in last.basis for y in i.basis for rest in rests
        ]
        nxt = span(a, vals)
        if nxt.dim == last.dim:
            break
        terms.append(nxt)
    nilpotent = terms[-1].dim == 0
    return SeriesResult(tuple(terms), nilpotent, len(terms) - 1 if nilpotent else None)


def is_nilpotent(a: NLieAlgebra) -> bool:
    return ideal_series(a).nilpotent


def normalizer(a: NLieAlgebra, h: Subspace) -> Subspace:
    """``{x : [x, h_2, ..., h_n] in h}`` as the kernel of a linear system.

    One block of equations per increasing (n-1)-subset of the basis of ``h``.
    """
    if subalgebra_witness(a, h) is not None:
        raise PreconditionError("normalizer requires a subalgebra")
    f, d = a.field, a.dim
    rows = []
    for combo in itertools.combinations(h.basis, a.arity - 1):
        residues = [h.reduce(bracket_eval(a, (a.e(i + 1),) + combo)) for i in range(d)]
        for c in h.free_columns:
            rows.append(tuple(r[c] for r in residues))
    if not rows:
        return whole(a)
    return Subspace.span(f, d, nullspace(rows, d, f))


# -- derivations ---------------------------------------------------------------


@dataclass(frozen=True)
class DerivationSpace:
    """Basis of Der A as ``d x d`` matrices; column ``j`` holds ``D e_j``."""

    basis: tuple
    dim: int


def _derivation_system(a: NLieAlgebra) -> list[tuple]:
    """Linear equations in the ``d*d`` unknowns ``D[i][j]`` (flattened row-major)."""
    f, d, n = a.field, a.dim, a.arity
    rows = []
    for xs in itertools.combinations(range(d), n):
        eq = [[0] * (d * d) for _ in range(d)]
        top = a.products.get(xs)
        if top:
            for j, c in enumerate(top):
                if c:
                    for i in range(d):
                        eq[i][i * d + j] += c
        for k in range(n):
            for m in range(d):
                b = a.basis_bracket(xs[:k] + (m,) + xs[k + 1 :])
                for i, c in enumerate(b):
                    if c:
                        eq[i][m * d + xs[k]] -= c
        rows.extend(tuple(map(f, r)) for r in eq)
    return rows


def derivation_algebra(a: NLieAlgebra) -> DerivationSpace:
    """Solve ``D[x1..xn] = sum_i [x1, .., D xi, .., xn]`` on increasing basis tuples."""
    f, d = a.field, a.dim
    rows = _derivation_system(a)
    kernel = nullspace(rows, d * d, f) if rows else list(identity(d * d, f))
    canon = Subspace.span(f, d * d, kernel)
    mats = tuple(tuple(tuple(v[i * d : (i + 1) * d]) for i in range(d)) for v in canon.basis)
    return DerivationSpace(mats, len(mats))


def derivation_residuals(a: NLieAlgebra, m) -> list:
    """Nonzero residuals of the derivation identity for matrix ``m`` on basis tuples."""
    f, d = a.field, a.dim
    cols = [tuple(m[i][j] for i in range(d)) for j in range(d)]
    minus = f(-1)
    out = []
    for xs in itertools.combinations(range(d), a.arity):
        top = a.products.get(xs, a.zero_vector())
        acc = lin_comb(top, cols, f, d)
        for k in range(a.arity):
            args = [a.e(x + 1) for x in xs]
            args[k] = cols[xs[k]]
            acc = add_scaled(acc, minus, bracket_eval(a, args), f)
        if any(acc):
            out.append((tuple(x + 1 for x in xs), acc))
    return out


# -- simplicity ----------------------------------------------------------------


@dataclass(frozen=True)
class SimplicityResult:
    simple: bool
    witness: Subspace | None
    method: str

    def __bool__(self) -> bool:
        return self.simple


def projective_points(field: Field, d: int):
    """One representative (first nonzero coordinate 1) of every line of GF(p)^d."""
    p = field.modulus
    for lead in range(d):
        for tail in itertools.product(range(p), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


def _point_count(field: Field, d: int) -> int:
    p = field.modulus
    return (p**d - 1) // (p - 1)


def multiplication_algebra_dim(a: NLieAlgebra) -> int:
    """Dimension of the associative algebra generated by all ``ad`` maps and the identity."""
    f, d = a.field, a.dim
    gens = list(a.ad_matrices.values())
    flat = lambda m: tuple(x for row in m for x in row)
    ident = identity(d, f)
    space = Subspace.span(f, d * d, [flat(ident)])
    frontier = [ident]
    while frontier:
        fresh = []
        for m in frontier:
            for g in gens:
                w = mat_mul(g, m, f)
                if any(space.reduce(flat(w))):
                    space = Subspace.span(f, d * d, space.basis + (flat(w),))
                    fresh.append(w)
                    if space.dim == d * d:
                        return space.dim
        frontier = fresh
    return space.dim


def _simple_over_finite(a: NLieAlgebra) -> SimplicityResult:
    if _point_count(a.field, a.dim) > POINT_BUDGET:
        raise PreconditionError("too many lines for an exhaustive ideal scan")
    for v in projective_points(a.field, a.dim):
        c = ideal_closure(a, [v])
        if c.dim < a.dim:
            return SimplicityResult(False, c, "proper ideal generated by one vector")
    return SimplicityResult(True, None, "every nonzero vector generates A as an ideal")


def is_simple(a: NLieAlgebra, prime: int = 101) -> SimplicityResult:
    """Decide simplicity: ``A^1 != 0`` and the only ideals are 0 and A.

    Negative answers always carry a proper nonzero ideal when one exists.
    Over Q a positive answer comes from the multiplication algebra being all
    of End(A), or else from simplicity of the reduction mod ``prime``
    (a proper ideal over Q would reduce to one mod p).
    """
    d = a.dim
    a1 = derived_subalgebra(a)
    if a1.dim == 0:
        w = span(a, [a.e(1)]) if d >= 2 else None
        return SimplicityResult(False, w, "derived algebra is zero")
    if a1.dim < d:
        return SimplicityResult(False, a1, "derived algebra is a proper ideal")
    for i in range(1, d + 1):
        c = ideal_closure(a, [a.e(i)])
        if c.dim < d:
            return SimplicityResult(False, c, "proper ideal generated by a basis vector")
    if multiplication_algebra_dim(a) == d * d:
        return SimplicityResult(True, None, "multiplication algebra is all of End(A)")
    if a.field.is_finite:
        return _simple_over_finite(a)
    try:
        reduced = a.restrict_field(Field.gf(prime))
    except ZeroDivisionError:
        raise PreconditionError(f"structure constants are not integral at p={prime}") from None
    verdict = _simple_over_finite(reduced)
    if verdict.simple:
        return SimplicityResult(True, None, f"simple over the GF({prime}) reduction")
    raise PreconditionError(
        f"simplicity over Q undecided: reduction mod {prime} is not simple"
    )


def minimal_ideals(a: NLieAlgebra) -> list[Subspace]:
    """Minimal nonzero ideals: ideal closures of single vectors, pruned by containment."""
    if not a.field.is_finite:
        raise PreconditionError("minimal ideal search needs a prime field; reduce mod p")
    if _point_count(a.field, a.dim) > POINT_BUDGET:
        raise PreconditionError("too many lines for an exhaustive ideal scan")
    closures = {ideal_closure(a, [v]) for v in projective_points(a.field, a.dim)}
    ordered = sorted(closures, key=lambda s: s.sort_key)
    return [c for c in ordered if not any(o < c for o in ordered if o.dim < c.dim)]


def strong_semisimple_decomposition(a: NLieAlgebra) -> list[Subspace] | None:
    """Simple ideals whose direct sum is A, or None when no such decomposition exists.

    "Strong semi-simple" is taken to mean exactly this decomposability.
    """
    if not a.field.is_finite:
        raise PreconditionError("decomposition needs a prime field; reduce mod p first")
    if a.dim == 0:
        return []
    mins = minimal_ideals(a)
    if sum(m.dim for m in mins) != a.dim:
        return None
    total = zero(a)
    for m in mins:
        total = total + m
    if total.dim != a.dim:
        return None
    for m in mins:
        if not any(any(bracket_eval(a, c)) for c in itertools.combinations(m.basis, a.arity)):
            return None
    return mins
