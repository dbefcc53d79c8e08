"""Maximal subalgebras, Frattini subalgebra and ideal, and the predicates built on them.

Everything here works by exhaustive enumeration of the subspace lattice over
GF(p). Over Q only two shortcuts are offered: an abelian algebra has zero
Frattini subalgebra, and a nilpotent one has ``F(A) = A^1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, NamedTuple

from .algebra import (
    NLieAlgebra,
    generated_subalgebra,
    ideal_witness,
    quotient,
    span,
    subalgebra_as_algebra,
    subalgebra_witness,
    whole,
    zero,
)
from .errors import CapExceededError, PreconditionError
from .linalg import Subspace, default_cap, enumerate_subspaces, lin_comb, nullspace, vector_index
from .structure import derived_subalgebra, ideal_series


@dataclass(frozen=True)
class Verdict:
    """Boolean answer plus the first counterexample in canonical order when false."""

    holds: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds


class Frattini(NamedTuple):
    F: Subspace
    phi: Subspace


class FrattiniSeries(NamedTuple):
    terms: tuple
    index: int


class ElementaryCommutator(NamedTuple):
    E: Subspace
    S: Subspace
    quotient_elementary: bool


# -- lattice -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LatticeEnumeration:
    """All subalgebras of an algebra over GF(p), canonically ordered, with flags."""

    algebra: NLieAlgebra
    subalgebras: tuple
    ideal_flags: tuple
    maximal_flags: tuple
    subspace_count: int

    @property
    def ideals(self) -> list[Subspace]:
        return [s for s, f in zip(self.subalgebras, self.ideal_flags) if f]

    @property
    def maximal(self) -> list[Subspace]:
        return [s for s, f in zip(self.subalgebras, self.maximal_flags) if f]

    @cached_property
    def position(self) -> dict:
        return {s: i for i, s in enumerate(self.subalgebras)}

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram: pairs ``(i, j)`` with ``sub[i] < sub[j]`` and nothing strictly between."""
        subs = self.subalgebras
        masks = [s.member_mask for s in subs]
        below: list[list[int]] = [[] for _ in subs]
        for j, mj in enumerate(masks):
            for i in range(j):
                if subs[i].dim < subs[j].dim and masks[i] & ~mj == 0:
                    below[j].append(i)
        pairs = []
        for j, lows in enumerate(below):
            lowset = set(lows)
            for i in lows:
                if not any(
                    k != i and subs[k].dim > subs[i].dim and masks[i] & ~masks[k] == 0
                    for k in lowset
                ):
                    pairs.append((i, j))
        return sorted(pairs)


def _maximal_flags(subs: list[Subspace], full_dim: int) -> list[bool]:
    """Mark maximal subalgebras.

    Walk the proper subalgebras by decreasing dimension; one is maximal iff no
    maximal subalgebra found so far contains it. ``masks[v]`` records which of
    those maximal subalgebras contain the vector with index ``v``.
    """
    flags = [False] * len(subs)
    masks: dict[int, int] = {}
    found = 0
    order = sorted(range(len(subs)), key=lambda i: -subs[i].dim)
    for i in order:
        s = subs[i]
        if s.dim == full_dim:
            continue
        p = s.field.modulus
        inside = (1 << found) - 1
        for b in s.basis:
            inside &= masks.get(vector_index(b, p), 0)
            if not inside:
                break
        if inside:
            continue
        flags[i] = True
        bit = 1 << found
        found += 1
        for v in s.members():
            k = vector_index(v, p)
            masks[k] = masks.get(k, 0) | bit
    return flags


@lru_cache(maxsize=512)
def _enumerate(a: NLieAlgebra, cap: int) -> LatticeEnumeration:
    subs, ideals, count = [], [], 0
    for s in enumerate_subspaces(a.dim, a.field, cap):
        count += 1
        if subalgebra_witness(a, s) is None:
            subs.append(s)
            ideals.append(ideal_witness(a, s) is None)
    flags = _maximal_flags(subs, a.dim)
    return LatticeEnumeration(a, tuple(subs), tuple(ideals), tuple(flags), count)


def enumerate_substructures(a: NLieAlgebra, cap: int | None = None) -> LatticeEnumeration:
    """Classify every subspace as subalgebra / ideal / maximal subalgebra (memoized)."""
    if not a.field.is_finite:
        raise PreconditionError("enumeration requires a finite field")
    cap = default_cap() if cap is None else cap
    if a.dim > cap:
        raise CapExceededError(f"dimension {a.dim} exceeds enumeration cap {cap}")
    return _enumerate(a, a.dim)


# -- Frattini subalgebra and ideal ---------------------------------------------


def largest_ideal_in(a: NLieAlgebra, s: Subspace) -> Subspace:
    """Largest ideal of ``a`` inside ``s``: shrink to the vectors whose ad-images stay put."""
    f = a.field
    k = s
    while k.dim and not a.is_abelian:
        rows = []
        for images in a.ad.values():
            residues = [k.reduce(lin_comb(b, images, f, a.dim)) for b in k.basis]
            for c in k.free_columns:
                rows.append(tuple(r[c] for r in residues))
        coords = nullspace(rows, k.dim, f)
        nxt = span(a, [k.combine(c) for c in coords])
        if nxt.dim == k.dim:
            break
        k = nxt
    return k


def _intersect_all(a: NLieAlgebra, spaces) -> Subspace:
    acc = whole(a)
    for s in spaces:
        acc = acc & s
        if acc.dim == 0:
            break
    return acc


def _hyperplane_bound(a: NLieAlgebra) -> Subspace:
    """Intersection of the hyperplanes that are subalgebras (each one is maximal)."""
    return _intersect_all(
        a,
        (h for h in enumerate_subspaces(a.dim, a.field, a.dim, dims=[a.dim - 1]) if subalgebra_witness(a, h) is None),
    )


def frattini(a: NLieAlgebra, cap: int | None = None, prune: bool = False) -> Frattini:
    """``F(A)``, the intersection of all maximal subalgebras, and ``phi(A)``, the largest ideal inside it.

    The zero algebra has no maximal subalgebras and gets ``F = A = 0``.
    With ``prune`` the lattice is skipped whenever an abelian algebra or the
    hyperplane subalgebras already force ``F = 0``.
    """
    if not a.field.is_finite:
        a1 = derived_subalgebra(a)
        if a1.dim == 0:
            return Frattini(a1, a1)
        if ideal_series(a).nilpotent:
            return Frattini(a1, a1)
        raise PreconditionError("no finite enumeration over characteristic zero; reduce mod p")
    if prune and a.dim:
        if a.dim < a.arity or a.is_abelian or _hyperplane_bound(a).dim == 0:
            return Frattini(zero(a), zero(a))
    lat = enumerate_substructures(a, cap)
    f_sub = _intersect_all(a, lat.maximal)
    return Frattini(f_sub, largest_ideal_in(a, f_sub))


def frattini_ideal_from_lattice(a: NLieAlgebra, cap: int | None = None) -> Subspace:
    """``phi(A)`` as the sum of all enumerated ideals contained in ``F(A)``."""
    lat = enumerate_substructures(a, cap)
    f_sub = _intersect_all(a, lat.maximal)
    acc = zero(a)
    for i in lat.ideals:
        if i <= f_sub:
            acc = acc + i
    return acc


@lru_cache(maxsize=1 << 16)
def phi_of(a: NLieAlgebra, c: Subspace) -> Subspace:
    """Frattini ideal of the subalgebra ``c`` (analysed on its own), in ``a``'s coordinates."""
    if c.dim < a.arity:
        return zero(a)
    if c.dim == a.dim:
        return frattini(a, cap=a.dim, prune=True).phi
    sub, inc = subalgebra_as_algebra(a, c)
    return inc.image(frattini(sub, cap=sub.dim, prune=True).phi)


def frattini_series(a: NLieAlgebra, cap: int | None = None) -> FrattiniSeries:
    """``F_0 = A``, ``F_i = F(F_{i-1})`` until zero; the index is the number of steps."""
    terms = [whole(a)]
    while terms[-1].dim:
        sub, inc = subalgebra_as_algebra(a, terms[-1])
        terms.append(inc.image(frattini(sub, cap).F))
    return FrattiniSeries(tuple(terms), len(terms) - 1)


# -- non-generators ------------------------------------------------------------


def is_non_generator(a: NLieAlgebra, x, cap: int | None = None) -> Verdict:
    """True iff ``x`` lies in every maximal subalgebra; witness is a maximal one missing ``x``."""
    if not a.field.is_finite:
        raise PreconditionError("non-generator test requires a finite field")
    x = a.field.vector(x)
    for m in enumerate_substructures(a, cap).maximal:
        if x not in m:
            return Verdict(False, m)
    return Verdict(True)


def non_generator_oracle(a: NLieAlgebra, x, cap: int | None = None) -> Verdict:
    """Brute force over every subspace S: ``<S, x> = A`` must imply ``<S> = A``.

    Witness is the first offending S in canonical order.
    """
    if not a.field.is_finite:
        raise PreconditionError("non-generator test requires a finite field")
    x = a.field.vector(x)
    full = whole(a)
    line = span(a, [x])
    for s in enumerate_subspaces(a.dim, a.field, cap):
        if _closure(a, s + line) == full and _closure(a, s) != full:
            return Verdict(False, s)
    return Verdict(True)


@lru_cache(maxsize=1 << 16)
def _closure(a: NLieAlgebra, s: Subspace) -> Subspace:
    return generated_subalgebra(a, s)


# -- elementary, E-algebra, complements ----------------------------------------


def is_elementary(a: NLieAlgebra, cap: int | None = None) -> Verdict:
    """Every subalgebra C has ``phi(C) = 0``; witness is the first C that fails."""
    for c in enumerate_substructures(a, cap).subalgebras:
        if c.dim >= a.arity and phi_of(a, c).dim:
            return Verdict(False, c)
    return Verdict(True)


def is_phi_free(a: NLieAlgebra, cap: int | None = None) -> bool:
    return frattini(a, cap).phi.dim == 0


def is_e_algebra(a: NLieAlgebra, cap: int | None = None) -> Verdict:
    """``phi(B) <= phi(A)`` for every subalgebra B; witness is the first B that fails."""
    phi_a = frattini(a, cap).phi
    for b in enumerate_substructures(a, cap).subalgebras:
        if b.dim >= a.arity and not phi_of(a, b) <= phi_a:
            return Verdict(False, b)
    return Verdict(True)


def _complement_in(a: NLieAlgebra, subs, target: Subspace, b: Subspace) -> Subspace | None:
    """A member C of ``subs`` with ``b & C = 0`` generating ``target`` together with ``b``."""
    bm = b.member_mask
    for c in sorted(subs, key=lambda s: -s.dim):
        if c.member_mask & bm != 1:
            continue
        total = b + c
        if total == target or _closure(a, total) == target:
            return c
    return None


def is_complemented(a: NLieAlgebra, cap: int | None = None) -> Verdict:
    """Every subalgebra B has a subalgebra C with ``B & C = 0`` and ``<B, C> = A``."""
    subs = enumerate_substructures(a, cap).subalgebras
    full = whole(a)
    for b in subs:
        if _complement_in(a, subs, full, b) is None:
            return Verdict(False, b)
    return Verdict(True)


def complement(a: NLieAlgebra, b: Subspace, cap: int | None = None) -> Subspace | None:
    """Some lattice complement of the subalgebra ``b`` (largest first), or None."""
    return _complement_in(a, enumerate_substructures(a, cap).subalgebras, whole(a), b)


def minimal_supplements(a: NLieAlgebra, b: Subspace, cap: int | None = None) -> list[Subspace]:
    """Subalgebras U with ``b + U = A`` and no smaller such subalgebra inside them."""
    found: list[Subspace] = []
    found_masks: list[tuple[int, int]] = []
    bm, q = b.member_mask, a.field.modulus
    for u in enumerate_substructures(a, cap).subalgebras:
        um = u.member_mask
        # dim(b + u) = dim b + dim u - dim(b & u), and |b & u| = q^dim(b & u)
        meet = (bm & um).bit_count()
        if q ** (b.dim + u.dim - a.dim) != meet:
            continue
        if any(dm < u.dim and m & ~um == 0 for dm, m in found_masks):
            continue
        found.append(u)
        found_masks.append((u.dim, um))
    return found


def find_complement(a: NLieAlgebra, b: Subspace, cap: int | None = None) -> Subspace | None:
    """Complement of an ideal from a minimal supplement U; None when every such U meets ``b``."""
    if ideal_witness(a, b) is not None:
        raise PreconditionError("find_complement requires an ideal")
    for u in minimal_supplements(a, b, cap):
        if (b & u).dim == 0:
            return u
    return None


# -- elementary commutator -----------------------------------------------------


def _quotient_elementary(a: NLieAlgebra, b: Subspace, cap: int | None) -> bool:
    q, _ = quotient(a, b)
    return bool(is_elementary(q, cap))


def elementary_commutator(a: NLieAlgebra, cap: int | None = None) -> ElementaryCommutator:
    """``E(A)``: intersection of the ideals with elementary quotient; ``S(A)``: of the maximal ideals.

    ``quotient_elementary`` re-checks that ``A/E(A)`` is itself elementary.
    """
    lat = enumerate_substructures(a, cap)
    if is_elementary(a, cap):
        e = zero(a)
    else:
        e = _intersect_all(a, (b for b in lat.ideals if _quotient_elementary(a, b, cap)))
    s = _intersect_all(
        a, (m for m, mx, ideal in zip(lat.subalgebras, lat.maximal_flags, lat.ideal_flags) if mx and ideal)
    )
    return ElementaryCommutator(e, s, _quotient_elementary(a, e, cap))
