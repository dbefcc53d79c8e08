"""Brute-force reference implementations used only by the tests.

Nothing here touches the library's linear algebra: vectors over GF(p) are
plain tuples, subspaces are frozensets of all their members, and brackets are
expanded over every index tuple with permutation signs from sympy.
"""

import itertools
from fractions import Fraction

from sympy import GF, Matrix, Rational
from sympy.combinatorics import Permutation
from sympy.polys.matrices import DomainMatrix


def perm_sign(seq):
    """Sign of the permutation sorting ``seq`` (distinct entries), via sympy."""
    order = sorted(range(len(seq)), key=lambda i: seq[i])
    return Permutation(order).signature()


def table_lookup(a, idx):
    """Structure vector of ``[e_idx...]`` for an arbitrary 0-based index tuple."""
    if len(set(idx)) < len(idx):
        return None
    key = tuple(sorted(idx))
    vec = a.products.get(key)
    if vec is None:
        return None
    return perm_sign(idx), vec


def naive_bracket(a, args):
    """Expand ``[x1, .., xn]`` over every tuple of basis indices."""
    d, f = a.dim, a.field
    out = [f.zero] * d
    for idx in itertools.product(range(d), repeat=a.arity):
        coeff = f.one
        for x, i in zip(args, idx):
            coeff = f(coeff * x[i])
            if not coeff:
                break
        if not coeff:
            continue
        hit = table_lookup(a, idx)
        if hit is None:
            continue
        sign, vec = hit
        for k in range(d):
            out[k] = f(out[k] + sign * coeff * vec[k])
    return tuple(out)


# -- GF(p) subspaces as member sets ----------------------------------------------


def all_vectors(p, d):
    return list(itertools.product(range(p), repeat=d))


def span_set(p, d, gens):
    """Every linear combination of ``gens``, as a frozenset."""
    members = {(0,) * d}
    for g in gens:
        members = {tuple((m[k] + c * g[k]) % p for k in range(d)) for m in members for c in range(p)}
    return frozenset(members)


def naive_subspaces(p, d):
    """All subspaces of GF(p)^d by spanning every tuple of at most d vectors (no canonical forms)."""
    vecs = all_vectors(p, d)
    seen = {span_set(p, d, [])}
    frontier = set(seen)
    for _ in range(d):
        nxt = set()
        for s in frontier:
            for v in vecs:
                if v not in s:
                    t = span_set(p, d, list(s_basis(s, p, d)) + [v])
                    if t not in seen:
                        seen.add(t)
                        nxt.add(t)
        frontier = nxt
    return seen


def s_basis(members, p, d):
    """Some basis of a member set, picked greedily."""
    basis, cur = [], frozenset({(0,) * d})
    for v in sorted(members):
        if v not in cur:
            basis.append(v)
            cur = span_set(p, d, basis)
    return basis


def dim_of(members, p):
    n, k = len(members), 0
    while p**k < n:
        k += 1
    return k


def is_closed(a, members, p):
    for args in itertools.product(members, repeat=a.arity):
        if naive_bracket(a, args) not in members:
            return False
    return True


def is_ideal_set(a, members, p):
    vecs = all_vectors(p, a.dim)
    basis = s_basis(members, p, a.dim)
    for x in basis:
        for rest in itertools.product(vecs, repeat=a.arity - 1):
            if naive_bracket(a, (x,) + rest) not in members:
                return False
    return True


def naive_lattice(a):
    """(subalgebras, ideals, maximal) as lists of member sets."""
    p, d = a.field.modulus, a.dim
    subs = [s for s in naive_subspaces(p, d) if is_closed(a, s, p)]
    full = frozenset(all_vectors(p, d))
    ideals = [s for s in subs if is_ideal_set(a, s, p)]
    proper = [s for s in subs if s != full]
    maximal = [m for m in proper if not any(m < t for t in proper)]
    return subs, ideals, maximal


def naive_frattini(a):
    """Intersection of all maximal subalgebras as a member set."""
    p, d = a.field.modulus, a.dim
    _, _, maximal = naive_lattice(a)
    acc = frozenset(all_vectors(p, d))
    for m in maximal:
        acc &= m
    return acc


def members_of(subspace):
    """Member set of a library Subspace, computed from its basis only."""
    p, d = subspace.field.modulus, subspace.ambient_dim
    return span_set(p, d, [tuple(b) for b in subspace.basis])


def naive_normalizer(a, h_members):
    p = a.field.modulus
    out = set()
    for x in all_vectors(p, a.dim):
        if all(naive_bracket(a, (x,) + rest) in h_members for rest in itertools.product(h_members, repeat=a.arity - 1)):
            out.add(x)
    return frozenset(out)


# -- derivations -----------------------------------------------------------------


def derivation_dim(a):
    """``dim Der A`` from the full equation system over all ordered tuples (sympy exact rank)."""
    d, n = a.dim, a.arity
    p = a.field.modulus
    rows = []

    def bracket_coords(idx):
        """Coordinates of [e_idx] as a list, zero for repeated indices."""
        hit = table_lookup(a, idx)
        if hit is None:
            return [0] * d
        sign, vec = hit
        return [sign * c for c in vec]

    for idx in itertools.product(range(d), repeat=n):
        # D[e_idx] - sum_k [.., D e_{idx_k}, ..] = 0, unknown D[i][j] at i*d + j
        top = bracket_coords(idx)
        eqs = [[0] * (d * d) for _ in range(d)]
        for j, c in enumerate(top):
            if c:
                for i in range(d):
                    eqs[i][i * d + j] += c
        for k in range(n):
            for m in range(d):
                b = bracket_coords(idx[:k] + (m,) + idx[k + 1 :])
                for i, c in enumerate(b):
                    if c:
                        eqs[i][m * d + idx[k]] -= c
        rows.extend(eqs)
    if not rows:
        return d * d
    if p is None:
        rank = Matrix([[Rational(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows]).rank()
    else:
        dom = GF(p)
        rank = DomainMatrix([[dom(int(x) % p) for x in r] for r in rows], (len(rows), d * d), dom).rank()
    return d * d - rank
