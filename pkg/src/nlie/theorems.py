"""Executable structural statements about Frattini theory, checked by enumeration.

Every check takes an algebra over GF(p) and returns a :class:`CheckResult`.
Checks flagged ``char0`` encode statements whose known proofs assume
characteristic zero; over GF(p) a failure there is a deviation to report,
not a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import frattini as fr
from .algebra import NLieAlgebra, direct_sum, quotient, subalgebra_as_algebra, whole
from .linalg import Subspace, all_vectors
from .structure import derived_subalgebra, ideal_series, normalizer, strong_semisimple_decomposition

# Pointwise non-generator scan is only run when the algebra has at most this many vectors.
NON_GENERATOR_BUDGET = 81


@dataclass(frozen=True)
class CheckResult:
    name: str
    holds: bool
    char0: bool
    detail: str = ""


@dataclass(frozen=True)
class Check:
    name: str
    char0: bool
    func: Callable


SINGLE_CHECKS: list[Check] = []
PAIR_CHECKS: list[Check] = []


def _register(registry, name, char0=False):
    def wrap(func):
        registry.append(Check(name, char0, func))
        return func

    return wrap


def single(name, char0=False):
    return _register(SINGLE_CHECKS, name, char0)


def pair(name, char0=False):
    return _register(PAIR_CHECKS, name, char0)


def _as_algebra(a: NLieAlgebra, c: Subspace) -> NLieAlgebra:
    return subalgebra_as_algebra(a, c)[0]


# -- single-algebra checks -------------------------------------------------------


@single("frattini inside derived algebra")
def _frattini_in_derived(a):
    f = fr.frattini(a).F
    return f <= derived_subalgebra(a), f"dim F = {f.dim}"


@single("nilpotent: maximal subalgebras are ideals and F = A^1")
def _nilpotent_frattini(a):
    if not ideal_series(a).nilpotent:
        return True, "not nilpotent"
    lat = fr.enumerate_substructures(a)
    bad = [m for m, mx, i in zip(lat.subalgebras, lat.maximal_flags, lat.ideal_flags) if mx and not i]
    if bad:
        return False, f"maximal non-ideal {bad[0].rows()}"
    return fr.frattini(a).F == derived_subalgebra(a), ""


@single("nilpotent: maximal subalgebras have normalizer A")
def _nilpotent_normalizer(a):
    if not ideal_series(a).nilpotent:
        return True, "not nilpotent"
    full = whole(a)
    for m in fr.enumerate_substructures(a).maximal:
        if normalizer(a, m) != full:
            return False, f"M = {m.rows()}"
    return True, ""


@single("F(A) is an ideal, so F(A) = phi(A)", char0=True)
def _frattini_is_ideal(a):
    f, phi = fr.frattini(a)
    return f == phi, f"dim F = {f.dim}, dim phi = {phi.dim}"


@single("a subalgebra supplementing F or phi is everything")
def _supplement(a):
    f, phi = fr.frattini(a)
    full = whole(a)
    for b in fr.enumerate_substructures(a).subalgebras:
        if b != full and ((b + f) == full or (b + phi) == full):
            return False, f"B = {b.rows()}"
    return True, ""


@single("Frattini of a quotient contains the image; equality over F")
def _quotient_frattini(a):
    f, phi = fr.frattini(a)
    for b in fr.enumerate_substructures(a).ideals:
        q, pi = quotient(a, b)
        fq, phiq = fr.frattini(q)
        if not (pi.image(f) <= fq and pi.image(phi) <= phiq):
            return False, f"image not contained, B = {b.rows()}"
        if b <= f and not (pi.image(f) == fq and pi.image(phi) == phiq):
            return False, f"equality fails, B = {b.rows()}"
        if fq.dim == 0 and not f <= b:
            return False, f"F(A/B) = 0 but F not in B = {b.rows()}"
        if phiq.dim == 0 and not phi <= b:
            return False, f"phi(A/B) = 0 but phi not in B = {b.rows()}"
    return True, ""


@single("non-generators are exactly F(A)")
def _non_generators(a):
    if a.field.modulus**a.dim > NON_GENERATOR_BUDGET:
        return True, "skipped: too many vectors"
    f = fr.frattini(a).F
    for x in all_vectors(a.field, a.dim):
        fast = fr.is_non_generator(a, x).holds
        slow = fr.non_generator_oracle(a, x).holds
        if fast != slow or fast != (x in f):
            return False, f"x = {x}"
    return True, ""


@single("elementary passes to subalgebras and quotients")
def _elementary_heredity(a):
    if not fr.is_elementary(a):
        return True, "not elementary"
    lat = fr.enumerate_substructures(a)
    for c in lat.subalgebras:
        if not fr.is_elementary(_as_algebra(a, c)):
            return False, f"subalgebra {c.rows()}"
    for b in lat.ideals:
        if not fr.is_elementary(quotient(a, b)[0]):
            return False, f"quotient by {b.rows()}"
    return True, ""


@single("elementary iff every subalgebra is complemented", char0=True)
def _complemented(a):
    elem = fr.is_elementary(a).holds
    allc = all(fr.is_complemented(_as_algebra(a, c)) for c in fr.enumerate_substructures(a).subalgebras)
    return elem == allc, f"elementary={elem}, all complemented={allc}"


@single("nilpotent: elementary iff abelian", char0=True)
def _nilpotent_elementary(a):
    if not ideal_series(a).nilpotent:
        return True, "not nilpotent"
    elem = fr.is_elementary(a).holds
    return elem == a.is_abelian, f"elementary={elem}"


@single("E-algebra: elementary iff phi-free", char0=True)
def _e_algebra_phi_free(a):
    if not fr.is_e_algebra(a):
        return True, "not an E-algebra"
    elem = fr.is_elementary(a).holds
    return elem == fr.is_phi_free(a), f"elementary={elem}"


@single("E-algebra iff A/phi(A) elementary", char0=True)
def _e_algebra_quotient(a):
    e_alg = fr.is_e_algebra(a).holds
    q, _ = quotient(a, fr.frattini(a).phi)
    qe = fr.is_elementary(q).holds
    return e_alg == qe, f"E-algebra={e_alg}, quotient elementary={qe}"


@single("strong semi-simple implies phi = 0 and elementary", char0=True)
def _semisimple_elementary(a):
    if strong_semisimple_decomposition(a) is None:
        return True, "not strong semi-simple"
    phi = fr.frattini(a).phi
    elem = fr.is_elementary(a).holds
    return phi.dim == 0 and elem, f"dim phi = {phi.dim}, elementary={elem}"


@single("phi <= E <= S and A/E is elementary")
def _commutator_bounds(a):
    e, s, qe = fr.elementary_commutator(a)
    phi = fr.frattini(a).phi
    return phi <= e and e <= s and qe, f"dims phi={phi.dim} E={e.dim} S={s.dim} A/E elementary={qe}"


@single("E contains phi(B) of every subalgebra B")
def _commutator_sub_phi(a):
    e = fr.elementary_commutator(a).E
    for b in fr.enumerate_substructures(a).subalgebras:
        if not fr.phi_of(a, b) <= e:
            return False, f"B = {b.rows()}"
    return True, ""


@single("E-algebra iff E = phi", char0=True)
def _commutator_e_algebra(a):
    e_alg = fr.is_e_algebra(a).holds
    same = fr.elementary_commutator(a).E == fr.frattini(a).phi
    return e_alg == same, f"E-algebra={e_alg}, E == phi: {same}"


@single("E(A/K) is the image of E(A)")
def _commutator_quotients(a):
    e = fr.elementary_commutator(a).E
    for k in fr.enumerate_substructures(a).ideals:
        q, pi = quotient(a, k)
        if fr.elementary_commutator(q).E != pi.image(e):
            return False, f"K = {k.rows()}"
    return True, ""


@single("ideal meets a minimal supplement inside its Frattini ideal")
def _minimal_supplement(a):
    for b in fr.enumerate_substructures(a).ideals:
        bm = b.member_mask
        for u in fr.minimal_supplements(a, b):
            if bm & u.member_mask & ~fr.phi_of(a, u).member_mask:
                return False, f"B = {b.rows()}, U = {u.rows()}"
    return True, ""


@single("projection with kernel in phi maps phi onto phi", char0=True)
def _projection_phi(a):
    phi = fr.frattini(a).phi
    for k in fr.enumerate_substructures(a).ideals:
        if k <= phi:
            q, pi = quotient(a, k)
            if pi.image(phi) != fr.frattini(q).phi:
                return False, f"K = {k.rows()}"
    return True, ""


@single("subalgebras and ideals over K correspond to those of A/K")
def _correspondence(a):
    lat = fr.enumerate_substructures(a)
    for k in lat.ideals:
        q, pi = quotient(a, k)
        qlat = fr.enumerate_substructures(q)
        up_sub = {s for s in lat.subalgebras if k <= s}
        up_ideal = {s for s, i in zip(lat.subalgebras, lat.ideal_flags) if i and k <= s}
        if {pi.image(s) for s in up_sub} != set(qlat.subalgebras):
            return False, f"subalgebras over {k.rows()}"
        if {pi.image(s) for s in up_ideal} != set(qlat.ideals):
            return False, f"ideals over {k.rows()}"
        if {pi.preimage(w) for w in qlat.subalgebras} != up_sub:
            return False, f"preimages over {k.rows()}"
    return True, ""


# -- direct-sum checks -----------------------------------------------------------


def _embed_all(parts, spaces):
    """Sum of ``spaces[i]`` (subspaces of ``parts[i]``) inside the direct sum."""
    total = sum(p.dim for p in parts)
    f = parts[0].field
    vecs, offset = [], 0
    for p, s in zip(parts, spaces):
        for b in s.basis:
            vecs.append((0,) * offset + tuple(b) + (0,) * (total - offset - p.dim))
        offset += p.dim
    return Subspace.span(f, total, vecs)


@pair("F of a direct sum lies in the sum of the F's; phi is additive")
def _sum_frattini(a1, a2):
    s = direct_sum(a1, a2)
    f, phi = fr.frattini(s)
    (f1, p1), (f2, p2) = fr.frattini(a1), fr.frattini(a2)
    ok = f <= _embed_all([a1, a2], [f1, f2]) and phi == _embed_all([a1, a2], [p1, p2])
    return ok, f"dims F={f.dim} phi={phi.dim}"


@pair("direct sum of elementary algebras is elementary")
def _sum_elementary(a1, a2):
    if not (fr.is_elementary(a1) and fr.is_elementary(a2)):
        return True, "a summand is not elementary"
    return fr.is_elementary(direct_sum(a1, a2)).holds, ""


@pair("E of a direct sum is the sum of the E's")
def _sum_commutator(a1, a2):
    e = fr.elementary_commutator(direct_sum(a1, a2)).E
    parts = _embed_all([a1, a2], [fr.elementary_commutator(a1).E, fr.elementary_commutator(a2).E])
    return e == parts, f"dim E={e.dim}, dim sum={parts.dim}"


# -- drivers ---------------------------------------------------------------------


def _run(check: Check, *args) -> CheckResult:
    holds, detail = check.func(*args)
    return CheckResult(check.name, bool(holds), check.char0, detail)


def run_checks(a: NLieAlgebra) -> list[CheckResult]:
    return [_run(c, a) for c in SINGLE_CHECKS]


def run_pair_checks(a1: NLieAlgebra, a2: NLieAlgebra) -> list[CheckResult]:
    return [_run(c, a1, a2) for c in PAIR_CHECKS]


@dataclass
class Tally:
    """Pass counts per check name, with failing instances kept for reporting."""

    passed: dict
    total: dict
    char0: dict
    failures: list

    @classmethod
    def empty(cls) -> Tally:
        return cls({}, {}, {}, [])

    def add(self, label: str, results: list[CheckResult]) -> None:
        for r in results:
            self.total[r.name] = self.total.get(r.name, 0) + 1
            self.passed[r.name] = self.passed.get(r.name, 0) + int(r.holds)
            self.char0[r.name] = r.char0
            if not r.holds:
                self.failures.append((label, r))

    def rate(self, name: str) -> float:
        return self.passed[name] / self.total[name]


def sweep(instances, pairs=(), progress: Callable | None = None) -> Tally:
    """Run every single check on ``(label, algebra)`` items and every pair check on ``(label, a1, a2)``."""
    tally = Tally.empty()
    for label, a in instances:
        tally.add(label, run_checks(a))
        if progress:
            progress(label)
    for label, a1, a2 in pairs:
        tally.add(label, run_pair_checks(a1, a2))
        if progress:
            progress(label)
    return tally
