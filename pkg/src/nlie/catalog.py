"""Named algebras with their published invariant values attached for auditing.

Names (also accepted by the CLI):

    simple:<n>          (n+1)-dim simple algebra, [e_1..^e_i..e_{n+1}] = e_i
    example_3_1         arity 3, dim 4, [e2,e3,e4] = e1
    example_3_2         arity 3, dim 5, [e2,e3,e4] = e1, [e3,e4,e5] = e2
    abelian:<n>:<d>     zero bracket
    nilpotent:<n>:<d>   single product [e_{d-n+1}, .., e_d] = e_1  (d > n)
    <name>+<name>...    direct sum
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from .algebra import NLieAlgebra, direct_sum, span, subalgebra_as_algebra
from .errors import PreconditionError
from .linalg import Field, Subspace


def simple_algebra(n: int, field: Field) -> NLieAlgebra:
    """``[e_1, .., ^e_i, .., e_{n+1}] = e_i`` for every i."""
    d = n + 1
    products = {}
    for i in range(1, d + 1):
        key = tuple(j for j in range(1, d + 1) if j != i)
        products[key] = {i: 1}
    return NLieAlgebra.from_products(n, d, field, products)


def example_3_1(field: Field) -> NLieAlgebra:
    return NLieAlgebra.from_products(3, 4, field, {(2, 3, 4): {1: 1}})


def example_3_2(field: Field) -> NLieAlgebra:
    return NLieAlgebra.from_products(3, 5, field, {(2, 3, 4): {1: 1}, (3, 4, 5): {2: 1}})


def nilpotent_family(n: int, d: int, field: Field) -> NLieAlgebra:
    """One product ``[e_{d-n+1}, .., e_d] = e_1``; ``nilpotent_family(3, 4)`` is ``example_3_1``."""
    if d <= n:
        raise ValueError("nilpotent family needs dim > arity")
    return NLieAlgebra.from_products(n, d, field, {tuple(range(d - n + 1, d + 1)): {1: 1}})


# -- claims --------------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    """A stated invariant value.

    ``key`` names the quantity; subspace values are 1-based basis indices of a
    coordinate span. ``subalgebra`` (1-based indices) points the claim at a
    coordinate subalgebra instead of the whole algebra. ``char0`` marks claims
    whose justification assumes characteristic zero.
    """

    key: str
    expected: object
    description: str
    source: str = "published"
    char0: bool = False
    subalgebra: tuple | None = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: Callable[[Field], NLieAlgebra]
    claims: tuple = ()
    notes: tuple = ()

    def build(self, field: Field) -> NLieAlgebra:
        return self.builder(field)


def _simple_entry(n: int) -> CatalogEntry:
    return CatalogEntry(
        f"simple:{n}",
        lambda f: simple_algebra(n, f),
        (
            Claim("simple", True, "the algebra is simple", char0=True),
            Claim("F", (), "the Frattini subalgebra is zero", char0=True),
            Claim("elementary", True, "the simple algebra is elementary", char0=True),
        ),
    )


_EX31 = CatalogEntry(
    "example_3_1",
    example_3_1,
    (
        Claim("F", (1,), "F(A) is spanned by e1"),
        Claim("phi", (1,), "Phi(A) = F(A) is spanned by e1", char0=True),
        Claim("e_algebra", True, "A is an E-algebra"),
        Claim("elementary", False, "A is not elementary"),
    ),
)

_EX32 = CatalogEntry(
    "example_3_2",
    example_3_2,
    (
        Claim("F", (), "F(A) = 0, so A is Phi-free"),
        Claim("phi", (1,), "the subalgebra span(e1..e4) has Frattini ideal span(e1)", subalgebra=(1, 2, 3, 4)),
        Claim("elementary", False, "A is not elementary"),
    ),
    notes=(
        "span(e2,e3,e4,e5) is offered as a maximal subalgebra but is not closed: [e2,e3,e4] = e1",
        "the algebra is nilpotent with A^1 = span(e1,e2), so every lattice computation forces F(A) = A^1",
    ),
)


def _abelian_entry(n: int, d: int) -> CatalogEntry:
    claims = [Claim("F", (), "an abelian algebra has zero Frattini subalgebra")]
    if d >= 1:
        claims.append(Claim("frattini_index", 1, "the Frattini index of an abelian algebra is one"))
    return CatalogEntry(f"abelian:{n}:{d}", lambda f: NLieAlgebra.abelian(n, d, f), tuple(claims))


def _nilpotent_entry(n: int, d: int) -> CatalogEntry:
    return CatalogEntry(
        f"nilpotent:{n}:{d}",
        lambda f: nilpotent_family(n, d, f),
        (
            Claim("F", (1,), "nilpotent: F(A) = A^1 = span(e1)", source="derived"),
            Claim("elementary", False, "nilpotent and non-abelian, hence not elementary", source="derived"),
        ),
    )


def _int_params(parts: list[str], count: int, name: str) -> list[int]:
    if len(parts) != count or not all(p.isdigit() for p in parts):
        raise ValueError(f"bad parameters for catalog entry {name!r}")
    return [int(p) for p in parts]


def get_entry(name: str) -> CatalogEntry:
    """Resolve a catalog name (see the module docstring) to an entry."""
    name = name.strip()
    if "+" in name:
        parts = [get_entry(p) for p in name.split("+")]
        return CatalogEntry(
            "+".join(p.name for p in parts),
            lambda f: direct_sum(*(p.build(f) for p in parts)),
        )
    head, *rest = name.split(":")
    if head == "example_3_1" and not rest:
        return _EX31
    if head == "example_3_2" and not rest:
        return _EX32
    if head == "simple":
        (n,) = _int_params(rest, 1, name)
        if n < 2:
            raise ValueError("simple:<n> needs n >= 2")
        return _simple_entry(n)
    if head == "abelian":
        n, d = _int_params(rest, 2, name)
        if n < 2:
            raise ValueError("arity must be at least 2")
        return _abelian_entry(n, d)
    if head == "nilpotent":
        n, d = _int_params(rest, 2, name)
        if n < 2 or d <= n:
            raise ValueError("nilpotent:<n>:<d> needs n >= 2 and d > n")
        return _nilpotent_entry(n, d)
    raise ValueError(f"unknown catalog entry {name!r}")


def build(name: str, field: Field) -> NLieAlgebra:
    return get_entry(name).build(field)


# Names shipped as canonical text files and used for catalog-wide checks.
STANDARD_NAMES = (
    "simple:2",
    "simple:3",
    "simple:4",
    "example_3_1",
    "example_3_2",
    "abelian:2:3",
    "abelian:3:4",
    "nilpotent:2:3",
    "nilpotent:3:5",
    "simple:2+simple:2",
    "simple:2+abelian:2:1",
    "example_3_1+abelian:3:1",
)


# -- audit ---------------------------------------------------------------------


@dataclass(frozen=True)
class ClaimResult:
    key: str
    description: str
    source: str
    expected: object
    computed: object
    status: str  # "match" | "mismatch" | "char-p-deviation" | "undecided: <reason>"


@dataclass(frozen=True)
class AuditReport:
    name: str
    field: Field
    results: tuple
    notes: tuple = ()

    @property
    def mismatches(self) -> list[ClaimResult]:
        return [r for r in self.results if r.status == "mismatch"]


def _coordinate_span(a: NLieAlgebra, indices) -> Subspace:
    return span(a, [a.e(i) for i in indices])


def _evaluate(key: str, a: NLieAlgebra):
    from . import frattini as fr
    from .structure import is_simple

    if key == "F":
        return fr.frattini(a).F
    if key == "phi":
        return fr.frattini(a).phi
    if key == "elementary":
        return fr.is_elementary(a).holds
    if key == "e_algebra":
        return fr.is_e_algebra(a).holds
    if key == "simple":
        return is_simple(a).simple
    if key == "frattini_index":
        return fr.frattini_series(a).index
    raise KeyError(key)


def audit(entry: CatalogEntry | str, field: Field) -> AuditReport:
    """Recompute every claim of ``entry`` over ``field`` and compare."""
    if isinstance(entry, str):
        entry = get_entry(entry)
    a = entry.build(field)
    results = []
    for claim in entry.claims:
        target = a
        if claim.subalgebra is not None:
            target, _ = subalgebra_as_algebra(a, _coordinate_span(a, claim.subalgebra))
        try:
            computed = _evaluate(claim.key, target)
        except PreconditionError as exc:
            results.append(
                ClaimResult(claim.key, claim.description, claim.source, claim.expected, None, f"undecided: {exc}")
            )
            continue
        if isinstance(computed, Subspace):
            expected = _coordinate_span(target, claim.expected)
            same = computed == expected
            shown_expected, shown_computed = expected.rows(), computed.rows()
        else:
            same = computed == claim.expected
            shown_expected, shown_computed = claim.expected, computed
        if same:
            status = "match"
        elif claim.char0 and field.characteristic != 0:
            status = "char-p-deviation"
        else:
            status = "mismatch"
        results.append(
            ClaimResult(claim.key, claim.description, claim.source, shown_expected, shown_computed, status)
        )
    return AuditReport(entry.name, field, tuple(results), entry.notes)
