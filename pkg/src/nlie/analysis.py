"""One-call bundle of every invariant the library computes for an algebra."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import frattini as fr
from .algebra import NLieAlgebra, ValidationReport, validate_algebra
from .catalog import AuditReport, audit, get_entry
from .errors import PreconditionError
from .linalg import DEFAULT_CAP, Field, Subspace
from .structure import (
    SeriesResult,
    SimplicityResult,
    derived_subalgebra,
    ideal_series,
    is_simple,
    strong_semisimple_decomposition,
)

VERDICTS = (
    "abelian",
    "nilpotent",
    "simple",
    "strong_semisimple",
    "phi_free",
    "elementary",
    "e_algebra",
    "complemented",
    "frattini_is_ideal",
)


@dataclass(frozen=True)
class AnalysisConfig:
    cap: int = DEFAULT_CAP
    # prime used to certify simplicity of an algebra over Q
    simplicity_prime: int = 101
    strict: bool = False


@dataclass
class AnalysisReport:
    algebra: NLieAlgebra
    validation: ValidationReport
    derived: Subspace
    ideal_series: SeriesResult
    F: Subspace | None = None
    phi: Subspace | None = None
    frattini_method: str | None = None
    frattini_series: fr.FrattiniSeries | None = None
    E: Subspace | None = None
    S: Subspace | None = None
    quotient_elementary: bool | None = None
    verdicts: dict = dc_field(default_factory=dict)
    witnesses: dict = dc_field(default_factory=dict)
    simplicity: SimplicityResult | None = None
    decomposition: list | None = None
    claim_audit: AuditReport | None = None
    notes: list = dc_field(default_factory=list)


def _frattini_method(a: NLieAlgebra, series: SeriesResult) -> str:
    if a.field.is_finite:
        return "lattice enumeration"
    if a.is_abelian:
        return "abelian shortcut (F = 0)"
    return "nilpotent shortcut (F = A^1)"


def analyze(a: NLieAlgebra, config: AnalysisConfig = AnalysisConfig(), catalog_name: str | None = None) -> AnalysisReport:
    """Compute everything that is decidable for ``a`` over its field.

    Over GF(p) every invariant is computed by lattice enumeration. Over Q the
    lattice-based fields stay ``None`` unless a shortcut applies, and a note
    says so.
    """
    validation = validate_algebra(a)
    if config.strict and not validation.ok:
        raise PreconditionError("structure constants violate the fundamental identity")
    series = ideal_series(a)
    rep = AnalysisReport(a, validation, derived_subalgebra(a), series)
    rep.verdicts = {k: None for k in VERDICTS}
    rep.verdicts["abelian"] = a.is_abelian
    rep.verdicts["nilpotent"] = series.nilpotent
    if not validation.ok:
        rep.notes.append("the bracket fails the fundamental identity; invariants below describe the table as given")

    try:
        rep.simplicity = is_simple(a, prime=config.simplicity_prime)
        rep.verdicts["simple"] = rep.simplicity.simple
        if rep.simplicity.witness is not None:
            rep.witnesses["simple"] = rep.simplicity.witness
        rep.notes.append(f"simplicity: {rep.simplicity.method}")
    except PreconditionError as exc:
        rep.notes.append(f"simplicity not decided: {exc}")

    finite = a.field.is_finite
    try:
        rep.F, rep.phi = fr.frattini(a, config.cap)
        rep.frattini_method = _frattini_method(a, series)
        rep.frattini_series = fr.frattini_series(a, config.cap)
        rep.verdicts["phi_free"] = rep.phi.dim == 0
        rep.verdicts["frattini_is_ideal"] = rep.F == rep.phi
    except PreconditionError as exc:
        rep.notes.append(f"Frattini subalgebra not computed: {exc}")

    if finite:
        rep.decomposition = strong_semisimple_decomposition(a)
        rep.verdicts["strong_semisimple"] = rep.decomposition is not None
        for key, func in (("elementary", fr.is_elementary), ("e_algebra", fr.is_e_algebra), ("complemented", fr.is_complemented)):
            v = func(a, config.cap)
            rep.verdicts[key] = v.holds
            if v.witness is not None:
                rep.witnesses[key] = v.witness
        rep.E, rep.S, rep.quotient_elementary = fr.elementary_commutator(a, config.cap)
        if not rep.quotient_elementary:
            rep.notes.append("A/E(A) is not elementary over this field")
        if rep.F != rep.phi:
            rep.notes.append(
                f"characteristic {a.field.characteristic}: F(A) is not an ideal "
                f"(dim F = {rep.F.dim}, dim phi = {rep.phi.dim}); in characteristic 0 the two coincide"
            )
        rep.notes.append("strong semi-simple means a direct sum of simple ideals")
    else:
        rep.notes.append("lattice predicates need a prime field; rerun with --field gf:<p>")

    if catalog_name is not None:
        entry = get_entry(catalog_name)
        if entry.claims:
            rep.claim_audit = audit(entry, a.field)
        rep.notes.extend(entry.notes)
    return rep


def analyze_catalog(name: str, field: Field, config: AnalysisConfig = AnalysisConfig()) -> AnalysisReport:
    return analyze(get_entry(name).build(field), config, catalog_name=name)
