"""Exact arithmetic for n-Lie (Filippov) algebras and their Frattini theory."""

from .algebra import (
    NLieAlgebra,
    classify_subspace,
    direct_sum,
    generated_subalgebra,
    ideal_closure,
    is_ideal,
    is_subalgebra,
    quotient,
    span,
    subalgebra_as_algebra,
    validate_algebra,
)
from .analysis import AnalysisConfig, AnalysisReport, analyze
from .catalog import audit, build
from .errors import CapExceededError, FieldMismatchError, NLieError, ParseError, PreconditionError
from .fileformat import parse_file, parse_text, serialize
from .frattini import (
    elementary_commutator,
    enumerate_substructures,
    find_complement,
    frattini_series,
    is_complemented,
    is_e_algebra,
    is_elementary,
    is_non_generator,
    is_phi_free,
)
from .linalg import Field, Subspace, enumerate_subspaces, rref
from .structure import (
    derivation_algebra,
    derived_subalgebra,
    ideal_series,
    is_nilpotent,
    is_simple,
    normalizer,
    strong_semisimple_decomposition,
)

__version__ = "0.1.0"
