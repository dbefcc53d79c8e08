"""Command-line driver.

Exit codes: 0 completed, 1 parse or usage error, 2 precondition not met
(for example a Frattini computation over Q with no shortcut, or a lattice
larger than ``--cap``).
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from typing import Sequence

from . import frattini as fr
from . import report as rp
from .algebra import NLieAlgebra, validate_algebra
from .analysis import AnalysisConfig, analyze
from .catalog import audit, get_entry
from .errors import CapExceededError, NLieError, ParseError, PreconditionError
from .fileformat import parse_file, serialize
from .generators import random_algebra
from .linalg import Field, default_cap, galois_number
from .structure import derivation_algebra, derivation_residuals, derived_subalgebra, ideal_series

COMMANDS = ("validate", "analyze", "frattini", "series", "derivations", "audit", "enumerate", "export")

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nlie", description="Exact invariants of n-Lie algebras given by structure constants.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", nargs="?", help="algebra file (alternative to --catalog)")
    p.add_argument("--catalog", metavar="NAME", help="catalog entry, e.g. example_3_1, simple:3, random:3:4")
    p.add_argument("--field", metavar="SPEC", help="gf:<p> or q; defaults to the file's field, or q for catalog entries")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    p.set_defaults(fmt="text")
    p.add_argument("--cap", type=int, default=None, help="largest dimension to enumerate (env NLIE_CAP)")
    p.add_argument("--strict", action="store_true", help="treat fundamental-identity failures as errors")
    p.add_argument("--seed", type=int, default=0, help="seed for random:<n>:<d> catalog names")
    p.add_argument("--list", action="store_true", help="enumerate: list every subalgebra")
    p.add_argument("--timing", action="store_true", help="add elapsed milliseconds (makes output nondeterministic)")
    return p


def _parse_field(spec: str | None) -> Field | None:
    if spec is None:
        return None
    try:
        return Field.from_spec(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def load_algebra(args) -> tuple[NLieAlgebra, str]:
    """Resolve the file or catalog argument to an algebra and a source label."""
    field = _parse_field(args.field)
    if bool(args.file) == bool(args.catalog):
        raise UsageError("give exactly one of a file or --catalog")
    if args.file:
        a = parse_file(args.file)
        if field is not None and field != a.field:
            try:
                a = a.restrict_field(field)
            except ZeroDivisionError:
                raise UsageError(f"a structure constant has a denominator divisible by {field.modulus}") from None
        return a, args.file
    name = args.catalog
    field = field or Field.rationals()
    if name.startswith("random:"):
        parts = name.split(":")
        if len(parts) != 3 or not all(x.isdigit() for x in parts[1:]):
            raise UsageError("random entries are named random:<arity>:<dim>")
        if not field.is_finite:
            raise UsageError("random algebras need --field gf:<p>")
        n, d = int(parts[1]), int(parts[2])
        if n < 2:
            raise UsageError("arity must be at least 2")
        return random_algebra(random.Random(args.seed), n, d, field), f"{name} seed={args.seed}"
    try:
        entry = get_entry(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return entry.build(field), name


def _catalog_name(args) -> str | None:
    if args.catalog and not args.catalog.startswith("random:"):
        return args.catalog
    return None


def _cmd_validate(a, args) -> dict:
    return {"validation": rp.validation_json(a, validate_algebra(a))}


def _cmd_analyze(a, args) -> dict:
    config = AnalysisConfig(cap=args.cap, strict=args.strict)
    return {"analysis": rp.analysis_json(analyze(a, config, catalog_name=_catalog_name(args)))}


def _cmd_frattini(a, args) -> dict:
    f_sub, phi = fr.frattini(a, args.cap)
    method = "lattice enumeration" if a.field.is_finite else "shortcut"
    return {"frattini": {"F": rp.subspace_json(f_sub), "phi": rp.subspace_json(phi), "method": method}}


def _cmd_series(a, args) -> dict:
    out = {
        "derived": rp.subspace_json(derived_subalgebra(a)),
        "ideal_series": rp.series_json(ideal_series(a)),
        "frattini_series": None,
        "notes": [],
    }
    try:
        out["frattini_series"] = rp.frattini_series_json(fr.frattini_series(a, args.cap))
    except PreconditionError as exc:
        out["notes"].append(f"Frattini series not computed: {exc}")
    return {"series": out}


def _cmd_derivations(a, args) -> dict:
    der = derivation_algebra(a)
    f = a.field
    residual_free = all(not derivation_residuals(a, m) for m in der.basis)
    return {
        "derivations": {
            "dim": der.dim,
            "basis": [[rp.vector_json(f, row) for row in m] for m in der.basis],
            "residual_free": residual_free,
        }
    }


def _cmd_audit(a, args) -> dict:
    name = _catalog_name(args)
    if name is None:
        raise UsageError("audit needs a --catalog entry")
    rep = audit(name, a.field)
    return {"claim_audit": rp.audit_json(rep), "notes": list(rep.notes)}


def _cmd_enumerate(a, args) -> dict:
    lat = fr.enumerate_substructures(a, args.cap)
    out = {
        "subspace_count": lat.subspace_count,
        "galois_number": galois_number(a.dim, a.field.modulus),
        "subalgebra_count": len(lat.subalgebras),
        "ideal_count": len(lat.ideals),
        "maximal_count": len(lat.maximal),
        "maximal": [rp.subspace_json(m) for m in lat.maximal],
        "ideals": [rp.subspace_json(i) for i in lat.ideals],
    }
    if args.list:
        out["subalgebras"] = [rp.subspace_json(s) for s in lat.subalgebras]
    return {"enumeration": out}


def _cmd_export(a, args) -> str:
    return serialize(a)


HANDLERS = {
    "validate": _cmd_validate,
    "analyze": _cmd_analyze,
    "frattini": _cmd_frattini,
    "series": _cmd_series,
    "derivations": _cmd_derivations,
    "audit": _cmd_audit,
    "enumerate": _cmd_enumerate,
    "export": _cmd_export,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.cap is None:
        args.cap = default_cap()
    try:
        start = time.perf_counter()
        a, source = load_algebra(args)
        check = validate_algebra(a, limit=1)
        if not check.ok:
            if args.strict:
                raise ParseError("structure constants violate the fundamental identity")
            if args.command != "validate":
                print("warning: structure constants violate the fundamental identity", file=err)
        result = HANDLERS[args.command](a, args)
        if isinstance(result, str):
            out.write(result)
            return EXIT_OK
        doc = rp.header(args.command, a, source)
        doc.update(result)
        if args.timing:
            doc["elapsed_ms"] = round((time.perf_counter() - start) * 1000)
    except (PreconditionError, CapExceededError) as exc:
        print(f"nlie: {exc}", file=err)
        return EXIT_PRECONDITION
    except (ParseError, UsageError, OSError, NLieError, ValueError) as exc:
        print(f"nlie: {exc}", file=err)
        return EXIT_USAGE
    out.write(rp.dumps(doc) if args.fmt == "json" else rp.to_text(doc) + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
