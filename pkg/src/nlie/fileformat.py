"""Plain-text structure-constant files.

::

    nlie
    arity 3
    dim 4
    field gf 2
    # [e2, e3, e4] = e1
    bracket 2 3 4 = 1*1

Tuples must be strictly increasing and 1-based; coefficients are integers
or ``a/b``. A missing tuple means the bracket is zero.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .algebra import NLieAlgebra
from .errors import ParseError
from .linalg import Field

_TERM = re.compile(r"^([+-]?\d+(?:/\d+)?)\*(\d+)$")


def _field_from_header(words: list[str], line: int) -> Field:
    if words == ["q"]:
        return Field.rationals()
    if len(words) == 2 and words[0] == "gf" and words[1].isdigit():
        try:
            return Field.gf(int(words[1]))
        except ValueError as exc:
            raise ParseError(str(exc), line) from None
    raise ParseError(f"unknown field spec {' '.join(words)!r}", line)


def _parse_header_int(words: list[str], key: str, line: int) -> int:
    if len(words) != 2 or not words[1].isdigit():
        raise ParseError(f"expected '{key} <integer>'", line)
    return int(words[1])


def _split_terms(rhs: str, line: int) -> list[tuple[Fraction, int]]:
    text = rhs.replace(" ", "")
    if text in ("", "0"):
        return []
    # split before every sign that is not at the start
    pieces = re.split(r"(?<=.)(?=[+-])", text)
    out = []
    for piece in pieces:
        if piece.startswith("+"):
            piece = piece[1:]
        m = _TERM.match(piece)
        if not m:
            raise ParseError(f"bad term {piece!r}; expected <coefficient>*<index>", line)
        coeff, index = m.groups()
        num, _, den = coeff.partition("/")
        if den and int(den) == 0:
            raise ParseError("zero denominator", line)
        out.append((Fraction(int(num), int(den) if den else 1), int(index)))
    return out


def parse_text(text: str) -> NLieAlgebra:
    """Build an algebra from file contents. Validation is left to the caller."""
    header: dict = {}
    body: list[tuple[int, str]] = []
    seen_magic = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if not seen_magic:
            if words != ["nlie"]:
                raise ParseError("first line must be 'nlie'", lineno)
            seen_magic = True
            continue
        key = words[0]
        if key in ("arity", "dim"):
            if key in header:
                raise ParseError(f"duplicate {key}", lineno)
            header[key] = _parse_header_int(words, key, lineno)
        elif key == "field":
            if "field" in header:
                raise ParseError("duplicate field", lineno)
            header["field"] = _field_from_header(words[1:], lineno)
        elif key == "bracket":
            body.append((lineno, line))
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    if not seen_magic:
        raise ParseError("empty file")
    for key in ("arity", "dim", "field"):
        if key not in header:
            raise ParseError(f"missing '{key}' header")
    n, d, field = header["arity"], header["dim"], header["field"]
    if n < 2:
        raise ParseError("arity must be at least 2")

    products: dict[tuple, dict] = {}
    for lineno, line in body:
        lhs, eq, rhs = line[len("bracket") :].partition("=")
        if not eq:
            raise ParseError("missing '='", lineno)
        idx_words = lhs.split()
        if not all(w.isdigit() for w in idx_words):
            raise ParseError("bracket indices must be positive integers", lineno)
        idx = tuple(int(w) for w in idx_words)
        if len(idx) != n:
            raise ParseError(f"expected {n} indices, got {len(idx)}", lineno)
        if any(not 1 <= i <= d for i in idx):
            raise ParseError(f"index out of range 1..{d}", lineno)
        if any(x >= y for x, y in zip(idx, idx[1:])):
            raise ParseError("indices must be strictly increasing", lineno)
        if idx in products:
            raise ParseError(f"duplicate bracket {' '.join(map(str, idx))}", lineno)
        value: dict[int, object] = {}
        for coeff, k in _split_terms(rhs, lineno):
            if not 1 <= k <= d:
                raise ParseError(f"index out of range 1..{d}", lineno)
            try:
                c = field(coeff)
            except ZeroDivisionError:
                raise ParseError(f"coefficient {coeff} has denominator divisible by {field.modulus}", lineno) from None
            value[k] = field(value.get(k, field.zero) + c)
        products[idx] = value
    return NLieAlgebra.from_products(n, d, field, products)


def parse_file(path) -> NLieAlgebra:
    return parse_text(Path(path).read_text(encoding="utf-8"))


def _render_term(field: Field, c, k: int) -> str:
    return f"{field.render(c)}*{k}"


def serialize(a: NLieAlgebra) -> str:
    """Canonical text: sorted tuples, reduced coefficients, zero brackets omitted."""
    f = a.field
    lines = ["nlie", f"arity {a.arity}", f"dim {a.dim}", "field q" if not f.is_finite else f"field gf {f.modulus}"]
    for xs, vec in a.table:
        terms = [_render_term(f, c, k + 1) for k, c in enumerate(vec) if c]
        rhs = terms[0]
        for t in terms[1:]:
            rhs += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        lines.append("bracket " + " ".join(str(x + 1) for x in xs) + " = " + rhs)
    return "\n".join(lines) + "\n"


def write_file(a: NLieAlgebra, path) -> None:
    Path(path).write_text(serialize(a), encoding="utf-8")
