"""Text and JSON formats for complexes and squarefree monomial ideals.

``.cplx``::

    # comment
    n 5
    1 2 3
    2 3 4
    -            <- the empty facet

JSON: ``{"n": 5, "facets": [[1, 2, 3], [2, 3, 4]]}``.

Ideals: an optional ``n`` header, then one monomial per line written either
as ``x1*x3*x4`` or as space-separated variable indices.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .complex import ComplexError, SimplicialComplex, face_mask, face_vertices, new_complex
from .hochster import MonomialIdeal, monomial_str

_HEADER = re.compile(r"^n\s+(\d+)$")
_VAR = re.compile(r"^x(\d+)$")


class FormatError(ValueError):
    """Raised when a complex or ideal file cannot be parsed."""


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_cplx(text: str) -> SimplicialComplex:
    n = None
    facets: list[list[int]] = []
    for lineno, line in _content_lines(text):
        m = _HEADER.match(line)
        if m:
            if n is not None or facets:
                raise FormatError(f"line {lineno}: 'n' header must come first and only once")
            n = int(m.group(1))
            continue
        if line == "-":
            facets.append([])
            continue
        try:
            facets.append([int(tok) for tok in line.split(" ") if tok])
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers, got {line!r}") from None
    if not facets:
        raise FormatError("no facets found")
    try:
        return new_complex(facets, n)
    except ComplexError as exc:
        raise FormatError(str(exc)) from None


def format_cplx(cx: SimplicialComplex) -> str:
    lines = [f"n {cx.n}"]
    for f in cx.facets:
        lines.append(" ".join(map(str, face_vertices(f))) if f else "-")
    return "\n".join(lines) + "\n"


def complex_to_json(cx: SimplicialComplex) -> dict:
    return {"n": cx.n, "facets": cx.facet_lists()}


def complex_from_json(data: dict) -> SimplicialComplex:
    try:
        return new_complex(data["facets"], data.get("n"))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad complex JSON: {exc}") from None
    except ComplexError as exc:
        raise FormatError(str(exc)) from None


def parse_complex_text(text: str) -> SimplicialComplex:
    """Accept either the ``.cplx`` format or JSON."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
        return complex_from_json(data)
    return parse_cplx(text)


def read_complex(path: str | Path) -> SimplicialComplex:
    return parse_complex_text(Path(path).read_text())


def parse_ideal(text: str) -> MonomialIdeal:
    n = None
    gens: list[int] = []
    for lineno, line in _content_lines(text):
        m = _HEADER.match(line)
        if m:
            n = int(m.group(1))
            continue
        if "x" in line:
            toks = [t.strip() for t in line.split("*")]
            idx = []
            for t in toks:
                vm = _VAR.match(t)
                if not vm:
                    raise FormatError(f"line {lineno}: bad monomial factor {t!r}")
                idx.append(int(vm.group(1)))
        else:
            try:
                idx = [int(t) for t in line.split()]
            except ValueError:
                raise FormatError(f"line {lineno}: bad monomial {line!r}") from None
        if len(set(idx)) != len(idx):
            raise FormatError(f"line {lineno}: monomial is not squarefree")
        try:
            gens.append(face_mask(idx))
        except ComplexError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if not gens:
        raise FormatError("no generators found")
    top = max(g.bit_length() for g in gens)
    if n is None:
        n = top
    elif top > n:
        raise FormatError(f"variable x{top} exceeds n={n}")
    try:
        return MonomialIdeal(n, tuple(gens))
    except ComplexError as exc:
        raise FormatError(str(exc)) from None


def format_ideal(ideal: MonomialIdeal) -> str:
    return "\n".join([f"n {ideal.n}"] + [monomial_str(g) for g in ideal.generators]) + "\n"


def looks_like_ideal(text: str) -> bool:
    return any("x" in line for _, line in _content_lines(text))
