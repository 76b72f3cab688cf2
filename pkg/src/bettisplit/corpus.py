"""Built-in triangulations with their known invariants.

Each entry is re-validated the first time it is loaded: f-vector, reduced
Betti numbers over Q, F2, F3 and F5, the closed-pseudomanifold flag and the
orientability verdict must all match the record below.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from importlib import resources

from .complex import SimplicialComplex, is_closed_pseudomanifold
from .exactla import FieldSpec
from .hochster import f_vector
from .homology import matrix_reduced_betti
from .io import parse_cplx
from .splitting import orientability


class CorpusError(LookupError):
    pass


@dataclass(frozen=True)
class Expected:
    f_vector: tuple[int, ...]
    betti: dict[int, tuple[int, ...]]  # characteristic -> (b_-1, b_0, ..., b_d)
    pseudomanifold: bool
    orientable: bool | None  # None: not a connected closed pseudomanifold
    sizes: tuple[int, int] | None = None  # (vertices, facets) where a size is prescribed


def _same(vec):
    return {0: vec, 2: vec, 3: vec, 5: vec}


_RECORDS: dict[str, tuple[str, Expected]] = {
    "rp2": ("real projective plane", Expected(
        (1, 6, 15, 10), {0: (0, 0, 0, 0), 2: (0, 0, 1, 1), 3: (0, 0, 0, 0), 5: (0, 0, 0, 0)},
        True, False, (6, 10))),
    "klein": ("Klein bottle", Expected(
        (1, 8, 24, 16), {0: (0, 0, 1, 0), 2: (0, 0, 2, 1), 3: (0, 0, 1, 0), 5: (0, 0, 1, 0)},
        True, False, (8, 16))),
    "dunce": ("dunce hat", Expected(
        (1, 8, 24, 17), _same((0, 0, 0, 0)), False, None, (8, 17))),
    "moore3": ("mod 3 Moore space", Expected(
        (1, 9, 27, 19), {0: (0, 0, 0, 0), 2: (0, 0, 0, 0), 3: (0, 0, 1, 1), 5: (0, 0, 0, 0)},
        False, None, (9, 19))),
    "torus7": ("torus", Expected((1, 7, 21, 14), _same((0, 0, 2, 1)), True, True, (7, 14))),
    "s2": ("2-sphere", Expected((1, 4, 6, 4), _same((0, 0, 0, 1)), True, True)),
    "s3": ("3-sphere", Expected((1, 5, 10, 10, 5), _same((0, 0, 0, 0, 1)), True, True)),
    "paper-ex-2-3": ("<123,234,245,345>", Expected(
        (1, 5, 8, 4), _same((0, 0, 0, 0)), False, None)),
    "paper-ex-4-5": ("<123,345,246>", Expected(
        (1, 6, 9, 3), _same((0, 0, 1, 0)), False, None)),
}

ALIASES = {"RP2": "rp2", "K": "klein", "D": "dunce", "M": "moore3", "T": "torus7",
           "torus": "torus7", "moore": "moore3"}


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    description: str
    complex: SimplicialComplex
    expected: Expected


_cache: dict[str, CorpusEntry] = {}
_lock = threading.Lock()


def names() -> list[str]:
    return list(_RECORDS)


def resolve(name: str) -> str:
    key = ALIASES.get(name, name)
    if key not in _RECORDS:
        raise CorpusError(f"unknown corpus entry {name!r}; known: {', '.join(names())}")
    return key


def raw_text(name: str) -> str:
    key = resolve(name)
    return resources.files(__package__).joinpath("data", f"{key}.cplx").read_text()


def validate(entry: CorpusEntry) -> None:
    cx, exp = entry.complex, entry.expected
    problems = []
    if f_vector(cx) != exp.f_vector:
        problems.append(f"f-vector {f_vector(cx)} != {exp.f_vector}")
    for p, vec in exp.betti.items():
        got = matrix_reduced_betti(cx, FieldSpec(p))
        if got != vec:
            problems.append(f"Betti numbers over {FieldSpec(p)}: {got} != {vec}")
    if is_closed_pseudomanifold(cx)[0] != exp.pseudomanifold:
        problems.append("closed-pseudomanifold flag mismatch")
    orient = orientability(cx).value
    want = {True: "orientable", False: "non_orientable", None: "not_applicable"}[exp.orientable]
    if orient != want:
        problems.append(f"orientability {orient} != {want}")
    if exp.sizes and (cx.n, len(cx.facets)) != exp.sizes:
        problems.append(f"sizes {(cx.n, len(cx.facets))} != {exp.sizes}")
    if problems:
        raise CorpusError(f"corpus entry {entry.name!r} failed validation: " + "; ".join(problems))


def load(name: str) -> CorpusEntry:
    key = resolve(name)
    with _lock:
        if key not in _cache:
            desc, exp = _RECORDS[key]
            entry = CorpusEntry(key, desc, parse_cplx(raw_text(key)), exp)
            validate(entry)
            _cache[key] = entry
        return _cache[key]


def get(name: str) -> SimplicialComplex:
    return load(name).complex
