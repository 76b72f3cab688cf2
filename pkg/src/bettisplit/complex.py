"""Abstract simplicial complexes on the ground set ``[n] = {1, ..., n}``.

Faces are stored as integer bitmasks (bit ``v - 1`` set iff vertex ``v`` is in
the face), which makes subset and intersection tests single integer ops.
A complex is immutable and carries its ambient ``n`` explicitly: the Alexander
dual ideal depends on it, so it is never re-inferred after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 64


class ComplexError(ValueError):
    """Raised for malformed complexes, faces or decompositions."""


def face_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if v < 1:
            raise ComplexError(f"vertices must be positive integers, got {v}")
        mask |= 1 << (v - 1)
    return mask


def face_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def face_size(mask: int) -> int:
    return mask.bit_count()


def face_key(mask: int) -> tuple[int, ...]:
    """Lexicographic sort key of a face (on its sorted vertex tuple)."""
    return face_vertices(mask)


def format_face(mask: int) -> str:
    """``123`` style label for small vertices, ``1.10.12`` otherwise."""
    verts = face_vertices(mask)
    if not verts:
        return "{}"
    if all(v < 10 for v in verts):
        return "".join(map(str, verts))
    return ".".join(map(str, verts))


def maximalize(masks: Iterable[int]) -> tuple[int, ...]:
    """Drop every face contained in another one; result sorted lexicographically."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=face_key))


def _subsets(mask: int):
    # all submasks of mask, including 0 and mask itself
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets (bitmasks) over ``[n]``.

    Use :func:`new_complex` to build one from vertex lists; the raw
    constructor expects facets that are already maximalized and sorted.
    """

    n: int
    facets: tuple[int, ...]

    def __post_init__(self):
        if not self.facets:
            raise ComplexError("the void complex (no faces) is not supported")
        if not 0 <= self.n <= MAX_VERTICES:
            raise ComplexError(f"n must lie in [0, {MAX_VERTICES}], got {self.n}")
        full = (1 << self.n) - 1
        for f in self.facets:
            if f & ~full:
                raise ComplexError(
                    f"facet {face_vertices(f)} has a vertex exceeding n={self.n}")

    # -- basic data -----------------------------------------------------
    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_irrelevant(self) -> bool:
        """True for the complex ``{emptyset}``."""
        return self.facets == (0,)

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    def facet_lists(self) -> list[list[int]]:
        return [list(face_vertices(f)) for f in self.facets]

    @cached_property
    def face_set(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(_subsets(f))
        return frozenset(out)

    def faces_by_dim(self) -> dict[int, list[int]]:
        """Faces grouped by dimension, each group sorted lexicographically."""
        groups: dict[int, list[int]] = {}
        for f in self.face_set:
            groups.setdefault(f.bit_count() - 1, []).append(f)
        for k in groups:
            groups[k].sort(key=face_key)
        return groups

    def __contains__(self, face) -> bool:
        mask = face if isinstance(face, int) else face_mask(face)
        return any(mask & f == mask for f in self.facets)

    def __len__(self) -> int:
        return len(self.facets)

    def __str__(self) -> str:
        return "<" + ",".join(format_face(f) for f in self.facets) + ">"


def new_complex(facet_list: Sequence[Iterable[int]], n: int | None = None) -> SimplicialComplex:
    """Build a complex from vertex lists, removing duplicate and non-maximal faces.

    >>> str(new_complex([[1, 2, 3], [2, 3], [2, 3, 4]]))
    '<123,234>'
    """
    facet_list = list(facet_list)
    if not facet_list:
        raise ComplexError("empty facet list: the void complex is not supported")
    masks = [face_mask(f) for f in facet_list]
    top = max((m.bit_length() for m in masks), default=0)
    if n is None:
        n = top
    elif top > n:
        raise ComplexError(f"vertex {top} exceeds the declared n={n}")
    return SimplicialComplex(n, maximalize(masks))


def faces(cx: SimplicialComplex) -> frozenset[int]:
    return cx.face_set


def link(cx: SimplicialComplex, face) -> SimplicialComplex:
    """Link of ``face`` in ``cx``; raises if ``face`` is not a face of ``cx``."""
    mask = face if isinstance(face, int) else face_mask(face)
    stripped = [f & ~mask for f in cx.facets if f & mask == mask]
    if not stripped:
        raise ComplexError(f"{face_vertices(mask)} is not a face of {cx}")
    return SimplicialComplex(cx.n, maximalize(stripped))


def intersect(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.n != b.n:
        raise ComplexError(f"ambient sizes differ: {a.n} != {b.n}")
    return SimplicialComplex(a.n, maximalize(f & g for f in a.facets for g in b.facets))


def union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.n != b.n:
        raise ComplexError(f"ambient sizes differ: {a.n} != {b.n}")
    return SimplicialComplex(a.n, maximalize(a.facets + b.facets))


def delete_face(cx: SimplicialComplex, facet: int) -> SimplicialComplex:
    """The complex ``cx`` minus the single face ``facet`` (its boundary stays)."""
    if facet not in cx.facets:
        raise ComplexError(f"{face_vertices(facet)} is not a facet of {cx}")
    rest = [f for f in cx.facets if f != facet]
    rest.extend(facet & ~(1 << (v - 1)) for v in face_vertices(facet))
    if not rest:
        raise ComplexError("deleting the only face of {emptyset} leaves the void complex")
    return SimplicialComplex(cx.n, maximalize(rest))


@dataclass(frozen=True)
class StandardDecomposition:
    """An unordered bipartition of the facet set of a complex.

    ``part1`` always holds the lexicographically least facet.
    """

    n: int
    part1: tuple[int, ...]
    part2: tuple[int, ...]

    @classmethod
    def from_parts(cls, cx: SimplicialComplex, part1: Iterable[int],
                   part2: Iterable[int] | None = None) -> "StandardDecomposition":
        p1 = set(part1)
        p2 = set(cx.facets) - p1 if part2 is None else set(part2)
        all_facets = set(cx.facets)
        if not p1 or not p2:
            raise ComplexError("both parts of a standard decomposition must be nonempty")
        if p1 & p2 or (p1 | p2) != all_facets:
            raise ComplexError("parts do not partition the facet set")
        first = cx.facets[0]
        if first not in p1:
            p1, p2 = p2, p1
        return cls(cx.n, tuple(sorted(p1, key=face_key)), tuple(sorted(p2, key=face_key)))

    @classmethod
    def from_indices(cls, cx: SimplicialComplex, indices: Iterable[int]) -> "StandardDecomposition":
        """Part one given by 0-based indices into ``cx.facets``."""
        idx = set(indices)
        bad = [i for i in idx if not 0 <= i < len(cx.facets)]
        if bad:
            raise ComplexError(f"facet indices out of range: {sorted(bad)}")
        return cls.from_parts(cx, (cx.facets[i] for i in idx))

    @property
    def first(self) -> SimplicialComplex:
        return SimplicialComplex(self.n, self.part1)

    @property
    def second(self) -> SimplicialComplex:
        return SimplicialComplex(self.n, self.part2)

    @property
    def whole(self) -> SimplicialComplex:
        return SimplicialComplex(self.n, tuple(sorted(self.part1 + self.part2, key=face_key)))

    def intersection(self) -> SimplicialComplex:
        return intersect(self.first, self.second)

    def check_against(self, cx: SimplicialComplex) -> None:
        if cx.n != self.n or set(self.part1) | set(self.part2) != set(cx.facets) \
                or set(self.part1) & set(self.part2):
            raise ComplexError("decomposition is not a partition of the facets of the complex")

    def __str__(self) -> str:
        return f"{self.first} u {self.second}"


def remove_facet(cx: SimplicialComplex, facet) -> StandardDecomposition:
    """Split off one facet: ``(<G : G != facet>, <facet>)``."""
    mask = facet if isinstance(facet, int) else face_mask(facet)
    if mask not in cx.facets:
        raise ComplexError(f"{face_vertices(mask)} is not a facet of {cx}")
    if len(cx.facets) < 2:
        raise ComplexError("cannot split a complex with a single facet")
    return StandardDecomposition.from_parts(cx, [f for f in cx.facets if f != mask], [mask])


def is_pure(cx: SimplicialComplex) -> bool:
    return len({f.bit_count() for f in cx.facets}) == 1


def is_closed_pseudomanifold(cx: SimplicialComplex) -> tuple[bool, int | None]:
    """Check purity and that every ridge lies in exactly two facets.

    Returns ``(ok, offending_face)``; the offending face is a facet of the
    wrong dimension or a ridge with the wrong number of cofaces.
    """
    d = cx.dim
    if d < 1:
        return False, cx.facets[0]
    for f in cx.facets:
        if f.bit_count() != d + 1:
            return False, f
    counts: dict[int, int] = {}
    for f in cx.facets:
        for v in face_vertices(f):
            ridge = f & ~(1 << (v - 1))
            counts[ridge] = counts.get(ridge, 0) + 1
    for ridge in sorted(counts, key=face_key):
        if counts[ridge] != 2:
            return False, ridge
    return True, None


def k_faces(cx: SimplicialComplex, k: int) -> list[int]:
    """Sorted list of the ``k``-dimensional faces."""
    seen = set()
    for f in cx.facets:
        verts = face_vertices(f)
        if len(verts) < k + 1:
            continue
        for c in combinations(verts, k + 1):
            seen.add(face_mask(c))
    return sorted(seen, key=face_key)
