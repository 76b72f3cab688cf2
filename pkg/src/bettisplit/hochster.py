"""Alexander dual ideals and their Betti numbers through link homology.

Betti numbers of ``I*`` are never obtained from a free resolution. Each face
``G`` of the complex contributes ``dim H~_{i-1}(lk G)`` to the multidegree
whose support is ``[n] \\ G``, and graded numbers sum these over ``|G| = n - j``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .complex import ComplexError, SimplicialComplex, face_key, face_vertices, link, maximalize
from .exactla import QQ, FieldSpec
from .homology import reduced_betti_all


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal; each generator is a bitmask of its support.

    Generators are kept in lexicographic order of their supports, so equal
    ideals compare equal.
    """

    n: int
    generators: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.n) - 1
        for g in self.generators:
            if g == 0:
                raise ComplexError("the unit monomial 1 is not allowed as a generator")
            if g & ~full:
                raise ComplexError(f"generator {face_vertices(g)} uses a variable beyond x{self.n}")
        gens = self.generators
        for a in gens:
            for b in gens:
                if a != b and a & b == a:
                    raise ComplexError(
                        f"{monomial_str(a)} divides {monomial_str(b)}: not a minimal generating set")
        if len(set(gens)) != len(gens):
            raise ComplexError("duplicate generators")
        object.__setattr__(self, "generators", tuple(sorted(gens, key=face_key)))

    def __str__(self) -> str:
        return "(" + ", ".join(monomial_str(g) for g in self.generators) + ")"


def monomial_str(mask: int) -> str:
    return "*".join(f"x{v}" for v in face_vertices(mask)) or "1"


def alexander_dual_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """``I* = (x_{[n] \\ F} : F facet)``."""
    full = (1 << cx.n) - 1
    if full in cx.facets:
        raise ComplexError("a facet equal to [n] gives the unit ideal")
    gens = tuple(sorted((full & ~f for f in cx.facets), key=face_key))
    return MonomialIdeal(cx.n, gens)


def complex_from_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    full = (1 << ideal.n) - 1
    if not ideal.generators:
        raise ComplexError("the zero ideal corresponds to the void complex")
    return SimplicialComplex(ideal.n, maximalize(full & ~g for g in ideal.generators))


@dataclass
class BettiTable:
    """Graded and multigraded Betti numbers of an Alexander dual ideal.

    Only nonzero entries are stored. ``multigraded`` is keyed by ``(i, G)``
    where the face ``G`` stands for the multidegree with support ``[n] \\ G``.
    """

    n: int
    graded: dict[tuple[int, int], int] = field(default_factory=dict)
    multigraded: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.graded.get(ij, 0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.graded.items() if a == i)

    @property
    def max_index(self) -> int:
        return max((i for i, _ in self.graded), default=-1)

    def triples(self) -> list[dict[str, int]]:
        return [{"i": i, "j": j, "value": v} for (i, j), v in sorted(self.graded.items())]

    def to_text(self) -> str:
        """Rows indexed by homological degree ``i``, columns by internal degree ``j``."""
        js = range(self.n + 1)
        width = max([len(str(v)) for v in self.graded.values()] + [len(str(self.n)), 1]) + 1
        head = "i\\j".ljust(5) + "".join(str(j).rjust(width) for j in js) + " | total"
        lines = [head, "-" * len(head)]
        for i in range(self.max_index + 1):
            row = "".join((str(self[i, j]) if self[i, j] else ".").rjust(width) for j in js)
            lines.append(str(i).ljust(5) + row + f" | {self.total(i)}")
        return "\n".join(lines)


@lru_cache(maxsize=1 << 14)
def _link_betti(cx: SimplicialComplex, face: int, fld: FieldSpec) -> tuple[int, ...]:
    return reduced_betti_all(link(cx, face), fld)


@lru_cache(maxsize=1 << 12)
def graded_betti(cx: SimplicialComplex, fld: FieldSpec = QQ) -> BettiTable:
    """Betti table of ``I*_cx`` over ``fld``.

    >>> from .complex import new_complex
    >>> graded_betti(new_complex([[1, 2, 3], [2, 3, 4], [2, 4, 5], [3, 4, 5]]))[1, 4]
    0
    """
    graded: dict[tuple[int, int], int] = defaultdict(int)
    multi: dict[tuple[int, int], int] = {}
    for g in cx.face_set:
        j = cx.n - g.bit_count()
        for pos, b in enumerate(_link_betti(cx, g, fld)):
            if b:
                i = pos  # pos = (i - 1) + 1
                multi[(i, g)] = b
                graded[(i, j)] += b
    return BettiTable(cx.n, dict(graded), multi)


def total_betti(table: BettiTable, i: int) -> int:
    return table.total(i)


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """``(f_{-1}, f_0, ..., f_d)``."""
    counts = [0] * (cx.dim + 2)
    for f in cx.face_set:
        counts[f.bit_count()] += 1
    return tuple(counts)
