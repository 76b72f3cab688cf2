"""Reduced simplicial homology over a field.

The chain complex is augmented: the empty face spans degree ``-1`` and every
vertex maps to it, so ``betti(-1)`` comes out of the same rank formula and is
1 exactly for the complex ``{emptyset}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complex import SimplicialComplex, face_vertices
from .exactla import QQ, FieldSpec, SparseIntMatrix, rank


@dataclass(frozen=True)
class ChainComplex:
    """Ordered face bases and boundary matrices of an augmented chain complex.

    ``bases[k + 1]`` lists the ``k``-faces for ``k = -1 .. dim``;
    ``boundary(k)`` maps ``k``-chains to ``(k-1)``-chains.
    """

    bases: tuple[tuple[int, ...], ...]
    index: tuple[dict, ...]

    @property
    def dim(self) -> int:
        return len(self.bases) - 2

    def basis(self, k: int) -> tuple[int, ...]:
        if k < -1 or k > self.dim:
            return ()
        return self.bases[k + 1]

    def boundary_columns(self, k: int) -> list[dict[int, int]]:
        """Columns of the boundary map in degree ``k`` as ``{row: coeff}``."""
        if k < 0 or k > self.dim:
            return []
        rows = self.index[k]
        cols = []
        for f in self.bases[k + 1]:
            col = {}
            for pos, v in enumerate(face_vertices(f)):
                col[rows[f & ~(1 << (v - 1))]] = -1 if pos % 2 else 1
            cols.append(col)
        return cols

    def boundary(self, k: int) -> SparseIntMatrix:
        return SparseIntMatrix.from_columns(len(self.basis(k - 1)), self.boundary_columns(k))


@lru_cache(maxsize=4096)
def chain_complex(cx: SimplicialComplex) -> ChainComplex:
    groups = cx.faces_by_dim()
    bases = tuple(tuple(groups.get(k, ())) for k in range(-1, cx.dim + 1))
    index = tuple({f: i for i, f in enumerate(b)} for b in bases)
    return ChainComplex(bases, index)


def boundary_rank(cx: SimplicialComplex, k: int, fld: FieldSpec = QQ) -> int:
    cc = chain_complex(cx)
    if k < 0 or k > cc.dim:
        return 0
    return rank(cc.boundary(k), fld)


def _graph_betti(cx: SimplicialComplex) -> tuple[int, ...]:
    # dim <= 1: components by union-find, cycle rank = E - V + components
    if cx.is_irrelevant:
        return (1,)
    parent = {v: v for v in face_vertices(cx.vertex_mask)}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    edges = 0
    comps = len(parent)
    for f in cx.facets:
        if f.bit_count() == 2:
            edges += 1
            a, b = face_vertices(f)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                comps -= 1
    if cx.dim == 0:
        return (0, comps - 1)
    return (0, comps - 1, edges - len(parent) + comps)


@lru_cache(maxsize=1 << 16)
def reduced_betti_all(cx: SimplicialComplex, fld: FieldSpec = QQ) -> tuple[int, ...]:
    """Reduced Betti numbers for ``k = -1, 0, ..., dim`` (index ``k + 1``)."""
    if cx.dim <= 1:
        return _graph_betti(cx)
    return matrix_reduced_betti(cx, fld)


def matrix_reduced_betti(cx: SimplicialComplex, fld: FieldSpec = QQ) -> tuple[int, ...]:
    """Same as :func:`reduced_betti_all`, always through boundary ranks."""
    cc = chain_complex(cx)
    ranks = [boundary_rank(cx, k, fld) for k in range(cc.dim + 2)]
    out = []
    for k in range(-1, cc.dim + 1):
        r_out = ranks[k] if k >= 0 else 0
        out.append(len(cc.basis(k)) - r_out - ranks[k + 1])
    return tuple(out)


def reduced_betti(cx: SimplicialComplex, k: int, fld: FieldSpec = QQ) -> int:
    """``dim H~_k(cx; fld)``; zero outside ``-1 .. dim``."""
    if k < -1 or k > cx.dim:
        return 0
    return reduced_betti_all(cx, fld)[k + 1]


def is_acyclic(cx: SimplicialComplex, fld: FieldSpec = QQ) -> bool:
    return not any(reduced_betti_all(cx, fld)[1:])


def euler_characteristic(cx: SimplicialComplex) -> int:
    """Unreduced Euler characteristic ``sum (-1)^k f_k`` over nonempty faces."""
    total = 0
    for f in cx.face_set:
        if f:
            total += -1 if f.bit_count() % 2 == 0 else 1
    return total
