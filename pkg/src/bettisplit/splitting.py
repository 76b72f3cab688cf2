"""Verdicts on standard decompositions.

Four independent routes decide whether a decomposition ``cx = A u B`` splits:

* homology splitting: additivity of reduced Betti numbers with the
  intersection shifted by one degree;
* direct Betti splitting: additivity of the full graded Betti tables of the
  dual ideals of ``cx``, ``A``, ``B`` and ``A n B``;
* recursive Betti splitting: a homology splitting of every link
  ``lk_cx F = lk_A F u lk_B F`` for ``F`` in ``A n B`` (``F`` empty included);
* Mayer-Vietoris: the maps ``H~_k(A n B) -> H~_k(A) + H~_k(B)`` vanish.

A "no" verdict always carries a witness that can be re-checked by hand.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .complex import (SimplicialComplex, StandardDecomposition, delete_face, face_key,
                      face_vertices, intersect, is_closed_pseudomanifold, is_pure, link,
                      remove_facet)
from .exactla import QQ, FieldSpec, nullspace, rank_of_columns
from .hochster import graded_betti
from .homology import chain_complex, reduced_betti, reduced_betti_all


@dataclass(frozen=True)
class SplittingReport:
    verdict: bool
    mode: str
    field: FieldSpec
    witness: dict[str, Any] | None = None
    notes: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": "yes" if self.verdict else "no",
            "mode": self.mode,
            "field": str(self.field),
            "witness": self.witness,
            "notes": list(self.notes),
        }


def _betti(cx: SimplicialComplex, k: int, fld: FieldSpec) -> int:
    return reduced_betti(cx, k, fld)


def _split_equation(whole, first, second, inter, fld) -> dict[str, Any] | None:
    """First degree where the homology-splitting equation fails, or ``None``."""
    if inter.is_irrelevant:
        return None
    top = max(whole.dim, first.dim, second.dim, inter.dim + 1)
    for k in range(0, top + 1):
        lhs = _betti(whole, k, fld)
        parts = (_betti(first, k, fld), _betti(second, k, fld), _betti(inter, k - 1, fld))
        if lhs != sum(parts):
            return {"k": k, "lhs": lhs, "rhs": sum(parts), "terms": list(parts)}
    return None


def is_homology_splitting(cx: SimplicialComplex, dec: StandardDecomposition,
                          fld: FieldSpec = QQ) -> SplittingReport:
    dec.check_against(cx)
    inter = dec.intersection()
    if inter.is_irrelevant:
        return SplittingReport(True, "homology", fld, notes=("intersection is {emptyset}",))
    bad = _split_equation(cx, dec.first, dec.second, inter, fld)
    return SplittingReport(bad is None, "homology", fld, bad)


def is_betti_splitting_direct(cx: SimplicialComplex, dec: StandardDecomposition,
                              fld: FieldSpec = QQ) -> SplittingReport:
    """Compare the four graded Betti tables entry by entry."""
    dec.check_against(cx)
    whole = graded_betti(cx, fld)
    t1 = graded_betti(dec.first, fld)
    t2 = graded_betti(dec.second, fld)
    t12 = graded_betti(dec.intersection(), fld)
    for i in range(cx.n + 2):
        for j in range(cx.n + 1):
            lhs = whole[i, j]
            terms = (t1[i, j], t2[i, j], t12[i - 1, j])
            if lhs != sum(terms):
                wit = {"i": i, "j": j, "lhs": lhs, "rhs": sum(terms), "terms": list(terms)}
                return SplittingReport(False, "betti_direct", fld, wit)
    return SplittingReport(True, "betti_direct", fld)


def is_betti_splitting_recursive(cx: SimplicialComplex, dec: StandardDecomposition,
                                 fld: FieldSpec = QQ) -> SplittingReport:
    """Homology splitting of every link over a face of the intersection."""
    dec.check_against(cx)
    first, second = dec.first, dec.second
    inter = intersect(first, second)
    for f in sorted(inter.face_set, key=lambda m: (m.bit_count(), face_key(m))):
        whole_lk = link(cx, f)
        lk1, lk2 = link(first, f), link(second, f)
        if lk1 == whole_lk or lk2 == whole_lk:
            continue
        bad = _split_equation(whole_lk, lk1, lk2, link(inter, f), fld)
        if bad is not None:
            bad = {"face": list(face_vertices(f)), **bad}
            return SplittingReport(False, "betti_recursive", fld, bad)
    return SplittingReport(True, "betti_recursive", fld)


def mv_map_rank(dec: StandardDecomposition, k: int, fld: FieldSpec = QQ) -> int:
    """Rank of ``H~_k(A n B) -> H~_k(A) + H~_k(B)`` induced by inclusion.

    A cycle basis ``Z`` of the intersection is pushed into ``C_k(A) + C_k(B)``;
    the rank of the map into the homology quotient is
    ``rank[dA, 0, Z; 0, dB, Z] - rank dA - rank dB``.
    """
    first, second = dec.first, dec.second
    inter = intersect(first, second)
    cci = chain_complex(inter)
    if k < 0 or k > cci.dim:
        return 0
    cycles = nullspace(cci.boundary(k), fld)
    if not cycles:
        return 0
    cc1, cc2 = chain_complex(first), chain_complex(second)
    idx1, idx2 = cc1.index[k + 1], cc2.index[k + 1]
    off = len(idx1)
    nrows = off + len(idx2)
    bnd1 = cc1.boundary_columns(k + 1)
    bnd2 = [{r + off: v for r, v in col.items()} for col in cc2.boundary_columns(k + 1)]
    basis = cci.basis(k)
    pushed = []
    for z in cycles:
        col = {}
        for pos, v in z.items():
            f = basis[pos]
            col[idx1[f]] = v
            col[idx2[f] + off] = v
        pushed.append(col)
    r1 = rank_of_columns(nrows, bnd1, fld)
    r2 = rank_of_columns(nrows, bnd2, fld)
    return rank_of_columns(nrows, bnd1 + bnd2 + pushed, fld) - r1 - r2


def mayer_vietoris_maps_vanish(cx: SimplicialComplex, dec: StandardDecomposition,
                               fld: FieldSpec = QQ) -> SplittingReport:
    dec.check_against(cx)
    inter = dec.intersection()
    if inter.is_irrelevant:
        return SplittingReport(True, "mayer_vietoris", fld, notes=("intersection is {emptyset}",))
    for k in range(0, inter.dim + 1):
        r = mv_map_rank(dec, k, fld)
        if r:
            return SplittingReport(False, "mayer_vietoris", fld, {"k": k, "map_rank": r})
    return SplittingReport(True, "mayer_vietoris", fld)


CHECKS = {
    "hom": is_homology_splitting,
    "betti": is_betti_splitting_direct,
    "betti-recursive": is_betti_splitting_recursive,
    "mv": mayer_vietoris_maps_vanish,
}


def removal_pattern(cx: SimplicialComplex, facet: int, fld: FieldSpec = QQ) -> tuple[int, ...]:
    """Change of every reduced Betti number when the single face ``facet`` is deleted."""
    before = reduced_betti_all(cx, fld)
    after = reduced_betti_all(delete_face(cx, facet), fld)
    size = max(len(before), len(after))
    before = before + (0,) * (size - len(before))
    after = after + (0,) * (size - len(after))
    return tuple(a - b for a, b in zip(after, before))


def removal_pattern_holds(cx: SimplicialComplex, facet: int, fld: FieldSpec = QQ) -> bool:
    """Deleting ``facet`` lowers ``H~`` in degree ``dim facet`` by one and changes nothing else."""
    d = facet.bit_count() - 1
    delta = removal_pattern(cx, facet, fld)
    return all(v == (-1 if k - 1 == d else 0) for k, v in enumerate(delta))


def essential_facets(cx: SimplicialComplex, fld: FieldSpec = QQ, dim: int | None = None,
                     verify: bool = False) -> tuple[int, ...]:
    """Facets of dimension ``dim`` (default ``cx.dim``) lying on a cycle of that dimension.

    A facet is essential iff deleting it drops ``H~_dim`` by one. With
    ``verify`` the full removal pattern is also checked for each hit.
    """
    d = cx.dim if dim is None else dim
    if d < 0:
        return ()
    base = reduced_betti(cx, d, fld)
    if base == 0:
        return ()
    out = []
    for f in cx.facets:
        if f.bit_count() != d + 1:
            continue
        if reduced_betti(delete_face(cx, f), d, fld) == base - 1:
            if verify and not removal_pattern_holds(cx, f, fld):
                raise AssertionError(f"removal pattern broken for facet {face_vertices(f)}")
            out.append(f)
    return tuple(out)


def essential_notes(cx: SimplicialComplex) -> tuple[str, ...]:
    return () if is_pure(cx) else ("complex is not pure; only top-dimensional facets tested",)


class Orientability(str, enum.Enum):
    ORIENTABLE = "orientable"
    NON_ORIENTABLE = "non_orientable"
    NOT_APPLICABLE = "not_applicable"


def orientability(cx: SimplicialComplex) -> Orientability:
    """Orientability of a connected closed pseudomanifold via top rational homology."""
    closed, _ = is_closed_pseudomanifold(cx)
    if not closed or reduced_betti(cx, 0, QQ) != 0:
        return Orientability.NOT_APPLICABLE
    if reduced_betti(cx, cx.dim, QQ):
        return Orientability.ORIENTABLE
    return Orientability.NON_ORIENTABLE


def facet_removals(cx: SimplicialComplex):
    for f in cx.facets:
        yield f, remove_facet(cx, f)
