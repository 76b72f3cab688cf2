"""Scans over all standard decompositions of a complex.

A decomposition of a complex with ``m`` facets is addressed by a counter
``c`` in ``[0, 2**(m-1) - 1)``: part one holds facet 0 plus facet ``i + 1``
for every set bit ``i`` of ``c``. The all-ones counter (part two empty) is
excluded, giving exactly ``2**(m-1) - 1`` unordered bipartitions.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .complex import (ComplexError, SimplicialComplex, StandardDecomposition, face_key,
                      face_vertices, intersect, remove_facet)
from .exactla import QQ, FieldSpec
from .homology import reduced_betti
from .splitting import (essential_facets, is_betti_splitting_direct,
                        is_betti_splitting_recursive, is_homology_splitting)

DEFAULT_BUDGET = 20
MAX_EXACT_FACETS = 63


class BudgetExceeded(RuntimeError):
    """Exact enumeration requested beyond the facet budget."""


def count_decompositions(cx: SimplicialComplex) -> int:
    return (1 << (len(cx.facets) - 1)) - 1


def decomposition_at(cx: SimplicialComplex, counter: int) -> StandardDecomposition:
    facets = cx.facets
    part1 = [facets[0]]
    part2 = []
    for i, f in enumerate(facets[1:]):
        (part1 if counter >> i & 1 else part2).append(f)
    return StandardDecomposition(cx.n, tuple(part1), tuple(part2))


def enumerate_decompositions(cx: SimplicialComplex) -> Iterator[StandardDecomposition]:
    m = len(cx.facets)
    if m < 2:
        raise ComplexError("a complex with a single facet has no standard decomposition")
    if m > MAX_EXACT_FACETS:
        raise BudgetExceeded(f"{m} facets is beyond exact enumeration")
    for c in range(count_decompositions(cx)):
        yield decomposition_at(cx, c)


# -- trivially decomposable -------------------------------------------------

class _GraphScan:
    """Cycle rank of ``<S> n <S^c>`` for 2-dimensional complexes, no matrices.

    The intersection of the two parts has dimension at most one, so
    ``H~_1`` is ``E - V + components`` of the shared graph.
    """

    def __init__(self, cx: SimplicialComplex):
        facets = cx.facets
        self.full = (1 << len(facets)) - 1
        owners: dict[int, int] = {}
        for idx, f in enumerate(facets):
            verts = face_vertices(f)
            for a in range(len(verts)):
                owners[1 << (verts[a] - 1)] = owners.get(1 << (verts[a] - 1), 0) | (1 << idx)
                for b in range(a + 1, len(verts)):
                    e = (1 << (verts[a] - 1)) | (1 << (verts[b] - 1))
                    owners[e] = owners.get(e, 0) | (1 << idx)
        self.vertices = [(v, o) for v, o in owners.items() if v.bit_count() == 1]
        self.edges = [(tuple(face_vertices(e)), o) for e, o in owners.items() if e.bit_count() == 2]

    def cycle_rank(self, mask1: int) -> int:
        mask2 = self.full & ~mask1
        verts = [v for v, o in self.vertices if o & mask1 and o & mask2]
        parent = {face_vertices(v)[0]: face_vertices(v)[0] for v in verts}
        edges = 0
        comps = len(parent)
        for (a, b), o in self.edges:
            if o & mask1 and o & mask2:
                edges += 1
                while parent[a] != a:
                    a = parent[a]
                while parent[b] != b:
                    b = parent[b]
                if a != b:
                    parent[a] = b
                    comps -= 1
        return edges - len(parent) + comps


def _counter_mask(counter: int) -> int:
    return 1 | (counter << 1)


def _trivial_range(cx: SimplicialComplex, fld: FieldSpec, start: int, stop: int) -> int | None:
    d = cx.dim
    if d == 2:
        scan = _GraphScan(cx)
        for c in range(start, stop):
            if scan.cycle_rank(_counter_mask(c)) == 0:
                return c
        return None
    for c in range(start, stop):
        dec = decomposition_at(cx, c)
        if reduced_betti(intersect(dec.first, dec.second), d - 1, fld) == 0:
            return c
    return None


def _chunks(total: int, jobs: int) -> list[tuple[int, int]]:
    step = -(-total // jobs)
    return [(a, min(a + step, total)) for a in range(0, total, step)]


def _parallel_first(worker, cx, fld, total, jobs):
    if jobs <= 1 or total < 4096:
        return worker(cx, fld, 0, total)
    with ProcessPoolExecutor(jobs) as pool:
        futs = [pool.submit(worker, cx, fld, a, b) for a, b in _chunks(total, jobs)]
        hits = [f.result() for f in futs]
    found = [h for h in hits if h is not None]
    return min(found) if found else None


def is_trivially_decomposable(cx: SimplicialComplex, fld: FieldSpec = QQ,
                              jobs: int = 1) -> StandardDecomposition | None:
    """First decomposition whose intersection has ``H~_{d-1} = 0``, else ``None``.

    For ``d = 2`` the intersection is a graph and its cycle rank is field
    independent; other dimensions go through the homology module.
    """
    if cx.dim < 1:
        raise ComplexError("trivial decomposability needs dimension at least 1")
    if len(cx.facets) > MAX_EXACT_FACETS:
        raise BudgetExceeded(f"{len(cx.facets)} facets is beyond exact enumeration")
    hit = _parallel_first(_trivial_range, cx, fld, count_decompositions(cx), jobs)
    return None if hit is None else decomposition_at(cx, hit)


# -- probabilities ----------------------------------------------------------

@dataclass(frozen=True)
class ProbabilityReport:
    kind: str
    field: FieldSpec
    total: int
    hits: int
    mode: str = "exact"
    sample_size: int | None = None
    seed: int | None = None
    elapsed: float = 0.0
    notes: tuple[str, ...] = field(default=())

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.hits, self.total) if self.total else Fraction(0)

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind, "field": str(self.field), "mode": self.mode,
            "total": self.total, "hits": self.hits,
            "ratio": str(self.ratio), "ratio_float": float(self.ratio),
            "elapsed_seconds": round(self.elapsed, 4),
        }
        if self.mode == "sampled":
            out.update(sample_size=self.sample_size, seed=self.seed)
        return out


_KIND_CHECKS: dict[str, Callable] = {
    "betti": is_betti_splitting_direct,
    "homology": is_homology_splitting,
    "hom": is_homology_splitting,
}


def _count_range(cx, fld, kind, counters) -> int:
    check = _KIND_CHECKS[kind]
    return sum(1 for c in counters if check(cx, decomposition_at(cx, c), fld).verdict)


def _count_worker(args):
    cx, fld, kind, a, b = args
    return _count_range(cx, fld, kind, range(a, b))


def splitting_probability(cx: SimplicialComplex, fld: FieldSpec = QQ, kind: str = "betti",
                          sample: int | None = None, seed: int | None = None,
                          budget: int = DEFAULT_BUDGET, jobs: int = 1) -> ProbabilityReport:
    """Fraction of standard decompositions that are Betti (or homology) splittings.

    ``sample=k`` draws ``k`` distinct decompositions uniformly at random with
    ``random.Random(seed)``; otherwise every decomposition is checked.
    """
    if kind not in _KIND_CHECKS:
        raise ValueError(f"unknown kind {kind!r}")
    kind = "homology" if kind == "hom" else kind
    m = len(cx.facets)
    if m < 2:
        raise ComplexError("a complex with a single facet has no standard decomposition")
    total = count_decompositions(cx)
    t0 = time.perf_counter()
    if sample is not None:
        rng = random.Random(seed)
        counters = sorted(rng.sample(range(total), min(sample, total)))
        hits = _count_range(cx, fld, kind, counters)
        return ProbabilityReport(kind, fld, len(counters), hits, "sampled", sample, seed,
                                 time.perf_counter() - t0)
    if m > budget:
        raise BudgetExceeded(
            f"{m} facets exceeds the exact budget of {budget}; use sampling or raise the budget")
    if jobs > 1 and total >= 256:
        with ProcessPoolExecutor(jobs) as pool:
            hits = sum(pool.map(_count_worker, [(cx, fld, kind, a, b)
                                                for a, b in _chunks(total, jobs)]))
    else:
        hits = _count_range(cx, fld, kind, range(total))
    return ProbabilityReport(kind, fld, total, hits, "exact", elapsed=time.perf_counter() - t0)


def facet_splitting_probability(cx: SimplicialComplex, fld: FieldSpec = QQ) -> ProbabilityReport:
    if len(cx.facets) < 2:
        raise ComplexError("a complex with a single facet has no facet removals")
    t0 = time.perf_counter()
    hits = sum(1 for f in cx.facets if is_betti_splitting_direct(cx, remove_facet(cx, f), fld))
    return ProbabilityReport("facet", fld, len(cx.facets), hits,
                             elapsed=time.perf_counter() - t0)


# -- existence --------------------------------------------------------------

def _candidate_order(cx: SimplicialComplex, fld: FieldSpec) -> Iterator[StandardDecomposition]:
    # essential-facet removals first, then every other decomposition
    m = len(cx.facets)
    tried = set()
    for f in essential_facets(cx, fld):
        idx = cx.facets.index(f)
        counter = ((1 << (m - 1)) - 1) & ~(1 << (idx - 1)) if idx else 0
        tried.add(counter)
        yield decomposition_at(cx, counter)
    for c in range(count_decompositions(cx)):
        if c not in tried:
            yield decomposition_at(cx, c)


def find_homology_splitting(cx: SimplicialComplex, fld: FieldSpec = QQ,
                            budget: int = DEFAULT_BUDGET) -> StandardDecomposition | None:
    if len(cx.facets) > budget:
        raise BudgetExceeded(
            f"{len(cx.facets)} facets exceeds the exact budget of {budget}; raise the budget")
    for dec in _candidate_order(cx, fld):
        if is_homology_splitting(cx, dec, fld):
            return dec
    return None


def admits_betti_splitting(cx: SimplicialComplex, fld: FieldSpec = QQ,
                           budget: int = DEFAULT_BUDGET, prune: bool = True,
                           jobs: int = 1) -> StandardDecomposition | None:
    """A Betti splitting of ``cx`` over ``fld``, or ``None`` if there is none.

    With ``prune``, a complex of dimension ``d >= 2`` with ``H~_d = 0`` that is
    not trivially decomposable is rejected without any Betti computation.
    Returned witnesses are re-checked through the recursive criterion.
    """
    m = len(cx.facets)
    if m < 2:
        return None
    d = cx.dim
    if prune and d >= 2 and reduced_betti(cx, d, fld) == 0:
        if is_trivially_decomposable(cx, fld, jobs=jobs) is None:
            return None
    if m > budget:
        raise BudgetExceeded(
            f"{m} facets exceeds the exact budget of {budget}; raise the budget explicitly")
    for dec in _candidate_order(cx, fld):
        if is_betti_splitting_direct(cx, dec, fld):
            if not is_betti_splitting_recursive(cx, dec, fld):
                raise AssertionError(f"direct and recursive checks disagree on {dec}")
            return dec
    return None


def facet_label(cx: SimplicialComplex, dec: StandardDecomposition) -> dict:
    """JSON-friendly description of a decomposition of ``cx``."""
    index = {f: i for i, f in enumerate(cx.facets)}
    return {
        "part1": [list(face_vertices(f)) for f in sorted(dec.part1, key=face_key)],
        "part2": [list(face_vertices(f)) for f in sorted(dec.part2, key=face_key)],
        "part1_indices": sorted(index[f] for f in dec.part1),
    }
