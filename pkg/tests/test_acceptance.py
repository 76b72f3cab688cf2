"""Acceptance gate: one test per criterion, each logging a PASS/FAIL line.

The lines are printed in the terminal summary under "acceptance criteria".
"""

import random
import time

import pytest

from bettisplit import corpus
from bettisplit.complex import StandardDecomposition, face_mask, new_complex
from bettisplit.enumeration import (admits_betti_splitting, decomposition_at,
                                    enumerate_decompositions, count_decompositions,
                                    facet_splitting_probability, is_trivially_decomposable)
from bettisplit.exactla import GF2, GF3, GF5, QQ, SparseIntMatrix, rank
from bettisplit.hochster import f_vector, graded_betti, total_betti
from bettisplit.homology import reduced_betti
from bettisplit.splitting import (essential_facets, is_betti_splitting_direct,
                                  is_betti_splitting_recursive, is_homology_splitting,
                                  mayer_vietoris_maps_vanish, removal_pattern_holds)

from oracles import dense_rank

FOUR = [QQ, GF2, GF3, GF5]
EXHAUSTIVE = [n for n in corpus.names() if len(corpus.get(n).facets) <= 12]
SAMPLED = ["klein", "dunce", "moore3"]
CLOSED = [n for n in corpus.names() if corpus.load(n).expected.pseudomanifold]


@pytest.fixture
def verdict(acceptance_log):
    def record(number, title, problems):
        status = "PASS" if not problems else "FAIL"
        line = f"[{status}] criterion {number:2d}: {title}"
        if problems:
            line += f"  ({len(problems)} problem(s); first: {problems[0]})"
        acceptance_log.append(line)
        assert not problems, "\n".join(map(str, problems[:20]))
    return record


def _decompositions_for_equivalence():
    for name in EXHAUSTIVE:
        cx = corpus.get(name)
        for dec in enumerate_decompositions(cx):
            yield name, cx, dec
    for name in SAMPLED:
        cx = corpus.get(name)
        rng = random.Random(f"criterion-5-{name}")
        for c in rng.sample(range(count_decompositions(cx)), 1000):
            yield name, cx, decomposition_at(cx, c)


def test_criterion_01_enumeration_counts(verdict):
    want = {"rp2": 511, "klein": 32767, "dunce": 65535, "moore3": 262143}
    problems = []
    for name, count in want.items():
        got = sum(1 for _ in enumerate_decompositions(corpus.get(name)))
        if got != count:
            problems.append(f"{name}: {got} != {count}")
    verdict(1, "decomposition counts 511 / 32767 / 65535 / 262143", problems)


def test_criterion_02_not_trivially_decomposable(verdict):
    problems = []
    for name in ("rp2", "klein", "dunce", "moore3"):
        t0 = time.perf_counter()
        hit = is_trivially_decomposable(corpus.get(name), QQ)
        elapsed = time.perf_counter() - t0
        if hit is not None:
            problems.append(f"{name}: witness {hit}")
        if elapsed >= 600:
            problems.append(f"{name}: {elapsed:.1f}s")
    verdict(2, "RP2, K, D, M not trivially decomposable over Q, each under 10 min", problems)


def test_criterion_03_top_homology_pattern(verdict):
    want = {"rp2": {2}, "klein": {2}, "moore3": {3}, "dunce": set(),
            "s2": {0, 2, 3, 5}, "torus7": {0, 2, 3, 5}}
    problems = []
    for name, chars in want.items():
        cx = corpus.get(name)
        got = {f.characteristic for f in FOUR if reduced_betti(cx, cx.dim, f)}
        if got != chars:
            problems.append(f"{name}: {sorted(got)} != {sorted(chars)}")
    verdict(3, "top homology nonzero exactly for the listed characteristics", problems)


def test_criterion_04_small_example(verdict):
    cx = corpus.get("paper-ex-2-3")
    part = new_complex([[1, 2, 3], [2, 4, 5]], n=5)
    problems = []
    if graded_betti(cx, QQ)[1, 4] != 0:
        problems.append("beta_{1,4}(I*) != 0")
    if graded_betti(part, QQ)[1, 4] < 1:
        problems.append("beta_{1,4}(I*_1) < 1")
    bad = StandardDecomposition.from_parts(cx, [face_mask([1, 2, 3]), face_mask([2, 4, 5])])
    good = StandardDecomposition.from_parts(cx, [face_mask([1, 2, 3]), face_mask([2, 3, 4])])
    for fld in (QQ, GF2, GF3):
        if not is_homology_splitting(cx, bad, fld):
            problems.append(f"{fld}: bad decomposition is not a homology splitting")
        if is_betti_splitting_direct(cx, bad, fld):
            problems.append(f"{fld}: bad decomposition is a Betti splitting")
        if not is_betti_splitting_direct(cx, good, fld):
            problems.append(f"{fld}: good decomposition is not a Betti splitting")
    verdict(4, "small example: homology but not Betti splitting, and the good split", problems)


def test_criterion_05_direct_equals_recursive(verdict):
    problems = []
    checked = 0
    for name, cx, dec in _decompositions_for_equivalence():
        for fld in (QQ, GF2):
            a = bool(is_betti_splitting_direct(cx, dec, fld))
            b = bool(is_betti_splitting_recursive(cx, dec, fld))
            checked += 1
            if a != b:
                problems.append(f"{name} {fld} {dec}: direct={a} recursive={b}")
    assert checked > 6000
    verdict(5, f"direct == recursive Betti verdicts on {checked} (decomposition, field) pairs",
            problems)


def test_criterion_06_mayer_vietoris_equals_homology(verdict):
    problems = []
    checked = 0
    for name, cx, dec in _decompositions_for_equivalence():
        for fld in (QQ, GF2):
            a = bool(mayer_vietoris_maps_vanish(cx, dec, fld))
            b = bool(is_homology_splitting(cx, dec, fld))
            checked += 1
            if a != b:
                problems.append(f"{name} {fld} {dec}: mv={a} homology={b}")
    verdict(6, f"Mayer-Vietoris maps vanish == homology splitting on {checked} pairs", problems)


def test_criterion_07_manifold_formula(verdict):
    # stated literally over 0 <= i <= d+1; see the decisions ledger for i = d+1
    problems = []
    for name in CLOSED:
        cx = corpus.get(name)
        d, fv = cx.dim, f_vector(cx)
        for fld in (QQ, GF2, GF3):
            table = graded_betti(cx, fld)
            for i in range(d + 2):
                want = fv[d - i + 1] + reduced_betti(cx, i - 1, fld)
                got = total_betti(table, i)
                if got != want:
                    problems.append(f"{name} {fld} i={i}: beta_i={got}, formula={want}")
    verdict(7, "beta_i(I*) = f_(d-i) + b~_(i-1) for 0 <= i <= d+1", problems)


def test_criterion_08_facet_removals(verdict):
    problems = []
    for name in ("s2", "torus7"):
        for fld in FOUR:
            if facet_splitting_probability(corpus.get(name), fld).ratio != 1:
                problems.append(f"{name} {fld}: P_facet != 1")
    for name in ("rp2", "klein"):
        cx = corpus.get(name)
        if facet_splitting_probability(cx, GF2).ratio != 1:
            problems.append(f"{name} Fp:2: P_facet != 1")
        if facet_splitting_probability(cx, QQ).ratio != 0:
            problems.append(f"{name} Q: P_facet != 0")
    verdict(8, "facet removals split for orientable S2 and torus; RP2 and K only over F2",
            problems)


def test_criterion_09_essential_facets(verdict):
    problems = []
    found = 0
    for name in ("s2", "torus7"):
        cx = corpus.get(name)
        for fld in FOUR:
            if essential_facets(cx, fld) != cx.facets:
                problems.append(f"{name} {fld}: not every facet is essential")
    if essential_facets(corpus.get("klein"), QQ):
        problems.append("klein Q: essential facets found")
    for name in corpus.names():
        cx = corpus.get(name)
        for fld in FOUR:
            for f in essential_facets(cx, fld):
                found += 1
                if not removal_pattern_holds(cx, f, fld):
                    problems.append(f"{name} {fld}: removal pattern fails for {f}")
    verdict(9, f"essential facets, removal pattern checked on {found} hits", problems)


def test_criterion_10_non_existence(verdict):
    problems = []
    for name, fields in (("dunce", (QQ, GF2, GF3)), ("klein", (QQ, GF3))):
        for fld in fields:
            hit = admits_betti_splitting(corpus.get(name), fld)
            if hit is not None:
                problems.append(f"{name} {fld}: found {hit}")
    rp2 = corpus.get("rp2")
    for fld in (QQ, GF2, GF3):
        pruned = admits_betti_splitting(rp2, fld, prune=True)
        plain = admits_betti_splitting(rp2, fld, prune=False)
        if (pruned is None) != (plain is None):
            problems.append(f"rp2 {fld}: pruned {pruned} vs unpruned {plain}")
    verdict(10, "no Betti splitting for D over Q/F2/F3 and K over Q/F3; pruning sound on RP2",
            problems)


def test_criterion_11_rank_oracle(verdict):
    problems = []
    for fld in FOUR:
        rng = random.Random(f"criterion-11-{fld}")
        for _ in range(500):
            rows, cols = rng.randint(1, 14), rng.randint(1, 14)
            density = rng.random()
            dense = [[rng.randint(-9, 9) if rng.random() < density else 0 for _ in range(cols)]
                     for _ in range(rows)]
            got = rank(SparseIntMatrix.from_dense(dense), fld)
            want = dense_rank(dense, fld.characteristic)
            if got != want:
                problems.append(f"{fld} {dense}: {got} != {want}")
    verdict(11, "sparse rank == dense oracle on 500 random matrices per field", problems)
