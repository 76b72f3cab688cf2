"""Reduced homology, Alexander dual Betti numbers and Betti splittings of simplicial complexes."""

from .complex import (ComplexError, SimplicialComplex, StandardDecomposition, faces,
                      intersect, is_closed_pseudomanifold, link, new_complex, remove_facet)
from .enumeration import (ProbabilityReport, admits_betti_splitting, enumerate_decompositions,
                          facet_splitting_probability, is_trivially_decomposable,
                          splitting_probability)
from .exactla import GF2, GF3, GF5, QQ, FieldSpec, SparseIntMatrix, rank
from .hochster import (BettiTable, MonomialIdeal, alexander_dual_ideal, complex_from_ideal,
                       f_vector, graded_betti, total_betti)
from .homology import is_acyclic, reduced_betti, reduced_betti_all
from .splitting import (SplittingReport, essential_facets, is_betti_splitting_direct,
                        is_betti_splitting_recursive, is_homology_splitting,
                        mayer_vietoris_maps_vanish, orientability)

__version__ = "0.1.0"

__all__ = [
    "ComplexError", "SimplicialComplex", "StandardDecomposition", "faces", "intersect",
    "is_closed_pseudomanifold", "link", "new_complex", "remove_facet",
    "ProbabilityReport", "admits_betti_splitting", "enumerate_decompositions",
    "facet_splitting_probability", "is_trivially_decomposable", "splitting_probability",
    "GF2", "GF3", "GF5", "QQ", "FieldSpec", "SparseIntMatrix", "rank",
    "BettiTable", "MonomialIdeal", "alexander_dual_ideal", "complex_from_ideal", "f_vector",
    "graded_betti", "total_betti", "is_acyclic", "reduced_betti", "reduced_betti_all",
    "SplittingReport", "essential_facets", "is_betti_splitting_direct",
    "is_betti_splitting_recursive", "is_homology_splitting", "mayer_vietoris_maps_vanish",
    "orientability",
]
