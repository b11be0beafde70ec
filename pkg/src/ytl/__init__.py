"""Exact computations for the Yokonuma-Temperley-Lieb algebra YTL_{d,n}(u).

Littlewood-Richardson combinatorics, the classification of its irreducible
representations, its dimension, an explicit basis, and a brute-force
multiplication engine for the Yokonuma-Hecke algebra Y_{d,n}(u) to check
all of these at small d and n.
"""

from .basis import CyclePattern, enumerate_basis, enumerate_Hn, enumerate_Tn, monomial_set, weight
from .combinatorics import enumerate_d_partitions, enumerate_partitions, standard_d_tableaux_count
from .lr_rule import lr_coefficient, pieri_summands, restriction_multiplicities
from .rep_theory import catalan, r_set, ytl_dimension_formula, ytl_dimension_sum_squares

__all__ = [
    "CyclePattern", "enumerate_basis", "enumerate_Hn", "enumerate_Tn", "monomial_set", "weight",
    "enumerate_d_partitions", "enumerate_partitions", "standard_d_tableaux_count",
    "lr_coefficient", "pieri_summands", "restriction_multiplicities",
    "catalan", "r_set", "ytl_dimension_formula", "ytl_dimension_sum_squares",
]
