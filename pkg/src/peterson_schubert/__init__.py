"""
Exact Schubert calculus for type A Peterson varieties.

The library works entirely with integer arithmetic: permutations in one-line
notation, subsets of {1..n-1} indexing circle-fixed points, restriction
values in Z[t_1..t_n] and Z[t], basis classes as total restriction tables,
and the positive integral Chevalley-Monk structure constants with their ring
presentations.  Every closed form has a restriction-sum oracle path next to
it, and the verification suites compare the two exactly.
"""

from .billey import (
    RootFactor,
    count_embeddings,
    p_restriction,
    root_factor,
    root_factors,
    sigma_restriction,
    subword_embeddings,
)
from .monk import (
    BasisExpansion,
    MonkExpansion,
    Relation,
    monk_expand,
    ordinary_monk_expand,
    presentation,
    product_in_basis,
    structure_constant,
    structure_constant_via_tables,
    verify_monk,
)
from .permutations import (
    Perm,
    Word,
    bruhat_leq,
    canonical_reduced_word,
    compose,
    evaluate_word,
    identity,
    inverse,
    is_reduced,
    length,
    longest_element,
    simple_transposition,
)
from .peterson_classes import (
    PetersonClass,
    all_generic_classes,
    class_of,
    diagonal_value,
    disjoint_product_check,
    generic_class,
    minimality_check,
    pi_at,
    preimage_classes,
    single_string_restriction,
)
from .polynomials import RootPoly, TPoly, divides, in_simple_roots, project_s1
from .subsets import (
    NotAPetersonFixedPoint,
    Subset,
    all_subsets,
    ascending_product,
    ascending_word,
    consecutive_strings,
    fixed_point,
    fixed_point_word,
    head,
    subset_of_fixed_point,
    tail,
)
from .verification import CheckResult, verify_rank, verify_ranks

__version__ = "0.1.0"

__all__ = [
    "BasisExpansion",
    "CheckResult",
    "MonkExpansion",
    "NotAPetersonFixedPoint",
    "Perm",
    "PetersonClass",
    "Relation",
    "RootFactor",
    "RootPoly",
    "Subset",
    "TPoly",
    "Word",
    "all_generic_classes",
    "all_subsets",
    "ascending_product",
    "ascending_word",
    "bruhat_leq",
    "canonical_reduced_word",
    "class_of",
    "compose",
    "consecutive_strings",
    "count_embeddings",
    "diagonal_value",
    "disjoint_product_check",
    "divides",
    "evaluate_word",
    "fixed_point",
    "fixed_point_word",
    "generic_class",
    "head",
    "identity",
    "in_simple_roots",
    "inverse",
    "is_reduced",
    "length",
    "longest_element",
    "minimality_check",
    "monk_expand",
    "ordinary_monk_expand",
    "p_restriction",
    "pi_at",
    "preimage_classes",
    "presentation",
    "product_in_basis",
    "project_s1",
    "root_factor",
    "root_factors",
    "sigma_restriction",
    "simple_transposition",
    "single_string_restriction",
    "structure_constant",
    "structure_constant_via_tables",
    "subset_of_fixed_point",
    "subword_embeddings",
    "tail",
    "verify_monk",
    "verify_rank",
    "verify_ranks",
]
