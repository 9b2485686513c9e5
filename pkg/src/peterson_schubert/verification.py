"""
Self-contained invariant suites, runnable from the command line.

Each suite re-derives a structural property from scratch at a given rank and
reports pass/fail; together they cross-check the closed forms against the
restriction-sum oracle and certify the basis and Monk data exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .billey import count_embeddings
from .monk import (
    monk_expand,
    product_in_basis,
    structure_constant,
    structure_constant_via_tables,
    verify_monk,
)
from .peterson_classes import class_of, disjoint_product_check
from .permutations import bruhat_leq, compose, identity
from .subsets import (
    all_subsets,
    ascending_product,
    fixed_point,
    fixed_point_word,
    subset_of_fixed_point,
)

__all__ = ["CheckResult", "verify_rank", "verify_ranks"]


@dataclass(frozen=True)
class CheckResult:
    n: int
    name: str
    ok: bool
    detail: str


def _check_fixed_point_dictionary(n: int) -> CheckResult:
    count = 0
    for a in all_subsets(n):
        w = fixed_point(n, a)
        if subset_of_fixed_point(w) != a:
            return CheckResult(n, "fixed-point dictionary", False, f"round trip failed at {a}")
        if compose(w, w) != identity(n):
            return CheckResult(n, "fixed-point dictionary", False, f"{w} is not an involution")
        count += 1
    return CheckResult(n, "fixed-point dictionary", True, f"{count} subsets round-trip")


def _check_containment_order(n: int) -> CheckResult:
    pairs = 0
    for a in all_subsets(n):
        v = ascending_product(n, a)
        for b in all_subsets(n):
            expected = set(a) <= set(b)
            if bruhat_leq(v, fixed_point(n, b)) != expected:
                return CheckResult(
                    n, "containment order", False, f"mismatch at a={a}, b={b}"
                )
            pairs += 1
    return CheckResult(n, "containment order", True, f"{pairs} pairs agree")


def _check_unique_diagonal_embedding(n: int) -> CheckResult:
    for a in all_subsets(n):
        got = count_embeddings(ascending_product(n, a), fixed_point_word(a), n)
        if got != 1:
            return CheckResult(
                n, "unique diagonal embedding", False, f"count {got} at {a}"
            )
    return CheckResult(n, "unique diagonal embedding", True, "all counts equal 1")


def _check_triangularity_and_degree(n: int) -> CheckResult:
    for a in all_subsets(n):
        cls = class_of(n, a)
        for b in all_subsets(n):
            value = cls.table[b]
            if set(a) <= set(b):
                coeff, degree = value.as_monomial()
                if coeff <= 0 or degree != len(a):
                    return CheckResult(
                        n,
                        "upper-triangularity and degree",
                        False,
                        f"bad entry {value} at a={a}, b={b}",
                    )
            elif not value.is_zero():
                return CheckResult(
                    n,
                    "upper-triangularity and degree",
                    False,
                    f"nonzero {value} above the triangle at a={a}, b={b}",
                )
    return CheckResult(n, "upper-triangularity and degree", True, "all entries conform")


def _check_basis_counts(n: int) -> CheckResult:
    by_degree: dict[int, int] = {}
    for a in all_subsets(n):
        by_degree[len(a)] = by_degree.get(len(a), 0) + 1
    for j in range(n):
        if by_degree.get(j, 0) != comb(n - 1, j):
            return CheckResult(
                n, "basis count per degree", False, f"degree {j}: {by_degree.get(j, 0)}"
            )
    return CheckResult(
        n, "basis count per degree", True, f"degrees 0..{n - 1} match binomials"
    )


def _check_closed_form_against_oracle(n: int) -> CheckResult:
    for a in all_subsets(n):
        if class_of(n, a) != class_of(n, a, oracle=True):
            return CheckResult(
                n, "closed form vs restriction sums", False, f"table mismatch at {a}"
            )
    return CheckResult(
        n, "closed form vs restriction sums", True, "all tables identical"
    )


def _check_disjoint_products(n: int) -> CheckResult:
    pairs = 0
    subsets = list(all_subsets(n))
    for b in subsets:
        for b2 in subsets:
            if b >= b2:  # unordered pairs once
                continue
            if set(b) & set(b2):
                continue
            if any(abs(j - j2) == 1 for j in b for j2 in b2):
                continue
            if not disjoint_product_check(n, b, b2):
                return CheckResult(
                    n, "disjoint-string factorization", False, f"failed at {b}, {b2}"
                )
            pairs += 1
    return CheckResult(
        n, "disjoint-string factorization", True, f"{pairs} qualifying pairs factor"
    )


def _check_monk_pointwise(n: int, workers: int) -> CheckResult:
    report = verify_monk(n, workers=workers)
    if report.failures:
        return CheckResult(n, "Monk identity pointwise", False, report.failures[0])
    return CheckResult(
        n,
        "Monk identity pointwise",
        True,
        f"{report.products_checked} products at {report.evaluations} points",
    )


def _check_constants_against_tables(n: int) -> CheckResult:
    checked = 0
    for i in range(1, n):
        for a in all_subsets(n):
            for k in range(1, n):
                if k in a:
                    continue
                closed = structure_constant(n, i, a, k)
                from_tables = structure_constant_via_tables(n, i, a, k)
                if closed != from_tables:
                    return CheckResult(
                        n,
                        "structure constants vs table ratios",
                        False,
                        f"i={i}, a={a}, k={k}: {closed} != {from_tables}",
                    )
                checked += 1
    return CheckResult(
        n, "structure constants vs table ratios", True, f"{checked} constants agree"
    )


def _check_products_reproduce_monk(n: int) -> CheckResult:
    for i in range(1, n):
        for a in all_subsets(n):
            expansion = monk_expand(n, i, a)
            product = product_in_basis(n, (i,), a)
            expected = dict(expansion.terms)
            got = {}
            for b, coeff_poly in product.coefficients.items():
                if b == a:
                    if coeff_poly != expansion.diagonal:
                        return CheckResult(
                            n,
                            "triangular solve vs Monk",
                            False,
                            f"diagonal mismatch at i={i}, a={a}",
                        )
                    continue
                coeff, degree = coeff_poly.as_monomial()
                if degree != 0:
                    return CheckResult(
                        n,
                        "triangular solve vs Monk",
                        False,
                        f"non-constant coefficient at i={i}, a={a}, b={b}",
                    )
                got[b] = coeff
            if got != expected:
                return CheckResult(
                    n, "triangular solve vs Monk", False, f"terms differ at i={i}, a={a}"
                )
    return CheckResult(n, "triangular solve vs Monk", True, "all expansions agree")


def verify_rank(n: int, workers: int = 1) -> list[CheckResult]:
    """Run every suite at one rank."""
    return [
        _check_fixed_point_dictionary(n),
        _check_containment_order(n),
        _check_unique_diagonal_embedding(n),
        _check_triangularity_and_degree(n),
        _check_basis_counts(n),
        _check_closed_form_against_oracle(n),
        _check_disjoint_products(n),
        _check_monk_pointwise(n, workers),
        _check_constants_against_tables(n),
        _check_products_reproduce_monk(n),
    ]


def verify_ranks(n: int, max_n: int = 6, workers: int = 1) -> list[CheckResult]:
    """Run the suites for every rank from 2 up to min(n, max_n)."""
    results = []
    for rank in range(2, min(n, max_n) + 1):
        results.extend(verify_rank(rank, workers=workers))
    return results
