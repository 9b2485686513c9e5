"""
The Chevalley-Monk formula for Peterson varieties.

Multiplying a degree-2 basis class by an arbitrary basis class expands back
into the basis with one diagonal term and off-diagonal terms only at subsets
one element larger:

    p_i * p_a = p_i(w_a) * p_a  +  sum over b = a + {k}  of  c(i, a, k) * p_b

The structure constants are nonnegative integers with binomial closed forms;
``verify_monk`` checks the identity pointwise at every fixed point, and
``structure_constant_via_tables`` recomputes each constant from exact tables
as (p_i(w_b) - p_i(w_a)) * p_a(w_b) / p_b(w_b).  General products are
expanded by an exact triangular solve against the basis.

>>> structure_constant(7, 3, (1, 2, 3, 5, 6), 4)
45
>>> structure_constant(7, 4, (1, 2, 3, 5, 6), 4)
60
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .peterson_classes import PetersonClass, class_of, pi_at
from .polynomials import TPoly, try_exact_div
from .subsets import Subset, all_subsets, head, subset_csv, tail, validate_subset

__all__ = [
    "MonkExpansion",
    "BasisExpansion",
    "Relation",
    "MonkReport",
    "structure_constant",
    "structure_constant_via_tables",
    "monk_expand",
    "ordinary_monk_expand",
    "verify_monk",
    "product_in_basis",
    "presentation",
]


def _class_label(a: Subset) -> str:
    if len(a) == 1:
        return f"p_{a[0]}"
    return "p_{" + subset_csv(a) + "}"


@dataclass(frozen=True)
class MonkExpansion:
    """One product p_i * p_a written in the basis."""

    n: int
    i: int
    index: Subset
    diagonal: TPoly
    terms: dict[Subset, int] = field(compare=True)

    def __hash__(self):
        return id(self)

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "class": list(self.index),
            "diagonal": str(self.diagonal),
            "terms": {
                subset_csv(b): c
                for b, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
            },
        }

    def text(self, ordinary: bool = False) -> str:
        mark = "̌" if ordinary else ""  # caron for forgetful-map classes

        def sym(a: Subset) -> str:
            label = _class_label(a)
            return "p" + mark + label[1:]

        lhs = f"{sym((self.i,))} * {sym(self.index)}"
        parts = []
        if not self.diagonal.is_zero():
            parts.append(f"{self.diagonal} * {sym(self.index)}")
        for b, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            parts.append(f"{c} * {sym(b)}")
        rhs = " + ".join(parts) if parts else "0"
        return f"{lhs} = {rhs}"


@dataclass(frozen=True)
class BasisExpansion:
    """A product of two basis classes written in the basis."""

    n: int
    left: Subset
    right: Subset
    coefficients: dict[Subset, TPoly] = field(compare=True)

    def __hash__(self):
        return id(self)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "left": list(self.left),
            "right": list(self.right),
            "coefficients": {
                subset_csv(b): str(c)
                for b, c in sorted(
                    self.coefficients.items(), key=lambda kv: (len(kv[0]), kv[0])
                )
            },
        }

    def text(self) -> str:
        lhs = f"{_class_label(self.left)} * {_class_label(self.right)}"
        parts = [
            f"({c}) * {_class_label(b)}"
            for b, c in sorted(
                self.coefficients.items(), key=lambda kv: (len(kv[0]), kv[0])
            )
        ]
        return f"{lhs} = " + (" + ".join(parts) if parts else "0")


@lru_cache(maxsize=64)
def _basis_tables(n: int, oracle: bool = False) -> dict[Subset, PetersonClass]:
    return {a: class_of(n, a, oracle=oracle) for a in all_subsets(n)}


def structure_constant(n: int, i: int, a: Sequence[int], k: int) -> int:
    """The off-diagonal Monk coefficient on b = a + {k}, in closed form.

    Zero unless i lies in the maximal consecutive string of b containing k;
    otherwise a positive integer given by a width factor times a binomial
    coefficient of that string.
    """
    a = validate_subset(n, a)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"new element {k} out of range 1..{n - 1}")
    if k in a:
        raise ValueError(f"{k} already belongs to {a}")
    b = validate_subset(n, a + (k,))
    lo, hi = tail(b, k), head(b, k)
    if not lo <= i <= hi:
        return 0
    if i >= k:
        return (hi - i + 1) * math.comb(hi - lo + 1, k - lo)
    return (i - lo + 1) * math.comb(hi - lo + 1, k - lo + 1)


def structure_constant_via_tables(
    n: int,
    i: int,
    a: Sequence[int],
    k: int,
    tables: dict[Subset, PetersonClass] | None = None,
) -> int:
    """The same coefficient recomputed from exact restriction tables.

    Solves the expansion at the fixed point of b = a + {k}:
    (p_i(w_b) - p_i(w_a)) * p_a(w_b) / p_b(w_b), an exact division in Z[t].
    """
    a = validate_subset(n, a)
    if k in a:
        raise ValueError(f"{k} already belongs to {a}")
    b = validate_subset(n, a + (k,))
    if tables is None:
        tables = _basis_tables(n)
    diff = pi_at(i, b) - pi_at(i, a)
    numerator = diff * tables[a].table[b]
    quotient, ok = try_exact_div(numerator, tables[b].table[b])
    if not ok:
        raise ArithmeticError(
            f"table ratio for i={i}, a={a}, k={k} did not divide exactly"
        )
    coeff, degree = quotient.as_monomial()
    if not quotient.is_zero() and degree != 0:
        raise ArithmeticError(f"table ratio for i={i}, a={a}, k={k} is not constant")
    return coeff


def monk_expand(n: int, i: int, a: Sequence[int]) -> MonkExpansion:
    """Expand p_i * p_a in the basis with the closed-form coefficients.

    >>> exp = monk_expand(3, 1, ())
    >>> str(exp.diagonal), exp.terms
    ('0', {(1,): 1})
    """
    a = validate_subset(n, a)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    terms = {}
    for k in range(1, n):
        if k in a:
            continue
        c = structure_constant(n, i, a, k)
        if c:
            terms[validate_subset(n, a + (k,))] = c
    return MonkExpansion(n=n, i=i, index=a, diagonal=pi_at(i, a), terms=terms)


def ordinary_monk_expand(n: int, i: int, a: Sequence[int]) -> MonkExpansion:
    """The Monk expansion in ordinary cohomology: same terms, no diagonal.

    The diagonal coefficient is a multiple of t, which the forgetful map
    kills; the integer off-diagonal constants survive unchanged.
    """
    equivariant = monk_expand(n, i, a)
    return MonkExpansion(
        n=n, i=i, index=equivariant.index, diagonal=TPoly.zero(),
        terms=equivariant.terms,
    )


@dataclass
class MonkReport:
    """Outcome of the pointwise Monk verification at one rank."""

    n: int
    products_checked: int
    evaluations: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def _monk_failures_for_generator(n: int, i: int) -> tuple[int, list[str]]:
    """Pointwise-check every expansion with left factor p_i; see verify_monk."""
    tables = _basis_tables(n)
    pi_table = tables[(i,)].table
    evaluations = 0
    failures = []
    for a in all_subsets(n):
        expansion = monk_expand(n, i, a)
        a_table = tables[a].table
        for c in all_subsets(n):
            lhs = pi_table[c] * a_table[c]
            rhs = expansion.diagonal * a_table[c]
            for b, coeff in expansion.terms.items():
                rhs = rhs + tables[b].table[c].scale(coeff)
            evaluations += 1
            if lhs != rhs:
                failures.append(
                    f"n={n} i={i} a={subset_csv(a) or '{}'} at "
                    f"c={subset_csv(c) or '{}'}: {lhs} != {rhs}"
                )
    return evaluations, failures


def verify_monk(n: int, workers: int = 1) -> MonkReport:
    """Check the Monk identity at every fixed point, for every i and a.

    The check multiplies exact tables pointwise rather than trusting linear
    independence, so it is self-contained.  ``workers`` > 1 fans the
    generators out across processes; each product is independent.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    generators = list(range(1, n))
    evaluations = 0
    failures: list[str] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(
                _monk_failures_for_generator, [n] * len(generators), generators
            )
            for evals, fails in results:
                evaluations += evals
                failures.extend(fails)
    else:
        for i in generators:
            evals, fails = _monk_failures_for_generator(n, i)
            evaluations += evals
            failures.extend(fails)
    subsets = 2 ** (n - 1)
    return MonkReport(
        n=n,
        products_checked=len(generators) * subsets,
        evaluations=evaluations,
        failures=failures,
    )


def product_in_basis(
    n: int, a: Sequence[int], a2: Sequence[int], oracle: bool = False
) -> BasisExpansion:
    """Expand the product of two basis classes by an exact triangular solve.

    Tables are multiplied pointwise and peeled against the basis in order of
    subset size (ties lexicographic); upper-triangularity plus nonzero
    diagonals make each step an exact division in Z[t].  A failed division
    indicates a bug and raises.
    """
    a = validate_subset(n, a)
    a2 = validate_subset(n, a2)
    tables = _basis_tables(n, oracle=oracle)
    residual = {c: tables[a].table[c] * tables[a2].table[c] for c in all_subsets(n)}
    coefficients: dict[Subset, TPoly] = {}
    for b in all_subsets(n):
        value = residual[b]
        if value.is_zero():
            continue
        quotient, ok = try_exact_div(value, tables[b].table[b])
        if not ok:
            raise ArithmeticError(
                f"triangular solve failed at {b}: {value} not divisible by "
                f"{tables[b].table[b]}"
            )
        coefficients[b] = quotient
        b_table = tables[b].table
        for c in all_subsets(n):
            residual[c] = residual[c] - quotient * b_table[c]
    assert all(v.is_zero() for v in residual.values())
    return BasisExpansion(n=n, left=a, right=a2, coefficients=coefficients)


@dataclass(frozen=True)
class Relation:
    """One ring relation p_i * p_a = expansion, for the presentation."""

    expansion: MonkExpansion
    equivariant: bool

    @property
    def trivial(self) -> bool:
        """True when the right-hand side is identically zero."""
        return self.expansion.diagonal.is_zero() and not self.expansion.terms

    def to_json(self) -> dict:
        data = self.expansion.to_json()
        data["equivariant"] = self.equivariant
        data["trivial"] = self.trivial
        return data

    def text(self) -> str:
        return self.expansion.text(ordinary=not self.equivariant)


def presentation(
    n: int, equivariant: bool = True, oracle: bool = False
) -> list[Relation]:
    """All (n-1) * 2^(n-1) defining relations of the cohomology ring.

    Generators are the degree-2 classes (plus t in the equivariant case);
    each relation rewrites p_i times a basis class through the Monk formula.
    Relations whose right side is identically zero are kept and flagged
    ``trivial`` so the count stays predictable.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    relations = []
    for i in range(1, n):
        for a in all_subsets(n):
            if oracle:
                tables = _basis_tables(n)
                terms = {}
                for k in range(1, n):
                    if k in a:
                        continue
                    c = structure_constant_via_tables(n, i, a, k, tables)
                    if c:
                        terms[validate_subset(n, a + (k,))] = c
                diagonal = pi_at(i, a) if equivariant else TPoly.zero()
                expansion = MonkExpansion(
                    n=n, i=i, index=a, diagonal=diagonal, terms=terms
                )
            elif equivariant:
                expansion = monk_expand(n, i, a)
            else:
                expansion = ordinary_monk_expand(n, i, a)
            relations.append(Relation(expansion=expansion, equivariant=equivariant))
    return relations
