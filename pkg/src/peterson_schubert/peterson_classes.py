"""
Peterson Schubert classes as total restriction tables.

A class is stored by its value at every one of the 2^(n-1) fixed points,
zero entries included, so table equality is structural.  The classes indexed
by subsets (through their ascending products) form a module basis; their
tables are upper-triangular for containment, with an explicit diagonal.

Two construction paths exist and are cross-checked in the test suite:

* the fast path multiplies a per-string subword count by the closed-form
  summand (all summands of the restriction sum are equal);
* the oracle path runs the full dynamic programming of
  :mod:`peterson_schubert.billey`.

>>> cls = class_of(3, (1, 2))
>>> str(cls.table[(1, 2)])
'2t^2'
>>> str(diagonal_value((1, 2, 3, 5, 6)))
'12t^5'
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .billey import count_embeddings, p_on_word, p_table_on_word
from .permutations import Perm, length
from .polynomials import TPoly, divides
from .subsets import (
    Subset,
    all_subsets,
    ascending_product,
    consecutive_strings,
    fixed_point_word,
    head,
    subset_csv,
    tail,
    validate_subset,
)

__all__ = [
    "PetersonClass",
    "class_of",
    "generic_class",
    "all_generic_classes",
    "diagonal_value",
    "pi_at",
    "summand_factor",
    "embedding_count_in_fixed_word",
    "single_string_restriction",
    "disjoint_product_check",
    "minimality_check",
    "preimage_classes",
]


@dataclass(frozen=True, eq=True)
class PetersonClass:
    """A class given by its restriction value at every fixed point.

    ``index`` is the defining subset for basis classes and ``None`` for the
    generic class of an arbitrary permutation; ``perm`` is the underlying
    permutation either way.
    """

    n: int
    index: Subset | None
    perm: Perm
    table: dict[Subset, TPoly] = field(compare=True)

    def __hash__(self):  # tables are dicts; identity hash is enough
        return id(self)

    @property
    def is_generic(self) -> bool:
        return self.index is None

    def to_json(self) -> dict:
        label = list(self.index) if self.index is not None else list(self.perm)
        return {
            "n": self.n,
            "class": label,
            "generic": self.is_generic,
            "table": {
                subset_csv(b): str(v)
                for b, v in sorted(self.table.items(), key=lambda kv: (len(kv[0]), kv[0]))
            },
        }

    def csv_rows(self) -> list[tuple[str, str]]:
        """One (subset, value) row per fixed point, in size-then-lex order."""
        return [
            (subset_csv(b), str(v))
            for b, v in sorted(self.table.items(), key=lambda kv: (len(kv[0]), kv[0]))
        ]


def summand_factor(a: Subset, b: Subset) -> int:
    """The common value of every summand, divided by t^len(a).

    For a <= b (containment), each embedding of the ascending product of
    ``a`` into the fixed word of ``b`` contributes
    prod_{j in a} (j - tail_b(j) + 1) times t^len(a).
    """
    return math.prod(j - tail(b, j) + 1 for j in a)


@lru_cache(maxsize=None)
def _string_embedding_count(size: int, offsets: tuple[int, ...]) -> int:
    """Embeddings of the ascending word of ``offsets`` in one string's word.

    ``offsets`` are 1-based positions inside a consecutive string of
    ``size`` letters; counts are shift-invariant, so they are cached on the
    relative data only.
    """
    m = size + 1
    v = ascending_product(m, offsets)
    word = fixed_point_word(tuple(range(1, size + 1)))
    return count_embeddings(v, word, m)


def embedding_count_in_fixed_word(a: Subset, b: Subset) -> int:
    """Number of subwords of the fixed word of ``b`` equal to a's product.

    Factorizes over the maximal consecutive strings of ``b``: the per-string
    words use disjoint alphabets, so an embedding chooses letters of each
    string independently.
    """
    count = 1
    for lo, hi in consecutive_strings(b):
        offsets = tuple(j - lo + 1 for j in a if lo <= j <= hi)
        count *= _string_embedding_count(hi - lo + 1, offsets)
    return count


def diagonal_value(a: Sequence[int]) -> TPoly:
    """The restriction of a basis class at its own fixed point.

    Equals prod_{i in a} (i - tail(i) + 1) times t^len(a): the unique
    embedding on the diagonal times the common summand.

    >>> str(diagonal_value((4,)))
    't'
    """
    a = tuple(sorted(a))
    return TPoly.monomial(math.prod(i - tail(a, i) + 1 for i in a), len(a))


def pi_at(i: int, a: Sequence[int]) -> TPoly:
    """Value of the degree-2 generator class i at the fixed point of ``a``.

    Zero when i is outside ``a``; otherwise
    (head(i) - i + 1)(i - tail(i) + 1) t.

    >>> str(pi_at(3, (1, 2, 3, 5, 6)))
    '3t'
    >>> str(pi_at(4, (1, 2, 3, 5, 6)))
    '0'
    """
    a = tuple(sorted(a))
    if i not in a:
        return TPoly.zero()
    return TPoly.monomial((head(a, i) - i + 1) * (i - tail(a, i) + 1), 1)


def class_of(n: int, a: Sequence[int], oracle: bool = False) -> PetersonClass:
    """The basis class of subset ``a`` with its full restriction table.

    ``oracle=True`` forces the restriction-sum dynamic programming for every
    entry instead of the count-times-summand closed form.
    """
    a = validate_subset(n, a)
    v = ascending_product(n, a)
    table: dict[Subset, TPoly] = {}
    for b in all_subsets(n):
        if not set(a) <= set(b):
            table[b] = TPoly.zero()
        elif oracle:
            table[b] = p_on_word(v, fixed_point_word(b), n)
        else:
            count = embedding_count_in_fixed_word(a, b)
            table[b] = TPoly.monomial(count * summand_factor(a, b), len(a))
    return PetersonClass(n=n, index=a, perm=v, table=table)


def generic_class(n: int, w: Perm) -> PetersonClass:
    """The class of an arbitrary permutation, by restriction sums."""
    if len(w) != n:
        raise ValueError(f"rank mismatch: permutation of S_{len(w)} with n={n}")
    table = {b: p_on_word(w, fixed_point_word(b), n) for b in all_subsets(n)}
    return PetersonClass(n=n, index=None, perm=w, table=table)


def all_generic_classes(n: int) -> dict[Perm, PetersonClass]:
    """Generic classes of every element of S_n, via one pass per fixed point.

    The full-table scans (minimality, preimages) want all of S_n at once;
    a single unpruned pass per fixed point fills a whole table column.
    """
    import itertools

    columns: dict[Subset, dict[Perm, TPoly]] = {
        b: p_table_on_word(fixed_point_word(b), n) for b in all_subsets(n)
    }
    zero = TPoly.zero()
    out = {}
    for w in itertools.permutations(range(1, n + 1)):
        table = {b: col.get(w, zero) for b, col in columns.items()}
        out[w] = PetersonClass(n=n, index=None, perm=w, table=table)
    return out


def single_string_restriction(a: Sequence[int], b: Sequence[int]) -> TPoly:
    """Closed-form restriction when ``b`` is one string and ``a`` drops one.

    For b = [lo, hi] and a = b minus {k}:
    ((hi - lo + 1)! / (k - lo + 1)) * C(hi - lo + 1, k - lo) * t^(hi - lo).
    """
    b = tuple(sorted(b))
    a = tuple(sorted(a))
    strings = consecutive_strings(b)
    if len(strings) != 1:
        raise ValueError(f"{b} is not a single consecutive string")
    lo, hi = strings[0]
    missing = sorted(set(b) - set(a))
    if len(missing) != 1 or not set(a) <= set(b):
        raise ValueError(f"{a} must be {b} minus exactly one element")
    (k,) = missing
    size = hi - lo + 1
    summand, rem = divmod(math.factorial(size), k - lo + 1)
    assert rem == 0
    return TPoly.monomial(summand * math.comb(size, k - lo), hi - lo)


def disjoint_product_check(n: int, b: Sequence[int], b2: Sequence[int]) -> bool:
    """Whether the class of a non-adjacent disjoint union factors pointwise.

    Requires ``b`` and ``b2`` disjoint with no members at distance 1 (their
    maximal strings stay separate in the union); always true, and verified
    entry by entry.
    """
    b = validate_subset(n, b)
    b2 = validate_subset(n, b2)
    if set(b) & set(b2):
        raise ValueError(f"{b} and {b2} are not disjoint")
    for j in b:
        for j2 in b2:
            if abs(j - j2) == 1:
                raise ValueError(
                    f"{b} and {b2} have adjacent members {j} and {j2}"
                )
    union = validate_subset(n, b + b2)
    left = class_of(n, b)
    right = class_of(n, b2)
    combined = class_of(n, union)
    return all(
        combined.table[c] == left.table[c] * right.table[c]
        for c in all_subsets(n)
    )


def minimality_check(w: Perm, a: Sequence[int]) -> bool:
    """Divisibility of the generic class of ``w`` by the diagonal of ``a``.

    Requires the generic class to be upper-triangular for ``a`` (zero at
    every fixed point whose subset does not contain ``a``; the containment
    order on subsets is the Bruhat order on fixed points).  Returns whether
    the diagonal value of ``a`` divides the value of ``w``'s class there.
    """
    n = len(w)
    a = validate_subset(n, a)
    cls = generic_class(n, w)
    for b in all_subsets(n):
        if not set(a) <= set(b) and not cls.table[b].is_zero():
            raise ValueError(
                f"class of {w} is not upper-triangular for {a}: "
                f"nonzero at {b}"
            )
    return divides(diagonal_value(a), cls.table[a])


def preimage_classes(n: int, a: Sequence[int]) -> set[Perm]:
    """All permutations whose generic class equals the basis class of ``a``.

    Exhaustive over S_n.  The answer has 2^k elements where k is the number
    of maximal consecutive strings of ``a`` with at least two members: on
    each such string the ascending product and its inverse tie.
    """
    a = validate_subset(n, a)
    target = class_of(n, a).table
    want_len = len(a)
    out = set()
    for w, cls in all_generic_classes(n).items():
        if length(w) != want_len:
            continue
        if cls.table == target:
            out.add(w)
    return out
