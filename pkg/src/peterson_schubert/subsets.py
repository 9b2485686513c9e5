"""
The dictionary between subsets of {1..n-1} and circle-fixed points of the
type A Peterson variety.

A subset ``a`` of {1..n-1} is kept as a strictly increasing tuple.  It
decomposes uniquely into maximal consecutive strings, and it indexes:

* a fixed point ``fixed_point(n, a)``: the block-antidiagonal involution
  whose one-line notation descends by one exactly at the members of ``a``;
* a basis permutation ``ascending_product(n, a)``: the product of the simple
  transpositions named by ``a``, taken in increasing order.

>>> fixed_point(7, (1, 2, 3, 5))
(4, 3, 2, 1, 6, 5, 7)
>>> subset_of_fixed_point((4, 3, 2, 1, 6, 5, 7))
(1, 2, 3, 5)
>>> fixed_point_word((1, 2, 3, 5))
(1, 2, 3, 1, 2, 1, 5)
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .permutations import Perm, Word, inverse

__all__ = [
    "Subset",
    "NotAPetersonFixedPoint",
    "validate_subset",
    "all_subsets",
    "consecutive_strings",
    "head",
    "tail",
    "fixed_point",
    "subset_of_fixed_point",
    "fixed_point_word",
    "ascending_word",
    "ascending_product",
    "parse_subset",
    "subset_csv",
]

Subset = tuple[int, ...]


class NotAPetersonFixedPoint(ValueError):
    """Raised when a permutation fails the fixed-point descent condition.

    ``index`` is the smallest i with w^{-1}(i) > w^{-1}(i+1) + 1.
    """

    def __init__(self, w: Perm, index: int):
        self.w = w
        self.index = index
        super().__init__(
            f"{w} is not a Peterson fixed point: inverse decreases by more "
            f"than 1 at value {index}"
        )


def validate_subset(n: int, members: Iterable[int]) -> Subset:
    """Normalize ``members`` to a sorted tuple inside {1..n-1}."""
    a = tuple(sorted(set(members)))
    for j in a:
        if not 1 <= j <= n - 1:
            raise ValueError(f"subset member {j} out of range 1..{n - 1}")
    return a


def all_subsets(n: int) -> Iterator[Subset]:
    """All subsets of {1..n-1}, ordered by size then lexicographically."""
    for size in range(n):
        yield from itertools.combinations(range(1, n), size)


def consecutive_strings(a: Sequence[int]) -> list[tuple[int, int]]:
    """The maximal consecutive strings of ``a`` as (lo, hi) pairs, sorted.

    >>> consecutive_strings((1, 2, 3, 5))
    [(1, 3), (5, 5)]
    >>> consecutive_strings(())
    []
    """
    strings = []
    run_start = None
    prev = None
    for j in a:
        if run_start is None:
            run_start = prev = j
        elif j == prev + 1:
            prev = j
        else:
            strings.append((run_start, prev))
            run_start = prev = j
    if run_start is not None:
        strings.append((run_start, prev))
    return strings


def _string_of(a: Sequence[int], j: int) -> tuple[int, int]:
    for lo, hi in consecutive_strings(a):
        if lo <= j <= hi:
            return lo, hi
    raise ValueError(f"{j} is not a member of {tuple(a)}")


def head(a: Sequence[int], j: int) -> int:
    """The maximal element of the maximal consecutive string containing j.

    >>> head((1, 2, 3, 5, 6), 2)
    3
    """
    return _string_of(a, j)[1]


def tail(a: Sequence[int], j: int) -> int:
    """The minimal element of the maximal consecutive string containing j.

    >>> tail((1, 2, 3, 5, 6), 5)
    5
    """
    return _string_of(a, j)[0]


def fixed_point(n: int, a: Sequence[int]) -> Perm:
    """The fixed point indexed by ``a``: an involution with antidiagonal blocks.

    Positions 1..n split into maximal blocks [c, d] with {c, ..., d-1}
    inside ``a``; in each block the one-line entries run from d down to c.
    Built directly from the block structure, not by multiplying out
    ``fixed_point_word``; agreement between the two is a library invariant.

    >>> fixed_point(3, ())
    (1, 2, 3)
    >>> fixed_point(4, (1, 2, 3))
    (4, 3, 2, 1)
    """
    members = set(validate_subset(n, a))
    out = []
    c = 1
    while c <= n:
        d = c
        while d < n and d in members:
            d += 1
        out.extend(range(d, c - 1, -1))
        c = d + 1
    return tuple(out)


def subset_of_fixed_point(w: Perm) -> Subset:
    """The subset indexing the fixed point ``w``; inverse of ``fixed_point``.

    Raises ``NotAPetersonFixedPoint`` if some value i has
    w^{-1}(i) > w^{-1}(i+1) + 1, reporting the smallest violating i.

    >>> subset_of_fixed_point((1, 2, 3))
    ()
    """
    n = len(w)
    winv = inverse(w)
    for i in range(1, n):
        if winv[i - 1] > winv[i] + 1:
            raise NotAPetersonFixedPoint(w, i)
    return tuple(i for i in range(1, n) if winv[i - 1] == winv[i] + 1)


def fixed_point_word(a: Sequence[int]) -> Word:
    """The fixed reduced word for ``fixed_point(n, a)``.

    Per maximal consecutive string [lo, hi] the factor is the triangle word
    (lo, lo+1, ..., hi, lo, ..., hi-1, ..., lo), and strings are concatenated
    in increasing order.  All subword counting in this library runs against
    this word; counts (unlike restriction values) depend on the word choice.

    >>> fixed_point_word((1, 2, 3))
    (1, 2, 3, 1, 2, 1)
    """
    word: list[int] = []
    for lo, hi in consecutive_strings(tuple(a)):
        for k in range(hi - lo + 1):
            word.extend(range(lo, hi - k + 1))
    return tuple(word)


def ascending_word(a: Sequence[int]) -> Word:
    """The members of ``a`` in increasing order, read as a reduced word.

    >>> ascending_word((1, 2, 3, 5))
    (1, 2, 3, 5)
    """
    return tuple(sorted(a))


def ascending_product(n: int, a: Sequence[int]) -> Perm:
    """The product of the simple transpositions in ``a``, in increasing order.

    Its length equals ``len(a)``; these permutations index the module basis.
    """
    w = list(range(1, n + 1))
    for c in ascending_word(validate_subset(n, a)):
        w[c - 1], w[c] = w[c], w[c - 1]
    return tuple(w)


def parse_subset(n: int, text: str) -> Subset:
    """Parse a comma-separated subset, e.g. "1,2,3,5"; "" is the empty set."""
    text = text.strip()
    if not text:
        return ()
    try:
        members = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse subset from {text!r}") from None
    return validate_subset(n, members)


def subset_csv(a: Sequence[int]) -> str:
    """Render a subset as a sorted comma-separated string with no spaces."""
    return ",".join(str(j) for j in sorted(a))
