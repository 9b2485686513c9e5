"""
The symmetric group S_n in one-line notation.

A permutation w is a tuple ``(w(1), ..., w(n))`` of the integers 1..n, so
``w[i-1]`` is the image of ``i``.  Words in the simple transpositions
``s_1, ..., s_{n-1}`` are tuples of their indices; a word ``(b_1, ..., b_k)``
evaluates to the product ``s_{b_1} s_{b_2} ... s_{b_k}`` (composed left to
right).  All public indices are 1-based.

>>> compose(simple_transposition(3, 1), simple_transposition(3, 2))
(2, 3, 1)
>>> length((4, 3, 2, 1, 6, 5, 7))
7
>>> canonical_reduced_word((3, 2, 1))
(1, 2, 1)
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "Perm",
    "Word",
    "identity",
    "is_permutation",
    "compose",
    "inverse",
    "length",
    "simple_transposition",
    "longest_element",
    "all_permutations",
    "multiply_right",
    "multiply_left",
    "left_descents",
    "canonical_reduced_word",
    "evaluate_word",
    "is_reduced",
    "bruhat_interval_below",
    "bruhat_leq",
]

Perm = tuple[int, ...]
Word = tuple[int, ...]


def identity(n: int) -> Perm:
    """The identity of S_n.

    >>> identity(3)
    (1, 2, 3)
    """
    return tuple(range(1, n + 1))


def is_permutation(seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a rearrangement of 1..len(seq)."""
    return sorted(seq) == list(range(1, len(seq) + 1))


def _check_rank(u: Perm, w: Perm) -> None:
    if len(u) != len(w):
        raise ValueError(f"rank mismatch: {len(u)} != {len(w)}")


def compose(u: Perm, w: Perm) -> Perm:
    """The product u*w acting as (u*w)(i) = u(w(i)).

    >>> compose((2, 1, 3), (2, 1, 3))
    (1, 2, 3)
    """
    _check_rank(u, w)
    return tuple(u[w[i] - 1] for i in range(len(w)))


def inverse(w: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def length(w: Perm) -> int:
    """The Coxeter length of ``w``: its number of inversions.

    Equals the minimal number of simple transpositions whose product is ``w``.

    >>> length((1, 2, 3)), length((3, 2, 1))
    (0, 3)
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def simple_transposition(n: int, i: int) -> Perm:
    """The simple transposition s_i swapping i and i+1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"transposition index {i} out of range for S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def longest_element(n: int) -> Perm:
    """The longest element (n, n-1, ..., 1) of S_n."""
    return tuple(range(n, 0, -1))


def all_permutations(n: int) -> Iterator[Perm]:
    """All elements of S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def multiply_right(w: Perm, i: int) -> Perm:
    """w * s_i: swaps the entries in positions i and i+1."""
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def multiply_left(w: Perm, i: int) -> Perm:
    """s_i * w: swaps the values i and i+1 wherever they occur."""
    a, b = w.index(i), w.index(i + 1)
    out = list(w)
    out[a], out[b] = i + 1, i
    return tuple(out)


def left_descents(w: Perm) -> list[int]:
    """Indices i with length(s_i * w) < length(w), i.e. i appears after i+1."""
    winv = inverse(w)
    return [i for i in range(1, len(w)) if winv[i - 1] > winv[i]]


def canonical_reduced_word(w: Perm) -> Word:
    """The lexicographically smallest reduced word for ``w``.

    Built by repeatedly stripping the smallest left descent, which is the
    smallest possible first letter of any reduced word.

    >>> canonical_reduced_word((1, 2, 3))
    ()
    >>> evaluate_word(3, canonical_reduced_word((3, 1, 2)))
    (3, 1, 2)
    """
    word = []
    while True:
        descents = left_descents(w)
        if not descents:
            return tuple(word)
        i = descents[0]
        word.append(i)
        w = multiply_left(w, i)


def evaluate_word(n: int, word: Sequence[int]) -> Perm:
    """The product of the simple transpositions named by ``word`` in S_n.

    >>> evaluate_word(3, (1, 2))
    (2, 3, 1)
    """
    w = identity(n)
    for c in word:
        if not 1 <= c <= n - 1:
            raise ValueError(f"letter {c} out of range for S_{n}")
        w = multiply_right(w, c)
    return w


def is_reduced(n: int, word: Sequence[int]) -> bool:
    """True iff ``word`` has minimal length among words for its product."""
    return len(word) == length(evaluate_word(n, word))


def _reduced_subword_products(word: Word, n: int) -> frozenset[Perm]:
    """All products of reduced subwords of ``word``.

    A subword is taken with its letters in order and contributes only when
    every letter lengthens the running product; by the subword property of
    Bruhat order the result is exactly the lower order ideal of the word's
    product.
    """
    reach: set[Perm] = {identity(n)}
    for c in word:
        extra = set()
        for x in reach:
            if x[c - 1] < x[c]:
                extra.add(multiply_right(x, c))
        reach |= extra
    return frozenset(reach)


@lru_cache(maxsize=None)
def bruhat_interval_below(w: Perm) -> frozenset[Perm]:
    """The set of all u with u <= w in Bruhat order."""
    return _reduced_subword_products(canonical_reduced_word(w), len(w))


def bruhat_leq(u: Perm, w: Perm) -> bool:
    """Bruhat order: u <= w iff a subword of a reduced word for w equals u.

    The test runs against the canonical reduced word of ``w``; the answer is
    independent of that choice.

    >>> bruhat_leq((1, 2, 3), (3, 2, 1))
    True
    >>> bruhat_leq((3, 2, 1), (2, 3, 1))
    False
    """
    _check_rank(u, w)
    if length(u) > length(w):
        return False
    if u == w:
        return True
    n = len(w)
    below_u = bruhat_interval_below(u)
    states: set[Perm] = {identity(n)}
    for c in canonical_reduced_word(w):
        extra = set()
        for x in states:
            if x[c - 1] < x[c]:
                y = multiply_right(x, c)
                if y in below_u:
                    extra.add(y)
        states |= extra
        if u in states:
            return True
    return False
