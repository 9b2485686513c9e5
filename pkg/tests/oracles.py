"""
Independent brute-force oracles.

Everything here recomputes a quantity by a different route than the library:
breadth-first search for lengths, the sorted-prefix criterion for Bruhat
order, raw itertools enumeration for subwords, and direct prefix application
for root factors.  Expected values frozen in the tests were produced by
these oracles, and the property tests compare the two routes wholesale.
"""

from __future__ import annotations

import itertools
from collections import deque

from peterson_schubert.polynomials import RootPoly


def swap_positions(w, i):
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def minimal_word_length(w):
    """Length of w as the BFS distance from the identity in simple steps."""
    n = len(w)
    start = tuple(range(1, n + 1))
    seen = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == w:
            return seen[x]
        for i in range(1, n):
            y = swap_positions(x, i)
            if y not in seen:
                seen[y] = seen[x] + 1
                queue.append(y)
    raise AssertionError("unreachable permutation")


def dot_leq(u, w):
    """Bruhat comparison by the sorted-prefix dominance criterion."""
    n = len(u)
    for i in range(1, n + 1):
        for a, b in zip(sorted(u[:i]), sorted(w[:i])):
            if a > b:
                return False
    return True


def left_descent_set(w):
    pos = {v: i for i, v in enumerate(w)}
    return [i for i in range(1, len(w)) if pos[i] > pos[i + 1]]


def swap_values(w, i):
    a, b = w.index(i), w.index(i + 1)
    out = list(w)
    out[a], out[b] = i + 1, i
    return tuple(out)


def all_reduced_words(w):
    """Every reduced word of w, by peeling left descents recursively."""
    if not left_descent_set(w):
        return [()]
    words = []
    for i in left_descent_set(w):
        for rest in all_reduced_words(swap_values(w, i)):
            words.append((i,) + rest)
    return words


def word_product(n, word):
    w = tuple(range(1, n + 1))
    for c in word:
        w = swap_positions(w, c)
    return w


def brute_embeddings(v, word, n):
    """All embeddings of v into word by checking every position subset."""
    k = minimal_word_length(v)
    out = []
    for positions in itertools.combinations(range(1, len(word) + 1), k):
        letters = tuple(word[p - 1] for p in positions)
        if word_product(n, letters) == v:
            out.append(positions)
    return out


def brute_root_factor(i, word, n):
    """The pair (j, k) of the root at position i, by direct prefix action."""

    def prefix_apply(x):
        for c in reversed(word[: i - 1]):
            if x == c:
                x = c + 1
            elif x == c + 1:
                x = c
        return x

    c = word[i - 1]
    return prefix_apply(c), prefix_apply(c + 1)


def brute_sigma(v, word, n):
    """Restriction value as a raw sum over brute-force embeddings."""
    total = RootPoly.zero(n)
    for positions in brute_embeddings(v, word, n):
        term = RootPoly.constant(n, 1)
        for p in positions:
            j, k = brute_root_factor(p, word, n)
            term = term * RootPoly.from_root(n, j, k)
        total = total + term
    return total


def fixed_point_violation(w):
    """Smallest i with w^{-1}(i) > w^{-1}(i+1) + 1, or None."""
    n = len(w)
    pos = {v: i + 1 for i, v in enumerate(w)}
    for i in range(1, n):
        if pos[i] > pos[i + 1] + 1:
            return i
    return None
