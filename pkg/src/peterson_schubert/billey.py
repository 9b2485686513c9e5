"""
Billey's restriction formula, evaluated exactly.

The restriction of the Schubert class of v to the torus-fixed point w is

    sum over reduced subwords of b equal to v  of  prod r(i, b),

where b is a reduced word for w and r(i, b) is the positive root obtained by
applying the prefix s_{b_1} ... s_{b_{i-1}} to the simple root of letter b_i.
The sum does not depend on the choice of b; subword *counts* do, so every
counting routine in the library takes the word explicitly.

Enumeration is dynamic programming over word positions.  A state is the
running product u of the chosen letters, kept only while u stays in the
Bruhat interval below the target, so the state space is that interval rather
than the 2^len(b) subwords.  Index sets are materialized only on request.

>>> from .permutations import evaluate_word
>>> [(f.j, f.k) for f in root_factors((1, 2, 3, 1, 2, 1), 7)]
[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
>>> count_embeddings(evaluate_word(4, (1, 2)), (1, 2, 3, 1, 2, 1), 4)
3
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .permutations import (
    Perm,
    Word,
    bruhat_interval_below,
    canonical_reduced_word,
    identity,
    is_reduced,
    length,
    multiply_right,
)
from .polynomials import RootPoly, TPoly
from .subsets import Subset, fixed_point_word, validate_subset

__all__ = [
    "RootFactor",
    "root_factor",
    "root_factors",
    "count_embeddings",
    "subword_embeddings",
    "sigma_on_word",
    "sigma_restriction",
    "sigma_table_on_word",
    "p_on_word",
    "p_restriction",
    "p_table_on_word",
]


class RootFactor(NamedTuple):
    """The positive root t_j - t_k (j < k) contributed by one word position."""

    j: int
    k: int
    position: int

    @property
    def weight(self) -> int:
        """Image under the circle projection, as the multiple of t."""
        return self.k - self.j

    def as_poly(self, n: int) -> RootPoly:
        return RootPoly.from_root(n, self.j, self.k)


def root_factors(word: Sequence[int], n: int) -> list[RootFactor]:
    """All root factors of a reduced word, via one pass of prefix products."""
    prefix = identity(n)
    out = []
    for pos, c in enumerate(word, start=1):
        if not 1 <= c <= n - 1:
            raise ValueError(f"letter {c} out of range for S_{n}")
        j, k = prefix[c - 1], prefix[c]
        if j > k:
            raise ValueError(f"word {tuple(word)} is not reduced at position {pos}")
        out.append(RootFactor(j, k, pos))
        prefix = multiply_right(prefix, c)
    return out


def root_factor(i: int, word: Sequence[int], n: int) -> RootFactor:
    """The root factor at position i (1-based) of ``word``.

    >>> root_factor(3, (1, 2, 3, 1, 2, 1), 7)
    RootFactor(j=1, k=4, position=3)
    """
    if not 1 <= i <= len(word):
        raise ValueError(f"position {i} out of range 1..{len(word)}")
    return root_factors(word[:i], n)[-1]


def _take_allowed(x: Perm, c: int) -> bool:
    # right multiplication by s_c lengthens x iff the entries are ascending
    return x[c - 1] < x[c]


def count_embeddings(v: Perm, word: Sequence[int], n: int) -> int:
    """Number of reduced subwords of ``word`` whose product is ``v``."""
    below = bruhat_interval_below(v)
    states: dict[Perm, int] = {identity(n): 1}
    for c in word:
        for x, acc in list(states.items()):
            if _take_allowed(x, c):
                y = multiply_right(x, c)
                if y in below:
                    states[y] = states.get(y, 0) + acc
    return states.get(v, 0)


def subword_embeddings(
    v: Perm, word: Sequence[int], n: int
) -> list[tuple[int, ...]]:
    """All index sets (i_1 < ... < i_len(v)) embedding ``v`` into ``word``.

    Returned in lexicographic order.  Prefer ``count_embeddings`` or the
    restriction sums when the sets themselves are not needed; this routine
    materializes every embedding.
    """
    word = tuple(word)
    if not is_reduced(n, word):
        raise ValueError(f"word {word} is not reduced")
    below = bruhat_interval_below(v)
    L = len(word)
    # feasible[pos] = states from which v is reachable using positions > pos
    feasible: list[set[Perm]] = [set() for _ in range(L + 1)]
    feasible[L] = {v}
    for pos in range(L, 0, -1):
        c = word[pos - 1]
        reach = set(feasible[pos])
        for y in feasible[pos]:
            if y[c - 1] > y[c]:  # y took letter c last; undo it
                x = multiply_right(y, c)
                if x in below:
                    reach.add(x)
        feasible[pos - 1] = reach

    target_len = length(v)
    out: list[tuple[int, ...]] = []

    def walk(pos: int, x: Perm, chosen: list[int]) -> None:
        if len(chosen) == target_len:
            if x == v:
                out.append(tuple(chosen))
            return
        for q in range(pos, L + 1):
            c = word[q - 1]
            if _take_allowed(x, c):
                y = multiply_right(x, c)
                if y in below and y in feasible[q]:
                    chosen.append(q)
                    walk(q + 1, y, chosen)
                    chosen.pop()

    if identity(n) in feasible[0]:
        walk(1, identity(n), [])
    return out


def sigma_table_on_word(word: Sequence[int], n: int) -> dict[Perm, RootPoly]:
    """Restriction values sigma_u(w) for every u below w, from one word pass.

    ``word`` must be a reduced word for w; the returned map sends each u in
    the Bruhat interval below w to the full multivariate restriction value.
    """
    factors = root_factors(word, n)
    states: dict[Perm, RootPoly] = {identity(n): RootPoly.constant(n, 1)}
    for factor in factors:
        c = word[factor.position - 1]
        froot = factor.as_poly(n)
        for x, acc in list(states.items()):
            if _take_allowed(x, c):
                y = multiply_right(x, c)
                contrib = acc * froot
                prev = states.get(y)
                states[y] = contrib if prev is None else prev + contrib
    return states


def sigma_on_word(v: Perm, word: Sequence[int], n: int) -> RootPoly:
    """The restriction sum for target ``v`` against one fixed reduced word."""
    below = bruhat_interval_below(v)
    factors = root_factors(word, n)
    states: dict[Perm, RootPoly] = {identity(n): RootPoly.constant(n, 1)}
    for factor in factors:
        c = word[factor.position - 1]
        froot = factor.as_poly(n)
        for x, acc in list(states.items()):
            if _take_allowed(x, c):
                y = multiply_right(x, c)
                if y in below:
                    contrib = acc * froot
                    prev = states.get(y)
                    states[y] = contrib if prev is None else prev + contrib
    return states.get(v, RootPoly.zero(n))


def sigma_restriction(v: Perm, w: Perm) -> RootPoly:
    """The equivariant Schubert class of v restricted to the fixed point w.

    Always evaluated against the canonical reduced word of ``w``; the value
    is word-independent.  Zero exactly when v is not below w in Bruhat order.

    >>> str(sigma_restriction((2, 1), (2, 1)))
    't1 - t2'
    """
    if len(v) != len(w):
        raise ValueError(f"rank mismatch: {len(v)} != {len(w)}")
    return sigma_on_word(v, canonical_reduced_word(w), len(w))


def p_table_on_word(word: Sequence[int], n: int) -> dict[Perm, TPoly]:
    """Projected restriction values for every u below the word's product.

    Each contribution is a product of projected factors (k - j) t, so the
    whole pass runs on integers; entry u is an integer multiple of
    t^length(u).
    """
    factors = root_factors(word, n)
    states: dict[Perm, int] = {identity(n): 1}
    for factor in factors:
        c = word[factor.position - 1]
        weight = factor.weight
        for x, acc in list(states.items()):
            if _take_allowed(x, c):
                y = multiply_right(x, c)
                states[y] = states.get(y, 0) + acc * weight
    return {u: TPoly.monomial(total, length(u)) for u, total in states.items()}


def p_on_word(v: Perm, word: Sequence[int], n: int) -> TPoly:
    """Projected restriction sum for target ``v`` against one reduced word."""
    below = bruhat_interval_below(v)
    factors = root_factors(word, n)
    states: dict[Perm, int] = {identity(n): 1}
    for factor in factors:
        c = word[factor.position - 1]
        weight = factor.weight
        for x, acc in list(states.items()):
            if _take_allowed(x, c):
                y = multiply_right(x, c)
                if y in below:
                    states[y] = states.get(y, 0) + acc * weight
    return TPoly.monomial(states.get(v, 0), length(v))


def p_restriction(v: Perm, b: Subset | Sequence[int]) -> TPoly:
    """The Peterson Schubert class of v restricted to the fixed point of ``b``.

    Equal to ``project_s1(sigma_restriction(v, fixed_point(n, b)))``; computed
    directly from projected factors against the fixed word of ``b``.

    >>> str(p_restriction((2, 1, 3), (1, 2)))
    '2t'
    """
    n = len(v)
    word = fixed_point_word(validate_subset(n, b))
    return p_on_word(v, word, n)
