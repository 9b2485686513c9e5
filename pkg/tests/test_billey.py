import itertools
import random

import pytest

from peterson_schubert.billey import (
    count_embeddings,
    p_on_word,
    p_restriction,
    p_table_on_word,
    root_factor,
    root_factors,
    sigma_on_word,
    sigma_restriction,
    sigma_table_on_word,
    subword_embeddings,
)
from peterson_schubert.permutations import (
    all_permutations,
    bruhat_leq,
    canonical_reduced_word,
    evaluate_word,
    identity,
    length,
    simple_transposition,
)
from peterson_schubert.polynomials import RootPoly, TPoly, in_simple_roots, project_s1
from peterson_schubert.subsets import (
    all_subsets,
    ascending_product,
    fixed_point,
    fixed_point_word,
    tail,
)

from oracles import all_reduced_words, brute_embeddings, brute_root_factor, brute_sigma

TRIANGLE_WORD = (1, 2, 3, 1, 2, 1)


def test_root_factor_table():
    factors = root_factors(TRIANGLE_WORD, 7)
    assert [(f.j, f.k) for f in factors] == [
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 4),
    ]
    assert [f.weight for f in factors] == [1, 2, 3, 1, 2, 1]
    assert [project_s1(f.as_poly(7)) for f in factors] == [
        TPoly.monomial(m, 1) for m in (1, 2, 3, 1, 2, 1)
    ]


def test_root_factor_single_positions():
    assert root_factor(3, TRIANGLE_WORD, 7) == (1, 4, 3)
    assert root_factor(6, TRIANGLE_WORD, 7) == (3, 4, 6)
    # the empty prefix fixes the simple root of the first letter
    for word in [(2,), (3, 1), (1, 2, 1)]:
        f = root_factor(1, word, 5)
        assert (f.j, f.k) == (word[0], word[0] + 1)


def test_root_factor_position_errors():
    with pytest.raises(ValueError):
        root_factor(0, TRIANGLE_WORD, 7)
    with pytest.raises(ValueError):
        root_factor(7, TRIANGLE_WORD, 7)


def test_root_factors_match_oracle():
    for n in range(2, 6):
        for w in all_permutations(n):
            word = canonical_reduced_word(w)
            got = [(f.j, f.k) for f in root_factors(word, n)]
            expected = [
                brute_root_factor(i, word, n) for i in range(1, len(word) + 1)
            ]
            assert got == expected
            assert all(j < k for j, k in got)


def test_embedding_example_count_twenty():
    n = 7
    v = ascending_product(n, (1, 2, 3, 5, 6))
    word = fixed_point_word((1, 2, 3, 4, 5, 6))
    embeddings = subword_embeddings(v, word, n)
    assert len(embeddings) == 20
    assert count_embeddings(v, word, n) == 20


def test_embedding_identity_and_diagonal():
    assert subword_embeddings(identity(4), TRIANGLE_WORD, 4) == [()]
    for a in [(1,), (1, 2), (1, 2, 3), (1, 3)]:
        v = ascending_product(4, a)
        assert count_embeddings(v, fixed_point_word(a), 4) == 1


def test_embeddings_lexicographic_and_match_oracle():
    for n in range(2, 5):
        for w in all_permutations(n):
            word = canonical_reduced_word(w)
            for v in all_permutations(n):
                got = subword_embeddings(v, word, n)
                assert got == sorted(got)
                assert got == brute_embeddings(v, word, n)
                assert count_embeddings(v, word, n) == len(got)


def test_embeddings_require_reduced_word():
    with pytest.raises(ValueError):
        subword_embeddings(identity(3), (1, 1), 3)


def test_sigma_zero_iff_not_below():
    for v, w in itertools.product(all_permutations(4), repeat=2):
        value = sigma_restriction(v, w)
        assert value.is_zero() == (not bruhat_leq(v, w))


def test_sigma_single_letter():
    s1 = simple_transposition(2, 1)
    assert sigma_restriction(s1, s1) == RootPoly.from_root(2, 1, 2)


def test_sigma_frozen_value_s1s2_at_w0():
    # brute enumeration over the word (1,2,1): the only embedding of s1*s2
    # sits at positions (1,2), contributing (t1-t2)(t1-t3)
    v = evaluate_word(3, (1, 2))
    expected = RootPoly.from_root(3, 1, 2) * RootPoly.from_root(3, 1, 3)
    assert sigma_restriction(v, (3, 2, 1)) == expected
    assert brute_sigma(v, (1, 2, 1), 3) == expected


def test_sigma_matches_brute_oracle():
    for n in range(2, 4):
        for v, w in itertools.product(all_permutations(n), repeat=2):
            word = canonical_reduced_word(w)
            assert sigma_restriction(v, w) == brute_sigma(v, word, n)
    rng = random.Random(7)
    perms4 = list(all_permutations(4))
    for _ in range(25):
        v, w = rng.choice(perms4), rng.choice(perms4)
        assert sigma_restriction(v, w) == brute_sigma(v, canonical_reduced_word(w), 4)


def test_sigma_rank_mismatch():
    with pytest.raises(ValueError):
        sigma_restriction((1, 2), (1, 2, 3))


def test_sigma_word_independence():
    for n in range(2, 5):
        for w in all_permutations(n):
            words = all_reduced_words(w)
            for v in all_permutations(n):
                values = {sigma_on_word(v, word, n) for word in words}
                assert len(values) == 1
    rng = random.Random(11)
    perms5 = list(all_permutations(5))
    for _ in range(10):
        w = rng.choice(perms5)
        words = all_reduced_words(w)
        sample = rng.sample(words, min(4, len(words)))
        v = rng.choice(perms5)
        values = {sigma_on_word(v, word, 5) for word in sample}
        assert len(values) == 1


def test_sigma_table_matches_pointwise():
    for w in all_permutations(4):
        word = canonical_reduced_word(w)
        table = sigma_table_on_word(word, 4)
        for v in all_permutations(4):
            expected = sigma_on_word(v, word, 4)
            assert table.get(v, RootPoly.zero(4)) == expected


def test_p_restriction_paper_values():
    n = 7
    a = (1, 2, 3, 5, 6)
    b = (1, 2, 3, 4, 5, 6)
    assert p_restriction(ascending_product(n, a), a) == TPoly.monomial(12, 5)
    assert p_restriction(ascending_product(n, a), b) == TPoly.monomial(3600, 5)
    assert p_restriction(ascending_product(n, b), b) == TPoly.monomial(720, 6)


def test_p_restriction_is_projected_sigma():
    for n in range(2, 5):
        for v in all_permutations(n):
            for b in all_subsets(n):
                expected = project_s1(sigma_restriction(v, fixed_point(n, b)))
                assert p_restriction(v, b) == expected
    rng = random.Random(3)
    perms5 = list(all_permutations(5))
    subsets5 = list(all_subsets(5))
    for _ in range(20):
        v, b = rng.choice(perms5), rng.choice(subsets5)
        assert p_restriction(v, b) == project_s1(sigma_restriction(v, fixed_point(5, b)))


def test_p_table_matches_pointwise():
    for b in all_subsets(5):
        word = fixed_point_word(b)
        table = p_table_on_word(word, 5)
        for v in all_permutations(5):
            expected = p_on_word(v, word, 5)
            got = table.get(v, TPoly.zero())
            if expected.is_zero():
                assert got.is_zero()
            else:
                assert got == expected


def test_equal_summands_and_factorized_count():
    # every embedding contributes the same product, and the total is
    # count times that summand
    for n in range(2, 7):
        for b in all_subsets(n):
            word = fixed_point_word(b)
            factors = root_factors(word, n)
            for a in all_subsets(n):
                if not set(a) <= set(b):
                    continue
                v = ascending_product(n, a)
                embeddings = subword_embeddings(v, word, n)
                summand = 1
                for j in a:
                    summand *= j - tail(b, j) + 1
                for positions in embeddings:
                    product = 1
                    for pos in positions:
                        product *= factors[pos - 1].weight
                    assert product == summand
                expected = TPoly.monomial(len(embeddings) * summand, len(a))
                assert p_restriction(v, b) == expected


def test_graham_positivity_small_ranks():
    for n in range(2, 5):
        for w in all_permutations(n):
            table = sigma_table_on_word(canonical_reduced_word(w), n)
            for v, sigma in table.items():
                alpha = in_simple_roots(sigma)
                assert alpha.terms, f"sigma_{v}({w}) vanished unexpectedly"
                assert all(c > 0 for c in alpha.terms.values())
        for b in all_subsets(n):
            table = p_table_on_word(fixed_point_word(b), n)
            for v, value in table.items():
                coeff, degree = value.as_monomial()
                assert coeff > 0 and degree == length(v)
