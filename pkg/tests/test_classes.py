import math

import pytest

from peterson_schubert.billey import p_restriction
from peterson_schubert.peterson_classes import (
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
from peterson_schubert.permutations import all_permutations, evaluate_word, length
from peterson_schubert.polynomials import TPoly, divides
from peterson_schubert.subsets import (
    all_subsets,
    ascending_product,
    consecutive_strings,
)


def test_constant_class():
    cls = class_of(5, ())
    assert all(v == TPoly.constant(1) for v in cls.table.values())


def test_paper_table_entries():
    n = 7
    a = (1, 2, 3, 5, 6)
    full = (1, 2, 3, 4, 5, 6)
    assert class_of(n, full).table[full] == TPoly.monomial(720, 6)
    assert class_of(n, a).table[full] == TPoly.monomial(3600, 5)
    assert class_of(n, a).table[a] == TPoly.monomial(12, 5)


def test_diagonal_value_examples():
    assert diagonal_value((1, 2, 3, 5, 6)) == TPoly.monomial(12, 5)
    assert diagonal_value((3,)) == TPoly.monomial(1, 1)
    for n in range(2, 7):
        full = tuple(range(1, n))
        assert diagonal_value(full) == TPoly.monomial(math.factorial(n - 1), n - 1)
        assert p_restriction(ascending_product(n, full), full) == diagonal_value(full)


def test_diagonal_matches_table():
    for n in range(2, 7):
        for a in all_subsets(n):
            assert class_of(n, a).table[a] == diagonal_value(a)


def test_pi_at_examples():
    assert pi_at(3, (1, 2, 3, 5, 6)) == TPoly.monomial(3, 1)
    assert pi_at(4, (1, 2, 3, 5, 6)) == TPoly.zero()
    full = (1, 2, 3, 4, 5, 6)
    assert pi_at(4, full) == TPoly.monomial(12, 1)
    assert p_restriction(ascending_product(7, (4,)), full) == TPoly.monomial(12, 1)


def test_pi_at_matches_oracle():
    for n in range(2, 7):
        for i in range(1, n):
            v = ascending_product(n, (i,))
            for a in all_subsets(n):
                assert pi_at(i, a) == p_restriction(v, a)


def test_single_string_restriction_examples():
    assert single_string_restriction((1, 2, 3, 5, 6), (1, 2, 3, 4, 5, 6)) == (
        TPoly.monomial(3600, 5)
    )
    assert single_string_restriction((1,), (1, 2)) == TPoly.monomial(2, 1)
    assert single_string_restriction((2,), (1, 2)) == TPoly.monomial(2, 1)


def test_single_string_restriction_matches_oracle():
    for n in range(3, 8):
        b = tuple(range(1, n))
        for k in b:
            a = tuple(j for j in b if j != k)
            assert single_string_restriction(a, b) == p_restriction(
                ascending_product(n, a), b
            )


def test_single_string_restriction_preconditions():
    with pytest.raises(ValueError):
        single_string_restriction((1,), (1, 3))  # b not a single string
    with pytest.raises(ValueError):
        single_string_restriction((1,), (1, 2, 3))  # two elements missing
    with pytest.raises(ValueError):
        single_string_restriction((4,), (1, 2))  # a not inside b


def test_disjoint_product_examples():
    assert disjoint_product_check(7, (1, 2, 3), (5, 6))
    assert disjoint_product_check(5, (), (2, 3))
    assert disjoint_product_check(5, (1,), (3,))


def test_disjoint_product_rejects_adjacent():
    with pytest.raises(ValueError):
        disjoint_product_check(6, (1, 2), (3,))
    with pytest.raises(ValueError):
        disjoint_product_check(6, (2,), (2, 4))


def test_disjoint_product_exhaustive():
    for n in range(2, 7):
        subsets = list(all_subsets(n))
        for b in subsets:
            for b2 in subsets:
                if b >= b2 or set(b) & set(b2):
                    continue
                if any(abs(j - j2) == 1 for j in b for j2 in b2):
                    continue
                assert disjoint_product_check(n, b, b2)


def test_upper_triangularity_and_degree():
    for n in range(2, 7):
        for a in all_subsets(n):
            cls = class_of(n, a)
            for b in all_subsets(n):
                value = cls.table[b]
                if set(a) <= set(b):
                    coeff, degree = value.as_monomial()
                    assert coeff > 0 and degree == len(a)
                else:
                    assert value.is_zero()


def test_closed_form_equals_oracle_tables():
    for n in range(2, 7):
        for a in all_subsets(n):
            assert class_of(n, a) == class_of(n, a, oracle=True)


def test_generic_class_matches_restrictions():
    for w in all_permutations(4):
        cls = generic_class(4, w)
        assert cls.is_generic
        for b in all_subsets(4):
            assert cls.table[b] == p_restriction(w, b)


def test_all_generic_classes_consistent():
    generics = all_generic_classes(4)
    assert len(generics) == 24
    for w, cls in generics.items():
        assert cls.table == generic_class(4, w).table


def test_minimality_examples():
    # a class is always divisible by itself on the diagonal
    for n in range(2, 6):
        for a in all_subsets(n):
            assert minimality_check(ascending_product(n, a), a)
    # the inverse of the ascending product works too
    assert minimality_check(evaluate_word(4, (3, 2, 1)), (1, 2, 3))
    # the longest element is upper-triangular for the full subset
    assert minimality_check((4, 3, 2, 1), (1, 2, 3))


def test_minimality_precondition_violation():
    # the class of s_1 is nonzero at {1}, which does not contain {2}
    with pytest.raises(ValueError, match="upper-triangular"):
        minimality_check((2, 1, 3), (2,))


def test_minimality_exhaustive_scan():
    for n in range(2, 6):
        generics = all_generic_classes(n)
        subsets = list(all_subsets(n))
        for w, cls in generics.items():
            for a in subsets:
                triangular = all(
                    cls.table[b].is_zero()
                    for b in subsets
                    if not set(a) <= set(b)
                )
                if not triangular or cls.table[a].is_zero():
                    continue
                assert divides(diagonal_value(a), cls.table[a]), (w, a)


def test_uniqueness_of_upper_triangular_classes():
    # matching the diagonal forces the whole table
    for n in range(2, 6):
        subsets = list(all_subsets(n))
        targets = {a: class_of(n, a) for a in subsets}
        for w, cls in all_generic_classes(n).items():
            for a in subsets:
                triangular = all(
                    cls.table[b].is_zero()
                    for b in subsets
                    if not set(a) <= set(b)
                )
                if not triangular:
                    continue
                if cls.table[a] == targets[a].table[a]:
                    assert cls.table == targets[a].table, (w, a)


def test_preimage_examples():
    assert preimage_classes(3, (1, 2)) == {
        evaluate_word(3, (1, 2)),
        evaluate_word(3, (2, 1)),
    }
    assert preimage_classes(2, (1,)) == {(2, 1)}


def test_preimage_two_strings():
    pre = preimage_classes(6, (1, 2, 4, 5))
    assert len(pre) == 4
    expected = set()
    for first in [(1, 2), (2, 1)]:
        for second in [(4, 5), (5, 4)]:
            expected.add(evaluate_word(6, first + second))
    assert pre == expected


def test_preimage_sizes_exhaustive():
    for n in range(2, 6):
        for a in all_subsets(n):
            k = sum(1 for lo, hi in consecutive_strings(a) if hi > lo)
            pre = preimage_classes(n, a)
            assert len(pre) == 2**k
            assert ascending_product(n, a) in pre
            assert all(length(w) == len(a) for w in pre)


def test_class_json_and_csv_shape():
    cls = class_of(3, (1,))
    data = cls.to_json()
    assert data["n"] == 3 and data["class"] == [1] and not data["generic"]
    assert data["table"] == {"": "0", "1": "t", "2": "0", "1,2": "2t"}
    rows = cls.csv_rows()
    assert rows[0] == ("", "0")
    assert ("1,2", "2t") in rows
