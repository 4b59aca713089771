from itertools import product
from math import comb, factorial

import pytest

from symci.partitions import (
    Partition,
    class_size,
    conjugate,
    contains,
    format_partition,
    is_hook,
    n_stat,
    parse_partition,
    partitions_of,
)


def brute_force_partitions(n):
    """Independent enumeration: weakly decreasing positive tuples summing to n."""
    if n == 0:
        return {()}
    found = set()

    def rec(prefix, remaining):
        if remaining == 0:
            found.add(prefix)
            return
        cap = prefix[-1] if prefix else remaining
        for first in range(1, min(cap, remaining) + 1):
            rec(prefix + (first,), remaining - first)

    rec((), n)
    return found


class TestPartitionType:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition([1, 3])

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition([2, 0])
        with pytest.raises(ValueError):
            Partition([-1])

    def test_empty_is_partition_of_zero(self):
        assert Partition().n == 0
        assert partitions_of(0) == (Partition(),)

    def test_equals_plain_tuple(self):
        assert Partition([3, 1]) == (3, 1)
        assert hash(Partition([3, 1])) == hash((3, 1))


class TestEnumeration:
    def test_n4_listing(self):
        assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))

    def test_n5_count_against_brute_force(self):
        listed = partitions_of(5)
        assert len(listed) == 7
        assert set(listed) == brute_force_partitions(5)

    @pytest.mark.parametrize("n", range(9))
    def test_complete_and_unique(self, n):
        listed = partitions_of(n)
        assert len(set(listed)) == len(listed)
        assert set(listed) == brute_force_partitions(n)

    def test_reverse_lexicographic(self):
        for n in range(1, 9):
            listed = list(partitions_of(n))
            assert listed == sorted(listed, reverse=True)
            assert listed[0] == (n,)


class TestContains:
    def test_examples(self):
        assert contains((3, 2), (2, 2))
        assert not contains((4, 1), (2, 2))
        assert contains((2, 1, 1), (2, 1, 1))

    def test_partial_order(self):
        pool = [lam for n in range(7) for lam in partitions_of(n)]
        for a in pool:
            assert contains(a, a)
        for a, b in product(pool, repeat=2):
            if contains(a, b) and contains(b, a):
                assert a == b
        for a, b, c in product(pool, repeat=3):
            if contains(a, b) and contains(b, c):
                assert contains(a, c)


class TestHooks:
    def test_examples(self):
        assert is_hook((5,))
        assert not is_hook((2, 2))
        assert is_hook((3, 1, 1))

    def test_matches_containment_characterization(self):
        for n in range(1, 11):
            for lam in partitions_of(n):
                assert is_hook(lam) == (not contains(lam, (2, 2)))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_hook(())


class TestNStat:
    def test_examples(self):
        assert n_stat((1, 1, 1, 1)) == 6
        assert n_stat((4,)) == 0
        assert n_stat((2, 2)) == 2

    def test_conjugate_binomial_identity(self):
        for n in range(9):
            for mu in partitions_of(n):
                expected = sum(comb(part, 2) for part in conjugate(mu))
                assert n_stat(mu) == expected


class TestConjugate:
    def test_examples(self):
        assert conjugate((5,)) == (1, 1, 1, 1, 1)
        assert conjugate((2, 2)) == (2, 2)
        assert conjugate((3, 1)) == (2, 1, 1)

    def test_involution(self):
        for n in range(9):
            for lam in partitions_of(n):
                assert conjugate(conjugate(lam)) == lam


class TestClassSize:
    def test_examples(self):
        assert class_size((2, 1, 1)) == 6
        assert class_size((2, 2)) == 3
        assert class_size((1, 1, 1, 1, 1)) == 1

    def test_sizes_sum_to_group_order(self):
        for n in range(1, 9):
            assert sum(class_size(mu) for mu in partitions_of(n)) == factorial(n)


class TestTextForms:
    def test_parse_variants(self):
        assert parse_partition("(3,1)") == (3, 1)
        assert parse_partition("[3,1]") == (3, 1)
        assert parse_partition("3,1") == (3, 1)
        assert parse_partition("(2^2,1^3)") == (2, 2, 1, 1, 1)
        assert parse_partition("()") == ()

    def test_format(self):
        assert format_partition((3, 1)) == "(3,1)"
        assert format_partition((2, 2, 1, 1, 1), shorthand=True) == "(2^2,1^3)"

    def test_roundtrip(self):
        for n in range(8):
            for lam in partitions_of(n):
                assert parse_partition(format_partition(lam)) == lam
                assert parse_partition(format_partition(lam, shorthand=True)) == lam

    def test_bad_input(self):
        with pytest.raises(ValueError):
            parse_partition("(3,")
        with pytest.raises(ValueError):
            parse_partition("(1,3)")
