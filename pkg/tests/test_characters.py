import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poslab.characters import (ClassFunction, SizeMismatch, character, character_table,
                               class_size, dimension, kronecker, kronecker_stretching_values,
                               rim_hooks)
from poslab.combinatorics import Partition, enumerate_standard, partitions_of
from poslab.errors import ResourceCapExceeded

from oracles import perm_cycle_type, permutations_of


class TestClassSize:
    def test_s3(self):
        assert class_size((1, 1, 1)) == 1
        assert class_size((3,)) == 2
        assert class_size((2, 1)) == 3

    @pytest.mark.parametrize("n", range(1, 8))
    def test_sums_to_factorial(self, n):
        assert sum(class_size(mu) for mu in partitions_of(n)) == math.factorial(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_against_permutation_count(self, n):
        counts = {}
        for p in permutations_of(n):
            t = perm_cycle_type(p)
            counts[t] = counts.get(t, 0) + 1
        assert {Partition(t): c for t, c in counts.items()} == {
            mu: class_size(mu) for mu in partitions_of(n)}

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            class_size((2, 1), 4)


class TestCharacter:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_trivial_and_sign(self, n):
        for mu in partitions_of(n):
            assert character((n,), mu) == 1
            assert character((1,) * n, mu) == (-1) ** (n - len(mu))

    def test_21_identity(self):
        assert character((2, 1), (1, 1, 1)) == 2

    def test_s3_table(self):
        parts, table = character_table(3)
        assert [tuple(p) for p in parts] == [(3,), (2, 1), (1, 1, 1)]
        assert table == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            character((2,), (1,))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_dimension_is_standard_tableau_count(self, n):
        for lam in partitions_of(n):
            assert dimension(lam) == len(enumerate_standard(lam))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_row_orthogonality(self, n):
        parts = list(partitions_of(n))
        for lam in parts:
            for rho in parts:
                s = sum(class_size(mu) * character(lam, mu) * character(rho, mu) for mu in parts)
                assert s == math.factorial(n) * (lam == rho)

    def test_class_function_inner(self):
        f, g = ClassFunction.irreducible((2, 1)), ClassFunction.irreducible((3,))
        assert f.inner(f) == 1 and f.inner(g) == 0

    def test_rim_hooks_of_21(self):
        hooks = sorted(rim_hooks(Partition([2, 1]), 3))
        assert hooks == [(Partition(), 1)]
        assert rim_hooks(Partition([2, 1]), 2) == []


class TestKronecker:
    def test_examples(self):
        assert kronecker((3,), (3,), (3,)) == 1
        assert kronecker((1, 1), (1, 1), (2,)) == 1
        assert kronecker((2, 1), (2, 1), (2, 1)) == 1

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            kronecker((2,), (1,), (2,))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_pairing_with_trivial(self, n):
        parts = list(partitions_of(n))
        for a in parts:
            for b in parts:
                assert kronecker(a, b, (n,)) == (a == b)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_symmetry(self, n):
        parts = list(partitions_of(n))
        for a, b, g in itertools.product(parts, repeat=3):
            vals = {kronecker(*p) for p in itertools.permutations((a, b, g))}
            assert len(vals) == 1

    @pytest.mark.parametrize("n", range(1, 8))
    def test_dimension_identity(self, n):
        parts = list(partitions_of(n))
        for a in parts:
            for b in parts:
                lhs = sum(kronecker(a, b, g) * dimension(g) for g in parts)
                assert lhs == dimension(a) * dimension(b)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 6).flatmap(lambda n: st.tuples(
        *[st.sampled_from([tuple(p) for p in partitions_of(n)])] * 3)))
    def test_nonnegative(self, triple):
        assert kronecker(*triple) >= 0


class TestKroneckerStretching:
    def test_ones(self):
        assert kronecker_stretching_values((1,), (1,), (1,), 3) == [1, 1, 1]

    def test_sign_squared(self):
        vals = kronecker_stretching_values((1, 1), (1, 1), (2,), 2)
        assert vals == [1, kronecker((2, 2), (2, 2), (4,))]
        assert vals == [1, 1]

    def test_trivial_times_sign(self):
        assert kronecker_stretching_values((2,), (1, 1), (2,), 2)[0] == 0

    def test_cap(self):
        with pytest.raises(ResourceCapExceeded):
            kronecker_stretching_values((2, 1), (2, 1), (2, 1), 9)

    def test_env_cap(self, monkeypatch):
        monkeypatch.setenv("POSLAB_CAP", "4")
        with pytest.raises(ResourceCapExceeded):
            kronecker_stretching_values((1,), (1,), (1,), 5)
