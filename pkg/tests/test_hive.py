import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poslab.combinatorics import Partition, lr_coefficient, partitions_of
from poslab.hive import (HiveBoundary, SizeMismatch, expand_hive, hive_polytope, is_hive,
                         lr_nonvanishing, lr_stretching_values, lr_via_hive, some_hive)
from poslab.polyhedra import count_lattice_points, dilate
from poslab.verify import lr_corpus

from oracles import lr_brute


class TestBoundary:
    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            HiveBoundary.of((1,), (1,), (3,))

    def test_side_too_small(self):
        with pytest.raises(ValueError):
            HiveBoundary(1, Partition([1, 1]), Partition(), Partition([1, 1]))

    def test_default_side_is_longest_partition(self):
        assert HiveBoundary.of((2, 1), (1,), (2, 1, 1)).n == 3
        assert HiveBoundary.of((), (), ()).n == 1

    def test_boundary_values(self):
        h = HiveBoundary.of((2, 1), (2, 1), (3, 2, 1)).values()
        assert [h[(i, 0)] for i in range(4)] == [0, 2, 3, 3]
        assert [h[(3 - j, j)] for j in range(4)] == [3, 5, 6, 6]
        assert [h[(0, j)] for j in range(4)] == [0, 3, 5, 6]


class TestHivePolytope:
    def test_n2_is_zero_dimensional(self):
        P = hive_polytope(HiveBoundary.of((1,), (1,), (2,), n=2))
        assert P.dim == 0 and count_lattice_points(P) == 1

    def test_n2_column(self):
        assert count_lattice_points(hive_polytope(HiveBoundary.of((1,), (1,), (1, 1), n=2))) == 1

    def test_21_21_321(self):
        P = hive_polytope(HiveBoundary.of((2, 1), (2, 1), (3, 2, 1)))
        assert P.dim == 1 and count_lattice_points(P) == 2

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_dimension(self, n):
        bd = HiveBoundary(n, Partition(), Partition(), Partition())
        assert hive_polytope(bd).dim == (n - 1) * (n - 2) // 2

    def test_points_expand_to_hives(self):
        bd = HiveBoundary.of((2, 1), (2, 1), (3, 2, 1))
        h = some_hive((2, 1), (2, 1), (3, 2, 1))
        assert is_hive(bd.n, h)
        assert all(h[v] == x for v, x in bd.values().items())

    def test_non_hive_rejected(self):
        bd = HiveBoundary.of((2, 1), (2, 1), (3, 2, 1))
        assert not hive_polytope(bd).contains([100])
        assert not is_hive(bd.n, expand_hive(bd, [100]))


class TestLrViaHive:
    def test_examples(self):
        assert lr_via_hive((2, 1), (2, 1), (3, 2, 1)) == 2
        assert lr_via_hive((4, 2, 1), (), (4, 2, 1)) == 1
        assert lr_via_hive((1,), (1,), (3,)) == 0

    def test_exhaustive_small_corpus(self):
        for a, b, g in lr_corpus(6):
            assert lr_via_hive(a, b, g) == lr_coefficient(a, b, g), (a, b, g)

    def test_sampled_length_four(self):
        rng = random.Random(4)
        triples = [t for t in lr_corpus(12, max_length=4, min_size=9)
                   if max(map(len, t)) == 4 and rng.random() < 0.0015]
        assert len(triples) >= 20
        for a, b, g in triples:
            assert lr_via_hive(a, b, g) == lr_coefficient(a, b, g), (a, b, g)

    @pytest.mark.parametrize("triple", [((2, 1), (1, 1), (3, 2)), ((2, 2), (1,), (2, 2, 1)),
                                        ((1, 1), (1, 1), (2, 1, 1))])
    def test_against_brute_force(self, triple):
        assert lr_via_hive(*triple) == lr_brute(*triple)


class TestNonvanishing:
    def test_examples(self):
        assert lr_nonvanishing((2, 1), (2, 1), (3, 2, 1))
        assert not lr_nonvanishing((2,), (2,), (2, 1, 1))
        assert not lr_nonvanishing((1,), (1,), (3,))

    def test_agrees_with_tableau_count(self):
        for a, b, g in lr_corpus(7):
            assert lr_nonvanishing(a, b, g) == (lr_coefficient(a, b, g) > 0), (a, b, g)


class TestStretching:
    def test_21_21_321(self):
        assert lr_stretching_values((2, 1), (2, 1), (3, 2, 1), 4) == [2, 3, 4, 5]

    def test_trivial_beta(self):
        assert lr_stretching_values((3, 1), (), (3, 1), 5) == [1] * 5

    def test_1_1_2(self):
        assert lr_stretching_values((1,), (1,), (2,), 5) == [1] * 5

    def test_tableau_oracle_at_each_k(self):
        a, b, g = (2, 1), (2, 1), (3, 2, 1)
        vals = lr_stretching_values(a, b, g, 3)
        assert vals == [lr_coefficient(Partition(a).scaled(k), Partition(b).scaled(k),
                                       Partition(g).scaled(k)) for k in range(1, 4)]

    def test_dilation_identity(self):
        rng = random.Random(7)
        corpus = [t for t in lr_corpus(7) if lr_coefficient(*t) > 0]
        for a, b, g in rng.sample(corpus, 20):
            P = hive_polytope(HiveBoundary.of(a, b, g))
            for k in range(1, 5):
                scaled = [Partition(p).scaled(k) for p in (a, b, g)]
                Q = hive_polytope(HiveBoundary.of(*scaled))
                assert Q.normalized() == dilate(P, k).normalized()

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            lr_stretching_values((1,), (1,), (3,), 2)


small = st.lists(st.integers(1, 3), max_size=3).map(lambda xs: tuple(sorted(xs, reverse=True)))


@settings(max_examples=60, deadline=None)
@given(small, small, st.data())
def test_random_triples_agree_with_oracle(a, b, data):
    n = sum(a) + sum(b)
    gs = [tuple(g) for g in partitions_of(n, 3)]
    if not gs:
        return
    g = data.draw(st.sampled_from(gs))
    assert lr_via_hive(a, b, g) == lr_coefficient(a, b, g)
