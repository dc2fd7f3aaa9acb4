"""Scaled lattices: the three unimodular families and Construction A."""
import pytest

from zkframe.codes import brute_force_classify, code_from_rows
from zkframe.lattices import (
    E8,
    E8Z,
    ZN,
    LatticeClass,
    ScaledLattice,
    construction_a,
    gram,
    identify_class,
    is_even,
    is_unimodular,
    lattice_classes_for_length,
    short_vectors,
    standard_lattice,
)

EXTENDED_HAMMING = [
    [1, 0, 0, 0, 0, 1, 1, 1],
    [0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 1, 1, 1, 1, 0],
]


def zn(n):
    return standard_lattice(LatticeClass(ZN, n))


def e8():
    return standard_lattice(LatticeClass(E8, 8))


def e8z():
    return standard_lattice(LatticeClass(E8Z, 9))


def r4(m):
    # Jacobi: number of ways to write m as a sum of four squares
    return 8 * sum(d for d in range(1, m + 1) if m % d == 0 and d % 4 != 0)


class TestClasses:
    def test_length_eight(self):
        assert lattice_classes_for_length(8) == [LatticeClass(ZN, 8), LatticeClass(E8, 8)]

    def test_length_nine(self):
        assert lattice_classes_for_length(9) == [
            LatticeClass(ZN, 9),
            LatticeClass(E8Z, 9),
        ]

    def test_small_lengths_only_standard(self):
        for n in range(1, 8):
            assert lattice_classes_for_length(n) == [LatticeClass(ZN, n)]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            lattice_classes_for_length(10)
        with pytest.raises(ValueError):
            lattice_classes_for_length(0)

    def test_tag_validation(self):
        with pytest.raises(ValueError):
            LatticeClass("leech", 8)
        with pytest.raises(ValueError):
            LatticeClass(E8, 7)
        with pytest.raises(ValueError):
            LatticeClass(E8Z, 8)


class TestStandard:
    def test_unimodular(self):
        assert is_unimodular(zn(4))

    def test_not_even(self):
        assert not is_even(zn(4))

    def test_norm_one(self):
        assert len(short_vectors(zn(4), 1)) == 8
        assert len(short_vectors(zn(9), 1)) == 18

    def test_scaled_sublattice_detection(self):
        doubled = ScaledLattice(
            [[2, 0], [0, 2]], 4
        )  # doubled square lattice at scale 4 is again unimodular
        assert is_unimodular(doubled)
        halfscale = ScaledLattice([[2, 0], [0, 2]], 2)
        assert not is_unimodular(halfscale)


class TestE8:
    def test_unimodular_and_even(self):
        l = e8()
        assert is_unimodular(l)
        assert is_even(l)

    def test_no_norm_one(self):
        assert short_vectors(e8(), 1) == []

    def test_root_count(self):
        assert len(short_vectors(e8(), 2)) == 240

    def test_identify(self):
        assert identify_class(e8()) == LatticeClass(E8, 8)


class TestE8Z:
    def test_unimodular(self):
        l = e8z()
        assert is_unimodular(l)
        assert not is_even(l)

    def test_norm_counts(self):
        l = e8z()
        assert len(short_vectors(l, 1)) == 2
        assert len(short_vectors(l, 2)) == 240

    def test_identify(self):
        assert identify_class(e8z()) == LatticeClass(E8Z, 9)


class TestIdentify:
    def test_standard_round_trip(self):
        for n in range(1, 10):
            assert identify_class(zn(n)) == LatticeClass(ZN, n)

    def test_rejects_non_unimodular(self):
        with pytest.raises(ValueError):
            identify_class(ScaledLattice([[2]], 2))


class TestShortVectors:
    def test_z4_norm_four(self):
        vs = short_vectors(zn(4), 4)
        assert len(vs) == 24
        axis = [v for v in vs if sorted(map(abs, v)) == [0, 0, 0, 2]]
        diag = [v for v in vs if sorted(map(abs, v)) == [1, 1, 1, 1]]
        assert len(axis) == 8 and len(diag) == 16

    def test_z4_norm_nine(self):
        assert len(short_vectors(zn(4), 9)) == 104

    def test_jacobi_sum_of_four_squares(self):
        l = zn(4)
        for m in range(1, 26):
            assert len(short_vectors(l, m)) == r4(m), m

    def test_negation_closure(self):
        for l in (zn(3), e8(), e8z()):
            for m in (1, 2, 3, 4):
                vs = set(short_vectors(l, m))
                assert vs == {tuple(-x for x in v) for v in vs}

    def test_sorted_and_distinct(self):
        vs = short_vectors(e8(), 4)
        assert vs == sorted(set(vs))

    def test_norm_validation(self):
        with pytest.raises(ValueError):
            short_vectors(zn(2), 0)


class TestConstructionA:
    def test_span_two_mod_four(self):
        l = construction_a(code_from_rows(4, 1, [[2]]))
        assert is_unimodular(l)
        assert identify_class(l) == LatticeClass(ZN, 1)

    def test_binary_repetition(self):
        l = construction_a(code_from_rows(2, 2, [[1, 1]]))
        assert is_unimodular(l)
        assert len(short_vectors(l, 1)) == 4
        assert identify_class(l) == LatticeClass(ZN, 2)

    def test_extended_hamming_gives_even_lattice(self):
        l = construction_a(code_from_rows(2, 8, EXTENDED_HAMMING))
        assert is_unimodular(l)
        assert is_even(l)
        assert short_vectors(l, 1) == []
        assert identify_class(l) == LatticeClass(E8, 8)

    def test_unimodular_for_every_classified_code(self):
        for k, n in [(2, 4), (3, 4), (4, 3), (5, 4)]:
            for c in brute_force_classify(k, n):
                l = construction_a(c)
                assert is_unimodular(l)
                identify_class(l)  # must land in a recognized class

    def test_rejects_non_self_dual(self):
        with pytest.raises(ValueError):
            construction_a(code_from_rows(2, 2, [[1, 0]]))


class TestScaledLattice:
    def test_inner_product_must_divide(self):
        l = ScaledLattice([[1, 0], [0, 1]], 4)
        assert l.inner((2, 0), (2, 0)) == 1
        with pytest.raises(ValueError):
            l.inner((1, 0), (1, 0))

    def test_membership(self):
        l = e8()
        roots = short_vectors(l, 2)
        assert all(l.contains(v) for v in roots)
        assert not l.contains((1,) + (0,) * 7)

    def test_gram_is_symmetric(self):
        for l in (zn(3), e8(), e8z()):
            g = gram(l)
            assert all(g[i][j] == g[j][i] for i in range(l.n) for j in range(l.n))

    def test_validation(self):
        with pytest.raises(ValueError):
            ScaledLattice([[1, 0]], 4)  # not square
        with pytest.raises(ValueError):
            ScaledLattice([[1, 0], [2, 0]], 4)  # singular
        with pytest.raises(ValueError):
            ScaledLattice([[1]], 0)
