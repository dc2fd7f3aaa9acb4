"""Normal forms and kernels over Z_k, validated against exhaustive oracles."""
import random

import pytest

from conftest import all_vectors, random_matrix, scramble_rows, span_set
from zkframe.ring_linalg import (
    K_MAX,
    ZkMatrix,
    howell_form,
    kernel_mod_k,
    mat_mul_mod_k,
    row_span_cardinality,
    zk_matrix,
)


def H(k, rows, cols=None):
    return howell_form(zk_matrix(k, rows, cols=cols))


class TestZkMatrix:
    def test_validation(self):
        with pytest.raises(ValueError):
            ZkMatrix(1, 2, ((0, 0),))
        with pytest.raises(ValueError):
            ZkMatrix(K_MAX + 1, 1, ((0,),))
        with pytest.raises(ValueError):
            ZkMatrix(4, 2, ((0, 4),))
        with pytest.raises(ValueError):
            ZkMatrix(4, 2, ((0, 1), (0,)))

    def test_zk_matrix_reduces(self):
        m = zk_matrix(4, [[5, -1]])
        assert m.entries == ((1, 3),)
        assert m.rows == 1 and m.cols == 2

    def test_value_equality(self):
        assert zk_matrix(4, [[1, 2]]) == zk_matrix(4, [[1, 2]])
        assert zk_matrix(4, [[1, 2]]) != zk_matrix(8, [[1, 2]])


class TestHowellForm:
    def test_identity_fixed_point(self):
        m = zk_matrix(4, [[1, 0], [0, 1]])
        assert howell_form(m) == m

    def test_diagonal_two_fixed_point(self):
        m = zk_matrix(4, [[2, 0], [0, 2]])
        assert howell_form(m) == m

    def test_example_against_span_oracle(self):
        got = H(4, [[1, 3], [2, 2]])
        assert span_set(4, got.entries, 2) == span_set(4, [[1, 3], [2, 2]], 2)
        assert howell_form(got) == got

    def test_span_idempotence_canonicity(self, rng):
        for _ in range(150):
            k = rng.choice([2, 3, 4, 5, 6, 8, 9])
            n = rng.randrange(1, 5)
            rows = random_matrix(rng, k, rng.randrange(0, 4), n)
            h = H(k, rows, cols=n)
            assert span_set(k, h.entries, n) == span_set(k, rows, n)
            assert howell_form(h) == h
            scrambled = scramble_rows(rng, k, rows, n)
            assert H(k, scrambled, cols=n) == h

    def test_zero_rows_stripped(self):
        assert H(6, [[0, 0], [0, 0]], cols=2).entries == ()

    def test_span_prefix_property_of_columns(self, rng):
        # the padded first-j columns of the Howell form equal the padded
        # Howell form of the span projected onto those j columns; the
        # canonicalizer's pruning relies on exactly this
        for _ in range(120):
            k = rng.choice([2, 4, 6, 8, 9])
            n = rng.randrange(2, 5)
            rows = random_matrix(rng, k, rng.randrange(1, 4), n)
            full = H(k, rows, cols=n).entries
            for j in range(1, n):
                proj = [r[:j] for r in rows]
                sub = H(k, proj, cols=j).entries
                lhs = tuple(
                    full[i][c] if i < len(full) else 0
                    for c in range(j)
                    for i in range(n)
                )
                rhs = tuple(
                    sub[i][c] if i < len(sub) else 0
                    for c in range(j)
                    for i in range(n)
                )
                assert lhs == rhs


class TestKernel:
    def test_zero_map(self):
        assert kernel_mod_k(zk_matrix(4, [[0, 0]])).entries == ((1, 0), (0, 1))

    def test_diagonal_two(self):
        m = zk_matrix(4, [[2, 0], [0, 2]])
        got = kernel_mod_k(m)
        assert got == m
        members = {
            v
            for v in all_vectors(4, 2)
            if all(sum(a * b for a, b in zip(v, r)) % 4 == 0 for r in m.entries)
        }
        assert span_set(4, got.entries, 2) == members

    def test_repetition(self):
        assert kernel_mod_k(zk_matrix(2, [[1, 1]])).entries == ((1, 1),)

    def test_exhaustive_membership(self, rng):
        for _ in range(120):
            k = rng.choice([2, 3, 4, 6, 8, 9])
            n = rng.randrange(1, 4)
            rows = random_matrix(rng, k, rng.randrange(0, 3), n)
            m = zk_matrix(k, rows, cols=n)
            ker = kernel_mod_k(m)
            members = {
                v
                for v in all_vectors(k, n)
                if all(
                    sum(a * b for a, b in zip(v, r)) % k == 0 for r in m.entries
                )
            }
            assert span_set(k, ker.entries, n) == members
            assert howell_form(ker) == ker


class TestCardinality:
    def test_identity(self):
        assert row_span_cardinality(zk_matrix(7, [[1, 0], [0, 1]])) == 49

    def test_diagonal_two(self):
        assert row_span_cardinality(zk_matrix(4, [[2, 0], [0, 2]])) == 4

    def test_single(self):
        assert row_span_cardinality(zk_matrix(4, [[2]])) == 2

    def test_against_exhaustive(self, rng):
        for _ in range(100):
            k = rng.choice([2, 4, 6, 9])
            n = rng.randrange(1, 4)
            rows = random_matrix(rng, k, rng.randrange(0, 3), n)
            assert row_span_cardinality(H(k, rows, cols=n)) == len(
                span_set(k, rows, n)
            )


class TestMatMul:
    def test_identity(self):
        a = zk_matrix(4, [[1, 2], [3, 0]])
        i2 = zk_matrix(4, [[1, 0], [0, 1]])
        assert mat_mul_mod_k(a, i2) == a

    def test_two_times_two(self):
        assert mat_mul_mod_k(zk_matrix(4, [[2]]), zk_matrix(4, [[2]])).entries == ((0,),)

    def test_inner_product_shape(self):
        got = mat_mul_mod_k(zk_matrix(4, [[1, 1]]), zk_matrix(4, [[1], [3]]))
        assert got.entries == ((0,),)

    def test_mismatch_errors(self):
        with pytest.raises(ValueError):
            mat_mul_mod_k(zk_matrix(4, [[1, 1]]), zk_matrix(4, [[1, 1]]))
        with pytest.raises(ValueError):
            mat_mul_mod_k(zk_matrix(4, [[1]]), zk_matrix(6, [[1]]))
