"""Frame enumeration, projection, and the explicit 4x4 frame constructors."""
import pytest

from zkframe.codes import code_from_rows, is_self_dual
from zkframe.equivalence import canonical_form
from zkframe.frames import (
    Frame,
    FrameError,
    covering_frames,
    enumerate_frames,
    frame_f9,
    make_frame,
    n_condition,
    od_frame_M,
    od_frame_N,
    od_matrix_m,
    od_matrix_n,
    project_frame,
    sign_normalize,
)
from zkframe.lattices import LatticeClass, ZN, construction_a, identify_class, standard_lattice


def zn(n):
    return standard_lattice(LatticeClass(ZN, n))


class TestSignNormalize:
    def test_flips_leading_negative(self):
        assert sign_normalize((-1, 2)) == (1, -2)
        assert sign_normalize((0, -3, 1)) == (0, 3, -1)
        assert sign_normalize((2, -5)) == (2, -5)
        assert sign_normalize((0, 0)) == (0, 0)


class TestEnumerate:
    def test_square_lattice_two_frame(self):
        got = enumerate_frames(zn(2), 2)
        assert got == [Frame(2, 2, ((1, -1), (1, 1)))]

    def test_no_three_frame_on_a_line(self):
        assert enumerate_frames(zn(1), 3) == []

    def test_line_four_frame(self):
        assert enumerate_frames(zn(1), 4) == [Frame(4, 1, ((2,),))]

    def test_f21_is_enumerated(self):
        f = make_frame(
            zn(4), 21, [(4, 1, 0, 2), (0, -4, 1, 2), (1, 0, 4, -2), (-2, 2, 2, 3)]
        )
        assert f in enumerate_frames(zn(4), 21)

    def test_validation(self):
        with pytest.raises(ValueError):
            enumerate_frames(zn(2), 1)
        from zkframe.lattices import ScaledLattice

        with pytest.raises(ValueError):
            enumerate_frames(ScaledLattice([[2]], 2), 4)

    def test_deterministic(self):
        assert enumerate_frames(zn(4), 9) == enumerate_frames(zn(4), 9)


class TestMakeFrame:
    def test_wrong_count(self):
        with pytest.raises(FrameError):
            make_frame(zn(2), 2, [(1, 1)])

    def test_wrong_norm(self):
        with pytest.raises(FrameError):
            make_frame(zn(2), 2, [(1, 0), (0, 1)])

    def test_not_orthogonal(self):
        with pytest.raises(FrameError):
            make_frame(zn(2), 2, [(1, 1), (1, 1)])

    def test_not_a_member(self):
        e8 = standard_lattice(LatticeClass("e8", 8))
        v = (2, 0, 0, 0, 0, 0, 0, 0)
        assert not e8.contains(v)
        with pytest.raises(FrameError):
            make_frame(e8, 1, [v] * 8)

    def test_canonical_ordering(self):
        a = make_frame(zn(2), 2, [(1, 1), (1, -1)])
        b = make_frame(zn(2), 2, [(-1, 1), (1, 1)])
        assert a == b


class TestProject:
    def test_line_mod_four(self):
        f = make_frame(zn(1), 4, [(2,)])
        assert project_frame(zn(1), f) == code_from_rows(4, 1, [[2]])

    def test_square_mod_two(self):
        f = make_frame(zn(2), 2, [(1, 1), (1, -1)])
        assert project_frame(zn(2), f) == code_from_rows(2, 2, [[1, 1]])

    def test_projection_is_self_dual_and_round_trips(self):
        l = zn(4)
        for k in (4, 9, 16):
            for f in enumerate_frames(l, k)[:20]:
                c = project_frame(l, f)
                assert is_self_dual(c)
                assert identify_class(construction_a(c)) == LatticeClass(ZN, 4)

    def test_frame_outside_lattice(self):
        e8 = standard_lattice(LatticeClass("e8", 8))
        f = make_frame(zn(8), 4, [tuple(2 if i == j else 0 for j in range(8)) for i in range(8)])
        with pytest.raises(FrameError):
            project_frame(e8, f)


class TestCovering:
    @pytest.mark.parametrize("k", [4, 9])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_covers_all_code_classes(self, k, n):
        l = zn(n)
        full = {
            canonical_form(project_frame(l, f)).gen.entries
            for f in enumerate_frames(l, k)
        }
        cover = {
            canonical_form(project_frame(l, f)).gen.entries
            for f in covering_frames(l, k)
        }
        assert cover == full

    def test_subset_of_full_enumeration(self):
        l = zn(4)
        full = set(enumerate_frames(l, 9))
        assert set(covering_frames(l, 9)) <= full

    def test_deterministic(self):
        l = zn(4)
        assert list(covering_frames(l, 16)) == list(covering_frames(l, 16))


class TestODMatrices:
    def test_m_orthogonality_identity(self, rng):
        for _ in range(200):
            x = tuple(rng.randrange(-9, 10) for _ in range(4))
            rows = od_matrix_m(x).rows
            s = sum(v * v for v in x)
            for i in range(4):
                for j in range(4):
                    dot = sum(rows[i][t] * rows[j][t] for t in range(4))
                    assert dot == (s if i == j else 0)

    def test_n_orthogonality_requires_condition(self, rng):
        seen_bad = 0
        for _ in range(200):
            x = tuple(rng.randrange(-9, 10) for _ in range(4))
            rows = od_matrix_n(x).rows
            off = [
                sum(rows[i][t] * rows[j][t] for t in range(4))
                for i in range(4)
                for j in range(4)
                if i != j
            ]
            if n_condition(x) == 0:
                assert all(d == 0 for d in off)
            else:
                assert any(d != 0 for d in off)
                seen_bad += 1
        assert seen_bad > 0

    def test_n_condition_values(self):
        assert n_condition((3, 1, 2, -1)) == 0
        assert n_condition((1, 1, 1, -1)) == -2


class TestODFrames:
    def test_m_square(self):
        f = od_frame_M((3, 0, 0, 0), 9)
        assert f.k == 9 and f.n == 4
        assert f in enumerate_frames(zn(4), 9)

    def test_m_all_ones(self):
        f = od_frame_M((1, 1, 1, 1), 4)
        assert f.k == 4

    def test_m_fifteen(self):
        f = od_frame_M((3, 2, 1, 1), 15)
        assert f.k == 15

    def test_m_sum_mismatch(self):
        with pytest.raises(ValueError):
            od_frame_M((1, 1, 1, 1), 5)

    def test_n_valid(self):
        f = od_frame_N((3, 1, 2, -1), 15)
        assert f.k == 15

    def test_n_condition_violation(self):
        with pytest.raises(ValueError):
            od_frame_N((1, 1, 1, -1), 4)

    def test_f9_inner_products(self):
        f = frame_f9()
        assert f.k == 9 and f.n == 4
        l = zn(4)
        vs = f.vectors
        for i in range(4):
            for j in range(4):
                assert l.inner(vs[i], vs[j]) == (9 if i == j else 0)
