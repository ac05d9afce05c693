import random

import pytest
from hypothesis import given, settings

from strategies import connected_multigraphs
from zonoharm.arrangement import (
    LatticePointSet,
    VectorArrangement,
    contraction,
    contraction_data,
    deletion,
    enumerate_cocircuits,
    interior_lattice_points,
    is_totally_unimodular,
    loops_and_coloops,
)
from zonoharm.errors import IsColoopError, IsLoopError, SizeExceededError
from zonoharm.graphs import cographical_arrangement, tutte_of_arrangement
from zonoharm.linalg import Mat, rank


def arr(rank_, cols, labels=None, tu=None):
    labels = tuple(labels) if labels else tuple(f"a{i+1}" for i in range(len(cols)))
    return VectorArrangement(rank_, labels, Mat.from_cols(cols, rows=rank_), tu=tu)


def cycle_arrangement(k):
    return arr(1, [(1,)] * k, tu=True)


HOUSE = [(1, 0), (1, 0), (1, 0), (1, 1), (0, 1), (0, 1)]


class TestTotallyUnimodular:
    def test_house(self, house_arrangement):
        assert is_totally_unimodular(house_arrangement)

    def test_single_column_two(self):
        assert not is_totally_unimodular(arr(1, [(2,)]))

    def test_identity_columns(self):
        assert is_totally_unimodular(arr(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))

    def test_size_cap(self):
        with pytest.raises(SizeExceededError):
            is_totally_unimodular(arr(1, [(1,)] * 13))

    def test_spanning_required(self):
        with pytest.raises(ValueError):
            arr(2, [(1, 0), (2, 0)])


class TestLoopsColoops:
    def test_house(self, house_arrangement):
        assert loops_and_coloops(house_arrangement) == ((), ())

    def test_mixed(self):
        loops, coloops = loops_and_coloops(arr(1, [(1,), (0,)]))
        assert loops == ("a2",)
        assert coloops == ("a1",)

    def test_cycle(self):
        assert loops_and_coloops(cycle_arrangement(4)) == ((), ())


class TestDeletion:
    def test_cycle(self):
        va = deletion(cycle_arrangement(3), "a1")
        assert va.size == 2 and va.lattice_rank == 1

    def test_house_keeps_rank(self, house_arrangement):
        va = deletion(house_arrangement, "e4")
        assert va.columns.cols == 5
        assert rank(va.columns) == 2

    def test_two_column_rank_one(self):
        va = deletion(arr(1, [(1,), (1,)]), "a2")
        assert va.ground == ("a1",)

    def test_coloop_rejected(self):
        with pytest.raises(IsColoopError):
            deletion(arr(1, [(1,), (0,)]), "a1")


class TestContraction:
    def test_cycle_gives_rank_zero(self):
        va = contraction(cycle_arrangement(4), "a2")
        assert va.lattice_rank == 0
        assert va.size == 3
        assert va.columns.data == ()
        loops, _ = loops_and_coloops(va)
        assert loops == va.ground

    def test_basis_vector_drops_coordinate(self):
        va = arr(2, [(1, 0), (0, 1), (1, 1)])
        out = contraction(va, "a1")
        assert out.columns.col_list() == [[1], [1]]

    def test_house_element_four(self, house_arrangement):
        out, transform = contraction_data(house_arrangement, "e4")
        assert out.lattice_rank == 1 and out.size == 5
        # point-count additivity: 6 interior points split 2 + 4
        pts = interior_lattice_points(house_arrangement)
        pts_del = interior_lattice_points(deletion(house_arrangement, "e4"))
        pts_con = interior_lattice_points(out)
        assert (len(pts), len(pts_del), len(pts_con)) == (6, 2, 4)
        leftover = [p for p in pts.points if p not in pts_del]
        images = {tuple(transform.matvec(z)[1:]) for z in leftover}
        assert images == set(pts_con.points)

    def test_loop_rejected(self):
        with pytest.raises(IsLoopError):
            contraction(arr(1, [(1,), (0,)]), "a2")


class TestCocircuits:
    def test_cycle(self):
        (c,) = enumerate_cocircuits(cycle_arrangement(5))
        assert c.covector == (1,)
        assert (c.d_plus, c.d_minus) == (5, 0)

    def test_house(self, house_arrangement):
        cocs = enumerate_cocircuits(house_arrangement)
        table = {c.covector: (c.d_plus, c.d_minus) for c in cocs}
        assert table == {(0, 1): (3, 0), (1, 0): (4, 0), (1, -1): (3, 2)}

    def test_rank_one_single_element(self):
        (c,) = enumerate_cocircuits(arr(1, [(1,)]))
        assert c.degree == 1

    def test_values_in_range(self, house_arrangement):
        for c in enumerate_cocircuits(house_arrangement):
            assert set(c.values) <= {-1, 0, 1}

    def test_non_tu_detected_at_enumeration(self):
        from zonoharm.errors import NotTotallyUnimodularError

        with pytest.raises(NotTotallyUnimodularError):
            enumerate_cocircuits(arr(1, [(2,)]))


class TestInteriorPoints:
    def test_house(self, house_arrangement):
        pts = interior_lattice_points(house_arrangement)
        assert pts.points == tuple(sorted((a, b) for a in (1, 2, 3) for b in (1, 2)))

    def test_cycle(self):
        pts = interior_lattice_points(cycle_arrangement(6))
        assert pts.points == tuple((z,) for z in range(1, 6))

    def test_coloop_empty(self):
        pts = interior_lattice_points(arr(2, [(1, 0), (0, 1), (1, 1)]))
        # a1 and a2 are not coloops here; build one that has a coloop
        va = arr(2, [(1, 0), (0, 1)])
        assert interior_lattice_points(va).points == ()
        assert len(pts) > 0

    def test_rank_zero_single_point(self):
        va = VectorArrangement(0, ("a1", "a2"), Mat.zero(0, 2), tu=True)
        assert interior_lattice_points(va).points == ((),)


def _relabeled(va, perm):
    cols = [va.columns.col(j) for j in perm]
    return VectorArrangement(
        va.lattice_rank,
        tuple(va.ground[j] for j in perm),
        Mat.from_cols(cols, rows=va.lattice_rank),
        tu=va.tu,
    )


class TestProperties:
    @given(connected_multigraphs(max_edges=6))
    @settings(max_examples=40)
    def test_point_count_is_tutte_at_0_1(self, g):
        va = cographical_arrangement(g)
        pts = interior_lattice_points(va)
        assert len(pts) == tutte_of_arrangement(va).eval_at(0, 1)

    @given(connected_multigraphs(max_edges=6))
    @settings(max_examples=30)
    def test_deletion_contraction_point_bijection(self, g):
        va = cographical_arrangement(g)
        loops, coloops = loops_and_coloops(va)
        pts = interior_lattice_points(va)
        for a in va.ground:
            if a in loops or a in coloops:
                continue
            va_del = deletion(va, a)
            va_con, transform = contraction_data(va, a)
            pts_del = interior_lattice_points(va_del)
            pts_con = interior_lattice_points(va_con)
            assert all(p in pts for p in pts_del.points)
            leftover = [p for p in pts.points if p not in pts_del]
            images = [tuple(transform.matvec(z)[1:]) for z in leftover]
            assert len(images) == len(set(images))
            assert set(images) == set(pts_con.points)

    @given(connected_multigraphs(max_edges=6))
    @settings(max_examples=25)
    def test_cocircuits_invariant_under_relabeling(self, g):
        va = cographical_arrangement(g)
        perm = list(range(va.size))
        random.Random(7).shuffle(perm)
        before = {(c.covector, c.d_plus, c.d_minus) for c in enumerate_cocircuits(va)}
        after = {
            (c.covector, c.d_plus, c.d_minus)
            for c in enumerate_cocircuits(_relabeled(va, perm))
        }
        assert before == after

    def test_deletion_contraction_commute(self, house_arrangement):
        va = house_arrangement
        one = contraction(deletion(va, "e1"), "e4")
        other = deletion(contraction(va, "e4"), "e1")
        assert one.ground == other.ground
        assert one.columns == other.columns

    def test_points_sorted_lexicographically(self, house_arrangement):
        pts = interior_lattice_points(house_arrangement).points
        assert list(pts) == sorted(pts)

    def test_latticepointset_sorts(self):
        s = LatticePointSet(((2, 1), (1, 2), (1, 1)))
        assert s.points == ((1, 1), (1, 2), (2, 1))
