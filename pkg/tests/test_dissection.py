from itertools import combinations
from math import cos, pi, sin

from hypothesis import given, strategies as st
import numpy as np
import pytest

from interval_posets import load_fixture
from interval_posets.errors import HasCrossings, InvalidDissection, TooLarge
from interval_posets.dissection import (Dissection, all_diagonals, all_dissections, crosses,
                                        edge_present, faces, framed_subset_ranks,
                                        has_quadrilateral, has_triangle,
                                        intersectional_components, is_diagonally_framed,
                                        is_noncrossing, noncrossing_dissections,
                                        support_induces_complete)


def geometric_cross(m, d1, d2):
    # segment intersection between chords of the regular m-gon, interior points only
    def pt(k):
        t = 2 * pi * (k - 1) / m
        return cos(t), sin(t)

    if set(d1) & set(d2):
        return False
    p1, p2, q1, q2 = pt(d1[0]), pt(d1[1]), pt(d2[0]), pt(d2[1])

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    return (orient(p1, p2, q1) * orient(p1, p2, q2) < 0
            and orient(q1, q2, p1) * orient(q1, q2, p2) < 0)


def noncrossing_subset_count(m):
    diags = all_diagonals(m)
    ranks = np.arange(1 << len(diags), dtype=np.uint32)
    keep = np.ones(ranks.shape, dtype=bool)
    for (i, x), (j, y) in combinations(enumerate(diags), 2):
        if geometric_cross(m, x, y):
            pair = (1 << i) | (1 << j)
            keep &= (ranks & pair) != pair
    return int(keep.sum())


def test_crosses_examples():
    assert crosses((1, 3), (2, 4))
    assert crosses((1, 7), (6, 8))
    assert not crosses((1, 5), (1, 3))
    assert not crosses((1, 3), (3, 5))
    assert not crosses((1, 8), (2, 7))


@pytest.mark.parametrize("m", [4, 5, 6, 7, 9])
def test_crosses_matches_geometry(m):
    chords = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    for x, y in combinations(chords, 2):
        assert crosses(x, y) == geometric_cross(m, x, y) == crosses(y, x)
    assert not any(crosses(x, x) for x in chords)


def test_dissection_normalizes_and_rejects():
    assert Dissection(6, [(4, 1)]).diagonals == {(1, 4)}
    for bad in [(1, 2), (1, 6), (0, 3), (2, 7)]:
        with pytest.raises(InvalidDissection):
            Dissection(6, [bad])


def test_edge_present():
    D = Dissection(10, [(1, 5)])
    assert edge_present(D, 1, 5)
    assert edge_present(D, 9, 10)
    assert edge_present(D, 1, 10)
    assert not edge_present(D, 2, 5)


def test_framed_examples():
    assert not is_diagonally_framed(Dissection(8, [(1, 5), (3, 7)]))
    assert is_diagonally_framed(Dissection(8, [(1, 5), (3, 7), (1, 3), (3, 5), (5, 7), (1, 7)]))
    assert is_diagonally_framed(Dissection(8, [(1, 3), (3, 5), (1, 5)]))
    assert is_diagonally_framed(Dissection(4, [(1, 3), (2, 4)]))


def test_quadrilateral_examples():
    assert has_quadrilateral(Dissection(4))
    assert not has_quadrilateral(Dissection(4, [(1, 3)]))
    assert not has_quadrilateral(Dissection(4, [(2, 4)]))
    assert not has_quadrilateral(load_fixture("tengon_dissection"))
    assert not has_quadrilateral(Dissection(5))
    assert has_quadrilateral(Dissection(6, [(1, 4)]))


def test_quadrilateral_with_entering_diagonal():
    D = Dissection(8, [(1, 3), (3, 5), (5, 7), (1, 7)])
    assert has_quadrilateral(D)
    # (2,4) crosses the side (1,3) and enters {1,3,5,7}
    assert not has_quadrilateral(Dissection(8, [(1, 3), (3, 5), (5, 7), (1, 7), (2, 4)]))


def test_triangle_examples():
    assert has_triangle(Dissection(5, [(1, 3)]))
    assert not has_triangle(Dissection(8))
    assert not has_triangle(Dissection(8, [(2, 6)]))
    assert has_triangle(Dissection(3))


def test_components_octagon_example():
    D = load_fixture("c8_components_dissection")
    comps = intersectional_components(D)
    assert {c.diagonals for c in comps} == {((1, 7), (6, 8)), ((1, 5),), ((1, 3), (2, 4), (3, 5))}
    first = next(c for c in comps if (1, 7) in c.diagonals)
    assert first.support == (1, 6, 7, 8)
    assert intersectional_components(Dissection(8)) == []


def test_support_complete_examples():
    framed = Dissection(8, [(1, 5), (3, 7), (1, 3), (3, 5), (5, 7), (1, 7)])
    comps = intersectional_components(framed)
    big = next(c for c in comps if (1, 5) in c.diagonals)
    assert big.support == (1, 3, 5, 7)
    assert support_induces_complete(framed, big)
    D = Dissection(8, [(1, 7), (6, 8)])
    assert not support_induces_complete(D, intersectional_components(D)[0])
    D = Dissection(8, [(2, 6)])
    assert support_induces_complete(D, intersectional_components(D)[0])


@pytest.mark.parametrize("m", range(4, 9))
def test_framed_components_are_complete(m):
    for r in framed_subset_ranks(m, quad_free=False):
        D = Dissection(m, [d for k, d in enumerate(all_diagonals(m)) if int(r) >> k & 1])
        for C in intersectional_components(D):
            assert support_induces_complete(D, C)


def test_all_dissections_small():
    assert len(list(all_dissections(4))) == 4
    good = list(all_dissections(4, lambda D: is_diagonally_framed(D) and not has_quadrilateral(D)))
    assert {D.diagonals for D in good} == {frozenset({(1, 3)}), frozenset({(2, 4)}),
                                           frozenset({(1, 3), (2, 4)})}
    assert len(list(all_dissections(5, start=3, stop=7))) == 4
    with pytest.raises(TooLarge):
        next(all_dissections(9))


@pytest.mark.parametrize("m", range(3, 8))
@pytest.mark.parametrize("quad_free", [True, False])
def test_vectorized_scan_matches_scalar(m, quad_free):
    def ok(D):
        return is_diagonally_framed(D) and (not quad_free or not has_quadrilateral(D))

    scalar = [r for r, D in enumerate(all_dissections(m)) if ok(D)]
    assert [int(r) for r in framed_subset_ranks(m, quad_free)] == scalar


def test_noncrossing_small():
    assert {D.diagonals for D in noncrossing_dissections(4)} == {
        frozenset(), frozenset({(1, 3)}), frozenset({(2, 4)})}
    assert sum(1 for _ in noncrossing_dissections(5)) == 11
    assert [D.diagonals for D in noncrossing_dissections(3)] == [frozenset()]


@pytest.mark.parametrize("m", range(3, 9))
def test_noncrossing_generator_matches_subset_scan(m):
    gen = list(noncrossing_dissections(m))
    assert len({D.diagonals for D in gen}) == len(gen)
    assert all(is_noncrossing(D) for D in gen)
    assert len(gen) == noncrossing_subset_count(m)


def test_noncrossing_face_size_restriction():
    quadfree = {D.diagonals for D in noncrossing_dissections(8, lambda D: not has_quadrilateral(D))}
    pruned = {D.diagonals for D in noncrossing_dissections(8, face_sizes=[3] + list(range(5, 9)))}
    assert quadfree == pruned


def test_faces():
    assert sorted(faces(Dissection(4, [(1, 3)]))) == [[1, 2, 3], [1, 3, 4]]
    assert faces(Dissection(5)) == [[1, 2, 3, 4, 5]]
    # the diagonals named in the separable 12-gon walk-through
    D = Dissection(12, [(1, 10), (1, 8), (1, 4), (4, 6), (6, 8)])
    fs = faces(D)
    assert fs[0] == [1, 10, 11, 12]
    assert [1, 8, 9, 10] in fs and [1, 4, 6, 8] in fs
    with pytest.raises(HasCrossings):
        faces(Dissection(4, [(1, 3), (2, 4)]))


NONCROSSING = {m: list(noncrossing_dissections(m)) for m in range(3, 9)}


@given(st.integers(3, 8).flatmap(lambda m: st.sampled_from(NONCROSSING[m])))
def test_faces_partition_edges(D):
    fs = faces(D)
    assert len(fs) == len(D.diagonals) + 1
    count = {}
    for f in fs:
        for e in zip(f, f[1:] + f[:1]):
            e = tuple(sorted(e))
            count[e] = count.get(e, 0) + 1
    for e in D.edges():
        assert count[e] == (2 if e in D.diagonals else 1)


def test_json_round_trip():
    D = load_fixture("tengon_dissection")
    assert Dissection.from_json(D.dumps()) == D
    assert D.to_json() == {"m": 10, "diagonals": [[1, 5], [1, 7], [1, 9], [5, 7], [5, 9], [7, 9]]}
