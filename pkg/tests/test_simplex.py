import numpy as np
import pytest

from mqshape.errors import DomainError
from mqshape.simplex import (
    NodeSet,
    Simplex,
    barycentric_to_cartesian,
    compositions_colex,
    diameter,
    evenly_spaced_points,
    scale_to_diameter,
    unit_corner_simplex,
)
from mqshape.special import binomial

TRIANGLE = Simplex(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))
INTERVAL = Simplex(np.array([[0.0], [1.0]]))


def recovered_barycentric(simplex, point):
    v = simplex.vertices
    lam = np.linalg.solve((v[1:] - v[0]).T, np.asarray(point) - v[0])
    return np.concatenate([[1.0 - lam.sum()], lam])


class TestBarycentric:
    def test_vertex(self):
        assert barycentric_to_cartesian(INTERVAL, [1.0, 0.0]) == pytest.approx([0.0])

    def test_centroid(self):
        c = barycentric_to_cartesian(TRIANGLE, [1 / 3, 1 / 3, 1 / 3])
        assert c == pytest.approx([1 / 3, 1 / 3])

    def test_convex_combination(self):
        s = Simplex(np.array([[0.0], [2.0]]))
        assert barycentric_to_cartesian(s, [0.25, 0.75]) == pytest.approx([1.5])

    def test_bad_length(self):
        with pytest.raises(DomainError):
            barycentric_to_cartesian(TRIANGLE, [0.5, 0.5])

    def test_bad_sum(self):
        with pytest.raises(DomainError):
            barycentric_to_cartesian(TRIANGLE, [0.5, 0.5, 0.5])


class TestSimplexValidation:
    def test_degenerate_rejected(self):
        with pytest.raises(DomainError):
            Simplex(np.array([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]]))

    def test_wrong_shape_rejected(self):
        with pytest.raises(DomainError):
            Simplex(np.array([[0.0, 0.0], [1.0, 0.0]]))

    def test_vertices_immutable(self):
        with pytest.raises(ValueError):
            TRIANGLE.vertices[0, 0] = 5.0


class TestDiameter:
    def test_unit_interval(self):
        assert diameter(INTERVAL) == pytest.approx(1.0)

    def test_triangle(self):
        assert diameter(TRIANGLE) == pytest.approx(np.sqrt(2.0))

    def test_scaling_roundtrip(self):
        scaled = scale_to_diameter(TRIANGLE, 0.05)
        assert abs(diameter(scaled) - 0.05) <= 1e-12

    def test_bound_schedule_diameter(self):
        # the C = 8 window puts the largest admissible diameter at 1/12
        scaled = scale_to_diameter(unit_corner_simplex(2), 2.0 / 24.0)
        assert abs(diameter(scaled) - 1.0 / 12.0) <= 1e-12

    def test_nonpositive_rejected(self):
        with pytest.raises(DomainError):
            scale_to_diameter(TRIANGLE, 0.0)


class TestLattice:
    def test_triangle_degree_two(self):
        nodes = evenly_spaced_points(TRIANGLE, 2)
        got = {tuple(np.round(p, 12)) for p in nodes.points}
        assert got == {(0, 0), (1, 0), (0, 1), (0.5, 0), (0, 0.5), (0.5, 0.5)}
        assert len(nodes) == 6

    def test_interval_degree_three_order(self):
        nodes = evenly_spaced_points(INTERVAL, 3)
        assert nodes.points[:, 0] == pytest.approx([0.0, 1 / 3, 2 / 3, 1.0])

    def test_degree_one_is_vertices(self):
        for n in (1, 2, 3):
            s = unit_corner_simplex(n)
            nodes = evenly_spaced_points(s, 1)
            got = {tuple(p) for p in np.round(nodes.points, 12)}
            assert got == {tuple(v) for v in np.round(s.vertices, 12)}

    def test_counts_exhaustive(self):
        for n in range(1, 5):
            s = unit_corner_simplex(n)
            for l in range(1, 7):
                assert len(evenly_spaced_points(s, l)) == binomial(n + l, n)

    def test_vertices_always_present(self):
        for n in (1, 2, 3):
            s = unit_corner_simplex(n)
            for l in (2, 4):
                pts = {tuple(p) for p in np.round(evenly_spaced_points(s, l).points, 12)}
                assert {tuple(v) for v in np.round(s.vertices, 12)} <= pts

    def test_recovered_coordinates_valid(self):
        rng_free = evenly_spaced_points(scale_to_diameter(TRIANGLE, 0.3), 5)
        for p in rng_free.points:
            b = recovered_barycentric(rng_free.simplex, p)
            assert b.sum() == pytest.approx(1.0, abs=1e-10)
            assert np.all(b >= -1e-10) and np.all(b <= 1.0 + 1e-10)

    def test_order_stable(self):
        a = evenly_spaced_points(TRIANGLE, 4)
        b = evenly_spaced_points(TRIANGLE, 4)
        assert np.array_equal(a.indices, b.indices)
        assert np.array_equal(a.points, b.points)

    def test_colex_order(self):
        idx = list(compositions_colex(2, 3))
        assert idx == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]

    def test_degree_zero_rejected(self):
        with pytest.raises(DomainError):
            evenly_spaced_points(TRIANGLE, 0)
