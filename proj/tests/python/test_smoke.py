import numpy as np
import pytest

import napoleon


RIGHT = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])


def side_lengths(vertices):
    return np.array(
        [np.linalg.norm(vertices[i] - vertices[(i + 1) % 3]) for i in range(3)]
    )


def test_version_is_exposed():
    assert napoleon.__version__


def test_napoleon_triangle_is_equilateral():
    rng = np.random.default_rng(5)
    for d in (2, 3, 5):
        x = rng.standard_normal((3, d))
        for kind in ("inner", "outer"):
            y = napoleon.napoleon(x, kind)
            assert y.shape == (3, d)
            assert napoleon.equilaterality_residual(y) <= 1e-10
            assert np.allclose(napoleon.centroid(y), napoleon.centroid(x))


def test_torricelli_apexes_are_equidistant():
    apexes = napoleon.torricelli(RIGHT, "outer")
    displacements = np.linalg.norm(apexes - RIGHT, axis=1)
    assert np.allclose(displacements, displacements[0])


def test_iterates_and_double_outer_match():
    x = np.array([[0.3, -0.7], [1.9, 0.4], [-0.2, 1.1]])
    twice = napoleon.napoleon_iter(x, "outer", 2)
    assert np.allclose(twice, napoleon.double_outer_napoleon(x), atol=1e-12)


def test_alignment_is_the_double_outer_transform():
    rng = np.random.default_rng(11)
    x = rng.standard_normal((3, 3))
    res = napoleon.optimal_equilateral_alignment(x)
    assert np.allclose(res.vertices, napoleon.double_outer_napoleon(x), atol=1e-12)
    assert res.branch_k == 1
    assert res.unique
    assert res.inner_objective < res.outer_objective
    assert res.alternate_vertices is None
    assert res.objective == pytest.approx(
        napoleon.alignment_objective(x, res.vertices)
    )

    searched = napoleon.oracle_alignment(x)
    assert searched.objective >= res.objective - 1e-9
    assert searched.objective - res.objective <= 1e-6

    diag = napoleon.kkt_residual(x, res.vertices)
    assert diag.gradient_residual <= 1e-8


def test_collinear_alignment_reports_the_tie():
    flat = np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]])
    res = napoleon.optimal_equilateral_alignment(flat)
    assert not res.unique
    assert res.alternate_vertices is not None
    assert res.inner_objective == pytest.approx(res.outer_objective)


def test_fermat_point_rules():
    obtuse = np.array([[-1.0, 0.0], [1.0, 0.0], [0.0, 0.2]])
    assert napoleon.wide_angle_vertex(obtuse) == 2
    assert np.array_equal(napoleon.fermat_point(obtuse), obtuse[2])

    acute = np.array([[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]])
    assert napoleon.wide_angle_vertex(acute) is None
    direct = napoleon.fermat_point(acute)
    iterated = napoleon.weiszfeld(acute, tol=1e-12, max_iters=50000)
    assert np.linalg.norm(direct - iterated) <= 1e-8


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        napoleon.fermat_point(np.zeros((3, 2)))  # trivial triple
    with pytest.raises(ValueError):
        napoleon.napoleon(np.zeros((2, 2)), "inner")  # not three vertices
    with pytest.raises(ValueError):
        napoleon.napoleon(RIGHT, "sideways")  # unknown kind
    with pytest.raises(ValueError):
        napoleon.kkt_residual(RIGHT, RIGHT)  # candidate not equilateral
    with pytest.raises(RuntimeError):
        napoleon.weiszfeld(acute_needs_many_steps(), tol=1e-15, max_iters=1)


def acute_needs_many_steps():
    return np.array([[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]])
