import math

import numpy as np
import pytest

import broxlab as bx


def test_catalog_values():
    assert bx.builtin("appD_F1_ex1")(np.array([3.0, 2.0])) == 0.5
    assert bx.builtin("example2")(np.array([2.0, 1.0])) == 0.0
    assert bx.builtin("sphere2")(np.zeros(2)) == 0.0
    with pytest.raises(ValueError):
        bx.builtin("nope")


def test_brox_sphere_boundary():
    r = bx.brox(bx.builtin("sphere1"), np.array([5.0]), 1.0)
    assert r.selected[0] == pytest.approx(4.0, abs=1e-9)
    assert r.value == pytest.approx(16.0, abs=1e-8)


def test_brox_exhaustive():
    r = bx.brox(bx.builtin("appD_F1_ex1"), np.array([3.0, 0.0]), 2.0)
    assert list(r.selected) == [3.0, 2.0]


def test_run_bpm_sin_abs():
    f = bx.builtin("example1")
    tr = bx.run_bpm(f, np.array([20.0]), 2 * math.pi)
    assert tr.termination == "reached_optimum"
    assert len(tr) <= 11
    assert abs(tr.iterates[-1][0] - bx.sin_abs_minimizer()) <= 1e-3
    reports = bx.check_trajectory(f, tr, np.array([bx.sin_abs_minimizer()]))
    assert all(r.passed for r in reports)


def test_assumption1_witness():
    rep = bx.check_assumption1(bx.builtin("appD_F1_ex1"), 2.0, np.zeros(2))
    assert rep.verdict == "fail"
    w = rep.witnesses[0]
    assert float(np.dot(w.x - w.u, w.u)) == -4.0


def test_class_checks():
    assert bx.check_aiming(bx.builtin("sphere2"), 2.0, count=200).passed
    assert not bx.check_aiming(bx.builtin("sphere2"), 2.5, count=200).passed
    assert bx.check_F1_nonmonotone_witnesses().passed


def test_geometry():
    g = bx.Geometry(np.diag([4.0, 1.0]))
    assert g.inner(np.array([1.0, 1.0]), np.array([1.0, -1.0])) == 3.0
    assert bx.kappa_bound(g, np.zeros(2), np.array([0.5, 0.0]), 1.0) == 9


def test_suite_subset():
    out = bx.run_suite("c2/")
    assert out["passed"] is True
