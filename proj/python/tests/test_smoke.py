import json

import numpy as np
import pytest

import newstein


def test_algebra_shapes():
    assert newstein.dimension("newstein") == 51
    assert newstein.dimension("newstein2") == 41
    assert newstein.dimension("newstein-ext:7") == 52
    assert len(newstein.labels("h3")) == 3
    assert newstein.labels("newstein")[:3] == ["L12", "L13", "L14"]


def test_jacobi():
    assert newstein.jacobi_violations("newstein") == 0
    assert newstein.jacobi_violations("sl2") == 0


def test_export_is_json():
    doc = json.loads(newstein.export_json("sl2"))
    assert doc["dimension"] == 3
    assert list(doc)[:3] == ["name", "dimension", "labels"]


def test_small_cohomology():
    assert newstein.cohomology("h3", "trivial", 1)["betti"] == 2
    assert newstein.cohomology("h3", "trivial", 2)["betti"] == 2
    assert newstein.cohomology("sl2", "adjoint", 1)["betti"] == 0


def test_adjoint_invariants_modular():
    r = newstein.cohomology("newstein", "adjoint", 0, modular=True)
    assert r["betti"] == 1
    assert r["method"].startswith("modular")


def test_classify_rotation():
    c = newstein.classify(np.array([[0.0, 2.0], [-2.0, 0.0]]))
    assert c["case"] == 7
    assert c["rescale"] == pytest.approx(2.0)


def test_group_law():
    a = newstein.random_group_element(1)
    b = newstein.random_group_element(2)
    c = newstein.random_group_element(3)
    left = newstein.compose(newstein.compose(a, b), c)
    right = newstein.compose(a, newstein.compose(b, c))
    assert newstein.deviation(left, right) < 1e-9
    e = newstein.compose(a, newstein.inverse(a))
    assert newstein.deviation(e, newstein.identity_element()) < 1e-9


def test_vector_rep_is_lorentz():
    a = newstein.random_group_element(4)
    m = newstein.vector_rep(a.lam)
    g = np.diag([1.0, 1.0, 1.0, -1.0])
    assert np.allclose(m.T @ g @ m, g, atol=1e-10)


def test_spectrum_ground_level():
    levels = newstein.spectrum(ell=-3.0, cutoff=8)
    assert levels[0][0] == pytest.approx(0.0, abs=1e-12)
    assert [mult for _, mult in levels[:4]] == [1, 3, 6, 10]


def test_invalid_parameters_raise():
    with pytest.raises(ValueError):
        newstein.spectrum(m0=-1.0)
    with pytest.raises(ValueError):
        newstein.dimension("nope")


def test_fast_criterion():
    r = newstein.run_criterion(15)
    assert r["status"] == "match"
    assert r["claim"] == "small-algebras"
