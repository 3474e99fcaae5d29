import math

import numpy as np
import pytest

import gkw


def test_explicit_soliton_residual():
    s = gkw.explicit_soliton(2)
    assert s["residual"] < 1e-7
    assert s["values"].shape == s["x"].shape
    assert s["params"]["c"] == pytest.approx(gkw.explicit_speed(2))


def test_index_p1():
    r = gkw.index(1)
    assert r["j_half"] == pytest.approx(-10.0787, rel=0.02)
    assert isinstance(r["rho"], np.ndarray)


def test_spectrum_and_albert():
    s = gkw.spectrum(1, 3, 512)
    assert s["negative_count"] == 1
    a = gkw.albert(3)
    assert a["positivity_ok"] and a["logconcavity_ok"]
    assert a["log_curvature_at_1"] == pytest.approx(-0.926, abs=1e-4)


def test_groundstate_constraint():
    g = gkw.groundstate(1, 0.01, 512)
    assert g["k_p"] == pytest.approx(g["beta"], rel=1e-8)
    assert 1.0 <= g["alpha"] <= 1.05
    assert gkw.beta_p(1) == pytest.approx(9.6)


def test_conserved_and_orbital_distance():
    s = gkw.gkdv_soliton(1.0, 1.0)
    energy, mass = gkw.conserved(s["values"], s["half_length"], 1.0, 1.0, 0.0)
    assert mass == pytest.approx(12.0, rel=1e-10)
    d, z = gkw.orbital_distance(s["values"], s["values"], s["half_length"])
    assert d < 1e-10 and abs(z) < 1e-10


def test_evolve_short():
    t = gkw.evolve(1, horizon=2.0)
    assert t["orbital_distances"][0] == pytest.approx(1e-3, abs=1e-10)
    assert not t["aborted"]


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        gkw.groundstate(4, 0.01)
    with pytest.raises(ValueError):
        gkw.index(1, "nope")
    assert math.isfinite(gkw.linear_decay_rate(1.0, 0.1))
