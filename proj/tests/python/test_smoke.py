import math

import pytest

import loggas


def test_version():
    assert loggas.__version__ == "0.1.0"


def test_potential_catalog():
    h = loggas.Potential("harmonic")
    assert h.V(1.3) == pytest.approx(1.69)
    assert h.W(1.3) == pytest.approx(1.3)
    assert h.factorization_energy == pytest.approx(1.0)
    with pytest.raises(ValueError):
        loggas.Potential("coulomb", {"l": -1.0})


def test_potential_json_roundtrip():
    c = loggas.Potential("coulomb", {"l": 1.0})
    c2 = loggas.Potential.from_json(c.to_json())
    assert c2.V(2.0) == pytest.approx(c.V(2.0))


def test_equilibrium_matches_roots():
    h = loggas.Potential("harmonic")
    eq = loggas.equilibrium(6, h)
    r = loggas.hermite_roots(6)
    assert max(abs(a - b) for a, b in zip(eq, r)) < 1e-8

    c = loggas.Potential("coulomb", {"l": 0.0})
    eq = loggas.equilibrium(5, c)
    r = loggas.laguerre_roots(1.0, 5)
    assert max(abs(a - b) for a, b in zip(eq, r)) < 1e-8


def test_gradient_drift_identity():
    h = loggas.Potential("harmonic")
    x = [-1.4, -0.2, 0.9, 2.1]
    g = loggas.gas_gradient(x, h)
    d = loggas.drift(x, h)
    assert max(abs(a + b) for a, b in zip(g, d)) < 1e-14


def test_stieltjes():
    assert loggas.stieltjes_identity_check([-1.0, 0.2, 1.3]) < 1e-12


def test_spectrum():
    h = loggas.Potential("harmonic")
    states = loggas.polynomial_spectrum(h, 4)
    assert [s.energy for s in states] == pytest.approx([1, 3, 5, 7, 9])
    assert len(states[3].nodes) == 3


def test_exceptional():
    sol = loggas.solve_exceptional(1.0, 2)
    assert sol.energy == pytest.approx(2 * 1 - 1 + 4 * 2)
    assert sol.coeffs[-1] == pytest.approx(1.0)


def test_sampling_determinism():
    a = loggas.sample_eigenvalues(4, 1, 123)
    b = loggas.sample_eigenvalues(4, 1, 123)
    assert a == b
    assert a == sorted(a)


def test_jpdf_and_wavefunction():
    h = loggas.Potential("harmonic")
    x = [-1.0, 1.0]
    pw = loggas.product_wavefunction(x, h)
    assert pw == pytest.approx(2 * math.exp(-1.0))
    lp = loggas.joint_log_pdf(x, 2, h)
    assert pw * pw / math.exp(lp) == pytest.approx(1.0)


def test_evolve_deterministic():
    h = loggas.Potential("harmonic")
    a = loggas.evolve([-1.0, 1.0], h, beta=1, dt=0.01, steps=50, seed=5)
    b = loggas.evolve([-1.0, 1.0], h, beta=1, dt=0.01, steps=50, seed=5)
    assert a == b
    assert a[0] < a[1]
