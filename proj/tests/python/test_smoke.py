import json
import math

import numpy as np
import pytest

import rqit


def test_bell_entropies():
    rho = rqit.bell_density("psi-")
    assert rho.dim == 4
    assert rqit.von_neumann_entropy(rho) == pytest.approx(0.0, abs=1e-10)
    assert rqit.mutual_vn(rho) == pytest.approx(2.0, abs=1e-10)
    assert rqit.conditional_vn(rho) == pytest.approx(-1.0, abs=1e-10)
    assert rqit.conditional_amplitude_spectrum(rho)[0] == pytest.approx(2.0, abs=1e-10)
    marg = rqit.partial_trace(rho, [0])
    assert np.allclose(marg.matrix, 0.5 * np.eye(2))


def test_classical_entropies():
    joint = np.array([[0.4, 0.1], [0.1, 0.4]])
    mi = rqit.mutual_information(joint)
    assert mi == pytest.approx(1.0 - rqit.conditional_entropy(joint), abs=1e-12)
    assert rqit.shannon_entropy(np.full((1, 8), 0.125)) == pytest.approx(3.0)


def test_dimer_and_black_hole():
    obs = rqit.dimer_observables(J=1.0, beta=0.0)
    assert obs["Z"] == pytest.approx(4.0)
    assert obs["S_mutual_bits"] == pytest.approx(0.0, abs=1e-12)
    assert rqit.dimer_observables(1.0, 50.0)["S_mutual_bits"] == pytest.approx(2.0, abs=1e-6)
    assert rqit.bh_entropy(1.0) == pytest.approx(4 * math.pi)
    assert rqit.hawking_temperature(2.0) == pytest.approx(1 / (16 * math.pi))
    _, _, ratio = rqit.evaporation_step(1.0, 1e-6)
    assert ratio == pytest.approx(4 / 3)


def test_channel_and_temperature():
    assert rqit.awng_capacity(1.0, 1.0) == pytest.approx(1.0)
    assert rqit.infinite_bandwidth_capacity(2.0) == pytest.approx(2.0 / math.log(2))
    assert rqit.doppler_factor(0.6, 0.0) == pytest.approx(2.0)
    assert rqit.moving_temperature(1.0, 0.6, 0.0) == pytest.approx(2.0)


def test_planar_mutual_information():
    value, err, knn = rqit.planar_mutual_information(50000, seed=3)
    assert err > 0
    assert value == pytest.approx(math.log(math.pi / math.e), abs=0.02)
    assert knn == pytest.approx(math.log(math.pi / math.e), abs=0.03)
    boosted, _, _ = rqit.planar_mutual_information(50000, seed=3, beta=0.9)
    assert boosted > value


def test_relativistic_spin():
    w = rqit.wigner_rotation(1.0, np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]))
    assert np.allclose(w @ w.conj().T, np.eye(2), atol=1e-10)
    assert rqit.wootters_concurrence(rqit.bell_density("phi+")) == pytest.approx(1.0)
    assert rqit.boosted_pair_concurrence(1.0, 0.0) == pytest.approx(1.0, abs=1e-9)
    assert rqit.boosted_pair_concurrence(1.0, 3.0) < 1.0
    c_sim = rqit.momentum_entangled_concurrence_simulated(1.0, 2.0)
    c_exact = rqit.momentum_entangled_concurrence_closed_form(1.0, 2.0)
    assert c_sim == pytest.approx(c_exact, abs=2e-3)


def test_protocols():
    t = json.loads(rqit.teleport(0.6, 0.8j, seed=7))
    assert t["fidelity"] == pytest.approx(1.0, abs=1e-12)
    assert t["channel_qubits"] == 1
    s = json.loads(rqit.superdense(1, 0))
    assert s["classical_bits"] == "10"
    assert s["fidelity"] == 1.0


def test_geometric_entropy():
    s = rqit.geometric_entropy(8, 1.0, 1.0, [0, 1, 2])
    s_comp = rqit.geometric_entropy(8, 1.0, 1.0, [3, 4, 5, 6, 7])
    assert s == pytest.approx(s_comp, abs=1e-9)
    assert rqit.renyi_trace(8, 1.0, 1.0, [0, 1, 2], 2) <= 1.0
    sweep = rqit.refinement_sweep([16, 32, 64], 1.0, 1e-3, 0.5)
    assert sweep[0] < sweep[1] < sweep[2]
