"""Evolution amplitudes, probabilities, grids, and fidelity."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spintransfer.dynamics import (
    TransferState,
    density_element,
    evolve,
    evolve_grid,
    fidelity,
    tau_grid,
)
from spintransfer.geometry import coupling_matrix
from spintransfer.hamiltonian import analytic_rectangle_spectrum
from spintransfer.search import System

taus = st.floats(min_value=0.0, max_value=60.0, allow_nan=False)
deltas = st.floats(min_value=0.1, max_value=12.0, allow_nan=False)


def _random_system(rng) -> System:
    kind = rng.choice(["chain2", "rect-perp", "rect-along", "box"])
    if kind == "chain2":
        return System("chain2")
    if kind == "box":
        return System("box", delta1=float(rng.uniform(0.1, 12.0)), delta2=float(rng.uniform(0.1, 12.0)))
    return System(kind, delta=float(rng.uniform(0.1, 12.0)))


def test_tau_grid_shape_and_nesting():
    g = tau_grid(10.0, 0.01)
    assert g.size == 1001
    assert g[0] == 0.0
    assert g[-1] == pytest.approx(10.0, abs=1e-12)
    fine = tau_grid(10.0, 0.005)
    assert np.array_equal(g, fine[::2])


def test_tau_grid_rejects_bad_step():
    with pytest.raises(ValueError):
        tau_grid(10.0, 0.0)
    with pytest.raises(ValueError):
        tau_grid(1.0, 2.0)


def test_identity_at_tau_zero():
    spec = System("box", delta1=2.0, delta2=3.0).spectrum()
    state = evolve(spec, 5, 0.0)
    assert state.probabilities[4] == pytest.approx(1.0, abs=1e-12)
    assert np.abs(state.amplitudes).max() == pytest.approx(1.0, abs=1e-12)


def test_two_node_closed_form_pointwise():
    spec = System("chain2").spectrum()
    for state in evolve_grid(spec, 1, 4.0 * np.pi, 0.01):
        assert state.probabilities[0] == pytest.approx(np.cos(state.tau / 2.0) ** 2, abs=1e-12)
        assert state.probabilities[1] == pytest.approx(np.sin(state.tau / 2.0) ** 2, abs=1e-12)


def test_two_node_complete_transfer_at_pi():
    state = evolve(System("chain2").spectrum(), 1, np.pi)
    assert state.probabilities[1] == pytest.approx(1.0, abs=1e-12)


def test_evolve_grid_count():
    states = evolve_grid(System("chain2").spectrum(), 1, 10.0, 0.01)
    assert len(states) == 1001


def test_evolve_rejects_bad_source():
    spec = System("chain2").spectrum()
    with pytest.raises(ValueError):
        evolve(spec, 0, 1.0)
    with pytest.raises(ValueError):
        evolve(spec, 3, 1.0)


def test_unitarity_over_random_draws():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        sys = _random_system(rng)
        state = evolve(sys.spectrum(), int(rng.integers(1, sys.n_nodes + 1)), float(rng.uniform(0.0, 60.0)))
        assert abs(state.probabilities.sum() - 1.0) < 1e-10
        assert np.allclose(state.probabilities, np.abs(state.amplitudes) ** 2, atol=1e-14)


@settings(max_examples=120, deadline=None)
@given(delta=deltas, tau=taus)
def test_amplitude_symmetry_under_node_swap(delta, tau):
    # f_nm = f_mn: evolving from n and reading m equals the reverse
    spec = System("rect-along", delta=delta).spectrum()
    for n, m in ((1, 3), (2, 4), (1, 2)):
        fwd = evolve(spec, n, tau).amplitudes[m - 1]
        back = evolve(spec, m, tau).amplitudes[n - 1]
        assert fwd == pytest.approx(back, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(delta=deltas, tau=taus)
def test_probabilities_are_basis_invariant(delta, tau):
    # numeric and analytic eigensystems disagree on vector signs and
    # degenerate rotations, never on probabilities
    sys = System("rect-perp", delta=delta)
    d = coupling_matrix(sys.layout()).d
    numeric = evolve(sys.spectrum(), 1, tau)
    analytic = evolve(analytic_rectangle_spectrum(d[0, 2], d[0, 3]), 1, tau)
    assert np.allclose(numeric.probabilities, analytic.probabilities, atol=1e-10)


def test_probabilities_basis_invariant_at_degeneracy():
    sys = System("rect-perp", delta=1.0)
    d = coupling_matrix(sys.layout()).d
    for tau in np.linspace(0.0, 20.0, 101):
        numeric = evolve(sys.spectrum(), 1, tau)
        analytic = evolve(analytic_rectangle_spectrum(d[0, 2], d[0, 3]), 1, tau)
        assert np.allclose(numeric.probabilities, analytic.probabilities, atol=1e-10)


def test_density_element_definition():
    state = evolve(System("rect-along", delta=4.3).spectrum(), 1, 1.7)
    f = state.amplitudes
    for i in range(1, 5):
        assert density_element(state, i, i) == pytest.approx(state.probabilities[i - 1], abs=1e-14)
        for j in range(1, 5):
            a = density_element(state, i, j)
            assert a == pytest.approx(f[i - 1] * np.conj(f[j - 1]), abs=1e-15)
            assert a == pytest.approx(np.conj(density_element(state, j, i)), abs=1e-15)


def test_density_element_two_node_quadrature():
    state = evolve(System("chain2").spectrum(), 1, np.pi / 2.0)
    assert abs(density_element(state, 1, 2)) == pytest.approx(0.5, abs=1e-12)


def test_fidelity_reference_points():
    spec = System("chain2").spectrum()
    state = evolve(spec, 1, 0.0)
    assert fidelity(state, 1) == pytest.approx(1.0, abs=1e-12)
    # complete transfer leaves zero amplitude on the source
    state = evolve(spec, 1, np.pi)
    assert fidelity(state, 1) == pytest.approx(0.5, abs=1e-10)
    apex = fidelity(state, 2)
    assert 1.0 / 6.0 <= apex <= 1.0


def test_fidelity_phase_extremes():
    minus = TransferState(0.0, 1, np.array([-1.0 + 0.0j, 0.0j]), np.array([1.0, 0.0]))
    assert fidelity(minus, 1) == pytest.approx(1.0 / 3.0, abs=1e-14)
    null = TransferState(0.0, 1, np.array([1.0 + 0.0j, 0.0j]), np.array([1.0, 0.0]))
    assert fidelity(null, 2) == pytest.approx(0.5, abs=1e-14)
