"""Layouts, the delta parameterization, and dipolar couplings."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spintransfer.geometry import (
    FIELD_ALONG_B,
    FIELD_PERPENDICULAR,
    NodeLayout,
    b_to_delta,
    coupling_matrix,
    delta_to_b,
    layout_chain2,
    layout_parallelepiped,
    layout_rectangle,
)

sides = st.floats(min_value=0.2, max_value=5.0, allow_nan=False)


def test_delta_to_b_frozen_value():
    assert delta_to_b(4.3) == pytest.approx(0.61495572381348684, abs=1e-16)


def test_delta_b_round_trip():
    for delta in (0.1, 0.5, 1.0, 4.3, 26.2):
        assert b_to_delta(delta_to_b(delta)) == pytest.approx(delta, rel=1e-14)


def test_delta_to_b_rejects_nonpositive():
    with pytest.raises(ValueError):
        delta_to_b(0.0)
    with pytest.raises(ValueError):
        delta_to_b(-1.0)


def test_chain2_coupling_is_unity():
    c = coupling_matrix(layout_chain2())
    assert c.d.shape == (2, 2)
    assert c.d[0, 1] == pytest.approx(1.0, abs=1e-15)


@settings(max_examples=100, deadline=None)
@given(b=sides)
def test_rectangle_perpendicular_couplings(b):
    d = coupling_matrix(layout_rectangle(b, FIELD_PERPENDICULAR)).d
    delta = b_to_delta(b)
    diag = (1.0 + b * b) ** -1.5
    assert d[0, 1] == pytest.approx(1.0, abs=1e-12)
    assert d[0, 3] == pytest.approx(delta, rel=1e-12)
    assert d[0, 2] == pytest.approx(diag, rel=1e-12)
    # opposite sides and diagonals pair up
    assert d[1, 2] == pytest.approx(d[0, 3], rel=1e-12)
    assert d[1, 3] == pytest.approx(d[0, 2], rel=1e-12)
    assert d[2, 3] == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(b=sides)
def test_rectangle_along_couplings(b):
    d = coupling_matrix(layout_rectangle(b, FIELD_ALONG_B)).d
    b2 = b * b
    assert d[0, 1] == pytest.approx(1.0, abs=1e-12)
    assert d[0, 3] == pytest.approx(-2.0 * b_to_delta(b), rel=1e-12)
    assert d[0, 2] == pytest.approx((1.0 - 3.0 * b2 / (1.0 + b2)) * (1.0 + b2) ** -1.5, rel=1e-12, abs=1e-12)


def test_rectangle_along_frozen_diagonal():
    d = coupling_matrix(layout_rectangle(delta_to_b(4.3), FIELD_ALONG_B)).d
    assert d[0, 2] == pytest.approx(0.10927602775685444, abs=1e-15)


@settings(max_examples=100, deadline=None)
@given(b1=sides, b2=sides)
def test_parallelepiped_couplings(b1, b2):
    d = coupling_matrix(layout_parallelepiped(b1, b2)).d
    q1, q2 = b1 * b1, b2 * b2
    expected = {
        (0, 1): 1.0,
        (0, 2): (1.0 + q1) ** -1.5,
        (0, 3): b1**-3,
        (0, 4): -2.0 * b2**-3,
        (0, 5): (1.0 - 3.0 * q2 / (1.0 + q2)) * (1.0 + q2) ** -1.5,
        (0, 6): (1.0 - 3.0 * q2 / (1.0 + q1 + q2)) * (1.0 + q1 + q2) ** -1.5,
        (0, 7): (1.0 - 3.0 * q2 / (q1 + q2)) * (q1 + q2) ** -1.5,
    }
    for (i, j), value in expected.items():
        assert d[i, j] == pytest.approx(value, rel=1e-12, abs=1e-12)


def test_parallelepiped_frozen_field_coupling():
    # height b2 with delta2 = 26.2 gives the strong negative on-axis coupling
    d = coupling_matrix(layout_parallelepiped(delta_to_b(9.0), delta_to_b(26.2))).d
    assert d[0, 4] == pytest.approx(-52.4, rel=1e-12)


def test_coupling_matrix_symmetry_and_zero_diagonal():
    d = coupling_matrix(layout_parallelepiped(0.7, 1.3)).d
    assert np.allclose(d, d.T)
    assert np.all(np.diag(d) == 0.0)


def test_magic_angle_nulls_coupling():
    # third node along a direction with cos^2(theta) = 1/3 from the field axis
    positions = np.array(
        [
            [0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [2.0 * np.sqrt(2.0 / 3.0), 0.0, 2.0 / np.sqrt(3.0)],
        ]
    )
    layout = NodeLayout(positions, np.array([0.0, 0.0, 1.0]))
    d = coupling_matrix(layout).d
    assert abs(d[0, 2]) < 1e-12


def test_layout_rejects_coincident_nodes():
    positions = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    with pytest.raises(ValueError):
        NodeLayout(positions, np.array([0.0, 0.0, 1.0]))


def test_layout_rejects_non_unit_axis():
    positions = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    with pytest.raises(ValueError):
        NodeLayout(positions, np.array([0.0, 0.0, 2.0]))


def test_layout_rejects_unscaled_first_edge():
    positions = np.array([[0.0, 0.0, 0.0], [2.0, 0.0, 0.0]])
    with pytest.raises(ValueError):
        NodeLayout(positions, np.array([0.0, 0.0, 1.0]))


def test_rectangle_rejects_unknown_mode():
    with pytest.raises(ValueError):
        layout_rectangle(1.0, "diagonal")
