"""Node layouts and dipolar coupling matrices for small spin clusters.

Lengths are measured in units of the node 1 - node 2 spacing, so every
layout satisfies xi_12 = 1.  A layout is a set of coordinates plus the
direction of the external field; the secular dipolar coupling between
nodes i and j is

    d_ij = (1 - 3 cos^2 theta_ij) / xi_ij^3,

with theta_ij the angle between the internode vector and the field axis.
The reference pair gives d_12 = 1 whenever the field is perpendicular to
the 1-2 segment, which is the case in all built-in layouts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "FIELD_PERPENDICULAR",
    "FIELD_ALONG_B",
    "NodeLayout",
    "CouplingMatrix",
    "delta_to_b",
    "b_to_delta",
    "layout_chain2",
    "layout_rectangle",
    "layout_parallelepiped",
    "coupling_matrix",
]

# Field orientations for the rectangle: normal to its plane, or parallel
# to the side of length b.
FIELD_PERPENDICULAR = "perpendicular"
FIELD_ALONG_B = "along"


@dataclass(frozen=True)
class NodeLayout:
    """Coordinates of N >= 2 nodes plus the unit field axis.

    positions has shape (N, 3); field_axis has shape (3,) and unit norm.
    The distance between nodes 1 and 2 must be 1, fixing the length unit.
    """

    positions: np.ndarray
    field_axis: np.ndarray

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=float)
        axis = np.asarray(self.field_axis, dtype=float)
        if pos.ndim != 2 or pos.shape[1] != 3 or pos.shape[0] < 2:
            raise ValueError("positions must be an (N, 3) array with N >= 2")
        if axis.shape != (3,):
            raise ValueError("field_axis must be a 3-vector")
        if abs(np.linalg.norm(axis) - 1.0) > 1e-12:
            raise ValueError("field_axis must have unit norm")
        diff = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(diff, axis=-1)
        n = pos.shape[0]
        if np.any(dist[~np.eye(n, dtype=bool)] == 0.0):
            raise ValueError("node positions must be pairwise distinct")
        if abs(dist[0, 1] - 1.0) > 1e-12:
            raise ValueError("distance between nodes 1 and 2 must equal 1")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "field_axis", axis)

    @property
    def n_nodes(self) -> int:
        return self.positions.shape[0]


@dataclass(frozen=True)
class CouplingMatrix:
    """Symmetric matrix of dimensionless couplings d_ij, zero diagonal."""

    d: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.d, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ValueError("coupling matrix must be square")
        if not np.array_equal(d, d.T) or np.any(np.diag(d) != 0.0):
            raise ValueError("coupling matrix must be symmetric with zero diagonal")
        object.__setattr__(self, "d", d)

    @property
    def n_nodes(self) -> int:
        return self.d.shape[0]


def delta_to_b(delta: float) -> float:
    """Side length b for a coupling parameter delta, b = delta**(-1/3)."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    return float(delta) ** (-1.0 / 3.0)


def b_to_delta(b: float) -> float:
    """Coupling parameter of a side of length b, delta = b**(-3)."""
    if b <= 0:
        raise ValueError("b must be positive")
    return float(b) ** (-3.0)


def layout_chain2() -> NodeLayout:
    """Two nodes at unit distance, field perpendicular to the segment."""
    return NodeLayout(
        positions=np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]),
        field_axis=np.array([0.0, 0.0, 1.0]),
    )


def layout_rectangle(b: float, field_mode: str) -> NodeLayout:
    """Rectangle of side lengths 1 (nodes 1-2) and b (nodes 1-4).

    Nodes are numbered around the rectangle with node 3 diagonal from
    node 1.  field_mode selects FIELD_PERPENDICULAR (field normal to the
    plane) or FIELD_ALONG_B (field parallel to the 1-4 side); the field
    axis is +z in both embeddings, so the rectangle sits in the x-y
    plane for the former and in the x-z plane for the latter.
    """
    if b <= 0:
        raise ValueError("b must be positive")
    if field_mode == FIELD_PERPENDICULAR:
        pos = [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [1.0, b, 0.0], [0.0, b, 0.0]]
    elif field_mode == FIELD_ALONG_B:
        pos = [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [1.0, 0.0, b], [0.0, 0.0, b]]
    else:
        raise ValueError(f"unknown field_mode: {field_mode!r}")
    return NodeLayout(positions=np.array(pos), field_axis=np.array([0.0, 0.0, 1.0]))


def layout_parallelepiped(b1: float, b2: float) -> NodeLayout:
    """Right parallelepiped: base rectangle 1-2-3-4 (sides 1 and b1) in
    the x-y plane, nodes 5-8 the same rectangle shifted by b2 along +z.

    The field axis is +z, parallel to the 1-5 edge of length b2.
    """
    if b1 <= 0 or b2 <= 0:
        raise ValueError("b1 and b2 must be positive")
    base = np.array(
        [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [1.0, b1, 0.0], [0.0, b1, 0.0]]
    )
    top = base + np.array([0.0, 0.0, b2])
    return NodeLayout(
        positions=np.vstack([base, top]), field_axis=np.array([0.0, 0.0, 1.0])
    )


def coupling_matrix(layout: NodeLayout) -> CouplingMatrix:
    """Dimensionless couplings d_ij = (1 - 3 cos^2 theta_ij) / xi_ij^3."""
    pos = layout.positions
    diff = pos[None, :, :] - pos[:, None, :]
    xi = np.linalg.norm(diff, axis=-1)
    n = pos.shape[0]
    off = ~np.eye(n, dtype=bool)
    if np.any(xi[off] == 0.0):
        raise ValueError("coincident nodes give a singular coupling")
    xi_safe = np.where(off, xi, 1.0)
    cos2 = (diff @ layout.field_axis) ** 2 / xi_safe**2
    d = np.where(off, (1.0 - 3.0 * cos2) / xi_safe**3, 0.0)
    # exact symmetry, so CouplingMatrix validation never trips on roundoff
    d = (d + d.T) / 2.0
    return CouplingMatrix(d=d)
