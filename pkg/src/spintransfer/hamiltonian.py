"""Single-excitation block of the XXZ dipolar Hamiltonian and its spectrum.

With one flipped spin the only dynamically active block of the
Hamiltonian is H_1 = (D - Gamma I) / 2, where D carries the couplings
d_ij off the diagonal and A_nn = 2 sum_{i != n} d_in on it, and
Gamma = sum_{i<j} d_ij.  The Gamma shift is a multiple of the identity,
contributes a global phase only, and is dropped from the dynamics; it is
kept on the matrix object for reference.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import CouplingMatrix

__all__ = [
    "SingleExcitationMatrix",
    "Spectrum",
    "build_D",
    "diagonalize",
    "analytic_rectangle_spectrum",
    "analytic_parallelepiped_spectrum",
    "sign_basis",
]

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class SingleExcitationMatrix:
    """Symmetric matrix D of the single-excitation block, plus Gamma."""

    m: np.ndarray
    gamma: float

    @property
    def n_nodes(self) -> int:
        return self.m.shape[0]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (ascending) and orthonormal eigenvectors of D.

    eigenvectors[:, j] pairs with eigenvalues[j].
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n_nodes(self) -> int:
        return self.eigenvalues.shape[0]


def build_D(c: CouplingMatrix) -> SingleExcitationMatrix:
    """Assemble D from a coupling matrix: d_ij off-diagonal, 2 sum d_in on it."""
    d = c.d
    m = d.copy()
    np.fill_diagonal(m, 2.0 * d.sum(axis=0))
    return SingleExcitationMatrix(m=m, gamma=float(d.sum() / 2.0))


def diagonalize(D: SingleExcitationMatrix) -> Spectrum:
    """Spectral decomposition of D; deterministic for identical input."""
    lam, u = np.linalg.eigh(D.m)
    return Spectrum(eigenvalues=lam, eigenvectors=u)


def _sorted_spectrum(lam: np.ndarray, u: np.ndarray) -> Spectrum:
    order = np.argsort(lam, kind="stable")
    return Spectrum(eigenvalues=lam[order], eigenvectors=u[:, order])


def analytic_rectangle_spectrum(d13: float, d14: float) -> Spectrum:
    """Closed-form spectrum of the rectangle's D matrix.

    The four eigenvectors have components +-1/2 and do not depend on the
    couplings; only the eigenvalues do, through g = 1 + d13 + d14.
    """
    u = 0.5 * np.array(
        [
            [1.0, 1.0, 1.0, 1.0],
            [-1.0, 1.0, -1.0, 1.0],
            [1.0, 1.0, -1.0, -1.0],
            [-1.0, 1.0, 1.0, -1.0],
        ]
    )
    g = 1.0 + d13 + d14
    lam = np.array(
        [
            2.0 * g - 1.0 - d14 + d13,
            2.0 * g + 1.0 + d14 + d13,
            2.0 * g - 1.0 + d14 - d13,
            2.0 * g + 1.0 - d14 - d13,
        ]
    )
    return _sorted_spectrum(lam, u)


# Sign patterns of the parallelepiped eigenvectors, one vector per row.
_BOX_SIGNS = np.array(
    [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, -1, -1, -1, -1],
        [1, 1, -1, -1, 1, 1, -1, -1],
        [1, 1, -1, -1, -1, -1, 1, 1],
        [1, -1, 1, -1, 1, -1, 1, -1],
        [1, -1, 1, -1, -1, 1, -1, 1],
        [1, -1, -1, 1, 1, -1, -1, 1],
        [1, -1, -1, 1, -1, 1, 1, -1],
    ],
    dtype=float,
)


def analytic_parallelepiped_spectrum(d) -> Spectrum:
    """Closed-form spectrum of the parallelepiped's D matrix.

    Parameters
    ----------
    d : sequence of 7 couplings (d12, d13, d14, d15, d16, d17, d18).

    All eigenvector components are +-1/(2 sqrt 2); the eigenvalues are
    3 g minus twice the sum of the couplings whose sign flips relative
    to the first component, with g the sum of all seven couplings.
    """
    d12, d13, d14, d15, d16, d17, d18 = (float(x) for x in d)
    g = d12 + d13 + d14 + d15 + d16 + d17 + d18
    lam = 3.0 * g - 2.0 * np.array(
        [
            0.0,
            d15 + d16 + d17 + d18,
            d13 + d14 + d17 + d18,
            d13 + d14 + d15 + d16,
            d12 + d14 + d16 + d18,
            d12 + d14 + d15 + d17,
            d12 + d13 + d16 + d17,
            d12 + d13 + d15 + d18,
        ]
    )
    u = _BOX_SIGNS.T / (2.0 * _SQRT2)
    return _sorted_spectrum(lam, u)


def sign_basis(s: int) -> np.ndarray:
    """Orthonormal sign basis of dimension 2**s, one vector per row.

    Built by the doubling rule B_2M = ((1,1) x B_M, (1,-1) x B_M) / sqrt 2
    from B_1 = {(1)}; every component has magnitude 2**(-s/2).  For s = 2
    and s = 3 the rows span the rectangle and parallelepiped eigenvector
    sets.
    """
    if not isinstance(s, (int, np.integer)) or not 1 <= s <= 10:
        raise ValueError("s must be an integer in [1, 10]")
    basis = np.ones((1, 1))
    for _ in range(s):
        basis = np.vstack(
            [np.hstack([basis, basis]), np.hstack([basis, -basis])]
        ) / _SQRT2
    return basis
