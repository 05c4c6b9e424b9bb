#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""
Two-qubit reduced density matrices and their concurrence.

Matrices are in the basis (uu, ud, du, dd), the first letter being the
lower site, which is the computational order 2 * bit_i + bit_j with
spin up = 0.
"""

import numpy as np

from xxnet import exception
from xxnet.solver import correlators


DENSITY_TOLERANCE = 1e-10

# Entries outside the X pattern smaller than this are treated as zero.
X_TOLERANCE = 1e-12

_SPIN_FLIP = np.array([[0.0, 0.0, 0.0, -1.0],
                       [0.0, 0.0, 1.0, 0.0],
                       [0.0, 1.0, 0.0, 0.0],
                       [-1.0, 0.0, 0.0, 0.0]])

_OUTSIDE_X = np.array([[False, True, True, False],
                       [True, False, False, True],
                       [True, False, False, True],
                       [False, True, True, False]])


def rdm_from_state(state, i, j):
    """Partial trace of the pure sector state onto spins i < j."""
    correlators.validate_pair(state.n, i, j)
    psi = state.to_dense().reshape((2,) * state.n)
    psi = np.moveaxis(psi, (i - 1, j - 1), (0, 1)).reshape(4, -1)
    rho = psi @ psi.T
    return 0.5 * (rho + rho.T)


def validate_density_matrix(rho, tol=DENSITY_TOLERANCE):
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise exception.InvalidDensityMatrix(
            reason="shape %s, expected (4, 4)" % (rho.shape,))
    if not np.all(np.isfinite(rho)):
        raise exception.InvalidDensityMatrix(reason="non-finite entries")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise exception.InvalidDensityMatrix(reason="not Hermitian")
    trace = float(np.real(np.trace(rho)))
    if abs(trace - 1.0) > tol:
        raise exception.InvalidDensityMatrix(
            reason="trace %r differs from 1" % trace)
    lowest = float(np.linalg.eigvalsh(rho)[0])
    if lowest < -tol:
        raise exception.InvalidDensityMatrix(
            reason="negative eigenvalue %r" % lowest)
    return rho


def is_x_shaped(rho, tol=X_TOLERANCE):
    return bool(np.all(np.abs(np.asarray(rho)[_OUTSIDE_X]) <= tol))


def x_state_concurrence(rho):
    """Closed form for states with only the X pattern populated."""
    rho = np.asarray(rho)
    populations = np.real(np.diag(rho))
    flip = abs(rho[1, 2]) - np.sqrt(max(0.0, populations[0] * populations[3]))
    pair = abs(rho[0, 3]) - np.sqrt(max(0.0, populations[1] * populations[2]))
    return float(2.0 * max(0.0, flip, pair))


def spin_flip_concurrence(rho):
    """max(0, l1 - l2 - l3 - l4) from the spin-flipped overlap.

    The l are the singular values of sqrt(rho) (Y x Y) sqrt(rho)*, which
    are the square roots of the eigenvalues of rho (Y x Y) rho* (Y x Y).
    """
    values, vectors = np.linalg.eigh(np.asarray(rho))
    root = (vectors * np.sqrt(np.clip(values, 0.0, None))) @ \
        vectors.conj().T
    singular = np.linalg.svd(root @ _SPIN_FLIP @ root.conj(),
                             compute_uv=False)
    return float(max(0.0, singular[0] - singular[1:].sum()))


def wootters_concurrence(rho, tol=DENSITY_TOLERANCE):
    rho = validate_density_matrix(rho, tol=tol)
    if is_x_shaped(rho):
        value = x_state_concurrence(rho)
    else:
        value = spin_flip_concurrence(rho)
    return min(1.0, value)
