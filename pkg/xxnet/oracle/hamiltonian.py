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
Independent dense diagonalization of the XX chain inside one sector.

H = -sum_i (s+_i s-_{i+1} + s-_i s+_{i+1}) - B sum_i Z_i, which is the
(XX + YY) / 2 coupling written with real ladder operators. Site 1 is the
most significant factor of the Kronecker products; spin up is state 0.
"""

import numpy as np
from oslo_log import log as logging
from scipy import sparse

from xxnet import exception
from xxnet.oracle import states
from xxnet.solver import chain


LOG = logging.getLogger(__name__)

DEGENERACY_TOLERANCE = 1e-10

_RAISE = sparse.csr_matrix(np.array([[0.0, 1.0], [0.0, 0.0]]))
_LOWER = sparse.csr_matrix(np.array([[0.0, 0.0], [1.0, 0.0]]))
_PAULI_Z = sparse.csr_matrix(np.array([[1.0, 0.0], [0.0, -1.0]]))


def site_operator(n, i, op):
    """``op`` acting on 1-based site ``i`` of an N-spin chain."""
    left = sparse.identity(2 ** (i - 1), format='csr')
    right = sparse.identity(2 ** (n - i), format='csr')
    return sparse.kron(left, sparse.kron(op, right), format='csr')


def hamiltonian(n, b, cap=states.DEFAULT_CAP):
    chain.validate_size(n)
    if 2 ** n > cap:
        raise exception.StateSizeExceeded(n=n, k='all', size=2 ** n,
                                          cap=cap)
    dim = 2 ** n
    h = sparse.csr_matrix((dim, dim))
    for i in range(1, n):
        hop = (site_operator(n, i, _RAISE) @ site_operator(n, i + 1, _LOWER))
        h = h - hop - hop.T
    for i in range(1, n + 1):
        h = h - b * site_operator(n, i, _PAULI_Z)
    return h.tocsr()


def sector_hamiltonian(n, k, b, cap=states.DEFAULT_CAP):
    """Dense block of H on the sector-k configurations, lexicographic."""
    states.check_size(n, k, cap)
    configs = states.enumerate_configs(n, k)
    index = states.dense_indices(n, configs)
    h = hamiltonian(n, b, cap=cap)
    return configs, h[index][:, index].toarray()


def diagonalize_sector(n, k, b, cap=states.DEFAULT_CAP):
    """Lowest eigenpair of H restricted to sector k.

    :returns: ``(energy, StateVector)``
    :raises InvalidFieldForSector: ``b`` does not select sector ``k``.
    :raises DegenerateGroundState: the two lowest levels are within
        ``DEGENERACY_TOLERANCE``.
    """
    chain.validate_sector(n, k)
    if chain.sector_for_field(n, b) != k:
        raise exception.InvalidFieldForSector(b=b, k=k, n=n)

    configs, block = sector_hamiltonian(n, k, b, cap=cap)
    energies, vectors = np.linalg.eigh(block)
    if len(energies) > 1 and \
            energies[1] - energies[0] < DEGENERACY_TOLERANCE:
        raise exception.DegenerateGroundState(k=k, n=n,
                                              tol=DEGENERACY_TOLERANCE)
    LOG.debug("Sector N=%(n)s k=%(k)s diagonalized, dimension %(dim)s",
              {'n': n, 'k': k, 'dim': len(energies)})
    state = states.StateVector(n=n, k=k, configs=configs,
                               amplitudes=vectors[:, 0].copy())
    return float(energies[0]), state


def overlap(left, right):
    if (left.n, left.k) != (right.n, right.k):
        raise exception.Invalid("States belong to different sectors.")
    return float(np.dot(left.amplitudes, right.amplitudes))
