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
Weighted concurrence networks of sector ground states.

omega_ij is the concurrence of spins i and j; the topology is
a_ij = 1 iff omega_ij > tau. Weights at or below tau are stored as exact
zeros, so the two views never disagree.
"""

import functools

import numpy as np
from oslo_log import log as logging

from xxnet import conf
from xxnet import exception
from xxnet.solver import chain
from xxnet.solver import correlators
from xxnet.solver import state as solver_state


LOG = logging.getLogger(__name__)

DEFAULT_TAU = conf.DEFAULT_TAU

# Slack allowed on symmetry and the [0, 1] range of supplied weights.
WEIGHT_TOLERANCE = 1e-12


class WeightedNetwork(object):
    """Immutable symmetric concurrence matrix with provenance.

    :param weights: N x N array of link weights
    :param tau: separability tolerance
    :param k: sector the network was built from, if any
    """

    def __init__(self, weights, tau=DEFAULT_TAU, k=None):
        weights = np.array(weights, dtype=float)
        if weights.ndim != 2 or weights.shape[0] != weights.shape[1]:
            raise exception.Invalid(
                "Weight matrix must be square, got shape %s."
                % (weights.shape,))
        if not np.all(np.isfinite(weights)):
            raise exception.Invalid("Weight matrix has non-finite entries.")
        if weights.size and (
                np.max(np.abs(weights - weights.T)) > WEIGHT_TOLERANCE or
                weights.min() < -WEIGHT_TOLERANCE or
                weights.max() > 1.0 + WEIGHT_TOLERANCE):
            raise exception.Invalid(
                "Weights must be symmetric and lie in [0, 1].")
        if tau < 0:
            raise exception.Invalid("tau must be non-negative.")

        weights = np.clip(0.5 * (weights + weights.T), 0.0, 1.0)
        np.fill_diagonal(weights, 0.0)
        weights[weights <= tau] = 0.0
        weights.setflags(write=False)

        self._weights = weights
        self.tau = float(tau)
        self.k = k

    def __repr__(self):
        return '<WeightedNetwork N=%s k=%s tau=%r links=%s>' % (
            self.n, self.k, self.tau, self.link_count)

    @property
    def n(self):
        return self._weights.shape[0]

    @property
    def weights(self):
        return self._weights

    @property
    def omega(self):
        return self._weights

    @functools.cached_property
    def adjacency(self):
        a = (self._weights > self.tau).astype(np.int64)
        a.setflags(write=False)
        return a

    @property
    def link_count(self):
        return int(self.adjacency.sum()) // 2

    def neighbors(self, i):
        """0-based neighbours of 0-based node ``i``."""
        return np.flatnonzero(self.adjacency[i])


def build_network(n, k, tau=DEFAULT_TAU):
    """Concurrence network of the sector-k ground state of N spins."""
    chain.validate_sector(n, k)
    state = solver_state.build_sector_state(n, k)
    omega = correlators.concurrence_matrix(state, tau)
    net = WeightedNetwork(omega, tau=tau, k=k)
    LOG.debug("Built network N=%(n)s k=%(k)s with %(links)s links",
              {'n': n, 'k': k, 'links': net.link_count})
    return net


def adjacency(net):
    return net.adjacency
