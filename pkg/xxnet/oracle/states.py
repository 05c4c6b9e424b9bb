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
Brute-force sector ground states from determinant amplitudes.

The amplitude of the configuration with flipped spins at l_1 < ... < l_k
is the Slater determinant det[S_{l_a}^b]. Configurations are enumerated in
lexicographic order of their site lists.
"""

import dataclasses
import itertools

import numpy as np
from oslo_log import log as logging
from scipy import special

from xxnet import exception
from xxnet.solver import chain
from xxnet.solver import state as solver_state


LOG = logging.getLogger(__name__)

DEFAULT_CAP = 2000000

NORM_TOLERANCE = 1e-10


@dataclasses.dataclass(frozen=True)
class BasisConfig(object):
    sites: tuple

    @classmethod
    def validated(cls, n, k, sites):
        sites = tuple(int(s) for s in sites)
        if len(sites) != k or any(a >= b for a, b in zip(sites, sites[1:])) \
                or (sites and (sites[0] < 1 or sites[-1] > n)):
            raise exception.InvalidBasisConfig(config=list(sites), n=n, k=k)
        return cls(sites)


@dataclasses.dataclass(frozen=True, eq=False)
class StateVector(object):
    """Real amplitudes over the C(N, k) configurations, lexicographic."""
    n: int
    k: int
    configs: np.ndarray
    amplitudes: np.ndarray

    def __len__(self):
        return len(self.amplitudes)

    def items(self):
        for sites, amp in zip(self.configs, self.amplitudes):
            yield BasisConfig(tuple(int(s) for s in sites)), float(amp)

    def norm(self):
        return float(np.sqrt(np.dot(self.amplitudes, self.amplitudes)))

    def dense_indices(self):
        return dense_indices(self.n, self.configs)

    def to_dense(self):
        dense = np.zeros(2 ** self.n)
        dense[self.dense_indices()] = self.amplitudes
        return dense


def dense_indices(n, configs):
    """Positions of configurations in the 2^N computational basis.

    Site 1 is the most significant bit; a flipped (down) spin is 1.
    """
    index = np.zeros(len(configs), dtype=np.int64)
    for column in np.asarray(configs).T:
        index += np.left_shift(np.int64(1), n - column)
    return index


def sector_size(n, k):
    return int(special.comb(n, k, exact=True))


def check_size(n, k, cap=DEFAULT_CAP):
    size = sector_size(n, k)
    if size > cap:
        raise exception.StateSizeExceeded(n=n, k=k, size=size, cap=cap)
    return size


def enumerate_configs(n, k):
    """All k-subsets of 1..N as rows of an int array, lexicographic."""
    configs = list(itertools.combinations(range(1, n + 1), k))
    return np.array(configs, dtype=np.int64).reshape(len(configs), k)


def amplitude(n, k, config):
    chain.validate_sector(n, k)
    config = BasisConfig.validated(n, k, getattr(config, 'sites', config))
    if k == 0:
        return 1.0
    modes = solver_state.mode_matrix(n, range(1, k + 1))
    rows = np.asarray(config.sites) - 1
    return float(np.linalg.det(modes[rows]))


def full_state(n, k, cap=DEFAULT_CAP):
    chain.validate_sector(n, k)
    check_size(n, k, cap)
    configs = enumerate_configs(n, k)
    if k == 0:
        amplitudes = np.ones(1)
    else:
        modes = solver_state.mode_matrix(n, range(1, k + 1))
        amplitudes = np.linalg.det(modes[configs - 1])
    state = StateVector(n=n, k=k, configs=configs, amplitudes=amplitudes)

    norm = state.norm()
    if abs(norm - 1.0) > NORM_TOLERANCE:
        LOG.warning("Determinant state N=%(n)s k=%(k)s has norm %(norm)r",
                    {'n': n, 'k': k, 'norm': norm})
    return state
