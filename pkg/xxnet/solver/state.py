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
Exact sector ground states from the single-particle sine modes.

Fermion occupation is identified with a flipped (down) spin, so the k = 0
ground state is all-up. Sites are 1-based in the public API; arrays are
0-based internally.
"""

import dataclasses
import functools
import itertools

import numpy as np

from xxnet.solver import chain


# Below this many occupied (or empty) modes the both-flipped population is
# summed from squared 2x2 mode minors instead of the Wick determinant.
MINOR_SUM_MAX_MODES = 16


def mode_matrix(n, modes):
    """S[l, m] = sqrt(2 / (N + 1)) sin(pi m l / (N + 1)), l = 1..N."""
    sites = np.arange(1, n + 1, dtype=float)[:, np.newaxis]
    modes = np.asarray(modes, dtype=float)[np.newaxis, :]
    return np.sqrt(2.0 / (n + 1)) * np.sin(np.pi * sites * modes / (n + 1))


@dataclasses.dataclass(frozen=True, eq=False)
class SectorState(object):
    n: int
    k: int
    modes: np.ndarray
    correlation: np.ndarray

    @property
    def S(self):
        return self.modes

    @property
    def G(self):
        return self.correlation

    @functools.cached_property
    def empty_modes(self):
        return mode_matrix(self.n, range(self.k + 1, self.n + 1))

    @functools.cached_property
    def pair_populations(self):
        return pair_populations(self)


def build_sector_state(n, k):
    chain.validate_sector(n, k)
    modes = mode_matrix(n, range(1, k + 1))
    correlation = modes @ modes.T
    correlation = 0.5 * (correlation + correlation.T)
    modes.setflags(write=False)
    correlation.setflags(write=False)
    return SectorState(n=n, k=k, modes=modes, correlation=correlation)


def _minor_square_sum(vectors):
    """sum over column pairs m < m' of (v_im v_jm' - v_im' v_jm)^2."""
    n = vectors.shape[0]
    total = np.zeros((n, n))
    for a, b in itertools.combinations(range(vectors.shape[1]), 2):
        minor = np.outer(vectors[:, a], vectors[:, b])
        minor -= minor.T
        total += minor * minor
    return total


def pair_populations(state):
    """Both-up and both-down populations for every site pair.

    Returns ``(p_uu, p_dd)`` with p_dd[i, j] = <n_i n_j> and
    p_uu[i, j] = <(1 - n_i)(1 - n_j)>. Off-diagonal entries only are
    meaningful. Whichever of the two can vanish structurally (p_dd at
    small k, p_uu at small N - k) is summed from squared mode minors so
    that it is exactly zero when it should be.
    """
    g = state.correlation
    diag = np.diag(g)
    marginal = 1.0 - diag[:, np.newaxis] - diag[np.newaxis, :]
    n_occ, n_empty = state.k, state.n - state.k

    if n_occ <= n_empty:
        if n_occ <= MINOR_SUM_MAX_MODES:
            p_dd = _minor_square_sum(state.modes)
        else:
            p_dd = np.outer(diag, diag) - g * g
        p_uu = marginal + p_dd
    else:
        if n_empty <= MINOR_SUM_MAX_MODES:
            p_uu = _minor_square_sum(state.empty_modes)
        else:
            h = np.eye(state.n) - g
            p_uu = np.outer(np.diag(h), np.diag(h)) - h * h
        p_dd = p_uu - marginal

    p_uu = np.clip(p_uu, 0.0, None)
    p_dd = np.clip(p_dd, 0.0, None)
    p_uu.setflags(write=False)
    p_dd.setflags(write=False)
    return p_uu, p_dd
