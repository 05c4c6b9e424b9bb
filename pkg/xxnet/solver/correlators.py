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
Two-spin reduced states of a sector ground state.

The coherence <s+_i s-_j> carries a Jordan-Wigner string over the sites
strictly between i and j. It is evaluated either as the determinant of the
(j - i) x (j - i) block of 2G - 1 between the two sites, or as the
(k + 1) x (k + 1) overlap determinant of the Slater state with its
string-reflected copy, whichever is smaller.
"""

import collections
import dataclasses
import math

import numpy as np
from oslo_log import log as logging

from xxnet import exception

LOG = logging.getLogger(__name__)


# Determinant batches are split so that no chunk holds more entries.
MAX_BATCH_ENTRIES = 4000000

# Pairs whose coherence bound falls short of the separability threshold
# by less than this are still evaluated exactly.
SKIP_MARGIN = 1e-6

# Added inside the logarithms of coherence_bounds so rounding never
# tightens the bound.
BOUND_SLACK = 1e-12


@dataclasses.dataclass(frozen=True)
class TwoSpinState(object):
    """U(1)-symmetric two-qubit state in the basis (uu, ud, du, dd).

    The first letter refers to spin i; ``z`` is the ud/du coherence.
    """
    i: int
    j: int
    p_uu: float
    p_ud: float
    p_du: float
    p_dd: float
    z: float

    @property
    def populations(self):
        return (self.p_uu, self.p_ud, self.p_du, self.p_dd)

    def matrix(self):
        rho = np.diag(self.populations).astype(float)
        rho[1, 2] = rho[2, 1] = self.z
        return rho

    def concurrence(self):
        return x_concurrence(self.z, self.p_uu, self.p_dd)


def x_concurrence(z, p_uu, p_dd):
    return 2.0 * max(0.0, abs(z) - math.sqrt(p_uu * p_dd))


def validate_pair(n, i, j):
    if not (1 <= i < j <= n):
        raise exception.InvalidSite(n=n, i=i, j=j)


def _string_block(g, i0, r):
    """Block of 2G - 1 with rows i0..i0+r-1 and columns i0+1..i0+r."""
    block = 2.0 * g[i0:i0 + r, i0 + 1:i0 + r + 1]
    return block - np.eye(r, k=-1)


def _bordered(modes, i0, j0, overlap):
    k = modes.shape[1]
    border = np.zeros((k + 1, k + 1))
    border[0, 1:] = modes[i0]
    border[1:, 0] = modes[j0]
    border[1:, 1:] = overlap
    return border


def _string_overlap(modes, i0, j0):
    inner = modes[i0 + 1:j0]
    return np.eye(modes.shape[1]) - 2.0 * inner.T @ inner


def string_coherence(state, i, j):
    """<s+_i s-_j> for 1 <= i < j <= N, string included."""
    validate_pair(state.n, i, j)
    if state.k in (0, state.n):
        return 0.0
    i0, j0 = i - 1, j - 1
    r = j0 - i0
    if r <= state.k + 1:
        return 0.5 * float(np.linalg.det(_string_block(state.correlation,
                                                       i0, r)))
    overlap = _string_overlap(state.modes, i0, j0)
    return -float(np.linalg.det(_bordered(state.modes, i0, j0, overlap)))


def two_spin_rdm(state, i, j):
    validate_pair(state.n, i, j)
    i0, j0 = i - 1, j - 1
    g = state.correlation
    p_uu, p_dd = state.pair_populations
    both_down = float(p_dd[i0, j0])
    return TwoSpinState(
        i=i, j=j,
        p_uu=float(p_uu[i0, j0]),
        p_ud=max(0.0, float(g[j0, j0]) - both_down),
        p_du=max(0.0, float(g[i0, i0]) - both_down),
        p_dd=both_down,
        z=string_coherence(state, i, j))


def _block_coherences(g, rows, r):
    out = np.empty(len(rows))
    chunk = max(1, MAX_BATCH_ENTRIES // (r * r))
    offsets = np.arange(r)
    sub = np.eye(r, k=-1)
    for start in range(0, len(rows), chunk):
        i0 = rows[start:start + chunk]
        ra = i0[:, np.newaxis, np.newaxis] + offsets[np.newaxis, :, np.newaxis]
        cb = (i0[:, np.newaxis, np.newaxis] + 1 +
              offsets[np.newaxis, np.newaxis, :])
        blocks = 2.0 * g[ra, cb] - sub
        out[start:start + chunk] = 0.5 * np.linalg.det(blocks)
    return out


def _overlap_coherences(modes, i0, targets):
    """Coherences (i0, j0) for increasing j0, updating the overlap."""
    overlap = np.eye(modes.shape[1])
    reached = i0 + 1
    out = np.empty(len(targets))
    for idx, j0 in enumerate(targets):
        block = modes[reached:j0]
        if len(block):
            overlap = overlap - 2.0 * block.T @ block
        reached = j0
        out[idx] = -np.linalg.det(_bordered(modes, i0, j0, overlap))
    return out


def coherence_pairs(state, pairs):
    """Coherences for many 0-based pairs (i0 < j0), in input order."""
    pairs = np.asarray(pairs, dtype=int).reshape(-1, 2)
    z = np.zeros(len(pairs))
    if state.k in (0, state.n) or not len(pairs):
        return z

    distance = pairs[:, 1] - pairs[:, 0]
    short = distance <= state.k + 1
    for r in np.unique(distance[short]):
        sel = np.flatnonzero(short & (distance == r))
        z[sel] = _block_coherences(state.correlation, pairs[sel, 0], int(r))

    by_row = collections.defaultdict(list)
    for idx in np.flatnonzero(~short):
        by_row[int(pairs[idx, 0])].append(idx)
    for i0, idxs in sorted(by_row.items()):
        idxs = sorted(idxs, key=lambda x: pairs[x, 1])
        z[idxs] = _overlap_coherences(state.modes, i0,
                                      [int(pairs[x, 1]) for x in idxs])
    return z


def coherence_bounds(state, pairs):
    """Upper bounds on |<s+_i s-_j>| for 0-based pairs (i0 < j0).

    Hadamard's inequality on the rows of the string block of A = 2G - 1.
    A is orthogonal, so a row's weight inside the block is at most
    (T - L)(T - R) / T, with T its total weight and L, R the weights left
    of column i0 + 1 and right of column j0. Both factors accumulate
    along the row range, which keeps the whole table O(N^2).
    """
    pairs = np.asarray(pairs, dtype=int).reshape(-1, 2)
    n = state.n
    a = 2.0 * state.correlation - np.eye(n)
    mass = np.zeros((n, n + 1))
    np.cumsum(a * a, axis=1, out=mass[:, 1:])
    total = mass[:, n]

    idx = np.arange(n)
    start = np.broadcast_to(idx[:, np.newaxis], (n, n))
    rows = start + idx[np.newaxis, :]
    left = np.zeros((n, n))
    ok = rows < n
    left[ok] = np.log(total[rows[ok]] - mass[rows[ok], start[ok] + 1] +
                      BOUND_SLACK)
    rows = start - 1 - idx[np.newaxis, :]
    right = np.zeros((n, n))
    ok = rows >= 0
    right[ok] = np.log(mass[rows[ok], start[ok] + 1] + BOUND_SLACK)
    left = np.cumsum(left, axis=1)
    right = np.cumsum(right, axis=1)
    log_total = np.concatenate(([0.0], np.cumsum(np.log(total))))

    i0, j0 = pairs[:, 0], pairs[:, 1]
    r = j0 - i0
    log_det = 0.5 * (left[i0, r - 1] + right[j0, r - 1] -
                     (log_total[j0] - log_total[i0]))
    return 0.5 * np.exp(np.minimum(log_det, 0.0))


def concurrence_matrix(state, tau):
    """Symmetric N x N pairwise concurrence, entries <= tau set to 0."""
    n = state.n
    omega = np.zeros((n, n))
    if state.k in (0, n) or n < 2:
        return omega

    g = state.correlation
    p_uu, p_dd = state.pair_populations
    diag = np.diag(g)
    p_ud = np.clip(diag[np.newaxis, :] - p_dd, 0.0, None)
    p_du = np.clip(diag[:, np.newaxis] - p_dd, 0.0, None)
    floor = np.sqrt(p_uu * p_dd)

    iu, ju = np.triu_indices(n, k=1)
    upper = np.minimum(np.sqrt(p_ud[iu, ju] * p_du[iu, ju]),
                       coherence_bounds(state, np.column_stack((iu, ju))))
    keep = upper - floor[iu, ju] > 0.5 * tau - SKIP_MARGIN
    LOG.debug("Sector %(n)s/%(k)s: evaluating %(kept)s of %(pairs)s pairs",
              {'n': n, 'k': state.k, 'kept': int(keep.sum()),
               'pairs': len(keep)})
    iu, ju = iu[keep], ju[keep]
    z = coherence_pairs(state, np.column_stack((iu, ju)))

    weights = 2.0 * np.clip(np.abs(z) - floor[iu, ju], 0.0, None)
    weights[weights <= tau] = 0.0
    omega[iu, ju] = weights
    omega[ju, iu] = weights
    return omega
