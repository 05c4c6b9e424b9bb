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
Local measures of weighted networks.

For node i with neighbours j (a_ij = 1):

* degree      d_i = sum_j a_ij
* strength    s_i = sum_j omega_ij
* disparity   Y_i = sum_j omega_ij^2 / s_i^2, undefined (NaN) when s_i = 0
* clustering  c_i = sum_jk a_ij a_ik a_jk / (d_i (d_i - 1))
* weighted    c_i^w = sum_jk (omega_ij omega_ik omega_jk)^(1/3)
                      / (d_i (d_i - 1) max_lm omega_lm)

Both clusterings are 0 for d_i < 2.
"""

import collections
import dataclasses

import numpy as np
from oslo_log import log as logging
from scipy import signal

from xxnet import exception


LOG = logging.getLogger(__name__)

# Profile values closer than this fraction of the largest magnitude are
# considered equal when looking for extrema.
PROFILE_RTOL = 1e-10

# Relative prominence separating disparity extrema from ripples.
DISPARITY_PROMINENCE = 0.1


@dataclasses.dataclass(frozen=True, eq=False)
class NodeMetrics(object):
    degree: np.ndarray
    strength: np.ndarray
    disparity: np.ndarray
    clustering: np.ndarray
    weighted_clustering: np.ndarray

    def __len__(self):
        return len(self.degree)


@dataclasses.dataclass(frozen=True)
class DegreeStats(object):
    mean: float
    std: float

    @property
    def regular(self):
        return self.std == 0.0


@dataclasses.dataclass(frozen=True)
class MeanMetrics(object):
    degree: float
    strength: float
    disparity: float


@dataclasses.dataclass(frozen=True)
class ProfileExtrema(object):
    """1-based positions of the interior maxima and minima."""
    maxima: tuple
    minima: tuple

    @property
    def n_maxima(self):
        return len(self.maxima)

    @property
    def n_minima(self):
        return len(self.minima)


def _triangle_sums(matrix):
    return ((matrix @ matrix) * matrix).sum(axis=1)


def _pair_counts(degree):
    return degree * (degree - 1)


def node_metrics(net):
    a = net.adjacency.astype(float)
    omega = net.weights
    degree = net.adjacency.sum(axis=1)
    strength = omega.sum(axis=1)

    with np.errstate(divide='ignore', invalid='ignore'):
        disparity = np.where(strength > 0,
                             (omega * omega).sum(axis=1) / strength ** 2,
                             np.nan)

    pairs = _pair_counts(degree).astype(float)
    connected = degree >= 2
    clustering = np.zeros(net.n)
    weighted = np.zeros(net.n)
    if connected.any():
        clustering[connected] = (_triangle_sums(a)[connected] /
                                 pairs[connected])
        scale = omega.max()
        cubic = np.cbrt(omega)
        weighted[connected] = (_triangle_sums(cubic)[connected] /
                               (pairs[connected] * scale))

    return NodeMetrics(degree=degree, strength=strength, disparity=disparity,
                       clustering=clustering, weighted_clustering=weighted)


def degree_stats(net):
    degree = net.adjacency.sum(axis=1).astype(float)
    if not len(degree):
        return DegreeStats(mean=0.0, std=0.0)
    return DegreeStats(mean=float(np.mean(degree)),
                       std=float(np.std(degree)))


def mean_node_metrics(net, metrics=None):
    """Network averages; nodes with undefined disparity are skipped."""
    metrics = metrics or node_metrics(net)
    defined = ~np.isnan(metrics.disparity)
    disparity = (float(np.mean(metrics.disparity[defined]))
                 if defined.any() else float('nan'))
    return MeanMetrics(degree=float(np.mean(metrics.degree)),
                       strength=float(np.mean(metrics.strength)),
                       disparity=disparity)


def concurrence_by_length(net):
    """Mean link weight per link length l = |i - j|, links only."""
    means = collections.OrderedDict()
    for length in range(1, net.n):
        linked = np.diagonal(net.adjacency, offset=length).astype(bool)
        if linked.any():
            weights = np.diagonal(net.weights, offset=length)[linked]
            means[length] = float(np.mean(weights))
    return means


def _quantize(series, rtol):
    scale = float(np.max(np.abs(series))) * rtol
    if scale == 0.0:
        return np.zeros_like(series)
    return np.round(series / scale) * scale


def profile_extrema(series, rtol=PROFILE_RTOL, prominence=None):
    """Interior local maxima and minima of a per-node profile.

    A plateau of equal values flanked by strictly smaller (larger) values
    is one maximum (minimum) at its middle sample. ``prominence`` is a
    fraction of the profile's range; extrema standing out by less are
    ripples and are not counted.
    """
    series = np.asarray(series, dtype=float)
    if series.ndim != 1 or len(series) < 3:
        raise exception.InsufficientData(
            reason="profile needs at least 3 values")
    if not np.all(np.isfinite(series)):
        raise exception.Invalid("Profile contains undefined values.")
    levels = _quantize(series, rtol)
    if prominence is not None:
        prominence = prominence * float(np.ptp(levels))
    maxima, _ = signal.find_peaks(levels, prominence=prominence)
    minima, _ = signal.find_peaks(-levels, prominence=prominence)
    return ProfileExtrema(maxima=tuple(int(i) + 1 for i in maxima),
                          minima=tuple(int(i) + 1 for i in minima))


def bulk_edge_disparity_contrast(net, metrics=None):
    """Mean Y over the central third minus mean Y over the outer sixths."""
    metrics = metrics or node_metrics(net)
    n = net.n
    position = np.arange(n)
    bulk = (position >= n / 3.0) & (position < 2.0 * n / 3.0)
    edge = (position < n / 6.0) | (position >= 5.0 * n / 6.0)
    y = metrics.disparity
    bulk, edge = y[bulk & ~np.isnan(y)], y[edge & ~np.isnan(y)]
    if not len(bulk) or not len(edge):
        return float('nan')
    return float(np.mean(bulk) - np.mean(edge))
