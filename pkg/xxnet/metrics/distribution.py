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

"""Rescaled local weight distributions and their 1-D Wasserstein distance."""

import dataclasses
import itertools
import math

import numpy as np
from oslo_log import log as logging
from scipy import stats

from xxnet import exception


LOG = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class RescaledWeights(object):
    """Sorted omega_ij / (s_i / d_i) over the neighbours of node i."""
    node: int
    values: np.ndarray

    def __len__(self):
        return len(self.values)


@dataclasses.dataclass(frozen=True)
class WassersteinSummary(object):
    mean: float
    pairs: int
    excluded: tuple


def rescaled_weight_distribution(net, i):
    """Distribution of 1-based node ``i``."""
    if not 1 <= i <= net.n:
        raise exception.Invalid("Node %s outside 1..%s." % (i, net.n))
    row = net.weights[i - 1][net.adjacency[i - 1].astype(bool)]
    if not len(row) or row.sum() <= 0:
        raise exception.UndefinedDistribution(node=i)
    values = np.sort(row / (row.sum() / len(row)))
    values.setflags(write=False)
    return RescaledWeights(node=i, values=values)


def _values(sample):
    return np.asarray(getattr(sample, 'values', sample), dtype=float)


def wasserstein_1d(a, b):
    """First Wasserstein distance between two empirical samples."""
    a, b = _values(a), _values(b)
    if not a.size or not b.size:
        raise exception.EmptyDistribution()
    return float(stats.wasserstein_distance(a, b))


def mean_pairwise_wasserstein(net):
    """Average distance over all pairs of nodes with a distribution.

    Isolated nodes are left out and reported in ``excluded``; the sum is
    compensated so the result does not depend on evaluation order.
    """
    distributions = []
    excluded = []
    for i in range(1, net.n + 1):
        try:
            distributions.append(rescaled_weight_distribution(net, i))
        except exception.UndefinedDistribution:
            excluded.append(i)
    if excluded:
        LOG.warning("Excluded %(count)s isolated nodes out of %(n)s from "
                    "the pairwise Wasserstein average",
                    {'count': len(excluded), 'n': net.n})
    if len(distributions) < 2:
        raise exception.InsufficientData(
            reason="fewer than two nodes carry a weight distribution")

    distances = [wasserstein_1d(a, b)
                 for a, b in itertools.combinations(distributions, 2)]
    return WassersteinSummary(mean=math.fsum(distances) / len(distances),
                              pairs=len(distances),
                              excluded=tuple(excluded))
