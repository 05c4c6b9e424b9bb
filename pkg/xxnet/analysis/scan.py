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
Scans of network observables over the sectors of one chain.

Each scan point is independent; with ``workers > 1`` the points are
farmed out to a process pool and collected in input order, so the result
does not depend on the number of workers.
"""

import dataclasses
import math
import multiprocessing

import numpy as np
from oslo_log import log as logging

from xxnet import conf
from xxnet import exception
from xxnet.communities import lpa
from xxnet.metrics import distribution
from xxnet.metrics import local
from xxnet.network import network as xx_network
from xxnet.solver import chain


LOG = logging.getLogger(__name__)

WEIGHTED = 'weighted'
UNWEIGHTED = 'unweighted'


@dataclasses.dataclass(frozen=True)
class ScanOptions(object):
    tau: float = conf.DEFAULT_TAU
    community_modes: tuple = ()
    wasserstein: bool = False
    max_sweeps: int = conf.DEFAULT_MAX_SWEEPS
    include_isolated: bool = False
    workers: int = 1


@dataclasses.dataclass(frozen=True)
class ScanRecord(object):
    k: int
    b_mid: float
    mean_degree: float
    degree_std: float
    mean_strength: float
    mean_disparity: float
    n_c_weighted: float = math.nan
    n_c_unweighted: float = math.nan
    mean_wasserstein: float = math.nan
    wasserstein_excluded: float = math.nan


@dataclasses.dataclass(frozen=True)
class ScanSeries(object):
    n: int
    records: tuple
    tau: float = conf.DEFAULT_TAU

    def __len__(self):
        return len(self.records)

    def column(self, name):
        return np.array([getattr(r, name) for r in self.records],
                        dtype=float)

    @property
    def ks(self):
        return [r.k for r in self.records]


def parallel_map(func, items, workers=1):
    """``map`` over a process pool, results in input order."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with multiprocessing.Pool(processes=min(workers, len(items))) as pool:
        return pool.map(func, items, chunksize=1)


def _n_communities(net, weighted, options):
    labeling = lpa.lpa_detect(net, weighted=weighted,
                              max_sweeps=options.max_sweeps)
    census = lpa.community_census(
        labeling, include_isolated=options.include_isolated)
    return census.n_c


def _mean_wasserstein(net):
    try:
        summary = distribution.mean_pairwise_wasserstein(net)
    except exception.InsufficientData:
        return {'mean_wasserstein': math.nan, 'wasserstein_excluded': net.n}
    return {'mean_wasserstein': summary.mean,
            'wasserstein_excluded': len(summary.excluded)}


def scan_point(args):
    n, k, options = args
    net = xx_network.build_network(n, k, tau=options.tau)
    metrics = local.node_metrics(net)
    means = local.mean_node_metrics(net, metrics)
    stats = local.degree_stats(net)
    extra = {}
    if WEIGHTED in options.community_modes:
        extra['n_c_weighted'] = _n_communities(net, True, options)
    if UNWEIGHTED in options.community_modes:
        extra['n_c_unweighted'] = _n_communities(net, False, options)
    if options.wasserstein:
        extra.update(_mean_wasserstein(net))
    LOG.debug("Scanned N=%(n)s k=%(k)s", {'n': n, 'k': k})
    return ScanRecord(k=k, b_mid=chain.sector_midpoint(n, k),
                      mean_degree=means.degree, degree_std=stats.std,
                      mean_strength=means.strength,
                      mean_disparity=means.disparity, **extra)


def validate_k_range(n, k_range):
    ks = [int(k) for k in k_range]
    if not ks:
        raise exception.InvalidRange(reason="empty k range")
    if any(b <= a for a, b in zip(ks, ks[1:])):
        raise exception.InvalidRange(reason="k values must increase")
    for k in (ks[0], ks[-1]):
        chain.validate_sector(n, k)
    return ks


def scan_over_k(n, k_range, options=None):
    options = options or ScanOptions()
    chain.validate_size(n)
    ks = validate_k_range(n, k_range)
    LOG.info("Scanning N=%(n)s over %(count)s sectors (k=%(lo)s..%(hi)s)",
             {'n': n, 'count': len(ks), 'lo': ks[0], 'hi': ks[-1]})
    records = parallel_map(scan_point, [(n, k, options) for k in ks],
                           workers=options.workers)
    return ScanSeries(n=n, records=tuple(records), tau=options.tau)


def central_diff(series):
    """Second order central differences, one-sided at the ends."""
    series = np.asarray(series, dtype=float)
    if series.ndim != 1 or len(series) < 3:
        raise exception.InsufficientData(
            reason="central differences need at least 3 values")
    return np.gradient(series)
