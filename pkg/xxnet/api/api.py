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
Entry points used by the command line.

Fields are turned into sectors here, once; everything below works on k.
Tunables come from the global configuration.
"""

import functools

from oslo_config import cfg
from oslo_log import log as logging

from xxnet.analysis import periodicity
from xxnet.analysis import scan
from xxnet.analysis import transitions
from xxnet.communities import lpa
from xxnet import conf  # noqa
from xxnet import exception
from xxnet.metrics import local
from xxnet.network import network as xx_network
from xxnet.oracle import certify
from xxnet.solver import chain


LOG = logging.getLogger(__name__)

CONF = cfg.CONF


def resolve_sector(n, k=None, b=None):
    """Sector for exactly one of ``k`` or ``b``."""
    chain.validate_size(n)
    if (k is None) == (b is None):
        raise exception.Invalid("Exactly one of k or B must be given.")
    if b is not None:
        k = chain.sector_for_field(n, b)
        LOG.debug("Field B=%(b)r selects sector k=%(k)s of N=%(n)s",
                  {'b': b, 'k': k, 'n': n})
    chain.validate_sector(n, k)
    return k


def _tau(tau):
    return CONF.tau if tau is None else tau


@functools.lru_cache(maxsize=16)
def _network(n, k, tau):
    return xx_network.build_network(n, k, tau=tau)


def network_get(n, k, tau=None):
    return _network(n, k, _tau(tau))


def crossings_list(n):
    return chain.level_crossing_fields(n)


def node_metrics_get(n, k, tau=None):
    return local.node_metrics(network_get(n, k, tau))


def profile_maxima_get(metrics):
    """Maxima counts of the strength and disparity profiles.

    A profile that is too short or undefined somewhere counts as None.
    """
    counts = {}
    for name, prominence in (('strength', None),
                             ('disparity', local.DISPARITY_PROMINENCE)):
        try:
            counts[name] = local.profile_extrema(
                getattr(metrics, name), prominence=prominence).n_maxima
        except (exception.Invalid, exception.InsufficientData):
            counts[name] = None
    return counts


def communities_get(n, k, weighted=True, include_isolated=False,
                    tau=None):
    labeling = lpa.lpa_detect(network_get(n, k, tau), weighted=weighted,
                              max_sweeps=CONF.max_sweeps)
    census = lpa.community_census(labeling,
                                  include_isolated=include_isolated)
    return labeling, census


def k_range(n, k_min=None, k_max=None):
    k_min = 0 if k_min is None else k_min
    k_max = n if k_max is None else k_max
    if not 0 <= k_min <= k_max <= n:
        raise exception.InvalidRange(
            reason="need 0 <= k_min <= k_max <= %s, got %s..%s"
            % (n, k_min, k_max))
    return range(k_min, k_max + 1)


def n_range(n_min, n_max):
    if not 1 <= n_min <= n_max:
        raise exception.InvalidRange(
            reason="need 1 <= n_min <= n_max, got %s..%s" % (n_min, n_max))
    return range(n_min, n_max + 1)


def scan_get(n, ks, community_modes=(), wasserstein=False,
             include_isolated=False, tau=None):
    options = scan.ScanOptions(tau=_tau(tau),
                               community_modes=tuple(community_modes),
                               wasserstein=wasserstein,
                               max_sweeps=CONF.max_sweeps,
                               include_isolated=include_isolated,
                               workers=CONF.workers)
    return scan.scan_over_k(n, ks, options)


def transitions_get(series, n_peaks, strict=True):
    """Transition peaks; with ``strict`` unset a shortfall only warns."""
    try:
        return transitions.find_transitions(series, n_peaks)
    except exception.PeaksNotFound as e:
        if strict:
            raise
        LOG.warning("%s", e.msg)
        return None


def profile_get(n, b, n_center, tau=None):
    return periodicity.clustering_profile(n, b, n_center, tau=_tau(tau))


def clustering_series_get(sizes, b, n_center, tau=None):
    return periodicity.clustering_series(sizes, b, n_center, tau=_tau(tau),
                                         workers=CONF.workers)


def degree_heterogeneity_get(sizes, b, tau=None):
    return transitions.degree_heterogeneity_at_field(
        sizes, b, tau=_tau(tau), workers=CONF.workers)


def link_lengths_get(sizes, b, lengths, tau=None):
    return transitions.link_length_scaling(sizes, b, lengths, tau=_tau(tau),
                                           workers=CONF.workers)


def oracle_check(max_n, tolerance=certify.DEFAULT_TOLERANCE, tau=None):
    return certify.certify(max_n, tolerance=tolerance, tau=_tau(tau),
                           cap=CONF.oracle_cap)
