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
Self-similarity of the networks under N -> N + p.

When the mean community size N / k approaches a rational p / q the
central structure of the chain repeats every p added spins. The sector
for a field follows k = floor((N + 1) arccos(B) / pi), crossings included.
"""

import dataclasses
import fractions
import math

import numpy as np
from oslo_log import log as logging

from xxnet import conf
from xxnet import exception
from xxnet.analysis import scan
from xxnet.metrics import local
from xxnet.network import network as xx_network
from xxnet.solver import chain


LOG = logging.getLogger(__name__)

PERIOD_RTOL = 1e-3


@dataclasses.dataclass(frozen=True, eq=False)
class CentralProfile(object):
    """Weighted clustering of the central spins of one chain.

    ``offsets`` are positions relative to the chain centre (N + 1) / 2,
    half-integers for even N; ``full`` is the whole per-site profile.
    """
    n: int
    k: int
    sites: np.ndarray
    offsets: np.ndarray
    values: np.ndarray
    full: np.ndarray

    @property
    def mean(self):
        return float(np.mean(self.values))


@dataclasses.dataclass(frozen=True)
class Alignment(object):
    shift: int
    deviation: float
    compared: int


@dataclasses.dataclass(frozen=True)
class PeriodPrediction(object):
    mean_size: fractions.Fraction
    p: int
    q: int
    fraction: fractions.Fraction
    group_size: int

    @property
    def f(self):
        return float(self.fraction)

    @property
    def lower_size(self):
        return self.p // self.q

    @property
    def field(self):
        """Field whose sector fills k / (N + 1) = q / p."""
        return math.cos(math.pi * self.q / self.p)


def _validate_field(b):
    if not 0.0 < b < 1.0:
        raise exception.Invalid(
            "Profiles need a field strictly between 0 and 1, got %s." % b)


def clustering_profile(n, b, n_center, tau=conf.DEFAULT_TAU):
    _validate_field(b)
    if n_center < 1 or n_center > n:
        raise exception.InvalidRange(
            reason="n_center must lie in 1..%s" % n)
    k = chain.sector_for_field(n, b, allow_crossing=True)
    net = xx_network.build_network(n, k, tau=tau)
    full = local.node_metrics(net).weighted_clustering

    sites = np.arange(1, n + 1)
    offsets = sites - 0.5 * (n + 1)
    central = np.abs(offsets) <= 0.5 * n_center
    return CentralProfile(n=n, k=k, sites=sites[central],
                          offsets=offsets[central], values=full[central],
                          full=full)


def align_profiles(a, b, max_shift=3):
    """Best integer site shift of ``b`` onto the central window of ``a``.

    Shifts are tried around the centre difference; each shift is scored
    by the largest deviation over the sites both profiles cover.
    """
    base = (b.n - a.n) // 2
    best = None
    for shift in range(base - max_shift, base + max_shift + 1):
        target = a.sites + shift
        inside = (target >= 1) & (target <= b.n)
        if not inside.any():
            continue
        deviation = float(np.max(np.abs(
            a.values[inside] - b.full[target[inside] - 1])))
        candidate = Alignment(shift=shift, deviation=deviation,
                              compared=int(inside.sum()))
        if best is None or (deviation, abs(shift - base)) < \
                (best.deviation, abs(best.shift - base)):
            best = candidate
    if best is None:
        raise exception.InsufficientData(reason="profiles do not overlap")
    return best


def _series_job(args):
    n, b, n_center, tau = args
    profile = clustering_profile(n, b, n_center, tau=tau)
    return n, profile.k, profile.mean


def clustering_series(n_range, b, n_center, tau=conf.DEFAULT_TAU,
                      workers=1):
    """Mean central weighted clustering for every N, as (N, k, mean)."""
    _validate_field(b)
    sizes = [int(n) for n in n_range]
    LOG.info("Clustering series at B=%(b)r over %(count)s sizes",
             {'b': b, 'count': len(sizes)})
    return scan.parallel_map(_series_job,
                             [(n, b, n_center, tau) for n in sizes],
                             workers=workers)


def as_fraction(value):
    if isinstance(value, fractions.Fraction):
        result = value
    elif isinstance(value, float):
        if not math.isfinite(value):
            raise exception.NotRational(value=value)
        result = fractions.Fraction(repr(value))
    else:
        try:
            result = fractions.Fraction(value)
        except (TypeError, ValueError, ZeroDivisionError):
            raise exception.NotRational(value=value)
    if result <= 1:
        raise exception.NotRational(value=value)
    return result


def period_prediction(mean_size):
    """Predicted period of N for a rational mean community size p / q.

    Floats are read through their shortest decimal form, so 3.8 is 19/5.
    The fraction f of communities of the larger size is (p mod q) / q and
    the smallest group with the average structure has S = p spins.
    """
    size = as_fraction(mean_size)
    p, q = size.numerator, size.denominator
    return PeriodPrediction(mean_size=size, p=p, q=q,
                            fraction=fractions.Fraction(p % q, q),
                            group_size=p)


def detect_period(values, rtol=PERIOD_RTOL, max_period=None):
    """Smallest shift under which the series matches itself.

    Only periods that fit at least three times are tested. Returns None
    when no period is found.
    """
    values = np.asarray(values, dtype=float)
    if values.ndim != 1 or len(values) < 3:
        raise exception.InsufficientData(
            reason="period detection needs at least 3 values")
    limit = len(values) // 3
    if max_period is not None:
        limit = min(limit, int(max_period))
    for period in range(1, limit + 1):
        if np.allclose(values[period:], values[:-period], rtol=rtol,
                       atol=0.0):
            return period
    return None
