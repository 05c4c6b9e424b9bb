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
Topological instabilities: peaks of the mean-degree derivative and the
finite-size behaviour of the networks at and between them.
"""

import dataclasses
import math

import numpy as np
from oslo_log import log as logging
from scipy import signal

from xxnet import conf
from xxnet import exception
from xxnet.analysis import scan
from xxnet.metrics import local
from xxnet.network import network as xx_network
from xxnet.solver import chain


LOG = logging.getLogger(__name__)

# Neighbouring sectors closer than this cannot both be peaks.
PEAK_DISTANCE = 2

# One more sector of separation for every PEAK_SPACING spins.
PEAK_SPACING = 100

# Smallest |d<d>/dk| prominence that counts as a transition.
PEAK_PROMINENCE = 0.05

# Sector 1 sits on the saturation jump.
MIN_PEAK_K = 2

MIN_SCALING_SIZES = 4


@dataclasses.dataclass(frozen=True)
class Transition(object):
    m: int
    k_peak: int
    b: float
    height: float


@dataclasses.dataclass(frozen=True)
class TransitionSet(object):
    """Peaks ordered by increasing field, m = 1 at the smallest field."""
    n: int
    transitions: tuple

    def __len__(self):
        return len(self.transitions)

    def __iter__(self):
        return iter(self.transitions)

    @property
    def fields(self):
        return [t.b for t in self.transitions]


@dataclasses.dataclass(frozen=True)
class ScalingFit(object):
    exponent: float
    amplitude: float


@dataclasses.dataclass(frozen=True)
class SizePoint(object):
    n: int
    k: int
    value: float


def degree_derivative(series):
    """|central difference| of <d> against k."""
    ks = np.asarray(series.ks)
    if len(ks) > 1 and np.any(np.diff(ks) != 1):
        raise exception.InvalidRange(
            reason="transition search needs consecutive k values")
    return np.abs(scan.central_diff(series.column('mean_degree')))


def find_transitions(series, n_peaks, prominence=PEAK_PROMINENCE):
    """The n_peaks right-most peaks of |d<d>/dk| with 2 <= k <= N / 2.

    Sectors above N / 2 mirror those below it, and k = 1 holds the
    saturation jump next to B = 1. Peaks closer than
    max(PEAK_DISTANCE, N // PEAK_SPACING) sectors are merged and peaks
    less prominent than ``prominence`` are plateau ripples.
    """
    if n_peaks < 1:
        raise exception.InvalidRange(reason="n_peaks must be positive")
    delta = degree_derivative(series)
    distance = max(PEAK_DISTANCE, series.n // PEAK_SPACING)
    peaks, _ = signal.find_peaks(delta, distance=distance,
                                 prominence=prominence)
    ks = series.ks
    peaks = [int(p) for p in peaks
             if MIN_PEAK_K <= ks[p] <= series.n / 2.0 and delta[p] > 0]
    if len(peaks) < n_peaks:
        raise exception.PeaksNotFound(wanted=n_peaks, found=len(peaks))

    rightmost = sorted(peaks, key=lambda p: -ks[p])[:n_peaks]
    chosen = sorted(rightmost, key=lambda p: series.records[p].b_mid)
    transitions = tuple(
        Transition(m=m, k_peak=series.records[p].k,
                   b=series.records[p].b_mid, height=float(delta[p]))
        for m, p in enumerate(chosen, start=1))
    LOG.info("Found transitions for N=%(n)s at B=%(fields)s",
             {'n': series.n, 'fields': [t.b for t in transitions]})
    return TransitionSet(n=series.n, transitions=transitions)


def peak_and_midpoint_fields(transitions):
    """Peak fields and the midpoints between consecutive peaks."""
    fields = [t.b for t in transitions]
    midpoints = [0.5 * (a + b) for a, b in zip(fields, fields[1:])]
    return fields, midpoints


def scaling_exponent(sizes, values):
    """Least-squares slope of log(value) against log(N)."""
    sizes = np.asarray(sizes, dtype=float)
    values = np.asarray(values, dtype=float)
    if len(sizes) != len(values):
        raise exception.Invalid("sizes and values differ in length.")
    if len(sizes) < MIN_SCALING_SIZES:
        raise exception.InsufficientData(
            reason="scaling fit needs at least %s sizes" % MIN_SCALING_SIZES)
    if np.any(sizes <= 0) or np.any(values <= 0):
        raise exception.NonPositiveValues()
    slope, intercept = np.polyfit(np.log(sizes), np.log(values), 1)
    return ScalingFit(exponent=float(slope),
                      amplitude=float(math.exp(intercept)))


def _degree_std_job(args):
    n, b, tau = args
    k = chain.sector_for_field(n, b, allow_crossing=True)
    net = xx_network.build_network(n, k, tau=tau)
    return SizePoint(n=n, k=k, value=local.degree_stats(net).std)


def degree_heterogeneity_at_field(sizes, b, tau=conf.DEFAULT_TAU,
                                  workers=1):
    """sigma(d) per N with k = floor((N + 1) arccos(B) / pi)."""
    return scan.parallel_map(_degree_std_job,
                             [(int(n), b, tau) for n in sizes],
                             workers=workers)


def _link_length_job(args):
    n, b, lengths, tau = args
    k = chain.sector_for_field(n, b, allow_crossing=True)
    means = local.concurrence_by_length(
        xx_network.build_network(n, k, tau=tau))
    return n, k, [means.get(length, math.nan) for length in lengths]


def link_length_scaling(sizes, b, lengths, tau=conf.DEFAULT_TAU,
                        workers=1):
    """Mean link concurrence for each requested length, per N.

    :returns: list of ``(N, k, [<C>_l for l in lengths])``, NaN where no
        link of that length exists.
    """
    lengths = [int(length) for length in lengths]
    if not lengths or min(lengths) < 1:
        raise exception.InvalidRange(reason="link lengths must be >= 1")
    return scan.parallel_map(_link_length_job,
                             [(int(n), b, lengths, tau) for n in sizes],
                             workers=workers)
