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
Spectrum of the open XX chain in a transverse field.

H = -sum_i [ (X_i X_{i+1} + Y_i Y_{i+1}) / 2 + B Z_i ], J = 1. The ground
state for B_{k+1} < B < B_k lies in the sector with k flipped spins, where
B_k = cos(k pi / (N + 1)).
"""

import dataclasses
import math

import numpy as np
from oslo_log import log as logging

from xxnet import exception


LOG = logging.getLogger(__name__)

# Fields closer than this to a crossing are treated as sitting on it.
CROSSING_TOLERANCE = 1e-12


@dataclasses.dataclass(frozen=True)
class ChainSpec(object):
    n: int
    b: float

    def __post_init__(self):
        validate_size(self.n)
        if not math.isfinite(self.b):
            raise exception.Invalid(
                "Magnetic field must be finite, got %s." % self.b)

    @property
    def sector(self):
        return sector_for_field(self.n, self.b)


def validate_size(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise exception.InvalidChainSize(n=n)


def validate_sector(n, k):
    validate_size(n)
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) \
            or not 0 <= k <= n:
        raise exception.InvalidSector(n=n, k=k)


def crossing_field(n, k):
    """B_k = cos(k pi / (N + 1)); B_0 = 1 and B_{N+1} = -1."""
    return math.cos(k * math.pi / (n + 1))


def level_crossing_fields(n):
    validate_size(n)
    return [crossing_field(n, k) for k in range(1, n + 1)]


def sector_for_field(n, b, allow_crossing=False):
    """Sector index k of the ground state at field ``b``.

    A field sitting on a crossing B_k is rejected unless
    ``allow_crossing`` is set, in which case the floor rule
    k = floor((N + 1) arccos(B) / pi) picks k.
    """
    validate_size(n)
    if not math.isfinite(b):
        raise exception.Invalid(
            "Magnetic field must be finite, got %s." % b)
    if b > 1.0:
        return 0
    if b < -1.0:
        return n

    x = (n + 1) * math.acos(b) / math.pi
    nearest = int(round(x))
    if 1 <= nearest <= n and \
            abs(b - crossing_field(n, nearest)) <= CROSSING_TOLERANCE:
        if not allow_crossing:
            raise exception.DegenerateField(n=n, b=b, k=nearest)
        return nearest
    return min(n, int(math.floor(x)))


def sector_midpoint(n, k):
    validate_sector(n, k)
    return 0.5 * (crossing_field(n, k) + crossing_field(n, k + 1))


def ground_energy(n, k, b):
    validate_sector(n, k)
    modes = np.arange(1, k + 1)
    kinetic = -2.0 * math.fsum(np.cos(np.pi * modes / (n + 1)))
    return -(n - 2 * k) * b + kinetic
