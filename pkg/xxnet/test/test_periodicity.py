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

import fractions
import math

import numpy as np

from xxnet.analysis import periodicity
from xxnet import exception
from xxnet.test import base


class PeriodPredictionTest(base.TestCase):
    def test_half_integer(self):
        prediction = periodicity.period_prediction(3.5)
        self.assertEqual((7, 2), (prediction.p, prediction.q))
        self.assertEqual(7, prediction.group_size)
        self.assertEqual(0.5, prediction.f)
        self.assertEqual(3, prediction.lower_size)
        self.assertAlmostEqual(0.624, prediction.field, delta=1e-3)

    def test_decimal_sizes(self):
        self.assertEqual(19, periodicity.period_prediction(3.8).p)
        self.assertEqual(31, periodicity.period_prediction(3.1).p)
        self.assertEqual(fractions.Fraction(4, 5),
                         periodicity.period_prediction(3.8).fraction)

    def test_integer(self):
        prediction = periodicity.period_prediction(3)
        self.assertEqual((3, 1), (prediction.p, prediction.q))
        self.assertEqual(0.0, prediction.f)
        self.assertAlmostEqual(0.5, prediction.field, delta=1e-15)

    def test_representation_invariant(self):
        for p, q in ((7, 2), (19, 5), (31, 10)):
            expected = periodicity.period_prediction(fractions.Fraction(p, q))
            for multiple in (2, 3, 7):
                self.assertEqual(expected, periodicity.period_prediction(
                    fractions.Fraction(p * multiple, q * multiple)))
            self.assertEqual(expected, periodicity.period_prediction(
                '%d/%d' % (3 * p, 3 * q)))

    def test_mean_size_identity(self):
        for value in (3.5, 3.8, 3.1, 2.25):
            prediction = periodicity.period_prediction(value)
            lower = prediction.lower_size
            self.assertEqual(prediction.mean_size,
                             lower * (1 - prediction.fraction) +
                             (lower + 1) * prediction.fraction)

    def test_rejects_bad_values(self):
        for value in (math.inf, math.nan, 'abc', 1, 0.5, None):
            self.assertRaises(exception.NotRational,
                              periodicity.period_prediction, value)


class DetectPeriodTest(base.TestCase):
    def test_constant(self):
        self.assertEqual(1, periodicity.detect_period([0.3] * 10))

    def test_sawtooth(self):
        values = np.arange(40) % 5 + 1.0
        self.assertEqual(5, periodicity.detect_period(values))

    def test_tolerance(self):
        values = (np.arange(30) % 7 + 1.0) * (1 + 1e-5 * np.arange(30))
        self.assertEqual(7, periodicity.detect_period(values))
        self.assertIsNone(periodicity.detect_period(values, rtol=1e-7))

    def test_aperiodic(self):
        self.assertIsNone(periodicity.detect_period(np.arange(1.0, 20.0)))

    def test_max_period(self):
        values = np.arange(40) % 5 + 1.0
        self.assertIsNone(periodicity.detect_period(values, max_period=4))

    def test_too_short(self):
        self.assertRaises(exception.InsufficientData,
                          periodicity.detect_period, [1.0, 2.0])


class ClusteringProfileTest(base.TestCase):
    def test_central_window(self):
        profile = periodicity.clustering_profile(20, 0.5, 4)
        self.assertEqual(7, profile.k)
        self.assertEqual([9, 10, 11, 12], profile.sites.tolist())
        self.assertEqual([-1.5, -0.5, 0.5, 1.5], profile.offsets.tolist())
        self.assertEqual(20, len(profile.full))
        self.assertAlmostEqual(np.mean(profile.full[8:12]), profile.mean,
                               delta=1e-15)

    def test_odd_chain(self):
        profile = periodicity.clustering_profile(21, 0.5, 5)
        self.assertEqual([9, 10, 11, 12, 13], profile.sites.tolist())
        self.assertEqual(0.0, profile.offsets[2])

    def test_mirror_symmetric(self):
        profile = periodicity.clustering_profile(31, 0.3, 31)
        self.assertAllClose(profile.full[::-1], profile.full, atol=1e-10)

    def test_rejects_bad_arguments(self):
        for b in (0.0, 1.0, 1.5, -0.2):
            self.assertRaises(exception.Invalid,
                              periodicity.clustering_profile, 20, b, 4)
        self.assertRaises(exception.InvalidRange,
                          periodicity.clustering_profile, 20, 0.5, 21)

    def test_series(self):
        series = periodicity.clustering_series([20, 21], 0.5, 4)
        self.assertEqual([20, 21], [n for n, _k, _mean in series])
        self.assertEqual([7, 7], [k for _n, k, _mean in series])


class AlignProfilesTest(base.TestCase):
    def _profile(self, n, sites, values, full):
        sites = np.asarray(sites)
        return periodicity.CentralProfile(
            n=n, k=1, sites=sites, offsets=sites - 0.5 * (n + 1),
            values=np.asarray(values, dtype=float),
            full=np.asarray(full, dtype=float))

    def test_finds_shift(self):
        full = np.arange(13) * 10.0
        full[6], full[7] = 1.0, 2.0
        a = self._profile(10, [5, 6], [1.0, 2.0], np.zeros(10))
        b = self._profile(13, [6, 7, 8], full[5:8], full)
        alignment = periodicity.align_profiles(a, b)
        self.assertEqual(2, alignment.shift)
        self.assertEqual(0.0, alignment.deviation)
        self.assertEqual(2, alignment.compared)

    def test_self_alignment(self):
        profile = periodicity.clustering_profile(24, 0.5, 6)
        alignment = periodicity.align_profiles(profile, profile)
        self.assertEqual(0, alignment.shift)
        self.assertEqual(0.0, alignment.deviation)
        self.assertEqual(6, alignment.compared)
