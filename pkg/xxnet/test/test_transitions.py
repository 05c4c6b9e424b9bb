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

import math

from xxnet.analysis import transitions
from xxnet import exception
from xxnet.solver import chain
from xxnet.test import base
from xxnet.test import fake


class FindTransitionsTest(base.TestCase):
    def test_rightmost_peaks(self):
        series = fake.scan_series()
        found = transitions.find_transitions(series, 2)
        self.assertEqual([1, 2], [t.m for t in found])
        self.assertEqual([14, 8], [t.k_peak for t in found])
        self.assertAllClose([0.25, 0.5], [t.height for t in found],
                            atol=1e-12)
        self.assertEqual([chain.sector_midpoint(30, 14),
                          chain.sector_midpoint(30, 8)], found.fields)
        self.assertLess(found.fields[0], found.fields[1])

    def test_position_beats_height(self):
        found = transitions.find_transitions(fake.scan_series(), 1)
        self.assertEqual([14], [t.k_peak for t in found])
        found = transitions.find_transitions(fake.scan_series(), 3)
        self.assertEqual([14, 8, 4], [t.k_peak for t in found])

    def test_mirror_and_saturation_ignored(self):
        e = self.assertRaises(exception.PeaksNotFound,
                              transitions.find_transitions,
                              fake.scan_series(), 4)
        self.assertEqual(3, e.kwargs['found'])

    def test_ripples_need_prominence(self):
        found = transitions.find_transitions(fake.scan_series(), 2,
                                             prominence=0.005)
        self.assertEqual([14, 11], [t.k_peak for t in found])

    def test_close_peaks_merge_on_long_chains(self):
        increments = [0.0] * 400
        increments[100] = increments[101] = 1.0
        increments[103] = increments[104] = 0.8
        series = fake.scan_series(increments, ks=range(201))
        found = transitions.find_transitions(series, 1)
        self.assertEqual([101], [t.k_peak for t in found])
        self.assertRaises(exception.PeaksNotFound,
                          transitions.find_transitions, series, 2)

    def test_needs_consecutive_sectors(self):
        series = fake.scan_series(ks=[0, 1, 2, 4, 5])
        self.assertRaises(exception.InvalidRange,
                          transitions.find_transitions, series, 1)

    def test_midpoint_fields(self):
        fields, midpoints = transitions.peak_and_midpoint_fields(
            transitions.find_transitions(fake.scan_series(), 2))
        self.assertEqual(2, len(fields))
        self.assertEqual([0.5 * (fields[0] + fields[1])], midpoints)


class ScalingExponentTest(base.TestCase):
    def test_inverse_square_root(self):
        sizes = [120, 240, 480, 960]
        fit = transitions.scaling_exponent(
            sizes, [3.0 / math.sqrt(n) for n in sizes])
        self.assertAlmostEqual(-0.5, fit.exponent, delta=1e-12)
        self.assertAlmostEqual(3.0, fit.amplitude, delta=1e-10)

    def test_constant(self):
        fit = transitions.scaling_exponent([10, 20, 30, 40], [0.7] * 4)
        self.assertAlmostEqual(0.0, fit.exponent, delta=1e-12)

    def test_errors(self):
        self.assertRaises(exception.InsufficientData,
                          transitions.scaling_exponent, [1, 2, 3],
                          [1, 1, 1])
        self.assertRaises(exception.NonPositiveValues,
                          transitions.scaling_exponent, [1, 2, 3, 4],
                          [1, 0, 1, 1])
        self.assertRaises(exception.Invalid,
                          transitions.scaling_exponent, [1, 2, 3, 4],
                          [1, 1, 1])


class SizeSeriesTest(base.TestCase):
    def test_degree_heterogeneity_sectors(self):
        points = transitions.degree_heterogeneity_at_field([20, 30], 0.5)
        self.assertEqual([(20, 7), (30, 10)],
                         [(p.n, p.k) for p in points])
        self.assertTrue(all(p.value >= 0 for p in points))

    def test_link_lengths(self):
        (n, k, means), = transitions.link_length_scaling([15], 0.9, [1, 100])
        self.assertEqual((15, 2), (n, k))
        self.assertGreater(means[0], 0.0)
        self.assertTrue(math.isnan(means[1]))

    def test_link_lengths_validated(self):
        self.assertRaises(exception.InvalidRange,
                          transitions.link_length_scaling, [15], 0.9, [0])
