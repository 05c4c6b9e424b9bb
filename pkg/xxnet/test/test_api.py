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

import mock
import numpy as np

from xxnet.api import api
from xxnet import exception
from xxnet.test import base
from xxnet.test import fake


class ResolveSectorTest(base.TestCase):
    def test_sector_given(self):
        self.assertEqual(3, api.resolve_sector(10, k=3))

    def test_field_given(self):
        self.assertEqual(0, api.resolve_sector(20, b=1.2))
        self.assertEqual(10, api.resolve_sector(20, b=0.0001))
        self.assertEqual(20, api.resolve_sector(20, b=-1.5))

    def test_crossing_rejected(self):
        e = self.assertRaisesXX(exception.DegenerateField,
                                api.resolve_sector, 20, b=0.5)
        self.assertEqual(7, e.kwargs['k'])

    def test_exactly_one(self):
        self.assertRaises(exception.Invalid, api.resolve_sector, 10)
        self.assertRaises(exception.Invalid, api.resolve_sector, 10,
                          k=2, b=0.3)

    def test_bad_values(self):
        self.assertRaises(exception.InvalidSector, api.resolve_sector, 10,
                          k=11)
        self.assertRaises(exception.InvalidChainSize, api.resolve_sector, 0,
                          k=0)


class NetworkGetTest(base.TestCase):
    def test_memoized(self):
        self.assertIs(api.network_get(16, 4), api.network_get(16, 4))

    def test_tau_from_config(self):
        self.flags(tau=0.05)
        net = api.network_get(16, 4)
        self.assertEqual(0.05, net.tau)
        self.assertTrue(net.weights[net.weights > 0].min() > 0.05)

    def test_explicit_tau(self):
        self.flags(tau=0.05)
        self.assertEqual(1e-3, api.network_get(16, 4, tau=1e-3).tau)


class RangeTest(base.TestCase):
    def test_k_range(self):
        self.assertEqual(range(0, 11), api.k_range(10))
        self.assertEqual(range(2, 6), api.k_range(10, 2, 5))
        for bounds in ((5, 2), (-1, 3), (0, 11)):
            self.assertRaises(exception.InvalidRange, api.k_range, 10,
                              *bounds)

    def test_n_range(self):
        self.assertEqual(range(5, 9), api.n_range(5, 8))
        self.assertRaises(exception.InvalidRange, api.n_range, 0, 4)
        self.assertRaises(exception.InvalidRange, api.n_range, 6, 4)


class AnalysisGetTest(base.TestCase):
    def test_communities_use_sweep_limit(self):
        self.flags(max_sweeps=1)
        self.assertRaises(exception.LabelPropagationNotConverged,
                          api.communities_get, 12, 3)

    def test_communities(self):
        labeling, census = api.communities_get(12, 1)
        self.assertEqual(12, len(labeling))
        self.assertGreaterEqual(census.n_c, 1)

    def test_scan_uses_workers(self):
        self.flags(workers=2)
        series = api.scan_get(10, api.k_range(10, 0, 3))
        self.assertEqual([0, 1, 2, 3], series.ks)

    def test_transitions_strict(self):
        series = fake.scan_series()
        self.assertRaises(exception.PeaksNotFound, api.transitions_get,
                          series, 5)
        self.assertIsNone(api.transitions_get(series, 5, strict=False))
        self.assertEqual(2, len(api.transitions_get(series, 2)))

    def test_profile_maxima(self):
        metrics = mock.Mock(strength=np.array([0.0, 1.0, 0.0, 1.0, 0.0]),
                            disparity=np.array([1.0, np.nan, 0.5, 1.0]))
        self.assertEqual({'strength': 2, 'disparity': None},
                         api.profile_maxima_get(metrics))

    def test_oracle_check(self):
        report = api.oracle_check(4)
        self.assertTrue(report.passed)
        self.assertEqual(14, len(report.sectors))

    def test_oracle_cap(self):
        self.flags(oracle_cap=10)
        self.assertRaises(exception.StateSizeExceeded, api.oracle_check, 6)

    def test_crossings(self):
        crossings = api.crossings_list(1)
        self.assertEqual(1, len(crossings))
        self.assertAlmostEqual(0.0, crossings[0], delta=1e-15)
