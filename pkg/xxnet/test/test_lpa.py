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

import numpy as np

from xxnet import exception
from xxnet.communities import coloring
from xxnet.communities import lpa
from xxnet.network import network as xx_network
from xxnet.test import base
from xxnet.test import fake


class LabelPropagationTest(base.TestCase):
    def test_path_fixed_point(self):
        labeling = lpa.lpa_detect(fake.path(4), weighted=False)
        self.assertEqual([2, 2, 4, 4], labeling.labels.tolist())
        self.assertEqual(2, labeling.sweeps)
        self.assertFalse(labeling.weighted)

    def test_path_weighted_ties(self):
        labeling = lpa.lpa_detect(fake.path(4), weighted=True)
        self.assertEqual([2, 2, 4, 4], labeling.labels.tolist())

    def test_two_triangles(self):
        labeling = lpa.lpa_detect(fake.two_triangles())
        self.assertEqual([3, 3, 3, 6, 6, 6], labeling.labels.tolist())
        self.assertEqual({3: [1, 2, 3], 6: [4, 5, 6]},
                         dict(labeling.communities()))

    def test_weights_break_ties(self):
        weights = np.zeros((3, 3))
        weights[0, 1] = weights[1, 0] = 0.9
        weights[1, 2] = weights[2, 1] = 0.1
        labeling = lpa.lpa_detect(xx_network.WeightedNetwork(weights))
        self.assertEqual(labeling.labels[0], labeling.labels[1])

    def test_complete_graph(self):
        labeling = lpa.lpa_detect(fake.complete(5), weighted=False)
        self.assertEqual([5] * 5, labeling.labels.tolist())

    def test_isolated_nodes_keep_labels(self):
        labeling = lpa.lpa_detect(fake.empty(3))
        self.assertEqual([1, 2, 3], labeling.labels.tolist())
        self.assertTrue(labeling.isolated.all())
        self.assertEqual({}, dict(labeling.communities()))
        self.assertEqual(3, len(labeling.communities(include_isolated=True)))

    def test_deterministic(self):
        net = xx_network.build_network(30, 7)
        first = lpa.lpa_detect(net)
        second = lpa.lpa_detect(net)
        self.assertTrue(np.array_equal(first.labels, second.labels))
        self.assertEqual(first.sweeps, second.sweeps)

    def test_oscillation_detected(self):
        single_class = coloring.Coloring(colors=np.array([0, 0]),
                                         classes=(np.array([0, 1]),))
        net = fake.path(2)
        e = self.assertRaises(exception.LabelPropagationNotConverged,
                              lpa.lpa_detect, net, coloring=single_class)
        self.assertEqual(2, e.kwargs['sweeps'])
        self.assertEqual([1, 2], e.kwargs['nodes'])

    def test_sweep_limit(self):
        self.assertRaises(exception.LabelPropagationNotConverged,
                          lpa.lpa_detect, fake.path(4), weighted=False,
                          max_sweeps=1)


class CensusTest(base.TestCase):
    def test_two_triangles(self):
        census = lpa.community_census(lpa.lpa_detect(fake.two_triangles()))
        self.assertEqual(2, census.n_c)
        self.assertEqual((3, 3), census.sizes)
        self.assertEqual(3.0, census.mean_size)
        self.assertEqual({3: 2}, dict(census.histogram))
        self.assertEqual(0, census.isolated)
        self.assertEqual({'n_c': 2, 'sizes': [3, 3], 'mean_size': 3.0,
                          'histogram': {'3': 2}, 'isolated': 0},
                         census.to_dict())

    def test_single_community(self):
        census = lpa.community_census(lpa.lpa_detect(fake.complete(5)))
        self.assertEqual(1, census.n_c)
        self.assertEqual(5.0, census.mean_size)

    def test_isolated_flag(self):
        weights = np.zeros((5, 5))
        weights[0, 1] = weights[1, 0] = 0.4
        labeling = lpa.lpa_detect(xx_network.WeightedNetwork(weights))
        census = lpa.community_census(labeling)
        self.assertEqual(1, census.n_c)
        self.assertEqual(3, census.isolated)
        with_isolated = lpa.community_census(labeling, include_isolated=True)
        self.assertEqual(4, with_isolated.n_c)
        self.assertEqual(1.25, with_isolated.mean_size)

    def test_no_links(self):
        census = lpa.community_census(lpa.lpa_detect(fake.empty(4)))
        self.assertEqual(0, census.n_c)
        self.assertNotEqual(census.mean_size, census.mean_size)
