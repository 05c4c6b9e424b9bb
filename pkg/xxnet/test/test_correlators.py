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

import itertools

import mock
import numpy as np

from xxnet import exception
from xxnet.solver import correlators
from xxnet.solver import state as solver_state
from xxnet.test import base


class StringCoherenceTest(base.TestCase):
    def test_empty_sector(self):
        state = solver_state.build_sector_state(8, 0)
        for i, j in itertools.combinations(range(1, 9), 2):
            self.assertEqual(0.0, correlators.string_coherence(state, i, j))

    def test_single_flip_is_mode_product(self):
        state = solver_state.build_sector_state(10, 1)
        s = state.S[:, 0]
        for i, j in itertools.combinations(range(1, 11), 2):
            self.assertAlmostEqual(s[i - 1] * s[j - 1],
                                   correlators.string_coherence(state, i, j),
                                   delta=1e-12)

    def test_adjacent_pair_is_correlation(self):
        for k in range(9):
            state = solver_state.build_sector_state(8, k)
            for i in range(1, 8):
                self.assertAlmostEqual(
                    state.G[i - 1, i],
                    correlators.string_coherence(state, i, i + 1),
                    delta=1e-12)

    def test_string_block_and_overlap_agree(self):
        state = solver_state.build_sector_state(16, 5)
        for i0, j0 in ((0, 3), (2, 8), (5, 11), (1, 15)):
            block = correlators._string_block(state.G, i0, j0 - i0)
            overlap = correlators._string_overlap(state.S, i0, j0)
            bordered = correlators._bordered(state.S, i0, j0, overlap)
            self.assertAlmostEqual(0.5 * np.linalg.det(block),
                                   -np.linalg.det(bordered), delta=1e-12)

    def test_rejects_bad_pairs(self):
        state = solver_state.build_sector_state(6, 2)
        for i, j in ((3, 3), (4, 2), (0, 2), (2, 7)):
            self.assertRaises(exception.InvalidSite,
                              correlators.string_coherence, state, i, j)


class TwoSpinRdmTest(base.TestCase):
    def test_all_up(self):
        state = solver_state.build_sector_state(7, 0)
        rdm = correlators.two_spin_rdm(state, 2, 5)
        self.assertEqual((1.0, 0.0, 0.0, 0.0), rdm.populations)
        self.assertEqual(0.0, rdm.z)

    def test_all_down(self):
        state = solver_state.build_sector_state(7, 7)
        rdm = correlators.two_spin_rdm(state, 1, 7)
        self.assertAllClose([0.0, 0.0, 0.0, 1.0], rdm.populations,
                            atol=1e-12)
        self.assertAlmostEqual(0.0, rdm.z, delta=1e-12)

    def test_invariants(self):
        for n, k in ((12, 5), (13, 1), (13, 12), (20, 10)):
            state = solver_state.build_sector_state(n, k)
            for i, j in itertools.combinations(range(1, n + 1), 2):
                rdm = correlators.two_spin_rdm(state, i, j)
                self.assertGreaterEqual(min(rdm.populations), -1e-12)
                self.assertAlmostEqual(1.0, sum(rdm.populations),
                                       delta=1e-10)
                self.assertGreaterEqual(
                    np.linalg.eigvalsh(rdm.matrix()).min(), -1e-10)
                self.assertLessEqual(
                    abs(rdm.z), np.sqrt(rdm.p_ud * rdm.p_du) + 1e-10)

    def test_matrix_layout(self):
        rdm = correlators.TwoSpinState(i=1, j=2, p_uu=0.1, p_ud=0.2,
                                       p_du=0.3, p_dd=0.4, z=0.05)
        rho = rdm.matrix()
        expected = np.diag([0.1, 0.2, 0.3, 0.4])
        expected[1, 2] = expected[2, 1] = 0.05
        self.assertTrue(np.array_equal(expected, rho))

    def test_concurrence_closed_form(self):
        rdm = correlators.TwoSpinState(i=1, j=2, p_uu=0.0, p_ud=0.5,
                                       p_du=0.5, p_dd=0.0, z=0.5)
        self.assertEqual(1.0, rdm.concurrence())
        rdm = correlators.TwoSpinState(i=1, j=2, p_uu=0.25, p_ud=0.25,
                                       p_du=0.25, p_dd=0.25, z=0.2)
        self.assertEqual(0.0, rdm.concurrence())


class BatchedCoherenceTest(base.TestCase):
    def test_matches_pairwise_evaluation(self):
        for n, k in ((14, 2), (14, 7), (21, 15)):
            state = solver_state.build_sector_state(n, k)
            pairs = list(itertools.combinations(range(n), 2))
            batched = correlators.coherence_pairs(state, pairs)
            single = [correlators.string_coherence(state, i + 1, j + 1)
                      for i, j in pairs]
            self.assertAllClose(single, batched, atol=1e-12)

    def test_empty_pair_list(self):
        state = solver_state.build_sector_state(5, 2)
        self.assertEqual(0, len(correlators.coherence_pairs(state, [])))

    def test_concurrence_matrix_symmetric(self):
        state = solver_state.build_sector_state(24, 9)
        omega = correlators.concurrence_matrix(state, 1e-10)
        self.assertTrue(np.array_equal(omega, omega.T))
        self.assertTrue(np.all(np.diag(omega) == 0.0))
        self.assertTrue(np.all((omega == 0.0) | (omega > 1e-10)))

    def test_skipped_pairs_are_separable(self):
        state = solver_state.build_sector_state(30, 12)
        omega = correlators.concurrence_matrix(state, 0.0)
        for i, j in itertools.combinations(range(1, 31), 2):
            expected = correlators.two_spin_rdm(state, i, j).concurrence()
            self.assertAlmostEqual(expected, omega[i - 1, j - 1],
                                   delta=1e-12)


class CoherenceBoundTest(base.TestCase):
    def test_bounds_hold_for_every_pair(self):
        n = 24
        pairs = np.array(list(itertools.combinations(range(n), 2)))
        for k in (1, 5, 12, 19, 23):
            state = solver_state.build_sector_state(n, k)
            z = correlators.coherence_pairs(state, pairs)
            bounds = correlators.coherence_bounds(state, pairs)
            self.assertTrue(np.all(np.abs(z) <= bounds + 1e-12))
            self.assertTrue(np.all(bounds <= 0.5))

    def test_pruned_matrix_matches_all_pairs(self):
        n, k, tau = 40, 13, 1e-10
        state = solver_state.build_sector_state(n, k)
        iu, ju = np.triu_indices(n, k=1)
        z = correlators.coherence_pairs(state, np.column_stack((iu, ju)))
        p_uu, p_dd = state.pair_populations
        floor = np.sqrt(p_uu[iu, ju] * p_dd[iu, ju])
        weights = 2.0 * np.clip(np.abs(z) - floor, 0.0, None)
        weights[weights <= tau] = 0.0

        omega = correlators.concurrence_matrix(state, tau)
        self.assertAllClose(weights, omega[iu, ju], atol=1e-12)

    def test_half_filling_prunes_most_pairs(self):
        n = 80
        state = solver_state.build_sector_state(n, n // 2)
        with mock.patch.object(correlators, 'coherence_pairs',
                               wraps=correlators.coherence_pairs) as pairs:
            omega = correlators.concurrence_matrix(state, 1e-10)
        evaluated = len(pairs.call_args[0][1])
        self.assertLess(evaluated, n * (n - 1) // 4)
        # Nearest neighbours are always entangled.
        for i in range(n - 1):
            self.assertGreater(omega[i, i + 1], 0.0)
