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

"""Certification sweep of the free-fermion path against the oracles."""

import dataclasses
import math

import numpy as np
from oslo_log import log as logging

from xxnet import exception
from xxnet.oracle import density
from xxnet.oracle import hamiltonian
from xxnet.oracle import states
from xxnet.solver import chain
from xxnet.solver import correlators
from xxnet.solver import state as solver_state


LOG = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10

# Largest chain for which the dense diagonalization is also compared.
DOUBLE_ORACLE_MAX_N = 10


@dataclasses.dataclass(frozen=True)
class SectorCheck(object):
    n: int
    k: int
    pairs: int
    rdm_deviation: float
    concurrence_deviation: float
    overlap_defect: float = math.nan
    energy_deviation: float = math.nan


@dataclasses.dataclass(frozen=True)
class OracleReport(object):
    max_n: int
    tolerance: float
    sectors: tuple

    def _worst(self, field):
        values = [getattr(s, field) for s in self.sectors
                  if not math.isnan(getattr(s, field))]
        return max(values) if values else 0.0

    @property
    def max_rdm_deviation(self):
        return self._worst('rdm_deviation')

    @property
    def max_concurrence_deviation(self):
        return self._worst('concurrence_deviation')

    @property
    def max_overlap_defect(self):
        return self._worst('overlap_defect')

    @property
    def max_energy_deviation(self):
        return self._worst('energy_deviation')

    @property
    def worst_sector(self):
        return max(self.sectors, key=lambda s: max(s.rdm_deviation,
                                                   s.concurrence_deviation))

    @property
    def passed(self):
        return max(self.max_rdm_deviation,
                   self.max_concurrence_deviation) <= self.tolerance

    def check(self):
        if not self.passed:
            worst = self.worst_sector
            raise exception.OracleMismatch(
                deviation=max(worst.rdm_deviation,
                              worst.concurrence_deviation),
                tol=self.tolerance, n=worst.n, k=worst.k)
        return self

    def summary(self):
        return {'max_n': self.max_n,
                'tolerance': self.tolerance,
                'sectors': len(self.sectors),
                'max_rdm_deviation': self.max_rdm_deviation,
                'max_concurrence_deviation': self.max_concurrence_deviation,
                'max_overlap_defect': self.max_overlap_defect,
                'max_energy_deviation': self.max_energy_deviation,
                'passed': self.passed}


def check_sector(n, k, tau=0.0, cap=states.DEFAULT_CAP):
    sector = solver_state.build_sector_state(n, k)
    exact = states.full_state(n, k, cap=cap)
    omega = correlators.concurrence_matrix(sector, tau)

    rdm_dev = conc_dev = 0.0
    pairs = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rho = density.rdm_from_state(exact, i, j)
            fast = correlators.two_spin_rdm(sector, i, j).matrix()
            rdm_dev = max(rdm_dev, float(np.max(np.abs(rho - fast))))
            conc_dev = max(conc_dev,
                           abs(density.wootters_concurrence(rho) -
                               omega[i - 1, j - 1]))
            pairs += 1

    extra = {}
    if n <= DOUBLE_ORACLE_MAX_N:
        energy, diag = hamiltonian.diagonalize_sector(
            n, k, chain.sector_midpoint(n, k), cap=cap)
        extra['overlap_defect'] = 1.0 - hamiltonian.overlap(exact, diag) ** 2
        extra['energy_deviation'] = abs(
            energy - chain.ground_energy(n, k, chain.sector_midpoint(n, k)))
    return SectorCheck(n=n, k=k, pairs=pairs, rdm_deviation=rdm_dev,
                       concurrence_deviation=conc_dev, **extra)


def certify(max_n, tolerance=DEFAULT_TOLERANCE, tau=0.0,
            cap=states.DEFAULT_CAP):
    """Compare every pair of every sector for N = 1..max_n."""
    chain.validate_size(max_n)
    sectors = []
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            sectors.append(check_sector(n, k, tau=tau, cap=cap))
        LOG.debug("Certified N=%s", n)
    report = OracleReport(max_n=max_n, tolerance=tolerance,
                          sectors=tuple(sectors))
    LOG.info("Oracle sweep up to N=%(n)s: max RDM deviation %(rdm)g, "
             "max concurrence deviation %(conc)g",
             {'n': max_n, 'rdm': report.max_rdm_deviation,
              'conc': report.max_concurrence_deviation})
    return report
