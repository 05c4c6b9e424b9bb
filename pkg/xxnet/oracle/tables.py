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

from xxnet.common import table


class SectorCheckTable(table.DataTable):
    n = table.Column('n', verbose_name='Chain size')
    k = table.Column('k', verbose_name='Sector')
    pairs = table.Column('pairs', verbose_name='Pairs compared')
    rdm_deviation = table.Column(
        'rdm_deviation', verbose_name='Max reduced density matrix deviation')
    concurrence_deviation = table.Column(
        'concurrence_deviation', verbose_name='Max concurrence deviation')
    overlap_defect = table.Column(
        'overlap_defect', verbose_name='1 - squared overlap of the oracles')
    energy_deviation = table.Column(
        'energy_deviation', verbose_name='Ground energy deviation')

    class Meta(object):
        name = 'oracle_check'
        verbose_name = 'Free-fermion path against brute force'
