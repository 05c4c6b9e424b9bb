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


class CrossingsTable(table.DataTable):
    k = table.Column('k', verbose_name='Sector entered below the field')
    b_k = table.Column('b_k', verbose_name='Level crossing field B_k')

    class Meta(object):
        name = 'crossings'
        verbose_name = 'Level crossing fields'


def crossing_rows(fields):
    return [{'k': k, 'b_k': b} for k, b in enumerate(fields, start=1)]
