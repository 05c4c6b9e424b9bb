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


class LabelingTable(table.DataTable):
    node = table.Column('node', verbose_name='Site')
    label = table.Column('label', verbose_name='Community label')

    class Meta(object):
        name = 'labels'
        verbose_name = 'Label propagation communities'


class CensusTable(table.DataTable):
    size = table.Column('size', verbose_name='Community size')
    count = table.Column('count', verbose_name='Number of communities')

    class Meta(object):
        name = 'census'
        verbose_name = 'Community size histogram'


def labeling_rows(labeling):
    return [{'node': i + 1, 'label': label}
            for i, label in enumerate(labeling.labels)]


def census_rows(census):
    return [{'size': size, 'count': count}
            for size, count in census.histogram.items()]
