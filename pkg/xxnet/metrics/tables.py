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


class NodeMetricsTable(table.DataTable):
    node = table.Column('node', verbose_name='Site')
    d = table.Column('d', verbose_name='Degree')
    s = table.Column('s', verbose_name='Strength')
    Y = table.Column('Y', verbose_name='Disparity')
    c = table.Column('c', verbose_name='Clustering')
    cw = table.Column('cw', verbose_name='Weighted clustering')

    class Meta(object):
        name = 'node_metrics'
        verbose_name = 'Local network measures'


class WassersteinTable(table.DataTable):
    k = table.Column('k', verbose_name='Sector')
    b_mid = table.Column('b_mid', verbose_name='Sector midpoint field')
    mean_wasserstein = table.Column(
        'mean_wasserstein', verbose_name='Mean pairwise Wasserstein distance')
    excluded = table.Column('wasserstein_excluded',
                            verbose_name='Isolated nodes left out')

    class Meta(object):
        name = 'wasserstein'
        verbose_name = 'Rescaled weight distribution similarity'


def node_rows(metrics):
    return [{'node': i + 1,
             'd': metrics.degree[i],
             's': metrics.strength[i],
             'Y': metrics.disparity[i],
             'c': metrics.clustering[i],
             'cw': metrics.weighted_clustering[i]}
            for i in range(len(metrics))]
