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


class DegreeScanTable(table.DataTable):
    k = table.Column('k', verbose_name='Sector')
    k_over_n = table.Column('k_over_n', verbose_name='Filling k/N')
    b_mid = table.Column('b_mid', verbose_name='Sector midpoint field')
    mean_degree = table.Column('mean_degree', verbose_name='<d>')
    degree_std = table.Column('degree_std', verbose_name='sigma(d)')
    delta_degree = table.Column('delta_degree',
                                verbose_name='|central difference of <d>|')
    mean_strength = table.Column('mean_strength', verbose_name='<s>')
    mean_disparity = table.Column('mean_disparity', verbose_name='<Y>')

    class Meta(object):
        name = 'scan_degree'
        verbose_name = 'Aggregate measures against k'


class CommunityScanTable(table.DataTable):
    k = table.Column('k', verbose_name='Sector')
    k_over_n = table.Column('k_over_n', verbose_name='Filling k/N')
    b_mid = table.Column('b_mid', verbose_name='Sector midpoint field')
    n_c = table.Column('n_c', verbose_name='Communities found')
    n_c_over_n = table.Column('n_c_over_n', verbose_name='n_c/N')

    class Meta(object):
        name = 'scan_communities'
        verbose_name = 'Community count against k'


class TransitionsTable(table.DataTable):
    m = table.Column('m', verbose_name='Instability index')
    k_peak = table.Column('k_peak', verbose_name='Peak sector')
    b = table.Column('b', verbose_name='Peak field')
    height = table.Column('height', verbose_name='|central difference|')

    class Meta(object):
        name = 'transitions'
        verbose_name = 'Topological instabilities'


class ProfileTable(table.DataTable):
    site = table.Column('site', verbose_name='Site')
    offset = table.Column('offset', verbose_name='Offset from the centre')
    cw = table.Column('cw', verbose_name='Weighted clustering')

    class Meta(object):
        name = 'profile'
        verbose_name = 'Central clustering profile'


class SizeSeriesTable(table.DataTable):
    n = table.Column('n', verbose_name='Chain size')
    k = table.Column('k', verbose_name='Sector')
    value = table.Column('value', verbose_name='Observable')

    class Meta(object):
        name = 'size_series'
        verbose_name = 'Observable against chain size'


class ScalingTable(table.DataTable):
    b = table.Column('b', verbose_name='Field')
    kind = table.Column('kind', verbose_name='peak or midpoint')
    n = table.Column('n', verbose_name='Chain size')
    k = table.Column('k', verbose_name='Sector')
    degree_std = table.Column('degree_std', verbose_name='sigma(d)')

    class Meta(object):
        name = 'scaling'
        verbose_name = 'Degree heterogeneity against chain size'


class LinkLengthScalingTable(table.DataTable):
    n = table.Column('n', verbose_name='Chain size')
    k = table.Column('k', verbose_name='Sector')
    length = table.Column('length', verbose_name='Link length')
    mean_concurrence = table.Column('mean_concurrence',
                                    verbose_name='<C>_l')

    class Meta(object):
        name = 'link_length_scaling'
        verbose_name = 'Mean link concurrence against chain size'


def degree_scan_rows(series, delta):
    return [{'k': r.k,
             'k_over_n': r.k / series.n,
             'b_mid': r.b_mid,
             'mean_degree': r.mean_degree,
             'degree_std': r.degree_std,
             'delta_degree': d,
             'mean_strength': r.mean_strength,
             'mean_disparity': r.mean_disparity}
            for r, d in zip(series.records, delta)]


def community_scan_rows(series, weighted):
    field = 'n_c_weighted' if weighted else 'n_c_unweighted'
    return [{'k': r.k,
             'k_over_n': r.k / series.n,
             'b_mid': r.b_mid,
             'n_c': getattr(r, field),
             'n_c_over_n': getattr(r, field) / series.n}
            for r in series.records]


def profile_rows(profile):
    return [{'site': site, 'offset': offset, 'cw': value}
            for site, offset, value in zip(profile.sites, profile.offsets,
                                           profile.values)]
