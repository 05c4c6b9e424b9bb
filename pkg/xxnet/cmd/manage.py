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

"""
CLI interface for xxnet.

Each sub-command is a command class that computes its rows, renders them
through its table class and writes a JSON sidecar next to the result::

    xxnet [--tau TAU] [--workers W] <command> [options]

Errors are reported as one JSON object on stderr and a non-zero exit
status.
"""

import json
import os
import sys

from oslo_config import cfg
from oslo_log import log as logging

from xxnet.analysis import periodicity
from xxnet.analysis import tables as analysis_tables
from xxnet.analysis import transitions
from xxnet.api import api as xx_api
from xxnet.common import sidecar
from xxnet.communities import tables as community_tables
from xxnet import conf  # noqa
from xxnet import exception
from xxnet.i18n import _
from xxnet.metrics import tables as metric_tables
from xxnet.network import edgelist
from xxnet.oracle import tables as oracle_tables
from xxnet.solver import tables as solver_tables
from xxnet import version


CONF = cfg.CONF
LOG = logging.getLogger(__name__)

FORMATS = ('csv', 'json')


def _add_chain_args(parser, sector=True):
    parser.add_argument('-n', '--spins', dest='n', type=int, required=True,
                        help='Number of spins N.')
    if sector:
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument('--k', type=int,
                           help='Sector: number of flipped spins.')
        group.add_argument('--b', type=float,
                           help='Magnetic field; must not sit on a level '
                                'crossing.')


def _add_k_range_args(parser):
    parser.add_argument('--k-min', type=int, help='First sector (0).')
    parser.add_argument('--k-max', type=int, help='Last sector (N).')


def _add_size_range_args(parser):
    parser.add_argument('--n-min', type=int, required=True)
    parser.add_argument('--n-max', type=int, required=True)


class CommandView(object):
    """Base of all sub-commands.

    Subclasses set ``name``, ``help`` and ``table_class``, declare their
    options in ``add_arguments`` and produce rows in ``get_data``.
    """
    name = None
    help = None
    table_class = None
    suffix = None
    parameters = ()

    def __init__(self, args):
        self.args = args
        self.extra = {}

    @classmethod
    def add_arguments(cls, parser):
        pass

    @classmethod
    def add_output_arguments(cls, parser):
        parser.add_argument('--output',
                            help='Output path without extension '
                                 '(default: xxnet-<command>).')
        parser.add_argument('--format', choices=FORMATS, default='csv',
                            help='Result table format.')

    def get_data(self):
        raise NotImplementedError()

    def get_parameters(self):
        params = {'tau': CONF.tau}
        for key in self.parameters:
            params[key] = getattr(self.args, key)
        return params

    @property
    def base(self):
        output = self.args.output or 'xxnet-%s' % self.name
        for ext in ('.csv', '.json', self.suffix):
            if ext and output.endswith(ext):
                output = output[:-len(ext)]
        return os.path.join(CONF.output_dir, output)

    def write(self, data):
        path = '%s.%s' % (self.base, self.args.format)
        self.table_class(data).write(path, fmt=self.args.format,
                                     extra=self.extra)
        return path

    def run(self):
        data = self.get_data()
        path = self.write(data)
        params = self.get_parameters()
        params.update(self.extra)
        sidecar.write_sidecar(self.base, self.name, params)
        LOG.info("%(command)s wrote %(path)s",
                 {'command': self.name, 'path': path})
        return 0


class SectorCommandView(CommandView):
    parameters = ('n', 'k', 'b')

    @classmethod
    def add_arguments(cls, parser):
        _add_chain_args(parser)

    @property
    def sector(self):
        k = xx_api.resolve_sector(self.args.n, k=self.args.k, b=self.args.b)
        self.extra['k'] = k
        return k


class CrossingsCommand(CommandView):
    name = 'crossings'
    help = _('Level crossing fields B_k of an N-spin chain.')
    table_class = solver_tables.CrossingsTable
    parameters = ('n',)

    @classmethod
    def add_arguments(cls, parser):
        _add_chain_args(parser, sector=False)

    def get_data(self):
        return solver_tables.crossing_rows(xx_api.crossings_list(self.args.n))


class NetworkCommand(SectorCommandView):
    name = 'network'
    help = _('Concurrence network as an edge list.')
    suffix = '.edges'

    @classmethod
    def add_output_arguments(cls, parser):
        parser.add_argument('--output',
                            help='Output path without extension '
                                 '(default: xxnet-network).')

    def get_data(self):
        return xx_api.network_get(self.args.n, self.sector)

    def write(self, net):
        path = self.base + self.suffix
        edges = edgelist.write_edge_list(net, path)
        self.extra['links'] = len(edges)
        return path


class MetricsCommand(SectorCommandView):
    name = 'metrics'
    help = _('Per-node degree, strength, disparity and clustering.')
    table_class = metric_tables.NodeMetricsTable

    def get_data(self):
        metrics = xx_api.node_metrics_get(self.args.n, self.sector)
        self.extra['profile_maxima'] = xx_api.profile_maxima_get(metrics)
        return metric_tables.node_rows(metrics)


class CommunitiesCommand(SectorCommandView):
    name = 'communities'
    help = _('Label propagation communities and their census.')
    table_class = community_tables.LabelingTable
    parameters = ('n', 'k', 'b', 'weighted', 'include_isolated')

    @classmethod
    def add_arguments(cls, parser):
        super(CommunitiesCommand, cls).add_arguments(parser)
        parser.add_argument('--weighted', action='store_true',
                            help='Weigh label frequencies by concurrence.')
        parser.add_argument('--include-isolated', action='store_true',
                            help='Count isolated nodes as communities.')

    def get_data(self):
        labeling, census = xx_api.communities_get(
            self.args.n, self.sector, weighted=self.args.weighted,
            include_isolated=self.args.include_isolated)
        self.extra['census'] = census.to_dict()
        self.extra['sweeps'] = labeling.sweeps
        community_tables.CensusTable(
            community_tables.census_rows(census)).write(
                self.base + '.census.json', fmt='json',
                extra=census.to_dict())
        return community_tables.labeling_rows(labeling)


class ScanDegreeCommand(CommandView):
    name = 'scan-degree'
    help = _('<d>, sigma(d), <s>, <Y> and the <d> derivative against k.')
    table_class = analysis_tables.DegreeScanTable
    parameters = ('n', 'k_min', 'k_max', 'n_peaks')

    @classmethod
    def add_arguments(cls, parser):
        _add_chain_args(parser, sector=False)
        _add_k_range_args(parser)
        parser.add_argument('--n-peaks', type=int, default=4,
                            help='Transition peaks to report (0: none).')

    def get_data(self):
        ks = xx_api.k_range(self.args.n, self.args.k_min, self.args.k_max)
        series = xx_api.scan_get(self.args.n, ks)
        delta = transitions.degree_derivative(series)
        if self.args.n_peaks > 0:
            found = xx_api.transitions_get(series, self.args.n_peaks,
                                           strict=False)
            if found is not None:
                analysis_tables.TransitionsTable(found.transitions).write(
                    self.base + '.transitions.' + self.args.format,
                    fmt=self.args.format)
                self.extra['transition_fields'] = found.fields
        return analysis_tables.degree_scan_rows(series, delta)


class ScanCommunitiesCommand(CommandView):
    name = 'scan-communities'
    help = _('Number of label propagation communities against k.')
    table_class = analysis_tables.CommunityScanTable
    parameters = ('n', 'k_min', 'k_max', 'weighted', 'include_isolated')

    @classmethod
    def add_arguments(cls, parser):
        _add_chain_args(parser, sector=False)
        _add_k_range_args(parser)
        parser.add_argument('--weighted', action='store_true',
                            help='Weigh label frequencies by concurrence.')
        parser.add_argument('--include-isolated', action='store_true',
                            help='Count isolated nodes as communities.')

    def get_data(self):
        mode = 'weighted' if self.args.weighted else 'unweighted'
        k_min = 1 if self.args.k_min is None else self.args.k_min
        ks = xx_api.k_range(self.args.n, k_min, self.args.k_max)
        series = xx_api.scan_get(
            self.args.n, ks, community_modes=(mode,),
            include_isolated=self.args.include_isolated)
        rows = analysis_tables.community_scan_rows(series,
                                                   self.args.weighted)
        matches = sum(1 for row in rows if row['n_c'] == row['k'])
        self.extra['fraction_n_c_equals_k'] = matches / len(rows)
        return rows


class WassersteinCommand(CommandView):
    name = 'wasserstein'
    help = _('Mean pairwise Wasserstein distance of rescaled weights.')
    table_class = metric_tables.WassersteinTable
    parameters = ('n', 'k_min', 'k_max')

    @classmethod
    def add_arguments(cls, parser):
        _add_chain_args(parser, sector=False)
        _add_k_range_args(parser)

    def get_data(self):
        k_min = 1 if self.args.k_min is None else self.args.k_min
        ks = xx_api.k_range(self.args.n, k_min, self.args.k_max)
        return xx_api.scan_get(self.args.n, ks, wasserstein=True).records


class ProfileCommand(CommandView):
    name = 'profile'
    help = _('Weighted clustering of the central spins.')
    table_class = analysis_tables.ProfileTable
    parameters = ('n', 'b', 'n_center')

    @classmethod
    def add_arguments(cls, parser):
        _add_chain_args(parser, sector=False)
        parser.add_argument('--b', type=float, required=True,
                            help='Magnetic field in (0, 1).')
        parser.add_argument('--n-center', type=int, default=50,
                            help='Central spins kept.')

    def get_data(self):
        profile = xx_api.profile_get(self.args.n, self.args.b,
                                     self.args.n_center)
        self.extra['k'] = profile.k
        self.extra['mean'] = profile.mean
        return analysis_tables.profile_rows(profile)


class PeriodCommand(CommandView):
    name = 'period'
    help = _('Mean central clustering against N, its period and the '
             'period predicted from the mean community size.')
    table_class = analysis_tables.SizeSeriesTable
    parameters = ('n_min', 'n_max', 'b', 'n_center', 'mean_size')

    @classmethod
    def add_arguments(cls, parser):
        _add_size_range_args(parser)
        parser.add_argument('--b', type=float, required=True)
        parser.add_argument('--n-center', type=int, default=50)
        parser.add_argument('--mean-size',
                            help='Mean community size as p/q or decimal.')

    def get_data(self):
        sizes = xx_api.n_range(self.args.n_min, self.args.n_max)
        series = xx_api.clustering_series_get(sizes, self.args.b,
                                              self.args.n_center)
        self.extra['detected_period'] = periodicity.detect_period(
            [value for _n, _k, value in series])
        if self.args.mean_size:
            prediction = periodicity.period_prediction(self.args.mean_size)
            self.extra['predicted_period'] = prediction.p
            self.extra['prediction'] = {
                'p': prediction.p, 'q': prediction.q,
                'f': prediction.f, 'group_size': prediction.group_size}
        return [{'n': n, 'k': k, 'value': value} for n, k, value in series]


class OracleCheckCommand(CommandView):
    name = 'oracle-check'
    help = _('Certify the free-fermion path against brute force.')
    table_class = oracle_tables.SectorCheckTable
    parameters = ('max_n', 'tolerance')

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--max-n', type=int, default=12)
        parser.add_argument('--tolerance', type=float, default=1e-10)

    def get_data(self):
        self.report = xx_api.oracle_check(self.args.max_n,
                                          tolerance=self.args.tolerance)
        self.extra['summary'] = self.report.summary()
        return self.report.sectors

    def run(self):
        status = super(OracleCheckCommand, self).run()
        self.report.check()
        return status


class ScalingCommand(CommandView):
    name = 'scaling'
    help = _('sigma(d) against N at fixed fields, with log-log exponents.')
    table_class = analysis_tables.ScalingTable
    parameters = ('sizes', 'fields', 'peaks_from_n', 'n_peaks')

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--sizes', type=int, nargs='+', required=True)
        parser.add_argument('--fields', type=float, nargs='*', default=[],
                            help='Explicit fields.')
        parser.add_argument('--peaks-from-n', type=int,
                            help='Locate transition peaks at this N and '
                                 'use the peak and midpoint fields.')
        parser.add_argument('--n-peaks', type=int, default=4)

    def _fields(self):
        fields = [(b, 'given') for b in self.args.fields]
        if self.args.peaks_from_n:
            n = self.args.peaks_from_n
            series = xx_api.scan_get(n, xx_api.k_range(n, 0, n // 2))
            found = xx_api.transitions_get(series, self.args.n_peaks)
            peaks, midpoints = transitions.peak_and_midpoint_fields(found)
            fields += [(b, 'peak') for b in peaks]
            fields += [(b, 'midpoint') for b in midpoints]
        if not fields:
            raise exception.InvalidRange(
                reason="give --fields or --peaks-from-n")
        return fields

    def get_data(self):
        rows = []
        exponents = []
        for b, kind in self._fields():
            points = xx_api.degree_heterogeneity_get(self.args.sizes, b)
            rows += [{'b': b, 'kind': kind, 'n': p.n, 'k': p.k,
                      'degree_std': p.value} for p in points]
            try:
                fit = transitions.scaling_exponent(
                    [p.n for p in points], [p.value for p in points])
                exponent = fit.exponent
            except (exception.NonPositiveValues,
                    exception.InsufficientData) as e:
                LOG.warning("No scaling fit at B=%(b)r: %(msg)s",
                            {'b': b, 'msg': e.msg})
                exponent = None
            exponents.append({'b': b, 'kind': kind, 'exponent': exponent})
        self.extra['exponents'] = exponents
        return rows


class LinkLengthsCommand(CommandView):
    name = 'link-lengths'
    help = _('Mean concurrence of links of given lengths against N.')
    table_class = analysis_tables.LinkLengthScalingTable
    parameters = ('sizes', 'b', 'lengths')

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--sizes', type=int, nargs='+', required=True)
        parser.add_argument('--b', type=float, required=True)
        parser.add_argument('--lengths', type=int, nargs='+',
                            default=[1, 2, 3])

    def get_data(self):
        rows = []
        for n, k, means in xx_api.link_lengths_get(
                self.args.sizes, self.args.b, self.args.lengths):
            rows += [{'n': n, 'k': k, 'length': length,
                      'mean_concurrence': value}
                     for length, value in zip(self.args.lengths, means)]
        return rows


COMMANDS = [
    CrossingsCommand,
    NetworkCommand,
    MetricsCommand,
    CommunitiesCommand,
    ScanDegreeCommand,
    ScanCommunitiesCommand,
    WassersteinCommand,
    ProfileCommand,
    PeriodCommand,
    OracleCheckCommand,
    ScalingCommand,
    LinkLengthsCommand,
]


def add_command_parsers(subparsers):
    for command_class in COMMANDS:
        parser = subparsers.add_parser(command_class.name,
                                       help=command_class.help)
        command_class.add_arguments(parser)
        command_class.add_output_arguments(parser)
        parser.set_defaults(command_class=command_class)


command_opt = cfg.SubCommandOpt('command',
                                title='Commands',
                                help='Available commands',
                                handler=add_command_parsers)


def _report(e):
    sys.stderr.write(json.dumps(e.to_dict(), sort_keys=True) + '\n')


def main(argv=None):
    argv = sys.argv if argv is None else argv
    CONF.register_cli_opt(command_opt)
    logging.register_options(CONF)
    CONF(argv[1:], project='xxnet',
         version=version.version_string())
    logging.setup(CONF, 'xxnet')

    command = CONF.command.command_class(CONF.command)
    try:
        return command.run()
    except exception.XXNetException as e:
        _report(e)
        return e.code
    except Exception as e:
        LOG.exception("Unexpected failure in %s", command.name)
        _report(exception.XXNetException(str(e)))
        return 1


if __name__ == '__main__':
    sys.exit(main())
