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

import os

from oslo_config import cfg


DEFAULT_TAU = 1e-10
DEFAULT_MAX_SWEEPS = 1000
DEFAULT_ORACLE_CAP = 2000000


def _default_workers():
    try:
        return max(1, int(os.environ.get('XXNET_WORKERS', '1')))
    except ValueError:
        return 1


network_opts = [
    cfg.FloatOpt('tau',
                 default=DEFAULT_TAU,
                 min=0.0,
                 help='Separability tolerance: concurrences at or below '
                      'this value are stored as exact zeros and do not '
                      'count as links.'),
    cfg.IntOpt('max_sweeps',
               default=DEFAULT_MAX_SWEEPS,
               min=1,
               help='Maximum number of label propagation sweeps before '
                    'the run is declared non-convergent.'),
    cfg.IntOpt('oracle_cap',
               default=DEFAULT_ORACLE_CAP,
               min=1,
               help='Largest number of basis configurations the '
                    'brute-force oracle may enumerate.'),
    cfg.IntOpt('workers',
               default=_default_workers(),
               sample_default='$XXNET_WORKERS or 1',
               min=1,
               help='Worker processes used by scans. Results do not '
                    'depend on this value.'),
    cfg.StrOpt('output_dir',
               default='.',
               help='Directory relative output paths are resolved '
                    'against.'),
]

CONF = cfg.CONF
CONF.register_cli_opts(network_opts)


def list_opts():
    return [(None, network_opts)]
