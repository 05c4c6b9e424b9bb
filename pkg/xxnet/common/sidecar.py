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

"""JSON sidecar recording how a result file was produced."""

import collections
import json

from xxnet.common import table
from xxnet import version


SUFFIX = '.meta.json'

CONVENTIONS = collections.OrderedDict([
    ('hamiltonian', 'H = -sum_i [(X_i X_i+1 + Y_i Y_i+1)/2 + B Z_i], J = 1, '
                    'open boundaries'),
    ('sector', 'k flipped (down) spins; k = 0 is all-up'),
    ('sites', '1-based'),
    ('rdm_basis', 'uu, ud, du, dd with the first letter on the lower site'),
    ('links', 'a_ij = 1 iff omega_ij > tau'),
    ('field_axis', 'B_mid = (B_k + B_k+1) / 2 with B_k = cos(k pi/(N+1))'),
    ('missing', table.MISSING),
])


def sidecar_path(base):
    return base + SUFFIX


def write_sidecar(base, command, parameters):
    document = collections.OrderedDict()
    document['command'] = command
    document['parameters'] = collections.OrderedDict(
        sorted((k, table.json_value(v)) for k, v in parameters.items()))
    document['conventions'] = CONVENTIONS
    document['version'] = version.version_string()
    path = sidecar_path(base)
    with open(path, 'w') as stream:
        json.dump(document, stream, indent=2, allow_nan=False)
        stream.write('\n')
    return path
