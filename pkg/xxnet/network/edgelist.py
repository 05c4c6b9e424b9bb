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
Edge-list export of concurrence networks.

Text format: a header ``# N k tau`` followed by one ``i j weight`` line per
link, 1-based sites with i < j, sorted by (i, j). Weights carry 17
significant digits so a file reproduces the network bit for bit.
"""

import collections

import numpy as np
from oslo_log import log as logging

from xxnet import exception
from xxnet.network import network as xx_network


LOG = logging.getLogger(__name__)

UNKNOWN_SECTOR = 'NA'

Edge = collections.namedtuple('Edge', ['i', 'j', 'weight'])


class EdgeList(object):
    def __init__(self, n, edges, k=None, tau=xx_network.DEFAULT_TAU):
        edges = sorted(Edge(int(i), int(j), float(w)) for i, j, w in edges)
        seen = set()
        for edge in edges:
            if not 1 <= edge.i < edge.j <= n:
                raise exception.InvalidEdgeList(
                    reason="site pair (%s, %s) outside 1 <= i < j <= %s"
                    % (edge.i, edge.j, n))
            if (edge.i, edge.j) in seen:
                raise exception.InvalidEdgeList(
                    reason="duplicate link (%s, %s)" % (edge.i, edge.j))
            if not edge.weight > 0:
                raise exception.InvalidEdgeList(
                    reason="non-positive weight on (%s, %s)"
                    % (edge.i, edge.j))
            seen.add((edge.i, edge.j))
        self.n = n
        self.k = k
        self.tau = float(tau)
        self.edges = tuple(edges)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __eq__(self, other):
        return (isinstance(other, EdgeList) and
                (self.n, self.k, self.tau, self.edges) ==
                (other.n, other.k, other.tau, other.edges))

    def header(self):
        k = UNKNOWN_SECTOR if self.k is None else self.k
        return '# %s %s %r' % (self.n, k, self.tau)

    def lines(self):
        yield self.header()
        for edge in self.edges:
            yield '%d %d %.16e' % edge


def to_edge_list(net):
    iu, ju = np.nonzero(np.triu(net.weights, k=1))
    edges = [(i + 1, j + 1, net.weights[i, j]) for i, j in zip(iu, ju)]
    return EdgeList(net.n, edges, k=net.k, tau=net.tau)


def from_edge_list(edges):
    weights = np.zeros((edges.n, edges.n))
    for i, j, w in edges:
        weights[i - 1, j - 1] = weights[j - 1, i - 1] = w
    return xx_network.WeightedNetwork(weights, tau=edges.tau, k=edges.k)


def write_edge_list(net, path):
    edges = net if isinstance(net, EdgeList) else to_edge_list(net)
    with open(path, 'w') as f:
        for line in edges.lines():
            f.write(line + '\n')
    LOG.debug("Wrote %(count)s links to %(path)s",
              {'count': len(edges), 'path': path})
    return edges


def _parse_header(line):
    fields = line.lstrip('#').split()
    if not line.startswith('#') or len(fields) != 3:
        raise exception.InvalidEdgeList(reason="bad header %r" % line)
    try:
        n = int(fields[0])
        k = None if fields[1] == UNKNOWN_SECTOR else int(fields[1])
        tau = float(fields[2])
    except ValueError:
        raise exception.InvalidEdgeList(reason="bad header %r" % line)
    return n, k, tau


def read_edge_list(path):
    with open(path) as f:
        lines = [line.strip() for line in f if line.strip()]
    if not lines:
        raise exception.InvalidEdgeList(reason="empty file %s" % path)
    n, k, tau = _parse_header(lines[0])
    edges = []
    for number, line in enumerate(lines[1:], start=2):
        fields = line.split()
        try:
            i, j, w = int(fields[0]), int(fields[1]), float(fields[2])
        except (IndexError, ValueError):
            raise exception.InvalidEdgeList(
                reason="line %s: %r" % (number, line))
        if len(fields) != 3:
            raise exception.InvalidEdgeList(
                reason="line %s: %r" % (number, line))
        edges.append((i, j, w))
    return EdgeList(n, edges, k=k, tau=tau)
