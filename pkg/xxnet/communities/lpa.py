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
Semi-synchronous label propagation with Prec-Max tie breaking.

Every node starts with its own 1-based index as label. One sweep visits
the color classes of a proper coloring in ascending order and updates all
nodes of a class at once from the labels of their neighbours. A node keeps
its label when that label is among the most frequent ones; otherwise it
takes the largest of them. Frequencies are link weights or plain counts.
"""

import collections
import dataclasses

import numpy as np
from oslo_log import log as logging

from xxnet import conf
from xxnet import exception
from xxnet.communities import coloring as xx_coloring


LOG = logging.getLogger(__name__)

DEFAULT_MAX_SWEEPS = conf.DEFAULT_MAX_SWEEPS

# Weighted label frequencies within this distance of the maximum tie.
FREQUENCY_TOLERANCE = 1e-12


@dataclasses.dataclass(frozen=True, eq=False)
class Labeling(object):
    """Label per 0-based node; ``isolated`` marks nodes without links."""
    labels: np.ndarray
    isolated: np.ndarray
    sweeps: int = 0
    weighted: bool = True

    def __len__(self):
        return len(self.labels)

    def communities(self, include_isolated=False):
        """Mapping label -> 1-based member nodes, ordered by label."""
        members = collections.defaultdict(list)
        for node, (label, alone) in enumerate(zip(self.labels,
                                                  self.isolated)):
            if include_isolated or not alone:
                members[int(label)].append(node + 1)
        return collections.OrderedDict(sorted(members.items()))


@dataclasses.dataclass(frozen=True)
class Census(object):
    n_c: int
    sizes: tuple
    mean_size: float
    histogram: dict
    isolated: int

    def to_dict(self):
        return {'n_c': self.n_c,
                'sizes': list(self.sizes),
                'mean_size': self.mean_size,
                'histogram': {str(k): v for k, v in self.histogram.items()},
                'isolated': self.isolated}


def _preferred_label(current, neighbour_labels, weights, tol):
    candidates, inverse = np.unique(neighbour_labels, return_inverse=True)
    frequency = np.bincount(inverse, weights=weights,
                            minlength=len(candidates))
    best = candidates[frequency >= frequency.max() - tol]
    if current in best:
        return current
    return best.max()


def _sweep(labels, classes, neighbours, weights, tol):
    for members in classes:
        updates = {}
        for i in members:
            nbrs = neighbours[i]
            if not len(nbrs):
                continue
            w = weights[i, nbrs] if weights is not None else None
            updates[i] = _preferred_label(labels[i], labels[nbrs], w, tol)
        for i, label in updates.items():
            labels[i] = label
    return labels


def lpa_detect(net, weighted=True, max_sweeps=DEFAULT_MAX_SWEEPS,
               coloring=None):
    """Run label propagation to a fixed point.

    :raises LabelPropagationNotConverged: a sweep brings back the labels
        of two sweeps ago without reaching a fixed point, or
        ``max_sweeps`` runs out.
    """
    adjacency = net.adjacency
    coloring = coloring or xx_coloring.greedy_coloring(adjacency)
    neighbours = [np.flatnonzero(row) for row in adjacency]
    weights = net.weights if weighted else None
    tol = FREQUENCY_TOLERANCE if weighted else 0.0

    labels = np.arange(1, net.n + 1, dtype=np.int64)
    before = None
    for sweep in range(1, max_sweeps + 1):
        previous = labels.copy()
        labels = _sweep(labels, coloring.classes, neighbours, weights, tol)
        if np.array_equal(labels, previous):
            LOG.debug("Label propagation converged after %(sweeps)s sweeps "
                      "with %(labels)s labels",
                      {'sweeps': sweep,
                       'labels': len(np.unique(labels))})
            return Labeling(labels=labels,
                            isolated=~adjacency.any(axis=1),
                            sweeps=sweep, weighted=weighted)
        if before is not None and np.array_equal(labels, before):
            break
        before = previous

    oscillating = (np.flatnonzero(labels != previous) + 1).tolist()
    raise exception.LabelPropagationNotConverged(sweeps=sweep,
                                                 nodes=oscillating)


def community_census(labeling, include_isolated=False):
    members = labeling.communities(include_isolated=include_isolated)
    sizes = tuple(len(nodes) for nodes in members.values())
    histogram = collections.OrderedDict(
        sorted(collections.Counter(sizes).items()))
    n_c = len(sizes)
    return Census(n_c=n_c,
                  sizes=sizes,
                  mean_size=sum(sizes) / n_c if n_c else float('nan'),
                  histogram=histogram,
                  isolated=int(np.count_nonzero(labeling.isolated)))
