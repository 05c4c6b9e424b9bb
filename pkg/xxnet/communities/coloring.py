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

import dataclasses

import networkx as nx
import numpy as np

from xxnet import exception


@dataclasses.dataclass(frozen=True, eq=False)
class Coloring(object):
    """Color id per 0-based node and the color classes, ascending id.

    Classes hold 0-based node indices in increasing order.
    """
    colors: np.ndarray
    classes: tuple

    @property
    def n_colors(self):
        return len(self.classes)


def _index_order(graph, colors):
    return sorted(graph)


def to_graph(adjacency):
    adjacency = np.asarray(adjacency)
    if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1] or \
            np.any(adjacency != adjacency.T) or np.any(np.diag(adjacency)):
        raise exception.Invalid(
            "Adjacency must be a symmetric matrix with zero diagonal.")
    graph = nx.Graph()
    graph.add_nodes_from(range(adjacency.shape[0]))
    graph.add_edges_from(zip(*np.nonzero(np.triu(adjacency, k=1))))
    return graph


def greedy_coloring(adjacency):
    """Smallest feasible color per node, visiting nodes in index order."""
    graph = to_graph(adjacency)
    assignment = nx.coloring.greedy_color(graph, strategy=_index_order)
    colors = np.array([assignment[i] for i in range(len(graph))],
                      dtype=np.int64)
    classes = tuple(np.flatnonzero(colors == c)
                    for c in range(int(colors.max()) + 1 if len(colors)
                                   else 0))
    return Coloring(colors=colors, classes=classes)


def is_proper(coloring, adjacency):
    i, j = np.nonzero(np.asarray(adjacency))
    return bool(np.all(coloring.colors[i] != coloring.colors[j]))
