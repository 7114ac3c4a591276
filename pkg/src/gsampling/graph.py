# -*- coding: utf-8 -*-
"""
Graph construction: Watts-Strogatz small-world and Gaussian-kernel random geometric
graphs, Laplacians, and edge-list text import/export.

Graphs are dense: adjacency is an n x n symmetric float array.

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     02.09.2026
@modified    17.10.2026
------------------------------------------------------------------------------
"""
import collections
import io
import logging

import networkx as nx
import numpy as np
import six

from . import api, util

logger = logging.getLogger(__name__)


## Maximum number of draws when regenerating disconnected random graphs
MAX_RETRIES = 100

## Supported Laplacian variants
LAPLACIANS = ("combinatorial", "normalized")


class Graph(collections.namedtuple("Graph", ("n", "edges", "adjacency", "coords"))):
    """
    Weighted undirected connected graph.

    @param   n          node count
    @param   edges      [(i, j, w)] with i < j, in lexicographic order
    @param   adjacency  symmetric n x n weight array with zero diagonal
    @param   coords     n x 2 node positions if geometric, else None
    """
    __slots__ = ()

    def to_networkx(self):
        """Returns graph as networkx.Graph with "weight" edge attributes."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_weighted_edges_from(self.edges)
        return g


def make_graph(adjacency, coords=None):
    """
    Returns Graph from adjacency array, validated.

    @param   adjacency  square array of nonnegative weights, symmetric with zero diagonal
    @param   coords     optional node positions
    @throws  ParameterError  if adjacency is invalid or the graph is disconnected
    """
    adjacency = np.array(adjacency, dtype=float)
    if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1] or not len(adjacency):
        raise api.ParameterError("Adjacency must be a non-empty square matrix, got shape %s."
                                 % (adjacency.shape, ))
    if not np.all(np.isfinite(adjacency)) or (adjacency < 0).any():
        raise api.ParameterError("Adjacency weights must be finite and nonnegative.")
    if (adjacency != adjacency.T).any():
        raise api.ParameterError("Adjacency must be symmetric.")
    if np.diag(adjacency).any():
        raise api.ParameterError("Adjacency must have zero diagonal.")
    if not is_connected(adjacency):
        raise api.ParameterError("Graph must be connected.")
    ii, jj = np.nonzero(np.triu(adjacency, 1))
    edges = [(int(i), int(j), float(adjacency[i, j])) for i, j in zip(ii, jj)]
    adjacency.setflags(write=False)
    if coords is not None:
        coords = np.array(coords, dtype=float)
        coords.setflags(write=False)
    return Graph(len(adjacency), edges, adjacency, coords)


def is_connected(adjacency):
    """Returns whether graph given as adjacency array forms a single component."""
    return nx.is_connected(nx.from_numpy_array(np.asarray(adjacency) > 0))


def build_watts_strogatz(n, mean_degree, rewire_prob, seed=None):
    """
    Returns a connected Watts-Strogatz small-world graph with unit weights.

    Starts from a ring lattice with mean_degree / 2 neighbours on each side, rewiring
    each lattice edge independently with given probability to a uniformly random
    node, avoiding self-loops and duplicate edges. Disconnected draws are regenerated
    with the next random substream, up to MAX_RETRIES times.

    @param   n            node count
    @param   mean_degree  even node degree of the initial lattice, 0 < mean_degree < n
    @param   rewire_prob  rewiring probability in [0, 1]
    @param   seed         integer, numpy SeedSequence or Generator
    @throws  ParameterError     on invalid arguments
    @throws  ConstructionError  if no connected graph was drawn within retry budget
    """
    if not isinstance(n, six.integer_types) or not isinstance(mean_degree, six.integer_types):
        raise api.ParameterError("Node count and mean degree must be integers.")
    if mean_degree % 2 or not 0 < mean_degree < n:
        raise api.ParameterError("Mean degree must be even and in (0, %s), got %r."
                                 % (n, mean_degree))
    if not 0 <= rewire_prob <= 1:
        raise api.ParameterError("Rewiring probability must be in [0, 1], got %r." % rewire_prob)

    rng = util.make_rng(seed)
    for attempt in range(MAX_RETRIES):
        g = nx.watts_strogatz_graph(n, mean_degree, rewire_prob, seed=int(rng.integers(2**31)))
        if nx.is_connected(g):
            return make_graph(nx.to_numpy_array(g, nodelist=range(n), weight=None))
        logger.log(logging.DEBUG // 2, "Watts-Strogatz draw %s disconnected, retrying.",
                   attempt + 1)
    raise api.ConstructionError("No connected Watts-Strogatz graph in %s draws." % MAX_RETRIES)


def build_random_geometric(n, radius, sigma, seed=None):
    """
    Returns a connected random geometric graph with Gaussian kernel weights.

    Places n points uniformly in the unit square and connects every pair at
    Euclidean distance d <= radius with weight exp(-d² / sigma²).
    Disconnected placements are redrawn, up to MAX_RETRIES times.

    @param   n       node count
    @param   radius  connection radius, positive
    @param   sigma   kernel width, positive
    @param   seed    integer, numpy SeedSequence or Generator
    @throws  ParameterError     on invalid arguments
    @throws  ConstructionError  if no connected graph was drawn within retry budget
    """
    if not isinstance(n, six.integer_types) or n < 1:
        raise api.ParameterError("Node count must be a positive integer, got %r." % (n, ))
    if not radius > 0 or not sigma > 0:
        raise api.ParameterError("Radius and sigma must be positive, got %r and %r."
                                 % (radius, sigma))

    rng = util.make_rng(seed)
    for attempt in range(MAX_RETRIES):
        coords = rng.uniform(size=(n, 2))
        adjacency = geometric_weights(coords, radius, sigma)
        if is_connected(adjacency):
            return make_graph(adjacency, coords)
        logger.log(logging.DEBUG // 2, "Random geometric draw %s disconnected, retrying.",
                   attempt + 1)
    raise api.ConstructionError("No connected random geometric graph in %s draws." % MAX_RETRIES)


def geometric_weights(coords, radius, sigma):
    """
    Returns Gaussian kernel adjacency for node positions.

    @param   coords  n x dim positions
    @param   radius  pairs farther apart than this get no edge
    @param   sigma   kernel width
    """
    coords = np.asarray(coords, dtype=float)
    g = nx.random_geometric_graph(len(coords), radius, pos=dict(enumerate(map(tuple, coords))))
    adjacency = np.zeros((len(coords), len(coords)))
    for i, j in g.edges():
        d2 = float(np.sum((coords[i] - coords[j]) ** 2))
        adjacency[i, j] = adjacency[j, i] = np.exp(-d2 / sigma ** 2)
    return adjacency


def combinatorial_laplacian(g):
    """Returns L = D - A, with D the diagonal matrix of weighted degrees."""
    return np.diag(g.adjacency.sum(axis=1)) - g.adjacency


def normalized_laplacian(g):
    """Returns L = I - D^-1/2 A D^-1/2."""
    scale = 1. / np.sqrt(g.adjacency.sum(axis=1))
    return np.eye(g.n) - g.adjacency * np.outer(scale, scale)


def laplacian(g, kind="combinatorial"):
    """
    Returns graph Laplacian as dense symmetric array.

    @param   kind  "combinatorial" or "normalized"
    """
    if kind not in LAPLACIANS:
        raise api.ParameterError("Unknown Laplacian %r, expected one of %s."
                                 % (kind, ", ".join(LAPLACIANS)))
    return combinatorial_laplacian(g) if "combinatorial" == kind else normalized_laplacian(g)


def build(family, seed=None, **kwargs):
    """
    Returns graph from named family.

    @param   family  "watts_strogatz" or "random_geometric"
    @param   seed    integer, numpy SeedSequence or Generator
    @param   kwargs  family arguments, like `n=300, mean_degree=6, rewire_prob=0.1`
    """
    if family not in FAMILIES:
        raise api.ParameterError("Unknown graph family %r, expected one of %s."
                                 % (family, ", ".join(sorted(FAMILIES))))
    try: return FAMILIES[family](seed=seed, **kwargs)
    except TypeError as e:
        raise api.ParameterError("Invalid arguments for graph family %r: %s" % (family, e))


def write_edgelist(g, target):
    """
    Writes graph as edge-list text: line "n <count>", then "i j w" per edge,
    i < j in lexicographic order, weights in full precision.

    @param   target  file path or writable text stream
    """
    lines = ["n %s" % g.n] + ["%s %s %r" % (i, j, float(w)) for i, j, w in sorted(g.edges)]
    text = "\n".join(lines) + "\n"
    if hasattr(target, "write"): target.write(text)
    else:
        with io.open(target, "w", encoding="utf-8", newline="\n") as f: f.write(text)


def read_edgelist(source):
    """
    Returns Graph read from edge-list text written by write_edgelist().

    @param   source  file path or readable text stream
    @throws  ParameterError  on malformed content or invalid graph
    """
    if hasattr(source, "read"): text = source.read()
    else:
        with io.open(source, encoding="utf-8") as f: text = f.read()
    lines = [x.split() for x in text.splitlines() if x.strip()]
    try:
        if not lines or len(lines[0]) != 2 or "n" != lines[0][0]: raise ValueError("no header")
        n = int(lines[0][1])
        adjacency = np.zeros((n, n))
        for parts in lines[1:]:
            if len(parts) != 3: raise ValueError("bad edge %s" % parts)
            i, j, w = int(parts[0]), int(parts[1]), float(parts[2])
            if not 0 <= i < j < n: raise ValueError("bad edge %s" % parts)
            adjacency[i, j] = adjacency[j, i] = w
    except (ValueError, IndexError) as e:
        raise api.ParameterError("Malformed edge list: %s" % e)
    return make_graph(adjacency)


## Graph builders by family name
FAMILIES = {
    "random_geometric": build_random_geometric,
    "watts_strogatz":   build_watts_strogatz,
}


__all__ = [
    "FAMILIES", "LAPLACIANS", "MAX_RETRIES", "Graph",
    "build", "build_random_geometric", "build_watts_strogatz", "combinatorial_laplacian",
    "geometric_weights", "is_connected", "laplacian", "make_graph", "normalized_laplacian",
    "read_edgelist", "write_edgelist",
]
