#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Test graph construction, Laplacians and edge-list import/export.

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     02.09.2026
@modified    17.10.2026
------------------------------------------------------------------------------
"""
import logging
import os
import tempfile
import unittest

import networkx as nx
import numpy as np
import six

import gsampling
from gsampling import graph

logger = logging.getLogger()


class TestGraph(unittest.TestCase):
    """Tests graph construction."""

    def __init__(self, *args, **kwargs):
        super(TestGraph, self).__init__(*args, **kwargs)
        self.maxDiff = None  # Full diff on assert failure
        try: unittest.util._MAX_LENGTH = 100000
        except Exception: pass
        self._paths = []  # Temporary files


    def tearDown(self):
        """Deletes temporary files."""
        for path in self._paths:
            try: os.remove(path)
            except Exception: pass
        super(TestGraph, self).tearDown()


    def test_watts_strogatz(self):
        """Tests graph.build_watts_strogatz()."""
        FUNC = graph.build_watts_strogatz
        logger.info("Verifying %s.", FUNC.__name__)
        g = FUNC(300, 6, 0.1, seed=1)
        self.verify_graph(g, 300)
        self.assertEqual(len(g.edges), 900, "Expected n * k / 2 edges.")
        self.assertTrue(all(1. == w for _, _, w in g.edges), "Expected unit weights.")
        self.assertIsNone(g.coords)

        logger.info("Verifying %s without rewiring gives a ring lattice.", FUNC.__name__)
        g = FUNC(10, 4, 0., seed=0)
        self.assertTrue(np.all(g.adjacency.sum(axis=1) == 4))
        for i in range(10):
            for step in (1, 2):
                self.assertEqual(g.adjacency[i, (i + step) % 10], 1.)

        logger.info("Verifying %s reproducibility.", FUNC.__name__)
        a, b, c = FUNC(60, 4, 0.3, seed=5), FUNC(60, 4, 0.3, seed=5), FUNC(60, 4, 0.3, seed=6)
        self.assertEqual(a.edges, b.edges)
        self.assertNotEqual(a.edges, c.edges)

        logger.info("Verifying %s with invalid arguments.", FUNC.__name__)
        for args in [(10, 3, 0.1), (10, 0, 0.1), (10, 10, 0.1), (10, 4, -0.1),
                     (10, 4, 1.5), (10., 4, 0.1), (10, 4.0, 0.1)]:
            with self.assertRaises(gsampling.ParameterError, msg="Expected error for %s." % (args, )):
                FUNC(*args)


    def test_random_geometric(self):
        """Tests graph.build_random_geometric()."""
        FUNC = graph.build_random_geometric
        logger.info("Verifying %s.", FUNC.__name__)
        g = FUNC(300, 0.1, 0.05, seed=2)
        self.verify_graph(g, 300)
        self.assertEqual(g.coords.shape, (300, 2))
        self.assertTrue(np.all((g.coords >= 0) & (g.coords <= 1)))
        for i, j, w in g.edges:
            d = np.linalg.norm(g.coords[i] - g.coords[j])
            self.assertLessEqual(d, 0.1 + 1e-12, "Edge longer than radius.")
            self.assertAlmostEqual(w, np.exp(-d ** 2 / 0.05 ** 2), places=12)

        logger.info("Verifying %s with invalid arguments.", FUNC.__name__)
        for args in [(0, 0.1, 0.05), (10, 0., 0.05), (10, 0.1, -1.), (10.5, 0.1, 0.05)]:
            with self.assertRaises(gsampling.ParameterError, msg="Expected error for %s." % (args, )):
                FUNC(*args)


    def test_construction_failure(self):
        """Tests graph construction exhausting its retry budget."""
        logger.info("Verifying graph.build_random_geometric() with unreachable connectivity.")
        with self.assertRaises(gsampling.ConstructionError):
            graph.build_random_geometric(50, 1e-6, 0.05, seed=0)


    def test_geometric_weights(self):
        """Tests graph.geometric_weights()."""
        coords = np.array([[0., 0.], [0.05, 0.], [0.5, 0.5]])
        logger.info("Verifying graph.geometric_weights().")
        A = graph.geometric_weights(coords, 0.1, 0.05)
        np.testing.assert_allclose(A[0, 1], np.exp(-1.), rtol=1e-12)
        self.assertEqual(A[0, 1], A[1, 0])
        self.assertEqual(A[0, 2], 0.)
        self.assertEqual(A[1, 2], 0.)
        self.assertFalse(np.diag(A).any())


    def test_make_graph(self):
        """Tests graph.make_graph() validation."""
        logger.info("Verifying graph.make_graph().")
        path = np.array([[0, 1, 0], [1, 0, 2], [0, 2, 0]], dtype=float)
        g = graph.make_graph(path)
        self.assertEqual(g.edges, [(0, 1, 1.), (1, 2, 2.)])
        with self.assertRaises(ValueError, msg="Expected read-only adjacency."):
            g.adjacency[0, 1] = 5.

        DATAS = [  # [invalid adjacency, ]
            np.zeros((2, 3)),
            np.zeros((0, 0)),
            np.array([[0, 1], [2, 0]], dtype=float),
            np.array([[1, 1], [1, 0]], dtype=float),
            np.array([[0, -1], [-1, 0]], dtype=float),
            np.array([[0, np.nan], [np.nan, 0]]),
            np.zeros((3, 3)),
        ]
        for adjacency in DATAS:
            with self.assertRaises(gsampling.ParameterError, msg="Expected error for %s." % adjacency):
                graph.make_graph(adjacency)


    def test_laplacian(self):
        """Tests graph.laplacian() variants."""
        g = graph.build_random_geometric(40, 0.35, 0.2, seed=3)
        logger.info("Verifying combinatorial Laplacian.")
        L = graph.laplacian(g)
        np.testing.assert_array_equal(L, L.T)
        np.testing.assert_allclose(L.sum(axis=1), 0., atol=1e-12)
        np.testing.assert_allclose(L, nx.laplacian_matrix(g.to_networkx()).toarray(), atol=1e-12)
        self.assertGreaterEqual(np.linalg.eigvalsh(L).min(), -1e-10)

        logger.info("Verifying Laplacian quadratic form on 100 random signals.")
        rng = np.random.default_rng(4)
        for _ in range(100):
            x = rng.standard_normal(g.n)
            expected = sum(w * (x[i] - x[j]) ** 2 for i, j, w in g.edges)
            self.assertAlmostEqual(x.dot(L).dot(x) / expected, 1., places=10)

        logger.info("Verifying normalized Laplacian.")
        L = graph.laplacian(g, "normalized")
        np.testing.assert_allclose(L, nx.normalized_laplacian_matrix(g.to_networkx()).toarray(),
                                   atol=1e-12)
        eigenvalues = np.linalg.eigvalsh(L)
        self.assertGreaterEqual(eigenvalues.min(), -1e-10)
        self.assertLessEqual(eigenvalues.max(), 2 + 1e-10)

        with self.assertRaises(gsampling.ParameterError):
            graph.laplacian(g, "signless")


    def test_build(self):
        """Tests graph.build() by family name."""
        logger.info("Verifying graph.build().")
        g = graph.build("watts_strogatz", seed=4, n=20, mean_degree=4, rewire_prob=0.2)
        self.assertEqual(g.edges, graph.build_watts_strogatz(20, 4, 0.2, seed=4).edges)
        for family, kwargs in [("erdos_renyi", dict(n=10)),
                               ("watts_strogatz", dict(n=10, degree=4, rewire_prob=0.1))]:
            with self.assertRaises(gsampling.ParameterError):
                graph.build(family, seed=0, **kwargs)


    def test_edgelist(self):
        """Tests graph.write_edgelist() and .read_edgelist()."""
        g = graph.build_random_geometric(30, 0.4, 0.1, seed=7)
        logger.info("Verifying edge list through stream.")
        stream = six.StringIO()
        graph.write_edgelist(g, stream)
        text = stream.getvalue()
        self.assertTrue(text.startswith("n 30\n"))
        self.assertEqual(len(text.splitlines()), len(g.edges) + 1)
        received = graph.read_edgelist(six.StringIO(text))
        self.assertEqual(received.edges, g.edges, "Weights must survive exactly.")

        logger.info("Verifying edge list through file.")
        with tempfile.NamedTemporaryFile(suffix=".txt") as f: self._paths.append(f.name)
        graph.write_edgelist(g, self._paths[-1])
        np.testing.assert_array_equal(graph.read_edgelist(self._paths[-1]).adjacency, g.adjacency)

        logger.info("Verifying malformed edge lists.")
        for text in ["", "0 1 1.0\n", "n 3\n0 1\n", "n 3\n0 1 x\n", "n 3\n1 0 1.0\n",
                     "n 3\n0 5 1.0\n", "n 3\n0 1 1.0\n"]:
            with self.assertRaises(gsampling.ParameterError, msg="Expected error for %r." % text):
                graph.read_edgelist(six.StringIO(text))


    def verify_graph(self, g, n):
        """Checks basic graph properties."""
        self.assertEqual(g.n, n)
        self.assertEqual(g.adjacency.shape, (n, n))
        np.testing.assert_array_equal(g.adjacency, g.adjacency.T)
        self.assertFalse(np.diag(g.adjacency).any(), "Expected no self-loops.")
        self.assertTrue(nx.is_connected(g.to_networkx()), "Expected connected graph.")
        self.assertEqual(g.edges, sorted(g.edges))
        self.assertTrue(all(i < j and w > 0 for i, j, w in g.edges))



if "__main__" == __name__:
    logging.basicConfig(
        level=logging.INFO,
        format="[%(levelname)s]\t[%(created).06f] [test_graph] %(message)s"
    )
    unittest.main()
