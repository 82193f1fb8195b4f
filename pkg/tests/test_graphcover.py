import itertools
import random

import pytest

from bhcover import perm as P
from bhcover.cover import (euler_characteristic_total, has_property_nu, is_regular, total_genus,
                           validate)
from bhcover.graphcover import CoverGraph, GraphError, build_cover, fig2_example, graph, path_graph
from bhcover.lifting import HOLDS, bh_verdict
from bhcover.orbit import canonicalize


def check_postconditions(g: CoverGraph):
    cov = build_cover(g)
    e = len(g.edges)
    # (a) revalidate from raw data
    assert validate(1, 2, cov.degree, cov.a, cov.b, cov.c) == cov
    assert cov.degree == 2 * e == sum(g.degrees())
    for p in cov.c:  # (b)
        assert all(len(c) == 2 for c in P.cycles(p))
    assert all(f.preimage_count == e for f in cov.fibers)  # (c)
    assert euler_characteristic_total(cov) == -2 * e  # (d)
    assert total_genus(cov) == e + 1
    assert has_property_nu(cov)  # (e)
    sizes = sorted(len(o) for o in P.orbits([cov.a[0]], cov.degree))  # (f)
    assert sizes == sorted(g.degrees())
    return cov


def connected_graphs(max_edges, max_vertices=4):
    for v in range(1, max_vertices + 1):
        pairs = [(i, j) for i in range(v) for j in range(i, v)]
        for e in range(1, max_edges + 1):
            for edges in itertools.combinations_with_replacement(pairs, e):
                try:
                    yield graph(v, edges)
                except GraphError:
                    continue


def test_fig2():
    cov = fig2_example()
    assert cov.degree == 6 and total_genus(cov) == 4
    assert all(f.ramification_numbers == (2, 2, 2) for f in cov.fibers)
    assert bh_verdict(cov).status == HOLDS and bh_verdict(cov).rule == "NU"


def test_k2():
    cov = check_postconditions(graph(2, [(0, 1)]))
    assert cov.degree == 2 and total_genus(cov) == 2
    assert cov.c == ((1, 0), (1, 0))


def test_triangle():
    cov = check_postconditions(graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert cov.degree == 6 and total_genus(cov) == 4
    assert sorted(len(o) for o in P.orbits([cov.a[0]], 6)) == [2, 2, 2]


def test_irregular_star():
    cov = check_postconditions(graph(4, [(0, 1), (0, 2), (0, 3)]))
    assert not is_regular(cov)


def test_loops_and_multi_edges():
    check_postconditions(graph(1, [(0, 0)]))
    check_postconditions(graph(2, [(0, 1), (0, 1), (1, 1)]))


def test_all_small_graphs():
    count = 0
    for g in connected_graphs(5):
        check_postconditions(g)
        count += 1
    assert count > 100


def test_isomorphism_invariance():
    rng = random.Random(11)
    for g in connected_graphs(4):
        perm = list(range(g.vertices))
        rng.shuffle(perm)
        edges = [(perm[u], perm[v]) for u, v in g.edges]
        rng.shuffle(edges)
        h = graph(g.vertices, edges)
        assert build_cover(g) == build_cover(h)
        assert canonicalize(build_cover(g)).key == canonicalize(build_cover(h)).key


def test_bad_graphs():
    with pytest.raises(GraphError):
        graph(2, [])
    with pytest.raises(GraphError):
        graph(3, [(0, 1)])
    with pytest.raises(GraphError):
        graph(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError):
        graph(2, [(0, 2)])
    assert path_graph(4).degrees() == [1, 2, 2, 1]
