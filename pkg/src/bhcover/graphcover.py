"""
Covers of the torus with two branch points built from a finite graph.

Cut the base along a curve e separating the handle from a disk holding both
branch points.  Each vertex v of degree d_v contributes the d_v-fold cyclic
cover of the one-holed torus dual to a -> 1, b -> 0 in Z/d_v; its boundary
lifts to d_v circles.  Each edge contributes an annulus, the double cover of
the twice-branched disk, glued to one boundary circle at each endpoint.

With the basepoint on e, sheets are boundary circles.  The loop a steps to
the next circle of the same piece, b lifts to closed loops, and c1, c2 both
cross the annulus of their edge, so rho(c1) = rho(c2) is the fixed-point-free
involution pairing the two circles of every edge.
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass

from . import perm as P
from .cover import MonodromyCover, validate

CANONICAL_SEARCH_CAP = 200_000


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class CoverGraph:
    vertices: int
    edges: tuple[tuple[int, int], ...]

    def degrees(self) -> list[int]:
        deg = [0] * self.vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1  # a loop adds 2
        return deg

    def check(self) -> None:
        if self.vertices < 1:
            raise GraphError("graph needs at least one vertex")
        if not self.edges:
            raise GraphError("graph has no edges")
        for idx, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise GraphError(f"edges[{idx}] = [{u}, {v}] has an endpoint outside 0..{self.vertices - 1}")
        deg = self.degrees()
        isolated = [v for v, d in enumerate(deg) if d == 0]
        if isolated:
            raise GraphError(f"isolated vertices {isolated}")
        comps = _components(self)
        if comps > 1:
            raise GraphError(f"graph has {comps} connected components")


def _components(g: CoverGraph) -> int:
    parent = list(range(g.vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(g.vertices)})


def graph(vertices: int, edges: Sequence[Sequence[int]]) -> CoverGraph:
    g = CoverGraph(vertices, tuple((int(u), int(v)) for u, v in edges))
    g.check()
    return g


def path_graph(vertices: int) -> CoverGraph:
    return graph(vertices, [(i, i + 1) for i in range(vertices - 1)])


def canonical_labeling(g: CoverGraph) -> tuple[list[int], list[tuple[int, int]]]:
    """
    Relabel vertices, sorted by degree, so the sorted edge list is least.

    Returns (new label of each vertex, sorted edge list).  Ties inside a
    degree class are brute forced; past CANONICAL_SEARCH_CAP candidates the
    degree-sorted order is used as is, and isomorphic inputs may then give
    differently labeled (still valid) covers.
    """
    deg = g.degrees()
    order = sorted(range(g.vertices), key=lambda v: (deg[v], v))
    classes = [list(grp) for _, grp in itertools.groupby(order, key=lambda v: deg[v])]
    size = math.prod(math.factorial(len(c)) for c in classes)

    def edges_under(label):
        return sorted(tuple(sorted((label[u], label[v]))) for u, v in g.edges)

    def label_from(arrangement):
        label = [0] * g.vertices
        for new, v in enumerate(itertools.chain.from_iterable(arrangement)):
            label[v] = new
        return label

    if size > CANONICAL_SEARCH_CAP:
        label = label_from(classes)
        return label, edges_under(label)
    best = None
    for arrangement in itertools.product(*(itertools.permutations(c) for c in classes)):
        label = label_from(arrangement)
        key = edges_under(label)
        if best is None or key < best[1]:
            best = (label, key)
    return best


def build_cover(g: CoverGraph) -> MonodromyCover:
    g.check()
    label, edges = canonical_labeling(g)
    deg = [0] * g.vertices
    for v, d in enumerate(g.degrees()):
        deg[label[v]] = d
    start = [0]
    for d in deg:
        start.append(start[-1] + d)
    n = start[-1]
    rot = list(range(n))
    for v, d in enumerate(deg):
        for r in range(d):
            rot[start[v] + r] = start[v] + (r + 1) % d
    used = [0] * len(deg)
    seam = list(range(n))

    def take(v):
        s = start[v] + used[v]
        used[v] += 1
        return s

    for u, v in edges:
        s, t = take(u), take(v)
        seam[s], seam[t] = t, s
    return validate(1, 2, n, a=[tuple(rot)], b=[P.identity(n)], c=[tuple(seam), tuple(seam)])


def fig2_example() -> MonodromyCover:
    """The six-sheeted cover from the path on four vertices."""
    return build_cover(path_graph(4))
