"""
Permutations of the sheet set {0, ..., n-1}.

A permutation is stored in image notation as a tuple ``p`` with ``p[i]`` the
image of sheet ``i``.  Composition follows function notation:
``compose(p, q)[i] == p[q[i]]``.

>>> compose((1, 0, 2), (0, 2, 1))
(1, 2, 0)
>>> cycles((1, 2, 0, 3))
((0, 1, 2), (3,))
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

Perm = tuple[int, ...]
CycleSet = tuple[tuple[int, ...], ...]


def is_permutation(images: Sequence[int]) -> bool:
    n = len(images)
    seen = [False] * n
    for x in images:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n or seen[x]:
            return False
        seen[x] = True
    return True


def check_perm(images: Sequence[int]) -> Perm:
    """Return ``images`` as a Perm, raising ValueError unless it is a bijection."""
    if not is_permutation(images):
        raise ValueError(f"not a permutation of 0..{len(images) - 1}: {list(images)}")
    return tuple(images)


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Sequence[int]) -> bool:
    return all(x == i for i, x in enumerate(p))


def transposition(n: int, i: int, j: int) -> Perm:
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def from_cycles(n: int, cycle_list: Iterable[Sequence[int]]) -> Perm:
    """
    Build a permutation of degree ``n`` from (not necessarily disjoint) cycles,
    applied right to left as in ordinary cycle notation.

    >>> from_cycles(3, [(0, 1)])
    (1, 0, 2)
    >>> from_cycles(3, [(0, 1), (1, 2)])
    (1, 2, 0)
    """
    result = identity(n)
    for cyc in reversed(list(cycle_list)):
        p = list(range(n))
        for x, y in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            p[x] = y
        result = compose(tuple(p), result)
    return result


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """Return p o q, i.e. i -> p(q(i))."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} != {len(q)}")
    return tuple(p[x] for x in q)


def compose_all(perms: Iterable[Sequence[int]], n: int) -> Perm:
    """Left-to-right product p_1 o p_2 o ... o p_r (identity when empty)."""
    result = identity(n)
    for p in perms:
        result = compose(result, p)
    return result


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(p: Sequence[int], r: Sequence[int]) -> Perm:
    """Return r o p o r^-1: the permutation p after relabeling sheet s as r(s)."""
    out = [0] * len(p)
    for s, x in enumerate(p):
        out[r[s]] = r[x]
    return tuple(out)


def cycles(p: Sequence[int]) -> CycleSet:
    """
    Disjoint cycle decomposition, fixed points included as 1-cycles.

    Cycles are listed by least element and each cycle starts at its least
    element, so the output is deterministic.
    """
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return tuple(out)


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def from_cycle_set(n: int, cycle_set: Iterable[Sequence[int]]) -> Perm:
    p = list(range(n))
    for cyc in cycle_set:
        for x, y in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            p[x] = y
    return tuple(p)


def is_transposition(p: Sequence[int]) -> bool:
    moved = [i for i, x in enumerate(p) if x != i]
    return len(moved) == 2


def format_cycles(p: Sequence[int]) -> str:
    """
    Cycle notation with fixed points omitted; the identity is ``()``.

    >>> format_cycles((1, 0, 3, 4, 2))
    '(0 1)(2 3 4)'
    """
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"


def orbits(generators: Sequence[Sequence[int]], n: int | None = None) -> tuple[tuple[int, ...], ...]:
    """
    Orbits of the group generated by ``generators`` on {0, ..., n-1}.

    Blocks are sorted and listed by least element.

    >>> orbits([(1, 0, 2)])
    ((0, 1), (2,))
    >>> orbits([], 3)
    ((0,), (1,), (2,))
    """
    if n is None:
        if not generators:
            raise ValueError("cannot infer the degree from an empty generator list")
        n = len(generators[0])
    if n == 0:
        raise ValueError("empty sheet set")
    for g in generators:
        if len(g) != n:
            raise ValueError(f"degree mismatch: generator of degree {len(g)}, expected {n}")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for i, x in enumerate(g):
            ri, rx = find(i), find(x)
            if ri != rx:
                if ri < rx:
                    parent[rx] = ri
                else:
                    parent[ri] = rx
    blocks: dict[int, list[int]] = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(i)
    return tuple(tuple(b) for b in sorted(blocks.values()))


def is_transitive(generators: Sequence[Sequence[int]], n: int | None = None) -> bool:
    return len(orbits(generators, n)) == 1


def centralizer_order(generators: Sequence[Sequence[int]], n: int | None = None) -> int:
    """
    Order of the centralizer in Sym(n) of a transitive permutation group.

    For a transitive group an element c of the centralizer is pinned down by
    c(0): if c(0) = t then c(g(0)) = g(t) for every g.  Each candidate t is
    propagated over the Schreier graph and kept when the propagation is a
    well-defined bijection.  This is the deck group order of the cover.
    """
    if n is None:
        if not generators:
            raise ValueError("cannot infer the degree from an empty generator list")
        n = len(generators[0])
    reach = {0}
    stack = [0]
    while stack:
        s = stack.pop()
        for g in generators:
            if g[s] not in reach:
                reach.add(g[s])
                stack.append(g[s])
    if len(reach) != n:
        raise ValueError("generators do not act transitively")
    count = 0
    for t in range(n):
        image = [-1] * n
        image[0] = t
        stack = [0]
        ok = True
        while stack and ok:
            s = stack.pop()
            for g in generators:
                u, v = g[s], g[image[s]]
                if image[u] == -1:
                    image[u] = v
                    stack.append(u)
                elif image[u] != v:
                    ok = False
                    break
        if ok and len(set(image)) == n:
            count += 1
    return count


def all_perms(n: int) -> list[Perm]:
    return [tuple(p) for p in itertools.permutations(range(n))]
