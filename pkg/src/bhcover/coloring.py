"""
Colorings of branch points and the bipartite graphs Gamma_ij.

The color of x_i is rho(c_i); each preimage of x_i carries the cycle of
rho(c_i) it corresponds to.  Gamma_ij has the cycles of rho(c_i) on the left,
the cycles of rho(c_j) on the right, and one edge per sheet joining the two
cycles containing it.  A component of Gamma_ij is a tree exactly when the
matching region over a disk around x_i and x_j is itself a disk, so a forest
forces every lift of that curve to be inessential.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from . import perm as P
from .cover import MonodromyCover, is_simple_cover
from .lifting import HypothesisError, adjacent_cut, essential_flags, simple_rule_applies
from .orbit import follow_transversal
from .presentation import (Automorphism, Word, format_word, invert_word, parse_word)


@dataclass(frozen=True)
class ColorData:
    branch_index: int
    color_of_point: P.Perm
    fiber_colors: P.CycleSet

    def product(self) -> P.Perm:
        return P.from_cycle_set(len(self.color_of_point), self.fiber_colors)


def color(cover: MonodromyCover, i: int) -> ColorData:
    p = cover.c_image(i)
    return ColorData(i, p, P.cycles(p))


@dataclass(frozen=True)
class GammaGraph:
    left: P.CycleSet
    right: P.CycleSet
    edges: tuple[tuple[int, int], ...]  # edges[s] = (left cycle of s, right cycle of s)
    i: int | None = None
    j: int | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.left) + len(self.right)

    def degrees(self) -> tuple[list[int], list[int]]:
        dl = [0] * len(self.left)
        dr = [0] * len(self.right)
        for u, v in self.edges:
            dl[u] += 1
            dr[v] += 1
        return dl, dr

    def to_dict(self) -> dict:
        def fmt(c):
            return "(" + " ".join(map(str, c)) + ")"
        return {
            "i": self.i,
            "j": self.j,
            "left": [fmt(c) for c in self.left],
            "right": [fmt(c) for c in self.right],
            "edges": [{"sheet": s, "left": u, "right": v} for s, (u, v) in enumerate(self.edges)],
            "forest": is_forest(self),
        }


def gamma_from_perms(p: P.Perm, q: P.Perm, i: int | None = None, j: int | None = None) -> GammaGraph:
    left, right = P.cycles(p), P.cycles(q)
    lo = {s: idx for idx, c in enumerate(left) for s in c}
    ro = {s: idx for idx, c in enumerate(right) for s in c}
    return GammaGraph(left, right, tuple((lo[s], ro[s]) for s in range(len(p))), i, j)


def gamma_graph(cover: MonodromyCover, i: int, j: int) -> GammaGraph:
    if i == j:
        raise ValueError("Gamma_ij needs two distinct branch indices")
    return gamma_from_perms(cover.c_image(i), cover.c_image(j), i, j)


def is_forest(g: GammaGraph) -> bool:
    nl = len(g.left)
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(nl + v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def forest_implies_trivial_lift_check(cover: MonodromyCover, i: int, j: int,
                                      word: Sequence[str] = (),
                                      gens: Sequence[Automorphism] | None = None) -> dict:
    """
    Compare the forest criterion with the region-graph computation on the
    curve around x_i and x_j.  ``word`` (labels from ``gens``) may first move
    the cover; afterwards i and j must be neighbours.
    """
    if word:
        if gens is None:
            raise ValueError("a transversal word needs its automorphism set")
        cover = follow_transversal(cover, word, gens)
    if abs(i - j) != 1:
        raise ValueError(f"branch indices {i} and {j} are not adjacent")
    lo = min(i, j)
    forest = is_forest(gamma_graph(cover, i, j))
    lifted = essential_flags(cover, adjacent_cut(cover.sig, lo))
    report = {
        "i": lo,
        "j": lo + 1,
        "forest": forest,
        "all_inessential": lifted.all_inessential,
        "components": len(lifted.components),
    }
    if not forest:
        report.update(applicable=False, agree=None, note="criterion not applicable")
    else:
        agree = lifted.all_inessential
        report.update(applicable=True, agree=agree,
                      note="agree" if agree else "disagree: forest but an essential lift")
    return report


@dataclass(frozen=True)
class SimpleCertificate:
    transversal: tuple[str, ...]
    i: int
    j: int
    conjugator: Word
    colors: tuple[P.Perm, P.Perm]
    gamma: GammaGraph
    components: tuple[dict, ...]

    def to_dict(self) -> dict:
        return {
            "kind": "coloring",
            "transversal": list(self.transversal),
            "i": self.i,
            "j": self.j,
            "conjugator": format_word(self.conjugator),
            "colors": [list(c) for c in self.colors],
            "gamma": self.gamma.to_dict(),
            "components": list(self.components),
        }


def _pair_perms(cover: MonodromyCover, i: int, j: int, conj: Word) -> tuple[P.Perm, P.Perm, Word]:
    ci = (f"c{i}",)
    word_i = tuple(conj) + ci + invert_word(conj)
    return cover.evaluate(word_i), cover.c_image(j), word_i + (f"c{j}",)


def _disk_components(cover: MonodromyCover, p: P.Perm, q: P.Perm, boundary: Word) -> tuple[dict, ...]:
    """Lift of the curve around the pair: one row per component with its A-region's chi."""
    region_of = {}
    region_chi = {}
    for block in P.orbits([p, q], cover.degree):
        members = set(block)
        chi = len(block)
        for r in (p, q):
            chi -= len(block) - sum(1 for c in P.cycles(r) if c[0] in members)
        for s in block:
            region_of[s] = block[0]
        region_chi[block[0]] = chi
    return tuple({"sheets": list(c), "region_chi": region_chi[region_of[c[0]]]}
                 for c in P.cycles(cover.evaluate(boundary)))


def simple_certificate(cover: MonodromyCover, gens: Sequence[Automorphism] | None = None,
                       limit: int = 100_000) -> SimpleCertificate:
    """
    Curve around two branch points of distinct colors, with the Gamma forest.

    If some neighbouring pair already has distinct colors it is used as is.
    Otherwise (only possible with positive genus) c_1 is replaced by
    delta c_1 delta^-1 for a handle generator delta that moves the shared
    transposition.  No orbit search is ever needed, so ``gens`` and ``limit``
    are accepted only to match the other decision procedures.
    """
    if not simple_rule_applies(cover):
        raise HypothesisError("needs a simple cover of degree >= 3 with k >= 2, "
                              "not over the three-marked sphere")
    k = cover.branch_count
    for i in range(1, k):
        if cover.c_image(i) != cover.c_image(i + 1):
            return _certificate(cover, i, i + 1, ())
    s, t = next(c for c in P.cycles(cover.c_image(1)) if len(c) == 2)
    for g in cover.sig.generators[:2 * cover.genus]:
        for letter in (g, g.upper()):
            d = cover.image(letter)
            if {d[s], d[t]} != {s, t}:
                return _certificate(cover, 1, 2, (letter,))
    raise HypothesisError("no handle generator moves the branch transposition; cover is not transitive")


def _certificate(cover: MonodromyCover, i: int, j: int, conj: Word) -> SimpleCertificate:
    p, q, boundary = _pair_perms(cover, i, j, conj)
    gamma = gamma_from_perms(p, q, i, j)
    return SimpleCertificate((), i, j, conj, (p, q), gamma, _disk_components(cover, p, q, boundary))


def verify_simple_certificate(cover: MonodromyCover, cert: dict,
                              gens: Sequence[Automorphism] | None = None) -> bool:
    """Recompute every field of the certificate from the cover."""
    try:
        if cert.get("kind") != "coloring" or not is_simple_cover(cover):
            return False
        if cert["transversal"]:
            if gens is None:
                return False
            cover = follow_transversal(cover, cert["transversal"], gens)
        i, j = int(cert["i"]), int(cert["j"])
        if j != i + 1 or not 1 <= i < cover.branch_count:
            return False
        conj = parse_word(cert["conjugator"])
        if any(x[0] not in "abAB" for x in conj):
            return False
        p, q, boundary = _pair_perms(cover, i, j, conj)
        if p == q or [list(p), list(q)] != cert["colors"]:
            return False
        gamma = gamma_from_perms(p, q, i, j)
        if not is_forest(gamma) or gamma.to_dict() != cert["gamma"]:
            return False
        comps = _disk_components(cover, p, q, boundary)
        if list(comps) != cert["components"] or any(c["region_chi"] != 1 for c in comps):
            return False
        if not conj:
            return essential_flags(cover, adjacent_cut(cover.sig, i)).all_inessential
        return True
    except (KeyError, TypeError, ValueError, IndexError):
        return False
