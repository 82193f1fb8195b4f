"""
Lifting simple closed curves and deciding the weak curve lifting property.

A separating curve in the base is described by a :class:`CutPresentation`:
the generators living on each side, the Euler characteristic of each closed
side, and the boundary word.  Components of the preimage are the cycles of
rho(boundary).  Components of the preimage of each side are orbits of the
side's subgroup, and their Euler characteristics follow from Riemann-Hurwitz
applied to the restricted cover.  The resulting region graph (regions as
nodes, lifted curve components as edges) decides essentiality: a component
bounds a disk exactly when cutting along it separates and one side has
Euler characteristic 1.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from . import perm as P
from .cover import (MonodromyCover, euler_characteristic_total, has_property_nu, is_regular,
                    is_simple_cover)
from .orbit import OrbitLimitExceeded, canonicalize, follow_transversal, iter_orbit
from .presentation import (Automorphism, Signature, Word, base_letter, braid_generators,
                           format_word, parse_word)


class MalformedCut(ValueError):
    pass


class UnsupportedSignature(ValueError):
    pass


class HypothesisError(ValueError):
    """An operation was called outside the hypotheses it relies on."""


@dataclass(frozen=True)
class CutPresentation:
    side_a: tuple[str, ...]
    chi_a: int
    side_b: tuple[str, ...]
    chi_b: int
    boundary: Word
    label: str = ""

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "side_a": list(self.side_a),
            "chi_a": self.chi_a,
            "side_b": list(self.side_b),
            "chi_b": self.chi_b,
            "boundary": format_word(self.boundary),
        }

    @classmethod
    def from_dict(cls, d: dict) -> CutPresentation:
        return cls(tuple(d["side_a"]), int(d["chi_a"]), tuple(d["side_b"]), int(d["chi_b"]),
                   parse_word(d["boundary"]), d.get("label", ""))


def check_cut(sig: Signature, cut: CutPresentation) -> None:
    gens = sig.generators
    a, b = set(cut.side_a), set(cut.side_b)
    if a & b or (a | b) != set(gens) or len(cut.side_a) + len(cut.side_b) != len(gens):
        raise MalformedCut(f"sides {sorted(a)} / {sorted(b)} do not partition {list(gens)}")
    if cut.chi_a + cut.chi_b != sig.euler_characteristic:
        raise MalformedCut(f"side Euler characteristics {cut.chi_a} + {cut.chi_b} "
                           f"!= {sig.euler_characteristic}")
    if not cut.boundary or any(base_letter(x) not in a for x in cut.boundary):
        raise MalformedCut(f"boundary word {format_word(cut.boundary)} is not a word in side A")


def standard_cut(sig: Signature, m: int) -> CutPresentation:
    """
    The curve c1...cm bounding a disk around x_1..x_m.

    On the sphere it is essential for 2 <= m <= k-2; with positive genus the
    other side carries the handles and m may run up to k.
    """
    k = sig.branch_count
    top = k - 2 if sig.genus == 0 else k
    if not 2 <= m <= top:
        raise ValueError(f"standard curve with m={m} is not essential for {sig}")
    side_a = tuple(f"c{i}" for i in range(1, m + 1))
    side_b = tuple(g for g in sig.generators if g not in side_a)
    return CutPresentation(side_a, 1, side_b, sig.euler_characteristic - 1, side_a, f"m={m}")


def adjacent_cut(sig: Signature, i: int) -> CutPresentation:
    """The curve c_i c_{i+1} around two neighbouring branch points."""
    if not 1 <= i < sig.branch_count:
        raise ValueError(f"no adjacent pair ({i}, {i + 1}) among {sig.branch_count} branch points")
    side_a = (f"c{i}", f"c{i + 1}")
    side_b = tuple(g for g in sig.generators if g not in side_a)
    return CutPresentation(side_a, 1, side_b, sig.euler_characteristic - 1, side_a,
                           f"pair={i},{i + 1}")


@dataclass(frozen=True)
class LiftedComponent:
    sheets: tuple[int, ...]
    essential: bool | None = None
    side_chis: tuple[int, int] | None = None  # None when the component does not separate

    @property
    def degree(self) -> int:
        return len(self.sheets)

    def to_dict(self) -> dict:
        return {
            "sheets": list(self.sheets),
            "degree": self.degree,
            "essential": self.essential,
            "separating": self.side_chis is not None if self.essential is not None else None,
            "side_chis": list(self.side_chis) if self.side_chis is not None else None,
        }


@dataclass(frozen=True)
class LiftedMulticurve:
    components: tuple[LiftedComponent, ...]

    @property
    def all_inessential(self) -> bool:
        return all(c.essential is False for c in self.components)

    @property
    def any_essential(self) -> bool:
        return any(c.essential for c in self.components)

    def to_list(self) -> list[dict]:
        return [c.to_dict() for c in self.components]


@dataclass(frozen=True)
class Region:
    side: str
    sheets: tuple[int, ...]
    chi: int

    def to_dict(self) -> dict:
        return {"side": self.side, "sheets": list(self.sheets), "chi": self.chi}


@dataclass(frozen=True)
class RegionGraph:
    a_nodes: tuple[Region, ...]
    b_nodes: tuple[Region, ...]
    edges: tuple[tuple[int, int], ...]  # per lifted component: (A-node index, B-node index)

    @property
    def total_chi(self) -> int:
        return sum(r.chi for r in self.a_nodes) + sum(r.chi for r in self.b_nodes)

    def to_dict(self) -> dict:
        return {
            "a_nodes": [r.to_dict() for r in self.a_nodes],
            "b_nodes": [r.to_dict() for r in self.b_nodes],
            "edges": [list(e) for e in self.edges],
        }


def lift_components(cover: MonodromyCover, cut: CutPresentation) -> LiftedMulticurve:
    """Components of the preimage of the cut curve: cycles of rho(boundary)."""
    check_cut(cover.sig, cut)
    return LiftedMulticurve(tuple(LiftedComponent(c) for c in P.cycles(cover.evaluate(cut.boundary))))


def _side_regions(cover: MonodromyCover, side: str, gens: Sequence[str], chi_side: int) -> tuple[Region, ...]:
    perms = [cover.image(g) for g in gens]
    branch = [cover.image(g) for g in gens if g.startswith("c")]
    regions = []
    for block in P.orbits(perms, cover.degree):
        size = len(block)
        members = set(block)
        chi = size * chi_side
        for p in branch:
            local_cycles = sum(1 for c in P.cycles(p) if c[0] in members)
            chi -= size - local_cycles
        regions.append(Region(side, block, chi))
    return tuple(regions)


def region_graph(cover: MonodromyCover, cut: CutPresentation) -> RegionGraph:
    check_cut(cover.sig, cut)
    a_nodes = _side_regions(cover, "A", cut.side_a, cut.chi_a)
    b_nodes = _side_regions(cover, "B", cut.side_b, cut.chi_b)
    a_of = {s: i for i, r in enumerate(a_nodes) for s in r.sheets}
    b_of = {s: i for i, r in enumerate(b_nodes) for s in r.sheets}
    edges = []
    for cyc in P.cycles(cover.evaluate(cut.boundary)):
        if len({a_of[s] for s in cyc}) != 1 or len({b_of[s] for s in cyc}) != 1:
            raise MalformedCut(f"lifted component {list(cyc)} straddles several regions; "
                               f"boundary word {format_word(cut.boundary)} does not match the sides")
        edges.append((a_of[cyc[0]], b_of[cyc[0]]))
    return RegionGraph(a_nodes, b_nodes, tuple(edges))


def _flags_from_graph(graph: RegionGraph, total_chi: int) -> list[tuple[bool, tuple[int, int] | None]]:
    na = len(graph.a_nodes)
    node_chi = [r.chi for r in graph.a_nodes] + [r.chi for r in graph.b_nodes]
    out = []
    for skip in range(len(graph.edges)):
        parent = list(range(len(node_chi)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for idx, (u, v) in enumerate(graph.edges):
            if idx != skip:
                parent[find(u)] = find(na + v)
        u, v = graph.edges[skip]
        root_a, root_b = find(u), find(na + v)
        if root_a == root_b:
            out.append((True, None))
            continue
        side_a = sum(c for i, c in enumerate(node_chi) if find(i) == root_a)
        side_b = total_chi - side_a
        out.append((side_a != 1 and side_b != 1, (side_a, side_b)))
    return out


def essential_flags(cover: MonodromyCover, cut: CutPresentation) -> LiftedMulticurve:
    """
    Mark each lifted component essential or not.

    Valid for any closed total space (on a sphere every component comes out
    inessential); the Birman-Hilden consequences additionally need chi < 0.
    """
    return analyze_cut(cover, cut)[1]


def analyze_cut(cover: MonodromyCover, cut: CutPresentation) -> tuple[RegionGraph, LiftedMulticurve]:
    """Region graph and flagged lift together."""
    graph = region_graph(cover, cut)
    total = euler_characteristic_total(cover)
    cycles = P.cycles(cover.evaluate(cut.boundary))
    flags = _flags_from_graph(graph, total)
    lifted = LiftedMulticurve(tuple(LiftedComponent(c, ess, sides) for c, (ess, sides) in zip(cycles, flags)))
    return graph, lifted


@dataclass(frozen=True)
class WclResult:
    holds: bool
    certificate: dict | None = None
    classes_checked: int = 0
    curves_checked: int = 0
    orbit_keys: tuple | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "classes_checked": self.classes_checked,
            "curves_checked": self.curves_checked,
            "certificate": self.certificate,
        }


def default_wcl_setup(sig: Signature, gens: Sequence[Automorphism] | None,
                      cuts: Sequence[CutPresentation] | None) -> tuple[list[Automorphism], list[CutPresentation]]:
    if sig.genus == 0:
        if sig.branch_count < 4:
            raise UnsupportedSignature(f"a sphere with {sig.branch_count} marked points has no essential curves")
        if gens is None:
            gens = braid_generators(sig)
        if cuts is None:
            cuts = [standard_cut(sig, m) for m in range(2, sig.branch_count // 2 + 1)]
    elif gens is None or cuts is None:
        raise UnsupportedSignature("positive genus needs a user automorphism set and cut catalog")
    for cut in cuts:
        check_cut(sig, cut)
    return list(gens), list(cuts)


def cover_to_images_dict(cover: MonodromyCover) -> dict:
    return {"a": [list(p) for p in cover.a], "b": [list(p) for p in cover.b],
            "c": [list(p) for p in cover.c]}


def wcl_decision(cover: MonodromyCover, gens: Sequence[Automorphism] | None = None,
                 limit: int = 100_000, cuts: Sequence[CutPresentation] | None = None,
                 workers: int = 1) -> WclResult:
    """
    Decide the weak curve lifting property.

    Walks the orbit of the cover under ``gens`` in breadth-first order and,
    for every class, lifts each catalog curve.  The lift of h(gamma) under
    rho equals the lift of gamma under rho o h, so only catalog curves are
    ever cut.  The first class/curve pair whose lift has no essential
    component is returned as the certificate.
    """
    gens, cuts = default_wcl_setup(cover.sig, gens, cuts)
    classes = 0
    curves = 0
    keys = []
    for cls, word in iter_orbit(cover, gens, limit, workers):
        classes += 1
        keys.append(cls.key)
        for cut in cuts:
            curves += 1
            lifted = essential_flags(cls.canonical, cut)
            if lifted.all_inessential:
                cert = {
                    "kind": "wcl",
                    "transversal": list(word),
                    "cut": cut.to_dict(),
                    "m": len(cut.side_a) if cut.label.startswith("m=") else None,
                    "class_cover": cover_to_images_dict(cls.canonical),
                    "components": lifted.to_list(),
                }
                return WclResult(False, cert, classes, curves)
    return WclResult(True, None, classes, curves, tuple(keys))


def verify_wcl_certificate(cover: MonodromyCover, cert: dict, gens: Sequence[Automorphism] | None = None) -> bool:
    """Recompute the certificate's lift from scratch; True iff it is all inessential."""
    if cert.get("kind") != "wcl":
        return False
    if gens is None:
        gens = braid_generators(cover.sig) if cover.sig.genus == 0 and cover.sig.branch_count >= 2 else []
    cut = CutPresentation.from_dict(cert["cut"])
    try:
        moved = follow_transversal(cover, cert["transversal"], gens)
    except KeyError:
        return False
    cls = canonicalize(moved)
    if cover_to_images_dict(cls.canonical) != cert["class_cover"]:
        return False
    lifted = essential_flags(cls.canonical, cut)
    return lifted.all_inessential and lifted.to_list() == cert["components"]


HOLDS, FAILS, INCONCLUSIVE = "BH_HOLDS", "BH_FAILS", "INCONCLUSIVE"

RULE_NU = "NU"
RULE_REGULAR = "regular"
RULE_SIMPLE = "simple-cover"
RULE_WCL = "WCL"
RULE_NONE = "none"


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: str
    certificate: dict | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {"status": self.status, "rule": self.rule, "note": self.note,
                "certificate": self.certificate}


def fiber_table(cover: MonodromyCover) -> list[dict]:
    return [{"branch": f.branch_index, "cycles": [list(c) for c in f.cycles],
             "ramification": list(f.ramification_numbers)} for f in cover.fibers]


def simple_rule_applies(cover: MonodromyCover) -> bool:
    g, k = cover.sig.genus, cover.sig.branch_count
    return (is_simple_cover(cover) and cover.degree >= 3 and k >= 2
            and not (g == 0 and k == 3))


def bh_verdict(cover: MonodromyCover, gens: Sequence[Automorphism] | None = None,
               limit: int = 100_000, cuts: Sequence[CutPresentation] | None = None,
               workers: int = 1) -> Verdict:
    """
    Birman-Hilden verdict by the first applicable rule:
    NU, regular, simple cover, failure of weak curve lifting; otherwise
    inconclusive.
    """
    from .coloring import simple_certificate

    chi = euler_characteristic_total(cover)
    if chi >= 0:
        raise HypothesisError(f"total space has Euler characteristic {chi} >= 0")
    if has_property_nu(cover):
        return Verdict(HOLDS, RULE_NU, {"kind": "NU", "fibers": fiber_table(cover)},
                       "no branch point has an unramified preimage")
    if is_regular(cover):
        return Verdict(HOLDS, RULE_REGULAR, {"kind": "regular", "deck_group_order": cover.degree},
                       "deck group acts transitively on fibers")
    wcl_possible = (cover.sig.genus == 0 and cover.sig.branch_count >= 4) or (
        gens is not None and cuts is not None)
    if simple_rule_applies(cover):
        cert = {"kind": "simple-cover", "coloring": simple_certificate(cover, gens, limit).to_dict(),
                "wcl": None}
        if wcl_possible:
            res = wcl_decision(cover, gens, limit, cuts, workers)
            cert["wcl"] = res.certificate
        return Verdict(FAILS, RULE_SIMPLE, cert,
                       "simple cover of degree >= 3: a curve around two differently coloured "
                       "branch points lifts to inessential curves")
    if wcl_possible:
        res = wcl_decision(cover, gens, limit, cuts, workers)
        if not res.holds:
            return Verdict(FAILS, RULE_WCL, res.certificate,
                           "a curve lifts to inessential curves only, so a Dehn twist power lies in the kernel")
        return Verdict(INCONCLUSIVE, RULE_NONE, None,
                       "weak curve lifting holds; it is necessary but not known to be sufficient")
    return Verdict(INCONCLUSIVE, RULE_NONE, None,
                   "no rule applies and weak curve lifting was not checked for this signature")


def verify_verdict(cover: MonodromyCover, verdict: Verdict | dict,
                   gens: Sequence[Automorphism] | None = None) -> bool:
    """Re-check a verdict's certificate against the cover."""
    from .coloring import verify_simple_certificate

    v = verdict.to_dict() if isinstance(verdict, Verdict) else verdict
    cert = v.get("certificate")
    if v["status"] == INCONCLUSIVE:
        return True
    if cert is None:
        return False
    rule = v["rule"]
    if rule == RULE_NU:
        return has_property_nu(cover) and cert["fibers"] == fiber_table(cover)
    if rule == RULE_REGULAR:
        return is_regular(cover)
    if rule == RULE_SIMPLE:
        ok = simple_rule_applies(cover) and verify_simple_certificate(cover, cert["coloring"], gens)
        if cert.get("wcl") is not None:
            ok = ok and verify_wcl_certificate(cover, cert["wcl"], gens)
        return ok
    if rule == RULE_WCL:
        return verify_wcl_certificate(cover, cert, gens)
    return False


__all__ = [
    "CutPresentation", "LiftedComponent", "LiftedMulticurve", "Region", "RegionGraph",
    "Verdict", "WclResult", "MalformedCut", "UnsupportedSignature", "HypothesisError",
    "OrbitLimitExceeded", "standard_cut", "adjacent_cut", "check_cut", "lift_components",
    "region_graph", "analyze_cut", "essential_flags", "wcl_decision", "verify_wcl_certificate", "bh_verdict",
    "verify_verdict", "HOLDS", "FAILS", "INCONCLUSIVE",
]
