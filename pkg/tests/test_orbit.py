import random

import pytest

from bhcover import perm as P
from bhcover.cover import validate
from bhcover.orbit import (AutomorphismError, OrbitLimitExceeded, act, canonicalize, follow_transversal,
                           in_liftable_subgroup, mcg_orbit)
from bhcover.presentation import (Signature, automorphism_from_strings, braid_generators,
                                  compose_automorphisms, half_twist, identity_automorphism)
from conftest import T01, T12
from oracles import brute_canonical, enumerate_covers


def relabel(cover, r):
    return validate(cover.genus, cover.branch_count, cover.degree,
                    [P.conjugate(p, r) for p in cover.a], [P.conjugate(p, r) for p in cover.b],
                    [P.conjugate(p, r) for p in cover.c])


def test_canonical_matches_brute_force():
    for g, k, n in [(0, 4, 3), (0, 3, 4), (1, 1, 4), (0, 4, 4)]:
        for cov in enumerate_covers(g, k, n):
            cls = canonicalize(cov)
            assert cls.key == brute_canonical(cov.images, n)
            assert tuple(P.conjugate(p, cls.witness) for p in cov.images) == cls.key


def test_canonical_relabeling_invariant(f5):
    r = (2, 0, 1)
    assert canonicalize(relabel(f5, r)).key == canonicalize(f5).key
    trivial = validate(1, 0, 1, a=[(0,)], b=[(0,)])
    assert canonicalize(trivial).canonical == trivial


def test_act_examples(f5, hyper):
    s2 = braid_generators(f5.sig)[2]
    assert s2.label == "sigma_2"
    moved = act(f5, s2)
    assert moved.c_image(2) == (2, 1, 0)
    assert moved.c_image(3) == T01
    assert act(f5, identity_automorphism()) == f5
    assert act(hyper, half_twist(6, 1)) == hyper


def test_act_right_action_law(f5):
    rng = random.Random(3)
    gens = braid_generators(f5.sig)
    for _ in range(20):
        f, g = rng.choice(gens), rng.choice(gens)
        assert act(act(f5, f), g) == act(f5, compose_automorphisms(f, g))


def test_act_rejects_bad_automorphism(f5):
    with pytest.raises(AutomorphismError):
        act(f5, automorphism_from_strings("bad", {"c1": "c2"}))


def test_in_liftable_subgroup(f5, hyper):
    assert in_liftable_subgroup(f5, identity_automorphism())
    assert in_liftable_subgroup(hyper, half_twist(6, 1))
    assert not in_liftable_subgroup(f5, half_twist(10, 2))


def test_orbit_small_examples(hyper, f5):
    t = mcg_orbit(hyper, braid_generators(hyper.sig))
    assert len(t) == 1 and t.transversal == ((),)
    assert len(mcg_orbit(f5, [])) == 1
    with pytest.raises(OrbitLimitExceeded):
        mcg_orbit(f5, braid_generators(f5.sig), limit=10)


def test_orbit_equals_class_count_genus0():
    # braid orbits partition the classes; the union over orbits must be every class
    for k, n in [(4, 3), (5, 3), (6, 3), (4, 4)]:
        sig = Signature(0, k)
        gens = braid_generators(sig)
        classes = {canonicalize(c).key for c in enumerate_covers(0, k, n)}
        covered = set()
        while classes - covered:
            start = min(classes - covered)
            table = mcg_orbit(validate(0, k, n, c=start), gens)
            keys = set(table.keys())
            assert keys <= classes
            assert not keys & covered
            covered |= keys
        assert covered == classes


def test_transversal_round_trip_and_generator_order(f5):
    sig = Signature(0, 6)
    base = validate(0, 6, 3, c=[T01, T01, T12, T12, T12, T12])
    gens = braid_generators(sig)
    table = mcg_orbit(base, gens)
    for cls, word in zip(table.classes, table.transversal):
        assert canonicalize(follow_transversal(base, word, gens)).key == cls.key
    rev = mcg_orbit(relabel(base, (1, 2, 0)), list(reversed(gens)))
    assert set(rev.keys()) == set(table.keys())


def test_parallel_matches_sequential():
    base = validate(0, 6, 3, c=[T01, T01, T12, T12, T12, T12])
    gens = braid_generators(base.sig)
    a = mcg_orbit(base, gens)
    b = mcg_orbit(base, gens, workers=2)
    assert a == b
