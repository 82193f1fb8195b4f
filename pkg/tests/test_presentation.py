import pytest
from hypothesis import given
from hypothesis import strategies as st

from bhcover.presentation import (Signature, WordError, apply_automorphism, are_inverse,
                                  automorphism_from_strings, braid_generators, commutator,
                                  compose_automorphisms, cyclically_reduce, format_word, half_twist,
                                  invert_word, parse_word, reduce_word, relator, relator_preserved)


def test_signature():
    s = Signature(1, 2)
    assert s.generators == ("a1", "b1", "c1", "c2")
    assert s.euler_characteristic == 0
    assert s.punctured_euler_characteristic == -2
    with pytest.raises(ValueError):
        Signature(-1, 0)


def test_parse_format_roundtrip():
    assert parse_word("c1 c2 C1") == ("c1", "c2", "C1")
    assert parse_word("1") == ()
    assert format_word(()) == "1"
    assert format_word(parse_word("a1B1c10")) == "a1B1c10"
    with pytest.raises(WordError):
        parse_word("x1")
    with pytest.raises(WordError):
        parse_word("c1c")


def test_relator_and_commutator():
    assert relator(Signature(1, 2)) == ("a1", "b1", "A1", "B1", "c1", "c2")
    assert commutator(("a1",), ("b1",)) == ("a1", "b1", "A1", "B1")
    assert reduce_word(("c1", "C1")) == ()
    assert cyclically_reduce(("c1", "c2", "C1")) == ("c2",)


def test_half_twist_images():
    s1 = half_twist(3, 1)
    assert apply_automorphism(s1, ("c1",)) == ("c1", "c2", "C1")
    assert apply_automorphism(s1, ("c2",)) == ("c1",)
    assert apply_automorphism(s1, ("c3",)) == ("c3",)
    with pytest.raises(ValueError):
        half_twist(3, 3)


@pytest.mark.parametrize("k", [2, 3, 4, 6, 10])
def test_braid_generators_preserve_relator_and_pair_up(k):
    sig = Signature(0, k)
    gens = braid_generators(sig)
    assert len(gens) == 2 * (k - 1)
    for f in gens:
        assert relator_preserved(f, sig)
    for f, g in zip(gens[::2], gens[1::2]):
        assert are_inverse(f, g, sig)


def test_braid_generators_need_genus_zero():
    with pytest.raises(ValueError):
        braid_generators(Signature(1, 2))


def test_bad_substitution_not_preserving():
    sig = Signature(0, 3)
    bad = automorphism_from_strings("bad", {"c1": "c2"})
    assert not relator_preserved(bad, sig)
    outside = automorphism_from_strings("out", {"a1": "a1"})
    assert not relator_preserved(outside, sig)


words = st.lists(st.sampled_from(["c1", "c2", "c3", "C1", "C2", "C3"]), max_size=12).map(tuple)


@given(words, words)
def test_substitution_is_homomorphism(u, v):
    f = half_twist(3, 2)
    assert apply_automorphism(f, u + v) == reduce_word(apply_automorphism(f, u) + apply_automorphism(f, v))


@given(words)
def test_inverse_twist_undoes(w):
    f, g = half_twist(4, 1), half_twist(4, 1, inverse=True)
    assert apply_automorphism(g, apply_automorphism(f, w)) == reduce_word(w)
    assert apply_automorphism(f, invert_word(w)) == invert_word(apply_automorphism(f, w))


def test_compose_automorphisms_order():
    f, g = half_twist(3, 1), half_twist(3, 2)
    h = compose_automorphisms(f, g)
    for x in ("c1", "c2", "c3"):
        assert h.image(x) == apply_automorphism(f, apply_automorphism(g, (x,)))
