import pytest

from bhcover.cover import (InvalidCover, deck_group_order, euler_characteristic_total, fiber,
                           from_images, has_equal_ramification, has_property_nu, is_regular,
                           is_simple_cover, properties, total_genus, validate)
from bhcover.presentation import Signature
from conftest import T01, T12
from oracles import brute_centralizer, chi_by_complex, enumerate_covers


def test_f5_valid_and_basic(f5):
    assert f5.degree == 3
    assert euler_characteristic_total(f5) == -4
    assert total_genus(f5) == 3
    assert not is_regular(f5)
    assert deck_group_order(f5) == 1
    assert is_simple_cover(f5)
    assert not has_property_nu(f5)


def test_fiber_data(f5):
    fd = fiber(f5, 1)
    assert fd.cycles == ((0, 1), (2,))
    assert fd.ramification_numbers == (2, 1)
    assert fd.preimage_count == 2
    with pytest.raises(IndexError):
        fiber(f5, 11)


def test_hyperelliptic_properties(hyper):
    assert properties(hyper) == {"regular": True, "NU": True, "equal_ramification": True, "simple": True}
    assert total_genus(hyper) == 2


def test_violations_reported_together():
    with pytest.raises(InvalidCover) as e:
        validate(0, 3, 3, c=[T01, T01, (0, 1, 2)])
    assert "TrivialBranchPoint" in e.value.kinds
    assert "NotTransitive" in e.value.kinds


def test_relation_violation():
    with pytest.raises(InvalidCover) as e:
        validate(0, 3, 3, c=[T01, T12, T12])
    assert e.value.kinds == {"RelationViolated"}


def test_shape_errors():
    with pytest.raises(InvalidCover) as e:
        validate(0, 2, 3, c=[T01, (0, 1)])
    assert "DegreeMismatch" in e.value.kinds
    with pytest.raises(InvalidCover) as e:
        validate(0, 2, 3, c=[T01, (0, 0, 1)])
    assert "NotAPermutation" in e.value.kinds
    with pytest.raises(InvalidCover):
        validate(0, 2, 3, c=[T01])
    with pytest.raises(InvalidCover):
        validate(0, 0, 0)


def test_unbranched_torus_cover():
    c = validate(1, 0, 2, a=[(1, 0)], b=[(0, 1)])
    assert euler_characteristic_total(c) == 0
    assert has_property_nu(c)  # vacuous


def test_from_images_mapping():
    sig = Signature(0, 2)
    c = from_images(sig, {"c1": (1, 0), "c2": (1, 0)})
    assert c.c_image(2) == (1, 0)


def test_equal_ramification_not_nu_example():
    c = validate(0, 3, 3, c=[(1, 2, 0), (1, 2, 0), (1, 2, 0)])
    assert has_equal_ramification(c) and has_property_nu(c) and is_regular(c)


@pytest.mark.parametrize("g,k,n", [(0, 3, 3), (0, 4, 3), (1, 1, 3), (1, 2, 3), (0, 3, 4)])
def test_small_range_against_oracles(g, k, n):
    count = 0
    for cov in enumerate_covers(g, k, n):
        count += 1
        valid = validate(g, k, n, a=cov.a, b=cov.b, c=cov.c)
        assert valid == cov
        assert euler_characteristic_total(cov) == chi_by_complex(cov)
        assert deck_group_order(cov) == brute_centralizer(cov.images, n)
    assert count > 0


@pytest.mark.parametrize("g,k,n,simple", [(0, 4, 3, False), (1, 1, 3, False), (0, 3, 4, False),
                                          (1, 2, 3, False), (0, 6, 3, True), (1, 2, 4, True)])
def test_restricted_enumeration_meets_every_class(g, k, n, simple):
    from oracles import brute_canonical
    full = {brute_canonical(c.images, n) for c in enumerate_covers(g, k, n, simple, up_to_first=False)}
    cut = {brute_canonical(c.images, n) for c in enumerate_covers(g, k, n, simple)}
    assert full == cut and full
