import random

import pytest
from hypothesis import given, strategies as st

from blockdet.ring import (
    PolynomialRing,
    PrimeField,
    RingMismatchError,
    ZZ,
    parse_ring,
    poly_degree,
    poly_eval_at_zero,
    poly_is_monic,
)

PZ = PolynomialRing("z")
PA = PolynomialRing("a")
F7 = PrimeField(7)
F10007 = PrimeField(10007)


def test_integer_examples():
    assert ZZ.from_int(3) + ZZ.from_int(-5) == ZZ.from_int(-2)
    assert ZZ.from_int(6) * ZZ.from_int(7) == ZZ.from_int(42)


def test_prime_field_examples():
    assert F7.from_int(5) + F7.from_int(4) == F7.from_int(2)
    assert F10007.from_int(10006) * F10007.from_int(10006) == F10007.one


def test_poly_examples():
    a = PA.gen
    one = PA.one
    assert (a + one) + (-a) == one
    z = PZ.gen
    assert z * z == PZ.value((0, 0, 1))


def test_prime_field_modulus_must_be_prime():
    with pytest.raises(ValueError):
        PrimeField(10)
    with pytest.raises(ValueError):
        PrimeField(1)
    PrimeField(2)
    PrimeField(10007)


def test_descriptor_mismatch_raises():
    with pytest.raises(RingMismatchError):
        ZZ.from_int(1) + F7.from_int(1)
    with pytest.raises(RingMismatchError):
        PZ.one * PA.one


def test_poly_canonical_form():
    assert PZ.value((1, 2, 0, 0)).payload == (1, 2)
    assert PZ.value(()).payload == ()
    assert PZ.value((0, 0)).payload == ()
    assert (PZ.value((1, 1)) - PZ.value((0, 1))).payload == (1,)


def test_eval_at_zero():
    assert poly_eval_at_zero(PZ.value((5, 3, 1))) == ZZ.from_int(5)
    assert poly_eval_at_zero(PZ.zero) == ZZ.from_int(0)
    assert poly_eval_at_zero(PA.gen) == ZZ.from_int(0)
    with pytest.raises(ValueError):
        poly_eval_at_zero(ZZ.from_int(1))


def test_monic():
    assert poly_is_monic(PZ.value((3, 0, 1)))
    assert not poly_is_monic(PZ.value((1, 2)))
    assert poly_is_monic(PZ.one)
    assert not poly_is_monic(PZ.from_int(-1))
    assert not poly_is_monic(PZ.zero)
    with pytest.raises(ValueError):
        poly_is_monic(F7.one)


def test_poly_degree():
    assert poly_degree(PZ.zero) == -1
    assert poly_degree(PZ.one) == 0
    assert poly_degree(PZ.value((0, 0, 7))) == 2


def _random_value(ring, rng):
    if isinstance(ring, PrimeField):
        return ring.from_int(rng.randrange(ring.p))
    if isinstance(ring, PolynomialRing):
        return ring.value(tuple(rng.randrange(-9, 10) for _ in range(rng.randrange(0, 5))))
    return ring.from_int(rng.randrange(-999, 1000))


@pytest.mark.parametrize("ring", [ZZ, F10007, PZ], ids=lambda r: r.label)
def test_ring_axioms_randomized(ring):
    rng = random.Random(20161004)
    zero, one = ring.zero, ring.one
    for _ in range(1000):
        x, y, z = (_random_value(ring, rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert x + zero == x
        assert x * one == x
        assert x * zero == zero
        assert x + (-x) == zero


@pytest.mark.parametrize("ring", [F7, F10007], ids=lambda r: r.label)
def test_prime_field_always_reduced(ring):
    rng = random.Random(3)
    for _ in range(500):
        x, y = _random_value(ring, rng), _random_value(ring, rng)
        for v in (x + y, x * y, -x, x - y):
            assert 0 <= v.payload < ring.p


coeffs = st.lists(st.integers(min_value=-50, max_value=50), max_size=6)


@given(coeffs, coeffs)
def test_eval_at_zero_is_a_homomorphism(ca, cb):
    x, y = PZ.value(tuple(ca)), PZ.value(tuple(cb))
    assert poly_eval_at_zero(x + y) == poly_eval_at_zero(x) + poly_eval_at_zero(y)
    assert poly_eval_at_zero(x * y) == poly_eval_at_zero(x) * poly_eval_at_zero(y)


@given(coeffs)
def test_poly_parse_format_roundtrip(ca):
    v = PZ.value(tuple(ca))
    assert PZ.value(PZ.parse_payload(PZ.format_payload(v.payload))) == v


def test_parse_ring_labels():
    assert parse_ring("int") == ZZ
    assert parse_ring("mod:7") == F7
    assert parse_ring("poly:a") == PA
    for bad in ("", "mod:", "mod:abc", "poly:", "float"):
        with pytest.raises(ValueError):
            parse_ring(bad)


def test_ring_label_roundtrip():
    for ring in (ZZ, F7, F10007, PZ, PA):
        assert parse_ring(ring.label) == ring


def test_immutability():
    v = ZZ.from_int(5)
    with pytest.raises(AttributeError):
        v.payload = 6
