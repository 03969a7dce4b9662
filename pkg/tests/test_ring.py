"""Scalar ring arithmetic: frozen values cross-checked against complex floats."""

import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from bellgate.ring import (
    HALF,
    I_UNIT,
    INV_SQRT2,
    MINUS_ONE,
    OMEGA,
    ONE,
    SQRT2,
    ZERO,
    RingScalar,
    i_power,
    omega_power,
    ring_add,
    ring_conj,
    ring_mul,
    ring_to_complex,
    try_div,
)

W = cmath.exp(1j * math.pi / 4)


def approx_eq(z1, z2, tol=1e-12):
    return abs(z1 - z2) < tol


def test_constants_evaluate_correctly():
    assert approx_eq(ZERO.to_complex(), 0)
    assert approx_eq(ONE.to_complex(), 1)
    assert approx_eq(OMEGA.to_complex(), W)
    assert approx_eq(I_UNIT.to_complex(), 1j)
    assert approx_eq(SQRT2.to_complex(), math.sqrt(2))
    assert approx_eq(INV_SQRT2.to_complex(), math.sqrt(0.5))
    assert approx_eq(HALF.to_complex(), 0.5)


def test_additive_inverse_gives_canonical_zero():
    z = ring_add(ONE, MINUS_ONE)
    assert z == ZERO
    assert z.k == 0


def test_omega_plus_omega_cubed_is_i_sqrt2():
    z = ring_add(OMEGA, RingScalar(0, 0, 0, 1))
    assert z == RingScalar(0, 1, 0, 1)
    assert z.k == 0
    assert approx_eq(z.to_complex(), 1j * math.sqrt(2))


def test_half_sqrt2_doubles_to_sqrt2():
    assert ring_add(INV_SQRT2, INV_SQRT2) == SQRT2
    assert SQRT2.to_tuple() == (0, 1, 0, -1, 0)


def test_inv_sqrt2_squared_is_half():
    z = ring_mul(INV_SQRT2, INV_SQRT2)
    assert z == HALF
    assert z.to_tuple() == (1, 0, 0, 0, 2)
    assert approx_eq(z.to_complex(), 0.5)


def test_omega_power_wraps_with_sign():
    assert ring_mul(OMEGA, RingScalar(0, 0, 0, 1)) == MINUS_ONE
    assert ring_mul(I_UNIT, I_UNIT) == MINUS_ONE
    assert OMEGA ** 8 == ONE
    for s in range(16):
        assert approx_eq(omega_power(s).to_complex(), W ** s)
        assert approx_eq(i_power(s).to_complex(), 1j ** s)


def test_conjugation_table():
    assert ring_conj(I_UNIT) == -I_UNIT
    assert ring_conj(INV_SQRT2) == INV_SQRT2
    assert ring_conj(OMEGA) == RingScalar(0, 0, 0, -1)
    assert approx_eq(ring_conj(OMEGA).to_complex(), W.conjugate())


def test_to_complex_examples():
    assert ring_to_complex(ZERO) == 0
    assert approx_eq(OMEGA.to_complex(), complex(math.sqrt(0.5), math.sqrt(0.5)))
    assert approx_eq(RingScalar(1, 0, 0, 0, 1).to_complex(), math.sqrt(0.5))


def test_canonicalization_reduces_k():
    # 2/sqrt2 is sqrt2
    assert RingScalar(2, 0, 0, 0, 1) == SQRT2
    # (0,0,2,0)/sqrt2 reduces to w + w^3
    assert RingScalar(0, 0, 2, 0, 1) == RingScalar(0, 1, 0, 1)
    # 1/sqrt2 is already irreducible
    assert RingScalar(1, 0, 0, 0, 1).k == 1


def test_zero_normal_form():
    assert RingScalar(0, 0, 0, 0, 5) == ZERO
    assert RingScalar(0, 0, 0, 0, 5).k == 0


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        RingScalar(1, 0, 0, 0, -1)


def test_immutability():
    with pytest.raises(AttributeError):
        ONE.a = 2


def test_division_frozen_cases():
    assert try_div(ONE, INV_SQRT2) == SQRT2
    assert try_div(SQRT2, SQRT2) == ONE
    assert try_div(ONE, OMEGA) == omega_power(7)
    # 1/(1+w) = (w - w^2)/sqrt2
    q = try_div(ONE, RingScalar(1, 1))
    assert q == RingScalar(0, 1, -1, 0, 1)
    assert approx_eq(q.to_complex(), 1 / (1 + W))
    # 1/3 is not in the ring
    assert try_div(ONE, RingScalar(3)) is None
    with pytest.raises(ZeroDivisionError):
        try_div(ONE, ZERO)


def test_unit_detection():
    assert OMEGA.is_unit()
    assert I_UNIT.is_unit()
    assert MINUS_ONE.is_unit()
    assert not SQRT2.is_unit()
    assert not ZERO.is_unit()


coeffs = st.integers(min_value=-50, max_value=50)
ks = st.integers(min_value=0, max_value=6)
scalars = st.builds(RingScalar, coeffs, coeffs, coeffs, coeffs, ks)


@settings(max_examples=200)
@given(scalars, scalars, scalars)
def test_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


@settings(max_examples=200)
@given(scalars, scalars)
def test_conj_is_involutive_homomorphism(x, y):
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()


@settings(max_examples=200)
@given(scalars, ks)
def test_canonical_form_is_unique(x, extra):
    lifted = x * (SQRT2 ** extra)
    rebuilt = RingScalar(lifted.a, lifted.b, lifted.c, lifted.d, lifted.k + extra)
    assert rebuilt == x
    assert rebuilt.to_tuple() == x.to_tuple()


@settings(max_examples=200)
@given(scalars, scalars)
def test_float_evaluation_is_a_homomorphism(x, y):
    assert approx_eq((x * y).to_complex(), x.to_complex() * y.to_complex(), tol=1e-8)
    assert approx_eq((x + y).to_complex(), x.to_complex() + y.to_complex(), tol=1e-8)


@settings(max_examples=200)
@given(scalars, scalars)
def test_division_round_trip(x, y):
    if y.is_zero():
        return
    q = try_div(x, y)
    if q is not None:
        assert q * y == x
