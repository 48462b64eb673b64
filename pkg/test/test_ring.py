"""
Tests for exact cyclotomic arithmetic and Dirichlet characters
"""
import cmath
import logging
from fractions import Fraction

import numpy as np
import pytest

from errors import ArgumentError
from ring import (
    CycNumber,
    DirichletCharacter,
    char_eval,
    cyc_root_of_unity,
    gauss_g1,
    legendre,
    odd_squarefree_primes,
    parse_character,
    prime_power,
    sqrt_integer,
    sqrt_prime
)

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

SMALL_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23)


def test_roots_of_unity():
    """zeta_4^2 = -1 and 1 + zeta_3 + zeta_3^2 = 0"""
    assert cyc_root_of_unity(4, 1) ** 2 == -1
    assert 1 + cyc_root_of_unity(3, 1) + cyc_root_of_unity(3, 2) == 0
    assert cyc_root_of_unity(6, 6) == 1


def test_mixed_levels_lift_to_lcm():
    z = cyc_root_of_unity(4, 1) * cyc_root_of_unity(3, 1)
    assert z.level == 12
    assert abs(z.to_complex() - cmath.exp(2j * cmath.pi * (1 / 4 + 1 / 3))) < 1e-12


def test_inverse_and_division():
    x = 1 + cyc_root_of_unity(5, 1)
    assert x * x.inverse() == 1
    assert (x / x) == 1
    assert CycNumber.from_rational(3) / 6 == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        x / CycNumber.zero()


def test_negative_powers():
    z = cyc_root_of_unity(7, 2)
    assert z ** -1 == cyc_root_of_unity(7, 5)
    assert z ** 0 == 1


def test_conjugate_of_root():
    z = cyc_root_of_unity(8, 3)
    assert z.conj() == cyc_root_of_unity(8, 5)
    assert z.abs2() == 1


def test_numeric_embedding_is_multiplicative():
    rng = np.random.default_rng(11)
    for level in (5, 8, 12):
        for _ in range(5):
            a = CycNumber.from_exponent_counts(level, rng.integers(-3, 4, size=level).tolist())
            b = CycNumber.from_exponent_counts(level, rng.integers(-3, 4, size=level).tolist())
            assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-10
            assert abs((a + b).to_complex() - a.to_complex() - b.to_complex()) < 1e-10


@pytest.mark.parametrize("q", SMALL_PRIMES)
def test_gauss_sum_squares_to_signed_prime(q):
    assert gauss_g1(q) ** 2 == legendre(-1, q) * q
    assert sqrt_prime(q) ** 2 == q


@pytest.mark.parametrize("q", SMALL_PRIMES)
def test_gauss_sum_closed_form(q):
    """g1(q) is sqrt(q) for q = 1 mod 4 and i sqrt(q) for q = 3 mod 4"""
    expected = q ** 0.5 if q % 4 == 1 else 1j * q ** 0.5
    assert abs(gauss_g1(q).to_complex() - expected) < 1e-9
    assert abs(sqrt_prime(q).to_complex() - q ** 0.5) < 1e-9


def test_square_roots_of_integers():
    assert sqrt_integer(12) ** 2 == 12
    assert sqrt_integer(-3) ** 2 == -3
    assert abs(sqrt_integer(-3).to_complex() - 1j * 3 ** 0.5) < 1e-12
    assert sqrt_integer(0) == 0


def test_half_integer_prime_powers():
    assert prime_power(3, Fraction(3, 2)) ** 2 == 27
    assert prime_power(5, -1) == Fraction(1, 5)
    assert prime_power(5, Fraction(-1, 2)) * sqrt_prime(5) == 1
    with pytest.raises(ArgumentError):
        prime_power(3, Fraction(1, 3))


def test_serialized_value_restores():
    x = cyc_root_of_unity(12, 5) * Fraction(-2, 3) + 1
    payload = x.to_dict()
    assert CycNumber.from_dict(payload) == x
    assert payload['approx']['re'] == pytest.approx(x.to_complex().real, abs=1e-4)


def test_canonical_level():
    assert cyc_root_of_unity(28, 4).canonical().level == 7
    assert cyc_root_of_unity(6, 1).canonical().level == 3
    assert cyc_root_of_unity(6, 1).canonical() == cyc_root_of_unity(6, 1)
    assert sqrt_prime(5).lift(60).canonical().level == 5
    assert sqrt_prime(3).canonical().level == 12
    assert cyc_root_of_unity(4, 1).lift(20).canonical().level == 4
    assert CycNumber.from_rational(Fraction(7, 3)).lift(28).canonical().level == 1


def test_equal_numbers_serialize_identically():
    x = 1 + cyc_root_of_unity(7, 3) * Fraction(5, 2)
    assert x.lift(28).to_dict() == x.to_dict()
    assert x.to_dict()['L'] == 7
    rational = CycNumber.from_rational(940800).lift(28).to_dict()
    assert rational['L'] == 1
    assert rational['coeffs'] == ["940800/1"]


def test_legendre_and_level_checks():
    assert legendre(2, 7) == 1
    assert legendre(3, 7) == -1
    assert odd_squarefree_primes(15) == (3, 5)
    assert odd_squarefree_primes(1) == ()
    with pytest.raises(ArgumentError):
        odd_squarefree_primes(9)
    with pytest.raises(ArgumentError):
        odd_squarefree_primes(6)


def test_quadratic_character_values():
    chi = DirichletCharacter(15, {5: (2, 1)})
    assert chi.value(7) == -1
    assert chi.value(11) == 1
    assert chi.value(13) == -1
    assert chi.value(Fraction(1, 7)) == -1
    # the modulus is 60, so 2 and 3 are not units
    assert chi.value(2) == 0
    assert chi.value(3) == 0
    assert chi.value(2, moduli=(5,)) == -1
    assert chi.square().is_trivial_at(5)
    assert char_eval(chi, 7) == chi.value(7)
    chi4 = parse_character('quadratic@4', 3)
    assert char_eval(chi4, 7) == -1
    assert char_eval(chi4, 2) == 0


def test_character_parity():
    assert parse_character('quadratic@5', 15).parity() == 1
    assert parse_character('quadratic@3', 15).parity() == -1
    assert parse_character('quadratic@3,quadratic@4', 15).parity() == 1
    assert parse_character(None, 15).parity() == 1


def test_higher_order_character():
    chi = parse_character('gen^1:4@5', 5)
    assert chi.order_at(5) == 4
    assert not chi.square_is_trivial_at(5)
    assert chi.value(3) ** 4 == 1
    assert chi.value(3) ** 2 == -1
    assert chi.value(9) == chi.value(3) ** 2
    assert chi.value(2) == 0
    # 2 generates (Z/5)^x
    assert chi.value(2, moduli=(5,)) ** 2 == -1


def test_character_spec_errors():
    with pytest.raises(ValueError):
        parse_character('cubic@5', 15)
    with pytest.raises(ArgumentError):
        parse_character('gen^1:3@5', 15)
    with pytest.raises(ArgumentError):
        parse_character('quadratic@7', 15)
