"""Exact scalar ring: construction, arithmetic laws, radicals, rendering."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from planaralg import (
    NotInvertibleError,
    NotRepresentableError,
    RadicalScalar,
    ValidationError,
)
from planaralg.radical import sqrt_of_int, sum_scalars

HALF = Fraction(1, 2)


def random_monomial(rng: random.Random) -> RadicalScalar:
    coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    if coeff == 0:
        coeff = Fraction(1)
    exps = {p: rng.randint(0, 7) for p in (2, 3, 5) if rng.random() < 0.6}
    return RadicalScalar.monomial(coeff, exps)


def random_scalar(rng: random.Random) -> RadicalScalar:
    total = RadicalScalar.zero()
    for _ in range(rng.randint(1, 3)):
        total = total + random_monomial(rng)
    return total


class TestConstruction:
    def test_zero_and_one(self):
        assert RadicalScalar.zero() == 0
        assert RadicalScalar.one() == 1
        assert RadicalScalar.zero() != RadicalScalar.one()

    def test_from_rational(self):
        x = RadicalScalar.from_rational(Fraction(3, 4))
        assert x.as_fraction() == Fraction(3, 4)
        assert float(x) == 0.75

    def test_monomial_rejects_composite_base(self):
        with pytest.raises(ValidationError):
            RadicalScalar.monomial(Fraction(1), {4: 1})

    def test_monomial_rejects_nonprime_base(self):
        with pytest.raises(ValidationError):
            RadicalScalar.monomial(Fraction(1), {1: 1})

    def test_exponent_normalization(self):
        # 2^(5/4) folds one whole power of 2 into the coefficient.
        x = RadicalScalar.monomial(Fraction(1), {2: 5})
        assert x == RadicalScalar.monomial(Fraction(2), {2: 1})
        assert str(x) == "2 * 2^(1/4)"

    def test_full_power_collapses_to_rational(self):
        x = RadicalScalar.monomial(Fraction(1, 3), {3: 4})
        assert x.as_fraction() == Fraction(1)

    def test_sqrt_of_int(self):
        assert sqrt_of_int(1) == 1
        two = sqrt_of_int(2)
        assert two * two == 2
        assert sqrt_of_int(4) == 2
        assert sqrt_of_int(12) == RadicalScalar.monomial(Fraction(2), {3: 2})
        with pytest.raises(NotRepresentableError):
            sqrt_of_int(0)


class TestArithmetic:
    def test_add_cancels(self):
        x = RadicalScalar.monomial(Fraction(2, 3), {2: 2})
        assert x + (-x) == RadicalScalar.zero()
        assert x - x == 0

    def test_mul_merges_exponents(self):
        root2 = RadicalScalar.monomial(Fraction(1), {2: 2})
        fourth = RadicalScalar.monomial(Fraction(1), {2: 1})
        assert fourth * fourth == root2
        assert root2 * root2 == 2

    def test_cross_prime_product(self):
        root2 = sqrt_of_int(2)
        root3 = sqrt_of_int(3)
        assert root2 * root3 == sqrt_of_int(6)

    def test_rational_coercion(self):
        x = sqrt_of_int(2)
        assert 2 * x == x + x
        assert x * HALF + x * HALF == x
        assert x + 0 == x

    def test_pow(self):
        x = RadicalScalar.monomial(Fraction(1, 2), {2: 3})
        assert x**0 == 1
        assert x**3 == x * x * x

    def test_pow_negative(self):
        x = RadicalScalar.monomial(Fraction(3), {2: 2})
        assert x**-2 == x.invert() * x.invert()

    @pytest.mark.parametrize("seed", range(5))
    def test_ring_axioms_fuzz(self, seed):
        rng = random.Random(seed)
        for _ in range(200):
            x, y, z = (random_scalar(rng) for _ in range(3))
            assert x + y == y + x
            assert (x + y) + z == x + (y + z)
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z

    def test_sum_scalars(self):
        rng = random.Random(99)
        parts = [random_scalar(rng) for _ in range(6)]
        total = RadicalScalar.zero()
        for p in parts:
            total = total + p
        assert sum_scalars(parts) == total


class TestSqrtInvert:
    def test_sqrt_even_exponents(self):
        x = RadicalScalar.monomial(Fraction(9, 4), {2: 2})
        s = x.sqrt()
        assert s * s == x
        assert s == RadicalScalar.monomial(Fraction(3, 2), {2: 1})

    @pytest.mark.parametrize("seed", range(3))
    def test_sqrt_roundtrip_fuzz(self, seed):
        rng = random.Random(seed)
        for _ in range(100):
            coeff = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            exps = {p: 2 * rng.randint(0, 3) for p in (2, 3, 5)}
            x = RadicalScalar.monomial(coeff, exps)
            s = x.sqrt()
            assert s * s == x

    def test_sqrt_rejects_sum(self):
        x = 1 + sqrt_of_int(2)
        with pytest.raises(NotRepresentableError):
            x.sqrt()

    def test_sqrt_rejects_negative(self):
        with pytest.raises(NotRepresentableError):
            RadicalScalar.from_rational(Fraction(-2)).sqrt()

    def test_sqrt_rejects_odd_exponent(self):
        x = RadicalScalar.monomial(Fraction(1), {2: 1})
        with pytest.raises(NotRepresentableError):
            x.sqrt()

    def test_invert_monomial(self):
        x = RadicalScalar.monomial(Fraction(2, 3), {2: 3, 5: 1})
        assert x * x.invert() == 1

    def test_invert_rejects_sum(self):
        with pytest.raises(NotInvertibleError):
            (1 + sqrt_of_int(2)).invert()

    def test_invert_rejects_zero(self):
        with pytest.raises(NotInvertibleError):
            RadicalScalar.zero().invert()

    @pytest.mark.parametrize("seed", range(3))
    def test_invert_roundtrip_fuzz(self, seed):
        rng = random.Random(seed)
        for _ in range(100):
            x = random_monomial(rng)
            assert x * x.invert() == 1
            assert x.invert().invert() == x


class TestRendering:
    def test_render_examples(self):
        assert str(RadicalScalar.zero()) == "0"
        assert str(RadicalScalar.from_rational(Fraction(-3, 2))) == "-3/2"
        assert str(sqrt_of_int(2)) == "1 * 2^(2/4)"
        x = RadicalScalar.monomial(Fraction(1, 2), {2: 3}) + 1
        assert str(x) == "1 + 1/2 * 2^(3/4)"

    def test_parse_examples(self):
        assert RadicalScalar.parse("0") == 0
        assert RadicalScalar.parse("7/3") == Fraction(7, 3)
        assert RadicalScalar.parse("1 * 2^(2/4)") == sqrt_of_int(2)
        assert RadicalScalar.parse("1 * 2^(2/4) * 3^(2/4)") == sqrt_of_int(6)

    def test_parse_negative_exponent(self):
        x = RadicalScalar.parse("1 * 2^(-1/4)")
        assert x == RadicalScalar.monomial(Fraction(1), {2: 1}).invert()

    @pytest.mark.parametrize("seed", range(3))
    def test_roundtrip_fuzz(self, seed):
        rng = random.Random(seed)
        for _ in range(100):
            x = random_scalar(rng)
            assert RadicalScalar.parse(str(x)) == x

    def test_parse_rejects_bad_denominator(self):
        with pytest.raises(ValidationError):
            RadicalScalar.parse("1 * 2^(1/3)")

    def test_parse_rejects_composite_base(self):
        with pytest.raises(ValidationError):
            RadicalScalar.parse("1 * 4^(1/4)")

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValidationError):
            RadicalScalar.parse("two plus two")


class TestFloatExport:
    def test_known_values(self):
        assert float(sqrt_of_int(2)) == pytest.approx(math.sqrt(2), rel=1e-15)
        x = RadicalScalar.monomial(Fraction(1, 2), {2: 3})
        assert float(x) == pytest.approx(2 ** (3 / 4) / 2, rel=1e-15)

    @pytest.mark.parametrize("seed", range(3))
    def test_multiplicative_fuzz(self, seed):
        rng = random.Random(seed)
        for _ in range(200):
            x = random_scalar(rng)
            y = random_scalar(rng)
            expect = float(x) * float(y)
            got = float(x * y)
            assert abs(got - expect) <= 1e-12 * max(1.0, abs(expect))

    @pytest.mark.parametrize("seed", range(3))
    def test_additive_fuzz(self, seed):
        rng = random.Random(seed)
        for _ in range(200):
            x = random_scalar(rng)
            y = random_scalar(rng)
            expect = float(x) + float(y)
            got = float(x + y)
            assert abs(got - expect) <= 1e-12 * max(1.0, abs(expect))


class TestEqualityHash:
    def test_rational_hash_matches_fraction(self):
        assert hash(RadicalScalar.from_rational(Fraction(3))) == hash(Fraction(3))
        assert hash(RadicalScalar.from_rational(Fraction(5, 7))) == hash(Fraction(5, 7))

    def test_equal_values_equal_hash(self):
        rng = random.Random(7)
        for _ in range(50):
            parts = [random_monomial(rng) for _ in range(3)]
            x = (parts[0] + parts[1]) + parts[2]
            y = parts[2] + (parts[1] + parts[0])
            assert x == y
            assert hash(x) == hash(y)

    def test_eq_against_numbers(self):
        assert RadicalScalar.from_rational(Fraction(4, 2)) == 2
        assert sqrt_of_int(2) != 2
        assert RadicalScalar.zero() != "0"
