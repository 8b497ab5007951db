"""Tests for exact cyclotomic arithmetic."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pcring import CycloNum, cyclotomic_polynomial, euler_phi, root_of_unity


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


class TestCyclotomicPolynomial:
    def test_first_is_x_minus_one(self):
        assert cyclotomic_polynomial(1) == (-1, 1)

    def test_second_is_x_plus_one(self):
        assert cyclotomic_polynomial(2) == (1, 1)

    def test_sixth(self):
        # x^6 - 1 divided by (x-1)(x+1)(x^2+x+1) leaves x^2 - x + 1
        assert cyclotomic_polynomial(6) == (1, -1, 1)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            cyclotomic_polynomial(0)

    def test_degree_is_totient(self):
        for n in range(1, 61):
            assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)

    def test_divisor_product_recovers_x_n_minus_one(self):
        for n in range(1, 61):
            prod = [1]
            for d in range(1, n + 1):
                if n % d == 0:
                    prod = poly_mul(prod, list(cyclotomic_polynomial(d)))
            assert prod == [-1] + [0] * (n - 1) + [1]

    def test_against_sympy(self):
        x = sympy.symbols("x")
        for n in range(1, 61):
            expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
            assert list(cyclotomic_polynomial(n)) == [int(c) for c in expected]


class TestRootOfUnity:
    def test_fourth_root_squared(self):
        assert root_of_unity(4, 2) == -1

    def test_trivial_exponent(self):
        assert root_of_unity(3, 0) == 1

    def test_cube_roots_sum_to_minus_one(self):
        assert root_of_unity(3, 1) + root_of_unity(3, 2) == -1

    def test_exponent_wraps_modulo_order(self):
        assert root_of_unity(5, 7) == root_of_unity(5, 2)
        assert root_of_unity(5, -1) == root_of_unity(5, 4)

    def test_never_zero(self):
        for n in (1, 2, 3, 4, 6, 8, 12, 30):
            for k in range(n):
                assert not root_of_unity(n, k).is_zero()

    def test_order(self):
        z = root_of_unity(12, 1)
        assert z**12 == 1
        assert all(z**k != 1 for k in range(1, 12))


class TestFieldOperations:
    def test_i_squared(self):
        z = root_of_unity(4, 1)
        assert z * z == -1

    def test_scalar_inverse(self):
        two = CycloNum.rational(6, 2)
        assert two.inverse() == Fraction(1, 2)

    def test_root_inverse(self):
        z = root_of_unity(3, 1)
        inv = z.inverse()
        assert inv == root_of_unity(3, 2)
        assert z * inv == 1

    def test_division_by_zero_message(self):
        with pytest.raises(ZeroDivisionError, match="division by zero in cyclotomic field"):
            CycloNum.zero(5).inverse()

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError, match="order mismatch"):
            root_of_unity(3, 1) + root_of_unity(4, 1)

    def test_rational_coercion(self):
        z = root_of_unity(8, 1)
        assert (z + 1) - 1 == z
        assert z * Fraction(3, 2) == Fraction(3, 2) * z
        assert 1 / CycloNum.rational(8, 2) == Fraction(1, 2)

    def test_high_degree_input_is_reduced(self):
        # 1 + x + x^2 is zero modulo the third cyclotomic polynomial
        assert CycloNum(3, [1, 1, 1]).is_zero()


class TestZeroTest:
    def test_zero(self):
        assert CycloNum.zero(7).is_zero()

    def test_vanishing_root_sum(self):
        total = CycloNum.rational(3, 1) + root_of_unity(3, 1) + root_of_unity(3, 2)
        assert total.is_zero()

    def test_basis_root_nonzero(self):
        assert not root_of_unity(5, 1).is_zero()

    def test_difference_of_equal_values(self):
        a = root_of_unity(12, 5) * Fraction(7, 3) + 2
        assert (a - a).is_zero()


@st.composite
def cyclo_values(draw, order: int):
    phi = euler_phi(order)
    coeffs = draw(
        st.lists(
            st.fractions(min_value=-3, max_value=3, max_denominator=4),
            min_size=0,
            max_size=phi,
        )
    )
    return CycloNum(order, coeffs)


@st.composite
def cyclo_triples(draw):
    order = draw(st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 12]))
    return (
        draw(cyclo_values(order)),
        draw(cyclo_values(order)),
        draw(cyclo_values(order)),
    )


class TestFieldAxioms:
    @settings(deadline=None)
    @given(cyclo_triples())
    def test_associativity(self, triple):
        a, b, c = triple
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)

    @settings(deadline=None)
    @given(cyclo_triples())
    def test_distributivity(self, triple):
        a, b, c = triple
        assert a * (b + c) == a * b + a * c

    @settings(deadline=None)
    @given(cyclo_triples())
    def test_commutativity(self, triple):
        a, b, _ = triple
        assert a * b == b * a
        assert a + b == b + a

    @settings(deadline=None)
    @given(cyclo_triples())
    def test_multiplicative_inverse(self, triple):
        a, _, _ = triple
        if not a.is_zero():
            assert a * a.inverse() == 1

    @settings(deadline=None)
    @given(cyclo_triples())
    def test_subtraction_cancels(self, triple):
        a, b, _ = triple
        assert (a - b) + b == a
        assert (a - a).is_zero()


class TestCanonicalForm:
    def test_coeff_vector_length(self):
        for n in (1, 2, 3, 8, 12, 30):
            assert len(CycloNum.rational(n, 5).coeffs) == euler_phi(n)

    def test_equality_is_componentwise(self):
        a = CycloNum(12, [Fraction(1, 2), 0, 3])
        b = CycloNum(12, [Fraction(2, 4), 0, 3])
        assert a == b
        assert hash(a) == hash(b)

    def test_reduced_fractions_positive_denominator(self):
        a = CycloNum(6, [Fraction(2, -4)])
        (f,) = a.coeffs[:1]
        assert f == Fraction(-1, 2)
        assert f.denominator == 2


class TestSerialization:
    def test_json_shape(self):
        a = root_of_unity(4, 1) * Fraction(1, 2) + 1
        doc = a.to_json()
        assert doc == {"order": 4, "coeffs": [[1, 1], [1, 2]]}

    def test_round_trip(self):
        a = root_of_unity(12, 7) * Fraction(-5, 6) + Fraction(2, 3)
        assert CycloNum.from_json(a.to_json()) == a

    def test_display_tag(self):
        doc = CycloNum.rational(3, 2).to_json(approx=True)
        assert doc["display_only"] == "2.0"
        doc = root_of_unity(4, 1).to_json(approx=True)
        assert doc["display_only"] == "0.0+1.0i"

    def test_approx_matches_unit_circle(self):
        z = root_of_unity(5, 1).approx()
        assert abs(abs(z) - 1) < 1e-12
