from fractions import Fraction
import pytest
from hypothesis import given, settings, strategies as st
from springerstab.services import exact_poly
from springerstab.services.exact_poly import ONE, ZERO, RationalPoly

X = RationalPoly.x()


@st.composite
def rational_polys(draw, max_degree=7, bound=100):
    degree = draw(st.integers(min_value=0, max_value=max_degree))
    coefficients = draw(st.lists(
        st.builds(Fraction, st.integers(min_value=-bound, max_value=bound), st.integers(min_value=1, max_value=bound)),
        min_size=degree + 1,
        max_size=degree + 1,
    ))
    return RationalPoly(coefficients=coefficients)


class TestArithmetic:
    def test_trailing_zeros_are_trimmed(self):
        assert RationalPoly.of(1, 2, 0, 0) == RationalPoly.of(1, 2)
        assert RationalPoly.of(0, 0).is_zero()
        assert ZERO.degree is None
        assert ONE.degree == 0

    def test_ring_operations(self):
        assert (X + 1) * (X - 1) == X * X - 1
        assert 2 + X == X + 2
        assert 1 - X == -(X - 1)
        assert 3 * X == X + X + X
        assert X * ZERO == ZERO

    def test_foreign_operand(self):
        with pytest.raises(TypeError):
            X + "x"

    def test_exact_evaluation(self):
        half = RationalPoly.of(0, Fraction(1, 2))
        assert half(3) == Fraction(3, 2)
        assert exact_poly.eval_int(X * X, 7) == 49

    def test_shift_and_difference(self):
        assert exact_poly.shift(X * X, 1) == X * X + 2 * X + 1
        assert exact_poly.forward_difference(X * X) == 2 * X + 1
        assert exact_poly.forward_difference(ONE) == ZERO

    def test_leading_coefficient(self):
        poly = RationalPoly.from_numerator([1, -1, -2], 2)
        assert poly.degree == 2
        assert poly.leading_coefficient == Fraction(1, 2)


class TestBinomialBasis:
    def test_newton_coefficients(self):
        assert exact_poly.binomial_basis(X * X, 0) == [0, 1, 2]
        assert exact_poly.binomial_basis(ZERO, 5) == []

    def test_inverse(self):
        poly = RationalPoly.of(3, -1, Fraction(1, 2), 2)
        for a in (-2, 0, 4):
            assert exact_poly.from_binomial_basis(exact_poly.binomial_basis(poly, a), a) == poly

    def test_falling_binomial(self):
        assert exact_poly.falling_binomial(0, 2) == RationalPoly.of(0, Fraction(-1, 2), Fraction(1, 2))
        assert exact_poly.falling_binomial(3, 0) == ONE


class TestDiscreteSum:
    def test_small_sums(self):
        assert exact_poly.discrete_sum(ONE, 0) == X
        assert exact_poly.discrete_sum(X, 0) == RationalPoly.of(0, Fraction(-1, 2), Fraction(1, 2))
        assert exact_poly.discrete_sum(ONE, 2) == X - 2
        assert exact_poly.discrete_sum(ZERO, 3) == ZERO

    @given(poly=rational_polys(), a=st.integers(min_value=-20, max_value=20))
    @settings(max_examples=100, deadline=None)
    def test_matches_naive_summation(self, poly, a):
        total = exact_poly.discrete_sum(poly, a)
        for m in range(a, a + 21):
            assert exact_poly.eval_int(total, m) == sum((exact_poly.eval_int(poly, i) for i in range(a, m)), Fraction(0))

    @given(poly=rational_polys(), a=st.integers(min_value=-20, max_value=20))
    @settings(max_examples=100, deadline=None)
    def test_telescopes(self, poly, a):
        total = exact_poly.discrete_sum(poly, a)
        assert exact_poly.forward_difference(total) == poly
        assert total(a) == 0
        if not poly.is_zero():
            assert total.degree == poly.degree + 1


class TestInterpolation:
    def test_recovers_polynomial(self):
        assert exact_poly.lagrange_interpolate([(0, 0), (1, 1), (2, 4)]) == X * X
        assert exact_poly.lagrange_interpolate([(5, 7)]) == RationalPoly.constant(7)

    def test_duplicate_nodes(self):
        with pytest.raises(ValueError):
            exact_poly.lagrange_interpolate([(1, 1), (1, 2)])


class TestTextForms:
    @pytest.mark.parametrize("numerator, denominator, expected", [
        ([1, -1, -2], 2, "(x^2-x-2)/2"),
        ([1, 0, -13, 6], 6, "(x^3-13x+6)/6"),
        ([1, -1], 1, "x-1"),
        ([1], 1, "1"),
    ])
    def test_display(self, numerator, denominator, expected):
        poly = RationalPoly.from_numerator(numerator, denominator)
        assert poly.to_display() == expected
        assert RationalPoly.parse(expected) == poly

    def test_zero_display(self):
        assert ZERO.to_display() == "0"

    def test_parse_leading_minus(self):
        assert RationalPoly.parse("-x^2+3") == RationalPoly.of(3, 0, -1)

    @pytest.mark.parametrize("text", ["", "x^2x", "abc", "()/2"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            RationalPoly.parse(text)

    def test_latex(self):
        poly = RationalPoly.from_numerator([1, -1, -2], 2)
        assert poly.to_latex() == "\\frac{1}{2} \\left(x^2-x-2\\right)"
        assert RationalPoly.from_numerator([1, -1]).to_latex() == "x-1"

    def test_json_pairs(self):
        poly = RationalPoly.from_numerator([1, -1, -2], 2)
        assert poly.to_json() == [[-1, 1], [-1, 2], [1, 2]]
        assert RationalPoly.from_json(poly.to_json()) == poly
