import pytest
from hypothesis import given, strategies as st

from lassoknots.poly import (
    LaurentPolynomial as P,
    NotDivisibleError,
    OddExponentError,
    VariableMismatchError,
    ZeroPolynomialError,
    delta,
    framing_factor,
)

from conftest import nonzero_polys, polys


def t(text):
    return P.parse(text, "t")


def a(text):
    return P.parse(text, "A")


class TestArithmetic:
    def test_difference_of_squares(self):
        assert t("t + 1") * t("t - 1") == t("t^2 - 1")

    def test_delta_squared(self):
        assert delta() * delta() == a("A^4 + 2 + A^-4")

    def test_cancellation_gives_empty_map(self):
        p = P.monomial(1) + P.monomial(1, -1)
        assert p.is_zero() and dict(p.terms) == {}

    def test_mixing_variables_fails(self):
        with pytest.raises(VariableMismatchError):
            P.one("A") + P.one("t")

    def test_canonical_storage(self):
        p = P({3: 1, -1: 2, 0: 0}, "A")
        assert list(p.terms) == [3, -1]
        assert P([(1, 2), (1, -2)]).is_zero()

    def test_int_coercion(self):
        assert 1 + P.monomial(1) - 1 == P.monomial(1)
        assert 3 * P.one() == P.constant(3)
        assert P.one() == 1

    def test_big_coefficients_stay_exact(self):
        p = P({0: 2**70})
        assert (p * p).coefficient(0) == 2**140

    def test_degree_of_zero_fails(self):
        with pytest.raises(ZeroPolynomialError):
            P.zero().degree()
        with pytest.raises(ZeroPolynomialError):
            P.zero().min_degree()

    def test_negative_power_of_unit(self):
        assert P.monomial(-3, -1) ** -2 == P.monomial(6)


class TestExactDivide:
    def test_simple(self):
        assert t("t^2 - 1").exact_divide(t("t + 1")) == t("t - 1")

    def test_negative_exponents(self):
        assert t("1 - t^-2").exact_divide(t("t + 1")) == t("t^-1 - t^-2")

    def test_not_divisible(self):
        with pytest.raises(NotDivisibleError) as info:
            t("t + 2").exact_divide(t("t + 1"))
        assert not info.value.remainder.is_zero()

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            t("t").exact_divide(P.zero("t"))


class TestSubstitution:
    def test_square(self):
        assert t("t - 1 + t^-1").substitute_power(2) == t("t^2 - 1 + t^-2")

    def test_identity(self):
        p = t("3t^4 - t + 7")
        assert p.substitute_power(1) == p

    def test_zero_evaluates_at_one(self):
        assert t("t - 1 + t^-1").substitute_power(0) == 1

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            t("t").substitute_power(-1)


class TestJonesVariable:
    def test_left_trefoil(self):
        u = a("-A^16 + A^12 + A^4").to_jones_variable()
        assert u.variable == "u"
        assert u == P.parse("-t^-4 + t^-3 + t^-1", "u")
        assert u.to_text() == "t^-1 + t^-3 - t^-4"

    def test_one(self):
        assert P.one().to_jones_variable() == P.one("u")

    def test_odd_exponent(self):
        with pytest.raises(OddExponentError):
            P.monomial(3).to_jones_variable()

    def test_half_integer_printing(self):
        assert P.monomial(-23, -1, "u").to_text() == "-t^-23/2"
        assert P.monomial(1, 1, "u").to_text() == "t^1/2"


class TestFramingFactor:
    @pytest.mark.parametrize("n, text", [(0, "1"), (1, "-A^-3"), (-2, "A^6"), (3, "-A^-9")])
    def test_values(self, n, text):
        assert framing_factor(n) == a(text)

    @given(st.integers(-20, 20), st.integers(-20, 20))
    def test_additive(self, m, n):
        assert framing_factor(m + n) == framing_factor(m) * framing_factor(n)


class TestText:
    @pytest.mark.parametrize("text, variable", [
        ("t - 1 + t^-1", "t"),
        ("-t^-1/2 - t^-5/2 + t^-17/2", "u"),
        ("A^7 - A^3 + A^-1", "A"),
        ("0", "A"),
        ("-2A^2 + 5", "A"),
    ])
    def test_round_trip(self, text, variable):
        p = P.parse(text, variable)
        assert p.to_text() == text
        assert P.parse(p.to_text(), variable) == p

    def test_order_insensitive_parse(self):
        assert P.parse("-t^-4 + t^-3 + t^-1", "u") == P.parse("t^-1 + t^-3 - t^-4", "u")

    def test_unicode_minus(self):
        assert P.parse("t − 1", "t") == t("t - 1")

    @pytest.mark.parametrize("bad", ["t +", "t t", "x^2", "t^1/3", "2 3"])
    def test_parse_errors(self, bad):
        with pytest.raises(ValueError):
            P.parse(bad, "u")


# -- properties -----------------------------------------------------------------

@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(polys(), nonzero_polys())
def test_exact_divide_inverts_mul(p, q):
    assert (p * q).exact_divide(q) == p


@given(polys("t"), st.integers(0, 4), st.integers(0, 4))
def test_substitution_composes(p, d1, d2):
    assert p.substitute_power(d1 * d2) == p.substitute_power(d1).substitute_power(d2)


@given(polys(exp=6), polys(exp=6))
def test_jones_variable_multiplicative(p, q):
    p, q = p.substitute_power(2), q.substitute_power(2)
    assert (p * q).to_jones_variable() == p.to_jones_variable() * q.to_jones_variable()


@given(polys("u"))
def test_json_round_trip(p):
    assert P.from_json(p.to_json()) == p
    assert P.parse(p.to_text(), "u") == p
