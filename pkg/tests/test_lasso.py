import itertools
import warnings

import pytest

from lassoknots.lasso import (
    RULES,
    Lasso,
    LassoParseError,
    bracket,
    closed_form_simple,
    degree,
    eq1_simple,
    formula_l1r,
    jones_st,
    normalize,
    reverse,
    simplify_once,
    writhe,
)
from lassoknots.poly import LaurentPolynomial as P, delta, framing_factor
from lassoknots.skein import SkeinElement as Z

NONZERO = (-3, -2, -1, 1, 2, 3)


def family(max_m=6, values=NONZERO):
    for m in range(max_m + 1):
        for tw in itertools.product(values, repeat=m):
            yield Lasso(tw)


def u(text):
    return P.parse(text, "u")


def t_(e, c=1):
    return P.monomial(2 * e, c, "u")


class TestParse:
    @pytest.mark.parametrize("text, twists", [
        ("L(1,2)", (1, 2)), ("L( -3 , 7 )", (-3, 7)), ("L()", ()), ("L(∅)", ()), ("L(0)", (0,)), ("L(−2)", (-2,)),
    ])
    def test_accepts(self, text, twists):
        assert Lasso.parse(text).twists == twists

    def test_zeros_normalized_with_warning(self):
        with pytest.warns(UserWarning, match="normalized"):
            assert Lasso.parse("L(1,0,2)") == Lasso.of(3)

    @pytest.mark.parametrize("text, pos", [("L(1,x)", 4), ("K(1)", 0), ("L(1,2", 5), ("L(1,,2)", 4)])
    def test_errors_carry_position(self, text, pos):
        with pytest.raises(LassoParseError) as info:
            Lasso.parse(text)
        assert info.value.position == pos

    def test_str_round_trip(self):
        for L in family(3, (-2, 1, 3)):
            assert Lasso.parse(str(L)) == L


class TestDegree:
    @pytest.mark.parametrize("twists, d", [((2,), 0), ((1, 2), 1), ((), 1), ((1, 1), 3), ((-3, 7), 3), ((-2,), 0)])
    def test_values(self, twists, d):
        assert degree(Lasso(twists)) == d

    def test_zero_entry_rejected(self):
        with pytest.raises(ValueError):
            degree(Lasso.of(1, 0))

    def test_bounds_exhaustive(self):
        for L in family():
            d = degree(L)
            assert 0 <= d <= L.m + 1, L
            if L.m % 2 == 0:
                assert d >= 1, L


class TestWrithe:
    @pytest.mark.parametrize("twists, w", [((2,), -2), ((-2, 3, -1), 0), ((), 0)])
    def test_values(self, twists, w):
        assert writhe(Lasso(twists)) == w


class TestNormalize:
    @pytest.mark.parametrize("raw, norm", [
        ((0, 5, 3), (3,)), ((1, 0, 2), (3,)), ((4, 7, 0), (4,)), ((1, 0, -1), (0,)), ((0,), (0,)), ((2, 0), ()),
    ])
    def test_examples(self, raw, norm):
        assert normalize(Lasso(raw)).twists == norm

    def test_idempotent(self):
        for L in family(4, (-1, 0, 2)):
            n = normalize(L)
            assert normalize(n) == n
            assert n.is_normalized()

    def test_confluent_over_rule_orders(self):
        def fixpoints(tw):
            out, seen, stack = set(), set(), [tw]
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                moves = [simplify_once(x, rule, i) for i, r in enumerate(x) if r == 0 for rule in RULES]
                moves = [y for y in moves if y is not None]
                stack.extend(moves)
                if not moves:
                    out.add(x)
            return out

        for L in family(5, (-2, -1, 0, 1, 2)):
            if 0 in L.twists:
                assert fixpoints(L.twists) == {normalize(L).twists}, L

    def test_jones_st_invariant(self):
        for L in family(5, (-2, -1, 0, 1, 2)):
            if 0 in L.twists:
                assert jones_st(normalize(L)) == jones_st(L), L


class TestReverse:
    def test_examples(self):
        assert reverse(Lasso.of(1, 2)) == Lasso.of(2, 1)
        assert reverse(Lasso.of(5)) == Lasso.of(5)
        assert reverse(Lasso.of(-2, 3, -1)) == Lasso.of(-1, 3, -2)

    def test_invariance_exhaustive(self):
        for L in family():
            R = reverse(L)
            assert degree(R) == degree(L)
            assert bracket(R) == bracket(L), L


class TestBracket:
    def test_base_cases(self):
        assert bracket(Lasso()) == Z.z(1)
        assert bracket(Lasso.of(0)) == Z.z(0)
        assert bracket(Lasso.of(1)) == Z({0: P.monomial(1), 2: P.monomial(-1)})

    def test_leading_zero_item(self):
        # L(0, r2, r3...) = T(r2) <L(r3...)>
        assert bracket(Lasso.of(0, 2, 1)) == bracket(Lasso.of(1)).scale(framing_factor(2))

    @pytest.mark.parametrize("r", [r for r in range(-10, 11) if r])
    def test_closed_form(self, r):
        assert bracket(Lasso.of(r)) == closed_form_simple(r)

    def test_closed_form_examples(self):
        assert closed_form_simple(1) == Z({0: P.monomial(1), 2: P.monomial(-1)})
        assert closed_form_simple(-1) == Z({0: P.monomial(-1), 2: P.monomial(1)})
        with pytest.raises(ValueError):
            closed_form_simple(0)


class TestJonesST:
    def test_examples(self):
        assert jones_st(Lasso()) == Z.z(1, P.one("u"), "u")
        assert jones_st(Lasso.of(2)) == Z({0: t_(-2), 2: u("t^-3/2 - t^-1/2")}, "u")
        assert jones_st(Lasso.of(1)) == Z({0: -t_(-1), 2: u("-t^-1/2")}, "u")

    @pytest.mark.parametrize("r", [r for r in range(-10, 11) if r])
    def test_eq1(self, r):
        assert jones_st(Lasso.of(r)) == eq1_simple(r)

    def test_eq1_r4(self):
        frac = (1 - t_(-4)).exact_divide(t_(1) + 1)
        assert eq1_simple(4) == Z({0: t_(-4), 2: -(P.monomial(1, 1, "u") * frac)}, "u")

    @pytest.mark.parametrize("r", range(1, 11))
    def test_l1r_formula(self, r):
        assert jones_st(Lasso.of(1, r)) == formula_l1r(r)

    def test_l1r_examples(self):
        assert formula_l1r(2) == Z({1: u("t^-3 + t^-2 - t^-1"), 3: u("t^-1 - t^-2")}, "u")
        assert formula_l1r(1) == Z({1: u("-t^-2 - 2t^-1"), 3: u("t^-1")}, "u")

    def test_l1r_rejects_mixed_signs(self):
        with pytest.raises(ValueError):
            formula_l1r(-1)


class TestDifferenceIdentities:
    @pytest.mark.parametrize("r", range(1, 9))
    def test_simple(self, r):
        lhs = (eq1_simple(r) - eq1_simple(r + 2)).scale(t_(r + 2))
        core = Z({0: t_(1) + 1, 2: P.monomial(1, 1, "u")}, "u")
        assert lhs == core.scale((t_(1) - 1).scale((-1) ** r))

    @pytest.mark.parametrize("r", range(1, 9))
    def test_l1r(self, r):
        lhs = (formula_l1r(r) - formula_l1r(r + 2)).scale(t_(r + 3))
        core = Z({1: (t_(1) + 1) ** 2, 3: -t_(1)}, "u")
        assert lhs == core.scale((t_(1) - 1).scale((-1) ** r))


def test_whitehead_doubles_have_degree_zero():
    assert degree(Lasso.of(2)) == degree(Lasso.of(-2)) == 0


def test_unknot_companion_is_trivial():
    du = delta("u")
    for L in family(3):
        value = jones_st(L).substitute_basis(lambda k: P.one("u") if k == 0 else du ** (k - 1))
        assert value == 1, L


def test_no_warning_for_normalized_input():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        Lasso.parse("L(1,2,3)")
