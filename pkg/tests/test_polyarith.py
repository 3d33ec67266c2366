from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import sympy

from oihilbert.errors import NonDivisible, SingularAtOrigin
from oihilbert.polyarith import (
    BiPoly,
    FactoredRational,
    SeriesWindow,
    UniPoly,
    expand_series,
    gcd_bipoly,
    render_poly,
    render_rational,
    uni_gcd,
)

S, T = sympy.symbols("s t")


def to_sympy(p):
    return sympy.Add(*(c * S**i * T**j for (i, j), c in p.terms.items()))


def uni_to_sympy(u):
    return sympy.Add(*(c * T**j for j, c in enumerate(u.coeffs)))


small_unis = st.lists(st.integers(-6, 6), min_size=0, max_size=5).map(UniPoly)

small_bis = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-5, 5),
    max_size=6,
).map(BiPoly)


class TestUniPoly:
    def test_normalization_strips_trailing_zeros(self):
        assert UniPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert UniPoly([0, 0]).is_zero()

    def test_arith(self):
        f = UniPoly([1, -1])  # 1 - t
        assert (f * f).coeffs == (1, -2, 1)
        assert (f + UniPoly([0, 1])).coeffs == (1,)
        assert (f - f).is_zero()
        assert (f ** 3)(1) == 0
        assert UniPoly.geometric(2).coeffs == (1, 1, 1)

    def test_exact_div(self):
        f = UniPoly([1, -1]) * UniPoly([2, 0, 3])
        assert f.exact_div(UniPoly([1, -1])).coeffs == (2, 0, 3)
        with pytest.raises(NonDivisible):
            UniPoly([1, 1]).exact_div(UniPoly([1, -1]))

    @given(small_unis, small_unis)
    @settings(max_examples=120, deadline=None)
    def test_gcd_matches_sympy(self, f, g):
        ours = uni_gcd(f, g)
        theirs = sympy.Poly(sympy.gcd(uni_to_sympy(f), uni_to_sympy(g)), T)
        assert uni_to_sympy(ours) - theirs.as_expr() == 0

    @given(small_unis, small_unis)
    @settings(max_examples=80, deadline=None)
    def test_product_divisible_by_factor(self, f, g):
        if f.is_zero():
            return
        assert (f * g).exact_div(f) == g


class TestBiPoly:
    def test_constructor_merges_and_drops_zeros(self):
        p = BiPoly([((0, 0), 1), ((0, 0), -1), ((1, 2), 3)])
        assert p.terms == {(1, 2): 3}

    def test_arith_round_trip(self):
        one_minus_t = BiPoly({(0, 0): 1, (0, 1): -1})
        f = one_minus_t ** 2 - BiPoly.s() * BiPoly({(0, 0): 1, (0, 1): 1})
        assert f.terms == {(0, 0): 1, (0, 1): -2, (0, 2): 1, (1, 0): -1, (1, 1): -1}
        assert f.deg_s() == 1 and f.deg_t() == 2

    def test_exact_div(self):
        a = BiPoly({(0, 0): 1, (0, 1): -1, (1, 0): -1})  # 1 - t - s
        b = BiPoly({(0, 0): 1, (1, 0): 1})  # 1 + s
        with pytest.raises(NonDivisible):
            a.exact_div(b)
        assert (a * b).exact_div(b) == a
        assert (a * b).try_div(a) == b
        assert a.try_div(b) is None

    def test_s_coeff_views(self):
        p = BiPoly({(0, 0): 1, (0, 2): 5, (2, 1): -3})
        cs = p.as_s_coeffs()
        assert cs[0].coeffs == (1, 0, 5)
        assert cs[1].is_zero()
        assert cs[2].coeffs == (0, -3)
        assert BiPoly.from_s_coeffs(cs) == p

    @given(small_bis, small_bis)
    @settings(max_examples=120, deadline=None)
    def test_gcd_matches_sympy_up_to_sign(self, a, b):
        ours = to_sympy(gcd_bipoly(a, b))
        theirs = sympy.gcd(to_sympy(a), to_sympy(b))
        assert sympy.simplify(ours - theirs) == 0 or sympy.simplify(ours + theirs) == 0

    @given(small_bis, small_bis)
    @settings(max_examples=80, deadline=None)
    def test_product_divisible_by_factor(self, a, b):
        if a.is_zero():
            return
        assert (a * b).exact_div(a) == b

    def test_gcd_known_common_factor(self):
        common = BiPoly({(0, 0): 1, (0, 1): -1, (1, 0): -1})
        a = common * BiPoly({(0, 0): 2, (1, 1): 5})
        b = common * BiPoly({(0, 1): 1, (0, 0): 7})
        g = gcd_bipoly(a, b)
        assert g.try_div(common) is not None and common.try_div(g) is not None


class TestFactoredRational:
    def setup_method(self):
        self.one_minus_t = BiPoly({(0, 0): 1, (0, 1): -1})
        self.one_minus_t_minus_s = BiPoly({(0, 0): 1, (0, 1): -1, (1, 0): -1})

    def test_add_merges_factor_multisets(self):
        a = FactoredRational(BiPoly.one(), [(self.one_minus_t, 2)])
        b = FactoredRational(BiPoly.one(), [(self.one_minus_t, 1), (self.one_minus_t_minus_s, 1)])
        c = a + b
        assert dict((base.key(), e) for base, e in c.factors) == {
            self.one_minus_t.key(): 2,
            self.one_minus_t_minus_s.key(): 1,
        }
        # 1/(1-t)^2 + 1/((1-t)(1-t-s)) has numerator (1-t-s) + (1-t)
        assert c.num == self.one_minus_t_minus_s + self.one_minus_t

    def test_cross_mul_equality(self):
        half = FactoredRational(self.one_minus_t, [(self.one_minus_t, 2)])
        simple = FactoredRational(BiPoly.one(), [(self.one_minus_t, 1)])
        assert half.equals_cross_mul(simple)
        assert not half.equals_cross_mul(FactoredRational.from_poly(BiPoly.one()))

    def test_reduce_cancels_whole_factors(self):
        r = FactoredRational(
            self.one_minus_t ** 2 * BiPoly.s(),
            [(self.one_minus_t, 1), (self.one_minus_t_minus_s, 1)],
        )
        red = r.reduce()
        assert red.num == self.one_minus_t * BiPoly.s()
        assert red.factors == ((self.one_minus_t_minus_s, 1),)

    def test_reduce_splits_partial_factor(self):
        # numerator shares only the (1-t) part of the composite factor
        composite = self.one_minus_t * self.one_minus_t_minus_s
        r = FactoredRational(self.one_minus_t * BiPoly.s(), [(composite, 1)])
        red = r.reduce()
        assert red.num == BiPoly.s()
        assert red.factors == ((self.one_minus_t_minus_s, 1),)

    def test_reduce_zero(self):
        r = FactoredRational(BiPoly.zero(), [(self.one_minus_t, 3)])
        assert r.reduce().factors == ()


class TestSeries:
    def test_geometric_series(self):
        one_minus_t_minus_s = BiPoly({(0, 0): 1, (0, 1): -1, (1, 0): -1})
        one_minus_t = BiPoly({(0, 0): 1, (0, 1): -1})
        # (1-t)/(1-t-s) counts all monomials of all widths, c = 1
        r = FactoredRational(one_minus_t, [(one_minus_t_minus_s, 1)])
        w = expand_series(r, 5, 5)
        import math

        for n in range(6):
            for j in range(6):
                expect = math.comb(n + j - 1, j) if n else (1 if j == 0 else 0)
                assert w[n, j] == expect

    def test_against_fraction_brute_force(self):
        num = BiPoly({(0, 0): 2, (1, 1): -3})
        den = BiPoly({(0, 0): 1, (1, 0): -2, (0, 1): 5})
        w = expand_series(FactoredRational(num, [(den, 2)]), 4, 4)
        # brute force with sympy series
        expr = to_sympy(num) / to_sympy(den) ** 2
        ser = sympy.series(
            sympy.series(expr, S, 0, 5).removeO(), T, 0, 5
        ).removeO().expand()
        for n in range(5):
            for j in range(5):
                assert w[n, j] == ser.coeff(S, n).coeff(T, j)

    def test_t_prefactor_shifts_columns(self):
        num = BiPoly({(0, 2): 1, (1, 3): 4})
        r = FactoredRational.from_poly(num)
        w = expand_series(r, 1, 1, t_prefactor=2)
        assert w[0, 0] == 1 and w[1, 1] == 4

    def test_singular_at_origin(self):
        with pytest.raises(SingularAtOrigin):
            expand_series(FactoredRational(BiPoly.one(), [(BiPoly.t(), 1)]), 2, 2)

    def test_window_equality_and_diff(self):
        a = SeriesWindow([[1, 0], [0, 2]])
        b = SeriesWindow([[1, 0], [1, 2]])
        assert a != b
        assert a.diff(b) == [(1, 0, 0, 1)]


class TestRendering:
    def test_poly_canonical_order(self):
        p = BiPoly({(1, 0): -1, (0, 0): 1, (0, 1): -1})
        assert render_poly(p) == "1 - t - s"
        assert render_poly(BiPoly.zero()) == "0"
        assert render_poly(BiPoly({(2, 3): 4})) == "4*s^2*t^3"
        assert render_poly(BiPoly({(0, 0): -2, (1, 1): 1})) == "-2 + s*t"

    def test_rational_rendering(self):
        one_minus_s = BiPoly({(0, 0): 1, (1, 0): -1})
        r = FactoredRational(BiPoly.one(), [(one_minus_s, 1)])
        assert render_rational(r) == "1/(1 - s)"
        r2 = FactoredRational(BiPoly({(1, 0): 1, (1, 1): -1}), [(one_minus_s, 2)])
        assert render_rational(r2) == "(s - s*t)/(1 - s)^2"
