import random

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from g2points.intpoly import (
    IPoly,
    PolyParseError,
    disc,
    parse_coeff_line,
    parse_expr,
    parse_poly,
    poly_gcd,
    resultant,
)


def P(*desc):
    """Poly from descending coefficients, matching how they read on paper."""
    return IPoly(list(reversed(desc)))


class TestBasics:
    def test_degree_and_trim(self):
        assert P(0, 0, 1, 2).degree == 1
        assert IPoly(()).degree == -1
        assert P(3).degree == 0

    def test_mul_eval(self):
        f = P(1, 0, -3, 2)  # x^3 - 3x + 2
        assert f.eval(2) == 4
        assert (f * f).eval(3) == f.eval(3) ** 2

    def test_shift(self):
        f = P(1, 2, 3)
        g = f.shift(5)
        for x in range(-3, 4):
            assert g.eval(x) == f.eval(x + 5)

    def test_reverse(self):
        f = P(2, 0, 1)  # 2x^2 + 1
        assert f.reverse() == P(1, 0, 2)
        assert f.reverse(4) == P(1, 0, 2, 0, 0)

    def test_scale_x(self):
        f = P(1, 1, 1)
        g = f.scale_x(2, 3)  # 3^2 f(2x/3)
        for x in range(-3, 4):
            assert Fraction(g.eval(x)) == 9 * f.eval_frac(Fraction(2 * x, 3))

    def test_divmod_exact(self):
        f = P(2, 3, 1)  # (2x+1)(x+1)
        q, r = f.divmod_exact(P(2, 1))
        assert q == P(1, 1) and r.is_zero()

    def test_content_primitive(self):
        f = P(-6, 0, 9)
        assert f.content() == -3
        assert f.primitive() == P(2, 0, -3)


class TestResultant:
    def test_quoted_example(self):
        g = P(1, 1, -1)
        h = P(1, 1, 1, 1, 2)
        assert resultant(g, h) == 19

    def test_linear_pair_sign(self):
        assert resultant(P(1, 0), P(1, -1)) == -1

    def test_common_root_vanishes(self):
        for f in [P(1, 1, -1), P(1, 0, 0, 7), P(3, 1)]:
            assert resultant(f, f) == 0

    def test_multiplicative(self):
        rng = random.Random(7)
        for _ in range(60):
            polys = []
            while len(polys) < 3:
                q = IPoly([rng.randint(-4, 4) for _ in range(rng.randint(2, 5))])
                if not q.is_zero() and q.degree >= 1:
                    polys.append(q)
            g1, g2, h = polys
            assert resultant(g1 * g2, h) == resultant(g1, h) * resultant(g2, h)

    def test_product_of_values_formula(self):
        # Res(g, h) = lc(g)^deg(h) * prod h(roots of g), with g split
        rng = random.Random(3)
        for _ in range(30):
            roots = [rng.randint(-5, 5) for _ in range(rng.randint(1, 3))]
            lead = rng.choice([1, -1, 2, 3])
            g = IPoly.from_roots(roots) * lead
            h = IPoly([rng.randint(-5, 5) for _ in range(4)] + [1])
            expect = lead ** h.degree
            for r in roots:
                expect *= h.eval(r)
            assert resultant(g, h) == expect


class TestDisc:
    def test_quadratic(self):
        assert disc(P(1, 0, -1)) == 4

    def test_repeated_root(self):
        assert disc(P(1, -2, 1)) == 0

    def test_x5_plus_1(self):
        assert disc(P(1, 0, 0, 0, 0, 1)) == 3125

    def test_binomial_family(self):
        # disc(x^n + a) = (-1)^(n(n-1)/2) n^n a^(n-1)
        for n in (3, 4, 5, 6, 7):
            for a in (1, -2, 3):
                f = IPoly([a] + [0] * (n - 1) + [1])
                s = -1 if (n * (n - 1) // 2) % 2 else 1
                assert disc(f) == s * n**n * a ** (n - 1)


class TestGcd:
    def test_shared_factor(self):
        a = P(1, 1, -1) * P(3, 1)
        b = P(1, 1, -1) * P(1, 0, 7)
        assert poly_gcd(a, b) == P(1, 1, -1)

    def test_coprime(self):
        assert poly_gcd(P(1, 0), P(1, -1)).degree == 0


class TestParsing:
    def test_coeff_line_round_trip(self):
        f = P(1, 0, -3, 2)
        assert parse_coeff_line(f.coeff_line()) == f
        assert parse_coeff_line("0 -3 1 -2 0 -2 2 3") == P(-3, 1, -2, 0, -2, 2, 3)

    def test_expr_round_trip(self):
        for f in [P(1, 0, -3, 2), P(-3, 1, -2, 0, -2, 2, 3), P(5), P(-1, 0)]:
            assert parse_expr(f.expr()) == f

    def test_expr_forms(self):
        assert parse_expr("x^6 - 3*x + 2") == P(1, 0, 0, 0, 0, -3, 2)
        assert parse_expr("-(x^2+x-1)(x^4+x^3+x^2+x+2)") == -(P(1, 1, -1) * P(1, 1, 1, 1, 2))
        assert parse_expr("2x**3") == P(2, 0, 0, 0)

    def test_parse_sniffs_format(self):
        assert parse_poly("x^5+1") == P(1, 0, 0, 0, 0, 1)
        assert parse_poly("1 0 0 0 0 1") == P(1, 0, 0, 0, 0, 1)

    def test_parse_errors(self):
        with pytest.raises(PolyParseError):
            parse_expr("x^")
        with pytest.raises(PolyParseError):
            parse_coeff_line("1 2 q")


@given(
    st.lists(st.integers(-8, 8), min_size=1, max_size=5),
    st.lists(st.integers(-8, 8), min_size=1, max_size=5),
)
@settings(max_examples=150, deadline=None)
def test_resultant_vanishes_iff_common_factor(ac, bc):
    a, b = IPoly(ac), IPoly(bc)
    if a.is_zero() or b.is_zero() or a.degree < 1 or b.degree < 1:
        return
    r = resultant(a, b)
    has_common = poly_gcd(a, b).degree >= 1
    assert (r == 0) == has_common
