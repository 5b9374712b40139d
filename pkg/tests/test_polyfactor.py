import random

import pytest

from g2points.intpoly import IPoly, parse_expr
from g2points.polyfactor import DegreeTooLarge, factor_ipoly, is_squarefree


def P(*desc):
    return IPoly(list(reversed(desc)))


def reassemble(content, factors):
    out = IPoly.const(content)
    for g, m in factors:
        out = out * g**m
    return out


class TestKnownFactorizations:
    def test_two_cover_curve_sextic(self):
        f = -(P(1, 1, -1) * P(1, 1, 1, 1, 2))
        content, factors = factor_ipoly(f)
        assert content == -1
        assert sorted(g.coeffs for g, _ in factors) == sorted(
            [P(1, 1, -1).coeffs, P(1, 1, 1, 1, 2).coeffs]
        )
        assert all(m == 1 for _, m in factors)

    def test_cyclotomic_x6_minus_1(self):
        content, factors = factor_ipoly(P(1, 0, 0, 0, 0, 0, -1))
        assert content == 1
        got = sorted(g.expr() for g, _ in factors)
        assert got == sorted(["x - 1", "x + 1", "x^2 + x + 1", "x^2 - x + 1"])

    def test_x4_plus_1_irreducible(self):
        content, factors = factor_ipoly(P(1, 0, 0, 0, 1))
        assert content == 1
        assert len(factors) == 1 and factors[0][0].degree == 4

    def test_irreducible_by_search_oracle(self):
        # no rational root (root theorem: candidates are +-1) and no
        # quadratic factor with small coefficients
        f = P(1, 0, 0, 0, 1)
        assert f.eval(1) != 0 and f.eval(-1) != 0
        for b in range(-10, 11):
            for c in range(-10, 11):
                q = P(1, b, c)
                if q.divides(f):
                    pytest.fail(f"unexpected quadratic factor {q}")

    def test_repeated_roots(self):
        f = P(1, -1) ** 2 * P(1, 2) * 6
        content, factors = factor_ipoly(f)
        assert content == 6
        assert dict((g.expr(), m) for g, m in factors) == {"x - 1": 2, "x + 2": 1}

    def test_x_factor(self):
        content, factors = factor_ipoly(P(2, 0, 2, 0))
        assert content == 2
        assert dict((g.expr(), m) for g, m in factors) == {"x": 1, "x^2 + 1": 1}

    def test_degree_cap(self):
        with pytest.raises(DegreeTooLarge):
            factor_ipoly(IPoly([1] + [0] * 10 + [1]))


class TestRoundTrip:
    def test_random_products_round_trip(self):
        rng = random.Random(2024)
        for _ in range(300):
            f = IPoly.const(rng.choice([1, -1, 2, -3, 6]))
            deg_budget = 8
            while deg_budget > 0 and rng.random() < 0.8:
                d = rng.randint(1, min(3, deg_budget))
                g = IPoly([rng.randint(-4, 4) for _ in range(d)] + [rng.choice([1, -1, 2])])
                f = f * g
                deg_budget -= d
            if f.degree < 1:
                continue
            content, factors = factor_ipoly(f)
            assert reassemble(content, factors) == f
            for g, _ in factors:
                assert g.lc > 0
                assert g.content() == 1

    def test_random_dense_round_trip(self):
        rng = random.Random(99)
        for _ in range(700):
            f = IPoly([rng.randint(-9, 9) for _ in range(rng.randint(2, 9))])
            if f.is_zero() or f.degree < 1:
                continue
            content, factors = factor_ipoly(f)
            assert reassemble(content, factors) == f


class TestSquarefree:
    def test_flags(self):
        assert is_squarefree(parse_expr("x^5+1"))
        assert not is_squarefree(parse_expr("(x-1)^2 (x+2)"))
        assert not is_squarefree(IPoly.const(4))
