"""Tests for budgeted factorization and field extension construction."""
from fractions import Fraction

import pytest

from hypertangency.errors import BudgetExceededError, InputError
from hypertangency.factor import (Budget, adjoin_root, factor, get_budget,
                                  irreducible_factors_of_univariate,
                                  is_irreducible, roots_in_field, set_budget)
from hypertangency.fields import QQ, NumberField, embed
from hypertangency.poly import Poly, parse_poly


def U(text):
    """Univariate polynomial in t over Q."""
    return parse_poly(text, 1, names=("t",))


def P2(text):
    return parse_poly(text, 2)


class TestFactorUnivariate:
    def test_irreducible_quadratic(self):
        factors = irreducible_factors_of_univariate(U("t^2 - 2"))
        assert factors == [(U("t^2 - 2"), 1)]

    def test_splits_completely(self):
        factors = irreducible_factors_of_univariate(U("t^3 - t"))
        assert sorted(str(g) for g, _ in factors) == ["x", "x + 1", "x - 1"]
        assert all(e == 1 for _, e in factors)
        # Canonical order is stable across runs.
        assert factors == irreducible_factors_of_univariate(U("t^3 - t"))

    def test_unit_times_product_is_input(self):
        f = U("2*t^2 - 2")
        unit, factors = factor(f)
        prod = Poly.const(unit, 1)
        for g, e in factors:
            prod = prod * g ** e
        assert prod == f

    def test_repeated_factors(self):
        f = U("(t - 1)^3 * (t + 2)")
        factors = irreducible_factors_of_univariate(f)
        assert factors == [(U("t - 1"), 3), (U("t + 2"), 1)]

    def test_irreducibility_recheck(self):
        for g, _ in factor(U("t^6 - 1"))[1]:
            assert is_irreducible(g)


class TestFactorMultivariate:
    def test_curve_with_multiple_components(self):
        f = P2("(y - x^2)^3 * y")
        unit, factors = factor(f)
        degs = sorted((g.degree(), e) for g, e in factors)
        assert degs == [(1, 1), (2, 3)]
        prod = Poly.const(unit, 2)
        for g, e in factors:
            prod = prod * g ** e
        assert prod == f

    def test_irreducible_form(self):
        F = parse_poly("z*y - x^2", 3)
        assert is_irreducible(F)

    def test_visibly_reducible_form(self):
        F = parse_poly("(z*y - x^2) * y", 3)
        assert not is_irreducible(F)


class TestFactorOverExtension:
    def test_quadratic_splits(self):
        K = NumberField([-2, 0, 1], name="r")
        f = Poly.from_univariate([-2, 0, 1], 0, 1, K)
        roots = roots_in_field(f)
        vals = sorted(r.coords for r, _ in roots)
        assert vals == [(Fraction(0), Fraction(-1)), (Fraction(0), Fraction(1))]

    def test_stays_irreducible(self):
        K = NumberField([-2, 0, 1], name="r")
        f = Poly.from_univariate([-3, 0, 1], 0, 1, K)  # x^2 - 3 over Q(sqrt2)
        assert is_irreducible(f)


class TestBudget:
    def test_default_budget(self):
        b = get_budget()
        assert b.max_factor_degree == 12
        assert b.max_field_degree == 8

    def test_high_degree_squarefree_rejected(self):
        f = U("t^13 - t - 1")
        with pytest.raises(BudgetExceededError):
            factor(f)

    def test_high_degree_with_small_squarefree_part_allowed(self):
        f = Poly.from_univariate([0] * 14 + [1], 0, 1)  # t^14
        _, factors = factor(f)
        assert factors == [(U("t"), 14)]

    def test_budget_override(self):
        f = U("t^13 - t - 1")
        _, factors = factor(f, Budget(max_factor_degree=13))
        assert sum(g.degree() * e for g, e in factors) == 13

    def test_set_budget_roundtrip(self):
        try:
            set_budget(max_factor_degree=5)
            with pytest.raises(BudgetExceededError):
                factor(U("t^6 - t - 1"))
        finally:
            set_budget(max_factor_degree=12)


class TestRoots:
    def test_rational_roots(self):
        roots = roots_in_field(U("t^3 - t"))
        vals = sorted(r.as_rational() for r, _ in roots)
        assert vals == [-1, 0, 1]

    def test_root_multiplicity(self):
        roots = roots_in_field(U("(t - 2)^2 * (t + 1)"))
        assert sorted((r.as_rational(), m) for r, m in roots) == [(-1, 1), (2, 2)]

    def test_no_rational_roots(self):
        assert roots_in_field(U("t^2 + 1")) == []


class TestAdjoinRoot:
    def test_degree_two(self):
        K, emb, root = adjoin_root(QQ, U("t^2 - 2"))
        assert K.degree == 2
        assert root * root == 2
        assert emb(QQ.from_rational(Fraction(1, 3))) == Fraction(1, 3)

    def test_degree_one_collapse(self):
        K, emb, root = adjoin_root(QQ, U("t - 5"))
        assert K == QQ
        assert root == 5

    def test_linear_collapse_in_extension(self):
        base = NumberField([-2, 0, 1], name="r")
        p = Poly.from_univariate([-base.gen(), base.one()], 0, 1, base)  # t - r
        K, emb, root = adjoin_root(base, p)
        assert K == base
        assert root == base.gen()

    def test_reducible_rejected(self):
        with pytest.raises(InputError):
            adjoin_root(QQ, U("t^2 - 1"))

    def test_tower_collapses_to_degree_four(self):
        base, _, alpha = adjoin_root(QQ, U("t^2 - 2"))
        p = Poly.from_univariate([-alpha, base.zero(), base.one()], 0, 1, base)  # x^2 - alpha
        K, emb, beta = adjoin_root(base, p)
        assert K.degree == 4
        assert beta * beta == emb(alpha)
        assert (beta ** 4).is_rational() and (beta ** 4).as_rational() == 2
        # Power basis 1, beta, beta^2, beta^3 must be linearly independent:
        # brute-force rank of the 4x4 coordinate matrix.
        rows = [list((beta ** k).coords) for k in range(4)]
        assert _rank(rows) == 4
        # The embedding is a ring homomorphism.
        a = base.gen() + 3
        b = 2 * base.gen() - 1
        assert emb(a * b) == emb(a) * emb(b)
        assert emb(a + b) == emb(a) + emb(b)

    def test_tower_budget(self):
        base, _, alpha = adjoin_root(QQ, U("t^3 - 2"))
        p = Poly.from_univariate([-alpha, base.zero(), base.zero(), base.one()], 0, 1, base)
        with pytest.raises(BudgetExceededError):
            adjoin_root(base, p)  # absolute degree 9 > 8

    def test_cubic_tower_with_quadratic_top(self):
        base, _, alpha = adjoin_root(QQ, U("t^3 - 2"))
        p = Poly.from_univariate([-alpha, base.zero(), base.one()], 0, 1, base)  # x^2 - alpha
        K, emb, beta = adjoin_root(base, p)
        assert K.degree == 6
        assert beta * beta == emb(alpha)
        assert (beta ** 6).as_rational() == 2


def _rank(rows):
    rows = [list(map(Fraction, r)) for r in rows]
    rank = 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor_ = rows[i][c] / pr[c]
                rows[i] = [a - factor_ * b for a, b in zip(rows[i], pr)]
        r += 1
        rank += 1
    return rank
