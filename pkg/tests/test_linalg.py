"""Tests for exact linear solving."""
from fractions import Fraction
from itertools import combinations_with_replacement

from hypertangency.fields import NumberField, QQ
from hypertangency.linalg import solve_linear


class TestBasicSystems:
    def test_identity_unique_zero(self):
        sol = solve_linear([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [0, 0, 0])
        assert sol.consistent and sol.unique
        assert sol.kernel_dim == 0
        assert all(v.is_zero() for v in sol.particular)

    def test_one_equation_two_unknowns(self):
        sol = solve_linear([[1, 1]], [0])
        assert sol.consistent
        assert sol.kernel_dim == 1
        v = sol.kernel_basis[0]
        assert v[0] + v[1] == 0 and not v[0].is_zero()

    def test_inconsistent(self):
        sol = solve_linear([[1, 1], [1, 1]], [0, 1])
        assert not sol.consistent
        assert sol.particular is None

    def test_particular_solution(self):
        sol = solve_linear([[2, 0], [0, 4]], [6, 8])
        assert sol.unique
        assert [v.as_rational() for v in sol.particular] == [3, 2]

    def test_rhs_defaults_to_zero(self):
        sol = solve_linear([[1, 2], [2, 4]])
        assert sol.consistent
        assert sol.rank == 1
        assert sol.kernel_dim == 1

    def test_solution_satisfies_system(self):
        A = [[1, 2, 3], [0, 1, 4]]
        b = [Fraction(1, 2), 3]
        sol = solve_linear(A, b)
        assert sol.consistent
        for row, want in zip(A, b):
            acc = sol.field.zero()
            for a, x in zip(row, sol.particular):
                acc = acc + x * a
            assert acc == want
        for vec in sol.kernel_basis:
            for row in A:
                acc = sol.field.zero()
                for a, x in zip(row, vec):
                    acc = acc + x * a
                assert acc.is_zero()


class TestConicConditions:
    def test_conics_through_four_general_points(self):
        # Conic coefficient order: x^2, xy, y^2, x, y, 1. Four general points
        # impose independent conditions; the solutions form a pencil
        # (projective dimension 1, vector-space kernel dimension 2).
        pts = [(0, 0), (1, 0), (0, 1), (1, 1)]
        rows = []
        for x, y in pts:
            rows.append([x * x, x * y, y * y, x, y, 1])
        sol = solve_linear(rows)
        assert sol.rank == 4
        assert sol.kernel_dim == 2

    def test_five_general_points_give_unique_conic(self):
        pts = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 3)]
        rows = [[x * x, x * y, y * y, x, y, 1] for x, y in pts]
        sol = solve_linear(rows)
        assert sol.rank == 5
        assert sol.kernel_dim == 1


class TestOverExtension:
    def test_field_coefficients(self):
        K = NumberField([-2, 0, 1], name="r")
        r = K.gen()
        sol = solve_linear([[r, 1]], [1])
        assert sol.consistent
        assert sol.kernel_dim == 1
        # particular: r*x + y = 1 with free column y=0 -> x = 1/r = r/2
        assert sol.particular[0] == r / 2
