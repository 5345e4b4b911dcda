"""Exact linear algebra over field elements: reduced row echelon solving.

Systems are solved exactly; inconsistency is reported through a marker on the
solution object, not an exception, so callers can treat "no solution" as data.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .fields import QQ, FieldElement, NumberField, common_field

Entry = Union[int, Fraction, FieldElement]


@dataclass
class LinearSolution:
    """Affine solution space of A x = b."""
    consistent: bool
    particular: list[FieldElement] | None
    kernel_basis: list[list[FieldElement]]
    rank: int
    field: NumberField

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel_basis)

    @property
    def unique(self) -> bool:
        return self.consistent and not self.kernel_basis


def _unify_entries(matrix, rhs) -> tuple[list[list[FieldElement]], list[FieldElement], NumberField]:
    field = QQ
    for row in matrix:
        for e in row:
            if isinstance(e, FieldElement):
                field = common_field(field, e.field)
    for e in rhs:
        if isinstance(e, FieldElement):
            field = common_field(field, e.field)
    M = [[field.coerce(e) for e in row] for row in matrix]
    b = [field.coerce(e) for e in rhs]
    return M, b, field


def solve_linear(matrix: Sequence[Sequence[Entry]],
                 rhs: Sequence[Entry] | None = None) -> LinearSolution:
    """Solve A x = b exactly (homogeneous when rhs is omitted).

    Returns a particular solution and a kernel basis; an inconsistent system
    yields consistent=False with no particular solution.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    for row in matrix:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    if rhs is None:
        rhs = [0] * nrows
    if len(rhs) != nrows:
        raise ValueError("right-hand side length mismatch")
    M, b, field = _unify_entries(matrix, rhs)

    # Gauss-Jordan to reduced row echelon form on the augmented matrix.
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if not M[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        M[r], M[pivot_row] = M[pivot_row], M[r]
        b[r], b[pivot_row] = b[pivot_row], b[r]
        inv = M[r][c].inverse()
        M[r] = [e * inv for e in M[r]]
        b[r] = b[r] * inv
        for i in range(nrows):
            if i != r and not M[i][c].is_zero():
                f = M[i][c]
                M[i] = [e - f * p for e, p in zip(M[i], M[r])]
                b[i] = b[i] - f * b[r]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    rank = len(pivots)

    for i in range(rank, nrows):
        if not b[i].is_zero():
            return LinearSolution(False, None, [], rank, field)

    free_cols = [c for c in range(ncols) if c not in pivots]
    particular = [field.zero()] * ncols
    for i, c in enumerate(pivots):
        particular[c] = b[i]
    kernel = []
    for fc in free_cols:
        vec = [field.zero()] * ncols
        vec[fc] = field.one()
        for i, c in enumerate(pivots):
            vec[c] = -M[i][fc]
        kernel.append(vec)
    return LinearSolution(True, particular, kernel, rank, field)
