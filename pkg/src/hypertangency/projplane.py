"""Projective plane geometry: points, curves, projectivities, tangent lines.

Points are stored in a canonical representative (last nonzero coordinate
scaled to 1) so projective equality is plain coordinate equality.  Curves wrap
a homogeneous form in three variables, normalized so the lexicographically
first coefficient is 1, with cached degree and lazily computed component
factorization over the working field.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .errors import (DegenerateFrameError, InputError, InternalInvariantError,
                     NotOnCurveError, NotUnibranchedError)
from .factor import Budget, factor
from .fields import QQ, FieldElement, NumberField, common_field
from .poly import Poly, is_squarefree, squarefree_part

Coord = Union[int, Fraction, FieldElement]


def _unify_coords(values: Sequence[Coord]) -> tuple[list[FieldElement], NumberField]:
    field = QQ
    for v in values:
        if isinstance(v, FieldElement):
            field = common_field(field, v.field)
    return [field.coerce(v) for v in values], field


class ProjectivePoint:
    """A point of the projective plane over an exact field."""

    __slots__ = ("coords", "field")

    def __init__(self, x: Coord, y: Coord, z: Coord):
        vals, field = _unify_coords([x, y, z])
        last = next((i for i in (2, 1, 0) if not vals[i].is_zero()), None)
        if last is None:
            raise InputError("projective point needs a nonzero coordinate")
        inv = vals[last].inverse()
        self.coords = tuple(v * inv for v in vals)
        self.field = field

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return all(a == b for a, b in zip(self.coords, other.coords))

    def __hash__(self) -> int:
        return hash(tuple(self.coords))

    def __repr__(self) -> str:
        return "(" + " : ".join(repr(c) for c in self.coords) + ")"

    def with_field(self, field: NumberField) -> "ProjectivePoint":
        return ProjectivePoint(*(field.coerce(c) for c in self.coords))

    def chart_index(self) -> int:
        """Index of the canonical chart (last coordinate equal to 1)."""
        for i in (2, 1, 0):
            if self.coords[i] == 1:
                return i
        raise InternalInvariantError("canonical point without unit coordinate")

    def affine_in_chart(self, chart: int) -> tuple[FieldElement, FieldElement]:
        if self.coords[chart].is_zero():
            raise InputError("point lies outside the requested chart")
        inv = self.coords[chart].inverse()
        others = [self.coords[i] * inv for i in range(3) if i != chart]
        return others[0], others[1]


class PlaneCurve:
    """A plane projective curve: a nonzero homogeneous form in x, y, z."""

    __slots__ = ("form", "degree", "_components", "_squarefree")

    def __init__(self, form: Poly):
        if form.nvars != 3:
            raise InputError("curve forms live in three variables")
        if form.is_zero():
            raise InputError("the zero form defines no curve")
        if not form.is_homogeneous():
            raise InputError("curve form must be homogeneous")
        self.form = form.normalized()
        self.degree = form.degree()
        self._components = None
        self._squarefree = None

    @property
    def field(self) -> NumberField:
        return self.form.field

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlaneCurve):
            return NotImplemented
        return self.form == other.form

    def __hash__(self):
        return hash(self.form.canonical_key())

    def __repr__(self) -> str:
        return f"PlaneCurve({self.form.to_string()})"

    def canonical_key(self):
        return self.form.canonical_key()

    def contains(self, p: ProjectivePoint) -> bool:
        return self.form.eval_all(list(p.coords)).is_zero()

    def is_squarefree(self) -> bool:
        if self._squarefree is None:
            self._squarefree = is_squarefree(self.form)
        return self._squarefree

    def components(self, budget: Budget | None = None) -> list[tuple["PlaneCurve", int]]:
        """Irreducible components over the working field, with multiplicities."""
        if self._components is None:
            _, factors = factor(self.form, budget)
            self._components = [(PlaneCurve(g), e) for g, e in factors]
        return self._components

    def is_integral(self, budget: Budget | None = None) -> bool:
        """Irreducible over the working field (absolute for lines and conics).

        For degree >= 3 this is irreducibility over the coefficient field;
        absolute irreducibility is an assumption recorded by report writers.
        """
        if self.degree == 1:
            return True
        if self.degree == 2:
            return not _conic_determinant(self.form).is_zero()
        comps = self.components(budget)
        return len(comps) == 1 and comps[0][1] == 1

    def chart(self, index: int) -> Poly:
        """Affine equation in the chart where the given variable is 1."""
        return self.form.dehomogenize(index)


def _conic_determinant(form: Poly) -> FieldElement:
    """Determinant of the symmetric matrix of a quadratic form (times 8)."""
    f = form
    fld = f.field

    def c(i, j, k):
        return f.coeff((i, j, k))

    a = 2 * c(2, 0, 0)
    b = 2 * c(0, 2, 0)
    d = 2 * c(0, 0, 2)
    e = c(1, 1, 0)
    g = c(1, 0, 1)
    h = c(0, 1, 1)
    # det of [[a, e, g], [e, b, h], [g, h, d]]
    det = a * (b * d - h * h) - e * (e * d - h * g) + g * (e * h - b * g)
    return fld.coerce(det) if not isinstance(det, FieldElement) else det


def line_through(p: ProjectivePoint, q: ProjectivePoint) -> PlaneCurve:
    """The unique line through two distinct points."""
    if p == q:
        raise InputError("line_through needs two distinct points")
    coeffs, field = _unify_coords(list(p.coords) + list(q.coords))
    a = coeffs[:3]
    b = coeffs[3:]
    cross = [a[1] * b[2] - a[2] * b[1],
             a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]]
    terms = {}
    for i, cval in enumerate(cross):
        if not cval.is_zero():
            exp = tuple(1 if j == i else 0 for j in range(3))
            terms[exp] = cval
    return PlaneCurve(Poly(3, field, terms))


def line_intersection(L1: PlaneCurve, L2: PlaneCurve) -> ProjectivePoint:
    """The common point of two distinct lines."""
    if L1.degree != 1 or L2.degree != 1:
        raise InputError("line_intersection expects two lines")
    if L1 == L2:
        raise InputError("the lines coincide")
    raw = list(line_coefficients(L1)) + list(line_coefficients(L2))
    vals, _ = _unify_coords(raw)
    a, b = vals[:3], vals[3:]
    cross = [a[1] * b[2] - a[2] * b[1],
             a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]]
    return ProjectivePoint(*cross)


def line_coefficients(L: PlaneCurve) -> tuple[FieldElement, FieldElement, FieldElement]:
    if L.degree != 1:
        raise InputError("expected a line")
    return tuple(L.form.coeff(tuple(1 if j == i else 0 for j in range(3)))
                 for i in range(3))


class Projectivity:
    """An invertible linear change of projective coordinates."""

    __slots__ = ("matrix", "field", "_inverse")

    def __init__(self, rows: Sequence[Sequence[Coord]]):
        flat = [v for row in rows for v in row]
        if len(flat) != 9:
            raise InputError("projectivity needs a 3x3 matrix")
        vals, field = _unify_coords(flat)
        self.matrix = tuple(tuple(vals[3 * i + j] for j in range(3)) for i in range(3))
        self.field = field
        if _det3(self.matrix, field).is_zero():
            raise InputError("projectivity matrix is singular")
        self._inverse = None

    @classmethod
    def identity(cls) -> "Projectivity":
        return cls([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    @classmethod
    def diagonal(cls, d0: Coord, d1: Coord, d2: Coord) -> "Projectivity":
        return cls([[d0, 0, 0], [0, d1, 0], [0, 0, d2]])

    def inverse(self) -> "Projectivity":
        if self._inverse is None:
            M = self.matrix
            det = _det3(M, self.field)
            inv_det = det.inverse()
            cof = [[None] * 3 for _ in range(3)]
            for i in range(3):
                for j in range(3):
                    sub = [M[r][c] for r in range(3) for c in range(3)
                           if r != i and c != j]
                    minor = sub[0] * sub[3] - sub[1] * sub[2]
                    sign = 1 if (i + j) % 2 == 0 else -1
                    cof[j][i] = minor * inv_det * sign  # transposed in place
            self._inverse = Projectivity(cof)
            self._inverse._inverse = self
        return self._inverse

    def compose(self, other: "Projectivity") -> "Projectivity":
        """self after other (matrix product self.matrix @ other.matrix)."""
        A, B = self.matrix, other.matrix
        fld = common_field(self.field, other.field)
        rows = [[sum((A[i][k] * B[k][j] for k in range(3)), fld.zero())
                 for j in range(3)] for i in range(3)]
        return Projectivity(rows)

    def apply_point(self, p: ProjectivePoint) -> ProjectivePoint:
        fld = common_field(self.field, p.field)
        v = [fld.coerce(c) for c in p.coords]
        M = self.matrix
        out = [sum((fld.coerce(M[i][j]) * v[j] for j in range(3)), fld.zero())
               for i in range(3)]
        return ProjectivePoint(*out)

    def apply_curve(self, C: PlaneCurve) -> PlaneCurve:
        """Transform a curve: the new form is the old one composed with T^-1."""
        return PlaneCurve(linear_substitute(C.form, self.inverse().matrix))

    def __repr__(self):
        return f"Projectivity({self.matrix})"


def _det3(M, field) -> FieldElement:
    det = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
           - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
           + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
    return field.coerce(det) if not isinstance(det, FieldElement) else det


def linear_substitute(form: Poly, matrix) -> Poly:
    """Substitute each variable x_i by the linear form sum_j matrix[i][j] x_j."""
    fld = form.field
    for row in matrix:
        for v in row:
            if isinstance(v, FieldElement):
                fld = common_field(fld, v.field)
    images = []
    for i in range(3):
        terms = {}
        for j in range(3):
            c = fld.coerce(matrix[i][j])
            if not c.is_zero():
                terms[tuple(1 if k == j else 0 for k in range(3))] = c
        images.append(Poly(3, fld, terms))
    # Power cache keeps repeated exponent work down.
    pow_cache: dict[tuple[int, int], Poly] = {}

    def image_power(i: int, e: int) -> Poly:
        key = (i, e)
        if key not in pow_cache:
            pow_cache[key] = images[i] ** e
        return pow_cache[key]

    out = Poly.zero(3, fld)
    for exps, c in form.terms.items():
        term = Poly.const(fld.coerce(c), 3, fld)
        for i, e in enumerate(exps):
            if e:
                term = term * image_power(i, e)
        out = out + term
    return out


# -- germs and tangent lines -----------------------------------------------------


def affine_germ(C: PlaneCurve, p: ProjectivePoint) -> tuple[Poly, int, tuple]:
    """Affine equation of C with p moved to the origin of its canonical chart.

    Returns (germ polynomial in two variables, chart index, affine coordinates
    of p in that chart).  The two germ variables are the remaining projective
    variables in their original order.
    """
    if not C.contains(p):
        raise NotOnCurveError(f"point {p} does not lie on the curve")
    fld = common_field(C.field, p.field)
    chart = p.chart_index()
    f = C.form.with_field(fld).dehomogenize(chart)
    a, b = p.with_field(fld).affine_in_chart(chart)
    u = Poly.var(0, 2, fld)
    v = Poly.var(1, 2, fld)
    shifted = f.substitute(0, u + Poly.const(a, 2, fld))
    shifted = shifted.substitute(1, v + Poly.const(b, 2, fld))
    return shifted, chart, (a, b)


def lowest_homogeneous_part(f: Poly) -> Poly:
    """The nonzero homogeneous part of smallest total degree."""
    if f.is_zero():
        raise InputError("zero polynomial has no lowest part")
    m = min(sum(e) for e in f.terms)
    return Poly(f.nvars, f.field, {e: c for e, c in f.terms.items() if sum(e) == m})


def multiplicity_of_germ(f: Poly) -> int:
    if f.is_zero():
        raise InputError("zero germ")
    return min(sum(e) for e in f.terms)


def tangent_line(C: PlaneCurve, p: ProjectivePoint) -> PlaneCurve:
    """The unique line with contact above the multiplicity at a point with a
    single tangent direction.

    Raises NotUnibranchedError when the tangent cone splits into more than one
    direction (no unique tangent line exists there).
    """
    germ, chart, (a, b) = affine_germ(C, p)
    cone = lowest_homogeneous_part(germ)
    sf = squarefree_part(cone)
    if sf.degree() != 1:
        raise NotUnibranchedError(
            "tangent cone has more than one direction; no unique tangent line")
    return _chart_line_to_global(sf, chart, a, b)


def _chart_line_to_global(line2: Poly, chart: int, a, b) -> PlaneCurve:
    """Lift a line a0*u + b0*v (+c0) through the chart origin shift to P2."""
    fld = line2.field
    other = [i for i in range(3) if i != chart]
    cu = line2.coeff((1, 0))
    cv = line2.coeff((0, 1))
    c0 = line2.coeff((0, 0))
    terms = {}
    coeffs3 = {other[0]: cu, other[1]: cv,
               chart: c0 - cu * a - cv * b}
    for i, c in coeffs3.items():
        if not c.is_zero():
            terms[tuple(1 if j == i else 0 for j in range(3))] = c
    return PlaneCurve(Poly(3, fld, terms))


# -- frame normalization -----------------------------------------------------------


def frame_normalize(p: ProjectivePoint, Lp: PlaneCurve,
                    q: ProjectivePoint, Lq: PlaneCurve,
                    scales: tuple[Coord, Coord] = (1, 1)) -> Projectivity:
    """A projectivity sending p to (0:1:0), Lp to {z=0}, q to (0:0:1), Lq to {y=0}.

    The two residual scale freedoms are fixed by `scales` (both 1 by default,
    randomizable for frame-invariance testing).
    """
    if Lp.degree != 1 or Lq.degree != 1:
        raise InputError("frame lines must have degree 1")
    if p == q:
        raise InputError("frame points must be distinct")
    if Lp == Lq:
        raise InputError("frame lines must be distinct")
    if not Lp.contains(p):
        raise InputError("p must lie on Lp")
    if not Lq.contains(q):
        raise InputError("q must lie on Lq")
    r = line_intersection(Lp, Lq)
    if r == p or r == q:
        raise DegenerateFrameError(
            "frame degenerate: a frame point coincides with the line intersection")
    cols = [r.coords, p.coords, q.coords]
    fld = QQ
    for col in cols:
        for v in col:
            fld = common_field(fld, v.field)
    P = [[fld.coerce(cols[j][i]) for j in range(3)] for i in range(3)]
    base = Projectivity(P).inverse()
    s1, s2 = scales
    return Projectivity.diagonal(1, s1, s2).compose(base)
