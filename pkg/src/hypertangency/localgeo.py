"""Local analysis at curve points: multiplicity, blow-ups, branch structure,
point types, delta invariants, intersection multiplicities, and genus.

The engine is the blow-up of a plane germ at the origin.  A germ is an affine
curve equation in two variables vanishing at the origin; blowing up replaces
it by one germ per tangent direction (conjugate directions are computed once
over an extension field and counted with their orbit size).  Everything else
(branch counts, the infinitely-near tree, the delta invariant, Noether's
intersection recursion) is a fold over that engine.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .errors import (CommonComponentError, InputError, InternalInvariantError,
                     NotOnCurveError, NotUnibranchedError, PreconditionError)
from .factor import (Budget, adjoin_root, factor,
                     irreducible_factors_of_univariate)
from .fields import QQ, FieldElement, NumberField, common_field
from .poly import Poly, poly_gcd, resultant, squarefree_part
from .projplane import (PlaneCurve, ProjectivePoint, affine_germ,
                        lowest_homogeneous_part, multiplicity_of_germ)

INFINITE = float("inf")
"""Sentinel contact order used when the tangent line divides the curve."""


# -- germs ---------------------------------------------------------------------


@dataclass(frozen=True)
class LocalGerm:
    """An affine curve germ at the origin of a two-variable chart.

    `e_index` records which variable cuts the exceptional curve of the blow-up
    that produced this germ (None for a germ taken directly on a curve).
    """
    poly: Poly
    e_index: Optional[int] = None

    def __post_init__(self):
        if self.poly.nvars != 2:
            raise InputError("germs live in two variables")
        if self.poly.is_zero():
            raise InputError("zero germ")
        if not self.poly.coeff((0, 0)).is_zero():
            raise InputError("germ must vanish at the origin")

    @property
    def field(self) -> NumberField:
        return self.poly.field

    @property
    def multiplicity(self) -> int:
        return multiplicity_of_germ(self.poly)

    def tangent_cone(self) -> Poly:
        return lowest_homogeneous_part(self.poly)


def germ_at(C: PlaneCurve, p: ProjectivePoint) -> LocalGerm:
    """The germ of a curve at a point of it, in the point's canonical chart."""
    f, _, _ = affine_germ(C, p)
    return LocalGerm(f)


def multiplicity_at(C: PlaneCurve, p: ProjectivePoint) -> int:
    return germ_at(C, p).multiplicity


def tangent_cone(germ: LocalGerm, budget: Budget | None = None):
    """Factored tangent cone: (unit, [(irreducible binary factor, exponent)])."""
    return factor(germ.tangent_cone(), budget)


# -- blow-up engine ----------------------------------------------------------------


VERTICAL = "vertical"
"""Direction marker for the tangent direction along the second chart axis."""


@dataclass(frozen=True)
class BlowupChild:
    """One infinitely-near point on the exceptional curve after one blow-up."""
    germ: LocalGerm
    conj_degree: int        # size of the Galois orbit of the direction
    cone_multiplicity: int  # multiplicity of the direction in the tangent cone
    vertical: bool
    slope: Optional[FieldElement]  # tangent direction slope, in germ.field


def _slope_polynomial(cone: Poly) -> Poly:
    """cone(1, v) as a univariate polynomial in the slope v."""
    m = cone.degree()
    K = cone.field
    coeffs = [cone.coeff((m - i, i)) for i in range(m + 1)]
    return Poly.from_univariate(coeffs, 0, 1, K)


def blowup_children(germ: LocalGerm, budget: Budget | None = None) -> list[BlowupChild]:
    """All infinitely-near points of the germ after one blow-up of the origin."""
    f = germ.poly
    K = f.field
    m = multiplicity_of_germ(f)
    if m == 0:
        raise InputError("germ does not vanish at the origin")
    cone = lowest_homogeneous_part(f)
    x = Poly.var(0, 2, K)
    y = Poly.var(1, 2, K)
    children: list[BlowupChild] = []

    # Vertical direction (the first chart axis x = 0), handled in the chart
    # x = w*y where the exceptional curve is y = 0.
    mu0 = min(e[0] for e in cone.terms)
    if mu0 >= 1:
        g = f.substitute(0, x * y).divexact(y ** m)
        children.append(BlowupChild(LocalGerm(g, e_index=1), 1, mu0, True, None))

    # Slope directions y = t*x, handled in the chart y = (v + t)*x where the
    # exceptional curve is x = 0 and the direction point sits at the origin.
    sp = _slope_polynomial(cone)
    if not sp.is_constant():
        for piece, exp in irreducible_factors_of_univariate(sp, budget):
            deg = piece.degree_in(0)
            if deg == 1:
                t = -piece.coeff((0,))
                f_lift = f
                L = K
            else:
                L, emb, t = adjoin_root(K, piece, budget=budget)
                f_lift = f.map_coefficients(emb, L)
            xv = Poly.var(0, 2, L)
            vv = Poly.var(1, 2, L)
            g = f_lift.substitute(1, (vv + Poly.const(t, 2, L)) * xv)
            g = g.divexact(xv ** m)
            children.append(BlowupChild(LocalGerm(g, e_index=0), deg, exp, False, t))
    return children


def blowup_strict_transform(germ: LocalGerm, direction: Union[FieldElement, str],
                            budget: Budget | None = None) -> LocalGerm:
    """Strict transform of the germ at one chosen tangent direction.

    `direction` is either a slope (a field element t for the direction
    y = t*x, possibly in an extension of the germ's field) or the marker
    VERTICAL for the direction x = 0.
    """
    f = germ.poly
    m = multiplicity_of_germ(f)
    cone = lowest_homogeneous_part(f)
    if direction == VERTICAL:
        if min(e[0] for e in cone.terms) < 1:
            raise InputError("the vertical direction is not tangent here")
        K = f.field
        x = Poly.var(0, 2, K)
        y = Poly.var(1, 2, K)
        return LocalGerm(f.substitute(0, x * y).divexact(y ** m), e_index=1)
    if not isinstance(direction, FieldElement):
        raise InputError("direction must be a field element slope or VERTICAL")
    L = common_field(f.field, direction.field)
    t = L.coerce(direction)
    cone_L = cone.with_field(L)
    if not _slope_polynomial(cone_L).eval_all([t]).is_zero():
        raise InputError("the given slope is not a tangent direction")
    f_lift = f.with_field(L)
    x = Poly.var(0, 2, L)
    v = Poly.var(1, 2, L)
    g = f_lift.substitute(1, (v + Poly.const(t, 2, L)) * x).divexact(x ** m)
    return LocalGerm(g, e_index=0)


# -- the Lemma trichotomy -------------------------------------------------------------


@dataclass(frozen=True)
class PointType:
    """(m, n): multiplicity and tangent contact order at a unibranched point."""
    m: int
    n: Union[int, float]  # int, or INFINITE when the tangent divides the curve

    def __post_init__(self):
        if self.n != INFINITE and self.n <= self.m:
            raise InputError(f"point type needs n > m, got ({self.m}, {self.n})")

    def __iter__(self):
        return iter((self.m, self.n))


class BlowupCaseKind(Enum):
    CASE_A = "n<2m"
    CASE_B = "n>2m"
    CASE_C = "n=2m"


@dataclass(frozen=True)
class BlowupCase:
    """Predicted effect of one blow-up on an (m, n) unibranched point."""
    kind: BlowupCaseKind
    child_multiplicity: int
    child_type: Optional[PointType]  # None when the child type is not forced
    child_tangent: Optional[str]     # "exceptional", "old_tangent", or None


def classify_blowup(pt: PointType) -> BlowupCase:
    """The trichotomy for the strict transform of an (m, n) point."""
    m, n = pt.m, pt.n
    if n == INFINITE:
        raise InputError("cannot classify a point whose tangent divides the curve")
    if n < 2 * m:
        return BlowupCase(BlowupCaseKind.CASE_A, n - m,
                          PointType(n - m, m), "exceptional")
    if n > 2 * m:
        return BlowupCase(BlowupCaseKind.CASE_B, m,
                          PointType(m, n - m), "old_tangent")
    return BlowupCase(BlowupCaseKind.CASE_C, m, None, None)


# -- infinitely-near tree, branches, delta -----------------------------------------------


@dataclass
class TreeNode:
    multiplicity: int
    weight: int                      # conjugacy multiplicity relative to the root
    germ: LocalGerm
    children: list["TreeNode"] = dataclass_field(default_factory=list)


@dataclass
class InfinitelyNearTree:
    root: TreeNode
    delta: int
    branch_count: int


def _default_cap(poly: Poly) -> int:
    d = max(int(poly.degree()), 2)
    return 2 + (d - 1) * (d - 2) // 2 + d


def _build_tree(germ: LocalGerm, weight: int, depth: int, cap: int,
                budget: Budget | None) -> tuple[TreeNode, int, int]:
    """Returns (node, delta contribution, branch count) for the subtree."""
    m = germ.multiplicity
    node = TreeNode(m, weight, germ)
    delta = weight * m * (m - 1) // 2
    if m == 1:
        return node, delta, weight
    if depth > cap:
        raise InternalInvariantError(
            "blow-up recursion exceeded its depth cap; "
            "this indicates a non-squarefree germ")
    branches = 0
    for child in blowup_children(germ, budget):
        sub, d_sub, b_sub = _build_tree(child.germ, weight * child.conj_degree,
                                        depth + 1, cap, budget)
        node.children.append(sub)
        delta += d_sub
        branches += b_sub
    return node, delta, branches


def germ_tree(germ: LocalGerm, budget: Budget | None = None,
              cap: int | None = None) -> InfinitelyNearTree:
    cap = cap if cap is not None else _default_cap(germ.poly)
    root, delta, branches = _build_tree(germ, 1, 0, cap, budget)
    return InfinitelyNearTree(root, delta, branches)


def _squarefree_guard(C: PlaneCurve):
    if not C.is_squarefree():
        raise PreconditionError("curve form is not squarefree")


def infinitely_near_tree(C: PlaneCurve, p: ProjectivePoint,
                         budget: Budget | None = None) -> InfinitelyNearTree:
    _squarefree_guard(C)
    germ = germ_at(C, p)
    cap = 2 + (C.degree - 1) * (C.degree - 2) // 2 + C.degree
    return germ_tree(germ, budget, cap)


def delta_invariant(C: PlaneCurve, p: ProjectivePoint,
                    budget: Budget | None = None) -> int:
    return infinitely_near_tree(C, p, budget).delta


def branch_count(C: PlaneCurve, p: ProjectivePoint,
                 budget: Budget | None = None) -> int:
    return infinitely_near_tree(C, p, budget).branch_count


def is_unibranched(C: PlaneCurve, p: ProjectivePoint,
                   budget: Budget | None = None) -> bool:
    return branch_count(C, p, budget) == 1


# -- point types ------------------------------------------------------------------------


def germ_branch_count(germ: LocalGerm, budget: Budget | None = None) -> int:
    return germ_tree(germ, budget).branch_count


def germ_point_type(germ: LocalGerm, budget: Budget | None = None) -> PointType:
    """(m, n) of a unibranched germ; n is INFINITE when the tangent divides it."""
    if germ_branch_count(germ, budget) != 1:
        raise NotUnibranchedError("germ has more than one branch")
    f = germ.poly
    m = germ.multiplicity
    sf = squarefree_part(germ.tangent_cone())
    if sf.degree() != 1:
        raise InternalInvariantError("unibranched germ with split tangent cone")
    a = sf.coeff((1, 0))
    b = sf.coeff((0, 1))
    K = f.field
    if not b.is_zero():
        # Tangent a*x + b*y = 0: parameterize x = s, y = -(a/b) s.
        slope = -(a / b)
        restricted = f.substitute(1, Poly.var(0, 2, K).scale(slope))
    else:
        # Tangent x = 0: parameterize x = 0, y = s.
        restricted = f.substitute(0, Poly.zero(2, K))
    if restricted.is_zero():
        return PointType(m, INFINITE)
    n = multiplicity_of_germ(restricted)
    if n <= m:
        raise InternalInvariantError("tangent contact not above multiplicity")
    return PointType(m, n)


def point_type(C: PlaneCurve, p: ProjectivePoint,
               budget: Budget | None = None) -> PointType:
    _squarefree_guard(C)
    if not is_unibranched(C, p, budget):
        raise NotUnibranchedError(f"{p} is not a unibranched point")
    return germ_point_type(germ_at(C, p), budget)


# -- intersection multiplicity (Noether recursion) ------------------------------------------


def germ_intersection_multiplicity(f: Poly, g: Poly, budget: Budget | None = None,
                                   cap: int = 64) -> int:
    """Local intersection multiplicity of two germs at the origin."""
    L = common_field(f.field, g.field)
    return _noether(f.with_field(L), g.with_field(L), 0, cap, budget)


def _noether(f: Poly, g: Poly, depth: int, cap: int, budget: Budget | None) -> int:
    if f.is_zero() or g.is_zero():
        raise CommonComponentError("a germ vanished entirely during recursion")
    mf = multiplicity_of_germ(f)
    mg = multiplicity_of_germ(g)
    if mf == 0 or mg == 0:
        return 0
    if depth > cap:
        raise InternalInvariantError(
            "intersection recursion exceeded its depth cap; "
            "the germs likely share a component")
    total = mf * mg
    K = f.field
    cone_f = lowest_homogeneous_part(f)
    cone_g = lowest_homogeneous_part(g)
    x = Poly.var(0, 2, K)
    y = Poly.var(1, 2, K)

    if min(e[0] for e in cone_f.terms) >= 1 and min(e[0] for e in cone_g.terms) >= 1:
        f2 = f.substitute(0, x * y).divexact(y ** mf)
        g2 = g.substitute(0, x * y).divexact(y ** mg)
        total += _noether(f2, g2, depth + 1, cap, budget)

    pf = _slope_polynomial(cone_f)
    pg = _slope_polynomial(cone_g)
    shared = poly_gcd(pf, pg)
    if not shared.is_constant():
        for piece, _ in irreducible_factors_of_univariate(shared, budget):
            deg = piece.degree_in(0)
            if deg == 1:
                t = -piece.coeff((0,))
                fl, gl, L = f, g, K
            else:
                L, emb, t = adjoin_root(K, piece, budget=budget)
                fl = f.map_coefficients(emb, L)
                gl = g.map_coefficients(emb, L)
            xv = Poly.var(0, 2, L)
            vv = Poly.var(1, 2, L)
            sub = (vv + Poly.const(t, 2, L)) * xv
            f3 = fl.substitute(1, sub).divexact(xv ** mf)
            g3 = gl.substitute(1, sub).divexact(xv ** mg)
            total += deg * _noether(f3, g3, depth + 1, cap, budget)
    return total


def local_intersection_multiplicity(C: PlaneCurve, B: PlaneCurve,
                                    p: ProjectivePoint,
                                    budget: Budget | None = None) -> int:
    """Intersection multiplicity of two curves at a point (0 off either curve)."""
    shared = poly_gcd(C.form, B.form)
    if not shared.is_constant() and shared.eval_all(list(p.coords)).is_zero():
        raise CommonComponentError("curves share a component through the point")
    if not C.contains(p) or not B.contains(p):
        return 0
    f, _, _ = affine_germ(C, p)
    g, _, _ = affine_germ(B, p)
    cap = 2 + C.degree * B.degree
    return germ_intersection_multiplicity(f, g, budget, cap)


# -- global intersections --------------------------------------------------------------------


@dataclass(frozen=True)
class IntersectionOrbit:
    """A Galois orbit of intersection points, represented by one member."""
    point: ProjectivePoint
    multiplicity: int   # local intersection multiplicity at each orbit point
    orbit_degree: int   # number of conjugate points in the orbit
    field: NumberField  # field of definition of the representative

    def sort_key(self):
        return (self.orbit_degree, self.field.minpoly,
                tuple(c.coords for c in self.point.coords))


def _shear_centers():
    """Deterministic sweep of projection centers: identity first, then seeded."""
    yield Fraction(0), Fraction(0)
    rng = random.Random(65537)
    while True:
        yield Fraction(rng.randint(-999, 999)), Fraction(rng.randint(-999, 999))


def intersection_points(C: PlaneCurve, B: PlaneCurve,
                        budget: Budget | None = None) -> list[IntersectionOrbit]:
    """All intersection points over the algebraic closure, grouped in orbits.

    Every orbit is tagged with the local intersection multiplicity at each of
    its points; the Bezout total sum(orbit_degree * multiplicity) is checked
    to equal deg C * deg B exactly.
    """
    if not poly_gcd(C.form, B.form).is_constant():
        raise CommonComponentError("curves share a component")
    fld = common_field(C.field, B.field)
    F = C.form.with_field(fld)
    G = B.form.with_field(fld)
    mn = C.degree * B.degree
    attempts = 0
    for a, b in _shear_centers():
        attempts += 1
        if attempts > 200:
            raise InternalInvariantError("no valid projection center found")
        if F.eval_all([a, 1, b]).is_zero() or G.eval_all([a, 1, b]).is_zero():
            continue
        orbits = _intersections_for_shear(F, G, fld, a, b, mn, budget)
        if orbits is None:
            continue
        total = sum(o.multiplicity * o.orbit_degree for o in orbits)
        if total != mn:
            raise InternalInvariantError(
                f"Bezout mismatch: {total} != {mn}")
        return sorted(orbits, key=IntersectionOrbit.sort_key)
    raise InternalInvariantError("unreachable")


def _intersections_for_shear(F: Poly, G: Poly, fld: NumberField,
                             a: Fraction, b: Fraction, mn: int,
                             budget: Budget | None):
    """One shear attempt; None when a fiber holds two distinct points."""
    x = Poly.var(0, 3, fld)
    y = Poly.var(1, 3, fld)
    z = Poly.var(2, 3, fld)
    ca = Poly.const(a, 3, fld)
    cb = Poly.const(b, 3, fld)
    F2 = F.substitute(0, x + ca * y).substitute(2, z + cb * y)
    G2 = G.substitute(0, x + ca * y).substitute(2, z + cb * y)
    R = resultant(F2, G2, 1)
    if R.is_zero():
        raise InternalInvariantError("resultant vanished despite coprime forms")
    U_poly = R.substitute(2, Poly.const(1, 3, fld))
    U = Poly.from_univariate(U_poly.as_univariate(0), 0, 1, fld)
    if U.is_zero():
        raise InternalInvariantError("dehomogenized resultant vanished")
    inf_mult = mn - U.degree_in(0)
    orbits: list[IntersectionOrbit] = []

    def fiber_point(F_l: Poly, G_l: Poly, L: NumberField):
        """The unique y-coordinate where both restricted forms vanish."""
        h = poly_gcd(Poly.from_univariate(F_l.as_univariate(1), 0, 1, L),
                     Poly.from_univariate(G_l.as_univariate(1), 0, 1, L))
        hs = squarefree_part(h)
        if hs.degree_in(0) != 1:
            return None
        return -(hs.coeff((0,)) / hs.coeff((1,)))

    if inf_mult > 0:
        Fl = F2.substitute(0, Poly.const(1, 3, fld)).substitute(2, Poly.zero(3, fld))
        Gl = G2.substitute(0, Poly.const(1, 3, fld)).substitute(2, Poly.zero(3, fld))
        y0 = fiber_point(Fl, Gl, fld)
        if y0 is None:
            return None
        pt = ProjectivePoint(fld.one() + a * y0, y0, b * y0)
        orbits.append(IntersectionOrbit(pt, inf_mult, 1, fld))

    if not U.is_constant():
        for piece, exp in irreducible_factors_of_univariate(U, budget):
            deg = piece.degree_in(0)
            if deg == 1:
                x0 = -piece.coeff((0,))
                L = fld
                F_lift, G_lift = F2, G2
            else:
                L, emb, x0 = adjoin_root(fld, piece, budget=budget)
                F_lift = F2.map_coefficients(emb, L)
                G_lift = G2.map_coefficients(emb, L)
            Fl = F_lift.substitute(0, Poly.const(x0, 3, L)).substitute(
                2, Poly.const(1, 3, L))
            Gl = G_lift.substitute(0, Poly.const(x0, 3, L)).substitute(
                2, Poly.const(1, 3, L))
            y0 = fiber_point(Fl, Gl, L)
            if y0 is None:
                return None
            pt = ProjectivePoint(x0 + L.coerce(a) * y0, y0, L.coerce(b) * y0 + 1)
            orbits.append(IntersectionOrbit(pt, exp, deg, L))
    return orbits


# -- singular points and genus ------------------------------------------------------------------


@dataclass(frozen=True)
class SingularPoint:
    point: ProjectivePoint
    multiplicity: int
    orbit_degree: int
    field: NumberField

    def sort_key(self):
        return (self.orbit_degree, self.field.minpoly,
                tuple(c.coords for c in self.point.coords))


def singular_points(C: PlaneCurve, budget: Budget | None = None) -> list[SingularPoint]:
    """All singular points over the algebraic closure, one per orbit."""
    if not C.is_integral(budget):
        raise PreconditionError("singular-point analysis expects an integral curve")
    if C.degree == 1:
        return []
    K = C.field
    out: list[SingularPoint] = []

    # Finite chart z = 1: common zeros of f, f_x, f_y found through resultants
    # in y, then an exact per-fiber check.
    f = C.form.dehomogenize(2)
    fx = f.derivative(0)
    fy = f.derivative(1)
    res_list = []
    for g in (fx, fy):
        if g.is_zero():
            continue
        if f.degree_in(1) >= 1 and g.degree_in(1) >= 1:
            res_list.append(resultant(f, g, 1))
        elif g.degree_in(1) < 1:
            res_list.append(g)  # y-free already
    cand = None
    for rp in res_list:
        uni = Poly.from_univariate(rp.as_univariate(0), 0, 1, K) if not rp.is_zero() else None
        if uni is None or uni.is_zero():
            continue
        cand = uni if cand is None else poly_gcd(cand, uni)
    if cand is not None and not cand.is_constant():
        for piece, _ in irreducible_factors_of_univariate(squarefree_part(cand), budget):
            deg = piece.degree_in(0)
            if deg == 1:
                x0, L, emb = -piece.coeff((0,)), K, None
            else:
                L, emb, x0 = adjoin_root(K, piece, budget=budget)
            polys = []
            for g in (f, fx, fy):
                gl = g if emb is None else g.map_coefficients(emb, L)
                polys.append(Poly.from_univariate(
                    gl.substitute(0, Poly.const(x0, 2, L)).as_univariate(1), 0, 1, L))
            h = polys[0]
            for other in polys[1:]:
                h = poly_gcd(h, other)
            if h.is_constant():
                continue
            for hp, _ in irreducible_factors_of_univariate(squarefree_part(h), budget):
                hdeg = hp.degree_in(0)
                if hdeg == 1:
                    y0, L2, orbit = -hp.coeff((0,)), L, deg
                else:
                    L2, emb2, y0 = adjoin_root(L, hp, budget=budget)
                    orbit = deg * hdeg
                pt = ProjectivePoint(L2.coerce(x0), y0, L2.one())
                out.append(SingularPoint(pt, multiplicity_at(C, pt), orbit, L2))

    # Points at infinity: roots of the degree form, filtered by the vanishing
    # of all three partial derivatives.
    out.extend(_singular_points_at_infinity(C, budget))
    return sorted(out, key=SingularPoint.sort_key)


def _singular_points_at_infinity(C: PlaneCurve, budget: Budget | None):
    K = C.field
    gradient = [C.form.derivative(i) for i in range(3)]
    found = []

    def check(pt: ProjectivePoint, orbit: int, field: NumberField):
        coords = list(pt.coords)
        if all(g.eval_all(coords).is_zero() for g in gradient):
            found.append(SingularPoint(pt, multiplicity_at(C, pt), orbit, field))

    degree_form = C.form.substitute(2, Poly.zero(3, K))
    if degree_form.is_zero():
        raise PreconditionError("curve contains the line at infinity")
    # Root (0:1:0) exists iff x divides the degree form.
    if min(e[0] for e in degree_form.terms) >= 1:
        check(ProjectivePoint(K.zero(), K.one(), K.zero()), 1, K)
    u = Poly.from_univariate(
        degree_form.substitute(0, Poly.const(1, 3, K)).as_univariate(1), 0, 1, K)
    if not u.is_constant() and not u.is_zero():
        for piece, _ in irreducible_factors_of_univariate(squarefree_part(u), budget):
            deg = piece.degree_in(0)
            if deg == 1:
                t0, L = -piece.coeff((0,)), K
            else:
                L, _, t0 = adjoin_root(K, piece, budget=budget)
            check(ProjectivePoint(L.one(), t0, L.zero()), deg, L)
    return found


def geometric_genus(C: PlaneCurve, budget: Budget | None = None) -> int:
    """Genus of the normalization: (d-1)(d-2)/2 minus all delta invariants."""
    if not C.is_integral(budget):
        raise PreconditionError("genus is defined here for integral curves")
    d = C.degree
    g = (d - 1) * (d - 2) // 2
    for sp in singular_points(C, budget):
        g -= sp.orbit_degree * delta_invariant(C, sp.point, budget)
    if g < 0:
        raise InternalInvariantError("negative genus computed")
    return g
