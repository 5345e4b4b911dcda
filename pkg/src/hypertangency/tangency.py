"""Global tangency predicates: hypertangency, hyper-bitangency, flexes via the
Hessian, and the mirror checker relating the local types of two curves that
meet in a single unibranched point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import (CommonComponentError, InternalInvariantError,
                     NotUnibranchedError, PreconditionError)
from .factor import Budget
from .fields import FieldElement, NumberField
from .localgeo import (INFINITE, IntersectionOrbit, PointType, branch_count,
                       delta_invariant, intersection_points, multiplicity_at,
                       point_type)
from .poly import Poly, det_bareiss
from .projplane import PlaneCurve, ProjectivePoint


@dataclass(frozen=True)
class ContactPoint:
    """One Galois orbit of points where the subject curve meets the base."""
    point: ProjectivePoint
    field: NumberField
    orbit_degree: int
    multiplicity: int            # local intersection multiplicity with the base
    branches: int                # branch count of the subject at the point
    subject_type: Optional[PointType]  # None when not unibranched there
    base_type: Optional[PointType]     # None when not unibranched on the base


@dataclass
class TangencyReport:
    subject: PlaneCurve
    base: PlaneCurve
    contacts: list[ContactPoint]
    total_branches: int          # sum of orbit_degree * branches over contacts
    bezout_total: int            # sum of orbit_degree * multiplicity
    hypertangent: bool
    hyper_bitangent: bool


def tangency_report(C: PlaneCurve, B: PlaneCurve,
                    budget: Budget | None = None) -> TangencyReport:
    """Full contact analysis of the subject curve C against the base B."""
    if not C.is_integral(budget):
        raise PreconditionError("the subject curve must be integral")
    orbits = intersection_points(C, B, budget)
    contacts = []
    total_branches = 0
    for o in orbits:
        bc = branch_count(C, o.point, budget)
        subject_type = point_type(C, o.point, budget) if bc == 1 else None
        try:
            base_type = point_type(B, o.point, budget)
        except (NotUnibranchedError, PreconditionError):
            base_type = None
        total_branches += o.orbit_degree * bc
        contacts.append(ContactPoint(o.point, o.field, o.orbit_degree,
                                     o.multiplicity, bc, subject_type, base_type))
    bezout_total = sum(c.orbit_degree * c.multiplicity for c in contacts)
    if bezout_total != C.degree * B.degree:
        raise InternalInvariantError("contact multiplicities do not sum to the "
                                     "product of the degrees")
    hyper = total_branches == 1
    if hyper and (len(contacts) != 1 or contacts[0].orbit_degree != 1):
        raise InternalInvariantError("single-branch contact must be a single "
                                     "rational-degree orbit")
    return TangencyReport(C, B, contacts, total_branches, bezout_total,
                          hyper, total_branches <= 2)


def is_hypertangent(C: PlaneCurve, B: PlaneCurve,
                    budget: Budget | None = None) -> TangencyReport:
    """Does C meet B in a single point, unibranched on C?"""
    return tangency_report(C, B, budget)


def is_hyper_bitangent(C: PlaneCurve, B: PlaneCurve,
                       budget: Budget | None = None) -> TangencyReport:
    """Does the normalization of C carry at most two points over C's meet with B?"""
    return tangency_report(C, B, budget)


# -- the mirror checker ------------------------------------------------------------


@dataclass
class MirrorCheck:
    """Comparison of the observed local type of C against the one forced by
    the (1,l) type of B when the two curves meet only at one point."""
    l: int
    m: int
    predicted_type: PointType
    observed_type: PointType
    delta_bound: Fraction
    delta_observed: int
    passed: bool


def mirror_check(C: PlaneCurve, B: PlaneCurve, q: ProjectivePoint,
                 budget: Budget | None = None) -> MirrorCheck:
    """Check that q is an (m, l*m)-point of C with the delta bound satisfied.

    Preconditions, each reported individually: both degrees at least 2, B and
    C meet exactly at q, q unibranched on both, and q a (1,l)-point of B.
    """
    if B.degree < 2:
        raise PreconditionError("the base curve must have degree at least 2")
    if C.degree < 2:
        raise PreconditionError("the subject curve must have degree at least 2")
    orbits = intersection_points(B, C, budget)
    if len(orbits) != 1 or orbits[0].orbit_degree != 1 or orbits[0].point != q:
        raise PreconditionError("the curves must meet exactly at the given point")
    if branch_count(B, q, budget) != 1:
        raise PreconditionError("the point is not unibranched on the base curve")
    if branch_count(C, q, budget) != 1:
        raise PreconditionError("the point is not unibranched on the subject curve")
    base_type = point_type(B, q, budget)
    if base_type.m != 1 or base_type.n == INFINITE:
        raise PreconditionError("the base curve must have a (1,l)-point at q")
    l = int(base_type.n)
    m = multiplicity_at(C, q)
    observed = point_type(C, q, budget)
    predicted = PointType(m, l * m)
    delta_observed = delta_invariant(C, q, budget)
    bound = Fraction((m - 1) * (B.degree * C.degree - m), 2)
    passed = observed == predicted and delta_observed >= bound
    return MirrorCheck(l, m, predicted, observed, bound, delta_observed, passed)


# -- flexes ---------------------------------------------------------------------


def hessian(C: PlaneCurve) -> Union[PlaneCurve, FieldElement]:
    """Determinant of the matrix of second partials of the defining form."""
    if C.degree < 2:
        raise PreconditionError("the Hessian needs a curve of degree at least 2")
    F = C.form
    rows = [[F.derivative(i).derivative(j) for j in range(3)] for i in range(3)]
    H = det_bareiss(rows)
    if H.is_constant():
        return H.constant_value() if not H.is_zero() else C.field.zero()
    return PlaneCurve(H)


@dataclass(frozen=True)
class FlexPoint:
    point: ProjectivePoint
    contact_order: int   # tangent-line contact; 3 for ordinary flexes
    orbit_degree: int
    field: NumberField


def flexes(C: PlaneCurve, budget: Budget | None = None) -> list[FlexPoint]:
    """Smooth points whose tangent line has contact order at least 3."""
    if not C.is_integral(budget):
        raise PreconditionError("flexes are computed for integral curves")
    d = C.degree
    if d < 3:
        return []
    H = hessian(C)
    if not isinstance(H, PlaneCurve):
        raise InternalInvariantError(
            "vanishing Hessian on an integral curve of degree at least 3")
    out = []
    geometric_count = 0
    for o in intersection_points(C, H, budget):
        if multiplicity_at(C, o.point) > 1:
            continue
        t = point_type(C, o.point, budget)
        if t.n == INFINITE or t.n < 3:
            raise InternalInvariantError(
                "smooth point on the Hessian with tangent contact below 3")
        geometric_count += o.orbit_degree
        out.append(FlexPoint(o.point, int(t.n), o.orbit_degree, o.field))
    if geometric_count > 3 * d * (d - 2):
        raise InternalInvariantError("flex count exceeds the classical bound")
    return out
