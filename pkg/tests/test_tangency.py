"""Tests for global tangency predicates: hypertangency, hyper-bitangency,
the mirror checker, Hessians, and flexes."""
from fractions import Fraction

import pytest

from hypertangency.errors import (CommonComponentError, InputError,
                                  PreconditionError)
from hypertangency.fields import QQ
from hypertangency.localgeo import INFINITE, PointType, point_type
from hypertangency.poly import parse_poly
from hypertangency.projplane import PlaneCurve, Projectivity, ProjectivePoint
from hypertangency.tangency import (FlexPoint, MirrorCheck, TangencyReport,
                                    flexes, hessian, is_hyper_bitangent,
                                    is_hypertangent, mirror_check,
                                    tangency_report)


def curve(text, field=QQ):
    return PlaneCurve(parse_poly(text, 3, field))


def pt(x, y, z):
    return ProjectivePoint(x, y, z)


Q4 = curve("z^3*y - x^4")
CONIC = curve("z*y - x^2")
ORIGIN = pt(0, 0, 1)
AT_INF = pt(0, 1, 0)


class TestHypertangent:
    def test_tangent_line_of_full_contact(self):
        rep = is_hypertangent(curve("y"), Q4)
        assert rep.hypertangent and rep.hyper_bitangent
        assert len(rep.contacts) == 1
        c = rep.contacts[0]
        assert c.point == ORIGIN
        assert c.multiplicity == 4 and c.orbit_degree == 1 and c.branches == 1
        assert c.subject_type == PointType(1, INFINITE)
        assert c.base_type == PointType(1, 4)
        assert rep.bezout_total == 4

    def test_quintic_with_single_deep_contact(self):
        C = curve("y*z^4 - x^4*z + y^5")
        rep = is_hypertangent(C, Q4)
        assert rep.hypertangent
        assert len(rep.contacts) == 1
        c = rep.contacts[0]
        assert c.point == ORIGIN and c.multiplicity == 20
        assert c.subject_type == PointType(1, 4)

    def test_generic_line_fails(self):
        rep = is_hypertangent(curve("x"), CONIC)
        assert not rep.hypertangent
        assert rep.hyper_bitangent
        assert len(rep.contacts) == 2
        assert rep.total_branches == 2
        assert {c.point for c in rep.contacts} == {ORIGIN, AT_INF}

    def test_tangent_line_to_conic_is_hypertangent(self):
        rep = is_hypertangent(curve("z"), CONIC)
        assert rep.hypertangent
        assert rep.contacts[0].point == AT_INF
        assert rep.contacts[0].multiplicity == 2

    def test_subject_must_be_integral(self):
        with pytest.raises(PreconditionError):
            is_hypertangent(curve("x*y"), curve("z"))

    def test_subject_sharing_component_rejected(self):
        with pytest.raises(CommonComponentError):
            is_hypertangent(CONIC, curve("x*(z*y - x^2)"))


class TestHyperBitangent:
    def test_two_smooth_contacts(self):
        R = curve("z^3*y - 2*x^4")
        rep = is_hyper_bitangent(R, Q4)
        assert rep.hyper_bitangent and not rep.hypertangent
        assert {c.point for c in rep.contacts} == {ORIGIN, AT_INF}
        mults = {c.point: c.multiplicity for c in rep.contacts}
        assert mults[ORIGIN] == 4 and mults[AT_INF] == 12
        types = {c.point: c.subject_type for c in rep.contacts}
        assert types[ORIGIN] == PointType(1, 4)
        assert types[AT_INF] == PointType(3, 4)

    def test_conic_against_three_component_base(self):
        B = curve("x*z*(z*y - x^2 + y^2)")
        rep = is_hyper_bitangent(CONIC, B)
        assert rep.hyper_bitangent and not rep.hypertangent
        assert {c.point for c in rep.contacts} == {ORIGIN, AT_INF}
        mults = {c.point: c.multiplicity for c in rep.contacts}
        assert mults[ORIGIN] == 5 and mults[AT_INF] == 3
        assert rep.bezout_total == 8

    def test_component_of_base_rejected(self):
        B3 = curve("z*y - x^2 + y^2")
        B = curve("x*z*(z*y - x^2 + y^2)")
        with pytest.raises(CommonComponentError):
            is_hyper_bitangent(B3, B)

    def test_three_branches_fail(self):
        # three concurrent lines hitting the base line in one triple point
        C = curve("x*y*(x + y)")
        with pytest.raises(PreconditionError):
            # reducible subjects are rejected outright
            is_hyper_bitangent(C, curve("z"))
        # an irreducible cubic with a node on the base line plus a third point
        nodal = curve("z*y^2 - x^2*z - x^3")
        rep = is_hyper_bitangent(nodal, curve("y"))
        # y = 0 meets the nodal cubic at the node (two branches) and (1:0:-1)
        assert rep.total_branches == 3
        assert not rep.hyper_bitangent


class TestMirrorCheck:
    def test_septic_against_conic(self):
        C = curve("z*(z*y - x^2)^3 + y^7")
        out = mirror_check(C, CONIC, ORIGIN)
        assert out.l == 2 and out.m == 3
        assert out.predicted_type == PointType(3, 6)
        assert out.observed_type == PointType(3, 6)
        assert out.delta_bound == Fraction(11)
        assert out.delta_observed == 13
        assert out.passed

    def test_degree_preconditions(self):
        with pytest.raises(PreconditionError, match="degree at least 2"):
            mirror_check(curve("z*y - x^2"), curve("y"), ORIGIN)
        with pytest.raises(PreconditionError, match="degree at least 2"):
            mirror_check(curve("y"), CONIC, ORIGIN)

    def test_multiple_intersection_points_rejected(self):
        with pytest.raises(PreconditionError, match="exactly at the given point"):
            mirror_check(curve("z*y - 2*x^2"), CONIC, ORIGIN)

    def test_wrong_point_rejected(self):
        C = curve("z*(z*y - x^2)^3 + y^7")
        with pytest.raises(PreconditionError, match="exactly at the given point"):
            mirror_check(C, CONIC, AT_INF)

    def test_multibranched_subject_rejected(self):
        C = curve("z*(z*y - x^2)^2 + y^5")
        with pytest.raises(PreconditionError, match="unibranched on the subject"):
            mirror_check(C, CONIC, ORIGIN)

    def test_base_without_linear_type_rejected(self):
        B = curve("z*y^2 - x^3")
        C = curve("z*y^2 - x^3 - y^3")
        with pytest.raises(PreconditionError, match="\\(1,l\\)-point"):
            mirror_check(C, B, ORIGIN)

    @pytest.mark.parametrize("l,m", [(2, 1), (2, 3), (3, 1), (3, 2)])
    def test_template_family_passes(self, l, m):
        B = curve(f"z^{l - 1}*y - x^{l}")
        C = PlaneCurve(
            parse_poly("z", 3) * B.form ** m
            + parse_poly(f"y^{l * m + 1}", 3))
        out = mirror_check(C, B, ORIGIN)
        assert out.l == l and out.m == m
        assert out.observed_type == PointType(m, l * m)
        assert out.delta_observed >= out.delta_bound
        assert out.passed

    def test_deep_contact_with_cuspidal_cubic(self):
        # degree-11 curve built to follow the branch of z^2 y = x^3 through
        # the full Bezout number 33 at the origin, staying unibranched there
        B = curve("z^2*y - x^3")
        C = curve("z^2*(y*z^2 - x^3)^3 + 3*x^2*y^3*(y*z^2 - x^3)^2"
                  " + 3*x*y^7*(y*z^2 - x^3) + y^11")
        out = mirror_check(C, B, ORIGIN)
        assert out.l == 3 and out.m == 3
        assert out.observed_type == PointType(3, 9)
        assert out.delta_observed == 40
        assert out.delta_bound == Fraction(30)
        assert out.passed

    @pytest.mark.parametrize("l,m", [(2, 2), (3, 3)])
    def test_template_family_multibranched_members(self, l, m):
        B = curve(f"z^{l - 1}*y - x^{l}")
        C = PlaneCurve(
            parse_poly("z", 3) * B.form ** m
            + parse_poly(f"y^{l * m + 1}", 3))
        with pytest.raises(PreconditionError, match="unibranched on the subject"):
            mirror_check(C, B, ORIGIN)


class TestHessian:
    def test_fermat_cubic(self):
        H = hessian(curve("x^3 + y^3 + z^3"))
        assert isinstance(H, PlaneCurve)
        assert H.form == parse_poly("x*y*z", 3).normalized()

    def test_conic_constant(self):
        H = hessian(CONIC)
        assert not isinstance(H, PlaneCurve)
        assert H == QQ.coerce(2)

    def test_line_rejected(self):
        with pytest.raises(PreconditionError):
            hessian(curve("x + y"))


class TestFlexes:
    def test_conic_has_none(self):
        assert flexes(CONIC) == []

    def test_fermat_cubic_flexes(self):
        out = flexes(curve("x^3 + y^3 + z^3"))
        assert len(out) == 6
        assert sum(f.orbit_degree for f in out) == 9
        assert all(f.contact_order == 3 for f in out)
        rational = {f.point for f in out if f.orbit_degree == 1}
        assert rational == {pt(0, -1, 1), pt(-1, 0, 1), pt(-1, 1, 0)}

    def test_cuspidal_cubic_single_flex(self):
        out = flexes(curve("y^2*z - x^3"))
        assert len(out) == 1
        f = out[0]
        assert f.point == AT_INF and f.contact_order == 3 and f.orbit_degree == 1

    def test_nodal_cubic_three_flexes(self):
        out = flexes(curve("z*y^2 - x^2*z - x^3"))
        assert sum(f.orbit_degree for f in out) == 3
        assert all(f.contact_order == 3 for f in out)

    def test_hyperflex_reported_with_true_order(self):
        out = flexes(Q4)
        assert len(out) == 1
        f = out[0]
        assert f.point == ORIGIN and f.contact_order == 4

    def test_count_bound(self):
        for text in ("x^3 + y^3 + z^3", "z*y^2 - x^2*z - x^3", "z^3*y - x^4"):
            C = curve(text)
            total = sum(f.orbit_degree for f in flexes(C))
            d = C.degree
            assert total <= 3 * d * (d - 2)

    def test_projectivity_transport(self):
        C = curve("y^2*z - x^3")
        T = Projectivity([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        out = flexes(T.apply_curve(C))
        assert len(out) == 1
        assert out[0].point == T.apply_point(AT_INF)
        assert out[0].contact_order == 3
        tt = point_type(T.apply_curve(C), out[0].point)
        assert tt == PointType(1, 3)

    def test_reducible_rejected(self):
        with pytest.raises(PreconditionError):
            flexes(curve("x*(z*y - x^2)"))


class TestReportShape:
    def test_report_carries_curves(self):
        rep = tangency_report(curve("y"), Q4)
        assert isinstance(rep, TangencyReport)
        assert rep.subject.degree == 1 and rep.base.degree == 4
        assert rep.bezout_total == rep.subject.degree * rep.base.degree

    def test_base_type_none_at_base_node(self):
        # base has a node at the origin; subject passes through it
        B = curve("z*y^2 - x^2*z - x^3")
        rep = tangency_report(CONIC, B)
        node = [c for c in rep.contacts if c.point == ORIGIN]
        assert node and node[0].base_type is None
        assert node[0].subject_type is not None
