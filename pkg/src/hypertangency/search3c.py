"""Search and certification of hyper-bitangent curves for configurations
with three or more integral components.

A *three-component configuration* is a reduced curve B = B1 u B2 u B3 whose
integral components meet pairwise transversally in smooth points (so the
union has only ordinary nodes) and share no common point of all three.  A
curve C not containing a component of B is *hyper-bitangent* to B when the
points of the normalization of C lying over C n B number at most two, and
*hypertangent* when they number at most one.  This module enumerates these
curves exactly:

* ``validate_3c``            checks the configuration axioms and collects the
                             node set.
* ``hyp1_lines``             complete enumeration of hyper-bitangent lines.
* ``structural_emptiness``   degree screens certifying emptiness outright.
* ``hyp_ge2_search``         construction plus verification of every
                             hyper-bitangent curve of degree at least 2.
* ``multi_component_check``  the same questions for four or more components.
* ``triangle_pencil``        positive-dimensional families over three lines.
* ``verify_qb_families``     one-parameter families against the cuspidal
                             base z^(b-1) y = x^b.

Completeness of the line enumeration rests on a pigeonhole argument: a line
meeting the union in at most two points must pass through a node, because its
two contacts have to cover all three components and no point lies on all
three.  The pencil of lines through a node is searched exactly: away from the
lines tangent to a component at the node itself, a pencil member is
admissible precisely when its residual intersection with the union collapses
to a single point, a pure-power condition on a binary form whose coefficients
are polynomials in the pencil parameter; that condition is the rank-one locus
of a two-row Hankel matrix, computed through all of its two-by-two minors.

Completeness in degree at least 2 rests on the classification of such
members: each one has a (d-1,d)-fold point at the node p of the two
low-degree components, is tangent there to one of them, and has full contact
with the highest-degree component at a single node q, where the member's
degree d equals the contact order of the tangent line of that component.
Given (p, q, tangent choice) the member is therefore unique and explicitly
constructible in a normalized frame, after which exact verification either
certifies it or refutes the pair.  Every certificate is re-verified through
the intersection and branch-count machinery, which shares no code path with
the construction.

Lines are counted geometrically: the parameter polynomial of each node pencil
is split completely (within the field-degree budget), so conjugate lines
appear as individual certificates.  Members of degree at least 2 arising from
conjugate construction data are instead represented by one member per
constructed presentation, whose ``orbit_degree`` records the degree of its
field of definition.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Optional, Sequence, Union

from .errors import (BudgetExceededError, CommonComponentError,
                     DegenerateFrameError, FieldMismatchError, InputError,
                     InternalInvariantError, NotUnibranchedError,
                     PreconditionError)
from .factor import Budget, adjoin_root, irreducible_factors_of_univariate, roots_in_field
from .fields import QQ, FieldElement, NumberField, common_field, embed
from .linalg import solve_linear
from .localgeo import (INFINITE, IntersectionOrbit, PointType, geometric_genus,
                       intersection_points, multiplicity_at, point_type,
                       singular_points)
from .poly import Poly, poly_gcd, resultant
from .projplane import (PlaneCurve, Projectivity, ProjectivePoint,
                        frame_normalize, line_intersection, line_through,
                        linear_substitute, tangent_line)
from .tangency import TangencyReport, tangency_report

CurveLike = Union[PlaneCurve, Poly]

REASON_B1_DEGREE = "B1_DEGREE"
REASON_B2_DEGREE = "B2_DEGREE"
REASON_B2_CONIC_HIGH_D = "B2_CONIC_HIGH_D"
REASON_COMPONENTS_GE_5 = "COMPONENTS_GE_5"
REASON_MULTI_COMP_HIGH_D = "MULTI_COMP_HIGH_D"
REASON_SEARCH_EXHAUSTED = "SEARCH_EXHAUSTED"


class _ProceedToken:
    """Singleton result of a structural screen that found no obstruction."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "PROCEED"


PROCEED = _ProceedToken()


# -- domain records --------------------------------------------------------


@dataclass(frozen=True)
class NodeOrbit:
    """One Galois orbit of intersection points of two components.

    ``point`` is a representative defined over ``field``; ``orbit_degree``
    counts the conjugate points in the orbit; ``pair`` holds the indices of
    the two components meeting there.
    """

    point: ProjectivePoint
    field: NumberField
    orbit_degree: int
    pair: tuple[int, int]

    def sort_key(self):
        return (self.pair, self.orbit_degree, self.field.minpoly,
                tuple(c.coords for c in self.point.coords))


@dataclass(frozen=True)
class ThreeCCurve:
    """A validated three-component configuration.

    Components are stored sorted by ascending degree (stable under ties) and
    ``nodes`` lists every pairwise intersection orbit.  Instances are built by
    :func:`validate_3c`.
    """

    components: tuple[PlaneCurve, PlaneCurve, PlaneCurve]
    nodes: tuple[NodeOrbit, ...]

    @property
    def degrees(self) -> tuple[int, int, int]:
        return tuple(c.degree for c in self.components)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    @cached_property
    def union(self) -> PlaneCurve:
        form = self.components[0].form
        for comp in self.components[1:]:
            form = form * comp.form
        return PlaneCurve(form)

    @property
    def node_points_total(self) -> int:
        """Number of geometric points in the node set."""
        return sum(n.orbit_degree for n in self.nodes)

    def nodes_of_pair(self, i: int, j: int) -> tuple[NodeOrbit, ...]:
        key = (min(i, j), max(i, j))
        return tuple(n for n in self.nodes if n.pair == key)


@dataclass(frozen=True)
class CertificateContact:
    """One contact point of a certified curve with the configuration.

    ``components`` lists the indices of the configuration components passing
    through the point, ``multiplicity`` is the intersection number of the
    certified curve with the whole union there, and ``type_on_curve`` is the
    local type of the certified curve when the point is unibranched on it.
    """

    point: ProjectivePoint
    field: NumberField
    orbit_degree: int
    components: tuple[int, ...]
    multiplicity: int
    branches: int
    type_on_curve: Optional[PointType]

    @property
    def on_node(self) -> bool:
        return len(self.components) >= 2


@dataclass(frozen=True)
class HypCertificate:
    """A verified hyper-bitangent (or hypertangent) curve.

    ``membership`` names the verified class, e.g. ``"Hyp_2(B,2)"``;
    ``orbit_degree`` is the degree of the curve's field of definition, an
    upper bound for the number of its conjugate solutions."""

    curve: PlaneCurve
    degree: int
    contacts: tuple[CertificateContact, ...]
    membership: str
    rational: bool
    genus: int
    orbit_degree: int = 1

    @property
    def total_contact_points(self) -> int:
        return len(self.contacts)


@dataclass(frozen=True)
class RefutedCandidate:
    """A construction pair that produced no certified curve."""

    p: ProjectivePoint
    q: Optional[ProjectivePoint]
    tangent_component: int
    curve: Optional[PlaneCurve]
    reason: str


@dataclass(frozen=True)
class EmptinessCertificate:
    """A certified emptiness statement with a self-contained justification."""

    reason: str
    statement: str
    refuted: tuple[RefutedCandidate, ...] = ()


@dataclass(frozen=True)
class PencilFamily:
    """A one-parameter family of lines through a node, all admissible.

    Recorded defensively: for a validated configuration of total degree at
    least 4 the admissible lines through a node are finite, so a family
    signals unexpected degeneracy rather than a certified enumeration."""

    node: NodeOrbit
    description: str


class _CertificateSequenceMixin:
    """Sequence protocol over the ``certificates`` tuple of a result."""

    def __len__(self) -> int:
        return len(self.certificates)

    def __getitem__(self, index):
        return self.certificates[index]

    def __iter__(self):
        return iter(self.certificates)

    def __contains__(self, item) -> bool:
        return item in self.certificates


@dataclass(frozen=True)
class LineSearchResult(_CertificateSequenceMixin):
    """Outcome of the hyper-bitangent line enumeration.

    ``certificates`` holds the lines not tangent to any component at a node;
    ``tangent_at_node_lines`` holds the verified hyper-bitangent lines that
    are tangent to a component at a node (a class that exists for every such
    configuration and is reported separately); ``incomplete_nodes`` flags
    nodes whose pencil could not be searched to completion together with the
    reason, in which case the enumeration is exhaustive only for the
    remaining nodes."""

    certificates: tuple[HypCertificate, ...]
    tangent_at_node_lines: tuple[HypCertificate, ...]
    families: tuple[PencilFamily, ...]
    incomplete_nodes: tuple[tuple[NodeOrbit, str], ...]

    @property
    def complete(self) -> bool:
        return not self.incomplete_nodes


@dataclass(frozen=True)
class HypSearchResult(_CertificateSequenceMixin):
    """Outcome of the degree-at-least-2 hyper-bitangent search."""

    certificates: tuple[HypCertificate, ...]
    emptiness: Optional[EmptinessCertificate]
    refuted: tuple[RefutedCandidate, ...]
    skipped: tuple[tuple[NodeOrbit, str], ...]
    pairs_examined: int


@dataclass(frozen=True)
class MultiComponentReport(_CertificateSequenceMixin):
    """Outcome of the analysis for four or more components.

    With five or more components ``emptiness`` certifies that no
    hyper-bitangent curve of any degree exists.  With exactly four,
    ``high_degree_emptiness`` certifies emptiness in degree at least 2 and
    ``certificates`` lists the verified hyper-bitangent lines."""

    components: tuple[PlaneCurve, ...]
    nodes: tuple[NodeOrbit, ...]
    emptiness: Optional[EmptinessCertificate]
    high_degree_emptiness: Optional[EmptinessCertificate]
    certificates: tuple[HypCertificate, ...]
    incomplete: tuple[str, ...] = ()

    @property
    def complete(self) -> bool:
        return not self.incomplete


@dataclass(frozen=True)
class TrianglePencil:
    """A positive-dimensional family of hyper-bitangent curves over a
    configuration of three lines.

    The family is cut out by linear conditions: a point of multiplicity at
    least d-1 at ``deep_point`` with tangent cone along ``deep_tangent``, and
    full contact of order d with ``full_contact_line`` at
    ``full_contact_point``.  ``samples`` holds verified integral members."""

    degree: int
    monomials: tuple[tuple[int, int, int], ...]
    kernel_basis: tuple[tuple[FieldElement, ...], ...]
    kernel_dim: int
    deep_point: ProjectivePoint
    deep_tangent: PlaneCurve
    full_contact_point: ProjectivePoint
    full_contact_line: PlaneCurve
    samples: tuple[HypCertificate, ...]

    @property
    def projective_dim(self) -> int:
        return self.kernel_dim - 1

    def member(self, coefficients: Sequence) -> PlaneCurve:
        """The family member with the given kernel coordinates."""
        if len(coefficients) != self.kernel_dim:
            raise InputError(
                f"expected {self.kernel_dim} coordinates, got {len(coefficients)}")
        field = self.kernel_basis[0][0].field
        combo = [field.zero() for _ in self.monomials]
        for c, vec in zip(coefficients, self.kernel_basis):
            c = field.coerce(c)
            combo = [acc + c * entry for acc, entry in zip(combo, vec)]
        terms = {e: c for e, c in zip(self.monomials, combo) if not c.is_zero()}
        if not terms:
            raise InputError("zero member")
        return PlaneCurve(Poly.from_terms(terms, 3, field))


@dataclass(frozen=True)
class QbSampleResult:
    """Verification record for one parameter value of the standard families
    over the base z^(b-1) y = x^b."""

    t: Fraction
    tangent_member: PlaneCurve
    tangent_member_integral: bool
    tangent_member_smooth: bool
    tangent_member_hypertangent: bool
    tangent_contact_at_reference: bool
    tangent_contact_multiplicity: int
    tangent_member_genus: int
    bitangent_member: PlaneCurve
    bitangent_member_integral: bool
    bitangent_member_hyper_bitangent: bool
    bitangent_singular_set_expected: bool
    vertex_type: Optional[PointType]
    bitangent_member_genus: int
    split: tuple[tuple[ProjectivePoint, int], ...]
    split_expected: bool
    certificate: Optional[HypCertificate]

    @property
    def passed(self) -> bool:
        b = self.bitangent_member.degree
        return (self.tangent_member_integral
                and self.tangent_member_smooth
                and self.tangent_member_hypertangent
                and self.tangent_contact_at_reference
                and self.bitangent_member_integral
                and self.bitangent_member_hyper_bitangent
                and self.bitangent_singular_set_expected
                and self.vertex_type == PointType(b - 1, b)
                and self.bitangent_member_genus == 0
                and self.split_expected)


@dataclass(frozen=True)
class QbFamilyReport:
    """Verification of the hypertangent and hyper-bitangent families over
    the cuspidal base curve of a given degree."""

    b: int
    d: int
    base: PlaneCurve
    reference_point: ProjectivePoint
    vertex_point: ProjectivePoint
    samples: tuple[QbSampleResult, ...]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.samples)


# -- shared helpers ---------------------------------------------------------


def _as_curve(obj: CurveLike) -> PlaneCurve:
    if isinstance(obj, PlaneCurve):
        return obj
    if isinstance(obj, Poly):
        return PlaneCurve(obj)
    raise InputError(f"expected a curve or a homogeneous form, got {type(obj).__name__}")


def _coerce_form(form: Poly, field: NumberField) -> Poly:
    """The form with coefficients in ``field``; rational coefficients only
    may cross between distinct extensions."""
    if form.field == field:
        return form
    return form.with_field(field)


def _composed(form: Poly, images: Sequence[Poly]) -> Poly:
    """Evaluate ``form`` at polynomial images of its variables.

    All images must share one ring; the form's coefficients are coerced into
    that ring's field."""
    if len(images) != form.nvars:
        raise InputError("need one image per variable")
    nvars = images[0].nvars
    field = images[0].field
    cache: list[dict[int, Poly]] = [dict() for _ in images]

    def power(i: int, e: int) -> Poly:
        got = cache[i].get(e)
        if got is None:
            got = images[i] ** e
            cache[i][e] = got
        return got

    acc = Poly.zero(nvars, field)
    for exps, c in form.terms.items():
        term = Poly.const(field.coerce(c), nvars, field)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        acc = acc + term
    return acc


def _rational_descent(curve: PlaneCurve) -> PlaneCurve:
    """Rebuild the curve over the rationals when its normalized form allows."""
    form = curve.form
    if form.field.is_rationals:
        return curve
    if all(c.is_rational() for c in form.terms.values()):
        terms = {e: c.as_rational() for e, c in form.terms.items()}
        return PlaneCurve(Poly.from_terms(terms, 3, QQ))
    return curve


def _curve_sort_key(curve: PlaneCurve):
    terms = tuple(sorted((e, tuple(c.coords)) for e, c in curve.form.terms.items()))
    return (curve.degree, curve.field.minpoly, terms)


def _cert_sort_key(cert: HypCertificate):
    return _curve_sort_key(cert.curve)


def _dedupe_key(curve: PlaneCurve):
    return (curve.field.minpoly, curve.canonical_key())


def _generator_image(source: NumberField, target: NumberField,
                     budget: Budget | None) -> FieldElement:
    """A root of the source field's defining polynomial inside the target."""
    mp = Poly.from_terms({(k,): c for k, c in enumerate(source.minpoly)}, 1, target)
    roots = roots_in_field(mp, budget)
    if not roots:
        raise FieldMismatchError(
            "the node field does not embed into the extension field")
    images = sorted((r for r, _ in roots), key=lambda el: el.coords)
    return images[0]


def _lift_element(el: FieldElement, target: NumberField,
                  gen_image: Optional[FieldElement]) -> FieldElement:
    if el.field == target:
        return el
    if el.field.is_rationals:
        return target.from_rational(el.as_rational())
    if gen_image is None:
        raise FieldMismatchError("no embedding available for the element")
    return embed(el, target, gen_image)


def _lift_point(p: ProjectivePoint, target: NumberField,
                gen_image: Optional[FieldElement]) -> ProjectivePoint:
    return ProjectivePoint(*(_lift_element(c, target, gen_image) for c in p.coords))


def _lift_line(L: PlaneCurve, target: NumberField,
               gen_image: Optional[FieldElement]) -> PlaneCurve:
    if L.field == target:
        return L
    form = L.form.map_coefficients(lambda c: _lift_element(c, target, gen_image), target)
    return PlaneCurve(form)


def _contacts_from_report(report: TangencyReport,
                          components: Sequence[PlaneCurve]) -> tuple[CertificateContact, ...]:
    out = []
    for contact in report.contacts:
        idxs = tuple(k for k, comp in enumerate(components)
                     if comp.contains(contact.point))
        out.append(CertificateContact(
            point=contact.point,
            field=contact.field,
            orbit_degree=contact.orbit_degree,
            components=idxs,
            multiplicity=contact.multiplicity,
            branches=contact.branches,
            type_on_curve=contact.subject_type,
        ))
    out.sort(key=lambda c: (c.field.minpoly, tuple(x.coords for x in c.point.coords)))
    return tuple(out)


def _make_certificate(curve: PlaneCurve, report: TangencyReport,
                      components: Sequence[PlaneCurve], membership: str,
                      budget: Budget | None) -> HypCertificate:
    genus = geometric_genus(curve, budget)
    return HypCertificate(
        curve=curve,
        degree=curve.degree,
        contacts=_contacts_from_report(report, components),
        membership=membership,
        rational=(genus == 0),
        genus=genus,
        orbit_degree=curve.field.degree,
    )


# -- validation -------------------------------------------------------------


def _validate_components(raw: Sequence[CurveLike], minimum: int,
                         budget: Budget | None) -> tuple[tuple[PlaneCurve, ...], tuple[NodeOrbit, ...]]:
    comps = [_as_curve(c) for c in raw]
    if len(comps) < minimum:
        raise InputError(f"need at least {minimum} components, got {len(comps)}")
    for comp in comps:
        if not comp.is_integral(budget):
            raise PreconditionError(
                f"component {comp!r} is not integral; every component must be "
                "an integral curve")
    comps.sort(key=lambda c: c.degree)
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            if comps[i] == comps[j]:
                raise PreconditionError(
                    "two components coincide, so the union is not reduced")
    nodes: list[NodeOrbit] = []
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            for orbit in intersection_points(comps[i], comps[j], budget):
                if orbit.multiplicity != 1:
                    mi = multiplicity_at(comps[i], orbit.point)
                    mj = multiplicity_at(comps[j], orbit.point)
                    if mi > 1 or mj > 1:
                        raise PreconditionError(
                            f"a component is singular at the intersection point "
                            f"{orbit.point!r}; crossings must be smooth and "
                            "transversal")
                    raise PreconditionError(
                        f"components {i} and {j} are tangent at {orbit.point!r}; "
                        "crossings must be transversal")
                for k in range(len(comps)):
                    if k not in (i, j) and comps[k].contains(orbit.point):
                        raise PreconditionError(
                            f"triple point at {orbit.point!r}: three components "
                            "share a point")
                nodes.append(NodeOrbit(orbit.point, orbit.field,
                                       orbit.orbit_degree, (i, j)))
    nodes.sort(key=NodeOrbit.sort_key)
    return tuple(comps), tuple(nodes)


def validate_3c(components: Sequence[CurveLike],
                budget: Budget | None = None) -> ThreeCCurve:
    """Validate a three-component configuration and collect its node set.

    Checks that there are exactly three components, each integral and
    pairwise distinct, that all pairwise intersections are transversal at
    smooth points, and that no point lies on all three components.  Raises
    :class:`PreconditionError` naming the violated axiom otherwise."""
    if len(components) != 3:
        raise InputError(f"expected exactly 3 components, got {len(components)}")
    comps, nodes = _validate_components(components, 3, budget)
    return ThreeCCurve(components=comps, nodes=nodes)


# -- structural screens ------------------------------------------------------


def structural_emptiness(B: ThreeCCurve, d: int) -> Union[EmptinessCertificate, _ProceedToken]:
    """Degree screen for hyper-bitangent curves of degree ``d`` at least 2.

    Returns an :class:`EmptinessCertificate` when the component degrees alone
    rule out every such curve, and :data:`PROCEED` otherwise."""
    if not isinstance(B, ThreeCCurve):
        raise InputError("structural_emptiness expects a validated configuration")
    if d < 2:
        raise InputError("the structural screen applies to degree at least 2")
    b1, b2, b3 = B.degrees
    if b1 > 1:
        return EmptinessCertificate(
            REASON_B1_DEGREE,
            "A hyper-bitangent curve of degree d >= 2 meets the union in "
            "exactly two points and crosses one low-degree component "
            "transversally at both of them; the intersection number b1*d of "
            "an integral degree-d curve with that component then equals a sum "
            "of two multiplicities of the curve, which is at most d (the line "
            "through the two points meets the curve with total multiplicity "
            "at most d).  This forces b1 = 1, so a configuration whose "
            f"smallest component degree is {b1} admits no such curve.")
    if b2 > 2:
        return EmptinessCertificate(
            REASON_B2_DEGREE,
            "With the smallest component a line, a hyper-bitangent curve of "
            "degree d >= 2 is tangent to the second component at its single "
            "contact with it, where the curve has a (d-1,d)-fold point.  At a "
            "smooth point of a component of degree at least 2 the reflected "
            "type relation matches (d-1,d) against a type of the form "
            "(n,l*n), forcing n = d-1 to divide d, hence d = 2 and a smooth "
            "tangency; the resulting full contact of a conic member is only "
            "possible when the second component is itself a line or a conic.  "
            f"Degree {b2} rules every member out.")
    if b2 == 2 and d >= 3:
        return EmptinessCertificate(
            REASON_B2_CONIC_HIGH_D,
            "The curve is tangent to the conic component at a single smooth "
            "contact point where it has a (d-1,d)-fold point; the reflected "
            "type relation at a smooth point of the conic matches (d-1,d) "
            "against a type (n,l*n), forcing n = d-1 to divide d.  That fails "
            f"for every d >= 3, in particular for d = {d}.")
    return PROCEED


# -- hyper-bitangent lines ---------------------------------------------------


def _splitting_roots(p: Poly, budget: Budget | None
                     ) -> list[tuple[NumberField, FieldElement, Callable]]:
    """Every root of a univariate polynomial, each with its field of
    definition and an embedding of the coefficient field into it, obtained by
    adjoining roots until the polynomial splits.

    Conjugate roots are listed individually so that downstream enumerations
    count geometric solutions; a splitting field too large for the budget
    raises :class:`BudgetExceededError`."""
    out: list[tuple[NumberField, FieldElement, Callable]] = []
    for piece, _mult in irreducible_factors_of_univariate(p, budget):
        deg = piece.degree_in(0)
        if deg < 1:
            continue
        if deg == 1:
            root = -(piece.coeff((0,)) / piece.coeff((1,)))
            out.append((p.field, root, lambda el: el))
            continue
        L, emb, root = adjoin_root(p.field, piece, budget=budget)
        out.append((L, root, emb))
        piece_L = piece.map_coefficients(emb, L)
        quotient = piece_L.divexact(Poly.var(0, 1, L) - Poly.const(root, 1, L))
        for L2, root2, lift2 in _splitting_roots(quotient, budget):
            if L2 == L:
                out.append((L2, root2, emb))
            else:
                out.append((L2, root2, (lambda el, a=emb, b=lift2: b(a(el)))))
    return out


def _node_pencil_candidates(node: NodeOrbit, components: Sequence[PlaneCurve],
                            budget: Budget | None
                            ) -> tuple[list[PlaneCurve], Optional[PencilFamily]]:
    """Candidate hyper-bitangent lines through one node.

    Explicit candidates: the tangent lines at the node to the two components
    through it, and the one pencil member outside the affine parameter chart.
    All other admissible lines are transverse to the union at the node, so
    their residual intersection (a binary form of degree b-2 in the line
    parameter) must be a pure power; those parameters are the common roots of
    the two-by-two minors of the Hankel matrix of the normalized coefficient
    sequence, solved exactly over the node's field."""
    K = node.field
    x0 = node.point
    i, j = node.pair
    candidates: list[PlaneCurve] = []
    for k in (i, j):
        candidates.append(tangent_line(components[k], x0))

    c_idx = x0.chart_index()
    a_idx, b_idx = (m for m in range(3) if m != c_idx)

    def basis_point(idx: int) -> ProjectivePoint:
        coords = [K.zero(), K.zero(), K.zero()]
        coords[idx] = K.one()
        return ProjectivePoint(*coords)

    e_b = basis_point(b_idx)
    candidates.append(line_through(x0, e_b))

    # Pencil chart: the line through x0 and e_a + s*e_b, parameterized by
    # (t : u) -> u*x0 + t*(e_a + s*e_b), in the ring K[t, u, s].
    images = []
    for m in range(3):
        terms: dict[tuple[int, int, int], FieldElement] = {}
        if not x0.coords[m].is_zero():
            terms[(0, 1, 0)] = x0.coords[m]
        if m == a_idx:
            terms[(1, 0, 0)] = K.one()
        if m == b_idx:
            terms[(1, 0, 1)] = K.one()
        images.append(Poly.from_terms(terms, 3, K))

    total = Poly.const(K.one(), 3, K)
    for comp in components:
        total = total * _composed(_coerce_form(comp.form, K), images)

    b_total = sum(comp.degree for comp in components)
    coeff_in_s: list[Poly] = []
    for m in range(b_total + 1):
        terms1: dict[tuple[int, ...], FieldElement] = {}
        for (et, eu, es), c in total.terms.items():
            if et == m:
                terms1[(es,)] = terms1.get((es,), K.zero()) + c
        coeff_in_s.append(Poly.from_terms(
            {e: c for e, c in terms1.items() if not c.is_zero()}, 1, K))
    if not (coeff_in_s[0].is_zero() and coeff_in_s[1].is_zero()):
        raise InternalInvariantError(
            "the restriction to the pencil should vanish to order two at the node")

    e = b_total - 2
    v = [coeff_in_s[m + 2].scale(Fraction(1, math.comb(e, m))) for m in range(e + 1)]
    minors = []
    for a in range(e):
        for b in range(a + 1, e):
            minor = v[a] * v[b + 1] - v[b] * v[a + 1]
            if not minor.is_zero():
                minors.append(minor)
    if not minors:
        family = PencilFamily(
            node=node,
            description="every line through this node has residual intersection "
                        "concentrated in one point; the admissible lines form "
                        "the whole pencil")
        return candidates, family

    locus = minors[0]
    for minor in minors[1:]:
        locus = poly_gcd(locus, minor)
    if locus.degree() >= 1:
        for L, s0, lift in _splitting_roots(locus, budget):
            x0_L = (x0 if L == K
                    else ProjectivePoint(*(lift(c) for c in x0.coords)))
            w_coords = [L.zero(), L.zero(), L.zero()]
            w_coords[a_idx] = L.one()
            w_coords[b_idx] = s0
            candidates.append(line_through(x0_L, ProjectivePoint(*w_coords)))
    return candidates, None


def _verified_line_certificates(lines: dict, union: PlaneCurve,
                                components: Sequence[PlaneCurve],
                                budget: Budget | None,
                                incomplete: list[tuple[NodeOrbit, str]]
                                ) -> tuple[list[HypCertificate], list[HypCertificate]]:
    """Split verified hyper-bitangent lines into the transverse-at-nodes
    certificates and the tangent-at-a-node class."""
    plain: list[HypCertificate] = []
    tangent_at_node: list[HypCertificate] = []
    for line, origin in lines.values():
        try:
            report = tangency_report(line, union, budget)
        except CommonComponentError:
            continue
        except BudgetExceededError as exc:
            incomplete.append((origin, f"verification of a candidate line "
                                       f"exceeded the budget: {exc}"))
            continue
        if not report.hyper_bitangent:
            continue
        cert = _make_certificate(line, report, components, "Hyp_1(B,2)", budget)
        # At a node exactly two smooth transversal branches of the union meet,
        # so a line sees multiplicity 2 there unless tangent to one of them.
        if any(c.on_node and c.multiplicity >= 3 for c in cert.contacts):
            tangent_at_node.append(cert)
        else:
            plain.append(cert)
    plain.sort(key=_cert_sort_key)
    tangent_at_node.sort(key=_cert_sort_key)
    return plain, tangent_at_node


def hyp1_lines(B: ThreeCCurve, budget: Budget | None = None) -> LineSearchResult:
    """Enumerate every hyper-bitangent line to a validated three-component
    configuration of total degree at least 4.

    Any line meeting the union in at most two points passes through a node
    (two points must cover three components and no triple points exist), so
    the enumeration sweeps the pencil through each node exactly, splitting
    the locus polynomial completely so that conjugate solutions are listed as
    individual lines.  Nodes whose pencil could not be searched within the
    field-degree budget are flagged in ``incomplete_nodes``.  Lines tangent
    to a component at a node are genuine hyper-bitangent lines but are
    reported separately in ``tangent_at_node_lines``; ``certificates`` holds
    the others."""
    if not isinstance(B, ThreeCCurve):
        raise InputError("hyp1_lines expects a validated configuration; "
                         "call validate_3c first")
    if B.degree < 4:
        raise PreconditionError(
            "the line enumeration needs total degree at least 4; three lines "
            "carry positive-dimensional families, see triangle_pencil")
    union = B.union
    found: dict = {}
    families: list[PencilFamily] = []
    incomplete: list[tuple[NodeOrbit, str]] = []
    for node in B.nodes:
        try:
            candidates, family = _node_pencil_candidates(node, B.components, budget)
        except (BudgetExceededError, FieldMismatchError) as exc:
            incomplete.append((node, str(exc)))
            continue
        if family is not None:
            families.append(family)
        for line in candidates:
            line = _rational_descent(line)
            key = _dedupe_key(line)
            if key not in found:
                found[key] = (line, node)
    certificates, tangent_at_node = _verified_line_certificates(
        found, union, B.components, budget, incomplete)
    return LineSearchResult(
        certificates=tuple(certificates),
        tangent_at_node_lines=tuple(tangent_at_node),
        families=tuple(families),
        incomplete_nodes=tuple(incomplete),
    )


# -- hyper-bitangent curves of degree at least 2 ------------------------------


def _pair_orbits_over(Ci: PlaneCurve, Cj: PlaneCurve, K: NumberField,
                      budget: Budget | None) -> list[IntersectionOrbit]:
    """Intersection orbits of two components computed over the field K, so
    that conjugate combinations with a point defined over K are covered."""
    if K.is_rationals:
        return intersection_points(Ci, Cj, budget)
    lifted_i = PlaneCurve(_coerce_form(Ci.form, K))
    lifted_j = PlaneCurve(_coerce_form(Cj.form, K))
    return intersection_points(lifted_i, lifted_j, budget)


def _normalized_main_component(frame: Projectivity, main: PlaneCurve) -> Poly:
    """The affine equation of the main component in the normalized frame,
    scaled so its linear part is exactly y."""
    moved = frame.apply_curve(main)
    f = moved.form.dehomogenize(2)
    if not f.coeff((0, 0)).is_zero() or not f.coeff((1, 0)).is_zero():
        raise InternalInvariantError(
            "frame normalization failed to place the tangency at the origin "
            "with tangent line y = 0")
    mu = f.coeff((0, 1))
    if mu.is_zero():
        raise InternalInvariantError(
            "frame normalization produced a singular normalized equation")
    return f.scale(mu.inverse())


def _verify_ge2_candidate(cand: PlaneCurve, shape: Poly, moved_union: Poly,
                          B: ThreeCCurve, p_cmp: ProjectivePoint,
                          q_cmp: ProjectivePoint, d: int,
                          budget: Budget | None
                          ) -> Union[HypCertificate, str]:
    """Exact verification of one constructed candidate.

    Returns the certificate, or a refutation reason string.  The first gate
    works in the normalized frame: there the candidate reads
    Y Z^(d-1) + a X^d, which meets the lines Y = 0 and Z = 0 only at the two
    intended contact points and avoids (1:0:0), so its resultant with the
    moved union (eliminating X) vanishes exactly at the images of the actual
    common points and the contact set is {p, q} precisely when that resultant
    is a single monomial in Y and Z.  The gate is decided by arithmetic over
    the construction field alone, so refutations never enlarge the field.
    Candidates that pass are re-verified through the intersection and
    branch-count machinery; one that then violates the classified local
    structure indicates an internal inconsistency and raises.

    The candidate is integral by construction: for d >= 3 its normalized
    form is linear in Y with cofactors Z^(d-1) and a X^d sharing no factor,
    and for d = 2 it is a conic of nonzero discriminant.  A certified member
    is rational outright: it carries a point of multiplicity d - 1, which
    already exhausts the arithmetic genus of a degree-d curve."""
    R = resultant(shape, moved_union, 0)
    if R.is_zero():
        return "the constructed candidate shares a component with the configuration"
    if len(R.terms) > 1:
        return "the candidate meets the union beyond the two construction points"
    try:
        report = tangency_report(cand, B.union, budget)
    except CommonComponentError:
        return "the constructed candidate shares a component with the configuration"
    if not report.hyper_bitangent:
        return ("exact verification found more than two normalization preimages "
                "over the contact locus")
    contact_points = [c.point for c in report.contacts]
    expected = [p_cmp, q_cmp]
    if len(contact_points) != 2 or not all(
            any(cp == ep for cp in contact_points) for ep in expected):
        return "the verified contact points differ from the construction pair"
    try:
        type_p = point_type(cand, p_cmp, budget)
        type_q = point_type(cand, q_cmp, budget)
    except NotUnibranchedError:
        return "a contact point of the candidate is not unibranched"
    if type_p != PointType(d - 1, d):
        raise InternalInvariantError(
            f"a verified member has type {type_p} at the node of the two "
            f"low-degree components instead of ({d - 1}, {d})")
    if type_q != PointType(1, d):
        raise InternalInvariantError(
            f"a verified member has type {type_q} at its deep tangency "
            f"instead of (1, {d})")
    return HypCertificate(
        curve=cand,
        degree=d,
        contacts=_contacts_from_report(report, B.components),
        membership=f"Hyp_{d}(B,2)",
        rational=True,
        genus=0,
        orbit_degree=cand.field.degree,
    )


def hyp_ge2_search(B: ThreeCCurve, budget: Budget | None = None,
                   seed: Optional[int] = None) -> HypSearchResult:
    """Construct and verify every hyper-bitangent curve of degree at least 2.

    Any such member has a (d-1,d)-fold point at a node p of the two
    low-degree components, tangent there to one of them, and full contact
    with the highest-degree component at one node q, with d equal to the
    contact order of that component's tangent line at q.  For each admissible
    triple (p, tangent choice, q) the member is unique and is constructed in
    a normalized frame, pulled back, and verified exactly; both tangent
    choices and both node families for q are swept, letting verification
    refute the combinations the classification excludes.

    ``seed`` randomizes the two scale freedoms of each frame; the certified
    output is canonical and identical for every seed.  An empty result
    carries a ``SEARCH_EXHAUSTED`` certificate listing every refuted pair.
    When the structural screen already rules out degree 2 and higher, the
    result simply carries that certificate."""
    if not isinstance(B, ThreeCCurve):
        raise InputError("hyp_ge2_search expects a validated configuration; "
                         "call validate_3c first")
    if B.degree < 4:
        raise PreconditionError(
            "the search needs total degree at least 4; three lines carry "
            "positive-dimensional families, see triangle_pencil")
    screen = structural_emptiness(B, 2)
    if screen is not PROCEED:
        return HypSearchResult(certificates=(), emptiness=screen,
                               refuted=(), skipped=(), pairs_examined=0)
    rng = random.Random(seed) if seed is not None else None
    b1, b2, b3 = B.degrees
    # Each member determines its node pair and tangent choice uniquely; with
    # the screen passed, p ranges over at most two nodes and q over at most
    # b3 nodes of each admissible pair, for at most 2*b3 distinct members.
    bound = 2 * b3
    comps = B.components
    found: dict = {}
    refuted: list[RefutedCandidate] = []
    skipped: list[tuple[NodeOrbit, str]] = []
    pairs_examined = 0

    for p_orbit in B.nodes_of_pair(0, 1):
        Kp = p_orbit.field
        p = p_orbit.point
        for tangent_idx in (0, 1):
            comp = comps[tangent_idx]
            Lp = comp if comp.degree == 1 else tangent_line(comp, p)
            for other_idx in (0, 1):
                try:
                    q_orbits = _pair_orbits_over(comps[other_idx], comps[2], Kp, budget)
                except (BudgetExceededError, FieldMismatchError) as exc:
                    skipped.append((NodeOrbit(p, Kp, p_orbit.orbit_degree,
                                              (other_idx, 2)), str(exc)))
                    continue
                for q_orbit in q_orbits:
                    pairs_examined += 1
                    q = q_orbit.point
                    Kq = q_orbit.field
                    q_node = NodeOrbit(q, Kq, q_orbit.orbit_degree, (other_idx, 2))
                    if multiplicity_at(comps[2], q) > 1:
                        skipped.append((q_node,
                                        "the highest-degree component is singular "
                                        "at this node; no tangency frame exists"))
                        continue
                    main_type = point_type(comps[2], q, budget)
                    if main_type.n == INFINITE:
                        raise InternalInvariantError(
                            "the tangent line of an integral component of degree "
                            "at least 2 cannot divide it")
                    d = int(main_type.n)
                    if b2 == 2 and d >= 3:
                        refuted.append(RefutedCandidate(
                            p, q, tangent_idx, None,
                            f"the tangency order at this node forces degree {d}, "
                            "impossible when the second component is a conic"))
                        continue
                    try:
                        if Kq == Kp or Kq.is_rationals:
                            gen_image = None
                        else:
                            gen_image = (None if Kp.is_rationals
                                         else _generator_image(Kp, Kq, budget))
                        p_lifted = _lift_point(p, Kq, gen_image) if Kq != Kp else p
                        Lp_lifted = _lift_line(Lp, Kq, gen_image) if Kq != Kp else Lp
                    except (BudgetExceededError, FieldMismatchError) as exc:
                        skipped.append((q_node, str(exc)))
                        continue
                    Lq = tangent_line(comps[2], q)
                    if rng is None:
                        scales = (1, 1)
                    else:
                        scales = (Fraction(rng.choice([-1, 1]) * rng.randint(1, 9)),
                                  Fraction(rng.choice([-1, 1]) * rng.randint(1, 9)))
                    try:
                        frame = frame_normalize(p_lifted, Lp_lifted, q, Lq,
                                                scales=scales)
                    except (DegenerateFrameError, InputError) as exc:
                        refuted.append(RefutedCandidate(
                            p, q, tangent_idx, None,
                            f"no admissible frame for this pairing: {exc}"))
                        continue
                    f = _normalized_main_component(frame, comps[2])
                    for low in range(2, d):
                        if not f.coeff((low, 0)).is_zero():
                            raise InternalInvariantError(
                                "the normalized equation contradicts the "
                                "computed tangency order")
                    a_d = f.coeff((d, 0))
                    if a_d.is_zero():
                        raise InternalInvariantError(
                            "the normalized equation contradicts the computed "
                            "tangency order at its leading coefficient")
                    if d == 2 and f.coeff((3, 0)) != f.coeff((1, 1)) * a_d:
                        refuted.append(RefutedCandidate(
                            p, q, tangent_idx, None,
                            "the third-order compatibility relation between the "
                            "node and the tangency fails"))
                        continue
                    field = a_d.field
                    shape = Poly.from_terms(
                        {(0, 1, d - 1): field.one(), (d, 0, 0): a_d}, 3, field)
                    moved_union = frame.apply_curve(B.union).form
                    cand = frame.inverse().apply_curve(PlaneCurve(shape))
                    cand = _rational_descent(cand)
                    outcome = _verify_ge2_candidate(cand, shape, moved_union, B,
                                                    p_lifted, q, d, budget)
                    if isinstance(outcome, str):
                        refuted.append(RefutedCandidate(p, q, tangent_idx, cand,
                                                        outcome))
                        continue
                    key = _dedupe_key(outcome.curve)
                    if key not in found:
                        found[key] = outcome

    certificates = sorted(found.values(), key=_cert_sort_key)
    if len(certificates) > bound:
        raise InternalInvariantError(
            f"found {len(certificates)} hyper-bitangent curves of degree at "
            f"least 2, exceeding the provable bound {bound}")
    emptiness = None
    if not certificates and not skipped:
        emptiness = EmptinessCertificate(
            REASON_SEARCH_EXHAUSTED,
            "Every hyper-bitangent curve of degree at least 2 arises from a "
            "node p of the two low-degree components, a tangent choice there, "
            "and a node q on the highest-degree component, and is the unique "
            "curve with a (d-1,d)-fold point at p and full contact at q, "
            "where d is the contact order of the tangent line at q.  All "
            "finitely many candidates were constructed exactly and each was "
            "refuted by exact verification, so no such curve exists.",
            refuted=tuple(refuted))
    return HypSearchResult(
        certificates=tuple(certificates),
        emptiness=emptiness,
        refuted=tuple(refuted),
        skipped=tuple(skipped),
        pairs_examined=pairs_examined,
    )


# -- four or more components --------------------------------------------------


def multi_component_check(components: Sequence[CurveLike],
                          budget: Budget | None = None) -> MultiComponentReport:
    """Hyper-bitangent analysis for a configuration of at least four integral
    components with pairwise transversal smooth crossings and no triple
    points.

    With five or more components nothing is hyper-bitangent: two contact
    points cannot cover five components without a triple point.  With exactly
    four, degree at least 2 is impossible (a transversal contact would
    concentrate intersection number deg*d >= 2d into a point of multiplicity
    at most d-1), and the hyper-bitangent lines are exactly the verified
    lines through two nodes of complementary component pairs."""
    comps, nodes = _validate_components(components, 4, budget)
    c = len(comps)
    if c >= 5:
        return MultiComponentReport(
            components=comps,
            nodes=nodes,
            emptiness=EmptinessCertificate(
                REASON_COMPONENTS_GE_5,
                "A hyper-bitangent curve meets the union in at most two "
                "points, and each point lies on at most two components "
                "because the configuration has no triple points; two points "
                f"cover at most four components, never all {c}.  No "
                "hyper-bitangent curve of any degree exists."),
            high_degree_emptiness=None,
            certificates=(),
        )
    high = EmptinessCertificate(
        REASON_MULTI_COMP_HIGH_D,
        "With four components and no triple points, the two contact points "
        "split the components two and two, and at each contact the curve is "
        "tangent to at most one of the two transversally crossing branches.  "
        "A transversal contact with a component of degree b concentrates the "
        "full intersection number b*d at one point, where an integral curve "
        "of degree d >= 2 has multiplicity at most d-1 < b*d.  Both contacts "
        "would need tangential escape on both of their components at once, "
        "which a single tangent direction cannot provide; no hyper-bitangent "
        "curve of degree at least 2 exists.")

    union_form = comps[0].form
    for comp in comps[1:]:
        union_form = union_form * comp.form
    union = PlaneCurve(union_form)

    found: dict = {}
    incomplete: list[str] = []
    partitions = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))
    for first, second in partitions:
        p_orbits = [n for n in nodes if n.pair == first]
        for p_orbit in p_orbits:
            Kp = p_orbit.field
            try:
                q_orbits = _pair_orbits_over(comps[second[0]], comps[second[1]],
                                             Kp, budget)
            except (BudgetExceededError, FieldMismatchError) as exc:
                incomplete.append(f"nodes of components {second} over the field "
                                  f"of a node of {first}: {exc}")
                continue
            for q_orbit in q_orbits:
                Kq = q_orbit.field
                try:
                    if Kq == Kp:
                        p_lifted = p_orbit.point
                    else:
                        gen_image = (None if Kp.is_rationals
                                     else _generator_image(Kp, Kq, budget))
                        p_lifted = _lift_point(p_orbit.point, Kq, gen_image)
                    line = line_through(p_lifted, q_orbit.point)
                except (BudgetExceededError, FieldMismatchError) as exc:
                    incomplete.append(f"line through nodes of {first} and "
                                      f"{second}: {exc}")
                    continue
                except InputError:
                    continue
                line = _rational_descent(line)
                key = _dedupe_key(line)
                if key not in found:
                    found[key] = (line, p_orbit)

    certificates: list[HypCertificate] = []
    for line, _origin in found.values():
        try:
            report = tangency_report(line, union, budget)
        except CommonComponentError:
            continue
        except BudgetExceededError as exc:
            incomplete.append(f"verification of a candidate line exceeded "
                              f"the budget: {exc}")
            continue
        if not report.hyper_bitangent:
            continue
        certificates.append(_make_certificate(line, report, comps,
                                              "Hyp_1(B,2)", budget))
    certificates.sort(key=_cert_sort_key)
    return MultiComponentReport(
        components=comps,
        nodes=nodes,
        emptiness=None,
        high_degree_emptiness=high,
        certificates=tuple(certificates),
        incomplete=tuple(incomplete),
    )


# -- families over a triangle of lines ----------------------------------------


def _second_point_on_line(line: PlaneCurve, avoid: ProjectivePoint) -> ProjectivePoint:
    """A point on the line distinct from ``avoid``, chosen deterministically."""
    for m in range(3):
        axis_terms = {tuple(1 if k == m else 0 for k in range(3)): Fraction(1)}
        axis = PlaneCurve(Poly.from_terms(axis_terms, 3, QQ))
        if axis == line:
            continue
        candidate = line_intersection(line, axis)
        if candidate != avoid:
            return candidate
    raise InternalInvariantError("a projective line contains at least two points")


def triangle_pencil(B: ThreeCCurve, d: int,
                    budget: Budget | None = None) -> TrianglePencil:
    """The linear family of degree-``d`` hyper-bitangent curves to a
    configuration of three lines.

    The family is cut out by linear conditions on the coefficients: a point
    of multiplicity at least d-1 at the node of the first and third line with
    tangent cone along the third line, together with full contact of order d
    with the second line at its node with the first line.  Every integral
    member then meets the union only at those two nodes.  The solution space
    always has projective dimension at least 1, and at least three members
    are verified exactly."""
    if not isinstance(B, ThreeCCurve):
        raise InputError("triangle_pencil expects a validated configuration")
    if B.degrees != (1, 1, 1):
        raise PreconditionError(
            "the pencil construction applies to configurations of three lines")
    if d < 1:
        raise InputError("the family degree must be at least 1")

    comps = B.components
    deep_nodes = B.nodes_of_pair(0, 2)
    contact_nodes = B.nodes_of_pair(0, 1)
    if len(deep_nodes) != 1 or len(contact_nodes) != 1:
        raise InternalInvariantError("two distinct lines meet in one point")
    deep_point = deep_nodes[0].point
    contact_point = contact_nodes[0].point

    fields = [comps[k].field for k in range(3)]
    field = fields[0]
    for fld in fields[1:]:
        field = common_field(field, fld)
    field = common_field(field, deep_nodes[0].field)
    field = common_field(field, contact_nodes[0].field)

    monomials = tuple(sorted(
        ((i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)),
        reverse=True))
    mono_polys = [Poly.from_terms({m: field.one()}, 3, field) for m in monomials]

    # Frame sending the deep point to (0:0:1) and the third line to {y = 0}:
    # rows are the first line, the third line, and a unit row off the point.
    def line_rows(line: PlaneCurve) -> list[FieldElement]:
        form = _coerce_form(line.form, field)
        return [form.coeff(tuple(1 if k == m else 0 for k in range(3)))
                for m in range(3)]

    row_x = line_rows(comps[0])
    row_y = line_rows(comps[2])
    unit_idx = deep_point.chart_index()
    row_z = [field.one() if m == unit_idx else field.zero() for m in range(3)]
    frame = Projectivity([row_x, row_y, row_z])
    inv_matrix = frame.inverse().matrix

    rows: list[list[FieldElement]] = []
    constrained = [(i, j) for i in range(d) for j in range(d - i)
                   if i + j <= d - 2] + [(i, d - 1 - i) for i in range(1, d)]
    transformed = [linear_substitute(mp, inv_matrix) for mp in mono_polys]
    for (i, j) in constrained:
        rows.append([tp.coeff((i, j, d - i - j)) for tp in transformed])

    # Full contact with the second line: restricted to it, only the d-th
    # power of the parameter vanishing at the contact node may survive.
    through = _second_point_on_line(comps[1], contact_point)
    images = []
    for m in range(3):
        terms2: dict[tuple[int, int], FieldElement] = {}
        cu = field.coerce(contact_point.coords[m])
        ct = field.coerce(through.coords[m])
        if not cu.is_zero():
            terms2[(0, 1)] = cu
        if not ct.is_zero():
            terms2[(1, 0)] = ct
        images.append(Poly.from_terms(terms2, 2, field))
    for i in range(d):
        row = []
        for mp in mono_polys:
            restricted = _composed(mp, images)
            row.append(restricted.coeff((i, d - i)))
        rows.append(row)

    solution = solve_linear(rows)
    if solution.kernel_dim < 2:
        raise InternalInvariantError(
            f"the pencil conditions in degree {d} left kernel dimension "
            f"{solution.kernel_dim}, below the guaranteed 2")
    basis = tuple(tuple(vec) for vec in solution.kernel_basis)

    union = B.union
    samples: list[HypCertificate] = []
    k0, k1 = basis[0], basis[1]
    combos = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2),
              (1, 3), (3, 1), (1, -3), (1, 4), (1, 5)]
    for a, b in combos:
        if len(samples) >= 3:
            break
        vec = [field.coerce(a) * x + field.coerce(b) * y for x, y in zip(k0, k1)]
        terms3 = {m: c for m, c in zip(monomials, vec) if not c.is_zero()}
        if not terms3:
            continue
        member = PlaneCurve(Poly.from_terms(terms3, 3, field))
        if member.degree != d or not member.is_integral(budget):
            continue
        try:
            report = tangency_report(member, union, budget)
        except CommonComponentError:
            continue
        if not report.hyper_bitangent:
            continue
        samples.append(_make_certificate(member, report, comps,
                                         f"Hyp_{d}(B,2)", budget))
    if len(samples) < 3:
        raise InternalInvariantError(
            f"the degree-{d} family produced only {len(samples)} verified "
            "members out of the sampled combinations")

    return TrianglePencil(
        degree=d,
        monomials=monomials,
        kernel_basis=basis,
        kernel_dim=solution.kernel_dim,
        deep_point=deep_point,
        deep_tangent=comps[2],
        full_contact_point=contact_point,
        full_contact_line=comps[1],
        samples=tuple(samples),
    )


# -- one-parameter families over the cuspidal base -----------------------------


def verify_qb_families(b: int, d: int, t_values: Sequence,
                       budget: Budget | None = None) -> QbFamilyReport:
    """Verify the standard families against the base curve z^(b-1) y = x^b.

    For each parameter t, the degree-d member y z^(d-1) - x^b z^(d-b) + t y^d
    is checked to be integral, smooth, and hypertangent to the base with its
    single contact at the reference point (0:0:1); the degree-b companion
    z^(b-1) y - t x^b is checked to be integral, rational with its single
    singularity at the vertex (0:1:0) of type (b-1, b), hyper-bitangent, and
    to split the full intersection with the base as b at the reference point
    plus b(b-1) at the vertex.  Parameters 0 and 1 are rejected: 0 degenerates
    the companion into a non-reduced cone and 1 makes it equal the base."""
    if b < 4:
        raise InputError("the family base needs degree at least 4")
    if d < b:
        raise InputError("the hypertangent member needs degree at least the "
                         "base degree")
    if not t_values:
        raise InputError("need at least one parameter value")

    base = PlaneCurve(Poly.from_terms(
        {(0, 1, b - 1): Fraction(1), (b, 0, 0): Fraction(-1)}, 3, QQ))
    reference = ProjectivePoint(Fraction(0), Fraction(0), Fraction(1))
    vertex = ProjectivePoint(Fraction(0), Fraction(1), Fraction(0))

    samples: list[QbSampleResult] = []
    for raw_t in t_values:
        t = Fraction(raw_t)
        if t == 0:
            raise InputError("parameter 0 degenerates the companion member "
                             "into a non-reduced cone")
        if t == 1:
            raise InputError("parameter 1 makes the companion member coincide "
                             "with the base curve")

        tangent_member = PlaneCurve(Poly.from_terms(
            {(0, 1, d - 1): Fraction(1), (b, 0, d - b): Fraction(-1),
             (0, d, 0): t}, 3, QQ))
        t_integral = tangent_member.is_integral(budget)
        t_smooth = t_integral and not singular_points(tangent_member, budget)
        t_hyper = False
        t_at_ref = False
        t_mult = 0
        if t_integral:
            t_report = tangency_report(tangent_member, base, budget)
            t_hyper = t_report.hypertangent
            if len(t_report.contacts) == 1:
                only = t_report.contacts[0]
                t_at_ref = only.point == reference
                t_mult = only.multiplicity
        t_genus = geometric_genus(tangent_member, budget) if t_integral else -1

        bitangent_member = PlaneCurve(Poly.from_terms(
            {(0, 1, b - 1): Fraction(1), (b, 0, 0): -t}, 3, QQ))
        r_integral = bitangent_member.is_integral(budget)
        r_singulars = singular_points(bitangent_member, budget) if r_integral else []
        r_sing_expected = (len(r_singulars) == 1
                           and r_singulars[0].point == vertex
                           and r_singulars[0].orbit_degree == 1)
        r_vertex_type: Optional[PointType] = None
        if r_sing_expected:
            r_vertex_type = point_type(bitangent_member, vertex, budget)
        r_genus = geometric_genus(bitangent_member, budget) if r_integral else -1

        r_hyper = False
        certificate: Optional[HypCertificate] = None
        split: tuple[tuple[ProjectivePoint, int], ...] = ()
        split_expected = False
        if r_integral:
            r_report = tangency_report(bitangent_member, base, budget)
            r_hyper = r_report.hyper_bitangent
            split = tuple(sorted(((c.point, c.multiplicity) for c in r_report.contacts),
                                 key=lambda pm: pm[1]))
            split_expected = (len(split) == 2
                              and split[0][0] == reference
                              and split[0][1] == b
                              and split[1][0] == vertex
                              and split[1][1] == b * (b - 1))
            if r_hyper:
                certificate = HypCertificate(
                    curve=bitangent_member,
                    degree=b,
                    contacts=_contacts_from_report(r_report, [base]),
                    membership="E(B)",
                    rational=(r_genus == 0),
                    genus=r_genus,
                    orbit_degree=1,
                )

        samples.append(QbSampleResult(
            t=t,
            tangent_member=tangent_member,
            tangent_member_integral=t_integral,
            tangent_member_smooth=t_smooth,
            tangent_member_hypertangent=t_hyper,
            tangent_contact_at_reference=t_at_ref,
            tangent_contact_multiplicity=t_mult,
            tangent_member_genus=t_genus,
            bitangent_member=bitangent_member,
            bitangent_member_integral=r_integral,
            bitangent_member_hyper_bitangent=r_hyper,
            bitangent_singular_set_expected=r_sing_expected,
            vertex_type=r_vertex_type,
            bitangent_member_genus=r_genus,
            split=split,
            split_expected=split_expected,
            certificate=certificate,
        ))

    return QbFamilyReport(
        b=b,
        d=d,
        base=base,
        reference_point=reference,
        vertex_point=vertex,
        samples=tuple(samples),
    )
