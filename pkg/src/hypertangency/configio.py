"""Exact JSON input and output: configuration files and report files.

Configuration files (schema ``curvecfg/1``) name homogeneous plane curves
over the rationals or over one explicit number field, and may designate which
named curves form a configuration and in what order.  Report files (schema
``report/1``) echo the command that produced them, carry machine-readable
results in which every curve, point and number is tagged with its exact field
of definition, and end with a human-readable summary.

Every number travels as a decimal string ``"num"`` or ``"num/den"``; an
element of an extension field travels as a list of such strings, the
coordinates in ascending powers of the field generator.  Nothing in this
module passes through floating point, so serialization and parsing are exact
inverses of each other.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InputError
from .factor import Budget, is_irreducible
from .fields import QQ, FieldElement, NumberField
from .localgeo import INFINITE, PointType
from .poly import Poly
from .projplane import PlaneCurve, ProjectivePoint

CONFIG_SCHEMA = "curvecfg/1"
REPORT_SCHEMA = "report/1"

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


# -- exact scalars ------------------------------------------------------------


def parse_rational(text) -> Fraction:
    """Exact rational from a decimal string "num" or "num/den"."""
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise InputError(f"not an exact rational literal: {text!r}")
    value = Fraction(text)
    return value


def rational_to_text(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# -- fields ---------------------------------------------------------------------


def field_to_json(field: NumberField) -> Union[str, dict]:
    if field.is_rationals:
        return "rationals"
    return {
        "minpoly": [rational_to_text(c) for c in field.minpoly],
        "name": field.name,
    }


def field_from_json(obj, budget: Budget | None = None) -> NumberField:
    if obj == "rationals":
        return QQ
    if not isinstance(obj, dict) or "minpoly" not in obj:
        raise InputError(
            'field must be "rationals" or {"minpoly": [...], "name": ...}')
    raw = obj["minpoly"]
    if not isinstance(raw, list) or len(raw) < 3:
        raise InputError("an extension field needs a minpoly of degree >= 2")
    coeffs = [parse_rational(c) for c in raw]
    if coeffs[-1] == 0:
        raise InputError("minpoly has a zero leading coefficient")
    lead = coeffs[-1]
    coeffs = [c / lead for c in coeffs]
    name = obj.get("name", "a")
    if not isinstance(name, str) or not name:
        raise InputError("the field generator name must be a nonempty string")
    mp_poly = Poly.from_univariate([QQ.from_rational(c) for c in coeffs], 0, 1, QQ)
    if not is_irreducible(mp_poly, budget):
        raise InputError("the field minpoly must be irreducible over the rationals")
    return NumberField(coeffs, name)


# -- field elements ------------------------------------------------------------


def element_to_json(el: FieldElement) -> Union[str, list]:
    if el.is_rational():
        return rational_to_text(el.as_rational())
    return [rational_to_text(c) for c in el.coords]


def element_from_json(obj, field: NumberField) -> FieldElement:
    if isinstance(obj, (str, int)):
        return field.from_rational(parse_rational(obj))
    if isinstance(obj, list):
        if len(obj) > field.degree:
            raise InputError(
                f"coordinate vector of length {len(obj)} in a field of "
                f"degree {field.degree}")
        return field.element([parse_rational(c) for c in obj])
    raise InputError(f"not an exact field element: {obj!r}")


# -- points and curves -----------------------------------------------------------


def point_to_json(p: ProjectivePoint) -> list:
    return [element_to_json(c) for c in p.coords]


def point_from_json(obj, field: NumberField) -> ProjectivePoint:
    if not isinstance(obj, list) or len(obj) != 3:
        raise InputError("a point is a list of three exact coordinates")
    return ProjectivePoint(*(element_from_json(c, field) for c in obj))


def parse_point_text(text: str, field: NumberField) -> ProjectivePoint:
    """Point from a colon-separated string of exact rationals, "x:y:z"."""
    parts = [s.strip() for s in text.split(":")]
    if len(parts) != 3:
        raise InputError(f"a point literal has three coordinates: {text!r}")
    return ProjectivePoint(*(field.from_rational(parse_rational(s))
                             for s in parts))


def curve_terms_to_json(C: PlaneCurve) -> list:
    terms = sorted(C.form.terms.items(), reverse=True)
    return [[e[0], e[1], e[2], element_to_json(c)] for e, c in terms]


def curve_from_terms_json(obj, field: NumberField) -> PlaneCurve:
    if not isinstance(obj, list) or not obj:
        raise InputError("a curve is a nonempty list of monomial terms")
    terms: dict[tuple, FieldElement] = {}
    degree = None
    for item in obj:
        if not isinstance(item, list) or len(item) != 4:
            raise InputError(f"a term is [i, j, k, coefficient]: {item!r}")
        i, j, k, raw = item
        for e in (i, j, k):
            if not isinstance(e, int) or e < 0:
                raise InputError(f"exponents must be nonnegative integers: {item!r}")
        if degree is None:
            degree = i + j + k
        elif i + j + k != degree:
            raise InputError("curve terms must be homogeneous of one degree")
        if (i, j, k) in terms:
            raise InputError(f"duplicate monomial x^{i} y^{j} z^{k}")
        terms[(i, j, k)] = element_from_json(raw, field)
    poly = Poly.from_terms(terms, 3, field)
    if poly.is_zero():
        raise InputError("all curve coefficients are zero")
    return PlaneCurve(poly)


# -- configuration files -----------------------------------------------------------


@dataclass(frozen=True)
class CurveConfig:
    """A parsed configuration file: one field, named curves, optional roles."""
    field: NumberField
    curves: dict[str, PlaneCurve]
    components: tuple[str, ...] | None

    def curve(self, name: str) -> PlaneCurve:
        if name not in self.curves:
            raise InputError(f"no curve named {name!r} in the configuration")
        return self.curves[name]

    def component_curves(self) -> list[PlaneCurve]:
        if self.components is not None:
            return [self.curve(n) for n in self.components]
        if len(self.curves) >= 3:
            return list(self.curves.values())
        raise InputError("the configuration names no component block")


def _reject_duplicate_keys(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise InputError(f"duplicate name in configuration: {key!r}")
        seen.add(key)
    return dict(pairs)


def config_from_json(obj, budget: Budget | None = None) -> CurveConfig:
    if not isinstance(obj, dict):
        raise InputError("a configuration file holds a JSON object")
    schema = obj.get("schema")
    if schema != CONFIG_SCHEMA:
        raise InputError(
            f"unsupported configuration schema {schema!r}; expected {CONFIG_SCHEMA!r}")
    field = field_from_json(obj.get("field", "rationals"), budget)
    raw_curves = obj.get("curves")
    if not isinstance(raw_curves, dict) or not raw_curves:
        raise InputError('the configuration needs a nonempty "curves" object')
    curves = {}
    for name, terms in raw_curves.items():
        if not isinstance(name, str) or not name:
            raise InputError("curve names must be nonempty strings")
        try:
            curves[name] = curve_from_terms_json(terms, field)
        except InputError as exc:
            raise InputError(f"curve {name!r}: {exc}") from exc
    components = None
    block = obj.get("configuration")
    if block is not None:
        if not isinstance(block, dict) or "components" not in block:
            raise InputError('the configuration block holds {"components": [...]}')
        names = block["components"]
        if (not isinstance(names, list) or
                not all(isinstance(n, str) for n in names)):
            raise InputError("component roles are a list of curve names")
        for n in names:
            if n not in curves:
                raise InputError(f"component role names unknown curve {n!r}")
        if len(set(names)) != len(names):
            raise InputError("component roles repeat a curve name")
        components = tuple(names)
    return CurveConfig(field=field, curves=curves, components=components)


def parse_config_text(text: str, budget: Budget | None = None) -> CurveConfig:
    try:
        obj = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    return config_from_json(obj)


def load_config(path: str, budget: Budget | None = None) -> CurveConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read configuration file: {exc}") from exc
    return parse_config_text(text, budget)


def config_to_json(cfg: CurveConfig) -> dict:
    out: dict = {"schema": CONFIG_SCHEMA, "field": field_to_json(cfg.field)}
    out["curves"] = {name: curve_terms_to_json(C)
                     for name, C in cfg.curves.items()}
    if cfg.components is not None:
        out["configuration"] = {"components": list(cfg.components)}
    return out


# -- report files ---------------------------------------------------------------


def point_type_to_json(pt: PointType) -> list:
    n = "infinity" if pt.n == INFINITE else int(pt.n)
    return [int(pt.m), n]


def make_report(command: str, arguments: dict, results: dict,
                summary: list[str], status: str) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "command": command,
        "arguments": arguments,
        "results": results,
        "summary": summary,
        "status": status,
    }


def report_to_text(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def parse_report_text(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("schema") != REPORT_SCHEMA:
        raise InputError(f"expected a {REPORT_SCHEMA!r} report file")
    for key in ("command", "arguments", "results", "summary", "status"):
        if key not in obj:
            raise InputError(f"report file lacks the {key!r} entry")
    return obj


# -- certificates in reports -------------------------------------------------------


def certificate_to_json(cert) -> dict:
    """Machine-readable form of a verified-member certificate."""
    return {
        "membership": cert.membership,
        "degree": cert.degree,
        "field": field_to_json(cert.curve.field),
        "curve": curve_terms_to_json(cert.curve),
        "orbit_degree": cert.orbit_degree,
        "rational": cert.rational,
        "genus": cert.genus,
        "contacts": [
            {
                "point": point_to_json(ct.point),
                "field": field_to_json(ct.field),
                "orbit_degree": ct.orbit_degree,
                "components": list(ct.components),
                "multiplicity": ct.multiplicity,
                "branches": ct.branches,
                "type_on_curve": point_type_to_json(ct.type_on_curve),
            }
            for ct in cert.contacts
        ],
    }


def certificate_curve_from_json(obj, budget: Budget | None = None) -> PlaneCurve:
    """Reconstruct a certificate's curve over its field of definition."""
    if not isinstance(obj, dict) or "curve" not in obj or "field" not in obj:
        raise InputError("a certificate carries its curve and its field")
    field = field_from_json(obj["field"], budget)
    return curve_from_terms_json(obj["curve"], field)


def emptiness_to_json(cert) -> dict:
    return {
        "reason": cert.reason,
        "statement": cert.statement,
        "refuted_candidates": len(cert.refuted),
    }
