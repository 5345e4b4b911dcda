"""Command line front end.

Thirteen subcommands cover local point analysis, intersection theory, the
local-type and delta-bound check, enumeration and search of hypertangent and
hyper-bitangent curves over named configurations, fixture regression, and SVG
plotting.  Every command except ``plot`` emits a versioned JSON report
(schema ``report/1``) on standard output or to the file named by ``--out``;
``plot`` emits an SVG document.  Reports carry no timestamps or machine
paths, so the same invocation always produces the identical bytes.

Exit codes: 0 success or verified, 1 verified negative (an emptiness
certificate or a failed check), 2 input error, 3 budget exceeded, 4 internal
invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .configio import (
    CONFIG_SCHEMA,
    CurveConfig,
    certificate_curve_from_json,
    certificate_to_json,
    element_to_json,
    emptiness_to_json,
    field_from_json,
    field_to_json,
    load_config,
    make_report,
    parse_point_text,
    point_to_json,
    point_type_to_json,
    report_to_text,
    curve_terms_to_json,
)
from .errors import (
    BudgetExceededError,
    InputError,
    InternalInvariantError,
    NotUnibranchedError,
    PreconditionError,
)
from .factor import Budget
from .fields import QQ, NumberField
from .localgeo import (
    branch_count,
    delta_invariant,
    geometric_genus,
    intersection_points,
    multiplicity_at,
    point_type,
)
from .poly import parse_poly
from .projplane import PlaneCurve, ProjectivePoint
from .search3c import (
    hyp1_lines,
    hyp_ge2_search,
    multi_component_check,
    triangle_pencil,
    validate_3c,
)
from .svgplot import DEFAULT_VIEWPORT, MAX_RESOLUTION, parse_viewport, render_plot
from .tangency import flexes, mirror_check, tangency_report

# Status strings used in reports, one per exit code (0, 0, 1, 2, 3, 4).
STATUS_SUCCESS = "success"
STATUS_VERIFIED = "verified"
STATUS_NEGATIVE = "verified-negative"
STATUS_INPUT_ERROR = "input-error"
STATUS_BUDGET = "budget-exceeded"
STATUS_INTERNAL = "internal-error"


# -- shared argument handling -----------------------------------------------------


def _budget_from_args(args) -> Optional[Budget]:
    n = getattr(args, "budget_degree", None)
    if n is None:
        return None
    if n < 1:
        raise InputError("--budget-degree must be a positive integer")
    return Budget(max_factor_degree=max(12, 2 * n), max_field_degree=n)


def _field_from_flag(args, budget: Optional[Budget]) -> NumberField:
    text = getattr(args, "field", None)
    if text is None or text.strip() == "rationals":
        return QQ
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(f"--field is not valid JSON: {exc}") from exc
        return field_from_json(obj, budget)
    raise InputError(
        '--field must be "rationals" or a JSON object {"minpoly": [...], "name": ...}')


def _config_from_args(args, budget: Optional[Budget],
                      required: bool = False) -> Optional[CurveConfig]:
    path = getattr(args, "config", None)
    if path is None:
        if required:
            raise InputError("this command needs --config")
        return None
    return load_config(path, budget)


def _resolve_curve(text: str, cfg: Optional[CurveConfig],
                   field: NumberField) -> PlaneCurve:
    """A curve given either by its configuration name or inline.

    Inline expressions are homogeneous polynomials in x, y, z over the
    configuration's field when a configuration is loaded, otherwise over the
    field named by --field.
    """
    if cfg is not None and text in cfg.curves:
        return cfg.curve(text)
    parse_field = cfg.field if cfg is not None else field
    try:
        form = parse_poly(text, 3, parse_field)
    except InputError as exc:
        raise InputError(f"curve {text!r}: {exc}") from exc
    if form.is_zero() or form.is_constant():
        raise InputError(f"curve {text!r}: not a positive-degree polynomial")
    try:
        return PlaneCurve(form)
    except InputError as exc:
        raise InputError(f"curve {text!r}: {exc}") from exc


def _resolve_point(text: str, field: NumberField) -> ProjectivePoint:
    return parse_point_text(text, field)


_ECHO_KEYS = ("curve", "base", "point", "degree", "seed", "field",
              "budget_degree", "viewport", "resolution", "dir")


def _echo_arguments(args) -> dict:
    """The command's mathematical arguments, echoed into the report.

    File locations are reduced to their base names so that a report's bytes
    do not depend on where the repository is checked out.
    """
    out: dict = {}
    path = getattr(args, "config", None)
    if path is not None:
        out["config"] = os.path.basename(path)
    for key in _ECHO_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            out[key] = value
    return out


# -- json fragments ----------------------------------------------------------------


def _orbit_to_json(o) -> dict:
    return {
        "point": point_to_json(o.point),
        "field": field_to_json(o.field),
        "orbit_degree": o.orbit_degree,
        "multiplicity": o.multiplicity,
    }


def _node_to_json(n) -> dict:
    return {
        "pair": [n.pair[0], n.pair[1]],
        "point": point_to_json(n.point),
        "field": field_to_json(n.field),
        "orbit_degree": n.orbit_degree,
    }


def _skip_to_json(pair) -> dict:
    node, reason = pair
    return {"node": _node_to_json(node), "reason": reason}


def _curve_to_json(C: PlaneCurve) -> dict:
    return {"field": field_to_json(C.field), "terms": curve_terms_to_json(C)}


# -- command handlers --------------------------------------------------------------
#
# Each handler returns (kind, payload, exit_code) where kind is "json" with a
# report dict, or "svg" with the document text.


def _cmd_analyze_point(args, budget):
    cfg = _config_from_args(args, budget)
    field = _field_from_flag(args, budget)
    C = _resolve_curve(args.curve, cfg, field)
    p = _resolve_point(args.point, C.field)
    results: dict = {
        "curve_degree": C.degree,
        "point": point_to_json(p),
        "on_curve": C.contains(p),
        "multiplicity": None,
        "branches": None,
        "unibranched": None,
        "smooth": None,
        "type": None,
        "delta": None,
    }
    if not results["on_curve"]:
        summary = ["the point does not lie on the curve"]
        return "json", make_report("analyze-point", _echo_arguments(args),
                                   results, summary, STATUS_SUCCESS), 0
    m = multiplicity_at(C, p)
    b = branch_count(C, p, budget)
    results["multiplicity"] = m
    results["branches"] = b
    results["unibranched"] = (b == 1)
    results["smooth"] = (m == 1)
    try:
        results["type"] = point_type_to_json(point_type(C, p, budget))
    except NotUnibranchedError:
        results["type"] = None
    results["delta"] = delta_invariant(C, p, budget)
    summary = [
        f"multiplicity {m}, {b} branch{'es' if b != 1 else ''}, "
        f"delta invariant {results['delta']}",
    ]
    if results["type"] is not None:
        t = results["type"]
        summary.append(f"local type ({t[0]}, {t[1]})")
    return "json", make_report("analyze-point", _echo_arguments(args),
                               results, summary, STATUS_SUCCESS), 0


def _cmd_intersect(args, budget):
    cfg = _config_from_args(args, budget)
    field = _field_from_flag(args, budget)
    names = args.curve
    if len(names) != 2:
        raise InputError("intersect needs exactly two --curve arguments")
    C = _resolve_curve(names[0], cfg, field)
    B = _resolve_curve(names[1], cfg, field)
    orbits = intersection_points(C, B, budget)
    results = {
        "degrees": [C.degree, B.degree],
        "bezout_total": C.degree * B.degree,
        "orbit_count": len(orbits),
        "point_count_geometric": sum(o.orbit_degree for o in orbits),
        "orbits": [_orbit_to_json(o) for o in orbits],
    }
    summary = [
        f"{results['point_count_geometric']} intersection point(s) in "
        f"{len(orbits)} orbit(s); multiplicities sum to the product of the "
        f"degrees, {results['bezout_total']}",
    ]
    return "json", make_report("intersect", _echo_arguments(args),
                               results, summary, STATUS_SUCCESS), 0


def _cmd_delta(args, budget):
    cfg = _config_from_args(args, budget)
    field = _field_from_flag(args, budget)
    C = _resolve_curve(args.curve, cfg, field)
    p = _resolve_point(args.point, C.field)
    value = delta_invariant(C, p, budget)
    results = {"curve_degree": C.degree, "point": point_to_json(p),
               "on_curve": C.contains(p), "delta": value}
    summary = [f"delta invariant {value}"]
    if not results["on_curve"]:
        summary.append("the point does not lie on the curve")
    return "json", make_report("delta", _echo_arguments(args),
                               results, summary, STATUS_SUCCESS), 0


def _cmd_genus(args, budget):
    cfg = _config_from_args(args, budget)
    field = _field_from_flag(args, budget)
    C = _resolve_curve(args.curve, cfg, field)
    g = geometric_genus(C, budget)
    results = {"degree": C.degree, "genus": g, "rational": g == 0}
    summary = [f"geometric genus {g}" + (", a rational curve" if g == 0 else "")]
    return "json", make_report("genus", _echo_arguments(args),
                               results, summary, STATUS_SUCCESS), 0


def _cmd_flexes(args, budget):
    cfg = _config_from_args(args, budget)
    field = _field_from_flag(args, budget)
    C = _resolve_curve(args.curve, cfg, field)
    found = flexes(C, budget)
    results = {
        "degree": C.degree,
        "orbit_count": len(found),
        "count_geometric": sum(f.orbit_degree for f in found),
        "flexes": [
            {
                "point": point_to_json(f.point),
                "field": field_to_json(f.field),
                "orbit_degree": f.orbit_degree,
                "contact_order": f.contact_order,
            }
            for f in found
        ],
    }
    summary = [
        f"{results['count_geometric']} flex point(s) in {len(found)} orbit(s)",
    ]
    return "json", make_report("flexes", _echo_arguments(args),
                               results, summary, STATUS_SUCCESS), 0


def _cmd_mirror_check(args, budget):
    cfg = _config_from_args(args, budget)
    field = _field_from_flag(args, budget)
    C = _resolve_curve(args.curve, cfg, field)
    B = _resolve_curve(args.base, cfg, field)
    q = _resolve_point(args.point, C.field)
    mc = mirror_check(C, B, q, budget)
    results = {
        "l": mc.l,
        "m": mc.m,
        "predicted_type": point_type_to_json(mc.predicted_type),
        "observed_type": point_type_to_json(mc.observed_type),
        "delta_bound": str(mc.delta_bound),
        "delta_observed": mc.delta_observed,
        "passed": mc.passed,
    }
    if mc.passed:
        summary = [
            f"observed type matches the predicted ({mc.m}, {mc.l * mc.m}) and "
            f"the delta invariant {mc.delta_observed} meets the bound "
            f"{mc.delta_bound}",
        ]
        return "json", make_report("mirror-check", _echo_arguments(args),
                                   results, summary, STATUS_VERIFIED), 0
    summary = [
        f"predicted type ({mc.predicted_type.m}, {mc.predicted_type.n}) but "
        f"observed ({mc.observed_type.m}, {mc.observed_type.n}); delta "
        f"observed {mc.delta_observed}, bound {mc.delta_bound}",
    ]
    return "json", make_report("mirror-check", _echo_arguments(args),
                               results, summary, STATUS_NEGATIVE), 1


def _cmd_validate_3c(args, budget):
    cfg = _config_from_args(args, budget, required=True)
    comps = cfg.component_curves()
    if len(comps) != 3:
        raise InputError(
            f"validate-3c needs exactly three components, got {len(comps)}")
    try:
        B = validate_3c(comps, budget)
    except PreconditionError as exc:
        results = {"valid": False, "reason": str(exc)}
        summary = [f"not a valid three-component configuration: {exc}"]
        return "json", make_report("validate-3c", _echo_arguments(args),
                                   results, summary, STATUS_NEGATIVE), 1
    results = {
        "valid": True,
        "degrees": list(B.degrees),
        "total_degree": B.degree,
        "node_count_geometric": B.node_points_total,
        "nodes": [_node_to_json(n) for n in B.nodes],
    }
    summary = [
        f"valid configuration of degrees {tuple(B.degrees)} with "
        f"{B.node_points_total} pairwise nodes",
    ]
    return "json", make_report("validate-3c", _echo_arguments(args),
                               results, summary, STATUS_VERIFIED), 0


def _validated_configuration(cfg: CurveConfig, budget):
    comps = cfg.component_curves()
    if len(comps) != 3:
        raise InputError(
            f"this command needs exactly three components, got {len(comps)}")
    return validate_3c(comps, budget)


def _cmd_hyp_lines(args, budget):
    cfg = _config_from_args(args, budget, required=True)
    B = _validated_configuration(cfg, budget)
    res = hyp1_lines(B, budget)
    results = {
        "count": len(res.certificates),
        "certificates": [certificate_to_json(c) for c in res.certificates],
        "tangent_at_node_count": len(res.tangent_at_node_lines),
        "tangent_at_node_lines": [certificate_to_json(c)
                                  for c in res.tangent_at_node_lines],
        "families": [
            {"node": _node_to_json(f.node), "description": f.description}
            for f in res.families
        ],
        "complete": res.complete,
        "incomplete_nodes": [_skip_to_json(p) for p in res.incomplete_nodes],
    }
    total = len(res.certificates)
    if not res.complete:
        summary = [
            f"enumeration incomplete at {len(res.incomplete_nodes)} node(s); "
            f"{total} line(s) verified so far",
        ]
        return "json", make_report("hyp-lines", _echo_arguments(args),
                                   results, summary, STATUS_BUDGET), 3
    if total or res.families:
        summary = [f"{total} hyper-bitangent line(s), plus "
                   f"{len(res.tangent_at_node_lines)} tangent at a node"]
        if res.families:
            summary.append(
                f"{len(res.families)} positive-dimensional line famil(ies)")
        return "json", make_report("hyp-lines", _echo_arguments(args),
                                   results, summary, STATUS_VERIFIED), 0
    summary = ["no hyper-bitangent line exists for this configuration"]
    return "json", make_report("hyp-lines", _echo_arguments(args),
                               results, summary, STATUS_NEGATIVE), 1


def _cmd_hyp_search(args, budget):
    cfg = _config_from_args(args, budget, required=True)
    B = _validated_configuration(cfg, budget)
    res = hyp_ge2_search(B, budget, seed=getattr(args, "seed", None))
    results = {
        "count": len(res.certificates),
        "certificates": [certificate_to_json(c) for c in res.certificates],
        "emptiness": None if res.emptiness is None
        else emptiness_to_json(res.emptiness),
        "refuted_count": len(res.refuted),
        "skipped": [_skip_to_json(p) for p in res.skipped],
        "pairs_examined": res.pairs_examined,
    }
    if res.certificates:
        summary = [
            f"{len(res.certificates)} hyper-bitangent member(s) of degree at "
            f"least 2 verified; {len(res.refuted)} candidate(s) refuted over "
            f"{res.pairs_examined} contact pair(s)",
        ]
        if res.skipped:
            summary.append(
                f"{len(res.skipped)} node pair(s) skipped for budget; the "
                f"enumeration may be incomplete")
        return "json", make_report("hyp-search", _echo_arguments(args),
                                   results, summary, STATUS_VERIFIED), 0
    if res.emptiness is not None:
        summary = [res.emptiness.statement]
        return "json", make_report("hyp-search", _echo_arguments(args),
                                   results, summary, STATUS_NEGATIVE), 1
    summary = [
        f"no member found, but {len(res.skipped)} node pair(s) were skipped "
        f"for budget; raise --budget-degree for an exhaustive answer",
    ]
    return "json", make_report("hyp-search", _echo_arguments(args),
                               results, summary, STATUS_BUDGET), 3


def _cmd_multi_check(args, budget):
    cfg = _config_from_args(args, budget, required=True)
    comps = cfg.component_curves()
    res = multi_component_check(comps, budget)
    results = {
        "component_degrees": [C.degree for C in res.components],
        "count": len(res.certificates),
        "certificates": [certificate_to_json(c) for c in res.certificates],
        "emptiness": None if res.emptiness is None
        else emptiness_to_json(res.emptiness),
        "high_degree_emptiness": None if res.high_degree_emptiness is None
        else emptiness_to_json(res.high_degree_emptiness),
        "complete": res.complete,
        "incomplete": list(res.incomplete),
    }
    if res.emptiness is not None:
        summary = [res.emptiness.statement]
        return "json", make_report("multi-check", _echo_arguments(args),
                                   results, summary, STATUS_NEGATIVE), 1
    if res.certificates:
        summary = [
            f"{len(res.certificates)} hyper-bitangent line(s) verified",
        ]
        if res.high_degree_emptiness is not None:
            summary.append(res.high_degree_emptiness.statement)
        if not res.complete:
            summary.append("the line enumeration is incomplete; see results")
        return "json", make_report("multi-check", _echo_arguments(args),
                                   results, summary, STATUS_VERIFIED), 0
    if not res.complete:
        summary = [
            "no line verified and the enumeration is incomplete; raise "
            "--budget-degree for an exhaustive answer",
        ]
        return "json", make_report("multi-check", _echo_arguments(args),
                                   results, summary, STATUS_BUDGET), 3
    summary = ["no hyper-bitangent curve exists for this configuration"]
    if res.high_degree_emptiness is not None:
        summary.append(res.high_degree_emptiness.statement)
    return "json", make_report("multi-check", _echo_arguments(args),
                               results, summary, STATUS_NEGATIVE), 1


def _cmd_triangle_pencil(args, budget):
    cfg = _config_from_args(args, budget, required=True)
    B = _validated_configuration(cfg, budget)
    d = args.degree
    if d < 1:
        raise InputError("--degree must be a positive integer")
    tp = triangle_pencil(B, d, budget)
    results = {
        "degree": tp.degree,
        "kernel_dim": tp.kernel_dim,
        "projective_dim": tp.projective_dim,
        "monomials": [list(e) for e in tp.monomials],
        "kernel_basis": [[element_to_json(c) for c in row]
                         for row in tp.kernel_basis],
        "deep_point": point_to_json(tp.deep_point),
        "deep_tangent": _curve_to_json(tp.deep_tangent),
        "full_contact_point": point_to_json(tp.full_contact_point),
        "full_contact_line": _curve_to_json(tp.full_contact_line),
        "samples": [certificate_to_json(s) for s in tp.samples],
    }
    ok = tp.projective_dim >= 1
    summary = [
        f"degree-{d} family of projective dimension {tp.projective_dim} "
        f"with {len(tp.samples)} sampled members verified",
    ]
    status = STATUS_VERIFIED if ok else STATUS_NEGATIVE
    return "json", make_report("triangle-pencil", _echo_arguments(args),
                               results, summary, status), 0 if ok else 1


def _reverify_certificates(report: dict, cfg: CurveConfig, budget) -> int:
    """Re-ingest every certificate in a report and verify it again.

    Each certificate curve is reconstructed from its exact JSON form and its
    tangency against the product of the configuration's components is
    recomputed from scratch; the membership claim must hold again.
    Returns the number of certificates re-verified.
    """
    results = report.get("results", {})
    cert_lists = []
    for key in ("certificates", "tangent_at_node_lines", "samples"):
        block = results.get(key)
        if isinstance(block, list):
            cert_lists.extend(block)
    if not cert_lists:
        return 0
    comps = cfg.component_curves()
    union_form = comps[0].form
    for C in comps[1:]:
        union_form = union_form * C.form
    union = PlaneCurve(union_form)
    checked = 0
    for obj in cert_lists:
        curve = certificate_curve_from_json(obj, budget)
        rep = tangency_report(curve, union, budget)
        membership = str(obj.get("membership", ""))
        if not rep.hyper_bitangent:
            raise InputError(
                f"certificate failed re-verification: {membership}")
        if "(B,1)" in membership and not rep.hypertangent:
            raise InputError(
                f"certificate is not hypertangent on re-verification: "
                f"{membership}")
        checked += 1
    return checked


def _cmd_verify_fixtures(args, budget):
    base = args.dir
    manifest_path = os.path.join(base, "manifest.json")
    try:
        with open(manifest_path, "r", encoding="utf-8") as fh:
            manifest = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read fixture manifest: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed fixture manifest: {exc}") from exc
    if (not isinstance(manifest, dict)
            or manifest.get("schema") != "fixturemanifest/1"
            or not isinstance(manifest.get("entries"), list)):
        raise InputError('the manifest holds {"schema": "fixturemanifest/1", '
                         '"entries": [...]}')
    entries = []
    failures = []
    for entry in manifest["entries"]:
        name = entry.get("name", "?")
        argv = list(entry.get("argv", []))
        expected_rel = entry.get("expected")
        if not argv or not isinstance(expected_rel, str):
            raise InputError(f"fixture entry {name!r} needs argv and expected")
        if argv[0] == "verify-fixtures":
            raise InputError("a fixture entry cannot invoke verify-fixtures")
        # Config paths inside the manifest are relative to the fixture
        # directory; rewrite them so the command runs from anywhere.
        for i, piece in enumerate(argv):
            if piece == "--config" and i + 1 < len(argv):
                argv[i + 1] = os.path.join(base, argv[i + 1])
        expected_path = os.path.join(base, expected_rel)
        try:
            with open(expected_path, "r", encoding="utf-8") as fh:
                expected_text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read expected output for {name!r}: "
                             f"{exc}") from exc
        try:
            _args, kind, payload, code = _run(argv)
        except SystemExit:
            entries.append({"name": name, "matched": False,
                            "reverified_certificates": 0,
                            "detail": "argument parsing failed"})
            failures.append(name)
            continue
        text = payload if kind == "svg" else report_to_text(payload)
        expected_code = entry.get("exit_code")
        matched = (text == expected_text)
        detail = None if matched else "output differs from the stored snapshot"
        if matched and expected_code is not None and code != expected_code:
            matched = False
            detail = (f"exit code {code} differs from the recorded "
                      f"{expected_code}")
        reverified = 0
        if matched and kind == "json":
            cfg_path = None
            for i, piece in enumerate(argv):
                if piece == "--config" and i + 1 < len(argv):
                    cfg_path = argv[i + 1]
            if cfg_path is not None:
                cfg = load_config(cfg_path, budget)
                reverified = _reverify_certificates(payload, cfg, budget)
        row = {"name": name, "matched": matched,
               "reverified_certificates": reverified}
        if detail:
            row["detail"] = detail
        entries.append(row)
        if not matched:
            failures.append(name)
    results = {
        "total": len(entries),
        "failures": failures,
        "entries": entries,
        "reverified_certificates": sum(e["reverified_certificates"]
                                       for e in entries),
    }
    if failures:
        summary = [f"{len(failures)} of {len(entries)} fixture(s) do not "
                   f"match their stored snapshots: {', '.join(failures)}"]
        return "json", make_report("verify-fixtures", _echo_arguments(args),
                                   results, summary, STATUS_NEGATIVE), 1
    summary = [
        f"all {len(entries)} fixture(s) match their stored snapshots; "
        f"{results['reverified_certificates']} certificate(s) re-verified "
        f"from their exact serialized form",
    ]
    return "json", make_report("verify-fixtures", _echo_arguments(args),
                               results, summary, STATUS_VERIFIED), 0


def _cmd_plot(args, budget):
    cfg = _config_from_args(args, budget, required=True)
    viewport = DEFAULT_VIEWPORT
    if args.viewport is not None:
        viewport = parse_viewport(args.viewport)
    resolution = args.resolution if args.resolution is not None else 128
    if cfg.components is not None:
        base_curves = [(n, cfg.curve(n)) for n in cfg.components]
    else:
        base_curves = list(cfg.curves.items())
    overlay = []
    if cfg.components is not None and len(cfg.components) == 3:
        try:
            B = validate_3c(cfg.component_curves(), budget)
            res = hyp_ge2_search(B, budget)
            overlay = [(f"member-{i + 1}", c.curve)
                       for i, c in enumerate(res.certificates)]
        except (InputError, BudgetExceededError) as exc:
            print(f"plot: no hyper-bitangent overlay: {exc}", file=sys.stderr)
    result = render_plot(base_curves, overlay, viewport, resolution)
    for w in result.warnings:
        print(f"plot: {w}", file=sys.stderr)
    return "svg", result.svg, 0


_HANDLERS = {
    "analyze-point": _cmd_analyze_point,
    "intersect": _cmd_intersect,
    "delta": _cmd_delta,
    "genus": _cmd_genus,
    "flexes": _cmd_flexes,
    "mirror-check": _cmd_mirror_check,
    "validate-3c": _cmd_validate_3c,
    "hyp-lines": _cmd_hyp_lines,
    "hyp-search": _cmd_hyp_search,
    "multi-check": _cmd_multi_check,
    "triangle-pencil": _cmd_triangle_pencil,
    "verify-fixtures": _cmd_verify_fixtures,
    "plot": _cmd_plot,
}


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypertangency",
        description="Exact analysis of plane curve singularities and "
                    "enumeration of hypertangent and hyper-bitangent curves.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.add_argument("--config", metavar="PATH",
                        help=f"path to a {CONFIG_SCHEMA} JSON configuration")
        sp.add_argument("--out", metavar="PATH",
                        help="write the output to this file instead of stdout")
        sp.add_argument("--field", metavar="SPEC",
                        help='coefficient field for inline curves: '
                             '"rationals" or {"minpoly": [...], "name": ...}')
        sp.add_argument("--budget-degree", type=int, dest="budget_degree",
                        metavar="N",
                        help="cap on the absolute degree of number fields "
                             "constructed during the computation (default 8)")
        return sp

    sp = add("analyze-point",
             "multiplicity, branch count, local type and delta invariant of "
             "a curve at a point")
    sp.add_argument("--curve", required=True, metavar="NAME_OR_EXPR")
    sp.add_argument("--point", required=True, metavar="X:Y:Z")

    sp = add("intersect",
             "all intersection points of two curves with local multiplicities")
    sp.add_argument("--curve", required=True, action="append",
                    metavar="NAME_OR_EXPR",
                    help="give this flag twice, once per curve")

    sp = add("delta", "delta invariant of a curve at a point")
    sp.add_argument("--curve", required=True, metavar="NAME_OR_EXPR")
    sp.add_argument("--point", required=True, metavar="X:Y:Z")

    sp = add("genus", "geometric genus of an integral curve")
    sp.add_argument("--curve", required=True, metavar="NAME_OR_EXPR")

    sp = add("flexes", "flex points of an integral curve")
    sp.add_argument("--curve", required=True, metavar="NAME_OR_EXPR")

    sp = add("mirror-check",
             "check that the local type of a curve at its single contact "
             "with a base curve mirrors the base's (1,l) type as (m, l*m), "
             "with the delta invariant meeting its lower bound")
    sp.add_argument("--curve", required=True, metavar="NAME_OR_EXPR",
                    help="the subject curve")
    sp.add_argument("--base", required=True, metavar="NAME_OR_EXPR",
                    help="the base curve with a (1,l) point at the contact")
    sp.add_argument("--point", required=True, metavar="X:Y:Z")

    add("validate-3c",
        "check that the configuration's three components are integral with "
        "pairwise transversal smooth crossings and no triple point")

    add("hyp-lines",
        "enumerate all hyper-bitangent lines to a three-component "
        "configuration, with verified certificates")

    sp = add("hyp-search",
             "search for hyper-bitangent curves of degree at least 2 to a "
             "three-component configuration")
    sp.add_argument("--seed", type=int, metavar="N",
                    help="seed for tie-breaking order; the certified result "
                         "set does not depend on it")

    add("multi-check",
        "hyper-bitangent analysis for configurations of four or more "
        "components")

    sp = add("triangle-pencil",
             "the positive-dimensional family of hyper-bitangent curves of "
             "a given degree to three general lines")
    sp.add_argument("--degree", type=int, required=True, metavar="D")

    sp = add("verify-fixtures",
             "re-run every fixture command and compare against the stored "
             "snapshots, re-verifying all serialized certificates")
    sp.add_argument("--dir", default="fixtures", metavar="PATH",
                    help="fixture directory (default: fixtures)")

    sp = add("plot",
             "SVG plot of the configuration's real traces with any "
             "hyper-bitangent members found overlaid in a distinct stroke "
             "class")
    sp.add_argument("--viewport", metavar="XMIN:XMAX:YMIN:YMAX",
                    help="affine window (default -3:3:-3:3)")
    sp.add_argument("--resolution", type=int, metavar="N",
                    help=f"grid resolution, 2 to {MAX_RESOLUTION} "
                         f"(default 128)")

    return parser


# -- driver ------------------------------------------------------------------------


def _run(argv):
    """Parse and execute one command; returns (args, kind, payload, code)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        budget = _budget_from_args(args)
        kind, payload, code = _HANDLERS[args.command](args, budget)
        return args, kind, payload, code
    except BudgetExceededError as exc:
        report = make_report(args.command, _echo_arguments(args),
                             {"error": str(exc)},
                             [f"budget exceeded: {exc}"], STATUS_BUDGET)
        return args, "json", report, 3
    except InputError as exc:
        report = make_report(args.command, _echo_arguments(args),
                             {"error": str(exc)},
                             [f"input error: {exc}"], STATUS_INPUT_ERROR)
        return args, "json", report, 2
    except InternalInvariantError as exc:
        report = make_report(args.command, _echo_arguments(args),
                             {"error": str(exc)},
                             [f"internal invariant violated: {exc}"],
                             STATUS_INTERNAL)
        return args, "json", report, 4
    except Exception as exc:  # pragma: no cover - defensive catch-all
        report = make_report(args.command, _echo_arguments(args),
                             {"error": f"{type(exc).__name__}: {exc}"},
                             [f"internal error: {exc}"], STATUS_INTERNAL)
        return args, "json", report, 4


def main(argv=None) -> int:
    try:
        args, kind, payload, code = _run(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    text = payload if kind == "svg" else report_to_text(payload)
    out_path = getattr(args, "out", None)
    if out_path is not None:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write output file: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
