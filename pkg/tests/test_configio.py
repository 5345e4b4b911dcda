"""Tests for exact JSON serialization: configs, reports, certificates."""
import json
from fractions import Fraction

import pytest

from hypertangency.configio import (
    CONFIG_SCHEMA,
    certificate_curve_from_json,
    certificate_to_json,
    config_from_json,
    config_to_json,
    curve_from_terms_json,
    curve_terms_to_json,
    element_from_json,
    element_to_json,
    field_from_json,
    field_to_json,
    load_config,
    make_report,
    parse_config_text,
    parse_point_text,
    parse_rational,
    parse_report_text,
    point_from_json,
    point_to_json,
    point_type_to_json,
    rational_to_text,
    report_to_text,
)
from hypertangency.errors import InputError
from hypertangency.fields import QQ, NumberField
from hypertangency.localgeo import INFINITE, PointType
from hypertangency.poly import parse_poly
from hypertangency.projplane import PlaneCurve, ProjectivePoint


def curve(text, field=QQ):
    return PlaneCurve(parse_poly(text, 3, field))


class TestRationals:
    @pytest.mark.parametrize("text,value", [
        ("3", Fraction(3)),
        ("-7/2", Fraction(-7, 2)),
        ("0", Fraction(0)),
        ("-0", Fraction(0)),
        ("10/4", Fraction(5, 2)),
    ])
    def test_accepts(self, text, value):
        assert parse_rational(text) == value

    def test_accepts_plain_int(self):
        assert parse_rational(5) == Fraction(5)

    @pytest.mark.parametrize("bad", [
        "3/-4", "1/0", "3/0", "1.5", "", "a", "+3", " 3", "3 ", "1e2",
        "--3", "1/", "/2", None, 1.5, [1],
    ])
    def test_rejects(self, bad):
        with pytest.raises(InputError):
            parse_rational(bad)

    @pytest.mark.parametrize("value", [
        Fraction(3), Fraction(-7, 2), Fraction(0), Fraction(22, 7),
    ])
    def test_round_trip(self, value):
        assert parse_rational(rational_to_text(value)) == value

    def test_integer_renders_without_slash(self):
        assert rational_to_text(Fraction(4, 2)) == "2"
        assert rational_to_text(Fraction(-3, 2)) == "-3/2"


class TestFields:
    def test_rationals_round_trip(self):
        assert field_to_json(QQ) == "rationals"
        assert field_from_json("rationals") is QQ

    def test_extension_round_trip(self):
        K = NumberField([Fraction(-5), Fraction(0), Fraction(1)], "s")
        obj = field_to_json(K)
        assert obj == {"minpoly": ["-5", "0", "1"], "name": "s"}
        assert field_from_json(obj) == K

    def test_non_monic_minpoly_is_normalized(self):
        K = field_from_json({"minpoly": ["-10", "0", "2"], "name": "s"})
        assert K == NumberField([Fraction(-5), Fraction(0), Fraction(1)], "s")

    def test_reducible_minpoly_rejected(self):
        with pytest.raises(InputError, match="irreducible"):
            field_from_json({"minpoly": ["-4", "0", "1"], "name": "s"})

    def test_degree_one_rejected(self):
        with pytest.raises(InputError, match="degree >= 2"):
            field_from_json({"minpoly": ["1", "1"], "name": "s"})

    def test_zero_leading_coefficient_rejected(self):
        with pytest.raises(InputError, match="leading"):
            field_from_json({"minpoly": ["1", "0", "0"], "name": "s"})

    def test_garbage_rejected(self):
        with pytest.raises(InputError):
            field_from_json(42)
        with pytest.raises(InputError):
            field_from_json({"name": "s"})
        with pytest.raises(InputError, match="name"):
            field_from_json({"minpoly": ["-2", "0", "1"], "name": ""})


class TestElements:
    def test_rational_element(self):
        el = QQ.from_rational(Fraction(3, 2))
        assert element_to_json(el) == "3/2"
        assert element_from_json("3/2", QQ) == el

    def test_extension_element_round_trip(self):
        K = NumberField([Fraction(-2), Fraction(0), Fraction(1)], "s")
        el = K.element([Fraction(1, 2), Fraction(-3)])
        obj = element_to_json(el)
        assert obj == ["1/2", "-3"]
        assert element_from_json(obj, K) == el

    def test_rational_valued_extension_element_shrinks(self):
        K = NumberField([Fraction(-2), Fraction(0), Fraction(1)], "s")
        el = K.from_rational(Fraction(7))
        assert element_to_json(el) == "7"

    def test_vector_too_long_rejected(self):
        K = NumberField([Fraction(-2), Fraction(0), Fraction(1)], "s")
        with pytest.raises(InputError, match="degree"):
            element_from_json(["1", "2", "3"], K)

    def test_garbage_rejected(self):
        with pytest.raises(InputError):
            element_from_json({"x": 1}, QQ)


class TestPoints:
    def test_round_trip(self):
        p = ProjectivePoint(QQ.coerce(2), QQ.coerce(-1), QQ.coerce(1))
        assert point_from_json(point_to_json(p), QQ) == p

    def test_shape_rejected(self):
        with pytest.raises(InputError):
            point_from_json(["1", "2"], QQ)
        with pytest.raises(InputError):
            point_from_json("1:2:3", QQ)

    def test_parse_point_text(self):
        p = parse_point_text("0 : 1 : 0", QQ)
        assert p == ProjectivePoint(QQ.zero(), QQ.one(), QQ.zero())
        assert parse_point_text("-1/2:3:1", QQ)[0] == QQ.coerce(Fraction(-1, 2))

    def test_parse_point_text_rejects(self):
        with pytest.raises(InputError):
            parse_point_text("0:0", QQ)
        with pytest.raises(InputError):
            parse_point_text("1:2:x", QQ)
        with pytest.raises(InputError):
            parse_point_text("0:0:0", QQ)


class TestCurves:
    def test_round_trip(self):
        C = curve("z*y - x^2 + 3/2*y^2")
        obj = curve_terms_to_json(C)
        assert curve_from_terms_json(obj, QQ) == C

    def test_terms_sorted_descending(self):
        C = curve("z*y - x^2")
        assert curve_terms_to_json(C)[0][:3] == [2, 0, 0]

    def test_duplicate_monomial_rejected(self):
        with pytest.raises(InputError, match="duplicate"):
            curve_from_terms_json([[1, 0, 0, "1"], [1, 0, 0, "2"]], QQ)

    def test_inhomogeneous_rejected(self):
        with pytest.raises(InputError, match="homogeneous"):
            curve_from_terms_json([[1, 0, 0, "1"], [2, 0, 0, "1"]], QQ)

    def test_negative_exponent_rejected(self):
        with pytest.raises(InputError, match="exponents"):
            curve_from_terms_json([[-1, 2, 0, "1"]], QQ)

    def test_zero_curve_rejected(self):
        with pytest.raises(InputError, match="zero"):
            curve_from_terms_json([[1, 0, 0, "0"]], QQ)

    def test_empty_rejected(self):
        with pytest.raises(InputError):
            curve_from_terms_json([], QQ)

    def test_extension_coefficients(self):
        K = NumberField([Fraction(-2), Fraction(0), Fraction(1)], "s")
        C = curve("z*y - s*x^2", K)
        assert curve_from_terms_json(curve_terms_to_json(C), K) == C


class TestConfigs:
    GOOD = {
        "schema": CONFIG_SCHEMA,
        "field": "rationals",
        "curves": {
            "B1": [[1, 0, 0, "1"]],
            "B2": [[0, 0, 1, "1"]],
            "B3": [[2, 0, 0, "-1"], [0, 2, 0, "1"], [0, 1, 1, "1"]],
        },
        "configuration": {"components": ["B1", "B2", "B3"]},
    }

    def test_parse_and_component_order(self):
        cfg = config_from_json(self.GOOD)
        assert set(cfg.curves) == {"B1", "B2", "B3"}
        assert cfg.components == ("B1", "B2", "B3")
        comps = cfg.component_curves()
        assert comps[0] == curve("x")
        assert comps[1] == curve("z")
        assert comps[2] == curve("z*y - x^2 + y^2")

    def test_round_trip(self):
        cfg = config_from_json(self.GOOD)
        again = config_from_json(config_to_json(cfg))
        assert again.curves == cfg.curves
        assert again.components == cfg.components
        assert again.field == cfg.field

    def test_wrong_schema_rejected(self):
        bad = dict(self.GOOD, schema="curvecfg/2")
        with pytest.raises(InputError, match="schema"):
            config_from_json(bad)

    def test_unknown_component_rejected(self):
        bad = dict(self.GOOD, configuration={"components": ["B1", "B2", "XX"]})
        with pytest.raises(InputError, match="unknown curve"):
            config_from_json(bad)

    def test_repeated_component_rejected(self):
        bad = dict(self.GOOD, configuration={"components": ["B1", "B1", "B2"]})
        with pytest.raises(InputError, match="repeat"):
            config_from_json(bad)

    def test_missing_curves_rejected(self):
        with pytest.raises(InputError, match="curves"):
            config_from_json({"schema": CONFIG_SCHEMA, "field": "rationals"})

    def test_curve_errors_name_the_curve(self):
        bad = dict(self.GOOD,
                   curves={"B1": [[1, 0, 0, "1"], [2, 0, 0, "1"]]})
        with pytest.raises(InputError, match="B1"):
            config_from_json(bad)

    def test_duplicate_json_keys_rejected(self):
        text = ('{"schema": "curvecfg/1", "field": "rationals", '
                '"curves": {"A": [[1,0,0,"1"]], "A": [[0,1,0,"1"]]}}')
        with pytest.raises(InputError, match="duplicate"):
            parse_config_text(text)

    def test_malformed_json_rejected(self):
        with pytest.raises(InputError, match="malformed"):
            parse_config_text("{not json")

    def test_missing_file_rejected(self, tmp_path):
        with pytest.raises(InputError, match="cannot read"):
            load_config(str(tmp_path / "absent.json"))

    def test_component_fallback_without_block(self):
        cfg = config_from_json({k: v for k, v in self.GOOD.items()
                                if k != "configuration"})
        assert cfg.components is None
        assert len(cfg.component_curves()) == 3

    def test_no_fallback_below_three_curves(self):
        cfg = config_from_json({
            "schema": CONFIG_SCHEMA,
            "curves": {"A": [[1, 0, 0, "1"]]},
        })
        with pytest.raises(InputError, match="component"):
            cfg.component_curves()

    def test_extension_field_config(self):
        obj = {
            "schema": CONFIG_SCHEMA,
            "field": {"minpoly": ["-2", "0", "1"], "name": "s"},
            "curves": {"C": [[2, 0, 0, ["0", "1"]], [0, 1, 1, "-1"]]},
        }
        cfg = config_from_json(obj)
        assert cfg.field.degree == 2
        K = cfg.field
        assert cfg.curve("C") == curve("s*x^2 - z*y", K)


class TestPointTypes:
    def test_finite(self):
        assert point_type_to_json(PointType(3, 4)) == [3, 4]

    def test_infinite(self):
        assert point_type_to_json(PointType(1, INFINITE)) == [1, "infinity"]


class TestReports:
    def test_round_trip(self):
        rep = make_report("delta", {"curve": "Q4"}, {"delta": 3},
                          ["delta invariant 3"], "success")
        text = report_to_text(rep)
        assert text.endswith("\n")
        assert parse_report_text(text) == rep
        assert json.loads(text) == rep

    def test_schema_echoed(self):
        rep = make_report("x", {}, {}, [], "success")
        assert rep["schema"] == "report/1"

    def test_wrong_schema_rejected(self):
        with pytest.raises(InputError, match="report"):
            parse_report_text('{"schema": "report/9"}')

    def test_missing_key_rejected(self):
        with pytest.raises(InputError, match="status"):
            parse_report_text(json.dumps({
                "schema": "report/1", "command": "x", "arguments": {},
                "results": {}, "summary": []}))


class TestCertificates:
    def test_round_trip_through_json(self):
        from hypertangency.search3c import hyp_ge2_search, validate_3c

        B = validate_3c([curve("x"), curve("z"), curve("z*y - x^2 + y^2")])
        res = hyp_ge2_search(B)
        assert res.certificates
        for cert in res.certificates:
            obj = certificate_to_json(cert)
            # the object survives a JSON text round trip
            obj = json.loads(json.dumps(obj))
            rebuilt = certificate_curve_from_json(obj)
            assert rebuilt == cert.curve
            assert obj["membership"] == cert.membership
            assert obj["genus"] == cert.genus
            assert len(obj["contacts"]) == len(cert.contacts)

    def test_shape_rejected(self):
        with pytest.raises(InputError):
            certificate_curve_from_json({"membership": "x"})
