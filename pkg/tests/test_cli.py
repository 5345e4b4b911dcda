"""End-to-end tests of the command line: exit codes and report contents."""
import json
import os

import pytest

from hypertangency.cli import main

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                        "..", "fixtures")


def fixture(name: str) -> str:
    return os.path.join(FIXTURES, name)


def run(capsys, *argv):
    """Run the CLI; returns (exit_code, parsed_report_or_text)."""
    code = main(list(argv))
    out = capsys.readouterr().out
    if out.startswith("<?xml"):
        return code, out
    return code, json.loads(out)


class TestPointAnalysis:
    def test_delta_at_the_vertex(self, capsys):
        code, rep = run(capsys, "delta", "--config", fixture("q4.json"),
                        "--curve", "R2", "--point", "0:1:0")
        assert code == 0
        assert rep["status"] == "success"
        assert rep["results"]["delta"] == 3
        assert rep["results"]["on_curve"] is True

    def test_analyze_point_type(self, capsys):
        code, rep = run(capsys, "analyze-point", "--config",
                        fixture("q4.json"), "--curve", "R2",
                        "--point", "0:1:0")
        assert code == 0
        r = rep["results"]
        assert r["multiplicity"] == 3
        assert r["branches"] == 1
        assert r["type"] == [3, 4]
        assert r["delta"] == 3
        assert r["smooth"] is False

    def test_analyze_point_off_curve(self, capsys):
        code, rep = run(capsys, "analyze-point", "--curve", "z*y - x^2",
                        "--point", "1:1:1")
        assert code == 0
        assert rep["results"]["on_curve"] is False
        assert rep["results"]["multiplicity"] is None

    def test_analyze_inline_curve(self, capsys):
        code, rep = run(capsys, "analyze-point", "--curve", "z*y^2 - x^3",
                        "--point", "0:0:1")
        assert code == 0
        assert rep["results"]["type"] == [2, 3]

    def test_intersect_split(self, capsys):
        code, rep = run(capsys, "intersect", "--config", fixture("q4.json"),
                        "--curve", "Q4", "--curve", "R2")
        assert code == 0
        r = rep["results"]
        assert r["bezout_total"] == 16
        mults = sorted(o["multiplicity"] for o in r["orbits"])
        assert mults == [4, 12]

    def test_intersect_needs_two_curves(self, capsys):
        code, rep = run(capsys, "intersect", "--curve", "x")
        assert code == 2
        assert rep["status"] == "input-error"

    def test_intersect_common_component(self, capsys):
        code, rep = run(capsys, "intersect", "--curve", "x*y",
                        "--curve", "x*z")
        assert code == 2

    def test_genus_rational_companion(self, capsys):
        code, rep = run(capsys, "genus", "--config", fixture("q4.json"),
                        "--curve", "R2")
        assert code == 0
        assert rep["results"]["genus"] == 0
        assert rep["results"]["rational"] is True

    def test_genus_smooth_quintic(self, capsys):
        code, rep = run(capsys, "genus", "--config", fixture("q4.json"),
                        "--curve", "C2")
        assert code == 0
        assert rep["results"]["genus"] == 6

    def test_flexes_of_fermat_cubic(self, capsys):
        code, rep = run(capsys, "flexes", "--curve", "x^3 + y^3 + z^3")
        assert code == 0
        assert rep["results"]["count_geometric"] == 9

    def test_point_literal_rejected(self, capsys):
        code, rep = run(capsys, "delta", "--curve", "z*y - x^2",
                        "--point", "0:0")
        assert code == 2
        assert rep["status"] == "input-error"


class TestMirrorCheck:
    def test_l2_m3_passes(self, capsys):
        code, rep = run(capsys, "mirror-check", "--config",
                        fixture("mirror23.json"), "--curve", "C",
                        "--base", "B", "--point", "0:0:1")
        assert code == 0
        r = rep["results"]
        assert (r["l"], r["m"]) == (2, 3)
        assert r["observed_type"] == [3, 6]
        assert r["delta_observed"] == 13
        assert r["passed"] is True
        assert rep["status"] == "verified"

    def test_l3_m3_passes(self, capsys):
        code, rep = run(capsys, "mirror-check", "--config",
                        fixture("mirror33.json"), "--curve", "C",
                        "--base", "B", "--point", "0:0:1")
        assert code == 0
        assert rep["results"]["observed_type"] == [3, 9]

    def test_precondition_maps_to_input_error(self, capsys):
        code, rep = run(capsys, "mirror-check", "--curve", "z*y - 2*x^2",
                        "--base", "z*y - x^2", "--point", "0:0:1")
        assert code == 2


class TestConfigurationCommands:
    def test_validate_fig42(self, capsys):
        code, rep = run(capsys, "validate-3c", "--config",
                        fixture("fig42.json"))
        assert code == 0
        r = rep["results"]
        assert r["valid"] is True
        assert r["degrees"] == [1, 1, 2]
        assert r["node_count_geometric"] == 5
        assert rep["status"] == "verified"

    def test_validate_rejects_tangency(self, capsys, tmp_path):
        cfg = {"schema": "curvecfg/1", "field": "rationals",
               "curves": {"B1": [[1, 0, 0, "1"]],
                          "B2": [[0, 1, 0, "1"]],
                          "B3": [[0, 1, 1, "1"], [2, 0, 0, "-1"]]},
               "configuration": {"components": ["B1", "B2", "B3"]}}
        p = tmp_path / "tangent.json"
        p.write_text(json.dumps(cfg))
        code, rep = run(capsys, "validate-3c", "--config", str(p))
        assert code == 1
        assert rep["status"] == "verified-negative"
        assert rep["results"]["valid"] is False

    def test_validate_requires_config(self, capsys):
        code, rep = run(capsys, "validate-3c")
        assert code == 2

    def test_hyp_lines_quad4(self, capsys):
        code, rep = run(capsys, "hyp-lines", "--config",
                        fixture("quad4.json"))
        assert code == 0
        r = rep["results"]
        assert r["count"] == 6
        assert r["tangent_at_node_count"] == 4
        assert r["complete"] is True
        assert len(r["certificates"]) == 6

    def test_hyp_search_fig42(self, capsys):
        code, rep = run(capsys, "hyp-search", "--config",
                        fixture("fig42.json"))
        assert code == 0
        r = rep["results"]
        assert r["count"] == 4
        assert r["emptiness"] is None
        assert r["pairs_examined"] == 8
        assert all(c["degree"] == 2 for c in r["certificates"])
        assert all(c["genus"] == 0 for c in r["certificates"])

    def test_hyp_search_seed_invariance(self, capsys):
        one = run(capsys, "hyp-search", "--config", fixture("fig42.json"),
                  "--seed", "1")
        two = run(capsys, "hyp-search", "--config", fixture("fig42.json"),
                  "--seed", "2")
        assert one[0] == two[0] == 0
        assert one[1]["results"] == two[1]["results"]

    def test_hyp_search_exhausted(self, capsys):
        code, rep = run(capsys, "hyp-search", "--config",
                        fixture("cubic113.json"))
        assert code == 1
        assert rep["status"] == "verified-negative"
        assert rep["results"]["emptiness"]["reason"] == "SEARCH_EXHAUSTED"

    def test_hyp_search_budget_exceeded(self, capsys):
        code, rep = run(capsys, "hyp-search", "--config",
                        fixture("cubic113.json"), "--budget-degree", "2")
        assert code == 3
        assert rep["status"] == "budget-exceeded"

    def test_multi_check_four_lines(self, capsys):
        code, rep = run(capsys, "multi-check", "--config",
                        fixture("lines4.json"))
        assert code == 0
        assert rep["results"]["count"] == 3
        assert rep["results"]["high_degree_emptiness"] is not None

    def test_multi_check_five_lines(self, capsys):
        code, rep = run(capsys, "multi-check", "--config",
                        fixture("lines5.json"))
        assert code == 1
        assert rep["results"]["emptiness"]["reason"] == "COMPONENTS_GE_5"

    def test_triangle_pencil(self, capsys):
        code, rep = run(capsys, "triangle-pencil", "--config",
                        fixture("triangle.json"), "--degree", "3")
        assert code == 0
        r = rep["results"]
        assert r["projective_dim"] == 1
        assert r["kernel_dim"] == 2
        assert len(r["samples"]) == 3

    def test_triangle_pencil_rejects_degree_zero(self, capsys):
        code, rep = run(capsys, "triangle-pencil", "--config",
                        fixture("triangle.json"), "--degree", "0")
        assert code == 2


class TestVerifyFixtures:
    def test_all_fixtures_match(self, capsys):
        code, rep = run(capsys, "verify-fixtures", "--dir", FIXTURES)
        assert code == 0
        assert rep["status"] == "verified"
        assert rep["results"]["failures"] == []
        assert rep["results"]["total"] >= 18
        assert rep["results"]["reverified_certificates"] >= 30

    def test_tampered_snapshot_detected(self, capsys, tmp_path):
        import shutil
        clone = tmp_path / "fixtures"
        shutil.copytree(FIXTURES, clone)
        target = clone / "expected" / "q4-delta-vertex.json"
        target.write_text(target.read_text().replace('"delta": 3',
                                                     '"delta": 4'))
        code, rep = run(capsys, "verify-fixtures", "--dir", str(clone))
        assert code == 1
        assert rep["results"]["failures"] == ["q4-delta-vertex"]

    def test_missing_manifest(self, capsys, tmp_path):
        code, rep = run(capsys, "verify-fixtures", "--dir", str(tmp_path))
        assert code == 2


class TestPlot:
    def test_fig42_has_seven_paths(self, capsys):
        code, svg = run(capsys, "plot", "--config", fixture("fig42.json"))
        assert code == 0
        assert svg.count("<path") == 7
        assert 'class="hyperbitangent"' in svg
        assert 'data-chart="y"' in svg

    def test_zero_area_viewport(self, capsys):
        code, rep = run(capsys, "plot", "--config", fixture("fig42.json"),
                        "--viewport", "1:1:0:2")
        assert code == 2

    def test_resolution_out_of_range(self, capsys):
        code, rep = run(capsys, "plot", "--config", fixture("fig42.json"),
                        "--resolution", "1")
        assert code == 2

    def test_plot_without_component_block(self, capsys):
        code, svg = run(capsys, "plot", "--config", fixture("q4.json"),
                        "--resolution", "32")
        assert code == 0
        assert svg.startswith("<?xml")

    def test_deterministic(self, capsys):
        one = run(capsys, "plot", "--config", fixture("quad4.json"),
                  "--resolution", "32")
        two = run(capsys, "plot", "--config", fixture("quad4.json"),
                  "--resolution", "32")
        assert one[1] == two[1]


class TestOutputFile:
    def test_out_writes_report(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code = main(["delta", "--config", fixture("q4.json"),
                     "--curve", "R2", "--point", "0:1:0",
                     "--out", str(path)])
        assert code == 0
        assert capsys.readouterr().out == ""
        rep = json.loads(path.read_text())
        assert rep["results"]["delta"] == 3

    def test_out_directory_missing(self, capsys, tmp_path):
        code = main(["delta", "--curve", "z*y - x^2", "--point", "0:0:1",
                     "--out", str(tmp_path / "no" / "dir" / "r.json")])
        assert code == 2

    def test_reports_are_deterministic(self, capsys):
        one = run(capsys, "hyp-lines", "--config", fixture("quad4.json"))
        two = run(capsys, "hyp-lines", "--config", fixture("quad4.json"))
        assert one == two


class TestArgumentErrors:
    def test_unknown_command(self, capsys):
        # argparse rejects the command; its exit becomes return code 2
        assert main(["frobnicate"]) == 2
        capsys.readouterr()

    def test_bad_budget(self, capsys):
        code, rep = run(capsys, "delta", "--curve", "z*y - x^2",
                        "--point", "0:0:1", "--budget-degree", "0")
        assert code == 2

    def test_bad_field_json(self, capsys):
        code, rep = run(capsys, "genus", "--curve", "x^2 + y^2 - z^2",
                        "--field", "{broken")
        assert code == 2

    def test_echo_hides_machine_paths(self, capsys):
        code, rep = run(capsys, "validate-3c", "--config",
                        fixture("fig42.json"))
        assert rep["arguments"]["config"] == "fig42.json"
