#!/usr/bin/env python3
"""Regenerate the fixture configurations, manifest, and expected snapshots.

Run from the repository root:

    python3 scripts/make_fixtures.py

Every configuration is written as an exact curvecfg/1 file, the manifest
lists one entry per pinned command, and each entry's expected output is
produced by running the command in-process and storing its bytes.  The
``verify-fixtures`` subcommand replays the manifest and compares.
"""
from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hypertangency.cli import _run, report_to_text  # noqa: E402
from hypertangency.configio import config_to_json, parse_config_text  # noqa: E402
from hypertangency.fields import QQ  # noqa: E402
from hypertangency.poly import parse_poly  # noqa: E402
from hypertangency.projplane import PlaneCurve  # noqa: E402

FIXDIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def _config(curves: dict[str, str], components: list[str] | None) -> dict:
    from hypertangency.configio import CurveConfig

    built = {name: PlaneCurve(parse_poly(text, 3, QQ))
             for name, text in curves.items()}
    cfg = CurveConfig(field=QQ, curves=built,
                      components=tuple(components) if components else None)
    return config_to_json(cfg)


CONFIGS = {
    "fig42.json": _config(
        {"B1": "x", "B2": "z", "B3": "z*y - x^2 + y^2"},
        ["B1", "B2", "B3"]),
    "quad4.json": _config(
        {"B1": "x", "B2": "y", "B3": "x^2 + y^2 - z^2"},
        ["B1", "B2", "B3"]),
    "triangle.json": _config(
        {"L1": "x", "L2": "y", "L3": "z"},
        ["L1", "L2", "L3"]),
    "lines4.json": _config(
        {"L1": "x", "L2": "y", "L3": "z", "L4": "x + y + z"},
        ["L1", "L2", "L3", "L4"]),
    "lines5.json": _config(
        {"L1": "x", "L2": "y", "L3": "z", "L4": "x + y + z",
         "L5": "x - y + 2*z"},
        ["L1", "L2", "L3", "L4", "L5"]),
    "cubic113.json": _config(
        {"B1": "x", "B2": "y", "B3": "x^3 + y^3 + 3*z^3 + 2*x*y*z"},
        ["B1", "B2", "B3"]),
    "q4.json": _config(
        {"Q4": "z^3*y - x^4",
         "C2": "2*y^5 - x^4*z + y*z^4",
         "R2": "y*z^3 - 2*x^4"},
        None),
    "mirror23.json": _config(
        {"B": "z*y - x^2",
         "C": "z*(z*y - x^2)^3 + y^7"},
        None),
    "mirror33.json": _config(
        {"B": "z^2*y - x^3",
         "C": "z^2*(y*z^2 - x^3)^3 + 3*x^2*y^3*(y*z^2 - x^3)^2"
              " + 3*x*y^7*(y*z^2 - x^3) + y^11"},
        None),
}

# argv paths are relative to the fixture directory; verify-fixtures joins
# them before running.
ENTRIES = [
    {"name": "fig42-validate",
     "argv": ["validate-3c", "--config", "fig42.json"],
     "expected": "expected/fig42-validate.json", "exit_code": 0},
    {"name": "fig42-hyp-lines",
     "argv": ["hyp-lines", "--config", "fig42.json"],
     "expected": "expected/fig42-hyp-lines.json", "exit_code": 0},
    {"name": "fig42-hyp-search",
     "argv": ["hyp-search", "--config", "fig42.json"],
     "expected": "expected/fig42-hyp-search.json", "exit_code": 0},
    {"name": "fig42-plot",
     "argv": ["plot", "--config", "fig42.json"],
     "expected": "expected/fig42-plot.svg", "exit_code": 0},
    {"name": "quad4-validate",
     "argv": ["validate-3c", "--config", "quad4.json"],
     "expected": "expected/quad4-validate.json", "exit_code": 0},
    {"name": "quad4-hyp-lines",
     "argv": ["hyp-lines", "--config", "quad4.json"],
     "expected": "expected/quad4-hyp-lines.json", "exit_code": 0},
    {"name": "triangle-pencil-d2",
     "argv": ["triangle-pencil", "--config", "triangle.json", "--degree", "2"],
     "expected": "expected/triangle-pencil-d2.json", "exit_code": 0},
    {"name": "lines4-multi",
     "argv": ["multi-check", "--config", "lines4.json"],
     "expected": "expected/lines4-multi.json", "exit_code": 0},
    {"name": "lines5-multi",
     "argv": ["multi-check", "--config", "lines5.json"],
     "expected": "expected/lines5-multi.json", "exit_code": 1},
    {"name": "cubic113-search",
     "argv": ["hyp-search", "--config", "cubic113.json"],
     "expected": "expected/cubic113-search.json", "exit_code": 1},
    {"name": "q4-delta-vertex",
     "argv": ["delta", "--config", "q4.json", "--curve", "R2",
              "--point", "0:1:0"],
     "expected": "expected/q4-delta-vertex.json", "exit_code": 0},
    {"name": "q4-analyze-vertex",
     "argv": ["analyze-point", "--config", "q4.json", "--curve", "R2",
              "--point", "0:1:0"],
     "expected": "expected/q4-analyze-vertex.json", "exit_code": 0},
    {"name": "q4-genus-companion",
     "argv": ["genus", "--config", "q4.json", "--curve", "R2"],
     "expected": "expected/q4-genus-companion.json", "exit_code": 0},
    {"name": "q4-genus-tangent-member",
     "argv": ["genus", "--config", "q4.json", "--curve", "C2"],
     "expected": "expected/q4-genus-tangent-member.json", "exit_code": 0},
    {"name": "q4-intersect-split",
     "argv": ["intersect", "--config", "q4.json", "--curve", "Q4",
              "--curve", "R2"],
     "expected": "expected/q4-intersect-split.json", "exit_code": 0},
    {"name": "mirror23-check",
     "argv": ["mirror-check", "--config", "mirror23.json", "--curve", "C",
              "--base", "B", "--point", "0:0:1"],
     "expected": "expected/mirror23-check.json", "exit_code": 0},
    {"name": "mirror33-check",
     "argv": ["mirror-check", "--config", "mirror33.json", "--curve", "C",
              "--base", "B", "--point", "0:0:1"],
     "expected": "expected/mirror33-check.json", "exit_code": 0},
    {"name": "fermat-flexes",
     "argv": ["flexes", "--curve", "x^3 + y^3 + z^3"],
     "expected": "expected/fermat-flexes.json", "exit_code": 0},
]


def main() -> int:
    os.makedirs(os.path.join(FIXDIR, "expected"), exist_ok=True)
    for fname, obj in CONFIGS.items():
        text = json.dumps(obj, indent=2) + "\n"
        parse_config_text(text)  # round-trip sanity before writing
        with open(os.path.join(FIXDIR, fname), "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {fname}")
    manifest = {"schema": "fixturemanifest/1", "entries": ENTRIES}
    with open(os.path.join(FIXDIR, "manifest.json"), "w",
              encoding="utf-8") as fh:
        fh.write(json.dumps(manifest, indent=2) + "\n")
    print("wrote manifest.json")
    bad = 0
    for entry in ENTRIES:
        argv = list(entry["argv"])
        for i, piece in enumerate(argv):
            if piece == "--config" and i + 1 < len(argv):
                argv[i + 1] = os.path.join(FIXDIR, argv[i + 1])
        _args, kind, payload, code = _run(argv)
        text = payload if kind == "svg" else report_to_text(payload)
        if code != entry["exit_code"]:
            print(f"  {entry['name']}: exit code {code}, expected "
                  f"{entry['exit_code']}")
            bad += 1
        with open(os.path.join(FIXDIR, entry["expected"]), "w",
                  encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {entry['expected']} ({len(text)} bytes, exit {code})")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
