"""Tests for the float-only SVG renderer."""
from fractions import Fraction

import pytest

from hypertangency.errors import InputError
from hypertangency.fields import QQ, NumberField
from hypertangency.poly import parse_poly
from hypertangency.projplane import PlaneCurve
from hypertangency.svgplot import (
    DEFAULT_VIEWPORT,
    MAX_RESOLUTION,
    Viewport,
    parse_viewport,
    render_plot,
)


def curve(text, field=QQ):
    return PlaneCurve(parse_poly(text, 3, field))


class TestViewport:
    def test_parse(self):
        v = parse_viewport("-2:2:-1:1")
        assert (v.xmin, v.xmax, v.ymin, v.ymax) == (-2.0, 2.0, -1.0, 1.0)

    def test_parse_rejects_shape(self):
        with pytest.raises(InputError):
            parse_viewport("-2:2:-1")
        with pytest.raises(InputError):
            parse_viewport("a:b:c:d")

    def test_zero_area_rejected(self):
        with pytest.raises(InputError, match="positive area"):
            Viewport(1.0, 1.0, 0.0, 2.0).validated()
        with pytest.raises(InputError, match="positive area"):
            parse_viewport("0:2:3:3")

    def test_reversed_bounds_rejected(self):
        with pytest.raises(InputError, match="positive area"):
            parse_viewport("2:-2:0:1")


class TestRenderBasics:
    def test_single_line(self):
        out = render_plot([("L", curve("x"))])
        assert out.paths == 1
        assert out.chart == 2
        assert 'data-chart="z"' in out.svg
        assert out.svg.count("<path") == 1
        assert 'class="base"' in out.svg
        assert out.svg.startswith('<?xml version="1.0"')
        assert not out.warnings

    def test_resolution_bounds(self):
        with pytest.raises(InputError, match="resolution"):
            render_plot([("L", curve("x"))], resolution=1)
        with pytest.raises(InputError, match="resolution"):
            render_plot([("L", curve("x"))], resolution=MAX_RESOLUTION + 1)
        with pytest.raises(InputError, match="resolution"):
            render_plot([("L", curve("x"))], resolution=2.5)

    def test_deterministic(self):
        curves = [("A", curve("x^2 + y^2 - z^2")), ("B", curve("z*y - x^2"))]
        one = render_plot(curves, resolution=32)
        two = render_plot(curves, resolution=32)
        assert one.svg == two.svg

    def test_overlay_stroke_class(self):
        out = render_plot([("A", curve("x"))],
                          [("M", curve("z*y - x^2"))], resolution=32)
        assert 'class="hyperbitangent"' in out.svg
        assert out.paths == 2

    def test_coordinates_have_four_decimals(self):
        out = render_plot([("L", curve("x - y"))], resolution=16)
        assert " 0.0000" in out.svg or "512.0000" in out.svg


class TestChartSelection:
    def test_line_at_infinity_moves_the_chart(self):
        # z = 0 is invisible in the chart z = 1; the renderer must pick
        # another chart so that every named curve can appear.
        out = render_plot([("B1", curve("x")), ("B2", curve("z")),
                           ("B3", curve("z*y - x^2 + y^2"))], resolution=32)
        assert out.chart == 1
        assert 'data-chart="y"' in out.svg
        assert out.paths == 3

    def test_default_chart_is_z(self):
        out = render_plot([("A", curve("x + y + z"))], resolution=16)
        assert out.chart == 2


class TestTraces:
    def test_conic_off_viewport_warns(self):
        v = Viewport(10.0, 20.0, 10.0, 20.0)
        out = render_plot([("circle", curve("x^2 + y^2 - z^2"))],
                          viewport=v, resolution=32)
        assert out.paths == 0
        assert any("no real trace" in w for w in out.warnings)

    def test_field_without_real_embedding_warns(self):
        K = NumberField([Fraction(1), Fraction(0), Fraction(1)], "i")
        C = curve("x^2 + y^2 + i*z^2", K)
        out = render_plot([("C", C)], resolution=16)
        assert out.paths == 0
        assert any("real embedding" in w for w in out.warnings)

    def test_real_embedding_used(self):
        # s = sqrt(2): the circle x^2 + y^2 = s^2 has a real trace
        K = NumberField([Fraction(-2), Fraction(0), Fraction(1)], "s")
        C = curve("x^2 + y^2 - s^2*z^2", K)
        out = render_plot([("C", C)], resolution=48)
        assert out.paths == 1
        assert not out.warnings

    def test_circle_trace_stays_near_unit_radius(self):
        out = render_plot([("c", curve("x^2 + y^2 - z^2"))],
                          viewport=Viewport(-2.0, 2.0, -2.0, 2.0),
                          resolution=128)
        import re
        data = re.search(r'd="([^"]+)"', out.svg).group(1)
        pts = [(float(a), float(b)) for a, b in
               re.findall(r"[ML] ([0-9.]+) ([0-9.]+)", data)]
        assert pts
        for sx, sy in pts:
            # map back from svg pixels to the affine plane
            x = -2.0 + (sx / 512.0) * 4.0
            y = 2.0 - (sy / 512.0) * 4.0
            r = (x * x + y * y) ** 0.5
            assert abs(r - 1.0) < 0.08

    def test_nodal_cubic_renders(self):
        out = render_plot([("n", curve("z*y^2 - x^2*z - x^3"))],
                          resolution=64)
        assert out.paths == 1


class TestDefaults:
    def test_default_viewport(self):
        assert (DEFAULT_VIEWPORT.xmin, DEFAULT_VIEWPORT.xmax) == (-3.0, 3.0)
        assert (DEFAULT_VIEWPORT.ymin, DEFAULT_VIEWPORT.ymax) == (-3.0, 3.0)
