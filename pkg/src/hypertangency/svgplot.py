"""SVG rendering of real affine curve traces.

This is the one module that uses floating point, and its output never feeds
back into any exact computation: curves are sampled on a rectangular grid in
the chart z = 1, their zero sets are traced by sign changes (marching squares
with linear interpolation and a center-sample rule for the two ambiguous
cases), and the segments are written as SVG 1.1 paths with fixed four-decimal
coordinates, so a given input always renders to the identical document.

Curves defined over an extension field are drawn through a real embedding
(the smallest real root of the field's minimal polynomial); a field with no
real embedding has an empty real trace, which is reported as a warning, never
an error.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Sequence

import sympy

from .errors import InputError
from .projplane import PlaneCurve

MAX_RESOLUTION = 2048
_SVG_SIZE = 512.0


@dataclass(frozen=True)
class Viewport:
    """Real rectangle of the chart z = 1 shown in the plot."""
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def validated(self) -> "Viewport":
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise InputError("the viewport must have positive area")
        return self


DEFAULT_VIEWPORT = Viewport(-3.0, 3.0, -3.0, 3.0)


def parse_viewport(text: str) -> Viewport:
    parts = text.split(":")
    if len(parts) != 4:
        raise InputError(f'viewport literal is "xmin:xmax:ymin:ymax": {text!r}')
    try:
        values = [float(p) for p in parts]
    except ValueError as exc:
        raise InputError(f"viewport bounds must be numbers: {text!r}") from exc
    return Viewport(*values).validated()


@dataclass
class PlotResult:
    svg: str
    warnings: list[str]
    paths: int
    chart: int


def _real_generator_value(field) -> float | None:
    """Smallest real root of the field's minimal polynomial, or None."""
    if field.is_rationals:
        return 0.0
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i
               for i, c in enumerate(field.minpoly))
    roots = sympy.Poly(expr, t).real_roots()
    if not roots:
        return None
    return float(min(roots).evalf(30))


def _float_terms(C: PlaneCurve, chart: int) -> list[tuple[int, int, float]] | None:
    """Affine equation of the curve in the given chart with float
    coefficients, or None when the coefficient field has no real embedding."""
    gen_value = _real_generator_value(C.field)
    if gen_value is None:
        return None
    affine = C.form.dehomogenize(chart)
    out = []
    for (i, j), c in sorted(affine.terms.items()):
        value = 0.0
        for k in reversed(range(len(c.coords))):
            value = value * gen_value + float(c.coords[k])
        out.append((i, j, value))
    return out


def _choose_chart(curves: Sequence[PlaneCurve]) -> int:
    """First chart (z, then y, then x) in which no curve degenerates to a
    constant, i.e. no curve is the chart's own line at infinity."""
    for chart in (2, 1, 0):
        if all(not C.form.dehomogenize(chart).is_constant() for C in curves):
            return chart
    return 2


def _column_values(terms: Sequence[tuple[int, int, float]], x: float,
                   ys: Sequence[float]) -> array:
    """Values f(x, y) for one grid column, via Horner in y."""
    deg_y = max((j for _i, j, _c in terms), default=0)
    coeffs_y = [0.0] * (deg_y + 1)
    for i, j, c in terms:
        coeffs_y[j] += c * (x ** i)
    vals = array("d", bytes(8 * len(ys)))
    for idx, y in enumerate(ys):
        acc = 0.0
        for k in reversed(range(deg_y + 1)):
            acc = acc * y + coeffs_y[k]
        vals[idx] = acc
    return vals


def _interp(a: float, va: float, b: float, vb: float) -> float:
    denom = va - vb
    if denom == 0.0:
        return 0.5 * (a + b)
    t = va / denom
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return a + t * (b - a)


def _cell_segments(x0, x1, y0, y1, v00, v10, v01, v11):
    """Marching-squares segments for one grid cell.

    Corners are (x0,y0), (x1,y0), (x0,y1), (x1,y1) with sample values v00,
    v10, v01, v11; a corner is "positive" when its value is > 0.  Returns 0,
    1 or 2 segments, each a pair of (x, y) endpoints on the cell edges.
    """
    case = ((1 if v00 > 0.0 else 0)
            | (2 if v10 > 0.0 else 0)
            | (4 if v11 > 0.0 else 0)
            | (8 if v01 > 0.0 else 0))
    if case in (0, 15):
        return []
    bottom = (_interp(x0, v00, x1, v10), y0)
    top = (_interp(x0, v01, x1, v11), y1)
    left = (x0, _interp(y0, v00, y1, v01))
    right = (x1, _interp(y0, v10, y1, v11))
    table = {
        1: [(left, bottom)], 14: [(left, bottom)],
        2: [(bottom, right)], 13: [(bottom, right)],
        3: [(left, right)], 12: [(left, right)],
        4: [(right, top)], 11: [(right, top)],
        6: [(bottom, top)], 9: [(bottom, top)],
        7: [(left, top)], 8: [(left, top)],
    }
    if case in table:
        return table[case]
    center = 0.25 * (v00 + v10 + v01 + v11)
    if case == 5:   # v00, v11 positive
        if center > 0.0:
            return [(left, top), (bottom, right)]
        return [(left, bottom), (right, top)]
    # case 10: v10, v01 positive
    if center > 0.0:
        return [(left, bottom), (right, top)]
    return [(left, top), (bottom, right)]


def _trace_segments(terms, viewport: Viewport, resolution: int):
    """All marching-squares segments of the zero set on the grid, in scan
    order."""
    n = resolution
    xs = [viewport.xmin + (viewport.xmax - viewport.xmin) * i / (n - 1)
          for i in range(n)]
    ys = [viewport.ymin + (viewport.ymax - viewport.ymin) * j / (n - 1)
          for j in range(n)]
    # Sample column-by-column; only two columns are alive at a time, so
    # memory stays linear in the resolution.
    segments = []
    prev = _column_values(terms, xs[0], ys)
    for i in range(n - 1):
        cur = _column_values(terms, xs[i + 1], ys)
        for j in range(n - 1):
            segs = _cell_segments(xs[i], xs[i + 1], ys[j], ys[j + 1],
                                  prev[j], cur[j], prev[j + 1], cur[j + 1])
            segments.extend(segs)
        prev = cur
    return segments


def _svg_coords(pt, viewport: Viewport) -> tuple[float, float]:
    sx = (pt[0] - viewport.xmin) / (viewport.xmax - viewport.xmin) * _SVG_SIZE
    sy = _SVG_SIZE - (pt[1] - viewport.ymin) / (viewport.ymax - viewport.ymin) * _SVG_SIZE
    return sx, sy


def _path_data(segments, viewport: Viewport) -> str:
    pieces = []
    for a, b in segments:
        ax, ay = _svg_coords(a, viewport)
        bx, by = _svg_coords(b, viewport)
        pieces.append(f"M {ax:.4f} {ay:.4f} L {bx:.4f} {by:.4f}")
    return " ".join(pieces)


_STYLE = """\
    .base { stroke: #1f4e8c; stroke-width: 1.5; fill: none; }
    .hyperbitangent { stroke: #c0392b; stroke-width: 1.2; fill: none; stroke-dasharray: 6 3; }"""


def render_plot(base_curves: Sequence[tuple[str, PlaneCurve]],
                overlay_curves: Sequence[tuple[str, PlaneCurve]] = (),
                viewport: Viewport = DEFAULT_VIEWPORT,
                resolution: int = 128) -> PlotResult:
    """SVG document with the real traces of the named curves.

    The affine chart is chosen automatically: the first of z = 1, y = 1,
    x = 1 in which no input curve is the line at infinity itself.  Base
    curves render in the "base" stroke class and overlay curves (found
    hyper-bitangent members) in the "hyperbitangent" class; each curve with
    a nonempty trace contributes exactly one path element.
    """
    viewport = viewport.validated()
    if not isinstance(resolution, int) or resolution < 2 or resolution > MAX_RESOLUTION:
        raise InputError(
            f"resolution must be an integer in [2, {MAX_RESOLUTION}]")
    chart = _choose_chart([C for _n, C in list(base_curves) + list(overlay_curves)])
    warnings: list[str] = []
    body: list[str] = []
    paths = 0
    for css_class, pairs in (("base", base_curves),
                             ("hyperbitangent", overlay_curves)):
        for name, C in pairs:
            terms = _float_terms(C, chart)
            if terms is None:
                warnings.append(
                    f"curve {name!r}: coefficient field has no real "
                    f"embedding; trace omitted")
                continue
            segments = _trace_segments(terms, viewport, resolution)
            if not segments:
                warnings.append(f"curve {name!r}: no real trace in the viewport")
                continue
            data = _path_data(segments, viewport)
            body.append(f'  <path class="{css_class}" data-name="{name}" '
                        f'd="{data}"/>')
            paths += 1
    size = f"{_SVG_SIZE:.0f}"
    chart_name = "xyz"[chart]
    doc = "\n".join([
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}" '
        f'data-chart="{chart_name}">',
        "  <style>",
        _STYLE,
        "  </style>",
        *body,
        "</svg>",
        "",
    ])
    return PlotResult(svg=doc, warnings=warnings, paths=paths, chart=chart)
