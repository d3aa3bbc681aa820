"""Minimal hand-rolled SVG polyline plot on log-log axes.

A convenience output, not a plotting library: one curve, decade grid lines,
an optional marker at a highlighted point.  All coordinates are formatted
with fixed precision so the output is byte-stable.
"""

import math

__all__ = ["log_log_curve_svg"]

_MARGIN = 56.0


def _fmt(v):
    return f"{v:.2f}"


def log_log_curve_svg(points, marker=None, width=720, height=480,
                      x_label="c", y_label="MN(c)", title=""):
    """Render (x, y) samples with positive coordinates as an SVG document."""
    finite = [(x, y) for x, y in points if x > 0 and y > 0 and math.isfinite(y)]
    if len(finite) < 2:
        raise ValueError("need at least two positive finite points to plot")
    lx = [math.log10(x) for x, _ in finite]
    ly = [math.log10(y) for _, y in finite]
    x0, x1 = min(lx), max(lx)
    y0, y1 = min(ly), max(ly)
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    pad_x = 0.02 * (x1 - x0)
    pad_y = 0.05 * (y1 - y0)
    x0, x1 = x0 - pad_x, x1 + pad_x
    y0, y1 = y0 - pad_y, y1 + pad_y

    def to_px(u, v):
        px = _MARGIN + (u - x0) / (x1 - x0) * (width - 2 * _MARGIN)
        py = height - _MARGIN - (v - y0) / (y1 - y0) * (height - 2 * _MARGIN)
        return px, py

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>')
    out.append(
        f'<rect x="{_fmt(_MARGIN)}" y="{_fmt(_MARGIN)}" '
        f'width="{_fmt(width - 2 * _MARGIN)}" height="{_fmt(height - 2 * _MARGIN)}" '
        f'fill="none" stroke="black"/>'
    )
    # Decade grid lines with power-of-ten labels.
    for dec in range(math.ceil(x0), math.floor(x1) + 1):
        px, _ = to_px(dec, y0)
        out.append(
            f'<line x1="{_fmt(px)}" y1="{_fmt(_MARGIN)}" x2="{_fmt(px)}" '
            f'y2="{_fmt(height - _MARGIN)}" stroke="#cccccc"/>'
        )
        out.append(
            f'<text x="{_fmt(px)}" y="{_fmt(height - _MARGIN + 18)}" font-size="11" '
            f'text-anchor="middle">1e{dec}</text>'
        )
    for dec in range(math.ceil(y0), math.floor(y1) + 1):
        _, py = to_px(x0, dec)
        out.append(
            f'<line x1="{_fmt(_MARGIN)}" y1="{_fmt(py)}" x2="{_fmt(width - _MARGIN)}" '
            f'y2="{_fmt(py)}" stroke="#cccccc"/>'
        )
        out.append(
            f'<text x="{_fmt(_MARGIN - 6)}" y="{_fmt(py + 4)}" font-size="11" '
            f'text-anchor="end">1e{dec}</text>'
        )
    coords = " ".join(
        f"{_fmt(px)},{_fmt(py)}" for px, py in (to_px(u, v) for u, v in zip(lx, ly))
    )
    out.append(f'<polyline points="{coords}" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>')
    if marker is not None:
        mx, my = marker
        if mx > 0 and my > 0:
            px, py = to_px(math.log10(mx), math.log10(my))
            out.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="4" fill="#c0392b"/>')
            out.append(
                f'<text x="{_fmt(px + 8)}" y="{_fmt(py - 8)}" font-size="11">'
                f"c={mx:.6g}</text>"
            )
    if title:
        out.append(
            f'<text x="{_fmt(width / 2)}" y="24" font-size="14" text-anchor="middle">{title}</text>'
        )
    out.append(
        f'<text x="{_fmt(width / 2)}" y="{_fmt(height - 12)}" font-size="12" '
        f'text-anchor="middle">{x_label}</text>'
    )
    out.append(
        f'<text x="16" y="{_fmt(height / 2)}" font-size="12" text-anchor="middle" '
        f'transform="rotate(-90 16 {_fmt(height / 2)})">{y_label}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
