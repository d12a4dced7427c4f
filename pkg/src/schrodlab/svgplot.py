"""Minimal self-contained SVG log-log plots (no plotting dependency).

Each plot embeds its data table in an XML comment so the artifact is
reproducible from the file alone.
"""

import math

_W, _H, _PAD = 640, 440, 60


def _ticks(lo, hi):
    lo_e = math.floor(math.log10(lo))
    hi_e = math.ceil(math.log10(hi))
    return [10.0**e for e in range(lo_e, hi_e + 1)]


def loglog_plot(points, fit=None, title="", xlabel="scale", ylabel="value"):
    """points: [(x, y)] positive pairs; fit: ExponentFit or None."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    lx = [math.log10(v) for v in xs]
    ly = [math.log10(v) for v in ys]
    x0, x1 = min(lx) - 0.15, max(lx) + 0.15
    y0, y1 = min(ly) - 0.15, max(ly) + 0.15

    def X(v):
        return _PAD + (v - x0) / (x1 - x0) * (_W - 2 * _PAD)

    def Y(v):
        return _H - _PAD - (v - y0) / (y1 - y0) * (_H - 2 * _PAD)

    rows = ["<!-- data"]
    for x, y in points:
        rows.append(f"  {x:.12g} {y:.12g}")
    if fit is not None:
        rows.append(f"  fit slope={fit.slope:.12g} intercept={fit.intercept:.12g}")
    rows.append("-->")

    svg = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        "\n".join(rows),
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W/2}" y="24" text-anchor="middle" font-size="15">{title}</text>',
        f'<text x="{_W/2}" y="{_H-12}" text-anchor="middle" font-size="12">{xlabel} (log)</text>',
        f'<text x="16" y="{_H/2}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 16 {_H/2})">{ylabel} (log)</text>',
        f'<rect x="{_PAD}" y="{_PAD}" width="{_W-2*_PAD}" height="{_H-2*_PAD}" '
        'fill="none" stroke="black"/>',
    ]
    for t in _ticks(min(xs), max(xs)):
        v = math.log10(t)
        if x0 <= v <= x1:
            svg.append(
                f'<line x1="{X(v):.1f}" y1="{_PAD}" x2="{X(v):.1f}" y2="{_H-_PAD}" '
                'stroke="#ddd"/>'
            )
            svg.append(
                f'<text x="{X(v):.1f}" y="{_H-_PAD+16}" text-anchor="middle" '
                f'font-size="10">{t:g}</text>'
            )
    for t in _ticks(min(ys), max(ys)):
        v = math.log10(t)
        if y0 <= v <= y1:
            svg.append(
                f'<line x1="{_PAD}" y1="{Y(v):.1f}" x2="{_W-_PAD}" y2="{Y(v):.1f}" '
                'stroke="#ddd"/>'
            )
            svg.append(
                f'<text x="{_PAD-6}" y="{Y(v):.1f}" text-anchor="end" '
                f'font-size="10">{t:g}</text>'
            )
    if fit is not None:
        ly0 = (fit.intercept + fit.slope * x0 * math.log(10)) / math.log(10)
        ly1 = (fit.intercept + fit.slope * x1 * math.log(10)) / math.log(10)
        svg.append(
            f'<line x1="{X(x0):.1f}" y1="{Y(ly0):.1f}" x2="{X(x1):.1f}" '
            f'y2="{Y(ly1):.1f}" stroke="#c33" stroke-width="1.5"/>'
        )
        svg.append(
            f'<text x="{_W-_PAD}" y="{_PAD-8}" text-anchor="end" font-size="12" '
            f'fill="#c33">slope {fit.slope:.4f}</text>'
        )
    for vx, vy in zip(lx, ly):
        svg.append(
            f'<circle cx="{X(vx):.1f}" cy="{Y(vy):.1f}" r="4" fill="#246" '
            'fill-opacity="0.85"/>'
        )
    svg.append("</svg>")
    return "\n".join(svg)
