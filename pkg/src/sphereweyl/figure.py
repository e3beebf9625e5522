"""Hand-written SVG of the counting step function against the Weyl curve."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from . import __version__
from .sphere_spectrum import check_dim, counting_closed_form
from .weyl_compare import weyl_value

WIDTH, HEIGHT = 640, 440
LEFT, RIGHT, TOP, BOTTOM = 80, 20, 40, 60
SAMPLES = 400
SCI_THRESHOLD = 1e4

GENERATOR_COMMENT = f"<!-- generator: sphereweyl {__version__} -->"


def _nice_step(span: float, target: int = 6) -> float:
    raw = span / target
    mag = 10 ** math.floor(math.log10(raw))
    for f in (1, 2, 5, 10):
        if f * mag >= raw:
            return f * mag
    return 10 * mag


def _ticks(hi: float) -> list[float]:
    step = _nice_step(hi)
    return [i * step for i in range(int(hi / step + 1e-9) + 1)]


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    return f"{v:g}"


def render_counting_plot(n: int, k_max: int, data_csv: str = "") -> str:
    """SVG with N as right-continuous steps at v_0..v_kmax and w sampled densely.

    The x range is ``[0, v_{k_max+1}]``. Above ``SCI_THRESHOLD`` the vertical
    axis is labelled in units of ``10**e``. ``data_csv`` is embedded verbatim
    in the metadata element.
    """
    check_dim(n)
    nodes = [k * (k + n - 1) for k in range(k_max + 2)]
    levels = [counting_closed_form(n, k) for k in range(k_max + 1)]
    x_max = float(nodes[-1])
    y_max = max(float(levels[-1]), weyl_value(n, x_max))

    exponent = int(math.floor(math.log10(y_max))) if y_max >= SCI_THRESHOLD else 0
    unit = 10.0 ** exponent
    y_top = y_max / unit * 1.05

    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM

    def sx(x: float) -> float:
        return LEFT + pw * x / x_max

    def sy(y: float) -> float:
        return TOP + ph * (1 - (y / unit) / y_top)

    # right-continuous steps: horizontal from v_k to v_{k+1}, then a vertical jump
    step_pts = []
    for k, level in enumerate(levels):
        step_pts.append((sx(nodes[k]), sy(level)))
        step_pts.append((sx(nodes[k + 1]), sy(level)))
    step_path = "M" + " L".join(f"{_fmt(x)},{_fmt(y)}" for x, y in step_pts)

    xs = sorted({x_max * i / SAMPLES for i in range(SAMPLES + 1)} | {float(v) for v in nodes})
    weyl_path = "M" + " L".join(f"{_fmt(sx(x))},{_fmt(sy(weyl_value(n, x)))}" for x in xs)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        GENERATOR_COMMENT,
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" data-dim="{n}" data-kmax="{k_max}" data-ymax="{y_max:.6e}">',
        f"<title>Counting function and Weyl function of S^{n}</title>",
    ]
    if data_csv:
        out.append(f"<metadata><![CDATA[\n{data_csv}]]></metadata>")
    out.append('<rect x="0" y="0" width="100%" height="100%" fill="white"/>')

    axis = []
    x0, y0 = sx(0), sy(0)
    axis.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(sx(x_max))}" y2="{_fmt(y0)}" stroke="black"/>')
    axis.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x0)}" y2="{_fmt(TOP)}" stroke="black"/>')
    for t in _ticks(x_max):
        axis.append(f'<line x1="{_fmt(sx(t))}" y1="{_fmt(y0)}" x2="{_fmt(sx(t))}" y2="{_fmt(y0 + 5)}" stroke="black"/>')
        axis.append(f'<text x="{_fmt(sx(t))}" y="{_fmt(y0 + 18)}" font-size="11" text-anchor="middle">{_tick_label(t)}</text>')
    for t in _ticks(y_top):
        y = TOP + ph * (1 - t / y_top)
        axis.append(f'<line x1="{_fmt(x0 - 5)}" y1="{_fmt(y)}" x2="{_fmt(x0)}" y2="{_fmt(y)}" stroke="black"/>')
        axis.append(f'<text x="{_fmt(x0 - 8)}" y="{_fmt(y + 4)}" font-size="11" text-anchor="end">{_tick_label(t)}</text>')
    axis.append(f'<text x="{_fmt(LEFT + pw / 2)}" y="{HEIGHT - 15}" font-size="13" text-anchor="middle">x</text>')
    y_label = "N(x), w(x)" + (f" (units of 10^{exponent})" if exponent else "")
    axis.append(f'<text x="18" y="{_fmt(TOP + ph / 2)}" font-size="13" text-anchor="middle" '
                f'transform="rotate(-90 18 {_fmt(TOP + ph / 2)})">{escape(y_label)}</text>')
    out.extend(axis)

    out.append(f'<path id="counting" d="{step_path}" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>')
    out.append(f'<path id="weyl" d="{weyl_path}" fill="none" stroke="#c0392b" stroke-width="1.2"/>')
    out.append(f'<text x="{LEFT + 10}" y="{TOP - 12}" font-size="12">'
               f'<tspan fill="#1f4e9c">N (counting)</tspan>  <tspan fill="#c0392b">w (Weyl)</tspan>'
               f'  S^{n}, k &#8804; {k_max}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def embedded_csv(svg: str) -> str:
    """Extract the CSV carried in the metadata element, or ''."""
    start = svg.find("<![CDATA[\n")
    if start < 0:
        return ""
    end = svg.index("]]>", start)
    return svg[start + len("<![CDATA[\n"):end]
