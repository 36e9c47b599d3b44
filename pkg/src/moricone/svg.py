"""Self-contained SVG of the nested cone sections on the plane <lambda, delta>.

A ray ``a lambda - b delta`` (``a >= 0``) is placed on a horizontal axis at

    u = b / (a / 8 + |b|)

which is monotone in the angle of the ray, sends delta to -1 and lambda to 0,
and spreads the interesting slopes (6.5 to 13) apart.  Geometry is written
with three decimals; the exact rays travel in ``data-*`` attributes.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape, quoteattr

from .cones import SectionRays

WIDTH = 640
HEIGHT = 280
LEFT = 40
RIGHT = 600


def chart(ray: tuple[int, int]) -> Fraction:
    a, b = ray
    return Fraction(b) / (Fraction(a, 8) + abs(b))


def _x(u: Fraction) -> str:
    return f"{LEFT + float((u + 1) / 2) * (RIGHT - LEFT):.3f}"


def _ray_attr(ray: tuple[int, int]) -> str:
    return f"{ray[0]},{ray[1]}"


def _label(ray: tuple[int, int]) -> str:
    a, b = ray
    if b == 0:
        return "λ"
    if a == 0:
        return "δ" if b < 0 else "-δ"
    coeff = Fraction(a, b)
    return f"{coeff}λ-δ"


def _bar(name: str, rays: tuple[tuple[int, int], ...], y: int, fill: str) -> list[str]:
    lo, hi = sorted(rays, key=chart)
    x0, x1 = _x(chart(lo)), _x(chart(hi))
    width = f"{float(x1) - float(x0):.3f}"
    return [
        f'<rect x="{x0}" y="{y}" width="{width}" height="18" fill="{fill}" '
        f'fill-opacity="0.35" stroke="black" data-cone="{name}" '
        f'data-from="{_ray_attr(lo)}" data-to="{_ray_attr(hi)}"/>',
        f'<text x="{LEFT - 4}" y="{y + 13}" text-anchor="end">{escape(name)}</text>',
        f'<text x="{x1}" y="{y - 3}" text-anchor="middle">{escape(_label(hi))}</text>',
    ]


def section_svg(s: SectionRays) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">',
        f"<title>Cone sections for genus {s.genus}</title>",
        f'<metadata data-genus="{s.genus}" data-nef-bound={quoteattr(str(s.nef_bound))} '
        f'data-slope={quoteattr("unknown" if s.slope_sg is None else str(s.slope_sg))}/>',
        f'<line x1="{LEFT}" y1="240" x2="{RIGHT}" y2="240" stroke="black"/>',
    ]
    for ray in ((0, -1), (1, 0)):
        x = _x(chart(ray))
        lines.append(f'<line x1="{x}" y1="234" x2="{x}" y2="246" stroke="black"/>')
        lines.append(f'<text x="{x}" y="260" text-anchor="middle">{_label(ray)}</text>')
    y = 30
    if s.psef is not None:
        lines += _bar("psef", s.psef, y, "#9ecae1")
    y += 50
    lines += _bar("mor", s.mor, y, "#fdae6b")
    y += 50
    lines += _bar("nef", s.nef, y, "#a1d99b")
    # the segment 13/(2 - alpha) lambda - delta, alpha in [0, 1]
    seg = ((13, 2), (13, 1))
    x0, x1 = _x(chart(seg[0])), _x(chart(seg[1]))
    lines.append(
        f'<line x1="{x1}" y1="200" x2="{x0}" y2="200" stroke="black" stroke-width="3" '
        f'data-from="13,2" data-to="13,1"/>'
    )
    lines.append(f'<text x="{x1}" y="218" text-anchor="middle">13λ-δ</text>')
    lines.append(f'<text x="{x0}" y="218" text-anchor="middle">13/2λ-δ</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
