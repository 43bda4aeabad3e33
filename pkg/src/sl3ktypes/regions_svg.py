"""SVG rendering of the lattice region picture.

Drawn directly as SVG text (no plotting dependency) so tests can assert
on element counts deterministically: one circle per point of C colored
by region, one cross path per excluded lattice point, two boundary
lines, and one projected-count label per n.
"""

from __future__ import annotations

from .positive import Region, RegionPoint, classify, fiber_count

PITCH = 20
MARGIN = 40

REGION_COLORS = {
    Region.FULL_FLAG: "#1f77b4",
    Region.O1: "#2ca02c",
    Region.O2: "#ff7f0e",
    Region.CLOSED_ORBIT: "#d62728",
}


def render_regions_svg(a: int, b: int, n_max: int) -> str:
    """The region diagram for twist (a, b) over the grid 0 <= c, d <= n_max."""
    if a < 0 or b < 0 or n_max < 0:
        raise ValueError("parameters must be nonnegative")

    def x(c: int) -> int:
        return MARGIN + PITCH * c

    def y(d: int) -> int:
        return MARGIN + PITCH * (n_max - d)

    width = 2 * MARGIN + PITCH * n_max
    height = 2 * MARGIN + PITCH * n_max + PITCH  # room for count labels
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<title>region diagram (a,b)=({a},{b})</title>',
    ]

    # Region boundaries at c = a and d = b (drawn between lattice lines).
    bx = x(a) + PITCH // 2
    by = y(b) - PITCH // 2
    parts.append(
        f'<line class="boundary" x1="{bx}" y1="{y(n_max)}" x2="{bx}" '
        f'y2="{y(0)}" stroke="black"/>')
    parts.append(
        f'<line class="boundary" x1="{x(0)}" y1="{by}" x2="{x(n_max)}" '
        f'y2="{by}" stroke="black"/>')

    for c in range(n_max + 1):
        for d in range(n_max + 1):
            region = classify(RegionPoint(c, d), a, b)
            px, py = x(c), y(d)
            if region is Region.NOT_IN_C:
                r = 4
                parts.append(
                    f'<path class="excluded" stroke="#8b5a2b" d="M{px - r} '
                    f'{py - r} L{px + r} {py + r} M{px - r} {py + r} '
                    f'L{px + r} {py - r}"/>')
            else:
                parts.append(
                    f'<circle class="pt {region.value}" cx="{px}" cy="{py}" '
                    f'r="5" fill="{REGION_COLORS[region]}"/>')

    # Projected fiber counts along the horizontal axis.
    label_y = y(0) + PITCH
    for n in range(n_max + 1):
        parts.append(
            f'<text class="count" x="{x(n)}" y="{label_y}" '
            f'text-anchor="middle" font-size="10">{fiber_count(a, b, n)}</text>')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
