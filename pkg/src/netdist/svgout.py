"""SVG rendering of unfolded face paths with geodesic overlays.

One group per minimizing face path: face outlines with labels, corner
labels as face triples, the geodesic polyline and endpoint markers.  The
document uses y-down coordinates with a single global flip applied when
emitting, so renders match the upper-half-plane chart convention visually.
"""

from __future__ import annotations

from .distance import DistanceResult
from .model import PolyhedronModel
from .unfold import cached_unfolding

_GAP = 0.6


def _fmt(v: float) -> str:
    return f"{v:.6f}"


class _Doc:
    def __init__(self) -> None:
        self.parts: list[str] = []
        self.min_x = self.min_y = self.max_x = self.max_y = None

    def cover(self, x: float, y: float) -> None:
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
        else:
            self.min_x = min(self.min_x, x)
            self.max_x = max(self.max_x, x)
            self.min_y = min(self.min_y, y)
            self.max_y = max(self.max_y, y)

    def polygon(self, pts, stroke="#444444", fill="#f5f5f5") -> None:
        for x, y in pts:
            self.cover(x, y)
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        self.parts.append(
            f'<polygon points="{coords}" fill="{fill}" stroke="{stroke}" '
            'stroke-width="0.012"/>'
        )

    def polyline(self, pts, stroke="#cc2222") -> None:
        for x, y in pts:
            self.cover(x, y)
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        self.parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{stroke}" '
            'stroke-width="0.025"/>'
        )

    def circle(self, x: float, y: float, r: float = 0.035, fill="#cc2222") -> None:
        self.cover(x - r, y - r)
        self.cover(x + r, y + r)
        self.parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}" fill="{fill}"/>'
        )

    def text(self, x: float, y: float, s: str, size: float = 0.12,
             fill="#222222") -> None:
        self.cover(x, y)
        self.parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{_fmt(size)}" '
            f'fill="{fill}" text-anchor="middle" '
            f'font-family="sans-serif">{s}</text>'
        )

    def open_group(self, ident: str) -> None:
        self.parts.append(f'<g id="{ident}">')

    def close_group(self) -> None:
        self.parts.append("</g>")

    def document(self) -> str:
        if self.min_x is None:
            self.min_x = self.min_y = 0.0
            self.max_x = self.max_y = 1.0
        margin = 0.05 * max(self.max_x - self.min_x, self.max_y - self.min_y, 1.0)
        x0 = self.min_x - margin
        y0 = self.min_y - margin
        w = self.max_x - self.min_x + 2.0 * margin
        h = self.max_y - self.min_y + 2.0 * margin
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">'
        )
        return "\n".join([head, *self.parts, "</svg>"]) + "\n"


def render_svg(model: PolyhedronModel, result: DistanceResult) -> str:
    """Render every minimizer of a geodesic result as its own group."""
    if not result.minimizers:
        raise ValueError("nothing to render: result has no minimizers")
    if result.geodesics is None:
        raise ValueError("render needs a result with geodesics attached")

    doc = _Doc()
    offset = 0.0
    for m, segs in zip(result.minimizers, result.geodesics):
        unf = cached_unfolding(model, m.faces, m.faces[0], m.p1.shared)
        xs = [x for poly in unf.polygons.values() for x, _ in poly]
        dx = offset - min(xs)
        offset += (max(xs) - min(xs)) + _GAP

        def put(p, dx=dx):
            return (p[0] + dx, -p[1])  # global y-flip

        doc.open_group(m.ident)
        for face in unf.faces:
            poly = unf.polygons[face]
            doc.polygon([put(p) for p in poly])
            cx = sum(x for x, _ in poly) / len(poly)
            cy = sum(y for _, y in poly) / len(poly)
            doc.text(*put((cx, cy)), f"F{face}")
        labeled = set()
        for face in unf.faces:
            for vtx, pos in unf.corner_pos[face].items():
                key = (round(pos[0], 6), round(pos[1], 6))
                if key in labeled:
                    continue
                labeled.add(key)
                name = "{%s}" % ",".join(str(f) for f in sorted(vtx))
                x, y = put(pos)
                doc.text(x, y + 0.05, name, size=0.08, fill="#666666")
        if segs:
            pts = [put(segs[0].plane_start)]
            pts.extend(put(s.plane_end) for s in segs)
            doc.polyline(pts)
            doc.circle(*pts[0])
            doc.circle(*pts[-1])
        doc.close_group()
    return doc.document()
