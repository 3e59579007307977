"""Serializers for words, invariants, scripts and plumbing graphs."""

import json
import math

from .openbook import ConvexTwist, TwistWord


def twist_to_json(t):
    return {"holes": list(t.holes), "sign": t.sign}


def word_to_json(w):
    return [twist_to_json(t) for t in w]


def word_from_json(doc):
    """Inverse of the ``palf`` document (or a bare word list with ``page_holes``)."""
    twists = tuple(ConvexTwist(tuple(t["holes"]), int(t["sign"])) for t in doc["word"])
    return TwistWord(int(doc["page_holes"]), twists)


def dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def word_text(w):
    return str(w)


# SVG: holes evenly spaced on a circle, index increasing counterclockwise.

_W = 480
_R_HOLES = 150
_R_HOLE = 9
_STEP = 7


def _hole_xy(i, k):
    ang = math.pi / 2 + 2 * math.pi * (i - 1) / k if k > 1 else math.pi / 2
    cx = cy = _W / 2
    if k == 1:
        return cx, cy
    return cx + _R_HOLES * math.cos(ang), cy - _R_HOLES * math.sin(ang)


def _hull_path(points, r):
    """Boundary of the r-neighbourhood of the hull of points in convex position."""
    f = lambda v: f"{v:.2f}"
    if len(points) == 1:
        x, y = points[0]
        return (f"M {f(x + r)} {f(y)} A {f(r)} {f(r)} 0 1 0 {f(x - r)} {f(y)} "
                f"A {f(r)} {f(r)} 0 1 0 {f(x + r)} {f(y)} Z")
    m = len(points)
    area = sum(points[i][0] * points[(i + 1) % m][1] - points[(i + 1) % m][0] * points[i][1]
               for i in range(m))
    if area < 0:
        points = points[::-1]
    # Positively oriented in raw coordinates: outward normal is (dy, -dx) and
    # the corner arcs turn with SVG sweep flag 1.
    normals = []
    for i in range(m):
        (x0, y0), (x1, y1) = points[i], points[(i + 1) % m]
        dx, dy = x1 - x0, y1 - y0
        ln = math.hypot(dx, dy) or 1.0
        normals.append((dy / ln, -dx / ln))
    parts = []
    for i in range(m):
        (x0, y0), (x1, y1) = points[i], points[(i + 1) % m]
        nx, ny = normals[i]
        a = (x0 + r * nx, y0 + r * ny)
        b = (x1 + r * nx, y1 + r * ny)
        if i == 0:
            parts.append(f"M {f(a[0])} {f(a[1])}")
        parts.append(f"L {f(b[0])} {f(b[1])}")
        mx, my = normals[(i + 1) % m]
        c = (x1 + r * mx, y1 + r * my)
        parts.append(f"A {f(r)} {f(r)} 0 0 1 {f(c[0])} {f(c[1])}")
    parts.append("Z")
    return " ".join(parts)


def word_svg(w, title=""):
    k = w.page_holes
    depth = {}
    distinct = sorted({t.holes for t in w}, key=len)
    for s in distinct:
        depth[s] = sum(1 for o in distinct if o != s and set(o) < set(s))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_W}" height="{_W}" '
        f'viewBox="0 0 {_W} {_W}">',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    c = _W / 2
    out.append(f'<circle cx="{c}" cy="{c}" r="{_R_HOLES + 60}" fill="none" stroke="black" stroke-width="2"/>')
    for i in range(1, k + 1):
        x, y = _hole_xy(i, k)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{_R_HOLE}" fill="#ddd" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{y + 4:.2f}" font-size="10" text-anchor="middle">{i}</text>')
    seen = {}
    for idx, t in enumerate(w, start=1):
        extra = seen.get(t.holes, 0)
        seen[t.holes] = extra + 1
        r = _R_HOLE + 6 + _STEP * (depth[t.holes] + extra)
        pts = [_hole_xy(h, k) for h in t.holes]
        hue = (idx * 47) % 360
        dash = ' stroke-dasharray="5,4"' if t.sign < 0 else ""
        out.append(
            f'<path d="{_hull_path(pts, r)}" fill="none" stroke="hsl({hue},70%,40%)" '
            f'stroke-width="1.6"{dash}><title>{idx}: {t}</title></path>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plumbing_dot(chains, name="plumbing"):
    """``chains`` is a list of ``(label, weights)``; each becomes a linear chain."""
    out = [f"graph {name} {{", "  node [shape=circle];"]
    for ci, (label, weights) in enumerate(chains):
        out.append(f'  subgraph cluster_{ci} {{ label="{label}";')
        for vi, wt in enumerate(weights):
            out.append(f'    v{ci}_{vi} [label="{wt}"];')
        for vi in range(len(weights) - 1):
            out.append(f"    v{ci}_{vi} -- v{ci}_{vi + 1};")
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"
