"""Deterministic SVG 1.1 rendering of chains and plans.

Conventions: positive cells are black/gray, negative cells red, and cells
that were covered by pieces but cancel to zero get a green outline (faces),
green stroke (edges/intervals) or green dot (vertices/points).  Vertices
are drawn as small dots; multiplicities other than +-1 are annotated.
The output is a pure function of the input - cells are emitted in sorted
order with fixed number formatting, so equal inputs give identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import (
    Chain,
    PlacementPlan,
    covered_cells,
    face_vertices,
    piece_cells,
    realize,
)

SQRT3 = 3 ** 0.5


@dataclass(frozen=True)
class RenderOptions:
    side: float = 40.0          # pixels per lattice unit
    margin: float = 20.0
    positive: str = "#333333"
    positive_open: str = "#999999"
    negative: str = "#cc3333"
    cancelled: str = "#2e8b57"
    annotate: bool = True


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _vertex_xy(v, side):
    r, c = v
    return (c + r / 2.0) * side, r * side * SQRT3 / 2.0


class _Canvas:
    def __init__(self, options: RenderOptions):
        self.options = options
        self.body = []
        self.labels = []
        self.min_x = self.min_y = float("inf")
        self.max_x = self.max_y = float("-inf")

    def _track(self, x, y):
        self.min_x = min(self.min_x, x)
        self.max_x = max(self.max_x, x)
        self.min_y = min(self.min_y, y)
        self.max_y = max(self.max_y, y)

    def polygon(self, points, fill, stroke, width=1.0, opacity=None):
        for x, y in points:
            self._track(x, y)
        attrs = f'fill="{fill}" stroke="{stroke}" stroke-width="{_fmt(width)}"'
        if opacity is not None:
            attrs += f' fill-opacity="{_fmt(opacity)}"'
        text = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
        self.body.append(f'<polygon points="{text}" {attrs} />')

    def line(self, p1, p2, stroke, width):
        self._track(*p1)
        self._track(*p2)
        self.body.append(
            f'<line x1="{_fmt(p1[0])}" y1="{_fmt(p1[1])}" '
            f'x2="{_fmt(p2[0])}" y2="{_fmt(p2[1])}" '
            f'stroke="{stroke}" stroke-width="{_fmt(width)}" stroke-linecap="round" />'
        )

    def circle(self, p, radius, fill):
        self._track(*p)
        self.body.append(
            f'<circle cx="{_fmt(p[0])}" cy="{_fmt(p[1])}" r="{_fmt(radius)}" fill="{fill}" />'
        )

    def label(self, p, text, color):
        self._track(*p)
        self.labels.append((p[0], p[1], text, color))

    def render(self) -> str:
        if not self.body and not self.labels:
            self.min_x = self.min_y = 0.0
            self.max_x = self.max_y = 1.0
        m = self.options.margin
        w = self.max_x - self.min_x + 2 * m
        h = self.max_y - self.min_y + 2 * m
        # flip y inside a group so larger lattice rows sit higher on the canvas
        shift_x = m - self.min_x
        shift_y = self.max_y + m
        header = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(w)}" height="{_fmt(h)}" '
            f'viewBox="0 0 {_fmt(w)} {_fmt(h)}">\n'
            f'<g transform="translate({_fmt(shift_x)},{_fmt(shift_y)}) scale(1,-1)">\n'
        )
        # text must not be mirrored: labels go outside the flipped group
        fixed = [
            f'<text x="{_fmt(x + shift_x)}" y="{_fmt(shift_y - y)}" font-size="11" '
            f'font-family="monospace" fill="{color}">{text}</text>'
            for x, y, text, color in self.labels
        ]
        return (
            header
            + "\n".join(self.body)
            + "\n</g>\n"
            + "\n".join(fixed)
            + ("\n" if fixed else "")
            + "</svg>\n"
        )


def _color(options: RenderOptions, mult: int, covered: bool) -> str:
    if mult > 0:
        return options.positive
    if mult < 0:
        return options.negative
    return options.cancelled if covered else "none"


def _cell_sort_key(cell):
    kind = cell[0]
    rank = {"face": 0, "edge": 1, "interval": 1, "vertex": 2, "point": 2}[kind]
    return (rank, repr(cell))


def _draw_cell(canvas: _Canvas, cell, mult: int, covered: bool, open_face: bool = False):
    opt = canvas.options
    color = _color(opt, mult, covered)
    if color == "none":
        return
    kind = cell[0]
    if kind == "face":
        pts = [_vertex_xy(v, opt.side) for v in face_vertices(cell)]
        if mult == 0:
            canvas.polygon(pts, "none", opt.cancelled, width=2.0)
        else:
            fill = opt.positive_open if (open_face and mult > 0) else color
            canvas.polygon(pts, fill, "#222222", width=0.5,
                           opacity=0.85 if open_face else None)
        if opt.annotate and abs(mult) > 1:
            cx = sum(p[0] for p in pts) / 3
            cy = sum(p[1] for p in pts) / 3
            canvas.label((cx, cy), str(abs(mult)), "#ffffff")
    elif kind == "edge":
        p1 = _vertex_xy(cell[1], opt.side)
        p2 = _vertex_xy(cell[2], opt.side)
        canvas.line(p1, p2, color, 2.0 if mult else 2.5)
    elif kind == "vertex":
        p = _vertex_xy(cell[1:], opt.side)
        canvas.circle(p, 3.5, color)
        if opt.annotate and abs(mult) > 1:
            canvas.label((p[0] + 5, p[1] + 5), str(abs(mult)), color)
    elif kind == "interval":
        i = cell[1]
        y = 0.0
        canvas.line((i * opt.side + 3, y), ((i + 1) * opt.side - 3, y), color, 5.0)
    elif kind == "point":
        p = (cell[1] * opt.side, 0.0)
        canvas.circle(p, 4.0, color)
        if opt.annotate and abs(mult) > 1:
            canvas.label((p[0] + 5, p[1] + 8), str(abs(mult)), color)


def chain_svg(chain: Chain, options: RenderOptions = None, covered=frozenset()) -> str:
    """Render a chain; cells in `covered` with zero multiplicity show green."""
    opt = options or RenderOptions()
    canvas = _Canvas(opt)
    cells = chain.cells()
    zeros = [cell for cell in covered if cell not in cells]
    for cell in sorted(cells, key=_cell_sort_key):
        _draw_cell(canvas, cell, cells[cell], False)
    for cell in sorted(zeros, key=_cell_sort_key):
        _draw_cell(canvas, cell, 0, True)
    return canvas.render()


def plan_svg(plan: PlacementPlan, options: RenderOptions = None) -> str:
    """Render a plan piece by piece, then mark cancelled cells in green.

    Closed pieces draw with their boundary, open pieces lighter; point and
    vertex pieces become dots with multiplicity annotations.  Cells touched
    by pieces whose total multiplicity is zero get the green marker.
    """
    opt = options or RenderOptions()
    canvas = _Canvas(opt)
    for piece in plan.pieces:
        weight = piece.sign * piece.multiplicity
        open_face = piece.kind in ("open_triangle", "open_segment")
        for cell, mult in sorted(piece_cells(piece).items(), key=lambda kv: _cell_sort_key(kv[0])):
            _draw_cell(canvas, cell, weight * mult, False, open_face=open_face)
    chain = realize(plan)
    cells = chain.cells()
    for cell in sorted(covered_cells(plan), key=_cell_sort_key):
        if cell not in cells:
            _draw_cell(canvas, cell, 0, True)
    return canvas.render()


def to_svg(obj, options: RenderOptions = None) -> str:
    """Dispatch: chains render by multiplicity, plans by their pieces."""
    if isinstance(obj, Chain):
        return chain_svg(obj, options)
    if isinstance(obj, PlacementPlan):
        return plan_svg(obj, options)
    raise TypeError(f"cannot render {type(obj).__name__}")
