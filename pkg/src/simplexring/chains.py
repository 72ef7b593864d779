"""Lattice multiplicity chains and placement plans for figure arithmetic.

1-d cells live on the integer line: ("point", i) and the open unit interval
("interval", i) = (i, i+1).  2-d cells live on the triangular lattice in
skewed coordinates: vertex (r, c) sits at Cartesian (c + r/2, r*sqrt(3)/2),
the upward face ("face", r, c, "up") has vertices (r,c), (r,c+1), (r+1,c)
and the downward face ("face", r, c, "down") has vertices (r,c+1), (r+1,c),
(r+1,c+1).  Edges are keyed by their sorted vertex pair.

A Chain assigns integer multiplicities to finitely many cells.  A
PlacementPlan is a list of placed pieces; realize() turns it into a chain.
Closed pieces carry their full boundary at multiplicity one, open pieces
only the topological interior (for unit size: the bare face/interval),
plain triangles only their faces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence


class SearchSpaceError(RuntimeError):
    """The tiling search window admits more combinations than the cap."""


UP = "up"
DOWN = "down"

_KINDS_1D = {"point", "segment", "open_segment"}
_KINDS_2D = {"vertex", "triangle", "closed_triangle", "open_triangle"}


class Chain:
    """Finitely supported integer multiplicities on lattice cells.

    Immutable once built; zero entries are dropped so equality is equality
    of supports with multiplicities.
    """

    __slots__ = ("dim", "_cells")

    def __init__(self, dim: int, cells=None):
        if dim not in (1, 2):
            raise ValueError("dim must be 1 or 2")
        tags = ("interval", "point") if dim == 1 else ("face", "edge", "vertex")
        self.dim = dim
        store = {}
        for cell, mult in dict(cells or {}).items():
            if cell[0] not in tags:
                raise ValueError(f"cell {cell!r} does not live in dimension {dim}")
            if mult:
                store[cell] = int(mult)
        self._cells = store

    def multiplicity(self, cell) -> int:
        return self._cells.get(cell, 0)

    def cells(self) -> dict:
        return dict(self._cells)

    def support(self):
        return frozenset(self._cells)

    def sorted_items(self):
        return sorted(self._cells.items())

    def _check(self, other):
        if not isinstance(other, Chain) or other.dim != self.dim:
            raise ValueError("chains must share a dimension")

    def __add__(self, other):
        self._check(other)
        out = dict(self._cells)
        for cell, mult in other._cells.items():
            out[cell] = out.get(cell, 0) + mult
        return Chain(self.dim, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Chain(self.dim, {cell: -m for cell, m in self._cells.items()})

    def __mul__(self, factor: int):
        return Chain(self.dim, {cell: m * factor for cell, m in self._cells.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dim == other.dim and self._cells == other._cells

    def __hash__(self):
        return hash((self.dim, frozenset(self._cells.items())))

    def __bool__(self):
        return bool(self._cells)

    def __repr__(self):
        return f"Chain(dim={self.dim}, cells={len(self._cells)})"


@dataclass(frozen=True)
class PlacedPiece:
    """One placed piece of a plan.

    kind: "point" / "segment" / "open_segment" in 1-d (position is an int
    offset), "vertex" / "triangle" / "closed_triangle" / "open_triangle" in
    2-d (position is (r, c)).  Up triangles anchor at their bottom-left
    face; down triangles anchor at their tip face.  sign flips the whole
    piece, multiplicity repeats it.
    """

    kind: str
    position: tuple
    size: int = 1
    orientation: str = UP
    sign: int = 1
    multiplicity: int = 1

    def __post_init__(self):
        if self.kind not in _KINDS_1D | _KINDS_2D:
            raise ValueError(f"unknown piece kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.size < 1:
            raise ValueError("size must be >= 1")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")
        if self.orientation not in (UP, DOWN):
            raise ValueError("orientation must be 'up' or 'down'")

    @property
    def dim(self) -> int:
        return 1 if self.kind in _KINDS_1D else 2


@dataclass(frozen=True)
class PlacementPlan:
    dim: int
    pieces: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        for piece in self.pieces:
            if piece.dim != self.dim:
                raise ValueError(f"piece {piece} does not live in dimension {self.dim}")


def face_cell(r: int, c: int, orientation: str) -> tuple:
    return ("face", r, c, orientation)


def face_vertices(face):
    _, r, c, orientation = face
    if orientation == UP:
        return ((r, c), (r, c + 1), (r + 1, c))
    return ((r, c + 1), (r + 1, c), (r + 1, c + 1))


def edge_cell(v1, v2) -> tuple:
    return ("edge",) + tuple(sorted((v1, v2)))


def face_edges(face):
    verts = face_vertices(face)
    return tuple(edge_cell(a, b) for a, b in itertools.combinations(verts, 2))


def edge_adjacent_faces(edge):
    """The two faces sharing an edge, classified by the edge direction."""
    _, (r1, c1), (r2, c2) = edge
    if r1 == r2:  # horizontal
        return (face_cell(r1, c1, UP), face_cell(r1 - 1, c1, DOWN))
    if c1 == c2:  # rising left side
        return (face_cell(r1, c1, UP), face_cell(r1, c1 - 1, DOWN))
    # falling right side: (r, c) -- (r+1, c-1)
    return (face_cell(r1, c2, UP), face_cell(r1, c2, DOWN))


def vertex_adjacent_faces(v):
    r, c = v
    return (
        face_cell(r, c, UP), face_cell(r, c - 1, UP), face_cell(r - 1, c, UP),
        face_cell(r, c - 1, DOWN), face_cell(r - 1, c, DOWN), face_cell(r - 1, c - 1, DOWN),
    )


def triangle_face_cells(size: int, orientation: str, position) -> tuple:
    """All s^2 faces of a side-s triangle at the given anchor."""
    if orientation not in (UP, DOWN):
        raise ValueError(f"unknown orientation {orientation!r}")
    r0, c0 = position
    faces = []
    if orientation == UP:
        for i in range(size):
            for j in range(size - i):
                faces.append(face_cell(r0 + i, c0 + j, UP))
            for j in range(size - 1 - i):
                faces.append(face_cell(r0 + i, c0 + j, DOWN))
    else:
        for i in range(size):
            for j in range(i + 1):
                faces.append(face_cell(r0 + i, c0 - i + j, DOWN))
            for j in range(1, i + 1):
                faces.append(face_cell(r0 + i, c0 - i + j, UP))
    return tuple(faces)


def closure_cells(faces) -> dict:
    """Faces plus every edge and vertex on them, all at multiplicity one."""
    cells = {face: 1 for face in faces}
    for face in faces:
        for edge in face_edges(face):
            cells[edge] = 1
        for v in face_vertices(face):
            cells[("vertex",) + v] = 1
    return cells


def interior_cells(faces) -> dict:
    """Topological interior: faces, interior edges, interior vertices.

    An edge is interior when both its adjacent faces belong to the region;
    a vertex when all six incident faces do.  A unit triangle therefore
    contributes its face only.
    """
    region = set(faces)
    cells = {face: 1 for face in faces}
    seen_edges = set()
    seen_verts = set()
    for face in faces:
        for edge in face_edges(face):
            if edge in seen_edges:
                continue
            seen_edges.add(edge)
            if all(f in region for f in edge_adjacent_faces(edge)):
                cells[edge] = 1
        for v in face_vertices(face):
            if v in seen_verts:
                continue
            seen_verts.add(v)
            if all(f in region for f in vertex_adjacent_faces(v)):
                cells[("vertex",) + v] = 1
    return cells


def piece_cells(piece: PlacedPiece) -> dict:
    """Unit cell multiplicities of a piece before sign and multiplicity."""
    if piece.kind == "point":
        return {("point", piece.position): 1}
    if piece.kind == "segment":
        p = piece.position
        cells = {("interval", p + i): 1 for i in range(piece.size)}
        for i in range(piece.size + 1):
            cells[("point", p + i)] = 1
        return cells
    if piece.kind == "open_segment":
        p = piece.position
        cells = {("interval", p + i): 1 for i in range(piece.size)}
        for i in range(1, piece.size):
            cells[("point", p + i)] = 1
        return cells
    if piece.kind == "vertex":
        return {("vertex",) + tuple(piece.position): 1}
    faces = triangle_face_cells(piece.size, piece.orientation, piece.position)
    if piece.kind == "triangle":
        return {face: 1 for face in faces}
    if piece.kind == "closed_triangle":
        return closure_cells(faces)
    return interior_cells(faces)


def realize(plan: PlacementPlan) -> Chain:
    """Sum the placed pieces into a chain; piece kinds must match plan.dim."""
    total: dict = {}
    for piece in plan.pieces:
        weight = piece.sign * piece.multiplicity
        for cell, mult in piece_cells(piece).items():
            total[cell] = total.get(cell, 0) + weight * mult
    return Chain(plan.dim, total)


def covered_cells(plan: PlacementPlan) -> frozenset:
    """Every cell touched by any piece, cancelled or not."""
    touched = set()
    for piece in plan.pieces:
        touched.update(piece_cells(piece))
    return frozenset(touched)


# ---------------------------------------------------------------------------
# plan builders


def segment_sum_plan(n: int) -> PlacementPlan:
    """Closed segment [0, n] as n closed units minus the n-1 junction points."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pieces = [PlacedPiece("segment", i) for i in range(n)]
    pieces += [PlacedPiece("point", i, sign=-1) for i in range(1, n)]
    return PlacementPlan(1, tuple(pieces))


def open_segment_plan_units(n: int) -> PlacementPlan:
    """Negated open segment (0, n) from -n closed units plus n+1 points."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pieces = [PlacedPiece("segment", i, sign=-1) for i in range(n)]
    pieces += [PlacedPiece("point", i) for i in range(n + 1)]
    return PlacementPlan(1, tuple(pieces))


def open_segment_plan_open_units(n: int) -> PlacementPlan:
    """Same chain as open_segment_plan_units, built from negated open units."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pieces = [PlacedPiece("open_segment", i, sign=-1) for i in range(n)]
    pieces += [PlacedPiece("point", i, sign=-1) for i in range(1, n)]
    return PlacementPlan(1, tuple(pieces))


def closed_triangle_chain(n: int, position=(0, 0)) -> Chain:
    """The boundary-carrying side-n triangle: every cell at multiplicity one."""
    return Chain(2, closure_cells(triangle_face_cells(n, UP, position)))


def triangle_chain(n: int, orientation: str = UP, position=(0, 0)) -> Chain:
    """Face-only side-n triangle chain."""
    return Chain(2, {f: 1 for f in triangle_face_cells(n, orientation, position)})


def closed_triangle_plan(n: int) -> PlacementPlan:
    """Closed side-n triangle from closed up-units, open down-units and points.

    n(n+1)/2 closed upward units cover every edge once but overcount
    shared vertices; the n(n-1)/2 open downward units fill the remaining
    faces, and each vertex gets incidence-1 point units subtracted, n^2 - 1
    point units in total.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pieces = []
    up_faces = set()
    for r in range(n):
        for c in range(n - r):
            pieces.append(PlacedPiece("closed_triangle", (r, c)))
            up_faces.add(face_cell(r, c, UP))
    for r in range(n - 1):
        for c in range(n - 1 - r):
            pieces.append(PlacedPiece("open_triangle", (r, c), orientation=DOWN))
    for r in range(n + 1):
        for c in range(n + 1 - r):
            incidence = sum(
                1 for f in vertex_adjacent_faces((r, c))
                if f[3] == UP and f in up_faces
            )
            if incidence > 1:
                pieces.append(
                    PlacedPiece("vertex", (r, c), sign=-1, multiplicity=incidence - 1)
                )
    return PlacementPlan(2, tuple(pieces))


def difference_plan(n: int, k: int) -> PlacementPlan:
    """Trapezoid <n> - <k>: remove the side-k corner triangle at the apex."""
    if not n > k > 0:
        raise ValueError("need n > k > 0")
    return PlacementPlan(2, (
        PlacedPiece("triangle", (0, 0), size=n),
        PlacedPiece("triangle", (n - k, 0), size=k, sign=-1),
    ))


def partition_plan(n: int, k: int, l: int) -> PlacementPlan:
    """Three corner triangles of <n+k+l> minus their pairwise overlaps.

    The side-(k+l), side-(n+l) and side-(n+k) corner triangles cover the
    big one; each pairwise overlap is a small corner triangle subtracted
    once, which is the three-value closed addition drawn as a figure.
    """
    for name, v in (("n", n), ("k", k), ("l", l)):
        if v < 1:
            raise ValueError(f"{name} must be >= 1")
    return PlacementPlan(2, (
        PlacedPiece("triangle", (0, 0), size=k + l),
        PlacedPiece("triangle", (0, k), size=n + l),
        PlacedPiece("triangle", (l, 0), size=n + k),
        PlacedPiece("triangle", (0, k), size=l, sign=-1),
        PlacedPiece("triangle", (l, 0), size=k, sign=-1),
        PlacedPiece("triangle", (l, k), size=n, sign=-1),
    ))


def parallelogram_plan(n: int, k: int) -> PlacementPlan:
    """Parallelogram <n+k> - <n> - <k>: both corner cuts along one side."""
    if n < 1 or k < 1:
        raise ValueError("need n, k >= 1")
    return PlacementPlan(2, (
        PlacedPiece("triangle", (0, 0), size=n + k),
        PlacedPiece("triangle", (k, 0), size=n, sign=-1),
        PlacedPiece("triangle", (0, 0), size=k, sign=-1),
    ))


def hexagon_plan(n: int, k: int, l: int, t: int) -> PlacementPlan:
    """Hexagon <n+k+l+t> - <n> - <k> - <l>: all three corners cut."""
    for name, v in (("n", n), ("k", k), ("l", l), ("t", t)):
        if v < 1:
            raise ValueError(f"{name} must be >= 1")
    big = n + k + l + t
    return PlacementPlan(2, (
        PlacedPiece("triangle", (0, 0), size=big),
        PlacedPiece("triangle", (0, 0), size=l, sign=-1),
        PlacedPiece("triangle", (0, big - n), size=n, sign=-1),
        PlacedPiece("triangle", (big - k, 0), size=k, sign=-1),
    ))


def chain_face_total(chain: Chain) -> int:
    """Signed number of unit faces; matches the A_2 coordinate for face plans."""
    return sum(m for cell, m in chain.cells().items() if cell[0] == "face")


def plan_side_difference(plan: PlacementPlan) -> int:
    """Signed sum of triangle sides (down counts negative).

    For the face-only builder plans this equals the A_1 coordinate, the
    difference in lengths of the two parallel boundary sides.
    """
    total = 0
    for piece in plan.pieces:
        if piece.kind in ("triangle", "closed_triangle", "open_triangle"):
            side = piece.size if piece.orientation == UP else -piece.size
            total += piece.sign * piece.multiplicity * side
    return total


def tetrahedron_slabs(n: int) -> tuple:
    """Slab piece counts of the side-n tetrahedron; (1,4,1)-weighted sum n^3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (
        n * (n + 1) * (n + 2) // 6,
        (n - 1) * n * (n + 1) // 6,
        (n - 2) * (n - 1) * n // 6,
    )


# ---------------------------------------------------------------------------
# exhaustive tiling search


@dataclass(frozen=True)
class TilePiece:
    """A face-only triangle available to the tiling search."""

    size: int
    orientation: str = UP
    sign: int = 1


def triangle_window(n: int, position=(0, 0)) -> frozenset:
    """The face cells of the side-n up triangle, as a search window."""
    return frozenset(triangle_face_cells(n, UP, position))


def _window_placements(tile: TilePiece, window: frozenset):
    rs = [cell[1] for cell in window]
    cs = [cell[2] for cell in window]
    lo_r, hi_r = min(rs) - tile.size, max(rs) + tile.size
    lo_c, hi_c = min(cs) - tile.size, max(cs) + tile.size
    spots = []
    for r in range(lo_r, hi_r + 1):
        for c in range(lo_c, hi_c + 1):
            faces = triangle_face_cells(tile.size, tile.orientation, (r, c))
            if all(f in window for f in faces):
                spots.append(((r, c), faces))
    return spots


def tiling_search(
    target: Chain,
    pieces: Sequence[TilePiece],
    window: frozenset,
    cap: int = 2_000_000,
) -> Optional[PlacementPlan]:
    """Exhaustively search placements of the pieces realizing the target.

    Pieces are grouped by kind; identical pieces are placed in
    nondecreasing position order, so the enumeration is exhaustive over
    distinct multisets of placements and deterministic (lexicographic by
    group, then position).  Returns the first realizing plan, or None when
    no in-window placement works - the search is complete, so None is a
    proof of impossibility within the window.  Raises SearchSpaceError if
    the combination count exceeds cap.
    """
    if target.dim != 2:
        raise ValueError("tiling search works on 2-d chains")
    groups = []
    order = []
    for tile in pieces:
        if tile not in order:
            order.append(tile)
    counted = {tile: sum(1 for p in pieces if p == tile) for tile in order}
    total = 1
    for tile in sorted(order, key=lambda t: (-t.size, t.orientation, -t.sign)):
        spots = _window_placements(tile, window)
        count = counted[tile]
        total *= comb(len(spots) + count - 1, count)
        groups.append((tile, count, spots))
    if total > cap:
        raise SearchSpaceError(f"{total} placement combinations exceed the cap {cap}")

    # Quick exact invariant: the signed face count is placement-independent.
    area = sum(t.sign * c * t.size ** 2 for t, c, _ in groups)
    if area != chain_face_total(target):
        return None

    target_cells = target.cells()

    def descend(level: int, acc: dict):
        if level == len(groups):
            return [] if acc == target_cells else None
        tile, count, spots = groups[level]
        for chosen in itertools.combinations_with_replacement(range(len(spots)), count):
            step = dict(acc)
            for idx in chosen:
                for f in spots[idx][1]:
                    m = step.get(f, 0) + tile.sign
                    if m:
                        step[f] = m
                    else:
                        del step[f]
            rest = descend(level + 1, step)
            if rest is not None:
                placed = [
                    PlacedPiece("triangle", spots[idx][0], size=tile.size,
                                orientation=tile.orientation, sign=tile.sign)
                    for idx in chosen
                ]
                return placed + rest
        return None

    result = descend(0, {})
    if result is None:
        return None
    return PlacementPlan(2, tuple(result))


# ---------------------------------------------------------------------------
# JSON views


def chain_to_json(chain: Chain) -> dict:
    return {
        "dim": chain.dim,
        "cells": [{"cell": _cell_json(cell), "mult": m} for cell, m in chain.sorted_items()],
    }


def _cell_json(cell):
    return [list(part) if isinstance(part, tuple) else part for part in cell]


def plan_to_json(plan: PlacementPlan) -> dict:
    return {
        "dim": plan.dim,
        "pieces": [
            {
                "kind": p.kind,
                "position": list(p.position) if isinstance(p.position, tuple) else p.position,
                "size": p.size,
                "orientation": p.orientation,
                "sign": p.sign,
                "multiplicity": p.multiplicity,
            }
            for p in plan.pieces
        ],
    }
