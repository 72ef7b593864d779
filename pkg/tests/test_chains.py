"""Lattice chains, placement plans and the tiling search."""

import pytest

from simplexring.chains import (
    Chain,
    DOWN,
    PlacedPiece,
    PlacementPlan,
    SearchSpaceError,
    TilePiece,
    UP,
    chain_face_total,
    closed_triangle_chain,
    closed_triangle_plan,
    closure_cells,
    difference_plan,
    edge_adjacent_faces,
    face_cell,
    face_edges,
    face_vertices,
    hexagon_plan,
    interior_cells,
    open_segment_plan_open_units,
    open_segment_plan_units,
    parallelogram_plan,
    partition_plan,
    piece_cells,
    realize,
    segment_sum_plan,
    tetrahedron_slabs,
    tiling_search,
    triangle_chain,
    triangle_face_cells,
    triangle_window,
    vertex_adjacent_faces,
)


def _up_faces_oracle(n, r0=0, c0=0):
    # row r of a side-n up triangle holds n-r upward and n-1-r downward faces
    out = {}
    for r in range(n):
        for c in range(n - r):
            out[("face", r0 + r, c0 + c, "up")] = 1
        for c in range(n - 1 - r):
            out[("face", r0 + r, c0 + c, "down")] = 1
    return out


def test_triangle_face_cells_up():
    for n in (1, 2, 3, 5):
        got = {cell: 1 for cell in triangle_face_cells(n, UP, (0, 0))}
        assert got == _up_faces_oracle(n)
        assert len(got) == n * n


def test_triangle_face_cells_down_count_and_disjoint_rows():
    for n in (1, 2, 3, 4):
        cells = triangle_face_cells(n, DOWN, (2, 5))
        assert len(cells) == n * n
        downs = [c for c in cells if c[3] == "down"]
        ups = [c for c in cells if c[3] == "up"]
        assert len(downs) == n * (n + 1) // 2
        assert len(ups) == n * (n - 1) // 2


def test_down_triangle_tip_anchor():
    cells = set(triangle_face_cells(2, DOWN, (0, 0)))
    assert cells == {
        ("face", 0, 0, "down"),
        ("face", 1, -1, "down"), ("face", 1, 0, "down"),
        ("face", 1, 0, "up"),
    }


def test_face_incidence_is_consistent():
    for face in [face_cell(0, 0, UP), face_cell(2, 1, DOWN), face_cell(-1, 3, UP)]:
        for edge in face_edges(face):
            assert face in edge_adjacent_faces(edge)
        for vertex in face_vertices(face):
            assert face in vertex_adjacent_faces(vertex)


def test_vertex_has_six_faces():
    assert len(vertex_adjacent_faces((2, 3))) == 6


def test_closure_of_one_face_is_seven_cells():
    up = closure_cells([face_cell(0, 0, UP)])
    assert sum(1 for c in up if c[0] == "face") == 1
    assert sum(1 for c in up if c[0] == "edge") == 3
    assert sum(1 for c in up if c[0] == "vertex") == 3
    assert all(m == 1 for m in up.values())


def test_interior_of_single_face_is_bare():
    only = interior_cells([face_cell(0, 0, DOWN)])
    assert only == {face_cell(0, 0, DOWN): 1}


def test_interior_of_triangle_counts():
    # side-3 up triangle: 9 faces, 9 interior edges, 1 interior vertex
    faces = triangle_face_cells(3, UP, (0, 0))
    inner = interior_cells(faces)
    kinds = {}
    for cell in inner:
        kinds[cell[0]] = kinds.get(cell[0], 0) + 1
    assert kinds == {"face": 9, "edge": 9, "vertex": 1}


def test_closed_triangle_chain_counts():
    for n in (1, 2, 3, 4):
        ch = closed_triangle_chain(n)
        items = dict(ch.sorted_items())
        faces = sum(1 for c in items if c[0] == "face")
        edges = sum(1 for c in items if c[0] == "edge")
        vertices = sum(1 for c in items if c[0] == "vertex")
        assert faces == n * n
        # 3 * T(n+1)... counted directly: edges of a side-n triangulation
        assert edges == 3 * n * (n + 1) // 2
        assert vertices == (n + 1) * (n + 2) // 2
        assert set(items.values()) == {1}


def test_closed_triangle_plan_realizes_closed_triangle():
    for n in (1, 2, 3, 4, 5):
        plan = closed_triangle_plan(n)
        assert realize(plan) == closed_triangle_chain(n)


def test_closed_triangle_plan_piece_census():
    plan = closed_triangle_plan(3)
    ups = [p for p in plan.pieces if p.kind == "closed_triangle"]
    downs = [p for p in plan.pieces if p.kind == "open_triangle"]
    points = [p for p in plan.pieces if p.kind == "vertex"]
    assert len(ups) == 6 and all(p.sign == 1 for p in ups)
    assert len(downs) == 3 and all(p.sign == 1 for p in downs)
    assert all(p.sign == -1 for p in points)
    assert sum(p.multiplicity for p in points) == 8


def test_difference_plan():
    for n, k in [(3, 1), (5, 2), (4, 3), (2, 1)]:
        got = realize(difference_plan(n, k))
        want = triangle_chain(n) - triangle_chain(k, position=(n - k, 0))
        assert got == want
    for n, k in [(4, 4), (2, 0), (1, 3)]:
        with pytest.raises(ValueError):
            difference_plan(n, k)


def test_partition_plan_covers_big_triangle():
    for n, k, l in [(1, 1, 1), (2, 1, 1), (3, 2, 2), (2, 3, 1)]:
        got = realize(partition_plan(n, k, l))
        assert got == triangle_chain(n + k + l)


def test_parallelogram_plan():
    for n, k in [(2, 1), (3, 2), (4, 1)]:
        got = realize(parallelogram_plan(n, k))
        want = (triangle_chain(n + k)
                - triangle_chain(n, position=(k, 0))
                - triangle_chain(k))
        assert got == want
        # the remaining region is an n-by-k parallelogram: 2nk faces
        assert chain_face_total(got) == 2 * n * k


def test_hexagon_plan_face_count():
    # cutting the three corners of the side-(n+k+l+t) triangle leaves a hexagon
    for n, k, l, t in [(1, 1, 1, 1), (2, 1, 2, 3), (1, 2, 3, 1)]:
        big = n + k + l + t
        got = realize(hexagon_plan(n, k, l, t))
        assert chain_face_total(got) == big * big - n * n - k * k - l * l
        assert all(m == 1 for _, m in got.sorted_items())


def test_hexagon_plan_needs_room():
    with pytest.raises(ValueError):
        hexagon_plan(2, 2, 2, 0)
    with pytest.raises(ValueError):
        hexagon_plan(0, 1, 1, 4)


def test_segment_sum_plan():
    for n in (1, 2, 3, 6):
        ch = realize(segment_sum_plan(n))
        items = dict(ch.sorted_items())
        intervals = [c for c in items if c[0] == "interval"]
        points = [c for c in items if c[0] == "point"]
        assert len(intervals) == n
        assert len(points) == n + 1
        assert set(items.values()) == {1}


def test_open_segment_plans_agree():
    for n in (1, 2, 3, 5):
        a = realize(open_segment_plan_units(n))
        b = realize(open_segment_plan_open_units(n))
        assert a == b
        # the negated open segment: -n intervals, interior points at -1er
        items = dict(a.sorted_items())
        assert sum(1 for c in items if c[0] == "interval") == n


def test_chain_algebra():
    a = triangle_chain(2)
    b = triangle_chain(1)
    assert a - a == Chain(2, {})
    assert not (a - a)
    assert a + b - b == a
    assert 2 * a == a + a
    assert -a == Chain(2, {}) - a


def test_chain_rejects_mixed_dims():
    with pytest.raises(ValueError):
        Chain(2, {("point", 0): 1})
    with pytest.raises(ValueError):
        triangle_chain(2) + realize(segment_sum_plan(2))


def test_piece_cells_closed_open_plain():
    closed = piece_cells(PlacedPiece("closed_triangle", (0, 0), size=2))
    plain = piece_cells(PlacedPiece("triangle", (0, 0), size=2))
    open_ = piece_cells(PlacedPiece("open_triangle", (0, 0), size=2))
    assert set(plain) == {c for c in closed if c[0] == "face"}
    assert set(open_) <= set(closed)
    assert ("vertex", 0, 0) in closed and ("vertex", 0, 0) not in open_


def test_realize_respects_sign_and_multiplicity():
    plan = PlacementPlan(2, (
        PlacedPiece("vertex", (1, 1), sign=-1, multiplicity=3),
        PlacedPiece("vertex", (1, 1), sign=1, multiplicity=1),
    ))
    ch = realize(plan)
    assert dict(ch.sorted_items()) == {("vertex", 1, 1): -2}


def test_tetrahedron_slabs():
    for n in range(1, 9):
        a, b, c = tetrahedron_slabs(n)
        assert a == n * (n + 1) * (n + 2) // 6
        assert a + 4 * b + c == n ** 3 - 0 if False else a + 4 * b + c == n ** 3
    assert tetrahedron_slabs(4) == (20, 10, 4)
    with pytest.raises(ValueError):
        tetrahedron_slabs(0)


def _recheck_tiling(plan, target):
    """Accumulate the plan's faces by hand and compare with the target."""
    acc = {}
    for piece in plan.pieces:
        for cell in triangle_face_cells(piece.size, piece.orientation, piece.position):
            acc[cell] = acc.get(cell, 0) + piece.sign
            if acc[cell] == 0:
                del acc[cell]
    return acc == dict(target.sorted_items())


def test_tiling_search_finds_unit_tiling():
    target = triangle_chain(2)
    pieces = (TilePiece(1, UP), TilePiece(1, UP), TilePiece(1, UP), TilePiece(1, DOWN))
    plan = tiling_search(target, pieces, triangle_window(2))
    assert plan is not None
    assert realize(plan) == target
    assert _recheck_tiling(plan, target)


def test_tiling_search_with_negative_pieces():
    # <3> - <1> as a difference layout inside the side-3 window
    target = triangle_chain(3) - triangle_chain(1, position=(2, 0))
    pieces = (TilePiece(3, UP), TilePiece(1, UP, -1))
    plan = tiling_search(target, pieces, triangle_window(3))
    assert plan is not None
    assert _recheck_tiling(plan, target)


def test_tiling_search_rejects_area_mismatch():
    target = triangle_chain(3)
    pieces = (TilePiece(1, UP), TilePiece(1, UP))
    assert tiling_search(target, pieces, triangle_window(3)) is None


def test_tiling_search_exhaustive_impossibility():
    # <4> = 2<3> - 2<1> holds in the ring but has no placement layout
    target = triangle_chain(4)
    pieces = (TilePiece(3, UP), TilePiece(3, UP), TilePiece(1, UP, -1), TilePiece(1, UP, -1))
    assert tiling_search(target, pieces, triangle_window(4)) is None


def test_tiling_search_cap():
    target = triangle_chain(6)
    pieces = tuple(TilePiece(1, UP) for _ in range(21)) + tuple(
        TilePiece(1, DOWN) for _ in range(15))
    with pytest.raises(SearchSpaceError):
        tiling_search(target, pieces, triangle_window(6), cap=1000)
