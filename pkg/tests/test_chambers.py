import pytest

from surfops import polyhedra
from surfops.chambers import (
    NotOnChamberBoundary,
    barycentric,
    chamber_flip,
    double_chambers,
    legal_flips,
    walk_cycles,
)


def test_bary_tetrahedron():
    b = barycentric(polyhedra.tetrahedron())
    assert b.graph.vertex_count == 14
    assert len(b.graph.faces()) == 24
    assert b.graph.genus() == 0


def test_bary_cube():
    b = barycentric(polyhedra.cube())
    assert b.graph.vertex_count == 26
    assert len(b.graph.faces()) == 48


def test_bary_invariants(corpus):
    for name, g in corpus.items():
        b = barycentric(g)
        bg = b.graph
        assert bg.genus() == g.genus(), name
        assert len(bg.faces()) == 4 * g.edge_count, name
        for walk in bg.faces():
            assert len(walk) == 3
            types = sorted(bg.labels[bg.vertex_of[d]] for d in walk)
            assert types == [0, 1, 2]
        for d, dp in bg.edge_darts():
            assert bg.labels[bg.vertex_of[d]] != bg.labels[bg.vertex_of[dp]]
        # interior type-1 vertices have degree four
        for v in range(bg.vertex_count):
            if bg.labels[v] == 1:
                assert bg.degree(v) == 4


def test_bary_origin_mapping():
    g = polyhedra.cube()
    b = barycentric(g)
    nv, ne, nf = g.vertex_count, g.edge_count, len(g.faces())
    kinds = [b.origin[x][0] for x in range(b.graph.vertex_count)]
    assert kinds.count("vertex") == nv
    assert kinds.count("edge") == ne
    assert kinds.count("face") == nf


def test_chamber_system_transitive(corpus):
    for name, g in corpus.items():
        cs = barycentric(g).chamber_system()
        assert cs.is_transitive(), name
        for i in range(3):
            for c in range(len(cs)):
                assert cs.s[i][cs.s[i][c]] == c  # involution


def test_double_chambers_counts(corpus):
    for name, g in corpus.items():
        dc = double_chambers(g)
        quads = dc.double_chambers()
        assert len(quads) == 2 * g.edge_count, name
        dg = dc.graph
        for quad in quads:
            assert len(quad) == 4
            labels = sorted(dg.labels[dg.vertex_of[d]] for d in quad)
            assert labels == [0, 0, 1, 2]


def test_double_chamber_loop_corners():
    dc = double_chambers(polyhedra.loop_vertex())
    dg = dc.graph
    for quad in dc.double_chambers():
        zeros = [dg.vertex_of[d] for d in quad if dg.labels[dg.vertex_of[d]] == 0]
        assert len(zeros) == 2 and zeros[0] == zeros[1]


def test_double_chamber_simple_corners_distinct():
    dc = double_chambers(polyhedra.tetrahedron())
    dg = dc.graph
    for quad in dc.double_chambers():
        zeros = [dg.vertex_of[d] for d in quad if dg.labels[dg.vertex_of[d]] == 0]
        assert len(set(zeros)) == 2


def chamber_walk(bg):
    """Some facial triangle of bg as a closed dart walk."""
    return list(bg.faces()[0])


def test_chamber_flip_roundtrip():
    bg = barycentric(polyhedra.tetrahedron()).graph
    walk = chamber_walk(bg)
    d = walk[0]
    other = bg.face_of(bg.inv[d])
    flipped = chamber_flip(bg, walk, 0, other)
    assert len(flipped) == 4
    back = chamber_flip(bg, flipped, 0, other)
    assert back == walk


def test_chamber_flip_two_edges_to_one():
    bg = barycentric(polyhedra.tetrahedron()).graph
    face = list(bg.faces()[5])
    # the two-edge path around face 5 starting at its first dart
    walk = [face[0], face[1], bg.inv[face[1]], bg.inv[face[0]]]
    # positions 0,1 run along two edges of face 5
    flipped = chamber_flip(bg, walk, 0, 5)
    assert len(flipped) == 3


def test_chamber_flip_rejects_far_chamber():
    bg = barycentric(polyhedra.cube()).graph
    walk = chamber_walk(bg)
    edges_in = {bg.edge_of(d) for d in walk}
    far = next(
        fi
        for fi, f in enumerate(bg.faces())
        if not edges_in & {bg.edge_of(d) for d in f}
    )
    with pytest.raises(NotOnChamberBoundary):
        chamber_flip(bg, walk, 0, far)


def test_legal_flips_nonempty():
    bg = barycentric(polyhedra.cube()).graph
    walk = chamber_walk(bg)
    flips = legal_flips(bg, walk)
    assert flips
    for pos, face, arity in flips:
        out = chamber_flip(bg, walk, pos, face, arity=arity)
        assert len(out) == len(walk) + (1 if arity == 1 else -1)


def test_walk_cycles_splits_figure_eight():
    bg = barycentric(polyhedra.tetrahedron()).graph
    f = bg.faces()[0]
    g_walk = list(f) + [f[0], bg.inv[f[0]]]  # cycle plus a spike
    parts = walk_cycles(bg, g_walk)
    assert parts == [list(f)]
