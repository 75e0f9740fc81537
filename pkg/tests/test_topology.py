import math
import random

import pytest

from surfops import polyhedra
from surfops import topology as tp
from surfops.chambers import barycentric


def cycle_darts(g, vertex_seq):
    """Darts of the cycle visiting vertex_seq in order (simple graphs)."""
    out = []
    for i, u in enumerate(vertex_seq):
        w = vertex_seq[(i + 1) % len(vertex_seq)]
        out.append(next(d for d in g.rotations()[u] if g.head(d) == w))
    return out


def test_bridges_whole_graph():
    g = polyhedra.cube()
    brs, simple = tp.bridges(g, set(range(g.dart_count)))
    assert brs == []
    assert all(simple)


def test_bridges_cube_face():
    g = polyhedra.cube()
    face = g.faces()[0]
    s = set(face) | {g.inv[d] for d in face}
    brs, simple = tp.bridges(g, s)
    assert len(brs) == 1
    (br,) = brs
    assert br.kind == "component"
    assert len(br.interior_vertices) == 4
    assert len(br.faces) == 1
    assert all(simple)


def test_bridges_k4_center():
    g = polyhedra.tetrahedron()
    tri = g.faces()[0]
    s = set(tri) | {g.inv[d] for d in tri}
    brs, simple = tp.bridges(g, s)
    assert len(brs) == 1
    assert brs[0].kind == "component"
    assert len(brs[0].edges) == 3
    assert len(brs[0].faces) == 1


def test_chord_bridge_two_faces():
    # a 4-cycle of the cube that is not a face has chords in separate faces
    g = polyhedra.cube()
    # find a non-facial 4-cycle: take two opposite edges of a face and
    # connect through the adjacent face
    for f in g.faces():
        walk = list(f)
        cyc = set(walk) | {g.inv[d] for d in walk}
        brs, simple = tp.bridges(g, cyc)
        comp_bridges = [b for b in brs if b.kind == "component"]
        assert comp_bridges
        break


def test_internal_component_face_only():
    g = polyhedra.cube()
    face = g.faces()[0]
    s = set(face) | {g.inv[d] for d in face}
    sf = tp.subgraph_faces(g, s)
    empty_face = next(
        fi for fi in range(len(sf.walks)) if fi not in tp.bridges(g, s, sf)[0][0].faces
    )
    ic = tp.internal_component(g, s, empty_face, sf=sf)
    assert ic.graph.vertex_count == 4
    assert ic.graph.edge_count == 4
    assert ic.graph.genus() == 0


def test_internal_component_tree_doubling():
    g = polyhedra.cube()
    seen = {0}
    keep = set()
    changed = True
    while changed:
        changed = False
        for d, dp in g.edge_darts():
            u, w = g.vertex_of[d], g.vertex_of[dp]
            if (u in seen) != (w in seen):
                seen |= {u, w}
                keep |= {d, dp}
                changed = True
    sf = tp.subgraph_faces(g, keep)
    assert len(sf.walks) == 1
    ic = tp.internal_component(g, keep, 0)
    assert ic.graph.genus() == 0
    assert ic.graph.vertex_count == 14  # every tree vertex split per occurrence


def test_internal_component_bridged_face_rejected():
    g = polyhedra.k7_torus()
    face = g.faces()[0]
    s = set(face) | {g.inv[d] for d in face}
    brs, simple = tp.bridges(g, s)
    for fi, ok in enumerate(simple):
        if not ok:
            with pytest.raises(tp.FaceIsBridged):
                tp.internal_component(g, s, fi)
            break


def slow_contractible(g, cyc):
    """Independent re-evaluation of the definition, face by face."""
    s = set(cyc) | {g.inv[d] for d in cyc}
    sf = tp.subgraph_faces(g, s)
    brs, simple = tp.bridges(g, s, sf)
    verdicts = []
    for f in range(len(sf.walks)):
        if not simple[f]:
            verdicts.append(False)
            continue
        ic = tp.internal_component(g, s, f, sf=sf)
        verdicts.append(ic.graph.genus() == 0)
    return any(verdicts)


def test_plane_cycles_contractible():
    g = polyhedra.cube()
    for f in g.faces():
        assert tp.is_contractible(g, list(f))


def test_contractibility_against_slow_oracle():
    b = barycentric(polyhedra.k7_torus()).graph
    rng = random.Random(7)
    cycles = tp._bfs_candidate_cycles(b)
    rng.shuffle(cycles)
    for cyc in cycles[:60]:
        assert tp.is_contractible(b, cyc) == slow_contractible(b, cyc)


def test_homology_fast_path_matches_definition():
    b = barycentric(polyhedra.k7_torus()).graph
    tester = tp._HomologyTester(b)
    cycles = tp._bfs_candidate_cycles(b)
    random.Random(11).shuffle(cycles)
    for cyc in cycles[:60]:
        assert (tester.cycle_class(cyc) != 0) == (not tp.is_contractible(b, cyc))


def test_face_width_values(corpus):
    assert tp.face_width(corpus["cube"]) == math.inf
    assert tp.face_width(corpus["k7"]) == 3
    assert tp.face_width(corpus["bouquet_torus"]) == 1


def test_face_width_iff_plane(corpus):
    for name, g in corpus.items():
        fw = tp.face_width(g)
        assert (fw == math.inf) == (g.genus() == 0), name


def test_ck_tetrahedron_polyhedral():
    rep = tp.is_ck_embedded(polyhedra.tetrahedron(), 3)
    assert rep.passed and rep.k_max == 3


def test_ck_degree_two_not_c3():
    rep = tp.is_ck_embedded(polyhedra.cycle(4), 3)
    assert not rep.passed
    assert rep.min_degree == 2


def test_ck_k7_c3():
    rep = tp.is_ck_embedded(polyhedra.k7_torus(), 3)
    assert rep.passed
    assert rep.face_width == 3
    assert rep.smallest_cut is None


def test_ck_via_cycles_face_of_size_one():
    rep = tp.ck_via_cycles(polyhedra.loop_vertex(), 2)
    assert not rep.passed
    assert "two_cycle" in rep.witness


def test_ck_via_cycles_digon_not_c3():
    rep = tp.ck_via_cycles(polyhedra.digon(), 3)
    assert not rep.passed
    assert rep.k_max == 2
    assert "four_cycle" in rep.witness


def test_ck_via_cycles_tetrahedron():
    assert tp.ck_via_cycles(polyhedra.tetrahedron(), 3).passed


def test_oracle_equivalence_on_corpus(corpus):
    for name, g in corpus.items():
        b = barycentric(g).graph
        for k in (2, 3):
            direct = tp.is_ck_embedded(g, k, bary_graph=b)
            cyc = tp.ck_via_cycles(g, k, bary_graph=b)
            assert direct.passed == cyc.passed, (name, k)


def test_cut_witnesses():
    rep = tp.is_ck_embedded(polyhedra.two_triangles_cutvertex(), 2)
    assert not rep.passed
    assert rep.smallest_cut == (0,)
    rep = tp.is_ck_embedded(polyhedra.k4_minus_edge(), 3)
    assert rep.smallest_cut is not None and len(rep.smallest_cut) == 2
