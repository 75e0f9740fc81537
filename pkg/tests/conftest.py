import random

import pytest

from surfops import polyhedra
from surfops.embedded import EmbeddedGraph


def relabeled(g, seed):
    """Randomly permute dart and vertex identifiers of a graph."""
    rng = random.Random(seed)
    n = g.dart_count
    dperm = list(range(n))
    rng.shuffle(dperm)
    nv = g.vertex_count
    vperm = list(range(nv))
    rng.shuffle(vperm)
    rotations = [None] * nv
    for v in range(nv):
        rot = list(g.rotations()[v])
        k = rng.randrange(len(rot))
        rotations[vperm[v]] = [dperm[d] for d in rot[k:] + rot[:k]]
    pairing = [None] * n
    for d in range(n):
        pairing[dperm[d]] = dperm[g.inv[d]]
    labels = None
    if g.labels is not None:
        labels = [None] * nv
        for v in range(nv):
            labels[vperm[v]] = g.labels[v]
    return EmbeddedGraph.from_rotations(rotations, pairing, labels=labels)


def named_seeds():
    return {
        "tetrahedron": polyhedra.tetrahedron(),
        "cube": polyhedra.cube(),
        "octahedron": polyhedra.octahedron(),
        "dodecahedron": polyhedra.dodecahedron(),
        "icosahedron": polyhedra.icosahedron(),
        "k7": polyhedra.k7_torus(),
    }


def small_menagerie():
    return {
        "single_edge": polyhedra.single_edge(),
        "digon": polyhedra.digon(),
        "theta": polyhedra.theta(),
        "loop_vertex": polyhedra.loop_vertex(),
        "bouquet_torus": polyhedra.bouquet_torus(),
        "bouquet_plane": polyhedra.bouquet_plane(),
        "cycle3": polyhedra.cycle(3),
        "cycle4": polyhedra.cycle(4),
        "cutvertex": polyhedra.two_triangles_cutvertex(),
        "k4_minus_edge": polyhedra.k4_minus_edge(),
    }


def build_corpus():
    """At least 50 embedded graphs covering loops, parallel edges, a face
    of size one, a degree-2 vertex, a 2-cut and the K7 torus."""
    corpus = dict(named_seeds())
    corpus.update(small_menagerie())
    rng = random.Random(20240)
    i = 0
    while len(corpus) < 52:
        g = polyhedra.random_embedded(rng, rng.randint(2, 8))
        corpus["random_%02d" % i] = g
        i += 1
    return corpus


@pytest.fixture(scope="session")
def seeds():
    return named_seeds()


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
