import random

import pytest

from heawood.canon import are_isomorphic, canonical_key
from heawood.graph import (
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    from_edges,
    path_graph,
)
from heawood.minors import (
    DEG4_FORM_KEYS,
    build_deg3_form,
    classify_extension,
    has_clean_path,
    has_k5_minor,
    has_k33_minor,
    is_split_k33,
    nearest_part,
    simplify,
    simplify_relative,
    split_closure,
    vertex_splits,
)

from conftest import petersen, random_graph


def test_minor_knowns():
    assert has_k5_minor(complete_graph(5))
    assert not has_k5_minor(complete_graph(4))
    assert has_k33_minor(complete_bipartite(3, 3))
    assert not has_k33_minor(complete_graph(4))
    # Petersen has both K5 and K3,3 minors
    assert has_k5_minor(petersen())
    assert has_k33_minor(petersen())
    # K5 has a K3,3 minor only after... it does not: too few vertices
    # to contract into six branch sets of a bipartite pattern
    assert not has_k33_minor(complete_graph(4))
    assert has_k33_minor(complete_graph(6))


def test_simplify():
    # K5 is already simplified; adding a pendant path changes nothing
    g = from_edges(7, complete_graph(5).edges() + [(0, 5), (5, 6)])
    s, trace = simplify(g)
    assert are_isomorphic(s, complete_graph(5))
    # smoothing collapses triangles with hair all the way to nothing
    g = from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    s, _ = simplify(g)
    assert s.n == 0
    # trees and cycles with degree-2 smoothing vanish or stabilize
    s, _ = simplify(path_graph(5))
    assert s.n == 0
    rng = random.Random(41)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 10), 0.3)
        s, trace = simplify(g)
        assert s.n == 0 or min(s.degrees()) >= 3
        # replay applies the same reduction steps to an equal graph
        assert trace.replay(g) == s


def test_simplify_relative_keeps_anchor():
    # anchor of degree 1 must survive a relative simplification
    g = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)])
    s, relab = simplify_relative(g, 0)
    assert 0 in relab


def test_split_recognizer_base_cases():
    k33 = complete_bipartite(3, 3)
    cert = is_split_k33(k33)
    assert cert is not None
    cert.validate(k33)
    assert sorted(map(len, cert.parts)) == [3, 3]
    assert all(len(p) == 2 for p in cert.paths)
    assert cert.hair == ()
    assert is_split_k33(complete_graph(5)) is None  # chi = -5
    assert is_split_k33(cycle_graph(6)) is None  # chi = 0
    assert is_split_k33(petersen()) is None  # chi = -5


def test_split_recognizer_on_split_images():
    levels = split_closure(complete_bipartite(3, 3), 2)
    assert [len(lv) for lv in levels][0] == 1
    for level in levels:
        for g in level:
            cert = is_split_k33(g)
            assert cert is not None
            cert.validate(g)
            # quotient of the certificate paths is K3,3 again
            assert len(cert.paths) == 9
    # size and chi bookkeeping of a single split
    for h in vertex_splits(complete_bipartite(3, 3)):
        assert h.n == 7 and h.size == 10
        assert h.euler_characteristic() == -3


def test_nearest_part_and_clean_paths():
    # subdivide one edge of K3,3 and hang a pendant off the new vertex
    k33 = complete_bipartite(3, 3)
    g = from_edges(
        8,
        [e for e in k33.edges() if e != (0, 3)]
        + [(0, 6), (6, 3), (6, 7)],
    )
    cert = is_split_k33(g)
    assert cert is not None
    assert nearest_part(cert, g, 6).kind == "edge"
    assert nearest_part(cert, g, 7).kind == "edge"  # hair resolves to 6
    assert nearest_part(cert, g, 0) == nearest_part(cert, g, 0)
    assert nearest_part(cert, g, 0).kind == "vertex"
    # a path from the pendant to original 0 avoiding other originals
    assert has_clean_path(g, 7, 0, cert.originals)
    with pytest.raises(GraphError):
        nearest_part(cert, g, 99)


def test_deg3_form_shape():
    f = build_deg3_form()
    assert f.n == 10 and f.size == 15
    assert sorted(f.degrees()) == [3] * 10
    assert f.is_triangle_free()
    assert len(DEG4_FORM_KEYS) == 7
    assert list(DEG4_FORM_KEYS) == sorted(DEG4_FORM_KEYS)


def test_classify_extension():
    k33 = complete_bipartite(3, 3)
    # join a new vertex to three vertices of one part: 1-apex (remove it)
    g1 = from_edges(7, k33.edges() + [(6, 0), (6, 1), (6, 2)])
    assert classify_extension(g1, 6).kind == "one-apex"
    with pytest.raises(GraphError):
        classify_extension(g1, 0)  # degree 5 site
    # the frozen degree-3 form itself: vertex 9 joins the subdivision
    # vertices of three disjoint edges
    f = build_deg3_form()
    out = classify_extension(f, 9)
    assert out.kind == "deg3"
    assert str(out) == "deg3"


def test_clean_path_blocked_by_originals():
    # on a path 0-1-2, reaching 2 from 0 must pass vertex 1
    p3 = path_graph(3)
    assert has_clean_path(p3, 0, 2, [2])
    assert not has_clean_path(p3, 0, 2, [1, 2])
    # a source that is itself a blocked original never has a clean path
    k33 = complete_bipartite(3, 3)
    assert not has_clean_path(k33, 0, 1, [0, 1, 2])
