import itertools
import json

import pytest

from fanopencils.coxeter import (
    EXPECTED_ARRAY,
    CoxVertex,
    Graph,
    build_coxeter,
    connected,
    cox_adjacent,
    cox_neighbors,
    cox_translate,
    cox_vertices,
    diameter,
    distance_regular_array,
    girth_with_witness,
    to_dot,
    to_json,
    validate_coxeter,
)


def test_vertex_universe():
    verts = cox_vertices()
    assert len(verts) == 28
    assert len(set(verts)) == 28
    for v in verts:
        assert v.base not in v.line


def test_vertex_validation():
    with pytest.raises(ValueError):
        CoxVertex(0, (2, 1, 4))  # not sorted
    with pytest.raises(ValueError):
        CoxVertex(1, (1, 2, 4))  # base on line


def test_pencil_and_label():
    v = CoxVertex(0, (1, 2, 4))
    assert v.pencil() == ((1, 3), (2, 6), (4, 5))
    assert v.label() == "[0,13,26,45]"


def test_counts_and_regularity(cox):
    assert cox.n == 28
    assert len(cox.edges()) == 42
    assert all(len(r) == 3 for r in cox.nbrs)
    assert all(len(set(r)) == 3 for r in cox.nbrs)


def test_connected_and_diameter(cox):
    assert connected(cox)
    assert diameter(cox) == 4


def test_girth_seven_with_valid_witness(cox):
    girth, witness = girth_with_witness(cox)
    assert girth == 7
    assert len(witness) == 7 and len(set(witness)) == 7
    for k in range(7):
        assert witness[(k + 1) % 7] in cox.nbrs[witness[k]]


def test_distance_regular_array(cox):
    assert distance_regular_array(cox) == EXPECTED_ARRAY


def test_closed_form_neighbors_example():
    v = CoxVertex(0, (1, 2, 4))
    expected = {
        CoxVertex(3, (1, 5, 6)),
        CoxVertex(6, (2, 3, 5)),
        CoxVertex(5, (3, 4, 6)),
    }
    assert set(cox_neighbors(v)) == expected


def test_alignment_rule_agrees_with_closed_form(cox):
    # the arc-projection semantics and the companion-swap formula must
    # define the same 42 edges
    verts = cox.vertices
    for i, j in itertools.combinations(range(cox.n), 2):
        assert cox_adjacent(verts[i], verts[j]) == (j in cox.nbrs[i])


def test_adjacency_is_irreflexive_and_symmetric(cox):
    verts = cox.vertices
    for v in verts[:6]:
        assert not cox_adjacent(v, v)
    for i in range(0, cox.n, 5):
        for j in cox.nbrs[i]:
            assert cox_adjacent(verts[j], verts[i])


def test_translation_is_a_graph_automorphism(cox):
    verts = cox.vertices
    index = {v: i for i, v in enumerate(verts)}
    perm = [index[cox_translate(v, 1)] for v in verts]
    for u in range(cox.n):
        assert sorted(perm[w] for w in cox.nbrs[u]) == list(cox.nbrs[perm[u]])


def test_validation_report(cox, cox_group):
    report = validate_coxeter(cox)
    assert report.passed, [c.name for c in report.failures()]
    names = [c.name for c in report.checks]
    assert names == [
        "counts",
        "cubic",
        "connected",
        "girth",
        "distance_regular",
        "aut_order",
        "vertex_transitive",
    ]
    assert cox_group.order == 336


def test_validation_locates_retargeted_edge(cox):
    rows = [list(r) for r in cox.nbrs]
    swap = 0 if rows[3][1] != 0 else 1
    rows[3][1] = swap
    broken = Graph(cox.vertices, rows)
    report = validate_coxeter(broken)
    assert not report.passed
    assert report.failures()


def test_exports(cox):
    payload = json.loads(to_json(cox))
    assert len(payload["vertices"]) == 28
    assert len(payload["edges"]) == 42
    assert payload["vertices"][0] == "[0,13,26,45]"
    dot = to_dot(cox)
    assert dot.startswith("graph coxeter")
    assert dot.count(" -- ") == 42
    assert to_json(cox) == to_json(build_coxeter())
