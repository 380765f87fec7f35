import itertools
import json

import pytest

import ordered_ramsey as orr


def all_colorings(m):
    edges = list(itertools.combinations(range(1, m + 1), 2))
    for bits in range(2 ** len(edges)):
        c = orr.Coloring(m, 2)
        for k, (i, j) in enumerate(edges):
            c.set(i, j, (bits >> k) & 1)
        yield c


def relation(e, f):
    (a, b), (c, d) = sorted([e, f])
    if b < c:
        return "separated"
    return "crossing" if b < d else "nested"


def test_classify_matches_interleaving():
    for quad in itertools.combinations(range(1, 7), 4):
        for e in itertools.combinations(quad, 2):
            f = tuple(v for v in quad if v not in e)
            assert orr.classify_pair(e, f) == relation(e, f)
    with pytest.raises(orr.OrderedRamseyError):
        orr.classify_pair((1, 2), (2, 3))


def test_spanning_trees_on_all_colorings_of_5():
    for c in all_colorings(5):
        for rel in ("non-crossing", "non-nested", "non-separated"):
            cert = orr.find_spanning_tree(c, rel)
            assert len(cert) == 4
            assert orr.validate(c, cert) == (True, "")
            forbidden = rel.removeprefix("non-")
            for e, f in itertools.combinations(cert.edges, 2):
                assert c.color(*e) == cert.color
                if not set(e) & set(f):
                    assert relation(e, f) != forbidden


def test_json_round_trip():
    c = orr.random_coloring(7, 3, seed=5)
    assert orr.Coloring.from_json(c.to_json()) == c
    assert orr.random_coloring(7, 3, seed=5) == c
    cert = orr.find_spanning_tree(orr.random_coloring(6, 2, seed=1), "non-nested")
    back = orr.Certificate.from_json(cert.to_json(6))
    assert back.edges == cert.edges and back.constraint == cert.constraint
    assert json.loads(cert.to_json(6))["version"] == orr.__version__
    with pytest.raises(orr.OrderedRamseyError):
        orr.Coloring.from_json('{"m": 3, "t": 2, "edges": [[1, 2, 0]]}')


def test_matchings():
    c = orr.random_coloring(8, 2, seed=3)
    for theorem in ("14", "16", "12"):
        cert = orr.find_matching(c, theorem, 3)
        assert len(cert) == 3 and orr.validate(c, cert)[0]
    size, witness = orr.max_matching(c, 0, constraint="non-nested")
    assert len(witness) == size and orr.validate(c, witness)[0]


def test_construction_is_crossing_only():
    c = orr.construct("prop15", t=3)
    for col in range(3):
        cls = c.color_class(col)
        for e, f in itertools.combinations(cls, 2):
            if not set(e) & set(f):
                assert relation(e, f) == "crossing"


def test_small_ramsey_numbers():
    assert orr.ramsey_number("crossing", [2, 2])[0] == 5
    value, witness = orr.ramsey_number("non-nested", [2, 3])
    assert value == 7 and witness.m == 6
    assert orr.max_matching(witness, 0, constraint="non-nested")[0] < 2
    assert orr.max_matching(witness, 1, constraint="non-nested")[0] < 3


def test_kneser():
    for t in range(2, 5):
        chi, colors = orr.kneser_chromatic_number(t)
        assert chi == t + 1
        for a, b in orr.kneser_edges(t):
            assert colors[a] != colors[b]
    assert orr.kneser_vertices(2) == [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]


def test_draw():
    svg = orr.draw_edges_svg(4, [(1, 4), (2, 3)], "twisted")
    assert svg.startswith("<svg") and 'data-edge="1,4"' in svg
    assert "<polyline" not in orr.draw_edges_svg(3, [], "convex")
