from importlib import resources

import pytest

from singlink import graphfile
from singlink.errors import BadIds, GraphParseError, NotConnected
from singlink.plumbing import build_graph, e8_graph, random_graph


def fixtures():
    data = resources.files("singlink").joinpath("data")
    return sorted((p.name, p.read_text(encoding="utf-8")) for p in data.iterdir() if p.name.endswith(".graph"))


@pytest.mark.parametrize("name,text", fixtures(), ids=[n for n, _ in fixtures()])
def test_fixture_round_trip(name, text):
    assert graphfile.emit(graphfile.parse(text)) == text


def test_random_round_trip(rng):
    for n in range(100):
        g = random_graph(rng, rng.randint(1, 10), weight_range=(-9, 3), max_genus=4, extra_edges=rng.randint(0, 3))
        if n % 3 == 0:
            g = build_graph(g.vertices, g.edges, name=f"g{n}")
        text = graphfile.emit(g)
        assert graphfile.parse(text) == g
        assert graphfile.emit(graphfile.parse(text)) == text


def test_parse_tolerates_comments_and_order():
    text = "# a comment\n\ngraph T\nedge 1 0\n  vertex 1 -2 0\nvertex 0 -3 1   \n"
    g = graphfile.parse(text)
    assert graphfile.emit(g) == "graph T\nvertex 0 -3 1\nvertex 1 -2 0\nedge 0 1\n"


def test_emit_e8_is_canonical():
    text = graphfile.emit(e8_graph())
    assert text.startswith("graph E8\nvertex 0 -2 0\n")
    assert text.endswith("edge 6 7\n")


@pytest.mark.parametrize("text,exc", [
    ("vertex 0 -2 0\nedge 0 0\n", GraphParseError),
    ("vertex 0 -2 0\nvertex 0 -3 0\n", GraphParseError),
    ("vertex 0 -2 0\nedge 0 1\n", GraphParseError),
    ("vertex 0 -2\n", GraphParseError),
    ("vertex 0 x 0\n", GraphParseError),
    ("vertex 0 -2 -1\n", GraphParseError),
    ("vertex 0 -2 0\ngraph late\n", GraphParseError),
    ("graph a\ngraph b\nvertex 0 -2 0\n", GraphParseError),
    ("graph two words\nvertex 0 -2 0\n", GraphParseError),
    ("node 0 -2 0\n", GraphParseError),
    ("vertex 1 -2 0\n", BadIds),
    ("", BadIds),
    ("vertex 0 -2 0\nvertex 1 -2 0\n", NotConnected),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        graphfile.parse(text)


def test_error_reports_line_number():
    with pytest.raises(GraphParseError, match="line 3"):
        graphfile.parse("vertex 0 -2 0\n\nedge 0 0\n")


def test_load_dump(tmp_path):
    path = tmp_path / "e8.graph"
    graphfile.dump(e8_graph(), path)
    assert graphfile.load(path) == e8_graph()
