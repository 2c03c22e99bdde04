import json

import pytest
from hypothesis import given

from oraag import catalog
from oraag.errors import InvalidGraphError, ParseError
from oraag.formats import dumps_json, dumps_text, loads, parse_raw, parse_text

from conftest import oriented_graphs


@given(oriented_graphs(max_n=6))
def test_text_round_trip(g):
    assert loads(dumps_text(g)).same_as(g)


@given(oriented_graphs(max_n=6))
def test_json_round_trip(g):
    assert loads(dumps_json(g)).same_as(g)


def test_json_is_deterministic():
    a = dumps_json(catalog.fan5_special())
    assert a == dumps_json(loads(a))
    assert json.loads(a)["arcs"] == sorted(json.loads(a)["arcs"])


def test_text_comments_and_edges():
    g = loads("# header\nvertex a ordinary\nvertex b special  # trailing\n\nedge a c\nvertex c ordinary\narc a b\n")
    assert g.arcs == {("a", "c"), ("c", "a"), ("a", "b")}


def test_auto_detect_json():
    raw = parse_raw('  {"vertices": [{"id": "x", "kind": "special"}]}')
    assert raw == {"vertices": [{"id": "x", "kind": "special"}], "arcs": []}


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_text("vertex a")
    with pytest.raises(ParseError):
        parse_raw("{not json")
    with pytest.raises(ParseError):
        parse_raw('{"a": 1')


def test_invalid_graph_from_text():
    with pytest.raises(InvalidGraphError):
        loads("vertex s special\nvertex o ordinary\narc s o\n")
