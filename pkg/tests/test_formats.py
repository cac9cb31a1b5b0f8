import pytest
from hypothesis import given

from efdepth import graph as g
from efdepth.formats import (
    DecodeError, decode, decode_edgelist, decode_graph6, encode, encode_edgelist, encode_graph6, sniff_decode,
)

from .strategies import graphs


@pytest.mark.parametrize("G, text", [
    (g.empty(0), b"?"),
    (g.complete(2), b"A_"),
    (g.empty(2), b"A?"),
    (g.path(3), b"Bg"),
    (g.cycle(5), b"Dhc"),
])
def test_graph6_known(G, text):
    assert encode_graph6(G) == text
    assert decode_graph6(text) == G


@given(graphs(max_n=12))
def test_graph6_round_trip(G):
    assert decode_graph6(encode_graph6(G)) == G


@given(graphs(max_n=8))
def test_edgelist_round_trip(G):
    assert decode_edgelist(encode_edgelist(G)) == G
    assert sniff_decode(encode_edgelist(G)) == G
    assert decode(encode(G, "edgelist"), "edgelist") == G


def test_large_graph6():
    G = g.cycle(62)
    assert decode_graph6(encode_graph6(G)) == G
    with pytest.raises(Exception):
        encode_graph6(g.empty(63))


@pytest.mark.parametrize("bad", [b"", b"A", b"A__", b"A\x7f", b"Ab"])
def test_graph6_rejects(bad):
    with pytest.raises(DecodeError):
        decode_graph6(bad)


def test_edgelist_errors_have_lines():
    with pytest.raises(DecodeError) as exc:
        decode_edgelist("n 3\ne 0 1\ne 1 0\n")
    assert exc.value.position == 3
    with pytest.raises(DecodeError):
        decode_edgelist("n 2\ne 0 5\n")
    with pytest.raises(DecodeError):
        decode_edgelist("e 0 1\n")
    assert decode_edgelist("# comment\nn 2\ne 0 1\n") == g.complete(2)
