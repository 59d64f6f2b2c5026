import random

import pytest

from zagreb import (
    Graph6Error,
    cycle_graph,
    graph6_decode,
    graph6_encode,
    make_graph,
    path_graph,
    star_graph,
)
from util import all_pairs, bf_connected_all_m, random_graph

K4 = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])

# pinned encodings, cross-checked against an independent reference
# implementation before freezing
PINS = [
    (K4, "C~"),
    (make_graph(1, []), "@"),
    (path_graph(4), "Ch"),
    (cycle_graph(5), "Dhc"),
    (star_graph(4), "Cs"),
]


@pytest.mark.parametrize("g, line", PINS)
def test_pinned_encodings(g, line):
    assert graph6_encode(g) == line
    assert graph6_decode(line) == g


def test_round_trip_exhaustive_small():
    for n in range(1, 6):
        for g in bf_connected_all_m(n):
            assert graph6_decode(graph6_encode(g)) == g


def test_round_trip_random():
    rng = random.Random(1905)
    for _ in range(300):
        g = random_graph(rng, n_max=12)
        assert graph6_decode(graph6_encode(g)) == g


@pytest.mark.parametrize("n", [62, 63, 64, 100, 1000])
def test_extended_size_header(n):
    # sparse triangle so only the header varies across the boundary sizes
    g = make_graph(n, [(0, 1), (1, 2), (0, 2)])
    line = graph6_encode(g)
    assert (line[0] == "~") == (n > 62)
    back = graph6_decode(line)
    assert back.n == n and back.edges == g.edges


@pytest.mark.parametrize(
    "line, fragment, position",
    [
        ("", "empty graph6 line", None),
        ("C" + chr(33), "outside graph6 range", 1),
        ("C", "need 1 adjacency bytes", 1),
        ("Dhc?", "trailing garbage", 3),
        ("~~~~", "n > 258047", 1),
        ("~?", "truncated extended size prefix", 2),
        ("?", "zero vertices", 0),
    ],
)
def test_decode_rejects_malformed(line, fragment, position):
    with pytest.raises(Graph6Error) as exc:
        graph6_decode(line)
    assert fragment in str(exc.value)
    if position is not None:
        assert exc.value.position == position


def test_decode_rejects_set_padding_bit():
    # K3 is "Bw": 3 data bits, 3 padding bits that must stay zero
    assert graph6_encode(cycle_graph(3)) == "Bw"
    with pytest.raises(Graph6Error, match="padding bit"):
        graph6_decode("Bx")


def test_trailing_newline_tolerated():
    assert graph6_decode("C~\n") == K4


def test_column_bit_order():
    # bit k of the payload is edge (u, v) with k = v(v-1)/2 + u
    pairs = sorted(all_pairs(5), key=lambda e: e[1] * (e[1] - 1) // 2 + e[0])
    for k, (u, v) in enumerate(pairs):
        g = make_graph(5, [(u, v)])
        payload = graph6_encode(g)[1:]
        bits = 0
        for j, ch in enumerate(payload):
            bits |= (ord(ch) - 63) << (6 * ((len(payload) - 1) - j))
        width = 6 * len(payload)
        assert bits >> (width - 1 - k) & 1 == 1
        assert bits.bit_count() == 1
