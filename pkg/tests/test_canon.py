import random
from itertools import permutations

import pytest

from zagreb import (
    CANON_LIMIT,
    GraphError,
    canonical_form,
    cycle_graph,
    graph6_decode,
    make_graph,
    path_graph,
    star_graph,
)
from util import bf_connected, bf_connected_all_m, relabeled

# unlabeled connected graph counts, cross-checked against the standard
# enumeration references before freezing
CONNECTED_CLASSES = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
# connected classes at fixed cyclomatic number; n = 7 only for trees to
# keep this file fast, the larger slices run in the acceptance suite
CLASSES_BY_C = {
    0: {4: 2, 5: 3, 6: 6, 7: 11},
    1: {4: 2, 5: 5, 6: 13},
    2: {4: 1, 5: 5, 6: 19},
    3: {4: 1, 5: 4, 6: 22},
}


def test_invariant_under_all_relabelings_small():
    for g in bf_connected_all_m(4):
        want = canonical_form(g)
        for perm in permutations(range(4)):
            assert canonical_form(relabeled(g, perm)) == want


def test_invariant_under_random_relabelings():
    rng = random.Random(41)
    for n in (5, 6, 7):
        for g in rng.sample(bf_connected(n, n + 1), 40):
            want = canonical_form(g)
            for _ in range(8):
                perm = list(range(n))
                rng.shuffle(perm)
                assert canonical_form(relabeled(g, perm)) == want


@pytest.mark.parametrize("n, want", sorted(CONNECTED_CLASSES.items()))
def test_class_counts_all_connected(n, want):
    forms = {canonical_form(g) for g in bf_connected_all_m(n)}
    assert len(forms) == want


@pytest.mark.parametrize("c", [0, 1, 2, 3])
def test_class_counts_by_cyclomatic_number(c):
    for n, want in CLASSES_BY_C[c].items():
        forms = {canonical_form(g) for g in bf_connected(n, n - 1 + c)}
        assert len(forms) == want


def test_canonical_form_decodes_to_isomorphic_graph():
    rng = random.Random(97)
    for g in rng.sample(bf_connected(7, 9), 60):
        back = graph6_decode(canonical_form(g))
        assert back.n == g.n and back.m == g.m
        assert sorted(back.degree(v) for v in range(7)) == sorted(
            g.degree(v) for v in range(7)
        )


def test_named_families_have_distinct_forms():
    forms = {
        canonical_form(path_graph(6)),
        canonical_form(star_graph(6)),
        canonical_form(cycle_graph(6)),
    }
    assert len(forms) == 3


def test_size_cap():
    big = make_graph(CANON_LIMIT + 1, [(0, 1)])
    with pytest.raises(GraphError, match="capped at"):
        canonical_form(big)
