import random
from itertools import combinations

import pytest

from zagreb import (
    RewriteError,
    RewriteSpec,
    apply_rewrite,
    cyclomatic_number,
    em1,
    find_applicable,
    is_connected,
    make_graph,
    operation_i,
    operation_ii,
    operation_iii,
    operation_iv,
    path_graph,
    star_graph,
)
from util import bf_connected_all_m, naive_em1

TRIANGLE_PENDANT = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
TWO_TRIANGLES_BRIDGED = make_graph(
    7, [(0, 1), (0, 2), (1, 2), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5)]
)


# --- hand-checked demonstration sites ---------------------------------


def test_operation_i_moves_pendant_cluster():
    # x-v-u with two pendants on u; afterwards everything hangs on v
    g = make_graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    res = operation_i(g, 2, 1)
    assert (res.em1_before, res.em1_after) == (18, 36)
    assert res.graph.degree(1) == 4  # v became the star hub
    assert sorted(res.graph.degree(t) for t in range(5)) == [1, 1, 1, 1, 4]
    assert res.relabel == {t: t for t in range(5)}


def test_operation_i_on_p4_gives_star():
    res = operation_i(path_graph(4), 2, 1)
    assert (res.em1_before, res.em1_after) == (6, 12)
    assert sorted(res.graph.degree(v) for v in range(4)) == [1, 1, 1, 3]


def test_operation_ii_contracts_the_bridge_path():
    res = operation_ii(TWO_TRIANGLES_BRIDGED, (2, 6, 3))
    assert (res.em1_before, res.em1_after) == (62, 202)
    assert res.graph.n == 7 and res.graph.m == 8
    # both old endpoints land on the fused vertex
    assert res.relabel[2] == res.relabel[3]
    fused = res.relabel[2]
    assert res.graph.degree(fused) == 6


def test_operation_iii_threads_subtree_into_chain():
    res = operation_iii(TRIANGLE_PENDANT, 0, (3,), 2)
    assert (res.em1_before, res.em1_after) == (26, 16)
    assert all(res.graph.degree(v) == 2 for v in range(4))  # C4


def test_operation_iii_longer_subtree():
    g = make_graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (3, 4), (3, 5)])
    res = operation_iii(g, 0, (3, 4, 5), 2)
    assert (res.em1_before, res.em1_after) == (46, 24)
    assert all(res.graph.degree(v) == 2 for v in range(6))  # C6


def test_operation_iv_moves_pendants_across():
    res = operation_iv(path_graph(5), 1, 3)
    assert (res.em1_before, res.em1_after) == (10, 18)
    assert sorted(res.graph.degree(v) for v in range(5)) == [1, 1, 1, 2, 3]


# --- precondition rejections -------------------------------------------


@pytest.mark.parametrize(
    "op, fragment",
    [
        (lambda: operation_i(path_graph(4), 0, 1), "no pendant neighbors"),
        (lambda: operation_i(path_graph(5), 2, 3), "neither v nor a pendant"),
        (lambda: operation_i(path_graph(4), 0, 2), "not an edge"),
        (lambda: operation_i(star_graph(4), 0, 1), "needs degree >= 2"),
        (lambda: operation_ii(TWO_TRIANGLES_BRIDGED, (2, 6)), ">= 3 vertices"),
        (lambda: operation_ii(TWO_TRIANGLES_BRIDGED, (2, 6, 6)), "repeats"),
        (lambda: operation_ii(TWO_TRIANGLES_BRIDGED, (0, 2, 6, 3)), "needs exactly 2"),
        (lambda: operation_ii(make_graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)]),
                              (0, 1, 3)), ">= 2 neighbors off the path"),
        (lambda: operation_ii(TWO_TRIANGLES_BRIDGED, (2, 6, 5)), "not an edge"),
        (lambda: operation_iii(TRIANGLE_PENDANT, 0, (), 2), "empty"),
        (lambda: operation_iii(TRIANGLE_PENDANT, 0, (1,), 2), "touches"),
        (lambda: operation_iii(TRIANGLE_PENDANT, 0, (3,), 3), "inside the subtree"),
        (lambda: operation_iii(TRIANGLE_PENDANT, 1, (3,), 2), "touches 0 outside"),
        (lambda: operation_iv(path_graph(5), 1, 2), "must not be adjacent"),
        (lambda: operation_iv(path_graph(4), 1, 3), "no pendants to move"),
        (lambda: operation_iv(path_graph(5), 2, 2), "must differ"),
        (lambda: operation_iv(path_graph(5), 1, 4), "are not neighbors"),
        (lambda: operation_iv(make_graph(5, [(0, 1), (0, 3), (0, 4), (1, 2), (2, 3)]),
                              2, 0), "only swap the two vertices"),
    ],
)
def test_preconditions(op, fragment):
    with pytest.raises(RewriteError) as exc:
        op()
    assert fragment in str(exc.value)


def test_apply_rewrite_requires_fields():
    with pytest.raises(RewriteError, match="needs 'u'"):
        apply_rewrite(path_graph(4), RewriteSpec(kind="I"))
    with pytest.raises(RewriteError, match="unknown rewrite kind"):
        apply_rewrite(path_graph(4), RewriteSpec(kind="V"))


# --- structural conservation -------------------------------------------


def _sample_sites(n_graphs=250, seed=11):
    rng = random.Random(seed)
    corpus = [g for g in bf_connected_all_m(6)]
    for g in rng.sample(corpus, n_graphs):
        for kind in ("I", "II", "III", "IV"):
            for spec in find_applicable(g, kind):
                yield g, spec


def test_rewrites_conserve_order_size_and_connectivity():
    for g, spec in _sample_sites():
        res = apply_rewrite(g, spec)
        assert res.graph.n == g.n, spec
        assert res.graph.m == g.m, spec
        assert is_connected(res.graph), spec
        assert cyclomatic_number(res.graph) == cyclomatic_number(g), spec
        assert res.em1_before == naive_em1(g)
        assert res.em1_after == naive_em1(res.graph)


def test_rewrites_move_em1_the_right_way():
    for g, spec in _sample_sites(seed=12):
        res = apply_rewrite(g, spec)
        if spec.kind == "III":
            assert res.em1_after < res.em1_before, spec
        else:
            assert res.em1_after > res.em1_before, spec


# --- site discovery vs brute force -------------------------------------


def _bf_sites_i(g):
    out = set()
    for u in range(g.n):
        nb = g.neighbors(u)
        for v in nb:
            rest = nb - {v}
            if rest and g.degree(v) >= 2 and all(g.degree(w) == 1 for w in rest):
                out.add((u, v))
    return out


def _bf_sites_ii(g):
    # all simple paths whose interior is exactly the degree-2 vertices
    out = set()

    def extend(path):
        tail = path[-1]
        for w in g.neighbors(tail):
            if w in path:
                continue
            if g.degree(w) == 2:
                extend(path + [w])
            elif len(path) >= 2:
                u, v = path[0], w
                if g.degree(u) < 3 or g.degree(v) < 3 or g.has_edge(u, v):
                    continue
                interior = set(path[1:])
                off_u = g.neighbors(u) - interior - {v}
                off_v = g.neighbors(v) - interior - {u}
                if off_u & off_v:
                    continue
                full = [u, *path[1:], v]
                if full[0] > full[-1]:
                    full.reverse()
                out.add(tuple(full))

    for a in range(g.n):
        if g.degree(a) >= 3:
            extend([a])
    return out


def _bf_sites_iii(g):
    out = set()
    for root in range(g.n):
        others = [x for x in range(g.n) if x != root]
        for size in range(1, len(others) + 1):
            for sub in combinations(others, size):
                s = set(sub)
                if any(g.neighbors(x) - s - {root} for x in s):
                    continue
                inner = sum(len(g.neighbors(x) & s) for x in s) // 2
                ties = len(g.neighbors(root) & s)
                if inner + ties != size:
                    continue
                seen = {root}
                stack = [root]
                while stack:
                    w = stack.pop()
                    for x in g.neighbors(w):
                        if x in s and x not in seen:
                            seen.add(x)
                            stack.append(x)
                if len(seen) != size + 1:
                    continue
                outside = g.neighbors(root) - s
                if len(outside) < 2:
                    continue
                for y in outside:
                    out.add((root, sub, y))
    return out


def _bf_sites_iv(g):
    out = set()
    for u in range(g.n):
        for v in range(g.n):
            if u == v or g.has_edge(u, v):
                continue
            core_u = {w for w in g.neighbors(u) if g.degree(w) > 1}
            core_v = {w for w in g.neighbors(v) if g.degree(w) > 1}
            pend_u = sum(1 for w in g.neighbors(u) if g.degree(w) == 1)
            pend_v = sum(1 for w in g.neighbors(v) if g.degree(w) == 1)
            if not core_v or not core_v <= core_u or not pend_v:
                continue
            if len(core_u) == len(core_v) and pend_u == 0:
                continue
            out.add((u, v))
    return out


def _spec_key(spec):
    if spec.kind == "I":
        return (spec.u, spec.v)
    if spec.kind == "II":
        return spec.path
    if spec.kind == "III":
        return (spec.root, spec.subtree, spec.reattach)
    return (spec.u, spec.v)


@pytest.mark.parametrize(
    "kind, bf",
    [("I", _bf_sites_i), ("II", _bf_sites_ii), ("III", _bf_sites_iii), ("IV", _bf_sites_iv)],
)
def test_find_applicable_matches_brute_force(kind, bf):
    for g in bf_connected_all_m(5):
        got = {_spec_key(s) for s in find_applicable(g, kind)}
        assert got == bf(g), g.edges


def test_find_applicable_matches_brute_force_sampled_n6():
    rng = random.Random(31)
    corpus = bf_connected_all_m(6)
    for g in rng.sample(corpus, 400):
        for kind, bf in (
            ("I", _bf_sites_i),
            ("II", _bf_sites_ii),
            ("III", _bf_sites_iii),
            ("IV", _bf_sites_iv),
        ):
            got = {_spec_key(s) for s in find_applicable(g, kind)}
            assert got == bf(g), (kind, g.edges)


def test_find_applicable_sites_are_deterministically_ordered():
    g = TWO_TRIANGLES_BRIDGED
    for kind in ("I", "II", "III", "IV"):
        twice = [find_applicable(g, kind) for _ in range(2)]
        assert twice[0] == twice[1]
