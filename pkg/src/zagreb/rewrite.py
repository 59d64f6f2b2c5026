"""The four degree-shifting rewrites.

Each operation validates its site, then returns a fresh graph with the
first reformulated index before and after and a map from old labels to
new ones for the vertices that survive.  Operations I, II and IV push
that index strictly up; operation III pulls it strictly down.
find_applicable lists every valid site so property sweeps can cover
whole corpora.

Two site conditions here are stricter than the loosest reading of the
construction sketches they come from: operation II requires the two
endpoints to have disjoint neighborhoods off the path (a shared one
would merge parallel edges when the endpoints fuse, changing the edge
count), and operation IV rejects sites where the endpoints have equal
core neighborhoods and the receiver has no pendants (the rewrite would
only swap the two vertices, leaving the index unchanged).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, _drop_vertices, _from_edges
from .indices import em1

KINDS = ("I", "II", "III", "IV")


class RewriteError(GraphError):
    """A rewrite was requested at a site that violates its preconditions."""


@dataclass(frozen=True)
class RewriteSpec:
    """Site parameters for one rewrite; fields unused by the kind stay None."""

    kind: str
    u: int | None = None
    v: int | None = None
    path: tuple[int, ...] | None = None
    root: int | None = None
    subtree: tuple[int, ...] | None = None
    reattach: int | None = None

    def params(self) -> dict:
        out = {"kind": self.kind}
        for name in ("u", "v", "path", "root", "subtree", "reattach"):
            val = getattr(self, name)
            if val is not None:
                out[name] = list(val) if isinstance(val, tuple) else val
        return out


@dataclass(frozen=True)
class RewriteResult:
    graph: Graph
    em1_before: int
    em1_after: int
    relabel: dict[int, int]


def _vertex(g: Graph, x, role: str) -> int:
    if not isinstance(x, int) or not 0 <= x < g.n:
        raise RewriteError(f"{role}={x!r} is not a vertex of an n={g.n} graph")
    return x


def operation_i(g: Graph, u: int, v: int) -> RewriteResult:
    """Move every pendant neighbor of u onto its neighbor v."""
    _vertex(g, u, "u")
    _vertex(g, v, "v")
    if not g.has_edge(u, v):
        raise RewriteError(f"operation I: ({u},{v}) is not an edge")
    if g.degree(v) < 2:
        raise RewriteError(f"operation I: v={v} needs degree >= 2, has {g.degree(v)}")
    pendants = []
    for w in g.neighbors(u):
        if w == v:
            continue
        if g.degree(w) != 1:
            raise RewriteError(
                f"operation I: neighbor {w} of u={u} is neither v nor a pendant"
            )
        pendants.append(w)
    if not pendants:
        raise RewriteError(f"operation I: u={u} has no pendant neighbors")
    moved = set(pendants)
    edges = [e for e in g.edges if e[0] not in moved and e[1] not in moved]
    edges += [(min(v, w), max(v, w)) for w in pendants]
    after = _from_edges(g.n, sorted(edges))
    return RewriteResult(after, em1(g), em1(after), {t: t for t in range(g.n)})


def operation_ii(g: Graph, path) -> RewriteResult:
    """Collapse a suspended path: fuse its endpoints, pendant its interior.

    The path edges go away; the endpoints fuse into one vertex carrying
    the former interior vertices plus one fresh vertex as pendants, so n
    and m are both preserved.
    """
    p = tuple(path)
    if len(p) < 3:
        raise RewriteError(f"operation II: path needs >= 3 vertices, got {len(p)}")
    for x in p:
        _vertex(g, x, "path vertex")
    if len(set(p)) != len(p):
        raise RewriteError("operation II: path repeats a vertex")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise RewriteError(f"operation II: ({a},{b}) is not an edge")
    for w in p[1:-1]:
        if g.degree(w) != 2:
            raise RewriteError(
                f"operation II: interior {w} has degree {g.degree(w)}, needs exactly 2"
            )
    u, v = p[0], p[-1]
    if g.has_edge(u, v):
        raise RewriteError(f"operation II: endpoints {u} and {v} are adjacent")
    off_u = set(g.neighbors(u)) - {p[1]}
    off_v = set(g.neighbors(v)) - {p[-2]}
    if len(off_u) < 2 or len(off_v) < 2:
        raise RewriteError(
            "operation II: each endpoint needs >= 2 neighbors off the path"
        )
    shared = off_u & off_v
    if shared:
        raise RewriteError(
            f"operation II: endpoints share off-path neighbors {sorted(shared)}; "
            f"fusing would merge parallel edges"
        )

    # survivors compact to 0..n-3 in order; the fused vertex takes n-2,
    # the fresh pendant n-1
    remap = {}
    for t in range(g.n):
        if t != u and t != v:
            remap[t] = len(remap)
    w_new, fresh = g.n - 2, g.n - 1
    path_edges = {(min(a, b), max(a, b)) for a, b in zip(p, p[1:])}
    edges = []
    for a, b in g.edges:
        if (a, b) in path_edges:
            continue
        if a in (u, v):
            edges.append((remap[b], w_new))
        elif b in (u, v):
            edges.append((remap[a], w_new))
        else:
            edges.append((remap[a], remap[b]))
    edges += [(remap[t], w_new) for t in p[1:-1]]
    edges.append((w_new, fresh))
    after = _from_edges(g.n, sorted(edges))
    relabel = dict(remap)
    relabel[u] = w_new
    relabel[v] = w_new
    return RewriteResult(after, em1(g), em1(after), relabel)


def operation_iii(g: Graph, root: int, subtree, reattach: int) -> RewriteResult:
    """Straighten a hanging subtree at root into a path toward reattach.

    The non-root subtree vertices and the edge root-reattach go away; a
    path of equally many fresh vertices is threaded from root to
    reattach, preserving n and m.
    """
    _vertex(g, root, "root")
    s = set(subtree)
    for x in s:
        _vertex(g, x, "subtree vertex")
    if not s:
        raise RewriteError("operation III: subtree is empty")
    if root in s:
        raise RewriteError(f"operation III: root {root} listed inside the subtree")
    y = _vertex(g, reattach, "reattach")
    if y in s:
        raise RewriteError(f"operation III: reattach {y} lies inside the subtree")
    if not g.has_edge(root, y):
        raise RewriteError(f"operation III: ({root},{y}) is not an edge")
    inner = 0
    for x in s:
        for w in g.neighbors(x):
            if w in s:
                inner += 1
            elif w != root:
                raise RewriteError(
                    f"operation III: subtree vertex {x} touches {w} outside it"
                )
    edge_count = inner // 2 + sum(1 for x in g.neighbors(root) if x in s)
    if edge_count != len(s):
        raise RewriteError(
            "operation III: subtree plus root must induce a tree "
            f"({edge_count} edges on {len(s) + 1} vertices)"
        )
    # tree needs connectivity too: walk it from the root
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for w in g.neighbors(x):
            if (w in s or w == root) and w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(s) + 1:
        raise RewriteError("operation III: subtree plus root must induce a tree")
    outside = [w for w in g.neighbors(root) if w not in s]
    if len(outside) < 2:
        raise RewriteError(
            f"operation III: root {root} needs >= 2 neighbors outside the subtree, "
            f"has {len(outside)}"
        )

    sub, remap = _drop_vertices(g, s)
    r, yy = remap[root], remap[y]
    cut = (min(r, yy), max(r, yy))
    edges = [e for e in sub.edges if e != cut]
    chain = list(range(sub.n, sub.n + len(s)))
    stops = [r] + chain + [yy]
    edges += [(min(a, b), max(a, b)) for a, b in zip(stops, stops[1:])]
    after = _from_edges(g.n, sorted(edges))
    return RewriteResult(after, em1(g), em1(after), dict(remap))


def operation_iv(g: Graph, u: int, v: int) -> RewriteResult:
    """Move every pendant of v onto u when u's core neighborhood covers v's."""
    _vertex(g, u, "u")
    _vertex(g, v, "v")
    if u == v:
        raise RewriteError("operation IV: u and v must differ")
    if g.has_edge(u, v):
        raise RewriteError(f"operation IV: {u} and {v} must not be adjacent")
    core_u = {w for w in g.neighbors(u) if g.degree(w) > 1}
    core_v = {w for w in g.neighbors(v) if g.degree(w) > 1}
    pend_u = [w for w in g.neighbors(u) if g.degree(w) == 1]
    pend_v = [w for w in g.neighbors(v) if g.degree(w) == 1]
    if not core_v:
        raise RewriteError(f"operation IV: v={v} has no non-pendant neighbor")
    if not core_v <= core_u:
        missing = sorted(core_v - core_u)
        raise RewriteError(
            f"operation IV: core neighbors {missing} of v={v} are not neighbors of u={u}"
        )
    if not pend_v:
        raise RewriteError(f"operation IV: v={v} has no pendants to move")
    if len(core_u) == len(core_v) and not pend_u:
        raise RewriteError(
            f"operation IV: u={u} and v={v} have equal core neighborhoods and u has "
            f"no pendants; the move would only swap the two vertices"
        )
    moved = set(pend_v)
    edges = [e for e in g.edges if e[0] not in moved and e[1] not in moved]
    edges += [(min(u, w), max(u, w)) for w in pend_v]
    after = _from_edges(g.n, sorted(edges))
    return RewriteResult(after, em1(g), em1(after), {t: t for t in range(g.n)})


def apply_rewrite(g: Graph, spec: RewriteSpec) -> RewriteResult:
    """Dispatch one RewriteSpec against its operation."""
    if spec.kind == "I":
        _need(spec, "u", "v")
        return operation_i(g, spec.u, spec.v)
    if spec.kind == "II":
        _need(spec, "path")
        return operation_ii(g, spec.path)
    if spec.kind == "III":
        _need(spec, "root", "subtree", "reattach")
        return operation_iii(g, spec.root, spec.subtree, spec.reattach)
    if spec.kind == "IV":
        _need(spec, "u", "v")
        return operation_iv(g, spec.u, spec.v)
    raise RewriteError(f"unknown rewrite kind {spec.kind!r}, choose from {KINDS}")


def _need(spec: RewriteSpec, *fields: str) -> None:
    for f in fields:
        if getattr(spec, f) is None:
            raise RewriteError(f"operation {spec.kind} needs {f!r}")


def find_applicable(g: Graph, kind: str) -> list[RewriteSpec]:
    """Every site where the operation's preconditions hold, in label order."""
    if kind == "I":
        return _sites_i(g)
    if kind == "II":
        return _sites_ii(g)
    if kind == "III":
        return _sites_iii(g)
    if kind == "IV":
        return _sites_iv(g)
    raise RewriteError(f"unknown rewrite kind {kind!r}, choose from {KINDS}")


def _sites_i(g: Graph) -> list[RewriteSpec]:
    out = []
    for u in range(g.n):
        nb = g.neighbors(u)
        if len(nb) < 2:
            continue
        anchors = [w for w in nb if g.degree(w) > 1]
        if len(anchors) == 1:
            out.append(RewriteSpec(kind="I", u=u, v=anchors[0]))
    return out


def _walk_chain(g: Graph, start: int, first: int):
    # follow degree-2 vertices from start towards first; returns the interior
    # run plus the flanking vertex, or None when the walk loops back to start
    prev, cur, run = start, first, []
    while g.degree(cur) == 2:
        if cur == start:
            return None
        run.append(cur)
        prev, cur = cur, next(x for x in g.neighbors(cur) if x != prev)
    run.append(cur)
    return run


def _sites_ii(g: Graph) -> list[RewriteSpec]:
    out = []
    used = set()
    for w in range(g.n):
        if g.degree(w) != 2 or w in used:
            continue
        left_first, right_first = sorted(g.neighbors(w))
        left = _walk_chain(g, w, left_first)
        if left is None:
            # a cycle component of degree-2 vertices: mark it all consumed
            used.add(w)
            prev, cur = w, left_first
            while cur != w:
                used.add(cur)
                prev, cur = cur, next(x for x in g.neighbors(cur) if x != prev)
            continue
        right = _walk_chain(g, w, right_first)
        a, b = left[-1], right[-1]
        interior = list(reversed(left[:-1])) + [w] + right[:-1]
        used.update(interior)
        if a == b:
            continue
        if g.degree(a) < 3 or g.degree(b) < 3 or g.has_edge(a, b):
            continue
        path = [a] + interior + [b]
        off_a = set(g.neighbors(a)) - {path[1]}
        off_b = set(g.neighbors(b)) - {path[-2]}
        if off_a & off_b:
            continue
        if a > b:
            path.reverse()
        out.append(RewriteSpec(kind="II", path=tuple(path)))
    out.sort(key=lambda s: s.path)
    return out


def _hanging_trees(g: Graph, root: int) -> list[tuple[int, ...]]:
    # components of g minus root that are trees tied to root by exactly one edge
    seen = {root}
    comps = []
    for t in range(g.n):
        if t in seen:
            continue
        comp = [t]
        seen.add(t)
        stack = [t]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        cset = set(comp)
        inner = sum(1 for x in comp for y in g.neighbors(x) if y in cset) // 2
        ties = sum(1 for x in g.neighbors(root) if x in cset)
        if inner == len(comp) - 1 and ties == 1:
            comps.append(tuple(sorted(comp)))
    comps.sort()
    return comps


def _sites_iii(g: Graph) -> list[RewriteSpec]:
    out = []
    for root in range(g.n):
        deg_r = g.degree(root)
        if deg_r < 3:
            continue  # one edge feeds the subtree, two must stay outside
        comps = _hanging_trees(g, root)
        k = len(comps)
        for pick in range(1, 1 << k):
            chosen = [comps[i] for i in range(k) if pick >> i & 1]
            if deg_r - len(chosen) < 2:
                continue
            s = sorted(x for comp in chosen for x in comp)
            sset = set(s)
            for y in sorted(g.neighbors(root)):
                if y not in sset:
                    out.append(
                        RewriteSpec(
                            kind="III", root=root, subtree=tuple(s), reattach=y
                        )
                    )
    return out


def _sites_iv(g: Graph) -> list[RewriteSpec]:
    pend = [g.degree(t) == 1 for t in range(g.n)]
    core = [
        frozenset(w for w in g.neighbors(t) if not pend[w]) for t in range(g.n)
    ]
    pend_ct = [sum(1 for w in g.neighbors(t) if pend[w]) for t in range(g.n)]
    out = []
    for u in range(g.n):
        for v in range(g.n):
            if u == v or g.has_edge(u, v):
                continue
            if not pend_ct[v] or not core[v] or not core[v] <= core[u]:
                continue
            if len(core[u]) == len(core[v]) and not pend_ct[u]:
                continue
            out.append(RewriteSpec(kind="IV", u=u, v=v))
    return out
