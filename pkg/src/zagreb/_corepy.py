"""Pure-Python enumeration kernel.

Enumerates the size-m edge subsets of the complete graph on 0..n-1 that
form connected labeled graphs.  Generation is depth-first over edge
indices in column (graph6) order; a branch is abandoned when the
remaining candidate edges cannot reach m, or when the chosen edges plus
the whole remaining suffix can no longer connect the graph.  In column
order the second prune only bites once the suffix lies inside the last
column (edges into vertex n-1): the suffix there is {(u, n-1): u >= u0},
so it rescues exactly the components owning some vertex >= u0.  With
unions rooted at the component maximum, the first edge index that kills
a component is lastg + min(component maxima), a per-node loop cap.

The compiled kernel in _corecy.pyx mirrors these semantics exactly; the
two must stay behaviorally identical (the test suite compares them).
"""

from __future__ import annotations

from .graph6 import edge_table

_KINDS = ("m1", "m2", "em1", "em2")


def _prep(n: int):
    table = edge_table(n)
    U = [e[0] for e in table]
    V = [e[1] for e in table]
    return len(table), U, V


def _driver(n: int, m: int, lo: int, hi: int, on_leaf) -> int:
    """Run the DFS; call on_leaf(mask, deg, sel) per connected subset.

    on_leaf gets the live degree list and chosen-edge-index list; it must
    not keep references to them.  Returns the number of connected subsets
    delivered.  The first-edge index is restricted to [lo, hi) so that
    disjoint ranges partition the work.
    """
    if m < 0:
        raise ValueError(f"edge count must be nonnegative, got {m}")
    E, U, V = _prep(n)
    if hi is None or hi > E:
        hi = E
    if m == 0:
        if n == 1 and lo == 0:
            on_leaf(0, [0], [])
            return 1
        return 0
    if m > E or lo >= hi:
        return 0

    deg = [0] * n
    sel = [0] * m
    par = list(range(n))
    lastg = E - (n - 1)  # index of the first edge into vertex n-1
    visited = 0

    def leaf():
        nonlocal visited
        for t in range(n):
            par[t] = t
        comps = n
        for j in sel:
            a = U[j]
            while par[a] != a:
                par[a] = par[par[a]]
                a = par[a]
            b = V[j]
            while par[b] != b:
                par[b] = par[par[b]]
                b = par[b]
            if a != b:
                par[a] = b
                comps -= 1
        if comps == 1:
            visited += 1
            mask = 0
            for j in sel:
                mask |= 1 << j
            on_leaf(mask, deg, sel)

    def tail_cap(depth: int) -> int:
        # lastg + min over components (incl. singletons) of their max vertex
        for t in range(n):
            par[t] = t
        for jj in range(depth):
            j = sel[jj]
            a = U[j]
            while par[a] != a:
                par[a] = par[par[a]]
                a = par[a]
            b = V[j]
            while par[b] != b:
                par[b] = par[par[b]]
                b = par[b]
            if a != b:
                if a < b:
                    par[a] = b
                else:
                    par[b] = a
        mmin = 0
        for t in range(n):
            if par[t] == t:
                mmin = t
                break
        return lastg + mmin

    def rec(start: int, need: int) -> None:
        limit = E - need
        at = m - need
        nd = need - 1
        seg1 = limit if limit < lastg - 1 else lastg - 1
        for i in range(start, seg1 + 1):
            u = U[i]
            v = V[i]
            deg[u] += 1
            deg[v] += 1
            sel[at] = i
            if nd:
                rec(i + 1, nd)
            else:
                leaf()
            deg[u] -= 1
            deg[v] -= 1
        if limit >= lastg:
            lim2 = tail_cap(at)
            if lim2 > limit:
                lim2 = limit
            i2 = start if start > lastg else lastg
            for i in range(i2, lim2 + 1):
                u = U[i]
                v = V[i]
                deg[u] += 1
                deg[v] += 1
                sel[at] = i
                if nd:
                    rec(i + 1, nd)
                else:
                    leaf()
                deg[u] -= 1
                deg[v] -= 1

    # top level: chosen is empty, so the tail cap is simply lastg
    top_end = min(hi - 1, E - m, lastg)
    for i in range(lo, top_end + 1):
        u = U[i]
        v = V[i]
        deg[u] += 1
        deg[v] += 1
        sel[0] = i
        if m > 1:
            rec(i + 1, m - 1)
        else:
            leaf()
        deg[u] -= 1
        deg[v] -= 1
    return visited


def scan_extremal(n: int, m: int, index: str, lo: int = 0, hi: int | None = None):
    """Min/max of the index over connected (n, m) graphs with witnesses.

    Returns (visited, min_value, max_value, min_masks, max_masks); the
    None/empty variant when the range [lo, hi) contains no graph.
    """
    if index not in _KINDS:
        raise ValueError(f"unknown index {index!r}")
    E, U, V = _prep(n)
    state = {"min": None, "max": None}
    min_masks: list[int] = []
    max_masks: list[int] = []

    if index == "em1":

        def value(deg, sel):
            t = 0
            for j in sel:
                t += (deg[U[j]] + deg[V[j]] - 2) ** 2
            return t

    elif index == "m1":

        def value(deg, sel):
            return sum(d * d for d in deg)

    elif index == "m2":

        def value(deg, sel):
            t = 0
            for j in sel:
                t += deg[U[j]] * deg[V[j]]
            return t

    else:  # em2: group incident edge pairs per shared endpoint

        def value(deg, sel):
            s = [0] * n
            q = [0] * n
            for j in sel:
                u = U[j]
                v = V[j]
                ed = deg[u] + deg[v] - 2
                s[u] += ed
                s[v] += ed
                q[u] += ed * ed
                q[v] += ed * ed
            return sum((s[t] * s[t] - q[t]) // 2 for t in range(n))

    def on_leaf(mask, deg, sel):
        val = value(deg, sel)
        mn = state["min"]
        if mn is None or val < mn:
            state["min"] = val
            min_masks.clear()
            min_masks.append(mask)
        elif val == mn:
            min_masks.append(mask)
        mx = state["max"]
        if mx is None or val > mx:
            state["max"] = val
            max_masks.clear()
            max_masks.append(mask)
        elif val == mx:
            max_masks.append(mask)

    visited = _driver(n, m, lo, E if hi is None else hi, on_leaf)
    return visited, state["min"], state["max"], min_masks, max_masks


def visit_connected(n: int, m: int, lo: int, hi: int | None, callback) -> int:
    """Call callback(mask) once per connected labeled (n, m) graph."""
    return _driver(n, m, lo, hi, lambda mask, deg, sel: callback(mask))


def census_masks(n: int, m: int, lo: int = 0, hi: int | None = None) -> list[int]:
    """Masks of the connected (n, m) graphs with minimum degree >= 2."""
    out: list[int] = []

    def on_leaf(mask, deg, sel):
        for d in deg:
            if d < 2:
                return
        out.append(mask)

    _driver(n, m, lo, hi, on_leaf)
    return out
