"""Falsifiable checks of the extremal claims and rewrite monotonicity.

Theorems are checked by exhaustive enumeration at each order: observed
extrema are recorded even on pass, bounds are asserted as floors with a
separate attainment flag, and exact extremes are compared against the
registered family formulas together with the witness isomorphism
classes.  Lemmas are checked by sweeping every applicable rewrite site
over a corpus (all connected graphs up to order 7, plus seeded random
connected graphs up to order 12) and asserting strict monotonicity.
Every failing verdict embeds a decodable counterexample.
"""

from __future__ import annotations

import heapq
import json
import random
import time
from dataclasses import dataclass

from . import _kernel
from .canon import canonical_form
from .enumeration import EnumSpec, extremal_scan
from .families import CONSTRUCTORS, expected_em1, reference
from .graph import Graph, GraphError, _from_edges
from .graph6 import edge_table, graph6_encode
from .rewrite import RewriteSpec, apply_rewrite, find_applicable

THEOREM_CLAIMS = ("theorem-1", "theorem-2", "theorem-3", "theorem-4", "theorem-5")
LEMMA_CLAIMS = ("lemma-1", "lemma-2", "lemma-3", "lemma-4")

# claim -> cyclomatic number, exact extremes (value symbol, witness symbols)
# and/or floor symbol whose attainment is reported rather than asserted
_THEOREMS = {
    "theorem-1": {"c": 0, "min": ("path", ("path",)), "max": ("star", ("star",))},
    "theorem-2": {"c": 1, "min": ("cycle", ("cycle",)), "max": ("snm1", ("snm1",))},
    "theorem-3": {"c": 2, "floor": "bicyclic_floor", "max": ("snm2", ("snm2",))},
    "theorem-4": {"c": 3, "floor": "tricyclic_floor"},
    "theorem-5": {"c": 3, "max": ("snm3", ("snm3", "snk4"))},
}

_NOTES = {
    "theorem-1": "trees: the path minimizes em1 and the star maximizes it",
    "theorem-2": "unicyclic: the cycle minimizes em1, s_n_m(n, n) maximizes it",
    "theorem-3": "bicyclic: em1 floor 4n+34; maximum n^3-5n^2+16n+4 at s_n_m(n, n+1)",
    "theorem-4": "tricyclic: em1 floor 4n+68; attainment reported per order",
    "theorem-5": "tricyclic: maximum n^3-5n^2+20n+32 at s_n_m(n, n+2) and s_n_k4(n)",
}

# lemma -> (operation kind, em1 must strictly increase?)
_LEMMAS = {
    "lemma-1": ("I", True),
    "lemma-2": ("II", True),
    "lemma-3": ("III", False),
    "lemma-4": ("IV", True),
}
_DIRECTION = dict(_LEMMAS.values())


@dataclass(frozen=True)
class VerdictReport:
    """Machine-readable outcome of one claim check."""

    claim: str
    passed: bool
    params: dict
    rows: tuple[dict, ...]
    counterexamples: tuple[dict, ...]
    notes: tuple[str, ...]
    wall_time_s: float

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "claim": self.claim,
            "passed": self.passed,
            "params": self.params,
            "rows": list(self.rows),
            "counterexamples": list(self.counterexamples),
            "notes": list(self.notes),
            "wall_time_s": self.wall_time_s,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _witness_forms(symbols, n: int) -> set[str]:
    return {
        canonical_form(CONSTRUCTORS[s](n))
        for s in symbols
        if reference(s).min_n <= n
    }


def _expected_value(symbols, n: int) -> int:
    for s in symbols:
        if reference(s).min_n <= n:
            return expected_em1(s, n)
    raise GraphError(f"no registered formula among {symbols} covers n={n}")


def verify_theorem(claim, ns=None, workers=1, allow_large=False) -> VerdictReport:
    """Exhaustively check one extremal claim over the given orders."""
    if claim not in _THEOREMS:
        raise GraphError(f"unknown theorem claim {claim!r}, choose from {THEOREM_CLAIMS}")
    cfg = _THEOREMS[claim]
    ns = sorted(set(range(4, 9) if ns is None else ns))
    if not ns or ns[0] < 4:
        raise GraphError(f"theorem checks run at n >= 4, got {ns}")
    symbols = []
    for side in ("min", "max"):
        if side in cfg:
            symbols.extend(cfg[side][1])
    if "floor" in cfg:
        symbols.append(cfg["floor"])
    sources = {s: reference(s).provenance for s in symbols}
    t0 = time.perf_counter()
    rows = []
    cex = []
    for n in ns:
        spec = EnumSpec(n=n, c=cfg["c"], workers=workers, allow_large=allow_large)
        rep = extremal_scan(spec, "em1")
        row = {
            "n": n,
            "m": rep.m,
            "visited": rep.visited,
            "min": rep.min_value,
            "max": rep.max_value,
            "min_witnesses": list(rep.min_graphs),
            "max_witnesses": list(rep.max_graphs),
        }
        for side in ("min", "max"):
            if side not in cfg:
                continue
            value_symbol, wits = cfg[side]
            observed = rep.min_value if side == "min" else rep.max_value
            observed_forms = set(rep.min_graphs if side == "min" else rep.max_graphs)
            expected = _expected_value((value_symbol,) + tuple(wits), n)
            row[f"expected_{side}"] = expected
            if observed != expected:
                cex.append({
                    "n": n,
                    "check": f"{side} value",
                    "expected": expected,
                    "observed": observed,
                    "graphs": sorted(observed_forms),
                })
            forms = _witness_forms(wits, n)
            if observed_forms != forms:
                cex.append({
                    "n": n,
                    "check": f"{side} witnesses",
                    "expected": sorted(forms),
                    "observed": sorted(observed_forms),
                    "unexpected": sorted(observed_forms - forms),
                    "missing": sorted(forms - observed_forms),
                })
        if "floor" in cfg:
            bound = expected_em1(cfg["floor"], n)
            row["floor"] = bound
            row["attained"] = rep.min_value == bound
            if rep.min_value < bound:
                cex.append({
                    "n": n,
                    "check": "min floor",
                    "bound": bound,
                    "observed": rep.min_value,
                    "graphs": list(rep.min_graphs),
                })
        rows.append(row)
    return VerdictReport(
        claim=claim,
        passed=not cex,
        params={"ns": ns, "c": cfg["c"], "index": "em1", "references": sources},
        rows=tuple(rows),
        counterexamples=tuple(cex),
        notes=(_NOTES[claim],),
        wall_time_s=time.perf_counter() - t0,
    )


def _prufer_edges(n: int, seq) -> list[tuple[int, int]]:
    # classic decode; the sequence determines the labeled tree uniquely
    if n == 1:
        return []
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [t for t in range(n) if deg[t] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((min(a, b), max(a, b)))
    return edges


def random_connected_graph(rng: random.Random, n_min: int = 4, n_max: int = 12) -> Graph:
    """Random connected graph: a uniform labeled tree plus 0..3 extra edges."""
    n = rng.randint(n_min, n_max)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    edges = _prufer_edges(n, seq)
    c = rng.randint(0, 3)
    if c:
        have = set(edges)
        spare = [
            (u, v) for v in range(1, n) for u in range(v) if (u, v) not in have
        ]
        edges += rng.sample(spare, min(c, len(spare)))
    return _from_edges(n, sorted(edges))


def _iter_connected(n_max: int):
    # every connected labeled graph with n <= n_max, all edge counts
    for n in range(1, n_max + 1):
        table = edge_table(n)
        full = len(table)
        for m in range(max(n - 1, 0), full + 1):
            masks: list[int] = []
            _kernel.visit_connected(n, m, 0, None, masks.append)
            for mask in masks:
                yield _from_edges(
                    n, [table[i] for i in range(full) if mask >> i & 1]
                )


def _fixture(kind: str) -> tuple[Graph, RewriteSpec]:
    # one hand-checked demonstration site per operation
    if kind == "I":
        g = _from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
        return g, RewriteSpec(kind="I", u=2, v=1)
    if kind == "II":
        g = _from_edges(
            7, [(0, 1), (0, 2), (1, 2), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5)]
        )
        return g, RewriteSpec(kind="II", path=(2, 6, 3))
    if kind == "III":
        g = _from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
        return g, RewriteSpec(kind="III", root=0, subtree=(3,), reattach=2)
    g = _from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    return g, RewriteSpec(kind="IV", u=1, v=3)


def _lemma_pass(kinds, trials, seed, n_max, enum_max):
    stats = {k: {"sites": 0, "graphs_with_sites": 0} for k in kinds}
    bad = {k: [] for k in kinds}
    corpus_size = 0

    def check(g: Graph) -> None:
        nonlocal corpus_size
        corpus_size += 1
        degs = [len(g.neighbors(t)) for t in range(g.n)]
        has_pendant = 1 in degs
        has_two = 2 in degs
        for kind in kinds:
            # a pendant feeds I, III, IV; a degree-2 interior feeds II
            if kind == "II":
                if not has_two:
                    continue
            elif not has_pendant:
                continue
            sites = find_applicable(g, kind)
            if not sites:
                continue
            stats[kind]["graphs_with_sites"] += 1
            stats[kind]["sites"] += len(sites)
            increases = _DIRECTION[kind]
            for site in sites:
                res = apply_rewrite(g, site)
                delta = res.em1_after - res.em1_before
                if (delta > 0) != increases or delta == 0:
                    bad[kind].append({
                        "graph6": graph6_encode(g),
                        "site": site.params(),
                        "em1_before": res.em1_before,
                        "em1_after": res.em1_after,
                    })

    for g in _iter_connected(enum_max):
        check(g)
    rng = random.Random(seed)
    for _ in range(trials):
        check(random_connected_graph(rng, n_max=n_max))
    return corpus_size, stats, bad


def _lemma_report(claim, corpus_size, stats, bad, trials, seed, n_max, enum_max, wall):
    kind, increases = _LEMMAS[claim]
    fg, fspec = _fixture(kind)
    fres = apply_rewrite(fg, fspec)
    sites = stats[kind]["sites"]
    direction = "increase" if increases else "decrease"
    rows = (
        {
            "kind": "fixture",
            "graph6": graph6_encode(fg),
            "site": fspec.params(),
            "em1_before": fres.em1_before,
            "em1_after": fres.em1_after,
        },
        {
            "kind": "corpus",
            "corpus_size": corpus_size,
            "enumerated_max_n": enum_max,
            "random_trials": trials,
            "seed": seed,
            "random_max_n": n_max,
            "sites": sites,
            "graphs_with_sites": stats[kind]["graphs_with_sites"],
            "violations": len(bad[kind]),
        },
    )
    return VerdictReport(
        claim=claim,
        passed=not bad[kind] and sites >= 1,
        params={"trials": trials, "seed": seed, "n_max": n_max, "operation": kind},
        rows=rows,
        counterexamples=tuple(bad[kind]),
        notes=(f"operation {kind} must strictly {direction} em1 at every site",),
        wall_time_s=wall,
    )


def verify_lemma(claim, trials=1000, seed=0, n_max=12, enum_max=7) -> VerdictReport:
    """Sweep one operation over the corpus and check strict monotonicity."""
    if claim not in _LEMMAS:
        raise GraphError(f"unknown lemma claim {claim!r}, choose from {LEMMA_CLAIMS}")
    kind, _ = _LEMMAS[claim]
    t0 = time.perf_counter()
    corpus_size, stats, bad = _lemma_pass((kind,), trials, seed, n_max, enum_max)
    wall = time.perf_counter() - t0
    return _lemma_report(
        claim, corpus_size, stats, bad, trials, seed, n_max, enum_max, wall
    )


def lemma_sweep(trials=1000, seed=0, n_max=12, enum_max=7) -> dict[str, VerdictReport]:
    """All four lemma checks in one corpus pass; same verdicts as one-by-one."""
    t0 = time.perf_counter()
    kinds = tuple(_LEMMAS[c][0] for c in LEMMA_CLAIMS)
    corpus_size, stats, bad = _lemma_pass(kinds, trials, seed, n_max, enum_max)
    wall = time.perf_counter() - t0
    return {
        claim: _lemma_report(
            claim, corpus_size, stats, bad, trials, seed, n_max, enum_max, wall
        )
        for claim in LEMMA_CLAIMS
    }
