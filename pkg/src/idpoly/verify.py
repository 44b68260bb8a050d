"""Differential checks of the recurrences, sum identities and set properties.

Every polynomial side is evaluated with :func:`id_brute_force` as the oracle.
Instances whose parameters do not satisfy an identity's hypotheses come back
with status ``"unmet"`` rather than as failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Iterator

from . import graph as g
from .algorithms import ALGORITHMS, enumerate_essential_sets, enumerate_mids, id_brute_force
from .graph import Graph, mask_to_set
from .polynomial import X, Polynomial, one_minus_x_pow

PASS, FAIL, UNMET = "pass", "fail", "unmet"


@dataclass
class Report:
    identity: str
    instance: str
    status: str
    witness: dict[str, Any] | None = None
    value: Polynomial | None = None

    def __post_init__(self):
        if (self.witness is None) != (self.status == PASS):
            raise ValueError("a witness is required exactly when the check did not pass")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "identity": self.identity,
            "instance": self.instance,
            "status": self.status,
        }
        if self.value is not None:
            out["value"] = self.value.to_strings()
        if self.witness is not None:
            out["witness"] = {
                k: v.to_strings() if isinstance(v, Polynomial) else v
                for k, v in self.witness.items()
            }
        return out

    def line(self) -> str:
        text = f"{self.status.upper():5} {self.identity:26} {self.instance}"
        if self.value is not None:
            text += f"  value={self.value}"
        if self.witness:
            detail = ", ".join(f"{k}={v}" for k, v in self.witness.items())
            text += f"  [{detail}]"
        return text


def describe(G: Graph) -> str:
    text = f"n={G.n} E={[list(e) for e in G.edges]}"
    if G.loops:
        text += f" L={sorted(G.loops)}"
    return text


def _compare(kind: str, inst: str, lhs: Polynomial, rhs: Polynomial, **extra) -> Report:
    if lhs == rhs:
        return Report(kind, inst, PASS, value=lhs)
    return Report(kind, inst, FAIL, {"lhs": lhs, "rhs": rhs, **extra})


def _unmet(kind: str, inst: str, reason: str) -> Report:
    return Report(kind, inst, UNMET, {"reason": reason})


def _circ_minus_closed(G: Graph, v: int, u: int) -> Graph:
    """G∘v - N[u], with N[u] taken in G∘v."""
    H = g.circ(G, v)
    return g.remove_closed_neighborhood(H, [H.index_of(G.labels[u])])


# -- individual identities -------------------------------------------------


def _vertex_recurrence(G: Graph, v: int, inst: str) -> Report:
    kind = "vertex-recurrence"
    if v in G.loops:
        return _unmet(kind, inst, f"vertex {v} is looped")
    bf = id_brute_force
    rhs = (
        bf(g.delete_vertex(G, v))
        - bf(g.circ(G, v))
        + X * bf(g.remove_closed_neighborhood(G, [v]))
    )
    return _compare(kind, inst, bf(G), rhs, vertex=v)


def _looped_vertex_recurrence(G: Graph, v: int, inst: str) -> Report:
    H = G.with_loops([v])
    bf = id_brute_force
    rhs = bf(g.delete_vertex(H, v)) - bf(g.circ(H, v))
    return _compare("looped-vertex-recurrence", inst, bf(H), rhs, vertex=v)


def _odot_recurrence(G: Graph, v: int, inst: str) -> Report:
    bf = id_brute_force
    D = g.odot(G, v)
    rhs = bf(g.delete_vertex(G, v)) + bf(D) - bf(g.delete_vertex(D, v))
    return _compare("odot-recurrence", inst, bf(G), rhs, vertex=v)


def _edge_recurrence(G: Graph, e: tuple[int, int], inst: str) -> Report:
    kind = "edge-recurrence"
    u, v = e
    if not G.has_edge(u, v):
        return _unmet(kind, inst, f"{e} is not an edge")
    if G.loops:
        return _unmet(kind, inst, "graph has loops")
    bf = id_brute_force
    rhs = (
        bf(g.delete_edge(G, e))
        - X * X * bf(g.remove_closed_neighborhood(G, [u, v]))
        + X * bf(_circ_minus_closed(G, v, u))
        + X * bf(_circ_minus_closed(G, u, v))
    )
    return _compare(kind, inst, bf(G), rhs, edge=list(e))


def _open_twin(G: Graph, u: int, v: int, inst: str) -> Report:
    kind = "open-twin"
    if u == v or G.adj[u] != G.adj[v]:
        return _unmet(kind, inst, f"N({u}) != N({v})")
    if G.loops:
        return _unmet(kind, inst, "graph has loops")
    bf = id_brute_force
    rest = g.delete_vertices(G, g.closed_neighborhood(G, [v]) | {u})
    rhs = bf(g.delete_vertex(G, v)) + (X * X - X) * bf(rest)
    return _compare(kind, inst, bf(G), rhs, pair=[u, v])


def _closed_twin(G: Graph, u: int, v: int, inst: str) -> Report:
    kind = "closed-twin"
    if u == v or G.adj[u] | 1 << u != G.adj[v] | 1 << v:
        return _unmet(kind, inst, f"N[{u}] != N[{v}]")
    if G.loops:
        return _unmet(kind, inst, "graph has loops")
    bf = id_brute_force
    rhs = bf(g.delete_edge(G, (u, v))) + (2 * X - X * X) * bf(
        g.remove_closed_neighborhood(G, [u])
    )
    return _compare(kind, inst, bf(G), rhs, pair=[u, v])


def induced_id_table(G: Graph) -> dict[int, Polynomial]:
    """id(G[W]) for every W ⊆ V, keyed by the bitmask of W.

    Each entry counts the U ⊆ W that are independent, loop-free and satisfy
    N[U] ⊇ W, i.e. the definition applied to G[W].
    """
    n, adj, loops = G.n, G.adj, G.loop_mask
    size = 1 << n
    nb = [0] * size
    indep = bytearray(size)
    indep[0] = 1
    for U in range(1, size):
        low = U & -U
        rest = U ^ low
        a = adj[low.bit_length() - 1]
        nb[U] = nb[rest] | a
        indep[U] = indep[rest] and not (a & rest) and not (U & loops)
    table = {}
    for W in range(size):
        counts = [0] * (W.bit_count() + 1)
        U = W
        while True:
            if indep[U] and (nb[U] | U) & W == W:
                counts[U.bit_count()] += 1
            if not U:
                break
            U = (U - 1) & W
        table[W] = Polynomial(counts)
    return table


def alternating_sum(G: Graph) -> Polynomial:
    total = Polynomial()
    for W, p in induced_id_table(G).items():
        total = total - p if W.bit_count() & 1 else total + p
    return total


def _alternating_sum(G: Graph, inst: str) -> Report:
    kind = "alternating-sum"
    if G.loops:
        return _unmet(kind, inst, "graph has loops")
    return _compare(kind, inst, alternating_sum(G), one_minus_x_pow(g.iso_count(G)))


def _antichain(G: Graph, inst: str) -> Report:
    sets = enumerate_mids(G)
    for a, b in combinations(sets, 2):
        if a < b or b < a:
            return Report("antichain", inst, FAIL, {"contained": [sorted(a), sorted(b)]})
    return Report("antichain", inst, PASS)


def maximal_independent_sets(G: Graph) -> list[frozenset[int]]:
    """Independent sets to which no further vertex can be added (simple G).

    Grows independent sets vertex by vertex, then keeps those where every
    outside vertex would create an edge.
    """
    nbrs = [set(G.neighbors(v)) for v in range(G.n)]
    out = []

    def grow(current: list[int], start: int) -> None:
        members = set(current)
        if all(nbrs[v] & members for v in range(G.n) if v not in members):
            out.append(frozenset(current))
        for v in range(start, G.n):
            if not nbrs[v] & members:
                current.append(v)
                grow(current, v + 1)
                current.pop()

    grow([], 0)
    return out


def _mis_equivalence(G: Graph, inst: str) -> Report:
    kind = "mis-equivalence"
    if G.loops:
        return _unmet(kind, inst, "graph has loops")
    mids = enumerate_mids(G)
    mis = maximal_independent_sets(G)
    count = id_brute_force(G)(1)
    if set(mids) == set(mis) and len(mids) == len(mis) == count:
        return Report(kind, inst, PASS)
    return Report(
        kind,
        inst,
        FAIL,
        {
            "only_ids": sorted(map(sorted, set(mids) - set(mis))),
            "only_mis": sorted(map(sorted, set(mis) - set(mids))),
            "value_at_1": count,
        },
    )


def _essential_lemma(G: Graph, inst: str) -> Report:
    kind = "essential-lemma"
    if G.loops:
        return _unmet(kind, inst, "graph has loops")
    if G.n == 0:
        return _unmet(kind, inst, "empty graph")
    family = set(enumerate_essential_sets(G))
    smallest = min(len(X_) for X_ in family)
    missing = [v for v in range(G.n) if mask_to_set(G.adj[v]) not in family]
    if smallest == G.min_degree() and not missing:
        return Report(kind, inst, PASS)
    return Report(
        kind,
        inst,
        FAIL,
        {"min_size": smallest, "min_degree": G.min_degree(), "missing_neighborhoods": missing},
    )


def _five_way(G: Graph, inst: str) -> Report:
    kind = "five-way"
    if G.loops:
        return _unmet(kind, inst, "graph has loops")
    results = {}
    for name, fn in ALGORITHMS.items():
        if name == "essential" and G.n == 0:
            continue
        results[name] = fn(G)
    ref = results["brute"]
    bad = {k: p for k, p in results.items() if p != ref}
    if not bad:
        return Report(kind, inst, PASS, value=ref)
    return Report(kind, inst, FAIL, {"brute": ref, **bad})


# -- dispatch ----------------------------------------------------------------

VERTEX_KINDS = ("vertex-recurrence", "looped-vertex-recurrence", "odot-recurrence")
EDGE_KINDS = ("edge-recurrence",)
PAIR_KINDS = ("open-twin", "closed-twin")
GRAPH_KINDS = ("alternating-sum", "antichain", "mis-equivalence", "essential-lemma", "five-way")
IDENTITIES = VERTEX_KINDS + EDGE_KINDS + PAIR_KINDS + GRAPH_KINDS


def verify_identity(
    kind: str,
    G: Graph,
    *,
    v: int | None = None,
    e: tuple[int, int] | None = None,
    pair: tuple[int, int] | None = None,
    name: str | None = None,
) -> Report:
    """Check one identity on one instance; never raises for a bad instance."""
    inst = name or describe(G)
    if kind not in IDENTITIES:
        raise ValueError(f"unknown identity {kind!r}; expected one of {IDENTITIES}")
    if kind in VERTEX_KINDS:
        if v is None or not 0 <= v < G.n:
            return _unmet(kind, inst, f"vertex {v} not in graph")
        inst = f"{inst} v={v}"
        fn = {
            "vertex-recurrence": _vertex_recurrence,
            "looped-vertex-recurrence": _looped_vertex_recurrence,
            "odot-recurrence": _odot_recurrence,
        }[kind]
        return fn(G, v, inst)
    if kind in EDGE_KINDS:
        if e is None:
            return _unmet(kind, inst, "no edge given")
        return _edge_recurrence(G, tuple(e), f"{inst} e={list(e)}")
    if kind in PAIR_KINDS:
        if pair is None or not all(0 <= x < G.n for x in pair):
            return _unmet(kind, inst, f"pair {pair} not in graph")
        u, w = pair
        fn = _open_twin if kind == "open-twin" else _closed_twin
        return fn(G, u, w, f"{inst} pair={list(pair)}")
    fn = {
        "alternating-sum": _alternating_sum,
        "antichain": _antichain,
        "mis-equivalence": _mis_equivalence,
        "essential-lemma": _essential_lemma,
        "five-way": _five_way,
    }[kind]
    return fn(G, inst)


def instances(kind: str, G: Graph) -> Iterator[dict[str, Any]]:
    """Parameter sets covering every vertex / edge / pair for ``kind``."""
    if kind in VERTEX_KINDS:
        for v in range(G.n):
            yield {"v": v}
    elif kind in EDGE_KINDS:
        for e in G.edges:
            yield {"e": e}
    elif kind == "open-twin":
        for u in range(G.n):
            for w in range(G.n):
                if u != w:
                    yield {"pair": (u, w)}
    elif kind == "closed-twin":
        for pair in combinations(range(G.n), 2):
            yield {"pair": pair}
    else:
        yield {}


def verify_all(
    kinds: Iterable[str], graphs: Iterable[tuple[str, Graph]]
) -> Iterator[Report]:
    """Reports in instance order: graph by graph, then identity, then parameter."""
    kinds = list(kinds)
    for name, G in graphs:
        for kind in kinds:
            for params in instances(kind, G):
                yield verify_identity(kind, G, name=name, **params)


@dataclass
class Summary:
    passed: int = 0
    skipped: int = 0
    failed: int = 0
    kinds: set[str] = field(default_factory=set)

    def add(self, report: Report) -> None:
        self.kinds.add(report.identity)
        if report.status == PASS:
            self.passed += 1
        elif report.status == UNMET:
            self.skipped += 1
        else:
            self.failed += 1

    @property
    def total(self) -> int:
        return self.passed + self.skipped + self.failed

    def line(self) -> str:
        return (
            f"SUMMARY identities={len(self.kinds)} checks={self.total} "
            f"passed={self.passed} skipped={self.skipped} failed={self.failed}"
        )
