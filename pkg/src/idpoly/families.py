"""Parametric graph families and a reproducible random-graph generator.

Random graphs
-------------
``random`` draws G(n, prob) with a counter-based SplitMix64 stream, so a
corpus is fully determined by ``(n, prob, seed)`` on every platform:

* the candidate pairs ``(u, v)``, ``u < v``, are visited in lexicographic
  order and numbered ``i = 0, 1, 2, ...``;
* ``z = (seed + (i + 1) * 0x9E3779B97F4A7C15) mod 2**64`` is mixed with the
  SplitMix64 finalizer (xor-shift 30, multiply 0xBF58476D1CE4E5B9, xor-shift
  27, multiply 0x94D049BB133111EB, xor-shift 31, all mod 2**64);
* the pair is an edge iff ``(z >> 11) < round(prob * 2**53)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .graph import Graph

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

KINDS = ("edgeless", "complete", "complete-bipartite", "path", "cycle", "star", "random")


def splitmix64(seed: int, counter: int) -> int:
    z = (seed + (counter + 1) * GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int = 0
    p: int = 0
    q: int = 0
    prob: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown family {self.kind!r}; expected one of {KINDS}")
        if min(self.n, self.p, self.q) < 0:
            raise GraphError("family size parameters must be >= 0")
        if not 0.0 <= self.prob <= 1.0:
            raise GraphError(f"edge probability {self.prob} outside [0, 1]")
        if self.kind == "cycle" and self.n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        if self.kind == "star" and self.n < 1:
            raise GraphError("a star needs at least 1 vertex")

    @property
    def order(self) -> int:
        return self.p + self.q if self.kind == "complete-bipartite" else self.n

    def describe(self) -> str:
        if self.kind == "complete-bipartite":
            return f"K_{{{self.p},{self.q}}}"
        if self.kind == "random":
            return f"random(n={self.n}, prob={self.prob}, seed={self.seed})"
        symbol = {"edgeless": "E", "complete": "K", "path": "P", "cycle": "C", "star": "S"}
        return f"{symbol[self.kind]}_{self.n}"


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [*((i, i + 1) for i in range(n - 1)), (0, n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def edgeless_graph(n: int) -> Graph:
    return Graph(n)


def complete_bipartite_graph(p: int, q: int) -> Graph:
    return Graph(p + q, [(a, p + b) for a in range(p) for b in range(q)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: centre 0, leaves 1..n-1."""
    return Graph(n, [(0, i) for i in range(1, n)])


def random_graph(n: int, prob: float, seed: int) -> Graph:
    threshold = round(prob * (1 << 53))
    edges = []
    counter = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (splitmix64(seed, counter) >> 11) < threshold:
                edges.append((u, v))
            counter += 1
    return Graph(n, edges)


def generate(spec: FamilySpec) -> Graph:
    kind = spec.kind
    if kind == "edgeless":
        return edgeless_graph(spec.n)
    if kind == "complete":
        return complete_graph(spec.n)
    if kind == "complete-bipartite":
        return complete_bipartite_graph(spec.p, spec.q)
    if kind == "path":
        return path_graph(spec.n)
    if kind == "cycle":
        return cycle_graph(spec.n)
    if kind == "star":
        return star_graph(spec.n)
    return random_graph(spec.n, spec.prob, spec.seed)


def all_graphs(n: int):
    """Every labelled simple graph on n vertices, edge subsets in binary-counter order."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def random_corpus(count: int, n: int, seed: int, prob: float = 0.5):
    """``count`` random graphs; graph i uses seed ``seed + i``."""
    for i in range(count):
        yield random_graph(n, prob, seed + i)
