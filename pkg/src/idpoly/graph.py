"""Loop-aware simple graphs and the vertex/edge operations used by the recurrences.

Vertices are the integers ``0..n-1``.  Edges are unordered pairs of distinct
vertices; loops are kept in a separate set and only mean "this vertex may not
be chosen".  Every vertex-removing operation re-indexes the survivors and
keeps a ``labels`` tuple mapping new indices back to the caller's labels.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import GraphError, GraphParseError

Edge = tuple[int, int]
VertexSet = frozenset  # frozenset[int] of vertex indices


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable finite graph with an optional set of looped vertices.

    ``edges`` is kept in insertion order so that serialization is stable;
    equality and hashing ignore that order.
    """

    __slots__ = ("n", "edges", "loops", "labels", "adj", "_edge_set", "_hash")

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge] = (),
        loops: Iterable[int] = (),
        labels: Iterable[int] | None = None,
    ):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        ordered: list[Edge] = []
        seen: set[Edge] = set()
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"edge ({u}, {v}) is a loop; pass it in loops")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = _norm_edge(u, v)
            if e in seen:
                continue
            seen.add(e)
            ordered.append(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        loop_set = frozenset(loops)
        for v in loop_set:
            if not 0 <= v < n:
                raise GraphError(f"loop on {v} out of range for n={n}")
        lab = tuple(range(n)) if labels is None else tuple(labels)
        if len(lab) != n:
            raise GraphError("labels must have one entry per vertex")
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(ordered)
        self.loops: frozenset[int] = loop_set
        self.labels: tuple[int, ...] = lab
        # adj[v] is the bitmask of non-loop neighbours of v
        self.adj: tuple[int, ...] = tuple(adj)
        self._edge_set = frozenset(seen)
        self._hash = None

    # -- basic queries -------------------------------------------------

    @classmethod
    def empty(cls) -> Graph:
        return cls(0)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return self._edge_set

    @property
    def loop_mask(self) -> int:
        mask = 0
        for v in self.loops:
            mask |= 1 << v
        return mask

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self._edge_set

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return mask_to_set(self.adj[v])

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        if self.n == 0:
            raise GraphError("minimum degree of the empty graph is undefined")
        return min(a.bit_count() for a in self.adj)

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def is_simple(self) -> bool:
        return not self.loops

    def index_of(self, label: int) -> int:
        """Current index of the vertex that carried ``label`` in the source graph."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"no vertex labelled {label}") from None

    def with_loops(self, loops: Iterable[int]) -> Graph:
        return Graph(self.n, self.edges, self.loops | set(loops), self.labels)

    def relabeled(self) -> Graph:
        """Same graph with identity labels."""
        return Graph(self.n, self.edges, self.loops)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} not in graph with n={self.n}")

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self._edge_set == other._edge_set
            and self.loops == other.loops
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._edge_set, self.loops, self.labels))
        return self._hash

    def __repr__(self) -> str:
        parts = [f"n={self.n}", f"edges={list(self.edges)}"]
        if self.loops:
            parts.append(f"loops={sorted(self.loops)}")
        if self.labels != tuple(range(self.n)):
            parts.append(f"labels={self.labels}")
        return f"Graph({', '.join(parts)})"


# -- vertex-set helpers ------------------------------------------------


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def set_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_subset(G: Graph, W: Iterable[int]) -> list[int]:
    members = sorted(set(W))
    for v in members:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} not in graph with n={G.n}")
    return members


# -- operations --------------------------------------------------------


def induced_subgraph(G: Graph, W: Iterable[int]) -> Graph:
    """G[W], re-indexed in increasing order of W.

    ``result.labels[i]`` is the label (in G's own labelling) of new vertex i.
    """
    members = _check_subset(G, W)
    pos = {v: i for i, v in enumerate(members)}
    edges = [(pos[u], pos[v]) for u, v in G.edges if u in pos and v in pos]
    loops = [pos[v] for v in G.loops if v in pos]
    return Graph(len(members), edges, loops, [G.labels[v] for v in members])


def delete_vertex(G: Graph, v: int) -> Graph:
    G._check_vertex(v)
    return induced_subgraph(G, (u for u in range(G.n) if u != v))


def delete_vertices(G: Graph, S: Iterable[int]) -> Graph:
    drop = set(_check_subset(G, S))
    return induced_subgraph(G, (u for u in range(G.n) if u not in drop))


def delete_edge(G: Graph, e: Edge) -> Graph:
    target = _norm_edge(*e)
    if target not in G.edge_set:
        raise GraphError(f"edge {e} not in graph")
    return Graph(G.n, (f for f in G.edges if f != target), G.loops, G.labels)


def closed_neighborhood(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """N[S] as a vertex set."""
    mask = 0
    for v in _check_subset(G, S):
        mask |= G.adj[v] | (1 << v)
    return mask_to_set(mask)


def remove_closed_neighborhood(G: Graph, S: Iterable[int]) -> Graph:
    """G - N[S]; with S={u,v} this is G - N[u,v]."""
    return delete_vertices(G, closed_neighborhood(G, S))


def circ(G: Graph, v: int) -> Graph:
    """G∘v: delete v and put a loop on every neighbour of v."""
    G._check_vertex(v)
    looped = G.with_loops(iter_bits(G.adj[v]))
    return delete_vertex(looped, v)


def odot(G: Graph, v: int) -> Graph:
    """G⊙v: drop every edge whose endpoints are both neighbours of v."""
    G._check_vertex(v)
    nb = G.adj[v]
    keep = [(a, b) for a, b in G.edges if not (nb >> a & 1 and nb >> b & 1)]
    return Graph(G.n, keep, G.loops, G.labels)


def components(G: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest member. Loops connect nothing."""
    return [mask_to_set(c) for c in component_masks(G.adj, G.full_mask)]


def component_masks(adj: tuple[int, ...] | list[int], alive: int) -> list[int]:
    """Components of the subgraph induced by the bitmask ``alive``."""
    out = []
    rest = alive
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            grow = 0
            for u in iter_bits(frontier):
                grow |= adj[u]
            frontier = grow & alive & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def iso_count(G: Graph, W: Iterable[int] | None = None) -> int:
    """Number of isolated vertices of G[W] (all of G when W is None).

    A looped vertex never counts as isolated.
    """
    mask = G.full_mask if W is None else set_to_mask(_check_subset(G, W))
    loops = G.loop_mask
    return sum(
        1 for v in iter_bits(mask) if not (G.adj[v] & mask) and not (loops >> v & 1)
    )


# -- products ----------------------------------------------------------


def _require_simple(*graphs: Graph) -> None:
    for g in graphs:
        if g.loops:
            raise GraphError("graph products are defined for simple graphs only")


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """G's vertices first, then H's shifted by |V(G)|."""
    _require_simple(G, H)
    k = G.n
    return Graph(G.n + H.n, [*G.edges, *((u + k, v + k) for u, v in H.edges)])


def join(G: Graph, H: Graph) -> Graph:
    u = disjoint_union(G, H)
    cross = [(a, G.n + b) for a in range(G.n) for b in range(H.n)]
    return Graph(u.n, [*u.edges, *cross])


def corona(G: Graph, H: Graph) -> Graph:
    """G's vertices 0..n-1, then the copy of H attached to vertex i at n + i*|V(H)|."""
    _require_simple(G, H)
    n, h = G.n, H.n
    edges = list(G.edges)
    for i in range(n):
        base = n + i * h
        edges.extend((base + a, base + b) for a, b in H.edges)
        edges.extend((i, base + a) for a in range(h))
    return Graph(n + n * h, edges)


def expansion(G: Graph, r: int) -> Graph:
    """r-expansion: vertex v becomes the block v*r .. v*r + r-1."""
    if r < 1:
        raise GraphError(f"expansion factor must be >= 1, got {r}")
    _require_simple(G)
    edges = [
        (u * r + i, v * r + j) for u, v in G.edges for i in range(r) for j in range(r)
    ]
    return Graph(G.n * r, edges)


# -- edge-list format --------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format. ``u u`` records a loop."""
    header = None
    edges: list[Edge] = []
    loops: list[int] = []
    seen: set[Edge] = set()
    n = expected = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphParseError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(lineno, f"not an integer pair: {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError(lineno, f"malformed header {line!r}")
            header = (a, b)
            n, expected = a, b
            continue
        if len(seen) == expected:
            raise GraphParseError(lineno, f"more than the {expected} declared lines")
        for x in (a, b):
            if not 0 <= x < n:
                raise GraphParseError(lineno, f"vertex {x} out of range (n={n})")
        e = _norm_edge(a, b)
        if e in seen:
            kind = "loop" if a == b else "edge"
            raise GraphParseError(lineno, f"duplicate {kind} {a} {b}")
        seen.add(e)
        if a == b:
            loops.append(a)
        else:
            edges.append(e)
    if header is None:
        raise GraphParseError(0, "missing 'n m' header")
    if len(seen) != expected:
        raise GraphParseError(0, f"header declares {expected} lines, found {len(seen)}")
    return Graph(n, edges, loops)


def serialize_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m + len(G.loops)}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    lines.extend(f"{v} {v}" for v in sorted(G.loops))
    return "\n".join(lines) + "\n"
