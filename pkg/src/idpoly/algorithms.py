"""Five routes to the independent domination polynomial, plus ind(G, x) and set enumerators.

=====================  =====================================================
``id_brute_force``     literal definition over all 2^n vertex subsets
``id_recursive``       memoized vertex recurrence with component splitting
``id_inclusion_exclusion``  alternating sum of (1-x)^iso(G[W])
``id_essential_formula``    the same sum restricted to i-essential sets
``id_coefficient_formula``  coefficient-by-coefficient binomial sums
=====================  =====================================================

Loops follow the domination convention: a looped vertex may never be in the
set, and still has to be dominated by a non-loop neighbour.
"""

from __future__ import annotations

import sys
from math import comb

from . import _kernels
from .errors import GraphError, LoopedGraphError, SizeBoundError
from .graph import Graph, component_masks, iter_bits, mask_to_set
from .polynomial import ONE, X, ZERO, Polynomial, one_minus_x_pow

BOUNDS = {
    "brute": 26,
    "inclusion-exclusion": 24,
    "essential": 24,
    "coefficient": 22,
    "enumerate": 22,
}


def _check_bound(G: Graph, key: str, max_n: int | None) -> None:
    limit = BOUNDS[key] if max_n is None else max_n
    if G.n > limit:
        raise SizeBoundError(f"{key}: n={G.n} exceeds the bound {limit}")


def _require_simple(G: Graph, what: str) -> None:
    if G.loops:
        raise LoopedGraphError(f"{what} needs a simple graph; loops on {sorted(G.loops)}")


def _sorted_sets(masks) -> list[frozenset[int]]:
    return [
        mask_to_set(m)
        for m in sorted(masks, key=lambda m: (m.bit_count(), list(iter_bits(m))))
    ]


# -- 1. brute force --------------------------------------------------------


def id_brute_force(G: Graph, max_n: int | None = None) -> Polynomial:
    """Count loop-free independent dominating sets of every size.

    This is the reference oracle for everything else in the package.
    """
    _check_bound(G, "brute", max_n)
    return Polynomial(_kernels.ids_histogram(G.adj, G.loop_mask, G.n))


def enumerate_mids(G: Graph, max_n: int | None = None) -> list[frozenset[int]]:
    """All independent dominating sets, by size and then lexicographically."""
    _check_bound(G, "enumerate", max_n)
    return _sorted_sets(_kernels.ids_masks_py(G.adj, G.loop_mask, G.n))


# -- 2. recursion ----------------------------------------------------------


class RecursiveEngine:
    """id(G) = id(G-v) - id(G∘v) + x id(G-N[v]) on (alive, loops) bitmask states.

    Every state is an induced subgraph of the input with extra loops, so a
    state is fully described by two bitmasks over the input's vertices.
    """

    def __init__(self, G: Graph):
        self.graph = G
        self.adj = G.adj
        self.memo: dict[tuple[int, int], Polynomial] = {}
        self.pivots = 0

    def run(self) -> Polynomial:
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * self.graph.n + 1000))
        try:
            return self._id(self.graph.full_mask, self.graph.loop_mask)
        finally:
            sys.setrecursionlimit(limit)

    def _id(self, alive: int, loops: int) -> Polynomial:
        if not alive:
            return ONE
        loops &= alive
        key = (alive, loops)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        comps = component_masks(self.adj, alive)
        if len(comps) > 1:
            # cheap components first so a zero factor short-circuits
            comps.sort(key=lambda c: (c.bit_count(), c))
            result = ONE
            for c in comps:
                factor = self._connected(c, loops & c)
                if factor.is_zero():
                    result = ZERO
                    break
                result = result * factor
        else:
            result = self._connected(alive, loops)
        self.memo[key] = result
        return result

    def _connected(self, alive: int, loops: int) -> Polynomial:
        if alive & (alive - 1) == 0:
            return ZERO if loops else X
        free = alive & ~loops
        if not free:
            return ZERO
        key = (alive, loops)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        adj = self.adj
        v = max(iter_bits(free), key=lambda u: ((adj[u] & alive).bit_count(), -u))
        self.pivots += 1
        bit = 1 << v
        nbrs = adj[v] & alive
        rest = alive & ~bit
        result = (
            self._id(rest, loops)
            - self._id(rest, loops | nbrs)
            + X * self._id(alive & ~(nbrs | bit), loops)
        )
        self.memo[key] = result
        return result


def id_recursive(G: Graph) -> Polynomial:
    return RecursiveEngine(G).run()


def looped_pivot_rule(G: Graph, v: int) -> Polynomial:
    """id(G) for a looped v via id(G-v) - id(G∘v), evaluated recursively."""
    if v not in G.loops:
        raise GraphError(f"vertex {v} carries no loop")
    eng = RecursiveEngine(G)
    alive, loops = G.full_mask, G.loop_mask
    bit = 1 << v
    nbrs = G.adj[v]
    return eng._id(alive & ~bit, loops) - eng._id(alive & ~bit, loops | nbrs)


# -- 3. inclusion-exclusion ----------------------------------------------


def _from_iso_histogram(hist: list[int]) -> Polynomial:
    total = ZERO
    for m, c in enumerate(hist):
        if c:
            total = total + c * one_minus_x_pow(m)
    return total


def id_inclusion_exclusion(G: Graph, max_n: int | None = None) -> Polynomial:
    """sum over W ⊆ V of (-1)^|W| (1-x)^iso(G[W])."""
    _require_simple(G, "inclusion-exclusion")
    _check_bound(G, "inclusion-exclusion", max_n)
    return _from_iso_histogram(_kernels.signed_iso_histogram(G.adj, G.n))


# -- 4. essential sets -------------------------------------------------------


def enumerate_essential_sets(G: Graph, max_n: int | None = None) -> list[frozenset[int]]:
    """Every X ⊆ V containing N(v) for some v outside X."""
    _require_simple(G, "essential sets")
    _check_bound(G, "enumerate", max_n)
    return _sorted_sets(U for U, _ in _kernels.essential_masks_py(G.adj, G.n))


def id_essential_formula(G: Graph, max_n: int | None = None) -> Polynomial:
    """(-1)^n sum over i-essential U of (-1)^|U| ((1-x)^f(U) - 1)."""
    _require_simple(G, "essential formula")
    if G.n == 0:
        raise GraphError("essential-set formula is defined for n >= 1")
    _check_bound(G, "essential", max_n)
    hist = _kernels.signed_essential_histogram(G.adj, G.n)
    total = ZERO
    for f, c in enumerate(hist):
        if c:
            total = total + c * (one_minus_x_pow(f) - ONE)
    return -total if G.n & 1 else total


# -- 5. coefficient formula ------------------------------------------------


def id_coefficient_formula(G: Graph, max_n: int | None = None) -> Polynomial:
    """a_k = sum over W with iso(G[W]) >= k of (-1)^(|W|+k) C(iso(G[W]), k)."""
    _require_simple(G, "coefficient formula")
    _check_bound(G, "coefficient", max_n)
    n = G.n
    nbr_sets = [frozenset(iter_bits(a)) for a in G.adj]
    coeffs = [0] * (n + 1)
    for W in range(1 << n):
        members = {v for v in range(n) if W >> v & 1}
        iso = sum(1 for v in members if not nbr_sets[v] & members)
        parity = len(members)
        for k in range(iso + 1):
            term = comb(iso, k)
            coeffs[k] += -term if (parity + k) & 1 else term
    return Polynomial(coeffs)


# -- independence polynomial ---------------------------------------------


def independence_polynomial(G: Graph) -> Polynomial:
    """ind(G) = ind(G-v) + x ind(G-N[v]), memoized over vertex bitmasks."""
    _require_simple(G, "independence polynomial")
    adj = G.adj
    memo: dict[int, Polynomial] = {}

    def ind(alive: int) -> Polynomial:
        if not alive:
            return ONE
        hit = memo.get(alive)
        if hit is not None:
            return hit
        comps = component_masks(adj, alive)
        if len(comps) > 1:
            result = ONE
            for c in comps:
                result = result * ind(c)
        elif alive & (alive - 1) == 0:
            result = ONE + X
        else:
            v = max(iter_bits(alive), key=lambda u: ((adj[u] & alive).bit_count(), -u))
            result = ind(alive & ~(1 << v)) + X * ind(alive & ~(adj[v] | 1 << v))
        memo[alive] = result
        return result

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * G.n + 1000))
    try:
        return ind(G.full_mask)
    finally:
        sys.setrecursionlimit(limit)


ALGORITHMS = {
    "brute": id_brute_force,
    "recursive": id_recursive,
    "inclusion-exclusion": id_inclusion_exclusion,
    "essential": id_essential_formula,
    "coefficient": id_coefficient_formula,
}

LOOP_SAFE = frozenset({"brute", "recursive"})
