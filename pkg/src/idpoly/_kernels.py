"""Exhaustive 2^n subset kernels over adjacency bitmasks.

Each kernel has a pure-Python version (fast for small n, no setup cost) and
a chunked numpy version used above ``NUMPY_THRESHOLD`` vertices.  Subsets are
visited as an increasing binary counter over vertex indices.  All counts are
exact: numpy only ever holds per-chunk tallies below 2**63.
"""

from __future__ import annotations

import numpy as np

NUMPY_THRESHOLD = 14
LOW_BITS = 20  # subsets per numpy chunk = 2**LOW_BITS


def _popcount_table(bits: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << bits, dtype=np.int64)).astype(np.int64)


# -- independent dominating sets ----------------------------------------


def ids_masks_py(adj, loops: int, n: int):
    """Yield every W (as a bitmask) that is independent, loop-free and dominating."""
    size = 1 << n
    full = size - 1
    nb = [0] * size
    indep = bytearray(size)
    indep[0] = 1
    if n == 0:
        yield 0
        return
    for W in range(1, size):
        low = W & -W
        v = low.bit_length() - 1
        rest = W ^ low
        nb[W] = nb[rest] | adj[v]
        if indep[rest] and not adj[v] & rest:
            indep[W] = 1
            if not W & loops and (nb[W] | W) == full:
                yield W


def ids_histogram_py(adj, loops: int, n: int) -> list[int]:
    counts = [0] * (n + 1)
    for W in ids_masks_py(adj, loops, n):
        counts[W.bit_count()] += 1
    return counts


def _low_tables(adj, n: int, low: int):
    """Neighbourhood union and independence flag for every subset of the low vertices."""
    nb = np.zeros(1, dtype=np.int64)
    indep = np.ones(1, dtype=bool)
    for v in range(low):
        idx = np.arange(1 << v, dtype=np.int64)
        nb = np.concatenate([nb, nb | adj[v]])
        indep = np.concatenate([indep, indep & ((idx & adj[v]) == 0)])
    return nb, indep


def ids_histogram_np(adj, loops: int, n: int) -> list[int]:
    low = min(n, LOW_BITS)
    high = n - low
    full = (1 << n) - 1
    low_mask = (1 << low) - 1
    idx = np.arange(1 << low, dtype=np.int64)
    nb_low, indep_low = _low_tables(adj, n, low)
    indep_low &= (idx & (loops & low_mask)) == 0
    cover_low = nb_low | idx
    pop_low = _popcount_table(low)
    counts = [0] * (n + 1)
    # scalar tables over the high vertices
    hsize = 1 << high
    nb_hi = [0] * hsize
    ok_hi = [True] * hsize
    for h in range(1, hsize):
        lowbit = h & -h
        v = low + lowbit.bit_length() - 1
        rest = h ^ lowbit
        nb_hi[h] = nb_hi[rest] | adj[v]
        ok_hi[h] = ok_hi[rest] and not (adj[v] & (rest << low))
    for h in range(hsize):
        H = h << low
        if not ok_hi[h] or H & loops:
            continue
        ok = indep_low & ((nb_low & H) == 0)
        ok &= (cover_low | (nb_hi[h] | H)) == full
        if not ok.any():
            continue
        tally = np.bincount(pop_low[ok], minlength=low + 1)
        hb = h.bit_count()
        for k, c in enumerate(tally.tolist()):
            counts[k + hb] += c
    return counts


def ids_histogram(adj, loops: int, n: int) -> list[int]:
    if n > NUMPY_THRESHOLD:
        return ids_histogram_np(adj, loops, n)
    return ids_histogram_py(adj, loops, n)


# -- isolated-vertex histogram (inclusion-exclusion) -----------------------


def signed_iso_histogram_py(adj, n: int) -> list[int]:
    """c[m] = sum over W with iso(G[W]) = m of (-1)^|W|."""
    hist = [0] * (n + 1)
    for W in range(1 << n):
        iso = 0
        rest = W
        while rest:
            low = rest & -rest
            if not adj[low.bit_length() - 1] & W:
                iso += 1
            rest ^= low
        hist[iso] += -1 if W.bit_count() & 1 else 1
    return hist


def _chunks(n: int):
    step = 1 << min(n, LOW_BITS)
    for start in range(0, 1 << n, step):
        yield np.arange(start, start + step, dtype=np.int64)


def _signed_bincount(values: np.ndarray, odd: np.ndarray, length: int) -> list[int]:
    even_counts = np.bincount(values[~odd], minlength=length)
    odd_counts = np.bincount(values[odd], minlength=length)
    return (even_counts.astype(np.int64) - odd_counts.astype(np.int64)).tolist()


def signed_iso_histogram_np(adj, n: int) -> list[int]:
    hist = [0] * (n + 1)
    for W in _chunks(n):
        iso = np.zeros(W.shape, dtype=np.int64)
        for v in range(n):
            inside = ((W >> v) & 1).astype(bool)
            iso += inside & ((W & adj[v]) == 0)
        odd = (np.bitwise_count(W) & 1).astype(bool)
        for m, c in enumerate(_signed_bincount(iso, odd, n + 1)):
            hist[m] += c
    return hist


def signed_iso_histogram(adj, n: int) -> list[int]:
    if n > NUMPY_THRESHOLD:
        return signed_iso_histogram_np(adj, n)
    return signed_iso_histogram_py(adj, n)


# -- essential sets ------------------------------------------------------


def essential_masks_py(adj, n: int):
    """Yield (U, f(U)) for every U with f(U) = |{v not in U : N(v) ⊆ U}| > 0."""
    verts = [(1 << v, adj[v]) for v in range(n)]
    for U in range(1 << n):
        f = 0
        for bit, a in verts:
            if not bit & U and a & U == a:
                f += 1
        if f:
            yield U, f


def signed_essential_histogram_py(adj, n: int) -> list[int]:
    """c[f] = sum over essential U with f(U) = f of (-1)^|U|."""
    hist = [0] * (n + 1)
    for U, f in essential_masks_py(adj, n):
        hist[f] += -1 if U.bit_count() & 1 else 1
    return hist


def signed_essential_histogram_np(adj, n: int) -> list[int]:
    hist = [0] * (n + 1)
    for U in _chunks(n):
        f = np.zeros(U.shape, dtype=np.int64)
        for v in range(n):
            outside = ((U >> v) & 1) == 0
            f += outside & ((U & adj[v]) == adj[v])
        keep = f > 0
        odd = (np.bitwise_count(U[keep]) & 1).astype(bool)
        for k, c in enumerate(_signed_bincount(f[keep], odd, n + 1)):
            hist[k] += c
    return hist


def signed_essential_histogram(adj, n: int) -> list[int]:
    if n > NUMPY_THRESHOLD:
        return signed_essential_histogram_np(adj, n)
    return signed_essential_histogram_py(adj, n)
