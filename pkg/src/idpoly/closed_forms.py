"""Closed forms and recurrences for graph families, and the product theorems."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import GraphError
from .families import FamilySpec
from .polynomial import ONE, X, Polynomial, corona_compose, substitute_power

# id(C_n) for 3 <= n <= 6, obtained from id_brute_force on cycle_graph(n);
# tests/test_closed_forms.py regenerates them.
CYCLE_BASES = {
    3: Polynomial([0, 3]),
    4: Polynomial([0, 0, 2]),
    5: Polynomial([0, 0, 5]),
    6: Polynomial([0, 0, 3, 2]),
}


def binom(a: int, b: int) -> int:
    """C(a, b), zero whenever b < 0 or b > a (a >= 0)."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def path_closed_form(n: int) -> Polynomial:
    if n < 1:
        raise GraphError("path needs n >= 1")
    coeffs = [0] * ((n + 3) // 2 + 1)
    for k in range(1, (n + 3) // 2 + 1):
        coeffs[k] = binom(k + 1, n - 2 * k + 1)
    return Polynomial(coeffs)


def path_recurrence(n: int) -> Polynomial:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return _path_table(n)[n]


@lru_cache(maxsize=8)
def _path_table(n: int) -> tuple[Polynomial, ...]:
    # index 0 is the empty path; it only feeds the cycle recurrence at n = 6
    table = [ONE, X, Polynomial([0, 2]), Polynomial([0, 1, 1])]
    for k in range(4, n + 1):
        table.append(X * table[k - 2] + X * table[k - 3])
    return tuple(table)


def cycle_closed_form(n: int) -> Polynomial:
    """Binomial form; the documented range is n >= 7, smaller n are evaluated as written."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    top = (n - 2) // 2
    coeffs = [0] * (top + 3)
    for k in range(top + 1):
        coeffs[k + 2] = 2 * binom(k + 2, n - 2 * k - 4) + binom(k + 1, n - 2 * k - 5)
    return Polynomial(coeffs)


def cycle_recurrence(n: int) -> Polynomial:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    if n in CYCLE_BASES:
        return CYCLE_BASES[n]
    paths = _path_table(n - 3)
    return 2 * X * paths[n - 3] + X * X * paths[n - 6]


def id_family(spec: FamilySpec, variant: str = "closed-form") -> Polynomial:
    """id of a named family, by its closed form or by its recurrence."""
    if variant not in ("closed-form", "recurrence"):
        raise ValueError(f"unknown variant {variant!r}")
    closed = variant == "closed-form"
    kind, n = spec.kind, spec.n
    if kind == "edgeless":
        return Polynomial.monomial(n)
    if kind == "complete":
        if n < 1:
            raise GraphError("complete graph needs n >= 1")
        return Polynomial([0, n])
    if kind == "complete-bipartite":
        if spec.p < 1 or spec.q < 1:
            raise GraphError("complete bipartite graph needs p, q >= 1")
        return Polynomial.monomial(spec.p) + Polynomial.monomial(spec.q)
    if kind == "star":
        # K_{1,n-1}; K_1 when n = 1
        if n == 1:
            return X
        return X + Polynomial.monomial(n - 1)
    if kind == "path":
        return path_closed_form(n) if closed else path_recurrence(n)
    if kind == "cycle":
        if closed and n < 7:
            raise GraphError("cycle closed form is stated for n >= 7")
        return cycle_closed_form(n) if closed else cycle_recurrence(n)
    raise GraphError(f"no closed form for family {kind!r}")


# -- products --------------------------------------------------------------


def compose_disjoint_union(id_g: Polynomial, id_h: Polynomial) -> Polynomial:
    return id_g * id_h


def compose_join(id_g: Polynomial, id_h: Polynomial) -> Polynomial:
    # id == 1 exactly for the empty graph
    if id_g == ONE or id_h == ONE:
        raise GraphError("join needs two nonempty operands")
    return id_g + id_h


def compose_corona(ind_g: Polynomial, id_h: Polynomial, n: int) -> Polynomial:
    if n < 1:
        raise GraphError("corona needs |V(G)| >= 1")
    if id_h == ONE:
        raise GraphError("corona needs |V(H)| >= 1")
    return corona_compose(ind_g, id_h, n)


def compose_corona_edgeless(ind_g: Polynomial, n: int, r: int) -> Polynomial:
    """id(G ∘ E_r) as sum_k i_k x^(k + r(n-k))."""
    if n < 1 or r < 1:
        raise GraphError("corona with E_r needs n >= 1 and r >= 1")
    if ind_g.degree > n:
        raise GraphError(f"ind(G) has degree {ind_g.degree} > n={n}")
    out = Polynomial()
    for k, ik in enumerate(ind_g.coeffs):
        out = out + Polynomial.monomial(k + r * (n - k), ik)
    return out


def compose_expansion(id_g: Polynomial, r: int) -> Polynomial:
    if r < 1:
        raise GraphError("expansion needs r >= 1")
    return substitute_power(id_g, r)


COMPOSE_KINDS = ("join", "corona", "corona-edgeless", "expansion", "disjoint-union")


def compose(kind: str, *args) -> Polynomial:
    """Dispatch by name.

    ==================  ==========================
    disjoint-union      id(G), id(H)
    join                id(G), id(H)
    corona              ind(G), id(H), |V(G)|
    corona-edgeless     ind(G), |V(G)|, r
    expansion           id(G), r
    ==================  ==========================
    """
    table = {
        "disjoint-union": compose_disjoint_union,
        "join": compose_join,
        "corona": compose_corona,
        "corona-edgeless": compose_corona_edgeless,
        "expansion": compose_expansion,
    }
    if kind not in table:
        raise ValueError(f"unknown composition {kind!r}")
    return table[kind](*args)
