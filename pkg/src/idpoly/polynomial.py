"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence, Union

IntLike = Union[int, "Polynomial"]


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Ascending coefficient tuple; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        self.coeffs: tuple[int, ...] = _trim(cs)

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        if k < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls([0] * k + [c])

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> Polynomial:
        return cls(int(s) for s in items)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lowest_degree(self) -> int | None:
        """Smallest k with a nonzero x^k coefficient, None for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other: IntLike) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial((other,))
        return NotImplemented

    def __add__(self, other: IntLike) -> Polynomial:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntLike) -> Polynomial:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other: IntLike) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: IntLike) -> Polynomial:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, t: int) -> int:
        return evaluate_int(self, t)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return p - q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def pow(p: Polynomial, k: int) -> Polynomial:  # noqa: A001
    return p**k


def substitute_power(p: Polynomial, r: int) -> Polynomial:
    """p(x^r)."""
    if r < 1:
        raise ValueError(f"substitution power must be >= 1, got {r}")
    if r == 1:
        return p
    out = [0] * (r * p.degree + 1) if p.coeffs else []
    for k, c in enumerate(p.coeffs):
        out[r * k] = c
    return Polynomial(out)


def one_minus_x_pow(m: int) -> Polynomial:
    """(1 - x)^m by the binomial theorem."""
    if m < 0:
        raise ValueError("exponent must be >= 0")
    return Polynomial((-1) ** k * comb(m, k) for k in range(m + 1))


def corona_compose(ind_g: Polynomial, id_h: Polynomial, n: int) -> Polynomial:
    """sum_k i_k x^k id_h^(n-k), the polynomial form of id_h^n * ind_g(x / id_h)."""
    if ind_g.degree > n:
        raise ValueError(f"ind_g has degree {ind_g.degree} > n={n}")
    if id_h.is_zero():
        raise ValueError("id_h must be nonzero")
    # powers of id_h from 0 up to n, built once
    powers = [ONE]
    for _ in range(n):
        powers.append(powers[-1] * id_h)
    total = ZERO
    for k, ik in enumerate(ind_g.coeffs):
        if ik:
            total = total + Polynomial.monomial(k, ik) * powers[n - k]
    return total


def evaluate_int(p: Polynomial, t: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc
