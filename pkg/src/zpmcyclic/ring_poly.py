"""Exact scalar and polynomial arithmetic over Z_{p^m}.

Polynomials are dense, immutable and always kept in normal form: every
coefficient lies in [0, p^m) and the highest stored coefficient is nonzero.
The zero polynomial has an empty coefficient tuple and degree ``-inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MixedRings, NonUnitLeadingCoefficient, NotAUnit, NotPrime, ZpmError

#: degree of the zero polynomial; compares below every integer
NEG_INF = -math.inf


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    d = 3
    while d * d <= k:
        if k % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RingParams:
    """The ring Z_{p^m}; ``q`` is the modulus p^m."""

    p: int
    m: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise NotPrime(f"p must be prime, got {self.p}")
        if not isinstance(self.m, int) or self.m < 1:
            raise ZpmError(f"m must be a positive integer, got {self.m}")

    @property
    def q(self) -> int:
        return self.p**self.m

    def residue(self) -> RingParams:
        return RingParams(self.p, 1)

    def is_unit(self, a: int) -> bool:
        return a % self.p != 0

    def valuation(self, a: int) -> int:
        """p-adic valuation of ``a`` inside Z_{p^m}; returns m for zero."""
        a %= self.q
        if a == 0:
            return self.m
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v


def scalar_inverse(a: int, ring: RingParams) -> int:
    """Inverse of ``a`` modulo p^m; raises NotAUnit when p divides a."""
    if not ring.is_unit(a):
        raise NotAUnit(f"{a} is not a unit modulo {ring.q}")
    return pow(a, -1, ring.q)


@dataclass(frozen=True)
class Poly:
    """Polynomial over Z_{p^m} with ascending coefficients."""

    coeffs: tuple[int, ...]
    ring: RingParams

    def __post_init__(self):
        q = self.ring.q
        c = [int(x) % q for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def zero(cls, ring: RingParams) -> Poly:
        return cls((), ring)

    @classmethod
    def constant(cls, a: int, ring: RingParams) -> Poly:
        return cls((a,), ring)

    @classmethod
    def monomial(cls, k: int, ring: RingParams, coeff: int = 1) -> Poly:
        return cls((0,) * k + (coeff,), ring)

    @classmethod
    def x_n_minus_1(cls, n: int, ring: RingParams) -> Poly:
        return cls((-1,) + (0,) * (n - 1) + (1,), ring)

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: Poly) -> Poly:
        return poly_add(self, other)

    def __sub__(self, other: Poly) -> Poly:
        return poly_sub(self, other)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs), self.ring)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly(tuple(c * other for c in self.coeffs), self.ring)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        result = Poly.constant(1, self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.ring.q
        return acc

    def __str__(self) -> str:
        return to_text(self)

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def _check_same(f: Poly, g: Poly) -> None:
    if f.ring != g.ring:
        raise MixedRings(f"Z_{f.ring.q} vs Z_{g.ring.q}")


def poly_add(f: Poly, g: Poly) -> Poly:
    _check_same(f, g)
    k = max(len(f.coeffs), len(g.coeffs))
    return Poly(tuple(f[i] + g[i] for i in range(k)), f.ring)


def poly_sub(f: Poly, g: Poly) -> Poly:
    _check_same(f, g)
    k = max(len(f.coeffs), len(g.coeffs))
    return Poly(tuple(f[i] - g[i] for i in range(k)), f.ring)


def poly_mul(f: Poly, g: Poly) -> Poly:
    """Schoolbook product with a single reduction per output coefficient."""
    _check_same(f, g)
    if f.is_zero() or g.is_zero():
        return Poly.zero(f.ring)
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                out[i + j] += a * b
    return Poly(tuple(out), f.ring)


def poly_prod(polys: Iterable[Poly], ring: RingParams) -> Poly:
    out = Poly.constant(1, ring)
    for f in polys:
        out = out * f
    return out


def poly_divmod(f: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Long division by a divisor whose leading coefficient is a unit."""
    _check_same(f, d)
    ring = f.ring
    if d.is_zero() or not ring.is_unit(d.lead):
        raise NonUnitLeadingCoefficient(f"leading coefficient of {to_text(d)} is not a unit")
    q = ring.q
    inv = pow(d.lead, -1, q)
    r = list(f.coeffs)
    dd = len(d.coeffs) - 1
    if len(r) - 1 < dd:
        return Poly.zero(ring), f
    quo = [0] * (len(r) - dd)
    for k in range(len(r) - 1, dd - 1, -1):
        c = r[k] * inv % q
        if c:
            quo[k - dd] = c
            for j, b in enumerate(d.coeffs):
                r[k - dd + j] = (r[k - dd + j] - c * b) % q
    return Poly(tuple(quo), ring), Poly(tuple(r[:dd]), ring)


def quotient_reduce(f: Poly, n: int) -> Poly:
    """Canonical representative of ``f`` modulo x^n - 1 (degree < n)."""
    if n < 1:
        raise ZpmError("n must be positive")
    out = [0] * n
    for k, c in enumerate(f.coeffs):
        out[k % n] += c
    return Poly(tuple(out), f.ring)


def quotient_mul(f: Poly, g: Poly, n: int) -> Poly:
    return quotient_reduce(poly_mul(quotient_reduce(f, n), quotient_reduce(g, n)), n)


def reverse(f: Poly) -> Poly:
    """Plain coefficient reversal x^{deg f} f(1/x), without normalization."""
    return Poly(tuple(reversed(f.coeffs)), f.ring)


def reciprocal(f: Poly) -> Poly:
    """f*(x) = f(0)^{-1} x^{deg f} f(1/x)."""
    if f.is_zero():
        raise NotAUnit("zero polynomial has no reciprocal")
    inv = scalar_inverse(f.coeffs[0], f.ring)
    return reverse(f) * inv


def change_ring(f: Poly, ring: RingParams) -> Poly:
    """Reinterpret the integer coefficients of ``f`` in another Z_{p^k}."""
    if ring.p != f.ring.p:
        raise MixedRings("rings must share the prime p")
    return Poly(f.coeffs, ring)


def reduce_mod_p(f: Poly) -> Poly:
    return change_ring(f, f.ring.residue())


def make_monic(f: Poly) -> Poly:
    return f * scalar_inverse(f.lead, f.ring)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; only meaningful over a field (m = 1)."""
    _check_same(f, g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else make_monic(a)


def poly_xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (d, s, t) with s f + t g = d, d monic. Requires m = 1."""
    _check_same(f, g)
    if f.ring.m != 1:
        raise ZpmError("extended gcd requires a field")
    ring = f.ring
    r0, r1 = f, g
    s0, s1 = Poly.constant(1, ring), Poly.zero(ring)
    t0, t1 = Poly.zero(ring), Poly.constant(1, ring)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = scalar_inverse(r0.lead, ring)
    return r0 * inv, s0 * inv, t0 * inv


def powmod(base: Poly, e: int, modulus: Poly) -> Poly:
    result = Poly.constant(1, base.ring) % modulus
    b = base % modulus
    while e:
        if e & 1:
            result = (result * b) % modulus
        b = (b * b) % modulus
        e >>= 1
    return result


def to_text(f: Poly) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        coef = "" if c == 1 else str(c)
        terms.append(f"{coef}x" if k == 1 else f"{coef}x^{k}")
    return "+".join(terms)


def from_json(coeffs: Sequence[int], ring: RingParams) -> Poly:
    return Poly(tuple(coeffs), ring)


def parse_poly(text: str, ring: RingParams) -> Poly:
    """Inverse of :func:`to_text` (accepts only its output shape plus '-' signs)."""
    s = text.replace(" ", "").replace("-", "+-")
    coeffs: dict[int, int] = {}
    for term in filter(None, s.split("+")):
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("-")
        if "x" in term:
            head, _, tail = term.partition("x")
            c = int(head) if head else 1
            k = int(tail[1:]) if tail else 1
        else:
            c, k = int(term), 0
        coeffs[k] = coeffs.get(k, 0) + sign * c
    top = max(coeffs, default=-1)
    return Poly(tuple(coeffs.get(k, 0) for k in range(top + 1)), ring)
